//! Sublattices of `O_f = Z ⊕ Zω` in Hermite normal form and the ideal and
//! multiplier-ring tests on them.

use super::OrderSpec;
use crate::exactnum::factorize;
use crate::par::{map_ordered, Exec};

use super::DirichletCoeffs;

/// The lattice `Z·a ⊕ Z·(b + c·ω)` with `a, c > 0` and `0 <= b < a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IdealHNF {
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

impl IdealHNF {
    pub fn new(a: i64, b: i64, c: i64) -> Option<Self> {
        (a > 0 && c > 0 && (0..a).contains(&b)).then_some(Self { a, b, c })
    }

    /// Index in `O_f`, which is the norm when the lattice is an ideal.
    pub fn index(&self) -> i64 {
        self.a * self.c
    }

    /// Whether `x + y·ω` lies in the lattice.
    pub fn contains(&self, x: i128, y: i128) -> bool {
        let (a, b, c) = (i128::from(self.a), i128::from(self.b), i128::from(self.c));
        if y % c != 0 {
            return false;
        }
        (x - (y / c) * b) % a == 0
    }

    /// The two basis vectors as `(x, y)` coordinates.
    fn basis(&self) -> [(i128, i128); 2] {
        [
            (i128::from(self.a), 0),
            (i128::from(self.b), i128::from(self.c)),
        ]
    }
}

/// `ω·(x + yω)` in coordinates, using `ω² = s·ω - m`.
fn times_omega(spec: &OrderSpec, (x, y): (i128, i128)) -> (i128, i128) {
    let (s, m) = spec.omega_trace_norm();
    (-y * m, x + y * s)
}

/// Closed under multiplication by `ω`.
pub fn is_ideal(lattice: &IdealHNF, spec: &OrderSpec) -> bool {
    lattice.basis().into_iter().all(|v| {
        let (x, y) = times_omega(spec, v);
        lattice.contains(x, y)
    })
}

fn closed_under(lattice: &IdealHNF, spec: &OrderSpec, f_prime: u64) -> bool {
    // f'·ω_K = (f'/f)·ω
    let (num, den) = (i128::from(f_prime), i128::from(spec.f()));
    lattice.basis().into_iter().all(|v| {
        let (x, y) = times_omega(spec, v);
        let (x, y) = (x * num, y * num);
        x % den == 0 && y % den == 0 && lattice.contains(x / den, y / den)
    })
}

fn divisors(f: u64) -> Vec<u64> {
    let mut out = vec![1u64];
    for (p, e) in factorize(f) {
        let prev = out.clone();
        let mut pk = 1;
        for _ in 0..e {
            pk *= p;
            out.extend(prev.iter().map(|d| d * pk));
        }
    }
    out.sort_unstable();
    out
}

/// Conductor `f'` of the multiplier ring `O_{f'}` of an ideal; the ideal is
/// proper iff `f' = f`.
pub fn multiplier_conductor(lattice: &IdealHNF, spec: &OrderSpec) -> u64 {
    divisors(spec.f())
        .into_iter()
        .find(|&d| closed_under(lattice, spec, d))
        .unwrap_or(spec.f())
}

/// Every HNF lattice of index `k`.
pub fn lattices_of_index(k: i64) -> impl Iterator<Item = IdealHNF> {
    (1..=k)
        .filter(move |a| k % a == 0)
        .flat_map(move |a| (0..a).map(move |b| IdealHNF { a, b, c: k / a }))
}

/// Counts ideals (all, or proper only) of each norm `1..=limit` by brute
/// force over HNF lattices.
pub fn enumerate_ideals(
    spec: &OrderSpec,
    limit: usize,
    proper_only: bool,
    exec: Exec,
) -> DirichletCoeffs {
    let norms: Vec<i64> = (1..=limit as i64).collect();
    let counts = map_ordered(exec, &norms, |&k| {
        lattices_of_index(k)
            .filter(|l| is_ideal(l, spec))
            .filter(|l| !proper_only || multiplier_conductor(l, spec) == spec.f())
            .count() as i64
    });
    DirichletCoeffs::from_vec(counts)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(d: i64, f: u64) -> OrderSpec {
        OrderSpec::new(d, f).unwrap()
    }

    #[test]
    fn hnf_validation() {
        assert!(IdealHNF::new(3, 2, 1).is_some());
        assert!(IdealHNF::new(3, 3, 1).is_none());
        assert!(IdealHNF::new(0, 0, 1).is_none());
        assert_eq!(lattices_of_index(4).count(), 1 + 2 + 4);
    }

    #[test]
    fn full_order_is_ideal() {
        let full = IdealHNF::new(1, 0, 1).unwrap();
        for s in [spec(-4, 2), spec(5, 6), spec(-3, 12)] {
            assert!(is_ideal(&full, &s));
            assert_eq!(multiplier_conductor(&full, &s), s.f());
        }
    }

    #[test]
    fn conductor_lattice() {
        // Z·2 + Z·ω in O_2 of Q(i): ω = -4 + 2i, ω² = -8ω - 20
        let s = spec(-4, 2);
        assert_eq!(s.omega_trace_norm(), (-8, 20));
        let l = IdealHNF::new(2, 0, 1).unwrap();
        assert!(is_ideal(&l, &s));
        // its multiplier ring is O_K: it equals 2·O_K
        assert_eq!(multiplier_conductor(&l, &s), 1);
    }

    #[test]
    fn f_times_maximal_order() {
        // f·O_K = Z·f + Z·f·ω_K = Z·f + Z·ω
        for s in [spec(-4, 3), spec(5, 2), spec(8, 3), spec(-7, 5)] {
            let l = IdealHNF::new(s.f() as i64, 0, 1).unwrap();
            assert!(is_ideal(&l, &s));
            assert_eq!(multiplier_conductor(&l, &s), 1);
        }
    }

    #[test]
    fn membership_decides_small_lattice() {
        // (2, 1, 1) in O_2 of Q(i): ω·2 ∈ L, but ω(1 + ω) = -20 - 7ω is not
        let s = spec(-4, 2);
        let l = IdealHNF::new(2, 1, 1).unwrap();
        let want = l.contains(0, 2) && l.contains(-20, -7);
        assert_eq!(is_ideal(&l, &s), want);
        assert!(!want);
    }

    #[test]
    fn maximal_order_counts_match_divisor_sums() {
        let s = spec(-4, 1);
        let all = enumerate_ideals(&s, 5, false, Exec::Sequential);
        let proper = enumerate_ideals(&s, 5, true, Exec::Sequential);
        assert_eq!(all.as_slice(), &[1, 1, 0, 1, 2]);
        assert_eq!(all, proper);
    }

    #[test]
    fn divisor_list() {
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(1), vec![1]);
    }
}

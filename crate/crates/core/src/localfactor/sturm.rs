//! Exact Sturm counting and root isolation for `Q_n` on `(-1, 1)`.

use num_bigint::{BigInt, Sign};
use num_traits::{One, Signed};

use super::chebyshev::chain_seed;
use super::{FactorKind, LocalFactorError, LocalFactorParams};
use crate::exactnum::{rat, QuadExt, Rational};
use crate::polyalg::Poly;

/// Exact certificate that `Q_n` has `n` simple roots in `(-1, 1)`.
#[derive(Debug, Clone, PartialEq)]
pub struct SturmCertificate {
    pub params: LocalFactorParams,
    pub kind: FactorKind,
    pub variations_at_minus1: usize,
    pub variations_at_plus1: usize,
    pub root_count: i64,
    /// Disjoint open intervals, one root each, ascending.
    pub isolating_intervals: Vec<(Rational, Rational)>,
}

impl SturmCertificate {
    /// Checks the certificate's own invariants (not the mathematics).
    pub fn is_consistent(&self) -> bool {
        let n = i64::from(self.params.n());
        let counts = self.variations_at_minus1 as i64 - self.variations_at_plus1 as i64
            == self.root_count
            && self.root_count == n
            && self.isolating_intervals.len() as i64 == n;
        let inside = self
            .isolating_intervals
            .iter()
            .all(|(a, b)| a < b && *a >= rat(-1) && *b <= rat(1));
        let disjoint = self
            .isolating_intervals
            .windows(2)
            .all(|w| w[0].1 <= w[1].0);
        counts && inside && disjoint
    }

    pub fn max_width(&self) -> Option<Rational> {
        self.isolating_intervals.iter().map(|(a, b)| b - a).max()
    }
}

fn count_variations(signs: impl IntoIterator<Item = i8>) -> usize {
    let mut last = 0i8;
    let mut changes = 0;
    for s in signs.into_iter().filter(|&s| s != 0) {
        if last != 0 && s != last {
            changes += 1;
        }
        last = s;
    }
    changes
}

/// Sign changes of the chain evaluated at `x`, zeros dropped.
pub fn sturm_variations(chain: &[Poly<QuadExt>], x: &Rational) -> usize {
    count_variations(chain.iter().map(|q| {
        let Some(c) = q.coeffs().first() else {
            return 0;
        };
        q.eval(&c.lift(x.clone())).sign()
    }))
}

/// `a + b√p` with integer parts.
#[derive(Clone)]
struct ZSqrt {
    a: BigInt,
    b: BigInt,
}

impl ZSqrt {
    fn from_quad(q: &QuadExt) -> Self {
        assert!(
            q.a().is_integer() && q.b().is_integer(),
            "chain seeds have integer coordinates"
        );
        Self {
            a: q.a().to_integer(),
            b: q.b().to_integer(),
        }
    }

    /// `self·s - other·t` for integers `s`, `t`.
    fn lin(&self, s: &BigInt, other: &ZSqrt, t: &BigInt) -> Self {
        Self {
            a: &self.a * s - &other.a * t,
            b: &self.b * s - &other.b * t,
        }
    }

    fn sign(&self, p: &BigInt) -> i8 {
        let sa = sign_of(&self.a);
        let sb = sign_of(&self.b);
        if sa == 0 || sb == 0 || sa == sb {
            return if sa != 0 { sa } else { sb };
        }
        // opposite signs: compare a² with p·b²
        match (&self.a * &self.a).cmp(&(&self.b * &self.b * p)) {
            std::cmp::Ordering::Greater => sa,
            std::cmp::Ordering::Less => sb,
            std::cmp::Ordering::Equal => 0,
        }
    }
}

fn sign_of(x: &BigInt) -> i8 {
    match x.sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

/// Signs of the whole chain at a rational point via the three-term
/// recurrence, in integers of Z[√p].
///
/// With `x = a/d`, `R_k = d^k·Q_k(x)` satisfies
/// `R_k = 2a·R_{k-1} - d²·R_{k-2}`, so no rational reduction is needed and
/// `sign R_k = sign Q_k(x)`.
struct ChainSigns {
    q0: ZSqrt,
    q1: [ZSqrt; 2],
    p: BigInt,
    n: u32,
}

impl ChainSigns {
    fn new(params: &LocalFactorParams, kind: FactorKind) -> Self {
        let (q0, q1) = chain_seed(kind, params.p(), params.chi());
        Self {
            q0: ZSqrt::from_quad(&q0),
            q1: [ZSqrt::from_quad(&q1[0]), ZSqrt::from_quad(&q1[1])],
            p: BigInt::from(params.p()),
            n: params.n(),
        }
    }

    /// Signs of `[Q_0, ..., Q_n]` at `x`.
    fn signs(&self, x: &Rational) -> Vec<i8> {
        let a = x.numer();
        let d = x.denom();
        let two_a = a << 1u32;
        let d2 = d * d;
        let mut out = Vec::with_capacity(self.n as usize + 1);
        let mut prev = self.q0.clone();
        // R_1 = d·c_0 + a·c_1
        let mut cur = self.q1[0].lin(d, &self.q1[1], &-a);
        out.push(prev.sign(&self.p));
        out.push(cur.sign(&self.p));
        for _ in 2..=self.n {
            let next = cur.lin(&two_a, &prev, &d2);
            prev = std::mem::replace(&mut cur, next);
            out.push(cur.sign(&self.p));
        }
        out
    }

    /// `(V(x), sign Q_n(x))`.
    fn variations(&self, x: &Rational) -> (usize, i8) {
        let s = self.signs(x);
        let top = *s.last().expect("chain has at least two elements");
        (count_variations(s), top)
    }
}

/// Number of roots of `Q_n` in `(a, b)`, as `V(a) - V(b)`.
pub fn count_roots_in(
    params: &LocalFactorParams,
    kind: FactorKind,
    a: &Rational,
    b: &Rational,
) -> Result<i64, LocalFactorError> {
    if a >= b {
        return Err(LocalFactorError::EmptyInterval {
            a: Box::new(a.clone()),
            b: Box::new(b.clone()),
        });
    }
    let signs = ChainSigns::new(params, kind);
    let (va, sa) = signs.variations(a);
    let (vb, sb) = signs.variations(b);
    if sa == 0 {
        return Err(LocalFactorError::EndpointRoot {
            endpoint: Box::new(a.clone()),
        });
    }
    if sb == 0 {
        return Err(LocalFactorError::EndpointRoot {
            endpoint: Box::new(b.clone()),
        });
    }
    Ok(va as i64 - vb as i64)
}

/// Bisects `(-1, 1)` until every root of `Q_n` sits alone in an interval
/// of width at most `width`.
pub fn isolate_roots(
    params: &LocalFactorParams,
    kind: FactorKind,
    width: &Rational,
) -> Result<SturmCertificate, LocalFactorError> {
    if !width.is_positive() {
        return Err(LocalFactorError::NonPositiveWidth);
    }
    let signs = ChainSigns::new(params, kind);
    let lo = rat(-1);
    let hi = rat(1);
    let (v_lo, s_lo) = signs.variations(&lo);
    let (v_hi, s_hi) = signs.variations(&hi);
    if s_lo == 0 {
        return Err(LocalFactorError::EndpointRoot {
            endpoint: Box::new(lo),
        });
    }
    if s_hi == 0 {
        return Err(LocalFactorError::EndpointRoot {
            endpoint: Box::new(hi),
        });
    }
    let root_count = v_lo as i64 - v_hi as i64;

    let mut intervals = Vec::new();
    // (a, b, V(a), V(b)); endpoints are never roots
    let mut stack = vec![(lo, hi, v_lo, v_hi)];
    while let Some((a, b, va, vb)) = stack.pop() {
        let count = va as i64 - vb as i64;
        if count <= 0 {
            continue;
        }
        let len = &b - &a;
        if count == 1 && &len <= width {
            intervals.push((a, b));
            continue;
        }
        let mut m = (&a + &b) / rat(2);
        let (mut vm, mut sm) = signs.variations(&m);
        if sm == 0 {
            // Midpoint hit a root: nudge by a quarter width, alternating
            // sides and halving until the point is off every root.
            let mut step = width.clone().min(len.clone()) / rat(4);
            let centre = m.clone();
            let mut side = Rational::one();
            loop {
                m = &centre + &step * &side;
                (vm, sm) = signs.variations(&m);
                if sm != 0 {
                    break;
                }
                if side.is_negative() {
                    step /= rat(2);
                }
                side = -side;
            }
        }
        // Right half first so intervals pop in ascending order.
        stack.push((m.clone(), b, vm, vb));
        stack.push((a, m, va, vm));
    }
    intervals.sort();

    Ok(SturmCertificate {
        params: *params,
        kind,
        variations_at_minus1: v_lo,
        variations_at_plus1: v_hi,
        root_count,
        isolating_intervals: intervals,
    })
}

/// `2^{-bits}` as an exact rational.
pub(crate) fn dyadic_width(bits: u32) -> Rational {
    Rational::new(BigInt::one(), BigInt::one() << bits)
}

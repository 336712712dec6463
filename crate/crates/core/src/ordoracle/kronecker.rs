use num_integer::Integer;

use super::OracleError;

fn is_squarefree(mut m: u64) -> bool {
    let mut d = 2u64;
    while d * d <= m {
        if m.is_multiple_of(d * d) {
            return false;
        }
        if m.is_multiple_of(d) {
            m /= d;
        }
        d += 1;
    }
    true
}

/// Discriminant of the ring of integers of some quadratic field.
pub fn is_fundamental(d: i64) -> bool {
    if d == 0 || d == 1 {
        return false;
    }
    match d.rem_euclid(4) {
        1 => is_squarefree(d.unsigned_abs()),
        0 => {
            let m = d / 4;
            matches!(m.rem_euclid(4), 2 | 3) && is_squarefree(m.unsigned_abs())
        }
        _ => false,
    }
}

/// Jacobi symbol `(a/m)` for odd positive `m`.
fn jacobi(a: i64, m: u64) -> i8 {
    debug_assert!(m % 2 == 1);
    let mut a = a.rem_euclid(m as i64) as u64;
    let mut m = m;
    let mut acc = 1i8;
    while a != 0 {
        while a.is_multiple_of(2) {
            a /= 2;
            if matches!(m % 8, 3 | 5) {
                acc = -acc;
            }
        }
        std::mem::swap(&mut a, &mut m);
        if a % 4 == 3 && m % 4 == 3 {
            acc = -acc;
        }
        a %= m;
    }
    if m == 1 {
        acc
    } else {
        0
    }
}

/// Kronecker symbol `(d/m)` for `m >= 1`, without validating `d`.
pub(crate) fn kronecker(d: i64, m: u64) -> i8 {
    assert!(m >= 1, "Kronecker symbol needs m >= 1");
    let twos = m.trailing_zeros();
    let odd = m >> twos;
    let two_part = if twos == 0 {
        1
    } else if d % 2 == 0 {
        0
    } else {
        let s = if matches!(d.rem_euclid(8), 1 | 7) {
            1
        } else {
            -1
        };
        if twos.is_multiple_of(2) {
            1
        } else {
            s
        }
    };
    two_part * jacobi(d, odd)
}

/// The quadratic character of discriminant `d_k`, evaluated at `m >= 1`.
pub fn kronecker_chi(d_k: i64, m: u64) -> Result<i8, OracleError> {
    if !is_fundamental(d_k) {
        return Err(OracleError::InvalidDiscriminant(d_k));
    }
    Ok(kronecker(d_k, m))
}

/// Splits an order discriminant `D = f²·d_K` into `(d_K, f)`.
pub fn fundamental_decomposition(disc: i64) -> Result<(i64, u64), OracleError> {
    if disc == 0 || !matches!(disc.rem_euclid(4), 0 | 1) {
        return Err(OracleError::NotADiscriminant(disc));
    }
    let abs = disc.unsigned_abs();
    let mut f = 1u64;
    while f * f <= abs {
        let f2 = (f * f) as i64;
        if disc % f2 == 0 && is_fundamental(disc / f2) {
            return Ok((disc / f2, f));
        }
        f += 1;
    }
    Err(OracleError::NotADiscriminant(disc))
}

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fundamental_discriminants() {
        let neg: Vec<i64> = (-30..0).filter(|&d| is_fundamental(d)).collect();
        assert_eq!(neg, vec![-24, -23, -20, -19, -15, -11, -8, -7, -4, -3]);
        let pos: Vec<i64> = (0..30).filter(|&d| is_fundamental(d)).collect();
        assert_eq!(pos, vec![5, 8, 12, 13, 17, 21, 24, 28, 29]);
    }

    #[test]
    fn chi_examples() {
        assert_eq!(kronecker_chi(-4, 2).unwrap(), 0);
        assert_eq!(kronecker_chi(5, 2).unwrap(), -1);
        assert_eq!(kronecker_chi(-4, 5).unwrap(), 1);
        assert_eq!(kronecker_chi(-4, 3).unwrap(), -1);
        assert_eq!(kronecker_chi(8, 7).unwrap(), 1);
        assert_eq!(kronecker_chi(-3, 1).unwrap(), 1);
        assert_eq!(
            kronecker_chi(6, 5),
            Err(OracleError::InvalidDiscriminant(6))
        );
    }

    /// Legendre symbol by Euler's criterion, for odd primes.
    fn legendre(a: i64, p: u64) -> i8 {
        let a = a.rem_euclid(p as i64) as u64;
        if a == 0 {
            return 0;
        }
        let mut r = 1u64;
        let mut b = a;
        let mut e = (p - 1) / 2;
        while e > 0 {
            if e & 1 == 1 {
                r = r * b % p;
            }
            b = b * b % p;
            e >>= 1;
        }
        if r == 1 {
            1
        } else {
            -1
        }
    }

    #[test]
    fn agrees_with_euler_criterion_and_is_multiplicative() {
        for d in (-60..60).filter(|&d| is_fundamental(d)) {
            for p in [3u64, 5, 7, 11, 13, 17, 19, 23] {
                assert_eq!(kronecker(d, p), legendre(d, p), "d={d} p={p}");
            }
            for m in 1..40u64 {
                for k in 1..40u64 {
                    assert_eq!(kronecker(d, m * k), kronecker(d, m) * kronecker(d, k));
                }
                assert_eq!(kronecker(d, m) == 0, gcd(m, d.unsigned_abs()) > 1);
            }
        }
    }

    #[test]
    fn decomposition() {
        assert_eq!(fundamental_decomposition(-16).unwrap(), (-4, 2));
        assert_eq!(fundamental_decomposition(45).unwrap(), (5, 3));
        assert_eq!(fundamental_decomposition(5).unwrap(), (5, 1));
        assert_eq!(fundamental_decomposition(-3 * 144).unwrap(), (-3, 12));
        assert_eq!(
            fundamental_decomposition(6),
            Err(OracleError::NotADiscriminant(6))
        );
        assert_eq!(
            fundamental_decomposition(9),
            Err(OracleError::NotADiscriminant(9))
        );
        assert_eq!(
            fundamental_decomposition(0),
            Err(OracleError::NotADiscriminant(0))
        );
    }
}

//! Truncated generating-function identity
//! `(1 - X)(1 - pu²X)·(1 + Σ_{n≥1} P_n(u) X^n) = (1 - uX)(1 - χuX)`.

use super::{local_factor_poly, validate_chi, LocalFactorError, LocalFactorParams};
use crate::exactnum::{is_prime, rat, Rational};
use crate::polyalg::Poly;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenfunReport {
    pub pass: bool,
    pub terms: u32,
    /// Lowest power of `X` whose coefficient disagrees.
    pub first_failing_degree: Option<u32>,
}

/// Compares the two sides coefficient by coefficient in `X` up to `X^{n_max}`,
/// each coefficient an exact polynomial in `u`.
pub fn genfun_check(p: u64, chi: i64, n_max: u32) -> Result<GenfunReport, LocalFactorError> {
    if !is_prime(p) {
        return Err(LocalFactorError::NotPrime(p));
    }
    let chi = validate_chi(chi)?;
    if n_max < 1 {
        return Err(LocalFactorError::NoTerms);
    }

    // series[k] = coefficient of X^k on the left-hand series; X^0 is 1.
    let mut series: Vec<Poly<Rational>> = vec![Poly::from_ints(&[1])];
    for n in 1..=n_max {
        series.push(local_factor_poly(&LocalFactorParams::new(
            p,
            n,
            chi.into(),
        )?)?);
    }

    // (1 - X)(1 - pu²X) = 1 - (1 + pu²)X + pu²X²
    let one_plus_pu2 = Poly::new(vec![rat(1), rat(0), rat(p as i64)]);
    let pu2 = Poly::monomial(rat(p as i64), 2);
    let chi_r = rat(chi.into());
    let rhs = |k: u32| match k {
        0 => Poly::from_ints(&[1]),
        1 => Poly::monomial(-(rat(1) + chi_r.clone()), 1),
        2 => Poly::monomial(chi_r.clone(), 2),
        _ => Poly::zero(),
    };

    let first_failing_degree = (0..=n_max).find(|&k| {
        let k_us = k as usize;
        let mut lhs = series[k_us].clone();
        if k >= 1 {
            lhs = lhs.sub(&series[k_us - 1].mul(&one_plus_pu2));
        }
        if k >= 2 {
            lhs = lhs.add(&series[k_us - 2].mul(&pu2));
        }
        lhs != rhs(k)
    });
    Ok(GenfunReport {
        pass: first_failing_degree.is_none(),
        terms: n_max,
        first_failing_degree,
    })
}

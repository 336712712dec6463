//! Numeric zeros in the `s`-plane and the Chebyshev bridge identity.

use std::f64::consts::PI;

use num_complex::Complex64;

use super::{
    count_roots_in, factor_poly, reduced_poly, FactorKind, LocalFactorError, LocalFactorParams,
};
use crate::exactnum::rat;
use crate::polyalg::{complex_roots_f64, eval_complex, DEFAULT_ROOT_TOL};

/// A zero `s = s_re + i·s_im` of the local factor, with `t = s_im·log p`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CriticalZero {
    pub t: f64,
    pub s_re: f64,
    pub s_im: f64,
    /// Exact Sturm certificate reported all `n` roots of `Q_n` in `(-1, 1)`.
    pub certified: bool,
    /// The numeric root `u = p^{-s}`.
    pub u: Complex64,
    /// `| |u|·√p - 1 |`.
    pub modulus_error: f64,
}

impl CriticalZero {
    /// `p^{-s}` recomputed from the reported `s`.
    pub fn u_from_s(&self, p: u64) -> Complex64 {
        let s = Complex64::new(self.s_re, self.s_im);
        (-s * (p as f64).ln()).exp()
    }
}

/// Roots of the factor in the rescaled variable `v = √p·u`, where they lie
/// on the unit circle and the coefficients are all of moderate size.
fn scaled_roots(
    params: &LocalFactorParams,
    kind: FactorKind,
) -> Result<Vec<Complex64>, LocalFactorError> {
    let f = factor_poly(params, kind)?;
    let sqrt_p = (params.p() as f64).sqrt();
    let scaled: Vec<f64> = f
        .to_f64_coeffs()
        .iter()
        .enumerate()
        .map(|(j, c)| c / sqrt_p.powi(j as i32))
        .collect();
    let roots = complex_roots_f64(&scaled, DEFAULT_ROOT_TOL)?;
    Ok(roots.iter().map(|r| r.value() / sqrt_p).collect())
}

/// The `2n` zeros of the factor as points `s`, via `u = p^{-s}` on the
/// principal branch with `Im(s)` in `(-π/log p, π/log p]`.
///
/// Any root with `| |u|·√p - 1 | > tol` is a [`LocalFactorError::ModulusViolation`].
pub fn critical_zeros(
    params: &LocalFactorParams,
    kind: FactorKind,
    tol: f64,
) -> Result<Vec<CriticalZero>, LocalFactorError> {
    let n = i64::from(params.n());
    let certified = count_roots_in(params, kind, &rat(-1), &rat(1))? == n;
    let roots = scaled_roots(params, kind)?;
    let ln_p = (params.p() as f64).ln();
    let sqrt_p = (params.p() as f64).sqrt();

    let worst = roots
        .iter()
        .map(|u| (u.norm() * sqrt_p - 1.0).abs())
        .fold(0.0, f64::max);
    if worst.is_nan() || worst > tol {
        return Err(LocalFactorError::ModulusViolation {
            error: worst,
            certified,
        });
    }

    let mut zeros: Vec<CriticalZero> = roots
        .into_iter()
        .map(|u| {
            let mut t = -u.arg();
            if t <= -PI {
                t += 2.0 * PI;
            }
            let s_re = if certified {
                0.5
            } else {
                -u.norm().ln() / ln_p
            };
            CriticalZero {
                t,
                s_re,
                s_im: t / ln_p,
                certified,
                u,
                modulus_error: (u.norm() * sqrt_p - 1.0).abs(),
            }
        })
        .collect();
    zeros.sort_by(|a, b| a.t.total_cmp(&b.t));
    Ok(zeros)
}

/// Largest `|P(p^{-1/2}e^{-it}) - (e^{-int}/p)·Q(cos t)|` over the samples.
/// Samples with `sin t = 0` are skipped.
pub fn bridge_max_deviation(
    params: &LocalFactorParams,
    kind: FactorKind,
    t_samples: &[f64],
) -> Result<f64, LocalFactorError> {
    let f = factor_poly(params, kind)?.to_f64_coeffs();
    let q = reduced_poly(kind, params.p(), params.chi(), params.n()).to_f64_coeffs();
    let p = params.p() as f64;
    let n = f64::from(params.n());
    Ok(t_samples
        .iter()
        .filter(|t| t.sin().abs() > 1e-12)
        .map(|&t| {
            let u = Complex64::from_polar(p.sqrt().recip(), -t);
            let lhs = eval_complex(&f, u);
            let qx = q.iter().rev().fold(0.0, |acc, c| acc * t.cos() + c);
            let rhs = Complex64::from_polar(1.0 / p, -n * t) * qx;
            (lhs - rhs).norm()
        })
        .fold(0.0, f64::max))
}

/// True iff every sample satisfies the bridge identity within `1e-9`.
pub fn bridge_identity_check(
    params: &LocalFactorParams,
    kind: FactorKind,
    t_samples: &[f64],
) -> Result<bool, LocalFactorError> {
    Ok(bridge_max_deviation(params, kind, t_samples)? <= 1e-9)
}

//! Floating-point complex roots by Aberth–Ehrlich simultaneous iteration.

use num_complex::Complex64;

use super::{Poly, PolyError};
use crate::exactnum::Rational;

pub const DEFAULT_ROOT_TOL: f64 = 1e-10;
const MAX_ITERATIONS: usize = 1000;
// Irrational angle offset for the starting circle.
const START_ANGLE: f64 = 0.4;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexRoot {
    pub re: f64,
    pub im: f64,
    /// `|f(root)|` at the returned point.
    pub residual: f64,
}

impl ComplexRoot {
    pub fn value(&self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }
}

/// Horner evaluation of real coefficients (constant first) at `z`.
pub fn eval_complex(coeffs: &[f64], z: Complex64) -> Complex64 {
    coeffs
        .iter()
        .rev()
        .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
}

/// Value, derivative and the rounding-error bound `Σ|c_k||z|^k`.
fn eval_with_derivative(coeffs: &[f64], z: Complex64) -> (Complex64, Complex64, f64) {
    let mut f = Complex64::new(0.0, 0.0);
    let mut df = Complex64::new(0.0, 0.0);
    let mut bound = 0.0;
    let r = z.norm();
    for &c in coeffs.iter().rev() {
        df = df * z + f;
        f = f * z + c;
        bound = bound * r + c.abs();
    }
    (f, df, bound)
}

/// All `deg f` complex roots of `f`, with multiplicity.
pub fn complex_roots(f: &Poly<Rational>, tol: f64) -> Result<Vec<ComplexRoot>, PolyError> {
    complex_roots_f64(&f.to_f64_coeffs(), tol)
}

/// Roots of the real polynomial with coefficients `coeffs` (constant first).
///
/// Every returned root has residual at most `tol·(1 + max|c_k|)`, times
/// `|z|^deg` for roots outside the unit disk (where `f64` evaluation noise
/// alone grows like that).
pub fn complex_roots_f64(coeffs: &[f64], tol: f64) -> Result<Vec<ComplexRoot>, PolyError> {
    let mut coeffs = coeffs.to_vec();
    while coeffs.last() == Some(&0.0) {
        coeffs.pop();
    }
    let degree = coeffs.len().checked_sub(1);
    let n = match degree {
        Some(d) if d >= 1 => d,
        other => return Err(PolyError::DegreeTooLow(other)),
    };
    let lead = coeffs[n];
    let radius = 1.0
        + coeffs[..n]
            .iter()
            .map(|c| (c / lead).abs())
            .fold(0.0, f64::max);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| {
            let theta = std::f64::consts::TAU * k as f64 / n as f64 + START_ANGLE;
            Complex64::from_polar(radius, theta)
        })
        .collect();

    let mut converged = vec![false; n];
    let mut iterations = 0;
    while converged.iter().any(|c| !c) {
        if iterations == MAX_ITERATIONS {
            return Err(PolyError::NonConvergence { iterations });
        }
        iterations += 1;
        for i in 0..n {
            if converged[i] {
                continue;
            }
            let (f, df, bound) = eval_with_derivative(&coeffs, z[i]);
            // Stop once f(z) is indistinguishable from rounding noise.
            if f.norm() <= 8.0 * f64::EPSILON * bound {
                converged[i] = true;
                continue;
            }
            let newton = f / df;
            let repulsion: Complex64 = (0..n)
                .filter(|&j| j != i)
                .map(|j| (z[i] - z[j]).inv())
                .sum();
            let step = newton / (Complex64::new(1.0, 0.0) - newton * repulsion);
            if !step.is_finite() {
                continue;
            }
            z[i] -= step;
            if step.norm() <= 4.0 * f64::EPSILON * z[i].norm().max(f64::MIN_POSITIVE) {
                converged[i] = true;
            }
        }
    }

    let scale = 1.0 + coeffs.iter().map(|c| c.abs()).fold(0.0, f64::max);
    let mut roots: Vec<ComplexRoot> = z
        .into_iter()
        .map(|root| ComplexRoot {
            re: root.re,
            im: root.im,
            residual: eval_complex(&coeffs, root).norm(),
        })
        .collect();
    let within_bound = |r: &ComplexRoot| {
        let growth = r.value().norm().max(1.0).powi(n as i32);
        r.residual <= tol * scale * growth
    };
    if !roots.iter().all(within_bound) {
        return Err(PolyError::NonConvergence { iterations });
    }
    roots.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    Ok(roots)
}

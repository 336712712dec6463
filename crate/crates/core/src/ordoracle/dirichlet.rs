use num_traits::ToPrimitive;

use super::kronecker::{gcd, kronecker};
use super::{OracleError, OrderSpec};
use crate::localfactor::{factor_poly, FactorKind, LocalFactorParams};

/// Coefficients `a_1..=a_N` of a Dirichlet series `Σ a_k k^{-s}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirichletCoeffs {
    coeffs: Vec<i64>,
}

impl DirichletCoeffs {
    pub(crate) fn from_vec(coeffs: Vec<i64>) -> Self {
        Self { coeffs }
    }

    pub fn limit(&self) -> usize {
        self.coeffs.len()
    }

    /// `a_k` for `1 <= k <= limit`.
    pub fn get(&self, k: usize) -> i64 {
        self.coeffs[k - 1]
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.coeffs
    }

    /// First coprime pair `(m, k)` with `m·k <= limit` and
    /// `a_{mk} != a_m·a_k`.
    pub fn first_non_multiplicative(&self) -> Option<(usize, usize)> {
        let n = self.limit();
        for m in 2..=n {
            for k in m..=n / m {
                if gcd(m as u64, k as u64) == 1 && self.get(m * k) != self.get(m) * self.get(k) {
                    return Some((m, k));
                }
            }
        }
        None
    }

    /// Dirichlet product with the polynomial `Σ c_j (p^j)^{-s}`, truncated.
    fn mul_local(&self, p: u64, c: &[i64]) -> Self {
        let n = self.limit();
        let coeffs = (1..=n)
            .map(|k| {
                let mut acc = 0i64;
                let mut pj = 1usize;
                for &cj in c {
                    if k % pj != 0 {
                        break;
                    }
                    acc += cj * self.get(k / pj);
                    pj = match pj.checked_mul(p as usize) {
                        Some(v) => v,
                        None => break,
                    };
                }
                acc
            })
            .collect();
        Self { coeffs }
    }
}

/// `a_k = Σ_{d | k} χ(d)`, the ideal counts of the maximal order.
pub fn dedekind_coeffs(d_k: i64, limit: usize) -> Result<DirichletCoeffs, OracleError> {
    if !super::is_fundamental(d_k) {
        return Err(OracleError::InvalidDiscriminant(d_k));
    }
    let chi: Vec<i64> = (1..=limit as u64)
        .map(|m| i64::from(kronecker(d_k, m)))
        .collect();
    let mut coeffs = vec![0i64; limit];
    for d in 1..=limit {
        for k in (d..=limit).step_by(d) {
            coeffs[k - 1] += chi[d - 1];
        }
    }
    Ok(DirichletCoeffs { coeffs })
}

/// `ζ_K` times the local factor at every `p | f`, truncated at `limit`.
pub fn euler_expand(
    spec: &OrderSpec,
    limit: usize,
    star: bool,
) -> Result<DirichletCoeffs, OracleError> {
    let kind = if star {
        FactorKind::Star
    } else {
        FactorKind::Proper
    };
    let mut series = dedekind_coeffs(spec.d_k(), limit)?;
    for &(p, n) in spec.factorization() {
        let chi = kronecker(spec.d_k(), p);
        let params = LocalFactorParams::new(p, n, chi.into())?;
        let poly = factor_poly(&params, kind)?;
        // Only terms with p^j <= limit contribute.
        let mut c = Vec::new();
        let mut pj = 1u64;
        for coeff in poly.coeffs() {
            if pj > limit as u64 {
                break;
            }
            let v = coeff.to_integer().to_i64().ok_or(OracleError::Overflow)?;
            c.push(v);
            pj = pj.saturating_mul(p);
        }
        series = series.mul_local(p, &c);
    }
    Ok(series)
}

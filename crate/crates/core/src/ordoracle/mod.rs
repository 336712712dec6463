//! Brute-force oracle for the zeta functions of a quadratic order.
//!
//! Ideals of `O_f = Z + f·O_K` are enumerated as HNF sublattices of
//! `Z ⊕ Zω` (`ω = f·ω_K`, `ω_K = (d_K + √d_K)/2`) that are closed under
//! multiplication by `ω`. Counting them by index gives the Dirichlet
//! coefficients, which are compared exactly with `ζ_K` times the local
//! factors.

mod dirichlet;
mod kronecker;
mod lattice;

pub use dirichlet::{dedekind_coeffs, euler_expand, DirichletCoeffs};
pub use kronecker::{fundamental_decomposition, is_fundamental, kronecker_chi};
pub use lattice::{enumerate_ideals, is_ideal, lattices_of_index, multiplier_conductor, IdealHNF};

use thiserror::Error;

use crate::exactnum::factorize;
use crate::localfactor::LocalFactorError;
use crate::par::Exec;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum OracleError {
    #[error("{0} is not a fundamental discriminant")]
    InvalidDiscriminant(i64),
    #[error("{0} is not the discriminant of a quadratic order")]
    NotADiscriminant(i64),
    #[error("conductor must be >= 1")]
    InvalidConductor,
    #[error("series limit must be >= 1")]
    InvalidLimit,
    #[error("coefficient does not fit in 64 bits")]
    Overflow,
    #[error(transparent)]
    LocalFactor(#[from] LocalFactorError),
}

/// The order of conductor `f` in the quadratic field of discriminant `d_K`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderSpec {
    d_k: i64,
    f: u64,
    factorization: Vec<(u64, u32)>,
}

impl OrderSpec {
    pub fn new(d_k: i64, f: u64) -> Result<Self, OracleError> {
        if !is_fundamental(d_k) {
            return Err(OracleError::InvalidDiscriminant(d_k));
        }
        if f < 1 {
            return Err(OracleError::InvalidConductor);
        }
        Ok(Self {
            d_k,
            f,
            factorization: factorize(f),
        })
    }

    /// From an order discriminant `D = f²·d_K`.
    pub fn from_discriminant(disc: i64) -> Result<Self, OracleError> {
        let (d_k, f) = fundamental_decomposition(disc)?;
        Self::new(d_k, f)
    }

    pub fn d_k(&self) -> i64 {
        self.d_k
    }

    pub fn f(&self) -> u64 {
        self.f
    }

    pub fn discriminant(&self) -> i64 {
        self.d_k * (self.f * self.f) as i64
    }

    /// `(p, n_p)` for each prime dividing the conductor.
    pub fn factorization(&self) -> &[(u64, u32)] {
        &self.factorization
    }

    /// `(trace ω, norm ω) = (f·d_K, f²·(d_K² - d_K)/4)`.
    pub fn omega_trace_norm(&self) -> (i128, i128) {
        let d = i128::from(self.d_k);
        let f = i128::from(self.f);
        (f * d, f * f * (d * d - d) / 4)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct OracleReport {
    pub spec: OrderSpec,
    pub limit: usize,
    pub star: bool,
    pub enumerated: DirichletCoeffs,
    pub expected: DirichletCoeffs,
    pub first_mismatch: Option<usize>,
}

impl OracleReport {
    pub fn pass(&self) -> bool {
        self.first_mismatch.is_none()
    }

    /// `(k, enumerated, expected)` for every differing index.
    pub fn mismatches(&self) -> Vec<(usize, i64, i64)> {
        (1..=self.limit)
            .filter(|&k| self.enumerated.get(k) != self.expected.get(k))
            .map(|k| (k, self.enumerated.get(k), self.expected.get(k)))
            .collect()
    }
}

/// Enumerated ideal counts against the Euler product, index by index.
/// `star` selects all ideals, otherwise only proper ones.
pub fn oracle_compare(
    spec: &OrderSpec,
    limit: usize,
    star: bool,
    exec: Exec,
) -> Result<OracleReport, OracleError> {
    if limit < 1 {
        return Err(OracleError::InvalidLimit);
    }
    let enumerated = enumerate_ideals(spec, limit, !star, exec);
    let expected = euler_expand(spec, limit, star)?;
    let first_mismatch = (1..=limit).find(|&k| enumerated.get(k) != expected.get(k));
    Ok(OracleReport {
        spec: spec.clone(),
        limit,
        star,
        enumerated,
        expected,
        first_mismatch,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_spec_validation() {
        assert_eq!(
            OrderSpec::new(6, 2),
            Err(OracleError::InvalidDiscriminant(6))
        );
        assert_eq!(OrderSpec::new(-4, 0), Err(OracleError::InvalidConductor));
        let s = OrderSpec::from_discriminant(-16).unwrap();
        assert_eq!((s.d_k(), s.f()), (-4, 2));
        assert_eq!(s.discriminant(), -16);
        assert_eq!(
            OrderSpec::new(5, 12).unwrap().factorization(),
            &[(2, 2), (3, 1)]
        );
    }

    #[test]
    fn small_comparisons() {
        let r =
            oracle_compare(&OrderSpec::new(-4, 2).unwrap(), 60, false, Exec::Sequential).unwrap();
        assert!(r.pass(), "{:?}", r.mismatches());
        assert_eq!(r.enumerated.get(1), 1);
        let r = oracle_compare(&OrderSpec::new(5, 6).unwrap(), 60, true, Exec::Sequential).unwrap();
        assert!(r.pass(), "{:?}", r.mismatches());
        for star in [false, true] {
            let r =
                oracle_compare(&OrderSpec::new(-7, 1).unwrap(), 40, star, Exec::Parallel).unwrap();
            assert!(r.pass());
            assert_eq!(r.enumerated, dedekind_coeffs(-7, 40).unwrap());
        }
    }

    #[test]
    fn proper_counts_for_gaussian_order() {
        let e = enumerate_ideals(&OrderSpec::new(-4, 2).unwrap(), 4, true, Exec::Sequential);
        assert_eq!((e.get(1), e.get(2), e.get(4)), (1, 0, 2));
    }
}

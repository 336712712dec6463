//! Certification of every `(p, n, χ)` triple on a grid.

use super::sturm::dyadic_width;
use super::{
    check_functional_equation, critical_zeros, factor_poly, isolate_roots, FactorKind,
    LocalFactorError, LocalFactorParams,
};
use crate::exactnum::is_prime;
use crate::par::{map_ordered, Exec};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Grid {
    pub primes: Vec<u64>,
    pub n_max: u32,
    pub chis: Vec<i8>,
}

impl Grid {
    pub fn new(p_max: u64, n_max: u32, chis: Vec<i8>) -> Self {
        let primes = (2..=p_max).filter(|&p| is_prime(p)).collect();
        Self {
            primes,
            n_max,
            chis,
        }
    }

    /// Triples in `(p, n, χ)` order.
    pub fn triples(&self) -> Vec<LocalFactorParams> {
        let mut chis = self.chis.clone();
        chis.sort_unstable();
        chis.dedup();
        let mut out = Vec::new();
        for &p in &self.primes {
            for n in 1..=self.n_max {
                for &chi in &chis {
                    if let Ok(params) = LocalFactorParams::new(p, n, chi.into()) {
                        out.push(params);
                    }
                }
            }
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepOptions {
    pub tol: f64,
    /// Isolating intervals are refined to width `2^{-width_bits}`.
    pub width_bits: u32,
}

impl Default for SweepOptions {
    fn default() -> Self {
        Self {
            tol: 1e-8,
            width_bits: 20,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TripleResult {
    pub params: LocalFactorParams,
    pub kind: FactorKind,
    pub degree_ok: bool,
    pub funceq_ok: bool,
    pub variations_at_minus1: usize,
    pub variations_at_plus1: usize,
    pub sturm_root_count: i64,
    pub intervals_ok: bool,
    pub numeric_modulus_max_err: f64,
    pub numeric_ok: bool,
    /// `sturm_root_count == n && funceq_ok && degree_ok`.
    pub certified: bool,
    pub error: Option<String>,
}

impl TripleResult {
    pub fn pass(&self) -> bool {
        self.certified && self.intervals_ok && self.numeric_ok && self.error.is_none()
    }
}

pub fn certify_triple(
    params: &LocalFactorParams,
    kind: FactorKind,
    opts: &SweepOptions,
) -> TripleResult {
    let mut out = TripleResult {
        params: *params,
        kind,
        degree_ok: false,
        funceq_ok: false,
        variations_at_minus1: 0,
        variations_at_plus1: 0,
        sturm_root_count: 0,
        intervals_ok: false,
        numeric_modulus_max_err: f64::NAN,
        numeric_ok: false,
        certified: false,
        error: None,
    };
    let n = params.n();
    match factor_poly(params, kind) {
        Ok(f) => {
            out.degree_ok = f.degree() == Some(2 * n as usize);
            out.funceq_ok = check_functional_equation(&f, params.p(), n).unwrap_or(false);
        }
        Err(e) => out.error = Some(e.to_string()),
    }
    match isolate_roots(params, kind, &dyadic_width(opts.width_bits)) {
        Ok(cert) => {
            out.variations_at_minus1 = cert.variations_at_minus1;
            out.variations_at_plus1 = cert.variations_at_plus1;
            out.sturm_root_count = cert.root_count;
            out.intervals_ok = cert.is_consistent()
                && cert
                    .max_width()
                    .is_some_and(|w| w <= dyadic_width(opts.width_bits));
        }
        Err(e) => out.error = Some(e.to_string()),
    }
    match critical_zeros(params, kind, opts.tol) {
        Ok(zeros) => {
            out.numeric_modulus_max_err = zeros.iter().map(|z| z.modulus_error).fold(0.0, f64::max);
            out.numeric_ok = zeros.len() == 2 * n as usize;
        }
        Err(LocalFactorError::ModulusViolation { error, .. }) => {
            out.numeric_modulus_max_err = error;
        }
        Err(e) => out.error = Some(e.to_string()),
    }
    out.certified = out.sturm_root_count == i64::from(n) && out.funceq_ok && out.degree_ok;
    out
}

/// Certifies every grid triple; results are ordered by `(p, n, χ)`
/// regardless of `exec`.
pub fn sweep(grid: &Grid, kind: FactorKind, opts: &SweepOptions, exec: Exec) -> Vec<TripleResult> {
    map_ordered(exec, &grid.triples(), |params| {
        certify_triple(params, kind, opts)
    })
}

//! The local factor at a prime `p` dividing the conductor.
//!
//! With `u = p^{-s}` and `n = n_p`, the factor of the proper-ideal zeta
//! function is a polynomial `P_n(u)` of degree `2n`; the all-ideal variant
//! is `P*_n(u)`. Both satisfy `p^n u^{2n} P(1/(pu)) = P(u)` and have every
//! root on the circle `|u| = p^{-1/2}`.
//!
//! `χ` is treated here as a free parameter in {-1, 0, 1}; tying it to a
//! discriminant happens in [`crate::ordoracle`].

mod chebyshev;
mod genfun;
mod sturm;
mod sweep;
mod zeros;

pub use chebyshev::{
    build_q, build_q_chain, build_q_star, chebyshev_u, euclidean_sturm_chain, reduced_poly,
};
pub use genfun::{genfun_check, GenfunReport};
pub use sturm::{count_roots_in, isolate_roots, sturm_variations, SturmCertificate};
pub use sweep::{certify_triple, sweep, Grid, SweepOptions, TripleResult};
pub use zeros::{bridge_identity_check, bridge_max_deviation, critical_zeros, CriticalZero};

use num_bigint::BigInt;
use num_traits::{One, Pow, Zero};
use thiserror::Error;

use crate::exactnum::{big_rat, is_prime, rat, Rational};
use crate::polyalg::{poly_divide_exact, Poly, PolyError};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum LocalFactorError {
    #[error("p = {0} is not prime")]
    NotPrime(u64),
    #[error("exponent n must be >= 1, got {0}")]
    ExponentTooSmall(u32),
    #[error("chi must be -1, 0 or 1, got {0}")]
    InvalidChi(i64),
    #[error("number of series terms must be >= 1")]
    NoTerms,
    #[error("width must be positive")]
    NonPositiveWidth,
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("division result disagrees with closed form at u^{index}")]
    ClosedFormMismatch { index: usize },
    #[error("expected degree {expected}, got {actual:?}")]
    DegreeMismatch {
        expected: usize,
        actual: Option<usize>,
    },
    #[error("three-term recurrence disagrees with direct construction at Q_{index}")]
    ChainMismatch { index: u32 },
    #[error("interval endpoint {endpoint} is a root of Q_n")]
    EndpointRoot { endpoint: Box<Rational> },
    #[error("empty interval: {a} >= {b}")]
    EmptyInterval { a: Box<Rational>, b: Box<Rational> },
    #[error("root modulus off the critical circle by {error:e} (Sturm certified: {certified})")]
    ModulusViolation { error: f64, certified: bool },
}

/// Which zeta function the factor belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FactorKind {
    /// Sum over proper (invertible) ideals.
    Proper,
    /// Sum over all ideals.
    Star,
}

/// `(p, n_p, χ(p))`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LocalFactorParams {
    p: u64,
    n: u32,
    chi: i8,
}

impl LocalFactorParams {
    pub fn new(p: u64, n: u32, chi: i64) -> Result<Self, LocalFactorError> {
        if !is_prime(p) {
            return Err(LocalFactorError::NotPrime(p));
        }
        if n < 1 {
            return Err(LocalFactorError::ExponentTooSmall(n));
        }
        let chi = validate_chi(chi)?;
        Ok(Self { p, n, chi })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn chi(&self) -> i8 {
        self.chi
    }
}

pub(crate) fn validate_chi(chi: i64) -> Result<i8, LocalFactorError> {
    match chi {
        -1..=1 => Ok(chi as i8),
        _ => Err(LocalFactorError::InvalidChi(chi)),
    }
}

fn pow_p(p: u64, k: u32) -> BigInt {
    Pow::pow(BigInt::from(p), k)
}

/// `1 - p^m u^{2m}`.
fn one_minus_pu2_pow(p: u64, m: u32) -> Poly<Rational> {
    let mut g = vec![rat(0); m as usize + 1];
    g[0] = rat(1);
    g[m as usize] = g[m as usize].clone() - rat(1);
    Poly::new(g).compose_monomial(&rat(p as i64), 2)
}

/// The denominator `1 - p u^2`.
fn denominator(p: u64) -> Poly<Rational> {
    one_minus_pu2_pow(p, 1)
}

/// Numerator of `P_n` after expanding:
/// `1 - p^{n+1}u^{2n+2} - (1+χ)u(1 - p^n u^{2n}) + χu²(1 - p^{n-1}u^{2n-2})`.
pub fn proper_numerator(params: &LocalFactorParams) -> Poly<Rational> {
    let LocalFactorParams { p, n, chi } = *params;
    let chi = rat(chi.into());
    let one_plus_chi = rat(1) + chi.clone();
    one_minus_pu2_pow(p, n + 1)
        .sub(&one_minus_pu2_pow(p, n).shift(1).scale(&one_plus_chi))
        .add(&one_minus_pu2_pow(p, n - 1).shift(2).scale(&chi))
}

/// Numerator of `P*_n`: `1 - p^{n+1}u^{2n+2} - χu(1 - p^n u^{2n})`.
pub fn star_numerator(params: &LocalFactorParams) -> Poly<Rational> {
    let LocalFactorParams { p, n, chi } = *params;
    one_minus_pu2_pow(p, n + 1).sub(&one_minus_pu2_pow(p, n).shift(1).scale(&rat(chi.into())))
}

fn proper_closed_form(params: &LocalFactorParams) -> Vec<BigInt> {
    let LocalFactorParams { p, n, chi } = *params;
    let chi = BigInt::from(chi);
    let one_plus_chi = BigInt::one() + &chi;
    let mut c = vec![BigInt::zero(); 2 * n as usize + 1];
    c[0] = BigInt::one();
    for k in 1..n {
        c[2 * k as usize] = pow_p(p, k) + &chi * pow_p(p, k - 1);
    }
    c[2 * n as usize] = pow_p(p, n);
    for k in 0..n {
        c[2 * k as usize + 1] = -(&one_plus_chi * pow_p(p, k));
    }
    c
}

fn star_closed_form(params: &LocalFactorParams) -> Vec<BigInt> {
    let LocalFactorParams { p, n, chi } = *params;
    let mut c = vec![BigInt::zero(); 2 * n as usize + 1];
    for k in 0..=n {
        c[2 * k as usize] = pow_p(p, k);
    }
    for k in 0..n {
        c[2 * k as usize + 1] = -(BigInt::from(chi) * pow_p(p, k));
    }
    c
}

fn divide_and_cross_check(
    numerator: Poly<Rational>,
    p: u64,
    closed: Vec<BigInt>,
) -> Result<Poly<Rational>, LocalFactorError> {
    let q = poly_divide_exact(&numerator, &denominator(p))?;
    let expected = Poly::new(closed.into_iter().map(big_rat).collect());
    if q != expected {
        let index = (0..)
            .find(|&k| q.coeff(k) != expected.coeff(k))
            .unwrap_or_default();
        return Err(LocalFactorError::ClosedFormMismatch { index });
    }
    Ok(q)
}

/// `P_n(u)`, by exact division of the expanded numerator by `1 - pu²`,
/// cross-checked against the closed-form coefficients.
pub fn local_factor_poly(params: &LocalFactorParams) -> Result<Poly<Rational>, LocalFactorError> {
    divide_and_cross_check(
        proper_numerator(params),
        params.p,
        proper_closed_form(params),
    )
}

/// `P*_n(u) = Σ_{k≤n} p^k u^{2k} - χu Σ_{k<n} p^k u^{2k}`.
pub fn star_factor_poly(params: &LocalFactorParams) -> Result<Poly<Rational>, LocalFactorError> {
    divide_and_cross_check(star_numerator(params), params.p, star_closed_form(params))
}

pub fn factor_poly(
    params: &LocalFactorParams,
    kind: FactorKind,
) -> Result<Poly<Rational>, LocalFactorError> {
    match kind {
        FactorKind::Proper => local_factor_poly(params),
        FactorKind::Star => star_factor_poly(params),
    }
}

/// Exact coefficient test of `p^n u^{2n} f(1/(pu)) = f(u)`, i.e.
/// `c_{2n-j} = p^{n-j} c_j` for every `j`.
pub fn check_functional_equation(
    f: &Poly<Rational>,
    p: u64,
    n: u32,
) -> Result<bool, LocalFactorError> {
    let deg = 2 * n as usize;
    if f.degree() != Some(deg) {
        return Err(LocalFactorError::DegreeMismatch {
            expected: deg,
            actual: f.degree(),
        });
    }
    let c = f.coeffs();
    let pr = rat(p as i64);
    Ok((0..=deg).all(|j| {
        let e = n as i32 - j as i32;
        let factor: Rational = if e >= 0 {
            Pow::pow(&pr, e as u32)
        } else {
            Rational::one() / Pow::pow(&pr, (-e) as u32)
        };
        c[deg - j] == factor * &c[j]
    }))
}

//! Dense univariate polynomials over exact scalars.
//!
//! Coefficients are stored constant term first; the zero polynomial is the
//! empty vector and every other polynomial has a nonzero leading
//! coefficient.

mod roots;

pub use roots::{complex_roots, complex_roots_f64, eval_complex, ComplexRoot, DEFAULT_ROOT_TOL};

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

use crate::exactnum::{QuadExt, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("division by the zero polynomial")]
    DivisionByZeroPoly,
    #[error("exact division left a nonzero remainder of degree {degree}")]
    NonzeroRemainder { degree: usize },
    #[error("root finding needs degree >= 1, got {0:?}")]
    DegreeTooLow(Option<usize>),
    #[error("root iteration did not converge within {iterations} iterations")]
    NonConvergence { iterations: usize },
}

/// Exact field scalar usable as a polynomial coefficient.
///
/// `zero_like`/`one_like` exist because a `QuadExt` zero must carry its
/// radicand.
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn is_zero(&self) -> bool;
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn to_f64(&self) -> f64;
}

impl Scalar for Rational {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn one_like(&self) -> Self {
        Rational::one()
    }
    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
}

impl Scalar for QuadExt {
    fn is_zero(&self) -> bool {
        QuadExt::is_zero(self)
    }
    fn zero_like(&self) -> Self {
        self.lift(Rational::zero())
    }
    fn one_like(&self) -> Self {
        self.lift(Rational::one())
    }
    fn to_f64(&self) -> f64 {
        QuadExt::to_f64(self)
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<S> {
    coeffs: Vec<S>,
}

impl<S: Scalar> Poly<S> {
    pub fn new(mut coeffs: Vec<S>) -> Self {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: S) -> Self {
        Self::new(vec![c])
    }

    /// `c·x^k`.
    pub fn monomial(c: S, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![c.zero_like(); k];
        coeffs.push(c);
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<S> {
        self.coeffs
    }

    /// Coefficient of `x^k`, `None` past the degree.
    pub fn coeff(&self, k: usize) -> Option<&S> {
        self.coeffs.get(k)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&S> {
        self.coeffs.last()
    }

    fn zero_scalar(&self, other: &Self) -> Option<S> {
        self.coeffs
            .first()
            .or_else(|| other.coeffs.first())
            .map(Scalar::zero_like)
    }

    pub fn add(&self, other: &Self) -> Self {
        let Some(zero) = self.zero_scalar(other) else {
            return Self::zero();
        };
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|k| {
                let x = self.coeffs.get(k).cloned().unwrap_or_else(|| zero.clone());
                match other.coeffs.get(k) {
                    Some(y) => x + y.clone(),
                    None => x,
                }
            })
            .collect();
        Self::new(coeffs)
    }

    pub fn neg(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().cloned().map(|c| -c).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, k: &S) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.clone() * k.clone()).collect())
    }

    /// Multiply by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        match self.coeffs.first() {
            None => Self::zero(),
            Some(c0) => {
                let mut coeffs = vec![c0.zero_like(); k];
                coeffs.extend(self.coeffs.iter().cloned());
                Self { coeffs }
            }
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let zero = self.coeffs[0].zero_like();
        let mut out = vec![zero; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + x.clone() * y.clone();
            }
        }
        Self::new(out)
    }

    /// Substitute `x -> scale·x^power`, i.e. return `f(scale·x^power)`.
    pub fn compose_monomial(&self, scale: &S, power: usize) -> Self {
        assert!(power >= 1, "monomial substitution needs power >= 1");
        let Some(c0) = self.coeffs.first() else {
            return Self::zero();
        };
        let zero = c0.zero_like();
        let mut out = vec![zero.clone(); (self.coeffs.len() - 1) * power + 1];
        let mut factor = c0.one_like();
        for (k, c) in self.coeffs.iter().enumerate() {
            out[k * power] = c.clone() * factor.clone();
            factor = factor * scale.clone();
        }
        Self::new(out)
    }

    /// Exact Horner evaluation.
    pub fn eval(&self, x: &S) -> S {
        self.coeffs
            .iter()
            .rev()
            .fold(x.zero_like(), |acc, c| acc * x.clone() + c.clone())
    }

    /// Quotient and remainder with `deg r < deg den`.
    pub fn div_rem(&self, den: &Self) -> Result<(Self, Self), PolyError> {
        let (Some(dd), Some(lead)) = (den.degree(), den.leading()) else {
            return Err(PolyError::DivisionByZeroPoly);
        };
        let Some(nd) = self.degree() else {
            return Ok((Self::zero(), Self::zero()));
        };
        if nd < dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![lead.zero_like(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let c = rem[k + dd].clone() / lead.clone();
            if c.is_zero() {
                continue;
            }
            for (j, d) in den.coeffs.iter().enumerate() {
                rem[k + j] = rem[k + j].clone() - c.clone() * d.clone();
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Euclidean gcd, normalized to leading coefficient one.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        match a.leading() {
            Some(l) => {
                let inv = l.one_like() / l.clone();
                a.scale(&inv)
            }
            None => a,
        }
    }

    pub fn derivative(&self) -> Self {
        let Some(c0) = self.coeffs.first() else {
            return Self::zero();
        };
        let one = c0.one_like();
        let mut k = c0.zero_like();
        let mut out = Vec::with_capacity(self.coeffs.len().saturating_sub(1));
        for c in self.coeffs.iter().skip(1) {
            k = k + one.clone();
            out.push(c.clone() * k.clone());
        }
        Self::new(out)
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Poly<T> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }

    pub fn to_f64_coeffs(&self) -> Vec<f64> {
        self.coeffs.iter().map(Scalar::to_f64).collect()
    }
}

/// Exact quotient `num / den`; a nonzero remainder is an error.
pub fn poly_divide_exact<S: Scalar>(num: &Poly<S>, den: &Poly<S>) -> Result<Poly<S>, PolyError> {
    let (q, r) = num.div_rem(den)?;
    match r.degree() {
        None => Ok(q),
        Some(degree) => Err(PolyError::NonzeroRemainder { degree }),
    }
}

pub fn poly_eval<S: Scalar>(f: &Poly<S>, x: &S) -> S {
    f.eval(x)
}

impl Poly<Rational> {
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| crate::exactnum::rat(c)).collect())
    }

    /// Embed into Q(√p).
    pub fn to_quad(&self, p: u64) -> Poly<QuadExt> {
        self.map(|c| QuadExt::new_unchecked(c.clone(), Rational::zero(), p))
    }
}

impl<S: fmt::Display> fmt::Debug for Poly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use super::{is_prime, rat_sign, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuadError {
    #[error("radicand {0} is not prime")]
    NotPrime(u64),
    #[error("radicand mismatch: √{0} vs √{1}")]
    RadicandMismatch(u64, u64),
    #[error("division by zero in Q(√{0})")]
    DivisionByZero(u64),
}

/// The element `a + b·√p` of Q(√p), p prime.
///
/// Components are canonical rationals, so structural equality is field
/// equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadExt {
    a: Rational,
    b: Rational,
    p: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuadOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl QuadExt {
    pub fn new(a: Rational, b: Rational, p: u64) -> Result<Self, QuadError> {
        if !is_prime(p) {
            return Err(QuadError::NotPrime(p));
        }
        Ok(Self { a, b, p })
    }

    /// Caller guarantees `p` is prime.
    pub(crate) fn new_unchecked(a: Rational, b: Rational, p: u64) -> Self {
        debug_assert!(is_prime(p));
        Self { a, b, p }
    }

    pub fn from_rational(a: Rational, p: u64) -> Result<Self, QuadError> {
        Self::new(a, Rational::zero(), p)
    }

    /// `√p` itself.
    pub fn sqrt_p(p: u64) -> Result<Self, QuadError> {
        Self::new(Rational::zero(), Rational::one(), p)
    }

    pub fn zero(p: u64) -> Result<Self, QuadError> {
        Self::new(Rational::zero(), Rational::zero(), p)
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn radicand(&self) -> u64 {
        self.p
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Same radicand, rational value `a`.
    pub fn lift(&self, a: Rational) -> Self {
        Self {
            a,
            b: Rational::zero(),
            p: self.p,
        }
    }

    pub fn conjugate(&self) -> Self {
        Self {
            a: self.a.clone(),
            b: -&self.b,
            p: self.p,
        }
    }

    /// Field norm `a² − p·b²`.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - &self.b * &self.b * Rational::from_integer(self.p.into())
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self {
            a: &self.a * k,
            b: &self.b * k,
            p: self.p,
        }
    }

    fn check(&self, other: &Self) -> Result<(), QuadError> {
        if self.p == other.p {
            Ok(())
        } else {
            Err(QuadError::RadicandMismatch(self.p, other.p))
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, QuadError> {
        self.check(other)?;
        Ok(Self {
            a: &self.a + &other.a,
            b: &self.b + &other.b,
            p: self.p,
        })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, QuadError> {
        self.check(other)?;
        Ok(Self {
            a: &self.a - &other.a,
            b: &self.b - &other.b,
            p: self.p,
        })
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, QuadError> {
        self.check(other)?;
        let p = Rational::from_integer(self.p.into());
        Ok(Self {
            a: &self.a * &other.a + &self.b * &other.b * p,
            b: &self.a * &other.b + &self.b * &other.a,
            p: self.p,
        })
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, QuadError> {
        self.check(other)?;
        if other.is_zero() {
            return Err(QuadError::DivisionByZero(self.p));
        }
        // √p is irrational, so the norm of a nonzero element never vanishes.
        let n = other.norm();
        let num = self.checked_mul(&other.conjugate())?;
        Ok(Self {
            a: num.a / &n,
            b: num.b / n,
            p: self.p,
        })
    }

    /// Exact sign of the real number `a + b√p`.
    pub fn sign(&self) -> i8 {
        let sa = rat_sign(&self.a);
        let sb = rat_sign(&self.b);
        if sa == 0 {
            return sb;
        }
        if sb == 0 || sa == sb {
            return sa;
        }
        // Mixed signs: the component of larger magnitude wins.
        let a2 = &self.a * &self.a;
        let pb2 = &self.b * &self.b * Rational::from_integer(self.p.into());
        match a2.cmp(&pb2) {
            std::cmp::Ordering::Greater => sa,
            std::cmp::Ordering::Less => sb,
            std::cmp::Ordering::Equal => {
                unreachable!("a² = p·b² with b ≠ 0 contradicts √p irrational")
            }
        }
    }

    pub fn to_f64(&self) -> f64 {
        let a = self.a.to_f64().unwrap_or(f64::NAN);
        let b = self.b.to_f64().unwrap_or(f64::NAN);
        a + b * (self.p as f64).sqrt()
    }
}

/// Exact field arithmetic in Q(√p).
pub fn quad_arith(x: &QuadExt, y: &QuadExt, op: QuadOp) -> Result<QuadExt, QuadError> {
    match op {
        QuadOp::Add => x.checked_add(y),
        QuadOp::Sub => x.checked_sub(y),
        QuadOp::Mul => x.checked_mul(y),
        QuadOp::Div => x.checked_div(y),
    }
}

pub fn quad_sign(x: &QuadExt) -> i8 {
    x.sign()
}

impl fmt::Debug for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} + {}·√{})", self.a, self.b, self.p)
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", self.a),
            (true, false) => write!(f, "{}√{}", self.b, self.p),
            (false, false) if self.b.is_negative() => {
                write!(f, "{} - {}√{}", self.a, -&self.b, self.p)
            }
            (false, false) => write!(f, "{} + {}√{}", self.a, self.b, self.p),
        }
    }
}

// Operator impls panic on radicand mismatch; use the `checked_*` methods
// when operands come from different fields.
macro_rules! forward_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr for QuadExt {
            type Output = QuadExt;
            fn $method(self, rhs: QuadExt) -> QuadExt {
                self.$checked(&rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl<'a> $tr<&'a QuadExt> for &'a QuadExt {
            type Output = QuadExt;
            fn $method(self, rhs: &'a QuadExt) -> QuadExt {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);
forward_binop!(Div, div, checked_div);

impl Neg for QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        QuadExt {
            a: -self.a,
            b: -self.b,
            p: self.p,
        }
    }
}

impl Neg for &QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        QuadExt {
            a: -&self.a,
            b: -&self.b,
            p: self.p,
        }
    }
}

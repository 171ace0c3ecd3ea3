use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use super::Rational;

/// Commutative ring with unity containing a copy of the rationals.
///
/// Operators take the left operand by value and the right by reference or
/// value, so generic code reads `a.clone() * &b` when both are borrowed.
pub trait Ring:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
    + for<'a> MulAssign<&'a Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_rational(q: &Rational) -> Self;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn from_int(n: i64) -> Self {
        Self::from_rational(&Rational::from(n))
    }

    /// Multiplication by an embedded rational.
    fn scale(&self, q: &Rational) -> Self {
        self.clone() * &Self::from_rational(q)
    }

    fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc *= &base;
            }
            e >>= 1;
            if e > 0 {
                base = base.clone() * &base;
            }
        }
        acc
    }
}

/// A [`Ring`] in which every nonzero element is invertible.
pub trait Field: Ring + Div<Output = Self> + for<'a> Div<&'a Self, Output = Self> {
    /// `None` for zero.
    fn inv(&self) -> Option<Self>;

    /// Integer power allowing negative exponents. `None` when `self` is zero
    /// and the exponent is negative.
    fn powi(&self, e: i64) -> Option<Self> {
        if e >= 0 {
            Some(self.pow(e as u32))
        } else {
            self.inv().map(|i| i.pow((-e) as u32))
        }
    }

    /// Parameter fields that carry a free indeterminate report it here so
    /// callers can tell a symbolic run from a numeric one.
    fn is_symbolic(&self) -> bool {
        false
    }

    /// `f(λ) -> f(λ^m)` for fields with an indeterminate; `None` otherwise.
    fn subst_lambda_power(&self, _m: u32) -> Option<Self> {
        None
    }
}

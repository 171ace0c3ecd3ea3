use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use serde::{Deserialize, Serialize};

use super::combinat::binomial;
use super::field::Ring;
use super::Rational;

/// Dense polynomial in `x` with coefficients in `F`, ascending degree.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(bound(serialize = "F: Serialize", deserialize = "F: Deserialize<'de> + Ring"))]
#[serde(from = "XPolyRepr<F>")]
pub struct XPoly<F> {
    coeffs: Vec<F>,
}

#[derive(Deserialize)]
struct XPolyRepr<F> {
    coeffs: Vec<F>,
}

impl<F: Ring> From<XPolyRepr<F>> for XPoly<F> {
    fn from(r: XPolyRepr<F>) -> Self {
        XPoly::new(r.coeffs)
    }
}

impl<F: Ring> XPoly<F> {
    pub fn new(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        XPoly { coeffs }
    }

    pub fn constant(c: F) -> Self {
        XPoly::new(vec![c])
    }

    /// `c * x^k`
    pub fn monomial(c: F, k: usize) -> Self {
        let mut v = vec![F::zero(); k + 1];
        v[k] = c;
        XPoly::new(v)
    }

    pub fn x() -> Self {
        XPoly::monomial(F::one(), 1)
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<F> {
        self.coeffs
    }

    /// Coefficient of `x^k`, zero beyond the degree.
    pub fn coeff(&self, k: usize) -> F {
        self.coeffs.get(k).cloned().unwrap_or_else(F::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero_poly(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn map<G: Ring>(&self, f: impl Fn(&F) -> G) -> XPoly<G> {
        XPoly::new(self.coeffs.iter().map(f).collect())
    }

    pub fn mul_scalar(&self, c: &F) -> Self {
        if c.is_zero() {
            return XPoly::new(Vec::new());
        }
        XPoly::new(self.coeffs.iter().map(|a| a.clone() * c).collect())
    }

    pub fn scale_rational(&self, q: &Rational) -> Self {
        XPoly::new(self.coeffs.iter().map(|a| a.scale(q)).collect())
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &F) -> F {
        let mut acc = F::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// `q(x) = p(x + c)` by binomial re-expansion.
    pub fn shift(&self, c: &F) -> Self {
        if c.is_zero() || self.coeffs.len() <= 1 {
            return self.clone();
        }
        let n = self.coeffs.len();
        let mut powers = Vec::with_capacity(n);
        powers.push(F::one());
        for i in 1..n {
            powers.push(powers[i - 1].clone() * c);
        }
        let mut out = vec![F::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, slot) in out.iter_mut().enumerate().take(i + 1) {
                let w = powers[i - j].scale(&binomial(i as u64, j as u64));
                *slot += &(a.clone() * &w);
            }
        }
        XPoly::new(out)
    }

    /// `q(x) = p(c x)`.
    pub fn scale_x(&self, c: &F) -> Self {
        let mut pw = F::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            out.push(a.clone() * &pw);
            pw *= c;
        }
        XPoly::new(out)
    }

    /// `q(x) = p(-x)`.
    pub fn negate_x(&self) -> Self {
        XPoly::new(
            self.coeffs.iter().enumerate().map(|(i, a)| if i % 2 == 1 { -a.clone() } else { a.clone() }).collect(),
        )
    }

    /// `q(x) = p(a x + b)`.
    pub fn compose_affine(&self, a: &F, b: &F) -> Self {
        self.shift(b).scale_x(a)
    }

    pub fn derivative(&self) -> Self {
        XPoly::new(self.coeffs.iter().enumerate().skip(1).map(|(i, a)| a.scale(&Rational::from(i as u64))).collect())
    }

    pub fn nth_derivative(&self, k: usize) -> Self {
        (0..k).fold(self.clone(), |p, _| p.derivative())
    }

    /// Antiderivative with zero constant term.
    pub fn antiderivative(&self) -> Self {
        let mut out = Vec::with_capacity(self.coeffs.len() + 1);
        out.push(F::zero());
        for (i, a) in self.coeffs.iter().enumerate() {
            out.push(a.scale(&Rational::new(1, i as u64 + 1).expect("nonzero")));
        }
        XPoly::new(out)
    }

    fn add_ref(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            match (self.coeffs.get(i), other.coeffs.get(i)) {
                (Some(a), Some(b)) => out.push(a.clone() + b),
                (Some(a), None) => out.push(a.clone()),
                (None, Some(b)) => out.push(b.clone()),
                (None, None) => unreachable!(),
            }
        }
        XPoly::new(out)
    }

    fn mul_ref(&self, other: &Self) -> Self {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return XPoly::new(Vec::new());
        }
        let mut out = vec![F::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += &(a.clone() * b);
                }
            }
        }
        XPoly::new(out)
    }
}

impl<F: Ring> Ring for XPoly<F> {
    fn zero() -> Self {
        XPoly::new(Vec::new())
    }

    fn one() -> Self {
        XPoly::constant(F::one())
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn from_rational(q: &Rational) -> Self {
        XPoly::constant(F::from_rational(q))
    }

    fn scale(&self, q: &Rational) -> Self {
        self.scale_rational(q)
    }
}

impl<F: Ring> Add for XPoly<F> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.add_ref(&rhs)
    }
}

impl<'a, F: Ring> Add<&'a XPoly<F>> for XPoly<F> {
    type Output = Self;
    fn add(self, rhs: &'a Self) -> Self {
        self.add_ref(rhs)
    }
}

impl<'a, F: Ring> AddAssign<&'a XPoly<F>> for XPoly<F> {
    fn add_assign(&mut self, rhs: &'a Self) {
        *self = self.add_ref(rhs);
    }
}

impl<F: Ring> Sub for XPoly<F> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.add_ref(&-rhs)
    }
}

impl<'a, F: Ring> Sub<&'a XPoly<F>> for XPoly<F> {
    type Output = Self;
    fn sub(self, rhs: &'a Self) -> Self {
        self.add_ref(&-rhs.clone())
    }
}

impl<'a, F: Ring> SubAssign<&'a XPoly<F>> for XPoly<F> {
    fn sub_assign(&mut self, rhs: &'a Self) {
        *self = self.add_ref(&-rhs.clone());
    }
}

impl<F: Ring> Mul for XPoly<F> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.mul_ref(&rhs)
    }
}

impl<'a, F: Ring> Mul<&'a XPoly<F>> for XPoly<F> {
    type Output = Self;
    fn mul(self, rhs: &'a Self) -> Self {
        self.mul_ref(rhs)
    }
}

impl<'a, F: Ring> MulAssign<&'a XPoly<F>> for XPoly<F> {
    fn mul_assign(&mut self, rhs: &'a Self) {
        *self = self.mul_ref(rhs);
    }
}

impl<F: Ring> Neg for XPoly<F> {
    type Output = Self;
    fn neg(self) -> Self {
        XPoly { coeffs: self.coeffs.into_iter().map(|c| -c).collect() }
    }
}

impl<F: Ring> fmt::Display for XPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*x")?,
                _ => write!(f, "({c})*x^{i}")?,
            }
        }
        Ok(())
    }
}

impl<F: Ring> fmt::Debug for XPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::field::{Field, Ring};
use super::intpoly::IntPoly;
use super::Rational;
use crate::Error;

/// Element of Q(λ), the field of rational functions in the Apostol
/// parameter.
///
/// Stored as `content * num / den` with `num` and `den` primitive integer
/// polynomials with positive leading coefficients and no common factor.
/// That triple is unique for every value, so structural equality is value
/// equality. The public view ([`RatFun::numerator`], [`RatFun::denominator`])
/// is the usual one with a monic rational denominator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFun {
    content: Rational,
    num: IntPoly,
    den: IntPoly,
}

impl RatFun {
    /// The indeterminate λ.
    pub fn lambda() -> Self {
        RatFun { content: Rational::one(), num: IntPoly::x(), den: IntPoly::one() }
    }

    /// Builds `num / den` from rational coefficient lists (ascending degree)
    /// and brings it to canonical form.
    pub fn normalize(num: &[Rational], den: &[Rational]) -> Result<Self, Error> {
        let (cd, d) = split_rational_poly(den);
        if d.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        let (cn, n) = split_rational_poly(num);
        if n.is_zero() {
            return Ok(RatFun::zero());
        }
        Ok(RatFun::reduce(cn / cd, n, d))
    }

    pub fn from_poly(coeffs: &[Rational]) -> Self {
        let (c, n) = split_rational_poly(coeffs);
        if n.is_zero() {
            RatFun::zero()
        } else {
            RatFun { content: c, num: n, den: IntPoly::one() }
        }
    }

    fn reduce(content: Rational, num: IntPoly, den: IntPoly) -> Self {
        let g = num.gcd(&den);
        if g.is_one() {
            RatFun { content, num, den }
        } else {
            RatFun {
                content,
                num: num.div_exact(&g).expect("gcd divides numerator"),
                den: den.div_exact(&g).expect("gcd divides denominator"),
            }
        }
    }

    /// Numerator coefficients in the monic-denominator presentation.
    pub fn numerator(&self) -> Vec<Rational> {
        let lead = Rational::from(self.den.lc().cloned().unwrap_or_else(BigInt::one));
        let scale = self.content.clone() / &lead;
        if self.content.is_zero() {
            return Vec::new();
        }
        self.num.coeffs().iter().map(|c| Rational::from(c.clone()) * &scale).collect()
    }

    /// Monic denominator coefficients.
    pub fn denominator(&self) -> Vec<Rational> {
        let lead = Rational::from(self.den.lc().cloned().unwrap_or_else(BigInt::one));
        self.den.coeffs().iter().map(|c| Rational::from(c.clone()) / &lead).collect()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// `Some(q)` when the value is the constant `q`.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.content.is_zero() {
            return Some(Rational::zero());
        }
        (self.num.is_one() && self.den.is_one()).then(|| self.content.clone())
    }

    /// `f(λ) -> f(λ^m)`. Coprimality and primitivity survive the
    /// substitution, so no gcd is needed.
    pub fn compose_power(&self, m: usize) -> Self {
        RatFun { content: self.content.clone(), num: self.num.compose_power(m), den: self.den.compose_power(m) }
    }

    /// Value at a rational point, `None` at a pole.
    pub fn eval(&self, at: &Rational) -> Option<Rational> {
        let d = self.den.eval(at);
        if d.is_zero() {
            return None;
        }
        Some(self.content.clone() * &self.num.eval(at) / &d)
    }

    /// Degrees of numerator and denominator.
    pub fn degrees(&self) -> (usize, usize) {
        (self.num.degree().unwrap_or(0), self.den.degree().unwrap_or(0))
    }

    fn mul_ref(&self, other: &RatFun) -> RatFun {
        if self.content.is_zero() || other.content.is_zero() {
            return RatFun::zero();
        }
        let content = self.content.clone() * &other.content;
        if self.num.is_one() && self.den.is_one() {
            return RatFun { content, num: other.num.clone(), den: other.den.clone() };
        }
        if other.num.is_one() && other.den.is_one() {
            return RatFun { content, num: self.num.clone(), den: self.den.clone() };
        }
        let g1 = self.num.gcd(&other.den);
        let g2 = other.num.gcd(&self.den);
        let (n1, d2) = cancel(&self.num, &other.den, &g1);
        let (n2, d1) = cancel(&other.num, &self.den, &g2);
        RatFun { content, num: n1.mul(&n2), den: d1.mul(&d2) }
    }

    fn add_ref(&self, other: &RatFun) -> RatFun {
        if other.content.is_zero() {
            return self.clone();
        }
        if self.content.is_zero() {
            return other.clone();
        }
        if self.num == other.num && self.den == other.den {
            let content = self.content.clone() + &other.content;
            if content.is_zero() {
                return RatFun::zero();
            }
            return RatFun { content, num: self.num.clone(), den: self.den.clone() };
        }
        let g = shared_factor(&self.den, &other.den);
        let a_co = self.den.div_exact(&g).expect("gcd divides");
        let b_co = other.den.div_exact(&g).expect("gcd divides");
        // content_a*Na/Da + content_b*Nb/Db over the integers
        let (pa, qa) = (self.content.numer(), self.content.denom());
        let (pb, qb) = (other.content.numer(), other.content.denom());
        let left = self.num.mul(&b_co).scale(&(pa * qb));
        let right = other.num.mul(&a_co).scale(&(pb * qa));
        let sum = left.add(&right);
        if sum.is_zero() {
            return RatFun::zero();
        }
        let (cont, prim) = sum.primitive_split();
        let content = Rational::from(cont) / &Rational::from(qa * qb);
        let den = self.den.mul(&b_co);
        if g.is_one() {
            return RatFun { content, num: prim, den };
        }
        let h = prim.gcd(&g);
        if h.is_one() {
            RatFun { content, num: prim, den }
        } else {
            RatFun {
                content,
                num: prim.div_exact(&h).expect("gcd divides"),
                den: den.div_exact(&h).expect("gcd divides"),
            }
        }
    }
}

/// Clears denominators and splits off the content: `coeffs = c * p` with
/// `p` primitive with positive leading coefficient.
fn split_rational_poly(coeffs: &[Rational]) -> (Rational, IntPoly) {
    let mut l = BigInt::one();
    for c in coeffs {
        l = l.lcm(c.denom());
    }
    let ints: Vec<BigInt> = coeffs.iter().map(|c| c.numer() * (&l / c.denom())).collect();
    let poly = IntPoly::new(ints);
    if poly.is_zero() {
        return (Rational::zero(), IntPoly::zero());
    }
    let (cont, prim) = poly.primitive_split();
    (Rational::from(cont) / &Rational::from(l), prim)
}

fn cancel(a: &IntPoly, b: &IntPoly, g: &IntPoly) -> (IntPoly, IntPoly) {
    if g.is_one() {
        (a.clone(), b.clone())
    } else {
        (a.div_exact(g).expect("gcd divides"), b.div_exact(g).expect("gcd divides"))
    }
}

/// gcd of two primitive denominators, trying the cheap divisibility cases
/// before the general algorithm.
fn shared_factor(a: &IntPoly, b: &IntPoly) -> IntPoly {
    if a.is_one() || b.is_one() {
        return IntPoly::one();
    }
    if a == b {
        return a.clone();
    }
    let (small, big) = if a.degree() <= b.degree() { (a, b) } else { (b, a) };
    if big.div_exact(small).is_some() {
        return small.clone();
    }
    a.gcd(b)
}

impl Ring for RatFun {
    fn zero() -> Self {
        RatFun { content: Rational::zero(), num: IntPoly::one(), den: IntPoly::one() }
    }

    fn one() -> Self {
        RatFun::from_rational(&Rational::one())
    }

    fn is_zero(&self) -> bool {
        self.content.is_zero()
    }

    fn from_rational(q: &Rational) -> Self {
        RatFun { content: q.clone(), num: IntPoly::one(), den: IntPoly::one() }
    }

    fn scale(&self, q: &Rational) -> Self {
        if q.is_zero() {
            return RatFun::zero();
        }
        RatFun { content: self.content.clone() * q, num: self.num.clone(), den: self.den.clone() }
    }
}

impl Field for RatFun {
    fn inv(&self) -> Option<Self> {
        let c = self.content.recip()?;
        Some(RatFun { content: c, num: self.den.clone(), den: self.num.clone() })
    }

    fn is_symbolic(&self) -> bool {
        true
    }

    fn subst_lambda_power(&self, m: u32) -> Option<Self> {
        Some(self.compose_power(m as usize))
    }
}

impl Add for RatFun {
    type Output = RatFun;
    fn add(self, rhs: RatFun) -> RatFun {
        self.add_ref(&rhs)
    }
}

impl<'a> Add<&'a RatFun> for RatFun {
    type Output = RatFun;
    fn add(self, rhs: &'a RatFun) -> RatFun {
        self.add_ref(rhs)
    }
}

impl<'a> AddAssign<&'a RatFun> for RatFun {
    fn add_assign(&mut self, rhs: &'a RatFun) {
        *self = self.add_ref(rhs);
    }
}

impl Sub for RatFun {
    type Output = RatFun;
    fn sub(self, rhs: RatFun) -> RatFun {
        self.add_ref(&-rhs)
    }
}

impl<'a> Sub<&'a RatFun> for RatFun {
    type Output = RatFun;
    fn sub(self, rhs: &'a RatFun) -> RatFun {
        self.add_ref(&-rhs.clone())
    }
}

impl<'a> SubAssign<&'a RatFun> for RatFun {
    fn sub_assign(&mut self, rhs: &'a RatFun) {
        *self = self.add_ref(&-rhs.clone());
    }
}

impl Mul for RatFun {
    type Output = RatFun;
    fn mul(self, rhs: RatFun) -> RatFun {
        self.mul_ref(&rhs)
    }
}

impl<'a> Mul<&'a RatFun> for RatFun {
    type Output = RatFun;
    fn mul(self, rhs: &'a RatFun) -> RatFun {
        self.mul_ref(rhs)
    }
}

impl<'a> MulAssign<&'a RatFun> for RatFun {
    fn mul_assign(&mut self, rhs: &'a RatFun) {
        *self = self.mul_ref(rhs);
    }
}

impl Div for RatFun {
    type Output = RatFun;
    /// Panics on division by zero.
    fn div(self, rhs: RatFun) -> RatFun {
        self.mul_ref(&rhs.inv().expect("division by zero in Q(λ)"))
    }
}

impl<'a> Div<&'a RatFun> for RatFun {
    type Output = RatFun;
    fn div(self, rhs: &'a RatFun) -> RatFun {
        self.mul_ref(&rhs.inv().expect("division by zero in Q(λ)"))
    }
}

impl Neg for RatFun {
    type Output = RatFun;
    fn neg(mut self) -> RatFun {
        self.content = -self.content;
        self
    }
}

pub(crate) fn fmt_poly(f: &mut fmt::Formatter<'_>, coeffs: &[Rational], var: &str) -> fmt::Result {
    let mut first = true;
    for (i, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let mag = c.abs();
        if first {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, "{}", if neg { " - " } else { " + " })?;
        }
        first = false;
        let unit = mag.is_one();
        match (i, unit) {
            (0, _) => write!(f, "{mag}")?,
            (1, true) => write!(f, "{var}")?,
            (1, false) => write!(f, "{mag}*{var}")?,
            (_, true) => write!(f, "{var}^{i}")?,
            (_, false) => write!(f, "{mag}*{var}^{i}")?,
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return fmt_poly(f, &self.numerator(), "λ");
        }
        write!(f, "(")?;
        fmt_poly(f, &self.numerator(), "λ")?;
        write!(f, ")/(")?;
        fmt_poly(f, &self.denominator(), "λ")?;
        write!(f, ")")
    }
}

impl fmt::Debug for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Serialize, Deserialize)]
struct RatFunRepr {
    num: Vec<Rational>,
    den: Vec<Rational>,
}

impl Serialize for RatFun {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        RatFunRepr { num: self.numerator(), den: self.denominator() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for RatFun {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let r = RatFunRepr::deserialize(d)?;
        RatFun::normalize(&r.num, &r.den).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qs(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| Rational::from(x)).collect()
    }

    #[test]
    fn normalize_cancels_gcd() {
        // (2λ+2)/(λ²+2λ+1) = 2/(λ+1)
        let f = RatFun::normalize(&qs(&[2, 2]), &qs(&[1, 2, 1])).unwrap();
        assert_eq!(f.numerator(), qs(&[2]));
        assert_eq!(f.denominator(), qs(&[1, 1]));
    }

    #[test]
    fn normalize_zero_and_monic() {
        let z = RatFun::normalize(&qs(&[0]), &qs(&[1, 1])).unwrap();
        assert!(z.is_zero());
        assert_eq!(z.numerator(), Vec::<Rational>::new());
        assert_eq!(z.denominator(), qs(&[1]));
        let f = RatFun::normalize(&qs(&[0, 3]), &qs(&[3])).unwrap();
        assert_eq!(f, RatFun::lambda());
        assert!(RatFun::normalize(&qs(&[1]), &qs(&[0, 0])).is_err());
    }

    #[test]
    fn negative_leading_denominator() {
        let f = RatFun::normalize(&qs(&[1]), &qs(&[1, -1])).unwrap();
        let g = RatFun::normalize(&qs(&[-1]), &qs(&[-1, 1])).unwrap();
        assert_eq!(f, g);
        assert_eq!(g.denominator(), qs(&[-1, 1]));
        assert_eq!(g.numerator(), qs(&[-1]));
    }

    #[test]
    fn apostol_genocchi_two() {
        // 2/(λ+1) - 2λ... check (λ+1)^-1 + λ(λ+1)^-1 = 1
        let l = RatFun::lambda();
        let inv = (l.clone() + RatFun::one()).inv().unwrap();
        let s = inv.clone() + &(l * &inv);
        assert_eq!(s, RatFun::one());
    }

    #[test]
    fn compose_power_and_eval() {
        let l = RatFun::lambda();
        let f = (l.clone() + RatFun::one()).inv().unwrap();
        let g = f.compose_power(3);
        assert_eq!(g.eval(&Rational::from(2i64)), Some(Rational::new(1, 9).unwrap()));
        assert_eq!(f.eval(&Rational::from(-1i64)), None);
    }

    #[test]
    fn display_is_readable() {
        let f = RatFun::normalize(&qs(&[0, -4]), &qs(&[1, 2, 1])).unwrap();
        assert_eq!(f.to_string(), "(-4*λ)/(λ^2 + 2*λ + 1)");
    }

    #[test]
    fn serde_round_trip() {
        let f = RatFun::normalize(&qs(&[3, 0, 1]), &qs(&[2, 5])).unwrap();
        let js = serde_json::to_string(&f).unwrap();
        assert_eq!(js, r#"{"num":["3/5","0","1/5"],"den":["2/5","1"]}"#);
        let back: RatFun = serde_json::from_str(&js).unwrap();
        assert_eq!(back, f);
    }
}

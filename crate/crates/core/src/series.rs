//! Truncated power series in `t`, stored as plain coefficients `c_0..c_{N-1}`.
//!
//! Generating functions in this crate are exponential: the quantity of
//! interest at index `n` is [`Series::egf_coeff`], i.e. `n! c_n`.

use serde::{Deserialize, Serialize};

use crate::algebra::{factorial, Field, Rational, Ring};
use crate::Error;

/// Precision used when callers do not ask for one.
pub const DEFAULT_PRECISION: usize = 33;

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(bound(serialize = "C: Serialize", deserialize = "C: Deserialize<'de> + Ring"))]
#[serde(try_from = "SeriesRepr<C>")]
pub struct Series<C> {
    precision: usize,
    coeffs: Vec<C>,
}

#[derive(Deserialize)]
struct SeriesRepr<C> {
    precision: usize,
    coeffs: Vec<C>,
}

impl<C: Ring> TryFrom<SeriesRepr<C>> for Series<C> {
    type Error = Error;

    fn try_from(r: SeriesRepr<C>) -> Result<Self, Error> {
        if r.coeffs.len() > r.precision {
            return Err(Error::OutOfPrecision { index: r.coeffs.len() - 1, precision: r.precision });
        }
        Ok(Series::new(r.coeffs, r.precision))
    }
}

fn inv_factorial(k: usize) -> Rational {
    Rational::from(factorial(k as u64)).recip().expect("factorial is nonzero")
}

impl<C: Ring> Series<C> {
    /// Truncates or zero-pads `coeffs` to exactly `precision` entries.
    pub fn new(mut coeffs: Vec<C>, precision: usize) -> Self {
        coeffs.truncate(precision);
        coeffs.resize(precision, C::zero());
        Series { precision, coeffs }
    }

    pub fn from_fn(precision: usize, f: impl Fn(usize) -> C) -> Self {
        Series { precision, coeffs: (0..precision).map(f).collect() }
    }

    /// Series whose `n`-th EGF coefficient is `values[n]`.
    pub fn from_egf(values: Vec<C>, precision: usize) -> Self {
        let coeffs = values.into_iter().enumerate().map(|(k, v)| v.scale(&inv_factorial(k))).collect();
        Series::new(coeffs, precision)
    }

    pub fn zero(precision: usize) -> Self {
        Series::new(Vec::new(), precision)
    }

    pub fn one(precision: usize) -> Self {
        Series::new(vec![C::one()], precision)
    }

    /// `c t^k`
    pub fn monomial(c: C, k: usize, precision: usize) -> Self {
        let mut s = Series::zero(precision);
        if k < precision {
            s.coeffs[k] = c;
        }
        s
    }

    /// `e^{a t} = Σ a^n t^n / n!`
    pub fn exp_linear(a: &C, precision: usize) -> Self {
        let mut coeffs = Vec::with_capacity(precision);
        let mut pw = C::one();
        for k in 0..precision {
            coeffs.push(pw.scale(&inv_factorial(k)));
            pw *= a;
        }
        Series { precision, coeffs }
    }

    /// `e^{a t^2}`
    pub fn exp_quadratic(a: &C, precision: usize) -> Self {
        Series::exp_linear(a, precision.div_ceil(2)).subst_square_to(precision)
    }

    pub fn precision(&self) -> usize {
        self.precision
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Result<&C, Error> {
        self.coeffs.get(k).ok_or(Error::OutOfPrecision { index: k, precision: self.precision })
    }

    /// `n! c_n`
    pub fn egf_coeff(&self, n: usize) -> Result<C, Error> {
        Ok(self.coeff(n)?.scale(&Rational::from(factorial(n as u64))))
    }

    /// `(n, n! c_n)` for every retained index.
    pub fn egf_table(&self) -> Vec<(usize, C)> {
        (0..self.precision).map(|n| (n, self.egf_coeff(n).expect("in range"))).collect()
    }

    /// Index of the first nonzero coefficient, `None` for the zero series.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.valuation().is_none()
    }

    pub fn truncate(&self, precision: usize) -> Self {
        Series::new(self.coeffs[..precision.min(self.precision)].to_vec(), precision.min(self.precision))
    }

    pub fn map<D: Ring>(&self, f: impl Fn(&C) -> D) -> Series<D> {
        Series { precision: self.precision, coeffs: self.coeffs.iter().map(f).collect() }
    }

    fn check(&self, other: &Self) -> Result<(), Error> {
        if self.precision == other.precision {
            Ok(())
        } else {
            Err(Error::PrecisionMismatch(self.precision, other.precision))
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, Error> {
        self.check(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.clone() + b).collect();
        Ok(Series { precision: self.precision, coeffs })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, Error> {
        self.check(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.clone() - b).collect();
        Ok(Series { precision: self.precision, coeffs })
    }

    pub fn neg(&self) -> Self {
        self.map(|c| -c.clone())
    }

    pub fn mul_scalar(&self, c: &C) -> Self {
        self.map(|a| a.clone() * c)
    }

    pub fn scale(&self, q: &Rational) -> Self {
        self.map(|a| a.scale(q))
    }

    /// Cauchy product truncated to the common precision.
    pub fn mul(&self, other: &Self) -> Result<Self, Error> {
        self.check(other)?;
        let n = self.precision;
        let mut out = vec![C::zero(); n];
        let (va, vb) = match (self.valuation(), other.valuation()) {
            (Some(a), Some(b)) => (a, b),
            _ => return Ok(Series::zero(n)),
        };
        for i in va..n {
            let a = &self.coeffs[i];
            if a.is_zero() {
                continue;
            }
            for j in vb..n - i {
                let b = &other.coeffs[j];
                if !b.is_zero() {
                    out[i + j] += &(a.clone() * b);
                }
            }
        }
        Ok(Series { precision: n, coeffs: out })
    }

    /// `a^l` by repeated squaring, `a^0 = 1`.
    pub fn pow(&self, mut l: u32) -> Self {
        let mut acc = Series::one(self.precision);
        let mut base = self.clone();
        while l > 0 {
            if l & 1 == 1 {
                acc = acc.mul(&base).expect("same precision");
            }
            l >>= 1;
            if l > 0 {
                base = base.mul(&base).expect("same precision");
            }
        }
        acc
    }

    /// `f(t) -> f(m t)`: `c_k -> m^k c_k`.
    pub fn subst_scale(&self, m: u64) -> Self {
        self.subst_scale_by_rational(&Rational::from(m))
    }

    pub fn subst_scale_by_rational(&self, m: &Rational) -> Self {
        let mut pw = Rational::one();
        let mut coeffs = Vec::with_capacity(self.precision);
        for c in &self.coeffs {
            coeffs.push(c.scale(&pw));
            pw *= m;
        }
        Series { precision: self.precision, coeffs }
    }

    /// `f(t) -> f(c t)` for a coefficient-field scalar `c`.
    pub fn subst_scale_by(&self, c: &C) -> Self {
        let mut pw = C::one();
        let mut coeffs = Vec::with_capacity(self.precision);
        for a in &self.coeffs {
            coeffs.push(a.clone() * &pw);
            pw *= c;
        }
        Series { precision: self.precision, coeffs }
    }

    /// `f(t) -> f(t^2)` at the same precision.
    pub fn subst_square(&self) -> Self {
        self.subst_square_to(self.precision)
    }

    fn subst_square_to(&self, precision: usize) -> Self {
        let mut out = vec![C::zero(); precision];
        for (k, c) in self.coeffs.iter().enumerate() {
            if 2 * k < precision {
                out[2 * k] = c.clone();
            }
        }
        Series { precision, coeffs: out }
    }

    /// `t d/dt`: `c_k -> k c_k`.
    pub fn t_derivative(&self) -> Self {
        let coeffs = self.coeffs.iter().enumerate().map(|(k, c)| c.scale(&Rational::from(k as u64))).collect();
        Series { precision: self.precision, coeffs }
    }

    /// Multiplication by `t^k`, keeping the precision.
    pub fn mul_t_power(&self, k: usize) -> Self {
        let mut out = vec![C::zero(); self.precision];
        for (i, c) in self.coeffs.iter().enumerate() {
            if i + k < self.precision {
                out[i + k] = c.clone();
            }
        }
        Series { precision: self.precision, coeffs: out }
    }
}

impl<C: Field> Series<C> {
    /// Exact quotient `a / b`. The common factor `t^v`, `v` the valuation of
    /// `b`, is cancelled first, so the result has precision `N - v`.
    pub fn div(&self, b: &Self) -> Result<Self, Error> {
        self.check(b)?;
        let v = b.valuation().ok_or(Error::DivisionByZero)?;
        if let Some(va) = self.valuation() {
            if va < v {
                return Err(Error::NonSeriesQuotient { num: va, den: v });
            }
        }
        let n = self.precision - v;
        let num = &self.coeffs[v..];
        let den = &b.coeffs[v..];
        let inv = den[0].inv().expect("leading coefficient is nonzero");
        let mut q: Vec<C> = Vec::with_capacity(n);
        for k in 0..n {
            let mut acc = num[k].clone();
            for j in 1..=k {
                if !den[j].is_zero() && !q[k - j].is_zero() {
                    acc -= &(q[k - j].clone() * &den[j]);
                }
            }
            q.push(acc * &inv);
        }
        Ok(Series { precision: n, coeffs: q })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{q, RatFun};

    type S = Series<Rational>;

    fn r(n: i64) -> Rational {
        Rational::from(n)
    }

    fn genocchi_kernel(n: usize) -> S {
        let two_t = S::monomial(r(2), 1, n);
        let den = S::exp_linear(&r(1), n).add(&S::one(n)).unwrap();
        two_t.div(&den).unwrap()
    }

    #[test]
    fn products() {
        let a = S::new(vec![r(1), r(1)], 3);
        let b = S::new(vec![r(1), r(-1)], 3);
        assert_eq!(a.mul(&b).unwrap(), S::new(vec![r(1), r(0), r(-1)], 3));
        let e = S::exp_linear(&r(1), 8);
        let e_inv = S::exp_linear(&r(-1), 8);
        assert_eq!(e.mul(&e_inv).unwrap(), S::one(8));
        assert!(a.mul(&S::one(4)).is_err());
    }

    #[test]
    fn kernel_times_denominator_is_numerator() {
        let g = genocchi_kernel(8);
        let half_den = S::exp_linear(&r(1), 8).add(&S::one(8)).unwrap().scale(&q("1/2"));
        assert_eq!(g.mul(&half_den).unwrap(), S::monomial(r(1), 1, 8));
    }

    #[test]
    fn bernoulli_by_valuation_aware_division() {
        let t = S::monomial(r(1), 1, 6);
        let den = S::exp_linear(&r(1), 6).sub(&S::one(6)).unwrap();
        let b = t.div(&den).unwrap();
        assert_eq!(b.precision(), 5);
        assert_eq!(b.egf_coeff(0).unwrap(), r(1));
        assert_eq!(b.egf_coeff(1).unwrap(), q("-1/2"));
        assert_eq!(b.egf_coeff(2).unwrap(), q("1/6"));
        assert_eq!(b.egf_coeff(4).unwrap(), q("-1/30"));
    }

    #[test]
    fn division_errors() {
        let one = S::one(4);
        let t = S::monomial(r(1), 1, 4);
        assert_eq!(one.div(&t), Err(Error::NonSeriesQuotient { num: 0, den: 1 }));
        assert_eq!(one.div(&S::zero(4)), Err(Error::DivisionByZero));
        assert_eq!(S::zero(4).div(&t).unwrap(), S::zero(3));
        let a = S::exp_linear(&r(3), 5);
        assert_eq!(a.div(&S::one(5)).unwrap(), a);
    }

    #[test]
    fn symbolic_division() {
        let lam = RatFun::lambda();
        let two_t = Series::<RatFun>::monomial(RatFun::from_int(2), 1, 3);
        let den = Series::exp_linear(&RatFun::one(), 3).mul_scalar(&lam).add(&Series::one(3)).unwrap();
        let g = two_t.div(&den).unwrap();
        let lp1 = lam.clone() + &RatFun::one();
        assert_eq!(g.coeffs()[1], RatFun::from_int(2) / &lp1);
        assert_eq!(g.coeffs()[2], -(RatFun::from_int(2) * &lam) / &(lp1.clone() * &lp1));
        assert_eq!(g.egf_coeff(2).unwrap(), -(RatFun::from_int(4) * &lam) / &(lp1.clone() * &lp1));
    }

    #[test]
    fn genocchi_numbers_and_powers() {
        let g = genocchi_kernel(13);
        let vals: Vec<Rational> = (0..13).map(|n| g.egf_coeff(n).unwrap()).collect();
        let expected = [0, 1, -1, 0, 1, 0, -3, 0, 17, 0, -155, 0, 2073];
        assert_eq!(vals, expected.iter().map(|&v| r(v)).collect::<Vec<_>>());
        let g2 = genocchi_kernel(5).pow(2);
        assert_eq!(g2.egf_coeff(2).unwrap(), r(2));
        assert_eq!(g2.egf_coeff(3).unwrap(), r(-6));
        assert_eq!(g2.egf_coeff(4).unwrap(), r(6));
        assert_eq!(g.pow(0), S::one(13));
        let a = S::new(vec![r(1), r(1)], 4);
        assert_eq!(a.pow(2), S::new(vec![r(1), r(2), r(1)], 4));
    }

    #[test]
    fn substitutions() {
        assert_eq!(S::exp_linear(&r(1), 6).subst_scale(2), S::exp_linear(&r(2), 6));
        assert_eq!(S::monomial(r(1), 1, 3).subst_scale(3), S::monomial(r(3), 1, 3));
        let g = genocchi_kernel(6);
        let g2 = g.subst_scale(2);
        for n in 0..6 {
            let pow2 = Rational::from(1u64 << n);
            assert_eq!(g2.egf_coeff(n).unwrap(), pow2 * &g.egf_coeff(n).unwrap());
        }
        assert_eq!(S::new(vec![r(1), r(1)], 4).subst_square(), S::new(vec![r(1), r(0), r(1)], 4));
        assert_eq!(S::exp_linear(&r(1), 5).subst_square(), S::new(vec![r(1), r(0), r(1), r(0), q("1/2")], 5));
        assert_eq!(S::exp_quadratic(&r(1), 5), S::exp_linear(&r(1), 5).subst_square());
        assert_eq!(S::exp_quadratic(&r(3), 6), S::exp_linear(&r(3), 6).subst_square());
    }

    #[test]
    fn egf_bounds_and_serde() {
        let one = S::one(6);
        assert_eq!(one.egf_coeff(5).unwrap(), r(0));
        assert_eq!(one.egf_coeff(6), Err(Error::OutOfPrecision { index: 6, precision: 6 }));
        let s = S::new(vec![r(1), q("-1/2")], 3);
        let js = serde_json::to_string(&s).unwrap();
        assert_eq!(js, r#"{"precision":3,"coeffs":["1","-1/2","0"]}"#);
        assert_eq!(serde_json::from_str::<S>(&js).unwrap(), s);
        assert!(serde_json::from_str::<S>(r#"{"precision":1,"coeffs":["1","2"]}"#).is_err());
        assert_eq!(S::from_egf(vec![r(1), r(1), r(1)], 3), S::exp_linear(&r(1), 3));
    }
}

//! Polynomial families built from their exponential generating functions.
//!
//! Every family here has the shape `K(t) e^{x c t}` for a scalar kernel
//! series `K`, so row `n` is the Appell expansion
//! `Σ_k C(n,k) K_k (c x)^{n-k}` with `K_k` the EGF coefficients of `K`.
//! The constants `a, b, c` of the three-parameter families enter only
//! through their logarithms.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::algebra::{binomial, factorial, Field, Rational, Ring, XPoly};
use crate::series::{Series, DEFAULT_PRECISION};
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Genocchi,
    UnsignedGenocchi,
    Bernoulli,
    Euler,
    ApostolGenocchi,
    ApostolBernoulli,
    GenocchiAbc,
    LuoBernoulliAbc,
    LuoEulerAb,
    HermiteGenocchi,
    HermiteGenocchiAb,
    TwoVarGenocchi,
}

impl Family {
    pub const ALL: [Family; 12] = [
        Family::Genocchi,
        Family::UnsignedGenocchi,
        Family::Bernoulli,
        Family::Euler,
        Family::ApostolGenocchi,
        Family::ApostolBernoulli,
        Family::GenocchiAbc,
        Family::LuoBernoulliAbc,
        Family::LuoEulerAb,
        Family::HermiteGenocchi,
        Family::HermiteGenocchiAb,
        Family::TwoVarGenocchi,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Genocchi => "genocchi",
            Family::UnsignedGenocchi => "unsigned-genocchi",
            Family::Bernoulli => "bernoulli",
            Family::Euler => "euler",
            Family::ApostolGenocchi => "apostol-genocchi",
            Family::ApostolBernoulli => "apostol-bernoulli",
            Family::GenocchiAbc => "genocchi-abc",
            Family::LuoBernoulliAbc => "luo-bernoulli-abc",
            Family::LuoEulerAb => "luo-euler-ab",
            Family::HermiteGenocchi => "hermite-genocchi",
            Family::HermiteGenocchiAb => "hermite-genocchi-ab",
            Family::TwoVarGenocchi => "two-var-genocchi",
        }
    }

    pub fn uses_lambda(self) -> bool {
        matches!(
            self,
            Family::ApostolGenocchi
                | Family::ApostolBernoulli
                | Family::GenocchiAbc
                | Family::HermiteGenocchi
                | Family::HermiteGenocchiAb
                | Family::TwoVarGenocchi
        )
    }

    pub fn uses_logs(self) -> bool {
        matches!(self, Family::GenocchiAbc | Family::LuoBernoulliAbc | Family::LuoEulerAb)
    }

    /// Families whose kernel may be raised to an arbitrary order.
    pub fn has_order(self) -> bool {
        matches!(
            self,
            Family::Genocchi
                | Family::Bernoulli
                | Family::Euler
                | Family::ApostolGenocchi
                | Family::ApostolBernoulli
                | Family::GenocchiAbc
                | Family::TwoVarGenocchi
        )
    }

    /// Families that are number sequences rather than polynomials in `x`.
    pub fn is_scalar(self) -> bool {
        matches!(
            self,
            Family::UnsignedGenocchi | Family::LuoEulerAb | Family::HermiteGenocchi | Family::HermiteGenocchiAb
        )
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Family::ALL.into_iter().find(|f| f.name() == s).ok_or_else(|| Error::Parse(format!("unknown family {s:?}")))
    }
}

/// `ln a`, `ln b`, `ln c` as exact field elements.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Logs<F> {
    pub la: F,
    pub lb: F,
    pub lc: F,
}

impl<F: Ring> Logs<F> {
    pub fn new(la: F, lb: F, lc: F) -> Self {
        Logs { la, lb, lc }
    }

    /// `a = 1`, `b = c = e`.
    pub fn classical() -> Self {
        Logs { la: F::zero(), lb: F::one(), lc: F::one() }
    }
}

/// Second variable `y` of the two-variable family and its scale `p`; the
/// table is built at `p y`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Aux<F> {
    pub y: F,
    pub p: F,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(bound(serialize = "F: Serialize", deserialize = "F: Deserialize<'de>"))]
pub struct FamilySpec<F> {
    pub family: Family,
    pub order: u32,
    pub lambda: F,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub logs: Option<Logs<F>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub aux: Option<Aux<F>>,
    /// The scalars `a, b` of the Hermite `ab` form (actual values, not logs).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub scales: Option<(F, F)>,
    pub max_n: usize,
}

impl<F: Field> FamilySpec<F> {
    pub fn new(family: Family, max_n: usize) -> Self {
        FamilySpec { family, order: 1, lambda: F::one(), logs: None, aux: None, scales: None, max_n }
    }

    pub fn with_order(mut self, order: u32) -> Self {
        self.order = order;
        self
    }

    pub fn with_lambda(mut self, lambda: F) -> Self {
        self.lambda = lambda;
        self
    }

    pub fn with_logs(mut self, la: F, lb: F, lc: F) -> Self {
        self.logs = Some(Logs::new(la, lb, lc));
        self
    }

    pub fn with_aux(mut self, y: F, p: F) -> Self {
        self.aux = Some(Aux { y, p });
        self
    }

    pub fn with_scales(mut self, a: F, b: F) -> Self {
        self.scales = Some((a, b));
        self
    }

    fn invalid(&self, what: &str) -> Error {
        Error::InvalidParameter(format!("{}: {what}", self.family))
    }

    pub fn validate(&self, precision: usize) -> Result<(), Error> {
        let fam = self.family;
        if self.max_n >= precision {
            return Err(Error::Config(format!("max_n {} needs precision above {precision}", self.max_n)));
        }
        if !fam.has_order() && self.order != 1 {
            return Err(self.invalid("order is fixed at 1"));
        }
        if fam.uses_logs() != self.logs.is_some() {
            return Err(self.invalid(if fam.uses_logs() {
                "log parameters are required"
            } else {
                "takes no log parameters"
            }));
        }
        if self.aux.is_some() && fam != Family::TwoVarGenocchi {
            return Err(self.invalid("takes no (y, p) parameters"));
        }
        match (fam == Family::HermiteGenocchiAb, &self.scales) {
            (true, None) => return Err(self.invalid("scales a, b are required")),
            (true, Some((a, b))) if a.is_zero() || b.is_zero() => {
                return Err(Error::SingularParameter("a and b must be nonzero".into()))
            }
            (false, Some(_)) => return Err(self.invalid("takes no scales a, b")),
            _ => {}
        }
        if fam == Family::LuoBernoulliAbc {
            let logs = self.logs.as_ref().expect("checked above");
            if (logs.lb.clone() - &logs.la).is_zero() {
                return Err(Error::SingularParameter("ln a = ln b makes b^t - a^t vanish to second order".into()));
            }
        }
        if fam.uses_lambda() && fam != Family::ApostolBernoulli {
            check_genocchi_lambda(&self.lambda)?;
        }
        Ok(())
    }

    fn effective_lambda(&self) -> F {
        if self.family.uses_lambda() {
            self.lambda.clone()
        } else {
            F::one()
        }
    }
}

fn check_genocchi_lambda<F: Field>(lambda: &F) -> Result<(), Error> {
    if (lambda.clone() + &F::one()).is_zero() {
        Err(Error::SingularParameter(format!("λ = {lambda} makes λe^t + 1 vanish at t = 0")))
    } else {
        Ok(())
    }
}

/// `2t / (λ e^{lb t} + e^{la t})` to `precision` coefficients.
pub fn genocchi_kernel<F: Field>(lambda: &F, la: &F, lb: &F, precision: usize) -> Result<Series<F>, Error> {
    check_genocchi_lambda(lambda)?;
    let p = precision;
    let den = Series::exp_linear(lb, p).mul_scalar(lambda).add(&Series::exp_linear(la, p))?;
    Series::monomial(F::from_int(2), 1, p).div(&den)
}

/// `t / (λ e^t - 1)`; at `λ = 1` the denominator has valuation one and the
/// quotient is the classical Bernoulli kernel.
pub fn apostol_bernoulli_kernel<F: Field>(lambda: &F, precision: usize) -> Result<Series<F>, Error> {
    let p = precision + 1;
    let den = Series::exp_linear(&F::one(), p).mul_scalar(lambda).sub(&Series::one(p))?;
    Ok(Series::monomial(F::one(), 1, p).div(&den)?.truncate(precision))
}

/// `2 / (e^{lb t} + e^{la t})`
pub fn euler_kernel<F: Field>(la: &F, lb: &F, precision: usize) -> Result<Series<F>, Error> {
    let den = Series::exp_linear(lb, precision).add(&Series::exp_linear(la, precision))?;
    Series::constant(F::from_int(2), precision).div(&den)
}

/// `t / (e^{lb t} - e^{la t})`
pub fn luo_bernoulli_kernel<F: Field>(la: &F, lb: &F, precision: usize) -> Result<Series<F>, Error> {
    if (lb.clone() - la).is_zero() {
        return Err(Error::SingularParameter("ln a = ln b".into()));
    }
    let p = precision + 1;
    let den = Series::exp_linear(lb, p).sub(&Series::exp_linear(la, p))?;
    Ok(Series::monomial(F::one(), 1, p).div(&den)?.truncate(precision))
}

impl<C: Ring> Series<C> {
    pub fn constant(c: C, precision: usize) -> Self {
        Series::monomial(c, 0, precision)
    }
}

/// Rows `n = 0..rows` of the Appell sequence `K(t) e^{c x t}`.
pub fn appell_rows<F: Field>(kernel: &Series<F>, c: &F, rows: usize) -> Result<Vec<XPoly<F>>, Error> {
    let g: Vec<F> = (0..rows).map(|k| kernel.egf_coeff(k)).collect::<Result<_, _>>()?;
    let mut cpow = vec![F::one()];
    for i in 1..rows {
        let next = cpow[i - 1].clone() * c;
        cpow.push(next);
    }
    Ok((0..rows)
        .map(|n| {
            let coeffs = (0..=n)
                .map(|j| {
                    let gk = &g[n - j];
                    if gk.is_zero() || cpow[j].is_zero() {
                        F::zero()
                    } else {
                        (gk.clone() * &cpow[j]).scale(&binomial(n as u64, j as u64))
                    }
                })
                .collect();
            XPoly::new(coeffs)
        })
        .collect())
}

#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(bound(serialize = "F: Serialize", deserialize = "F: Deserialize<'de> + Ring"))]
pub struct PolyTable<F> {
    pub spec: FamilySpec<F>,
    pub rows: Vec<XPoly<F>>,
}

impl<F: Ring> fmt::Debug for PolyTable<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PolyTable").field("spec", &self.spec).field("rows", &self.rows).finish()
    }
}

impl<F: Field> PolyTable<F> {
    pub fn build(spec: &FamilySpec<F>) -> Result<Self, Error> {
        PolyTable::build_with_precision(spec, DEFAULT_PRECISION.max(spec.max_n + 1))
    }

    pub fn build_with_precision(spec: &FamilySpec<F>, precision: usize) -> Result<Self, Error> {
        spec.validate(precision)?;
        let (kernel, c) = family_kernel(spec)?;
        let rows = appell_rows(&kernel, &c, spec.max_n + 1)?;
        Ok(PolyTable { spec: spec.clone(), rows })
    }

    /// Builds the Hermite and two-variable families from their finite
    /// convolution sums over classical rows instead of the generating
    /// function.
    pub fn build_by_sum(spec: &FamilySpec<F>) -> Result<Self, Error> {
        spec.validate(DEFAULT_PRECISION.max(spec.max_n + 1))?;
        let rows = match spec.family {
            Family::HermiteGenocchi => {
                hermite_sum(&spec.lambda, &F::one(), &F::one(), spec.max_n)?.into_iter().map(XPoly::constant).collect()
            }
            Family::HermiteGenocchiAb => {
                let (a, b) = spec.scales.clone().expect("validated");
                let ab_inv = (a.clone() * &b).inv().expect("validated nonzero");
                hermite_sum(&spec.lambda, &a, &b, spec.max_n)?
                    .into_iter()
                    .map(|v| XPoly::constant(v * &ab_inv))
                    .collect()
            }
            Family::TwoVarGenocchi => two_var_sum(spec)?,
            other => return Err(Error::InvalidParameter(format!("{other} has no convolution-sum form"))),
        };
        Ok(PolyTable { spec: spec.clone(), rows })
    }

    pub fn row(&self, n: usize) -> Result<&XPoly<F>, Error> {
        self.rows.get(n).ok_or(Error::OutOfPrecision { index: n, precision: self.rows.len() })
    }

    /// Row values at `x = 0`.
    pub fn numbers(&self) -> Vec<F> {
        self.rows.iter().map(|r| r.coeff(0)).collect()
    }
}

/// The scalar kernel `K` and the `x`-rate `c` with `K(t) e^{c x t}` the
/// generating function of `spec`.
fn family_kernel<F: Field>(spec: &FamilySpec<F>) -> Result<(Series<F>, F), Error> {
    let p = spec.max_n + 1;
    let l = spec.order;
    let lambda = spec.effective_lambda();
    let one = F::one();
    let zero = F::zero();
    let out = match spec.family {
        Family::Genocchi | Family::ApostolGenocchi => (genocchi_kernel(&lambda, &zero, &one, p)?.pow(l), one),
        Family::Bernoulli | Family::ApostolBernoulli => (apostol_bernoulli_kernel(&lambda, p)?.pow(l), one),
        Family::Euler => (euler_kernel(&zero, &one, p)?.pow(l), one),
        Family::GenocchiAbc => {
            let lg = spec.logs.as_ref().expect("validated");
            (genocchi_kernel(&lambda, &lg.la, &lg.lb, p)?.pow(l), lg.lc.clone())
        }
        Family::LuoBernoulliAbc => {
            let lg = spec.logs.as_ref().expect("validated");
            (luo_bernoulli_kernel(&lg.la, &lg.lb, p)?, lg.lc.clone())
        }
        Family::LuoEulerAb => {
            let lg = spec.logs.as_ref().expect("validated");
            (euler_kernel(&lg.la, &lg.lb, p)?, zero)
        }
        Family::UnsignedGenocchi => {
            let vals = unsigned_genocchi(spec.max_n);
            (Series::from_egf(vals.iter().map(F::from_rational).collect(), p), zero)
        }
        Family::HermiteGenocchi => (hermite_kernel(&lambda, &one, &one, p)?, zero),
        Family::HermiteGenocchiAb => {
            let (a, b) = spec.scales.clone().expect("validated");
            let ab_inv = (a.clone() * &b).inv().expect("validated nonzero");
            (hermite_kernel(&lambda, &a, &b, p)?.mul_scalar(&ab_inv), zero)
        }
        Family::TwoVarGenocchi => {
            let y = spec.aux.as_ref().map_or_else(F::zero, |a| a.y.clone() * &a.p);
            let k = genocchi_kernel(&lambda, &zero, &one, p)?.pow(l);
            (k.mul(&Series::exp_quadratic(&y, p))?, one)
        }
    };
    Ok(out)
}

/// `g(a t) g(b t^2)` with `g = 2t/(λe^t + 1)`; at `a = b = 1` this is
/// `4t^3 / ((λe^t + 1)(λe^{t^2} + 1))`.
fn hermite_kernel<F: Field>(lambda: &F, a: &F, b: &F, p: usize) -> Result<Series<F>, Error> {
    let g = genocchi_kernel(lambda, &F::zero(), &F::one(), p)?;
    g.subst_scale_by(a).mul(&g.subst_scale_by(b).subst_square())
}

/// `Σ_s n!/(s!(n-2s)!) G_{n-2s}(λ) G_s(λ) a^{n-2s} b^s`
fn hermite_sum<F: Field>(lambda: &F, a: &F, b: &F, max_n: usize) -> Result<Vec<F>, Error> {
    let g = genocchi_kernel(lambda, &F::zero(), &F::one(), max_n + 1)?;
    let gn: Vec<F> = (0..=max_n).map(|k| g.egf_coeff(k)).collect::<Result<_, _>>()?;
    Ok((0..=max_n)
        .map(|n| {
            let mut acc = F::zero();
            for s in 0..=n / 2 {
                let w = hermite_weight(n, s);
                let term = gn[n - 2 * s].clone() * &gn[s] * &a.pow((n - 2 * s) as u32) * &b.pow(s as u32);
                acc += &term.scale(&w);
            }
            acc
        })
        .collect())
}

/// `n! / (s! (n-2s)!)`
fn hermite_weight(n: usize, s: usize) -> Rational {
    Rational::from(factorial(n as u64)) / Rational::from(factorial(s as u64) * factorial((n - 2 * s) as u64))
}

/// `G_n(x, y) = Σ_s n!/(s!(n-2s)!) y^s G_{n-2s}(x)` at `y -> p y`.
fn two_var_sum<F: Field>(spec: &FamilySpec<F>) -> Result<Vec<XPoly<F>>, Error> {
    let base =
        FamilySpec::new(Family::ApostolGenocchi, spec.max_n).with_order(spec.order).with_lambda(spec.lambda.clone());
    let rows = PolyTable::build(&base)?.rows;
    let y = spec.aux.as_ref().map_or_else(F::zero, |a| a.y.clone() * &a.p);
    Ok(heat_rows(&rows, &y))
}

/// Rows of `P(x, t) e^{y t^2}` from the rows of `P(x, t)`:
/// `Σ_s n!/(s!(n-2s)!) y^s P_{n-2s}(x)`.
pub fn heat_rows<F: Ring>(rows: &[XPoly<F>], y: &F) -> Vec<XPoly<F>> {
    (0..rows.len())
        .map(|n| {
            let mut acc = XPoly::zero();
            for s in 0..=n / 2 {
                let w = y.pow(s as u32).scale(&hermite_weight(n, s));
                acc += &rows[n - 2 * s].mul_scalar(&w);
            }
            acc
        })
        .collect()
}

pub fn genocchi_table(max_n: usize) -> Result<PolyTable<Rational>, Error> {
    PolyTable::build(&FamilySpec::new(Family::Genocchi, max_n))
}

pub fn apostol_genocchi_table<F: Field>(l: u32, lambda: F, max_n: usize) -> Result<PolyTable<F>, Error> {
    PolyTable::build(&FamilySpec::new(Family::ApostolGenocchi, max_n).with_order(l).with_lambda(lambda))
}

pub fn apostol_bernoulli_table<F: Field>(l: u32, lambda: F, max_n: usize) -> Result<PolyTable<F>, Error> {
    PolyTable::build(&FamilySpec::new(Family::ApostolBernoulli, max_n).with_order(l).with_lambda(lambda))
}

pub fn euler_table<F: Field>(l: u32, max_n: usize) -> Result<PolyTable<F>, Error> {
    PolyTable::build(&FamilySpec::new(Family::Euler, max_n).with_order(l))
}

pub fn bernoulli_table<F: Field>(l: u32, max_n: usize) -> Result<PolyTable<F>, Error> {
    PolyTable::build(&FamilySpec::new(Family::Bernoulli, max_n).with_order(l))
}

pub fn genocchi_abc_table<F: Field>(l: u32, lambda: F, logs: Logs<F>, max_n: usize) -> Result<PolyTable<F>, Error> {
    let spec = FamilySpec::new(Family::GenocchiAbc, max_n)
        .with_order(l)
        .with_lambda(lambda)
        .with_logs(logs.la, logs.lb, logs.lc);
    PolyTable::build(&spec)
}

/// `G_{2n}` from `t tan(t/2) = t sin(t/2) / cos(t/2)`, all entries
/// nonnegative, odd indices zero.
pub fn unsigned_genocchi(max_n: usize) -> Vec<Rational> {
    let p = max_n + 1;
    let half = Rational::new(1, 2).expect("nonzero");
    // sin and cos at t/2, alternating-sign halves of e^{t/2}
    let e = Series::exp_linear(&half, p);
    let sin = Series::from_fn(p, |k| match k % 4 {
        1 => e.coeffs()[k].clone(),
        3 => -e.coeffs()[k].clone(),
        _ => Rational::zero(),
    });
    let cos = Series::from_fn(p, |k| match k % 4 {
        0 => e.coeffs()[k].clone(),
        2 => -e.coeffs()[k].clone(),
        _ => Rational::zero(),
    });
    let tan = sin.div(&cos).expect("cos(0) = 1");
    let s = tan.mul_t_power(1);
    (0..p).map(|n| s.egf_coeff(n).expect("in range")).collect()
}

/// EGF coefficients of `-t tanh(t/2) = -t (e^t - 1)/(e^t + 1)`.
pub fn tanh_genocchi(max_n: usize) -> Vec<Rational> {
    let p = max_n + 1;
    let e = Series::exp_linear(&Rational::one(), p);
    let q = e.sub(&Series::one(p)).and_then(|n| n.div(&e.add(&Series::one(p))?)).expect("unit denominator");
    let s = q.mul_t_power(1).neg();
    (0..p).map(|n| s.egf_coeff(n).expect("in range")).collect()
}

/// Which sign convention a sequence uses for `E_{2k}` or `G_{2n}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SignConvention {
    /// `sech` Euler numbers (`E_2 = -1`) and signed Genocchi numbers (`G_2 = -1`).
    Signed,
    /// secant Euler numbers and tangent-EGF Genocchi numbers, all nonnegative.
    Unsigned,
}

/// Euler numbers `E_0..E_{max_n}` from `sech t = 2e^t / (e^{2t} + 1)`, or
/// their absolute values.
pub fn euler_numbers(max_n: usize, convention: SignConvention) -> Vec<Rational> {
    let p = max_n + 1;
    let two = Rational::from(2i64);
    let num = Series::exp_linear(&Rational::one(), p).scale(&two);
    let den = Series::exp_linear(&two, p).add(&Series::one(p)).expect("same precision");
    let sech = num.div(&den).expect("unit denominator");
    (0..p)
        .map(|n| {
            let v = sech.egf_coeff(n).expect("in range");
            match convention {
                SignConvention::Signed => v,
                SignConvention::Unsigned => v.abs(),
            }
        })
        .collect()
}

/// `Σ_{k<n} (-1)^{n-k-1} (n-k) C(2n,2k) E_{2k} / 2^{2n-2}` with the Euler
/// numbers taken in `convention`.
pub fn genocchi_from_euler(n: usize, convention: SignConvention) -> Result<Rational, Error> {
    if n == 0 {
        return Err(Error::InvalidParameter("the Euler-number formula needs n >= 1".into()));
    }
    let e = euler_numbers(2 * n, convention);
    let mut acc = Rational::zero();
    for k in 0..n {
        let mut term = Rational::from((n - k) as u64) * &binomial(2 * n as u64, 2 * k as u64) * &e[2 * k];
        if (n - k - 1) % 2 == 1 {
            term = -term;
        }
        acc += &term;
    }
    let scale = Rational::from(num_bigint::BigInt::from(1u8) << (2 * n - 2));
    Ok(acc / scale)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{q, RatFun};

    fn r(n: i64) -> Rational {
        Rational::from(n)
    }

    fn poly(c: &[i64]) -> XPoly<Rational> {
        XPoly::new(c.iter().map(|&v| r(v)).collect())
    }

    #[test]
    fn printed_genocchi_rows() {
        let t = genocchi_table(6).unwrap();
        assert_eq!(t.rows[0], poly(&[]));
        assert_eq!(t.rows[1], poly(&[1]));
        assert_eq!(t.rows[2], poly(&[-1, 2]));
        assert_eq!(t.rows[3], poly(&[0, -3, 3]));
        assert_eq!(t.rows[4], poly(&[1, 0, -6, 4]));
        assert_eq!(t.rows[5], poly(&[0, 5, 0, -10, 5]));
        assert_eq!(t.rows[6], poly(&[-3, 0, 15, 0, -15, 6]));
    }

    #[test]
    fn apostol_reductions() {
        let lam = RatFun::lambda();
        let t = apostol_genocchi_table(1, lam.clone(), 3).unwrap();
        let lp1 = lam.clone() + &RatFun::one();
        assert_eq!(t.rows[1].coeff(0), RatFun::from_int(2) / &lp1);
        let t0 = apostol_genocchi_table(0, lam, 5).unwrap();
        for (n, row) in t0.rows.iter().enumerate() {
            assert_eq!(*row, XPoly::monomial(RatFun::one(), n));
        }
        let classical = apostol_genocchi_table(1, r(1), 8).unwrap();
        assert_eq!(classical.rows, genocchi_table(8).unwrap().rows);
        assert!(matches!(apostol_genocchi_table(1, r(-1), 4), Err(Error::SingularParameter(_))));
    }

    #[test]
    fn bernoulli_and_euler() {
        let lam = RatFun::lambda();
        let b = apostol_bernoulli_table(1, lam.clone(), 3).unwrap();
        assert!(b.rows[0].is_zero_poly());
        assert_eq!(b.rows[1].coeff(0), RatFun::one() / &(lam - &RatFun::one()));
        let b1 = apostol_bernoulli_table(1, r(1), 3).unwrap();
        assert_eq!(b1.rows[1].coeff(0), q("-1/2"));
        assert_eq!(bernoulli_table::<Rational>(1, 4).unwrap().rows[2].coeff(0), q("1/6"));
        let e = euler_table::<Rational>(1, 3).unwrap();
        assert_eq!(e.rows[0], poly(&[1]));
        assert_eq!(e.rows[1].coeff(0), q("-1/2"));
    }

    #[test]
    fn abc_reductions() {
        let lam = RatFun::lambda();
        let abc = genocchi_abc_table(2, lam.clone(), Logs::classical(), 6).unwrap();
        assert_eq!(abc.rows, apostol_genocchi_table(2, lam, 6).unwrap().rows);
        let t = genocchi_abc_table(1, r(1), Logs::new(r(0), r(2), r(1)), 3).unwrap();
        assert_eq!(t.rows[1].coeff(0), r(1));
        let flat = genocchi_abc_table(1, r(3), Logs::new(q("1/2"), r(2), r(0)), 5).unwrap();
        assert!(flat.rows.iter().all(|row| row.degree().unwrap_or(0) == 0));
    }

    #[test]
    fn luo_families() {
        let spec = FamilySpec::new(Family::LuoBernoulliAbc, 6).with_logs(r(0), r(1), r(1));
        let t = PolyTable::build(&spec).unwrap();
        assert_eq!(t.rows, bernoulli_table::<Rational>(1, 6).unwrap().rows);
        let spec = FamilySpec::new(Family::LuoBernoulliAbc, 3).with_logs(q("1/3"), r(2), r(1));
        assert_eq!(PolyTable::build(&spec).unwrap().rows[0], XPoly::constant(q("3/5")));
        let bad = FamilySpec::new(Family::LuoBernoulliAbc, 3).with_logs(r(2), r(2), r(1));
        assert!(matches!(PolyTable::build(&bad), Err(Error::SingularParameter(_))));
        let e = FamilySpec::new(Family::LuoEulerAb, 4).with_logs(r(0), r(0), r(0));
        assert_eq!(PolyTable::build(&e).unwrap().numbers(), vec![r(1), r(0), r(0), r(0), r(0)]);
    }

    #[test]
    fn validation() {
        let spec = FamilySpec::<Rational>::new(Family::Genocchi, 40);
        assert!(matches!(PolyTable::build_with_precision(&spec, 33), Err(Error::Config(_))));
        let spec = FamilySpec::<Rational>::new(Family::GenocchiAbc, 4);
        assert!(matches!(PolyTable::build(&spec), Err(Error::InvalidParameter(_))));
        let spec = FamilySpec::<Rational>::new(Family::Genocchi, 4).with_logs(r(0), r(1), r(1));
        assert!(matches!(PolyTable::build(&spec), Err(Error::InvalidParameter(_))));
        let spec = FamilySpec::<Rational>::new(Family::HermiteGenocchi, 4).with_order(2);
        assert!(matches!(PolyTable::build(&spec), Err(Error::InvalidParameter(_))));
        let spec = FamilySpec::<Rational>::new(Family::HermiteGenocchiAb, 4).with_scales(r(0), r(1));
        assert!(matches!(PolyTable::build(&spec), Err(Error::SingularParameter(_))));
        // λ is ignored by families that do not take it
        let spec = FamilySpec::new(Family::Genocchi, 4).with_lambda(r(-1));
        assert!(PolyTable::build(&spec).is_ok());
        assert_eq!("two-var-genocchi".parse::<Family>().unwrap(), Family::TwoVarGenocchi);
        assert!("nope".parse::<Family>().is_err());
    }

    #[test]
    fn hermite_and_two_var_dual_constructions() {
        let lam = RatFun::lambda();
        let h = FamilySpec::new(Family::HermiteGenocchi, 10).with_lambda(lam.clone());
        assert_eq!(PolyTable::build(&h).unwrap(), PolyTable::build_by_sum(&h).unwrap());
        let hab = FamilySpec::new(Family::HermiteGenocchiAb, 10)
            .with_lambda(lam.clone())
            .with_scales(RatFun::from_rational(&q("2/3")), RatFun::from_int(-3));
        assert_eq!(PolyTable::build(&hab).unwrap(), PolyTable::build_by_sum(&hab).unwrap());
        let tv = FamilySpec::new(Family::TwoVarGenocchi, 10)
            .with_lambda(lam)
            .with_aux(RatFun::from_rational(&q("5/7")), RatFun::from_int(2));
        assert_eq!(PolyTable::build(&tv).unwrap(), PolyTable::build_by_sum(&tv).unwrap());
        let h1 = FamilySpec::new(Family::HermiteGenocchi, 4).with_lambda(r(1));
        assert_eq!(PolyTable::build(&h1).unwrap().numbers()[3], r(6));
        let tv1 = FamilySpec::new(Family::TwoVarGenocchi, 3).with_aux(r(1), r(1));
        assert_eq!(PolyTable::build(&tv1).unwrap().rows[2].coeff(0), r(-1));
        let tv0 = FamilySpec::new(Family::TwoVarGenocchi, 6).with_lambda(r(3)).with_aux(r(0), r(5));
        assert_eq!(PolyTable::build(&tv0).unwrap().rows, apostol_genocchi_table(1, r(3), 6).unwrap().rows);
    }

    #[test]
    fn tangent_and_tanh_sequences() {
        let u = unsigned_genocchi(12);
        assert_eq!(u[2], r(1));
        assert_eq!(u[6], r(3));
        assert_eq!(u[8], r(17));
        assert!(u.iter().all(|v| !v.is_negative()));
        let g = genocchi_table(12).unwrap().numbers();
        let th = tanh_genocchi(12);
        for n in 2..=12 {
            assert_eq!(th[n], g[n]);
        }
        for n in 1..=6 {
            let sign = if n % 2 == 1 { r(-1) } else { r(1) };
            assert_eq!(g[2 * n], sign * &u[2 * n]);
        }
    }

    #[test]
    fn euler_numbers_and_formula() {
        let e = euler_numbers(6, SignConvention::Signed);
        assert_eq!(e, vec![r(1), r(0), r(-1), r(0), r(5), r(0), r(-61)]);
        assert_eq!(genocchi_from_euler(1, SignConvention::Signed).unwrap(), r(1));
        assert_eq!(genocchi_from_euler(2, SignConvention::Signed).unwrap(), r(-2));
        assert_eq!(genocchi_from_euler(2, SignConvention::Unsigned).unwrap(), r(1));
        assert_eq!(genocchi_from_euler(3, SignConvention::Unsigned).unwrap(), r(3));
        assert!(genocchi_from_euler(0, SignConvention::Signed).is_err());
    }

    #[test]
    fn spec_serde_round_trip() {
        let spec = FamilySpec::new(Family::GenocchiAbc, 3).with_order(2).with_lambda(RatFun::lambda()).with_logs(
            RatFun::zero(),
            RatFun::one(),
            RatFun::from_int(2),
        );
        let t = PolyTable::build(&spec).unwrap();
        let js = serde_json::to_string(&t).unwrap();
        assert_eq!(serde_json::from_str::<PolyTable<RatFun>>(&js).unwrap(), t);
    }
}

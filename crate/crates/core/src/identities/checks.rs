use std::fmt;

use crate::algebra::combinat::compositions;
use crate::algebra::{binomial, factorial, multinomial, rising_factorial, Field, IntoExact, Rational, Ring, XPoly};
use crate::families::genocchi_kernel;
use crate::series::Series;
use crate::zsum::{z_sum, z_sum_multi};
use crate::Error;

use super::tables::Tables;
use super::{IdentityId, IdentityResult, Params};

/// Rational stand-ins for `ln a`, `ln b`, `ln c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LogTuple {
    pub la: Rational,
    pub lb: Rational,
    pub lc: Rational,
}

impl LogTuple {
    pub fn new(la: Rational, lb: Rational, lc: Rational) -> Self {
        LogTuple { la, lb, lc }
    }

    /// `a = 1`, `b = c = e`.
    pub fn classical() -> Self {
        LogTuple::new(Rational::zero(), Rational::one(), Rational::one())
    }

    fn lift<F: Field>(&self) -> (F, F, F) {
        (F::from_rational(&self.la), F::from_rational(&self.lb), F::from_rational(&self.lc))
    }

    /// `(ln a - ln c, ln b - ln c, ln c)`, the logs of `a/c, b/c, c`.
    fn over_c(&self) -> LogTuple {
        LogTuple::new(self.la.clone() - &self.lc, self.lb.clone() - &self.lc, self.lc.clone())
    }
}

impl fmt::Display for LogTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.la, self.lb, self.lc)
    }
}

fn rat(n: i64) -> Rational {
    Rational::from(n)
}

fn frac(p: i64, q: i64) -> Rational {
    Rational::new(p, q).expect("nonzero denominator")
}

fn rpow(base: i64, e: i64) -> Rational {
    rat(base).powi(e).expect("nonzero base")
}

fn sign(e: u64) -> Rational {
    if e.is_multiple_of(2) {
        rat(1)
    } else {
        rat(-1)
    }
}

fn need_odd(m: u64) -> Result<(), Error> {
    if m % 2 == 1 {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("m = {m} must be odd")))
    }
}

fn need_even(m: u64) -> Result<(), Error> {
    if m.is_multiple_of(2) && m > 0 {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("m = {m} must be even and positive")))
    }
}

/// `Σ_v C(l; v) (-1)^r` grouped by `r = Σ i v_i` over weak compositions
/// `v_0..v_{m-1}` of `l`.
fn shift_weights(l: u32, m: u64) -> Vec<(u64, Rational)> {
    let top = l as u64 * (m - 1);
    let mut w = vec![Rational::zero(); top as usize + 1];
    for v in compositions(l as u64, m as usize) {
        let r: u64 = v.iter().enumerate().map(|(i, &vi)| i as u64 * vi).sum();
        w[r as usize] += &(multinomial(l as u64, &v).expect("parts sum to l") * &sign(r));
    }
    w.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(r, c)| (r as u64, c)).collect()
}

fn row<F: Ring>(rows: &[XPoly<F>], n: usize) -> Result<&XPoly<F>, Error> {
    rows.get(n).ok_or(Error::OutOfPrecision { index: n, precision: rows.len() })
}

fn number<F: Ring>(rows: &[XPoly<F>], n: usize) -> Result<F, Error> {
    Ok(row(rows, n)?.coeff(0))
}

/// Residual checks for every identity id, sharing one table cache.
pub struct Checker<F> {
    tables: Tables<F>,
}

impl<F: Field + IntoExact> Checker<F> {
    pub fn new(tables: Tables<F>) -> Self {
        Checker { tables }
    }

    pub fn tables(&self) -> &Tables<F> {
        &self.tables
    }

    fn lam(&self) -> &F {
        self.tables.lambda()
    }

    /// `m^{n-l} pre Σ_r w_r μ^r P_n(x + r/m)` against `Q_n(m x)`.
    #[allow(clippy::too_many_arguments)]
    fn multiplication(
        &self,
        id: IdentityId,
        lhs_rows: &[XPoly<F>],
        rhs_rows: &[XPoly<F>],
        mu: &F,
        pre: Rational,
        n: usize,
        l: u32,
        m: u64,
    ) -> Result<IdentityResult, Error> {
        let lhs = row(lhs_rows, n)?.scale_x(&F::from_int(m as i64));
        let target = row(rhs_rows, n)?;
        let mut rhs = XPoly::zero();
        for (r, w) in shift_weights(l, m) {
            let shifted = target.shift(&F::from_rational(&frac(r as i64, m as i64)));
            rhs += &shifted.mul_scalar(&mu.pow(r as u32).scale(&w));
        }
        let rhs = rhs.scale_rational(&(pre * &rpow(m as i64, n as i64 - l as i64)));
        let params = Params::new().int("n", n as i64).int("l", l).int("m", m as i64);
        Ok(IdentityResult::from_poly(id, params, &(lhs - rhs)))
    }

    pub fn t2_1(&self, n: usize, l: u32, m: u64) -> Result<IdentityResult, Error> {
        need_odd(m)?;
        let base = self.tables.genocchi(l, 1)?;
        let at_m = self.tables.genocchi(l, m as u32)?;
        self.multiplication(IdentityId::T2_1, &base, &at_m, self.lam(), rat(1), n, l, m)
    }

    pub fn c2_2(&self, n: usize, l: u32, m: u64) -> Result<IdentityResult, Error> {
        need_odd(m)?;
        let g = self.tables.genocchi_one(l)?;
        self.multiplication(IdentityId::C2_2, &g, &g, &F::one(), rat(1), n, l, m)
    }

    /// `G_n(mx) = m^{n-1} Σ_k (-1)^k G_n(x + k/m)`
    pub fn c2_3(&self, n: usize, m: u64) -> Result<IdentityResult, Error> {
        need_odd(m)?;
        let g = self.tables.genocchi_one(1)?;
        let lhs = row(&g, n)?.scale_x(&F::from_int(m as i64));
        let mut rhs = XPoly::zero();
        for k in 0..m {
            let term = row(&g, n)?.shift(&F::from_rational(&frac(k as i64, m as i64)));
            rhs += &term.scale_rational(&sign(k));
        }
        let rhs = rhs.scale_rational(&rpow(m as i64, n as i64 - 1));
        let params = Params::new().int("n", n as i64).int("m", m as i64);
        Ok(IdentityResult::from_poly(IdentityId::C2_3, params, &(lhs - rhs)))
    }

    pub fn t2_4(&self, n: usize, l: u32, m: u64) -> Result<IdentityResult, Error> {
        need_even(m)?;
        let base = self.tables.genocchi(l, 1)?;
        let b = self.tables.bernoulli(l, m as u32)?;
        let pre = rat(-2).pow(l);
        self.multiplication(IdentityId::T2_4, &base, &b, self.lam(), pre, n, l, m)
    }

    pub fn c2_5(&self, n: usize, l: u32, m: u64) -> Result<IdentityResult, Error> {
        need_even(m)?;
        let g = self.tables.genocchi_one(l)?;
        let b = self.tables.bernoulli_one(l)?;
        self.multiplication(IdentityId::C2_5, &g, &b, &F::one(), rat(-2).pow(l), n, l, m)
    }

    /// `G_n(mx) = -2 m^{n-1} Σ_k (-1)^k B_n(x + k/m)`
    pub fn c2_6(&self, n: usize, m: u64) -> Result<IdentityResult, Error> {
        need_even(m)?;
        let g = self.tables.genocchi_one(1)?;
        let b = self.tables.bernoulli_one(1)?;
        let lhs = row(&g, n)?.scale_x(&F::from_int(m as i64));
        let mut rhs = XPoly::zero();
        for k in 0..m {
            let term = row(&b, n)?.shift(&F::from_rational(&frac(k as i64, m as i64)));
            rhs += &term.scale_rational(&sign(k));
        }
        let rhs = rhs.scale_rational(&(rat(-2) * &rpow(m as i64, n as i64 - 1)));
        let params = Params::new().int("n", n as i64).int("m", m as i64);
        Ok(IdentityResult::from_poly(IdentityId::C2_6, params, &(lhs - rhs)))
    }

    /// `2^{-l} Σ_j C(l,j) (-1)^{j(m+1)} μ^{mj+l} / (n+1)_l
    ///   Σ_k C(n+l,k) G_k^{(j)}(mj+l; μ) G_{n+l-k}^{(l-j)}(μ)`
    fn alternating_rhs(&self, mu: &F, one: bool, n: usize, l: u32, m: u64) -> Result<F, Error> {
        let mut acc = F::zero();
        let top = n + l as usize;
        for j in 0..=l {
            let gj = if one { self.tables.genocchi_one(j)? } else { self.tables.genocchi(j, 1)? };
            let glj = if one { self.tables.genocchi_one(l - j)? } else { self.tables.genocchi(l - j, 1)? };
            let at = F::from_int((m * j as u64 + l as u64) as i64);
            let mut inner = F::zero();
            for k in 0..=top {
                let a = row(&gj, k)?.eval(&at);
                let b = number(&glj, top - k)?;
                if !a.is_zero() && !b.is_zero() {
                    inner += &(a * &b).scale(&binomial(top as u64, k as u64));
                }
            }
            let w = binomial(l as u64, j as u64) * &sign(j as u64 * (m + 1));
            acc += &(inner * &mu.pow((m * j as u64) as u32 + l)).scale(&w);
        }
        let denom = rising_factorial(n as u64 + 1, l as u64) * &rat(2).pow(l);
        Ok(acc.scale(&denom.recip().expect("positive")))
    }

    pub fn t2_7(&self, n: usize, l: u32, m: u64) -> Result<IdentityResult, Error> {
        let lhs = z_sum_multi(n as u32, l, m, self.lam());
        let rhs = self.alternating_rhs(self.lam(), false, n, l, m)?;
        let params = Params::new().int("n", n as i64).int("l", l).int("m", m as i64);
        Ok(IdentityResult::from_scalar(IdentityId::T2_7, params, &(lhs - rhs)))
    }

    pub fn c2_8(&self, n: usize, l: u32, m: u64) -> Result<IdentityResult, Error> {
        let one = F::one();
        let lhs = z_sum_multi(n as u32, l, m, &one);
        let rhs = self.alternating_rhs(&one, true, n, l, m)?;
        let params = Params::new().int("n", n as i64).int("l", l).int("m", m as i64);
        Ok(IdentityResult::from_scalar(IdentityId::C2_8, params, &(lhs - rhs)))
    }

    /// `Σ_k C(n,k) m^k P_k Z_{n-k}`
    fn howard_sum(p: &[XPoly<F>], z: &[F], n: usize, m: u64) -> Result<F, Error> {
        let mut acc = F::zero();
        for k in 0..=n {
            let pk = number(p, k)?;
            if pk.is_zero() || z[n - k].is_zero() {
                continue;
            }
            let w = binomial(n as u64, k as u64) * &rat(m as i64).pow(k as u32);
            acc += &(pk * &z[n - k]).scale(&w);
        }
        Ok(acc)
    }

    /// `m^n G_n^{(l)}(μ^m) - m^l G_n^{(l)}(μ) - (-1)^{l-1} Σ_k C(n,k) m^k G_k^{(l)}(μ^m) Z_{n-k}(m-1; μ)`
    fn howard_odd(&self, id: IdentityId, n: usize, l: u32, m: u64) -> Result<IdentityResult, Error> {
        need_odd(m)?;
        let one = matches!(id, IdentityId::C2_10 | IdentityId::C2_12);
        let single = matches!(id, IdentityId::C2_11 | IdentityId::C2_12);
        let l = if single { 1 } else { l };
        let (g, gm, mu) = if one {
            let g = self.tables.genocchi_one(l)?;
            (g.clone(), g, F::one())
        } else {
            (self.tables.genocchi(l, 1)?, self.tables.genocchi(l, m as u32)?, self.lam().clone())
        };
        let z: Vec<F> =
            (0..=n as u32).map(|k| if single { z_sum(k, m - 1, &mu) } else { z_sum_multi(k, l, m - 1, &mu) }).collect();
        let lhs = number(&gm, n)?.scale(&rat(m as i64).pow(n as u32)) - number(&g, n)?.scale(&rat(m as i64).pow(l));
        let rhs = Self::howard_sum(&gm, &z, n, m)?.scale(&sign(l as u64 + 1));
        let mut params = Params::new().int("n", n as i64);
        if !single {
            params = params.int("l", l);
        }
        Ok(IdentityResult::from_scalar(id, params.int("m", m as i64), &(lhs - rhs)))
    }

    pub fn t2_9(&self, n: usize, l: u32, m: u64) -> Result<IdentityResult, Error> {
        self.howard_odd(IdentityId::T2_9, n, l, m)
    }

    pub fn c2_10(&self, n: usize, l: u32, m: u64) -> Result<IdentityResult, Error> {
        self.howard_odd(IdentityId::C2_10, n, l, m)
    }

    pub fn c2_11(&self, n: usize, m: u64) -> Result<IdentityResult, Error> {
        self.howard_odd(IdentityId::C2_11, n, 1, m)
    }

    pub fn c2_12(&self, n: usize, m: u64) -> Result<IdentityResult, Error> {
        self.howard_odd(IdentityId::C2_12, n, 1, m)
    }

    /// `m^l G_n^{(l)}(μ) - (-2)^l m^n B_n^{(l)}(μ^m) - 2^l Σ_k C(n,k) m^k B_k^{(l)}(μ^m) Z_{n-k}(m-1; μ)`
    fn howard_even(&self, id: IdentityId, n: usize, l: u32, m: u64) -> Result<IdentityResult, Error> {
        need_even(m)?;
        let (g, bm, mu) = if id == IdentityId::C2_14 {
            (self.tables.genocchi_one(l)?, self.tables.bernoulli_one(l)?, F::one())
        } else {
            (self.tables.genocchi(l, 1)?, self.tables.bernoulli(l, m as u32)?, self.lam().clone())
        };
        let z: Vec<F> = (0..=n as u32).map(|k| z_sum_multi(k, l, m - 1, &mu)).collect();
        let lhs = number(&g, n)?.scale(&rat(m as i64).pow(l))
            - number(&bm, n)?.scale(&(rat(-2).pow(l) * &rat(m as i64).pow(n as u32)));
        let rhs = Self::howard_sum(&bm, &z, n, m)?.scale(&rat(2).pow(l));
        let params = Params::new().int("n", n as i64).int("l", l).int("m", m as i64);
        Ok(IdentityResult::from_scalar(id, params, &(lhs - rhs)))
    }

    pub fn t2_13(&self, n: usize, l: u32, m: u64) -> Result<IdentityResult, Error> {
        self.howard_even(IdentityId::T2_13, n, l, m)
    }

    pub fn c2_14(&self, n: usize, l: u32, m: u64) -> Result<IdentityResult, Error> {
        self.howard_even(IdentityId::C2_14, n, l, m)
    }

    /// `G_k^{(n+1)}(λ) = 2k G_{k-1}^{(n)}(λ) - (2 - 2k/n) G_k^{(n)}(λ)`
    pub fn t2_15(&self, k: usize, n: u32) -> Result<IdentityResult, Error> {
        if n == 0 || k == 0 {
            return Err(Error::InvalidParameter("order lowering needs n >= 1 and k >= 1".into()));
        }
        let up = self.tables.genocchi(n + 1, 1)?;
        let g = self.tables.genocchi(n, 1)?;
        let lhs = number(&up, k)?;
        let c = rat(2) - frac(2 * k as i64, n as i64);
        let rhs = number(&g, k - 1)?.scale(&rat(2 * k as i64)) - number(&g, k)?.scale(&c);
        let params = Params::new().int("k", k as i64).int("n", n);
        Ok(IdentityResult::from_scalar(IdentityId::T2_15, params, &(lhs - rhs)))
    }

    fn abc(&self, l: u32, logs: &LogTuple) -> Result<std::sync::Arc<Vec<XPoly<F>>>, Error> {
        let (la, lb, lc) = logs.lift::<F>();
        self.tables.abc(l, &la, &lb, &lc)
    }

    fn log_params(n: usize, l: u32, logs: &LogTuple) -> Params {
        Params::new().int("n", n as i64).int("l", l).text("la", &logs.la).text("lb", &logs.lb).text("lc", &logs.lc)
    }

    fn need_distinct(logs: &LogTuple) -> Result<Rational, Error> {
        let d = logs.lb.clone() - &logs.la;
        if d.is_zero() {
            Err(Error::SingularParameter("ln a = ln b".into()))
        } else {
            Ok(d)
        }
    }

    /// `G_n^{(l)}(a,b;λ) = G_n^{(l)}(l ln a/(ln a - ln b); λ) (ln b - ln a)^{n-l}`
    pub fn t3_1(&self, n: usize, l: u32, logs: &LogTuple) -> Result<IdentityResult, Error> {
        let d = Self::need_distinct(logs)?;
        let lhs = number(&self.abc(l, logs)?, n)?;
        let at = F::from_rational(&(rat(l as i64) * &logs.la / -d.clone()));
        let g = self.tables.genocchi(l, 1)?;
        let rhs = row(&g, n)?.eval(&at).scale(&d.powi(n as i64 - l as i64).expect("nonzero"));
        Ok(IdentityResult::from_scalar(IdentityId::T3_1, Self::log_params(n, l, logs), &(lhs - rhs)))
    }

    /// `G_n^{(l)}(x;a,b,c;λ) = G_n^{(l)}((x ln c - l ln a)/(ln b - ln a); λ) (ln b - ln a)^{n-l}`
    pub fn t3_2(&self, n: usize, l: u32, logs: &LogTuple) -> Result<IdentityResult, Error> {
        let d = Self::need_distinct(logs)?;
        let lhs = row(&self.abc(l, logs)?, n)?.clone();
        let a = F::from_rational(&(logs.lc.clone() / &d));
        let b = F::from_rational(&(-(rat(l as i64) * &logs.la) / &d));
        let g = self.tables.genocchi(l, 1)?;
        let rhs = row(&g, n)?.compose_affine(&a, &b).scale_rational(&d.powi(n as i64 - l as i64).expect("nonzero"));
        Ok(IdentityResult::from_poly(IdentityId::T3_2, Self::log_params(n, l, logs), &(lhs - rhs)))
    }

    /// `G_n(x+1) = Σ_k C(n,k) (ln c)^{n-k} G_k(x)`
    pub fn t3_3_1(&self, n: usize, l: u32, logs: &LogTuple) -> Result<IdentityResult, Error> {
        let g = self.abc(l, logs)?;
        let lhs = row(&g, n)?.shift(&F::one());
        let mut rhs = XPoly::zero();
        for k in 0..=n {
            let w = binomial(n as u64, k as u64) * &logs.lc.pow((n - k) as u32);
            rhs += &row(&g, k)?.scale_rational(&w);
        }
        Ok(IdentityResult::from_poly(IdentityId::T3_3_1, Self::log_params(n, l, logs), &(lhs - rhs)))
    }

    /// `G_n^{(l)}(x + l; a,b,c) = G_n^{(l)}(x; a/c, b/c, c)`
    pub fn t3_3_2(&self, n: usize, l: u32, logs: &LogTuple) -> Result<IdentityResult, Error> {
        let lhs = row(&self.abc(l, logs)?, n)?.shift(&F::from_int(l as i64));
        let rhs = row(&self.abc(l, &logs.over_c())?, n)?.clone();
        Ok(IdentityResult::from_poly(IdentityId::T3_3_2, Self::log_params(n, l, logs), &(lhs - rhs)))
    }

    /// `G_n^{(l)}(l - x; a,b,c) = G_n^{(l)}(-x; a/c, b/c, c)`
    pub fn t3_3_3(&self, n: usize, l: u32, logs: &LogTuple) -> Result<IdentityResult, Error> {
        let lhs = row(&self.abc(l, logs)?, n)?.compose_affine(&-F::one(), &F::from_int(l as i64));
        let rhs = row(&self.abc(l, &logs.over_c())?, n)?.negate_x();
        Ok(IdentityResult::from_poly(IdentityId::T3_3_3, Self::log_params(n, l, logs), &(lhs - rhs)))
    }

    /// `G_n^{(α+β)}(x+y) = Σ_r C(n,r) G_{n-r}^{(α)}(x) G_r^{(β)}(y)`
    pub fn t3_3_4(
        &self,
        n: usize,
        alpha: u32,
        beta: u32,
        y: &Rational,
        logs: &LogTuple,
    ) -> Result<IdentityResult, Error> {
        let yf = F::from_rational(y);
        let lhs = row(&self.abc(alpha + beta, logs)?, n)?.shift(&yf);
        let ga = self.abc(alpha, logs)?;
        let gb = self.abc(beta, logs)?;
        let mut rhs = XPoly::zero();
        for r in 0..=n {
            let c = row(&gb, r)?.eval(&yf).scale(&binomial(n as u64, r as u64));
            rhs += &row(&ga, n - r)?.mul_scalar(&c);
        }
        let params = Params::new()
            .int("n", n as i64)
            .int("alpha", alpha)
            .int("beta", beta)
            .text("y", y)
            .text("la", &logs.la)
            .text("lb", &logs.lb)
            .text("lc", &logs.lc);
        Ok(IdentityResult::from_poly(IdentityId::T3_3_4, params, &(lhs - rhs)))
    }

    /// `d^j/dx^j G_n(x) = n!/(n-j)! (ln c)^j G_{n-j}(x)`, zero for `j > n`.
    pub fn t3_3_5(&self, n: usize, l: u32, j: usize, logs: &LogTuple) -> Result<IdentityResult, Error> {
        let g = self.abc(l, logs)?;
        let lhs = row(&g, n)?.nth_derivative(j);
        let rhs = if j > n {
            XPoly::zero()
        } else {
            let w = Rational::from(factorial(n as u64)) / Rational::from(factorial((n - j) as u64))
                * &logs.lc.pow(j as u32);
            row(&g, n - j)?.scale_rational(&w)
        };
        let params = Self::log_params(n, l, logs).int("j", j as i64);
        Ok(IdentityResult::from_poly(IdentityId::T3_3_5, params, &(lhs - rhs)))
    }

    /// `∫_s^t G_n(x) dx = (G_{n+1}(t) - G_{n+1}(s)) / ((n+1) ln c)`
    pub fn t3_3_6(
        &self,
        n: usize,
        l: u32,
        s: &Rational,
        t: &Rational,
        logs: &LogTuple,
    ) -> Result<IdentityResult, Error> {
        if logs.lc.is_zero() {
            return Err(Error::SingularParameter("ln c = 0".into()));
        }
        let g = self.abc(l, logs)?;
        let (sf, tf) = (F::from_rational(s), F::from_rational(t));
        let anti = row(&g, n)?.antiderivative();
        let lhs = anti.eval(&tf) - anti.eval(&sf);
        let next = row(&g, n + 1)?;
        let w = (rat(n as i64 + 1) * &logs.lc).recip().expect("nonzero");
        let rhs = (next.eval(&tf) - next.eval(&sf)).scale(&w);
        let params = Self::log_params(n, l, logs).text("s", s).text("t", t);
        Ok(IdentityResult::from_scalar(IdentityId::T3_3_6, params, &(lhs - rhs)))
    }

    /// `l λ ln(b/a) Σ_k C(n,k) (ln b)^k G_{n-k}^{(l+1)}(x)
    ///   = (l - n) G_n^{(l)}(x) + n (x ln c - l ln a) G_{n-1}^{(l)}(x)`
    pub fn r3_4_printed(&self, n: usize, l: u32, logs: &LogTuple) -> Result<IdentityResult, Error> {
        let up = self.abc(l + 1, logs)?;
        let g = self.abc(l, logs)?;
        let mut sum = XPoly::zero();
        for k in 0..=n {
            let w = binomial(n as u64, k as u64) * &logs.lb.pow(k as u32);
            sum += &row(&up, n - k)?.scale_rational(&w);
        }
        let pre = self.lam().scale(&(rat(l as i64) * &(logs.lb.clone() - &logs.la)));
        let lhs = sum.mul_scalar(&pre);
        let mut rhs = row(&g, n)?.scale_rational(&rat(l as i64 - n as i64));
        if n > 0 {
            let lin = XPoly::new(vec![F::from_rational(&-(rat(l as i64) * &logs.la)), F::from_rational(&logs.lc)]);
            rhs += &(lin * row(&g, n - 1)?).scale_rational(&rat(n as i64));
        }
        Ok(IdentityResult::from_poly(IdentityId::R3_4_printed, Self::log_params(n, l, logs), &(lhs - rhs)))
    }

    /// `(l ln(b/a) / 2) Σ_k C(n,k) (ln a)^{n-k} G_k^{(l+1)}(x)
    ///   = (n - l) G_n^{(l)}(x) - n (x ln c - l ln b) G_{n-1}^{(l)}(x)`
    pub fn r3_4_corrected(&self, n: usize, l: u32, logs: &LogTuple) -> Result<IdentityResult, Error> {
        let up = self.abc(l + 1, logs)?;
        let g = self.abc(l, logs)?;
        let mut sum = XPoly::zero();
        for k in 0..=n {
            let w = binomial(n as u64, k as u64) * &logs.la.pow((n - k) as u32);
            sum += &row(&up, k)?.scale_rational(&w);
        }
        let lhs = sum.scale_rational(&(rat(l as i64) * &(logs.lb.clone() - &logs.la) / rat(2)));
        let mut rhs = row(&g, n)?.scale_rational(&rat(n as i64 - l as i64));
        if n > 0 {
            let lin = XPoly::new(vec![F::from_rational(&-(rat(l as i64) * &logs.lb)), F::from_rational(&logs.lc)]);
            rhs -= &(lin * row(&g, n - 1)?).scale_rational(&rat(n as i64));
        }
        Ok(IdentityResult::from_poly(IdentityId::R3_4_corrected, Self::log_params(n, l, logs), &(lhs - rhs)))
    }

    /// `B_n(x+y;a,b) = 1/2 Σ_k C(n,k)/(n-k+1) [B_k(y;a,b) + B_k(y+1;a,b)] G_{n-k}(x)`
    /// with `B_n(x;a,b) = B_n(x;a,b,e)`.
    pub fn r3_5_1(&self, n: usize, y: &Rational, logs: &LogTuple) -> Result<IdentityResult, Error> {
        Self::need_distinct(logs)?;
        let (la, lb, _) = logs.lift::<F>();
        let b = self.tables.luo_bernoulli(&la, &lb, &F::one())?;
        let g = self.tables.genocchi_one(1)?;
        let yf = F::from_rational(y);
        let y1 = yf.clone() + &F::one();
        let lhs = row(&b, n)?.shift(&yf);
        let mut rhs = XPoly::zero();
        for k in 0..=n {
            let c = row(&b, k)?.eval(&yf) + &row(&b, k)?.eval(&y1);
            let w = binomial(n as u64, k as u64) / rat((n - k) as i64 + 1) / rat(2);
            rhs += &row(&g, n - k)?.mul_scalar(&c.scale(&w));
        }
        let params = Params::new().int("n", n as i64).text("y", y).text("la", &logs.la).text("lb", &logs.lb);
        Ok(IdentityResult::from_poly(IdentityId::R3_5_1, params, &(lhs - rhs)))
    }

    /// `G_n(x+y) = 1/2 Σ_k C(n,k) [G_k(y) + G_k(y+1)] E_{n-k}(x)`
    pub fn r3_5_2(&self, n: usize, y: &Rational) -> Result<IdentityResult, Error> {
        let g = self.tables.genocchi_one(1)?;
        let e = self.tables.euler(1)?;
        let yf = F::from_rational(y);
        let y1 = yf.clone() + &F::one();
        let lhs = row(&g, n)?.shift(&yf);
        let mut rhs = XPoly::zero();
        for k in 0..=n {
            let c = row(&g, k)?.eval(&yf) + &row(&g, k)?.eval(&y1);
            rhs += &row(&e, n - k)?.mul_scalar(&c.scale(&(binomial(n as u64, k as u64) / rat(2))));
        }
        let params = Params::new().int("n", n as i64).text("y", y);
        Ok(IdentityResult::from_poly(IdentityId::R3_5_2, params, &(lhs - rhs)))
    }

    /// `G_n(x+y) = Σ_k k C(n,k) y^{k-1} E_{n-k}(x)`, `y ≠ 0`
    pub fn r3_5_3(&self, n: usize, y: &Rational) -> Result<IdentityResult, Error> {
        if y.is_zero() {
            return Err(Error::InvalidParameter("y must be nonzero".into()));
        }
        let g = self.tables.genocchi_one(1)?;
        let e = self.tables.euler(1)?;
        let lhs = row(&g, n)?.shift(&F::from_rational(y));
        let mut rhs = XPoly::zero();
        for k in 1..=n {
            let w = rat(k as i64) * &binomial(n as u64, k as u64) * &y.pow(k as u32 - 1);
            rhs += &row(&e, n - k)?.scale_rational(&w);
        }
        let params = Params::new().int("n", n as i64).text("y", y);
        Ok(IdentityResult::from_poly(IdentityId::R3_5_3, params, &(lhs - rhs)))
    }

    /// `m^{n-1} Σ_k (-λ)^k H_n(x + k/m)` for rows `H` at `λ^m`.
    fn two_var_rhs(&self, h: &[XPoly<F>], n: usize, m: u64) -> Result<XPoly<F>, Error> {
        let mut rhs = XPoly::zero();
        let target = row(h, n)?;
        for k in 0..m {
            let shifted = target.shift(&F::from_rational(&frac(k as i64, m as i64)));
            rhs += &shifted.mul_scalar(&self.lam().pow(k as u32).scale(&sign(k)));
        }
        Ok(rhs.scale_rational(&rpow(m as i64, n as i64 - 1)))
    }

    /// `G_n(mx, py; λ) = m^{n-1} Σ_k λ^k (-1)^k G_n(x + k/m, py/m^2; λ^m)`
    pub fn t4_1(&self, n: usize, m: u64, y: &Rational, p: &Rational) -> Result<IdentityResult, Error> {
        need_odd(m)?;
        let py = y.clone() * p;
        let lhs_rows = self.tables.two_var(1, &F::from_rational(&py))?;
        let lhs = row(&lhs_rows, n)?.scale_x(&F::from_int(m as i64));
        let h = self.tables.two_var(m as u32, &F::from_rational(&(py / rat(m as i64 * m as i64))))?;
        let rhs = self.two_var_rhs(&h, n, m)?;
        let params = Params::new().int("n", n as i64).int("m", m as i64).text("y", y).text("p", p);
        Ok(IdentityResult::from_poly(IdentityId::T4_1, params, &(lhs - rhs)))
    }

    /// `H_n(mx, m^2 y; λ) = m^{n-1} Σ_k (-1)^k λ^k H_n(x + k/m, y; λ^m)`
    pub fn r4_2(&self, n: usize, m: u64, y: &Rational) -> Result<IdentityResult, Error> {
        need_odd(m)?;
        let lhs_rows = self.tables.two_var(1, &F::from_rational(&(y.clone() * &rat(m as i64 * m as i64))))?;
        let lhs = row(&lhs_rows, n)?.scale_x(&F::from_int(m as i64));
        let h = self.tables.two_var(m as u32, &F::from_rational(y))?;
        let rhs = self.two_var_rhs(&h, n, m)?;
        let params = Params::new().int("n", n as i64).int("m", m as i64).text("y", y);
        Ok(IdentityResult::from_poly(IdentityId::R4_2, params, &(lhs - rhs)))
    }

    /// Both differential equations of `φ(x,t;l) = (2t/(e^t+1))^l e^{xt}`
    /// to `precision` coefficients in `t`. `equation` 1 is `∂φ/∂x = tφ`;
    /// equation 2 is `t ∂φ/∂t - ((l + tx)/t - l e^t/(e^t+1)) ∂φ/∂x = 0`
    /// with `∂φ/∂x` replaced by `tφ`.
    pub fn phi_pde(&self, l: u32, equation: u8, precision: usize) -> Result<IdentityResult, Error> {
        let p = precision;
        let kernel = genocchi_kernel(&F::one(), &F::zero(), &F::one(), p)?.pow(l);
        let lift = |s: &Series<F>| s.map(|c| XPoly::constant(c.clone()));
        let phi = lift(&kernel).mul(&Series::exp_linear(&XPoly::x(), p))?;
        let residual = match equation {
            1 => phi.map(|c| c.derivative()).sub(&phi.mul_t_power(1))?,
            2 => {
                let l_f = XPoly::constant(F::from_int(l as i64));
                let e = Series::exp_linear(&F::one(), p);
                let logistic = e.mul_t_power(1).div(&e.add(&Series::one(p))?)?;
                let xt_phi = phi.mul_t_power(1).map(|c| c.clone() * &XPoly::x());
                phi.t_derivative()
                    .sub(&phi.mul_scalar(&l_f))?
                    .sub(&xt_phi)?
                    .add(&phi.mul(&lift(&logistic))?.mul_scalar(&l_f))?
            }
            _ => return Err(Error::InvalidParameter(format!("no differential equation {equation}"))),
        };
        let first = residual.coeffs().iter().find(|c| !c.is_zero()).cloned().unwrap_or_else(XPoly::zero);
        let params = Params::new().int("l", l).int("equation", equation).int("precision", p as i64);
        Ok(IdentityResult::from_poly(IdentityId::PHI_PDE, params, &first))
    }

    /// `λ G_n(x+1; λ) + G_n(x; λ) = 2n x^{n-1}`
    pub fn complement(&self, n: usize) -> Result<IdentityResult, Error> {
        let g = self.tables.genocchi(1, 1)?;
        let lhs = row(&g, n)?.shift(&F::one()).mul_scalar(self.lam()) + row(&g, n)?;
        let rhs = if n == 0 { XPoly::zero() } else { XPoly::monomial(F::from_int(2 * n as i64), n - 1) };
        Ok(IdentityResult::from_poly(IdentityId::COMPLEMENT, Params::new().int("n", n as i64), &(lhs - rhs)))
    }
}

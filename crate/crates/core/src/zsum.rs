//! Alternating power sums `Z_k(m; λ)` and their multi-index powers
//! `Z_k^{(l)}(m; λ)`, by enumeration and by generating function.

use crate::algebra::combinat::compositions;
use crate::algebra::{multinomial, Rational, Ring};
use crate::series::Series;
use crate::Error;

/// `Σ_{j=1}^{m} (-1)^{j+1} λ^j j^k`
pub fn z_sum<F: Ring>(k: u32, m: u64, lambda: &F) -> F {
    let mut acc = F::zero();
    let mut lam_pow = F::one();
    for j in 1..=m {
        lam_pow *= lambda;
        let w = Rational::from(j).pow(k);
        let term = lam_pow.scale(&w);
        if j % 2 == 1 {
            acc += &term;
        } else {
            acc -= &term;
        }
    }
    acc
}

/// `(-1)^l Σ_v C(l; v) (-λ)^r r^k` over weak compositions `v_1..v_m` of
/// `l`, with `r = Σ i v_i` and `0^0 = 1`.
pub fn z_sum_multi<F: Ring>(k: u32, l: u32, m: u64, lambda: &F) -> F {
    let neg_lambda = -lambda.clone();
    let mut acc = F::zero();
    for v in compositions(l as u64, m as usize) {
        let r: u64 = v.iter().enumerate().map(|(i, &vi)| (i as u64 + 1) * vi).sum();
        let w = multinomial(l as u64, &v).expect("parts sum to l") * &Rational::from(r).pow(k);
        acc += &neg_lambda.pow(r as u32).scale(&w);
    }
    if l % 2 == 1 {
        -acc
    } else {
        acc
    }
}

/// `k!` times the `t^k` coefficient of `(Σ_{j=1}^{m} (-1)^{j+1} λ^j e^{jt})^l`.
pub fn z_sum_multi_gf<F: Ring>(k: u32, l: u32, m: u64, lambda: &F) -> Result<F, Error> {
    let p = k as usize + 1;
    let mut base = Series::zero(p);
    let mut lam_pow = F::one();
    for j in 1..=m {
        lam_pow *= lambda;
        let c = if j % 2 == 1 { lam_pow.clone() } else { -lam_pow.clone() };
        let term = Series::exp_linear(&F::from_int(j as i64), p).mul_scalar(&c);
        base = base.add(&term)?;
    }
    base.pow(l).egf_coeff(k as usize)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::RatFun;

    fn r(n: i64) -> Rational {
        Rational::from(n)
    }

    #[test]
    fn literal_sums() {
        assert_eq!(z_sum(2, 3, &r(1)), r(6));
        let lam = RatFun::lambda();
        assert_eq!(z_sum(1, 2, &lam), lam.clone() - &(RatFun::from_int(2) * &lam * &lam));
        assert_eq!(z_sum(0, 1, &lam), lam);
    }

    #[test]
    fn multi_index_cases() {
        let lam = RatFun::lambda();
        for k in 0..=8 {
            for m in 1..=5 {
                assert_eq!(z_sum_multi(k, 1, m, &lam), z_sum(k, m, &lam));
            }
        }
        assert_eq!(z_sum_multi(0, 0, 3, &r(5)), r(1));
        assert_eq!(z_sum_multi(2, 0, 3, &r(5)), r(0));
        assert_eq!(z_sum_multi(1, 2, 2, &r(1)), r(0));
    }

    #[test]
    fn generating_function_small_cases() {
        let lam = RatFun::lambda();
        assert_eq!(z_sum_multi_gf(0, 1, 2, &lam).unwrap(), lam.clone() - &(lam.clone() * &lam));
        assert_eq!(z_sum_multi_gf(0, 2, 1, &lam).unwrap(), lam.clone() * &lam);
        assert_eq!(z_sum_multi_gf(3, 2, 3, &lam).unwrap(), z_sum_multi(3, 2, 3, &lam));
    }
}

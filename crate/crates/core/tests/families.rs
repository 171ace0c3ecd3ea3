use genocchi_core::algebra::{binomial, q};
use genocchi_core::families::{
    apostol_bernoulli_table, apostol_genocchi_table, bernoulli_table, euler_numbers, euler_table, genocchi_abc_table,
    genocchi_from_euler, genocchi_table, tanh_genocchi, unsigned_genocchi, Logs, SignConvention,
};
use genocchi_core::{Error, Family, FamilySpec, PolyTable, RatFun, Rational, Ring, XPoly};
use proptest::prelude::*;

fn r(n: i64) -> Rational {
    Rational::from(n)
}

fn lam() -> RatFun {
    RatFun::lambda()
}

/// Bernoulli numbers from `Σ_{k<=n} C(n+1, k) B_k = 0`.
fn bernoulli_by_recurrence(max_n: usize) -> Vec<Rational> {
    let mut b = vec![r(1)];
    for n in 1..=max_n {
        let mut acc = Rational::zero();
        for (k, bk) in b.iter().enumerate() {
            acc += &(binomial(n as u64 + 1, k as u64) * bk);
        }
        b.push(-acc / r(n as i64 + 1));
    }
    b
}

/// Apostol-Genocchi numbers from `λ Σ_k C(n,k) G_k + G_n = 2n [n = 1]`.
fn apostol_numbers_by_recurrence(lambda: &RatFun, max_n: usize) -> Vec<RatFun> {
    let one = RatFun::one();
    let denom = lambda.clone() + &one;
    let mut g: Vec<RatFun> = Vec::new();
    for n in 0..=max_n {
        let mut acc = if n == 1 { RatFun::from_int(2) } else { RatFun::zero() };
        for (k, gk) in g.iter().enumerate() {
            acc -= &(lambda.clone() * gk).scale(&binomial(n as u64, k as u64));
        }
        g.push(acc / &denom);
    }
    g
}

#[test]
fn genocchi_numbers_match_bernoulli_recurrence() {
    let g = genocchi_table(31).unwrap().numbers();
    let b = bernoulli_by_recurrence(30);
    for n in 1..=15 {
        let expect = b[2 * n].clone() * &(r(2) * &(r(1) - r(4).pow(n as u32)));
        assert_eq!(g[2 * n], expect, "G_{}", 2 * n);
        assert_eq!(g[2 * n + 1], Rational::zero());
    }
    assert_eq!(g[1], r(1));
}

#[test]
fn apostol_numbers_match_complement_recurrence() {
    let g = apostol_genocchi_table(1, lam(), 12).unwrap().numbers();
    assert_eq!(g, apostol_numbers_by_recurrence(&lam(), 12));
    for v in ["2", "1/3", "-2"] {
        let at = RatFun::from_rational(&q(v));
        let numeric = apostol_genocchi_table(1, q(v), 12).unwrap().numbers();
        let expect: Vec<Rational> =
            apostol_numbers_by_recurrence(&at, 12).iter().map(|x| x.as_rational().unwrap()).collect();
        assert_eq!(numeric, expect, "λ = {v}");
    }
}

#[test]
fn small_apostol_values() {
    let one = RatFun::one();
    let s = lam() + &one;
    let g1 = apostol_genocchi_table(1, lam(), 2).unwrap().numbers();
    assert_eq!(g1[2], RatFun::from_int(-4) * &lam() / (s.clone() * &s));
    let g2 = apostol_genocchi_table(2, lam(), 4).unwrap();
    assert_eq!(g2.rows[2], XPoly::constant(RatFun::from_int(8) / (s.clone() * &s)));
}

#[test]
fn higher_order_is_convolution_power() {
    let base = apostol_genocchi_table(1, lam(), 10).unwrap().numbers();
    let mut prev = apostol_genocchi_table(1, lam(), 10).unwrap().numbers();
    for l in 2..=3 {
        let next: Vec<RatFun> = (0..=10)
            .map(|n| {
                let mut acc = RatFun::zero();
                for k in 0..=n {
                    acc += &(prev[k].clone() * &base[n - k]).scale(&binomial(n as u64, k as u64));
                }
                acc
            })
            .collect();
        assert_eq!(apostol_genocchi_table(l, lam(), 10).unwrap().numbers(), next, "order {l}");
        prev = next;
    }
}

#[test]
fn difference_equations() {
    let x = XPoly::<Rational>::x();
    let xpow = |k: usize| (0..k).fold(XPoly::one(), |acc, _| acc * &x);
    let b = bernoulli_table::<Rational>(1, 12).unwrap();
    let e = euler_table::<Rational>(1, 12).unwrap();
    let g = genocchi_table(12).unwrap();
    for n in 1..=12 {
        let nx = xpow(n - 1).scale_rational(&r(n as i64));
        assert_eq!(b.rows[n].shift(&r(1)) - &b.rows[n], nx, "B_{n}");
        assert_eq!(g.rows[n].shift(&r(1)) + &g.rows[n], nx.scale_rational(&r(2)), "G_{n}");
        assert_eq!(e.rows[n].shift(&r(1)) + &e.rows[n], xpow(n).scale_rational(&r(2)), "E_{n}");
    }
    let ab = apostol_bernoulli_table(1, lam(), 10).unwrap();
    let xl = XPoly::<RatFun>::x();
    for n in 1..=10 {
        let lhs = ab.rows[n].shift(&RatFun::one()).mul_scalar(&lam()) - &ab.rows[n];
        let rhs = (1..n).fold(XPoly::one(), |acc, _| acc * &xl).scale_rational(&r(n as i64));
        assert_eq!(lhs, rhs, "B_{n}(x; λ)");
    }
}

#[test]
fn reduction_lattice() {
    let classical = genocchi_table(10).unwrap().rows;
    assert_eq!(apostol_genocchi_table(1, r(1), 10).unwrap().rows, classical);
    let sym = apostol_genocchi_table(2, lam(), 10).unwrap().rows;
    let abc = genocchi_abc_table(2, lam(), Logs::classical(), 10).unwrap().rows;
    assert_eq!(abc, sym);
    let x = XPoly::<RatFun>::x();
    let order0 = apostol_genocchi_table(0, lam(), 6).unwrap().rows;
    for (n, row) in order0.iter().enumerate() {
        assert_eq!(*row, (0..n).fold(XPoly::one(), |acc, _| acc * &x));
    }
    let two_var =
        FamilySpec::new(Family::TwoVarGenocchi, 10).with_lambda(lam()).with_aux(RatFun::zero(), RatFun::one());
    assert_eq!(PolyTable::build(&two_var).unwrap().rows, apostol_genocchi_table(1, lam(), 10).unwrap().rows);
}

#[test]
fn scaled_log_numbers() {
    // 2t/(λ e^{bt} + 1) is G(bt)/b, so its numbers are G_n(λ) b^{n-1}
    let base = apostol_genocchi_table(1, lam(), 10).unwrap().numbers();
    for b in ["3", "-1/2", "5/3"] {
        let lb = RatFun::from_rational(&q(b));
        let logs = Logs::new(RatFun::zero(), lb.clone(), RatFun::one());
        let got = genocchi_abc_table(1, lam(), logs, 10).unwrap().numbers();
        for n in 1..=10 {
            let expect = base[n].clone() * &lb.pow(n as u32 - 1);
            assert_eq!(got[n], expect, "n = {n}, ln b = {b}");
        }
    }
}

#[test]
fn luo_families_reduce_to_classical() {
    let logs = Logs::new(r(0), r(1), r(1));
    let luo = FamilySpec::new(Family::LuoBernoulliAbc, 10).with_logs(logs.la, logs.lb, logs.lc);
    assert_eq!(PolyTable::build(&luo).unwrap().rows, bernoulli_table::<Rational>(1, 10).unwrap().rows);
    let euler = FamilySpec::new(Family::LuoEulerAb, 10).with_logs(r(0), r(1), r(0));
    let values: Vec<Rational> = PolyTable::build(&euler).unwrap().numbers();
    assert_eq!(values, euler_table::<Rational>(1, 10).unwrap().numbers());
}

#[test]
fn sign_conventions() {
    let signed = genocchi_table(20).unwrap().numbers();
    let unsigned = unsigned_genocchi(20);
    let tanh = tanh_genocchi(20);
    for n in 1..=10 {
        assert_eq!(unsigned[2 * n], signed[2 * n].abs());
        assert_eq!(tanh[2 * n], signed[2 * n]);
    }
    let e = euler_numbers(8, SignConvention::Signed);
    assert_eq!(e, [1, 0, -1, 0, 5, 0, -61, 0, 1385].map(r));
    for n in 1..=10 {
        assert_eq!(genocchi_from_euler(n, SignConvention::Unsigned).unwrap(), unsigned[2 * n]);
    }
    assert!(genocchi_from_euler(0, SignConvention::Unsigned).is_err());
}

#[test]
fn invalid_specs() {
    assert!(matches!(apostol_genocchi_table(1, r(-1), 4), Err(Error::SingularParameter(_))));
    let sym = FamilySpec::<RatFun>::new(Family::ApostolGenocchi, 40).with_lambda(lam());
    assert!(matches!(PolyTable::build_with_precision(&sym, 33), Err(Error::Config(_))));
    let luo = FamilySpec::new(Family::LuoBernoulliAbc, 4).with_logs(r(2), r(2), r(1));
    assert!(matches!(PolyTable::build(&luo), Err(Error::SingularParameter(_))));
    let euler = FamilySpec::<Rational>::new(Family::UnsignedGenocchi, 4).with_order(2);
    assert!(matches!(PolyTable::build(&euler), Err(Error::InvalidParameter(_))));
    let missing = FamilySpec::<Rational>::new(Family::GenocchiAbc, 4);
    assert!(matches!(PolyTable::build(&missing), Err(Error::InvalidParameter(_))));
    // λ = 1 is fine for the Bernoulli branch, where t/(e^t - 1) has a removable pole
    assert!(apostol_bernoulli_table(1, r(1), 4).is_ok());
}

fn small_rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=3).prop_map(|(p, d)| Rational::new(p, d).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn appell_property(la in small_rational(), lb in small_rational(), lc in small_rational(), l in 0u32..4, lambda in small_rational()) {
        prop_assume!(lambda != r(-1));
        let t = genocchi_abc_table(l, lambda, Logs::new(la, lb, lc.clone()), 10).unwrap();
        for n in 1..=10 {
            prop_assert_eq!(t.rows[n].derivative(), t.rows[n - 1].scale_rational(&(lc.clone() * &r(n as i64))));
        }
    }

    #[test]
    fn json_round_trip(l in 0u32..4, lambda in small_rational()) {
        prop_assume!(lambda != r(-1));
        let t = apostol_genocchi_table(l, lambda, 6).unwrap();
        let back: PolyTable<Rational> = serde_json::from_str(&serde_json::to_string(&t).unwrap()).unwrap();
        prop_assert_eq!(back, t);
    }
}

use genocchi_core::algebra::{binomial, q, IntoExact};
use genocchi_core::identities::{
    run_suite, Checker, ExpectedFailure, IdentityId, LambdaChoice, LogTuple, Status, SuiteConfig, Tables,
};
use genocchi_core::zsum::z_sum_multi;
use genocchi_core::{Error, ExactScalar, Field, RatFun, Rational, Ring};

fn r(n: i64) -> Rational {
    Rational::from(n)
}

fn lam() -> RatFun {
    RatFun::lambda()
}

fn symbolic() -> Checker<RatFun> {
    Checker::new(Tables::new(lam(), 20, 40))
}

fn at(v: &str) -> Checker<Rational> {
    Checker::new(Tables::new(q(v), 20, 40))
}

fn exact(f: RatFun) -> ExactScalar {
    f.to_exact()
}

#[test]
fn multiplication_hand_instance() {
    // G_2(x) = 2x - 1: G_2(0) = 3 (G_2(0) - G_2(1/3) + G_2(2/3))
    let g2 = |x: Rational| r(2) * &x - r(1);
    let rhs = r(3) * &(g2(r(0)) - g2(q("1/3")) + &g2(q("2/3")));
    assert_eq!(rhs, r(-1));
    assert!(symbolic().t2_1(2, 1, 3).unwrap().is_zero());
    assert!(at("1").c2_3(2, 3).unwrap().is_zero());
}

#[test]
fn raabe_hand_instance() {
    // G_1(0) = 1 = -2 (B_1(0) - B_1(1/2)) = -2 (-1/2 - 0)
    assert_eq!(r(-2) * &(q("-1/2") - r(0)), r(1));
    assert!(at("1").c2_6(1, 2).unwrap().is_zero());
    assert!(symbolic().t2_4(1, 1, 2).unwrap().is_zero());
}

#[test]
fn order_lowering_hand_values() {
    let c = at("1");
    let g2 = c.tables().genocchi(2, 1).unwrap();
    assert_eq!(g2[2].coeff(0), r(2));
    assert_eq!(g2[3].coeff(0), r(-6));
    assert!(c.t2_15(2, 1).unwrap().is_zero());
    assert!(c.t2_15(3, 1).unwrap().is_zero());
}

#[test]
fn howard_hand_values() {
    let c = at("1");
    // (9 - 3) G_2 = -6
    assert!(c.c2_12(2, 3).unwrap().is_zero());
    assert!(c.c2_12(0, 3).unwrap().is_zero());
    for n in 1..=2 {
        assert!(c.c2_14(n, 1, 2).unwrap().is_zero());
    }
}

#[test]
fn alternating_sum_hand_values() {
    let c = at("1");
    assert!(c.c2_8(1, 1, 2).unwrap().is_zero());
    // G_2(3) = 5
    assert_eq!(c.tables().genocchi_one(1).unwrap()[2].eval(&r(3)), r(5));
    for n in 0..6 {
        assert!(symbolic().t2_7(n, 1, 1).unwrap().is_zero());
    }
}

#[test]
fn printed_log_derivative_residual() {
    let c = symbolic();
    let res = c.r3_4_printed(2, 1, &LogTuple::classical()).unwrap();
    let s = lam() + &RatFun::one();
    assert_eq!(res.residual, vec![exact(RatFun::from_int(4) * &lam() / (s.clone() * &s))]);
    assert!(c.r3_4_corrected(2, 1, &LogTuple::classical()).unwrap().is_zero());
}

#[test]
fn printed_ab_bernoulli_addition_fails_at_n_one() {
    // LHS B_1(x + y) = x + y - 1/2, RHS 1/2
    let c = at("1");
    let res = c.r3_5_1(1, &r(0), &LogTuple::classical()).unwrap();
    assert_eq!(res.residual, vec![r(-1).to_exact(), r(1).to_exact()]);
    let res = c.r3_5_1(1, &q("1/2"), &LogTuple::classical()).unwrap();
    assert_eq!(res.residual, vec![q("-1/2").to_exact(), r(1).to_exact()]);
}

#[test]
fn euler_addition_hand_values() {
    let c = at("1");
    assert!(c.r3_5_2(1, &q("2/3")).unwrap().is_zero());
    assert!(c.r3_5_3(2, &q("-5")).unwrap().is_zero());
}

#[test]
fn preconditions_are_enforced() {
    let c = symbolic();
    assert!(matches!(c.t2_1(3, 1, 2), Err(Error::InvalidParameter(_))));
    assert!(matches!(c.t2_4(3, 1, 3), Err(Error::InvalidParameter(_))));
    assert!(matches!(c.t2_9(3, 1, 4), Err(Error::InvalidParameter(_))));
    assert!(matches!(c.t2_13(3, 1, 5), Err(Error::InvalidParameter(_))));
    assert!(matches!(c.t4_1(3, 2, &r(1), &r(1)), Err(Error::InvalidParameter(_))));
    assert!(matches!(c.t2_15(3, 0), Err(Error::InvalidParameter(_))));
    let same = LogTuple::new(r(2), r(2), r(1));
    assert!(matches!(c.t3_1(3, 1, &same), Err(Error::SingularParameter(_))));
    assert!(matches!(c.t3_2(3, 1, &same), Err(Error::SingularParameter(_))));
    assert!(matches!(c.r3_5_3(3, &r(0)), Err(Error::InvalidParameter(_))));
}

#[test]
fn derivative_beyond_degree_is_zero_polynomial() {
    let c = symbolic();
    let logs = LogTuple::new(q("1/2"), r(-3), q("4/5"));
    for j in 3..6 {
        let res = c.t3_3_5(2, 1, j, &logs).unwrap();
        assert!(res.is_zero());
        assert_eq!(res.status, Status::Pass);
    }
}

#[test]
fn degenerate_log_parameters() {
    let c = symbolic();
    // ln c = 0 leaves only k = n
    let flat = LogTuple::new(r(1), r(3), r(0));
    assert!(c.t3_3_1(5, 2, &flat).unwrap().is_zero());
    // β = 0 convolves against x^r rows
    let logs = LogTuple::new(q("-1/2"), r(2), r(3));
    assert!(c.t3_3_4(6, 2, 0, &q("3/4"), &logs).unwrap().is_zero());
}

#[test]
fn spot_values_of_lambda() {
    let logs = LogTuple::new(q("2/3"), r(-1), q("5/2"));
    for v in ["1", "2", "1/3", "-2"] {
        let c = at(v);
        for n in 0..=8 {
            let checks = [
                c.t2_1(n, 2, 3).unwrap(),
                c.t2_4(n, 2, 2).unwrap(),
                c.t2_7(n, 2, 3).unwrap(),
                c.c2_11(n, 3).unwrap(),
                c.t2_15(n + 1, 2).unwrap(),
                c.t3_2(n, 2, &logs).unwrap(),
                c.t3_3_3(n, 1, &logs).unwrap(),
                c.r3_4_corrected(n, 2, &logs).unwrap(),
                c.t4_1(n, 3, &q("1/2"), &r(3)).unwrap(),
                c.r4_2(n, 3, &q("-2/3")).unwrap(),
                c.complement(n).unwrap(),
            ];
            for res in checks {
                assert!(res.is_zero(), "λ = {v}: {} ({})", res.id, res.params);
            }
        }
    }
}

#[test]
fn differential_equations() {
    let c = symbolic();
    for l in 0..=3 {
        for eq in [1, 2] {
            assert!(c.phi_pde(l, eq, 20).unwrap().is_zero(), "l = {l}, equation {eq}");
        }
    }
    assert!(matches!(c.phi_pde(1, 3, 20), Err(Error::InvalidParameter(_))));
}

/// `-Σ_{i=1}^{l} C(l,i) (-1)^i Z^{(i)}_k(m-1; λ)`
fn mixed_z(k: u32, l: u32, m: u64, lambda: &RatFun) -> RatFun {
    let mut acc = RatFun::zero();
    for i in 1..=l {
        let w = binomial(l as u64, i as u64) * &r(if i % 2 == 0 { -1 } else { 1 });
        acc += &z_sum_multi(k, i, m - 1, lambda).scale(&w);
    }
    acc
}

#[test]
fn howard_recurrences_hold_with_binomial_mixture_of_z_sums() {
    // The printed right-hand sides use Z^{(l)} alone, which only agrees with
    // this mixture at l = 1.
    let c = symbolic();
    let t = c.tables();
    let lambda = lam();
    for l in 1..=3u32 {
        for m in [3u64, 5] {
            let g = t.genocchi(l, 1).unwrap();
            let gm = t.genocchi(l, m as u32).unwrap();
            for n in 0..=12usize {
                let lhs = gm[n].coeff(0).scale(&r(m as i64).pow(n as u32)) - g[n].coeff(0).scale(&r(m as i64).pow(l));
                let mut rhs = RatFun::zero();
                for k in 0..=n {
                    let w = binomial(n as u64, k as u64) * &r(m as i64).pow(k as u32);
                    rhs += &(gm[k].coeff(0) * &mixed_z((n - k) as u32, l, m, &lambda)).scale(&w);
                }
                assert_eq!(lhs, rhs, "odd m: l={l} m={m} n={n}");
            }
        }
        for m in [2u64, 4] {
            let g = t.genocchi(l, 1).unwrap();
            let bm = t.bernoulli(l, m as u32).unwrap();
            let sign = r(-2).pow(l);
            for n in 0..=12usize {
                let lhs = g[n].coeff(0).scale(&r(m as i64).pow(l))
                    - bm[n].coeff(0).scale(&(sign.clone() * &r(m as i64).pow(n as u32)));
                let mut rhs = RatFun::zero();
                for k in 0..=n {
                    let w = binomial(n as u64, k as u64) * &r(m as i64).pow(k as u32);
                    rhs += &(bm[k].coeff(0) * &mixed_z((n - k) as u32, l, m, &lambda)).scale(&w);
                }
                assert_eq!(lhs, rhs.scale(&-sign.clone()), "even m: l={l} m={m} n={n}");
            }
        }
    }
}

#[test]
fn printed_howard_recurrences_hold_at_order_one_only() {
    let c = symbolic();
    for n in 0..=10 {
        assert!(c.t2_9(n, 1, 3).unwrap().is_zero());
        assert!(c.t2_13(n, 1, 2).unwrap().is_zero());
    }
    assert!(!c.t2_9(2, 2, 3).unwrap().is_zero());
    assert!(!c.t2_13(2, 2, 2).unwrap().is_zero());
}

fn small_config() -> SuiteConfig {
    SuiteConfig { max_n: 6, max_order: 2, log_samples: 2, ..SuiteConfig::default() }
}

#[test]
fn empty_grid_gives_empty_results() {
    let cfg = SuiteConfig { only: Some(vec![]), ..small_config() };
    let report = run_suite(&cfg).unwrap();
    assert!(report.results.is_empty());
    assert!(report.ok());
}

#[test]
fn small_precision_is_a_configuration_error() {
    let cfg = SuiteConfig { max_n: 30, precision: Some(33), ..SuiteConfig::default() };
    assert!(matches!(run_suite(&cfg), Err(Error::Config(_))));
    let cfg = SuiteConfig { precision: Some(32), ..SuiteConfig::default() };
    assert_eq!(cfg.precision().unwrap(), 32);
}

#[test]
fn singular_lambda_is_rejected() {
    let cfg = SuiteConfig { lambda: LambdaChoice::Rational(r(-1)), ..small_config() };
    assert!(matches!(run_suite(&cfg), Err(Error::SingularParameter(_))));
}

#[test]
fn expectations_are_reverified() {
    // an identity that holds cannot be an expected failure
    let cfg = SuiteConfig {
        only: Some(vec![IdentityId::COMPLEMENT, IdentityId::R3_4_printed]),
        expected_failures: vec![
            ExpectedFailure::new(IdentityId::COMPLEMENT),
            ExpectedFailure::new(IdentityId::R3_4_printed),
        ],
        ..small_config()
    };
    let report = run_suite(&cfg).unwrap();
    let outcomes: Vec<_> = report.expectations.iter().map(|e| (e.expected.id, e.outcome)).collect();
    assert_eq!(outcomes, [(IdentityId::COMPLEMENT, "resolved"), (IdentityId::R3_4_printed, "confirmed")]);
    assert!(!report.ok());

    let cfg = SuiteConfig { only: Some(vec![IdentityId::R3_4_printed]), expected_failures: vec![], ..small_config() };
    let report = run_suite(&cfg).unwrap();
    assert!(report.summary.fail > 0);
    assert!(!report.ok());
}

#[test]
fn scoped_expectation_covers_only_higher_orders() {
    let cfg = SuiteConfig { only: Some(vec![IdentityId::T2_9]), ..small_config() };
    let report = run_suite(&cfg).unwrap();
    for res in &report.results {
        let l = res.params.get_int("l").unwrap();
        if l == 1 {
            assert_eq!(res.status, Status::Pass, "{}", res.params);
        } else if !res.is_zero() {
            assert_eq!(res.status, Status::DocumentedDiscrepancy);
        }
    }
    assert!(report.ok());
}

#[test]
fn suite_is_deterministic_and_monotone() {
    let only = Some(vec![IdentityId::T2_1, IdentityId::T3_3_4, IdentityId::R3_4_printed, IdentityId::T4_1]);
    let small = SuiteConfig { only: only.clone(), ..small_config() };
    let a = run_suite(&small).unwrap().to_json().unwrap();
    let b = run_suite(&small).unwrap().to_json().unwrap();
    assert_eq!(a, b);

    let large = run_suite(&SuiteConfig { only, max_n: 9, ..small_config() }).unwrap();
    let small = run_suite(&small).unwrap();
    for res in &small.results {
        let same = large.results.iter().find(|x| x.id == res.id && x.params == res.params).expect("grid grows");
        assert_eq!(same.status, res.status, "{} ({})", res.id, res.params);
    }
}

#[test]
fn report_schema() {
    let cfg = SuiteConfig { only: Some(vec![IdentityId::R3_4_printed]), ..small_config() };
    let v: serde_json::Value = serde_json::from_str(&run_suite(&cfg).unwrap().to_json().unwrap()).unwrap();
    assert_eq!(v["suite_version"], "1.0.0");
    let first_bad = v["results"].as_array().unwrap().iter().find(|x| x["status"] == "documented_discrepancy").unwrap();
    assert_eq!(first_bad["id"], "R3_4_printed");
    assert_eq!(first_bad["params"], serde_json::json!({"n": 2, "l": 1, "la": "0", "lb": "1", "lc": "1"}));
    assert_eq!(first_bad["residual_sample"], serde_json::json!({"num": ["0", "4"], "den": ["1", "2", "1"]}));
    assert!(v["summary"]["pass"].is_u64());
    assert!(v["summary"]["fail"].is_u64());
    assert!(v["summary"]["documented_discrepancy"].is_u64());
}

#[test]
fn lambda_choice_parsing() {
    assert_eq!("symbolic".parse::<LambdaChoice>().unwrap(), LambdaChoice::Symbolic);
    assert_eq!("-3/6".parse::<LambdaChoice>().unwrap(), LambdaChoice::Rational(q("-1/2")));
    assert!("lambda".parse::<LambdaChoice>().is_err());
    assert_eq!(RatFun::lambda().pow(2).inv().unwrap() * &RatFun::lambda().pow(2), RatFun::one());
}

//! Acceptance criteria: exact golden values, identity grids and end-to-end
//! runs of the command line, each under a fixed time bound.

use std::io::Write;
use std::time::{Duration, Instant};

use genocchi_core::families::genocchi_table;
use genocchi_core::identities::{
    bridge_check, dual_construction_checks, euler_formula_conventions, run_suite, Checker, ConsistencyCheck,
    IdentityId, LambdaChoice, LogTuple, Status, SuiteConfig, Tables,
};
use genocchi_core::zsum::{z_sum_multi, z_sum_multi_gf};
use genocchi_core::{RatFun, Rational, Ring, XPoly};

use IdentityId::*;

/// Detail on success, reason on failure.
pub type Outcome = Result<String, String>;

/// One numbered criterion with its wall-clock bound.
pub struct Criterion {
    pub number: u32,
    pub name: &'static str,
    pub bound: Duration,
    pub check: fn() -> Outcome,
}

fn r(n: i64) -> Rational {
    Rational::from(n)
}

fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

fn checks_pass(checks: &[ConsistencyCheck]) -> Outcome {
    match checks.iter().find(|c| !c.passed) {
        None => Ok(format!("{} checks", checks.len())),
        Some(c) => Err(format!("{}: {}", c.name, c.detail.as_deref().unwrap_or(""))),
    }
}

/// Runs the grid for `ids` with no expected failures: every residual must vanish.
fn strict(ids: &[IdentityId], lambda: LambdaChoice, max_n: usize) -> Outcome {
    let cfg =
        SuiteConfig { lambda, max_n, only: Some(ids.to_vec()), expected_failures: vec![], ..SuiteConfig::default() };
    let report = run_suite(&cfg).map_err(|e| e.to_string())?;
    let failed: Vec<_> = report.results.iter().filter(|r| r.status != Status::Pass).collect();
    for id in ids {
        if !report.results.iter().any(|r| r.id == *id) {
            return Err(format!("{id} has an empty grid"));
        }
    }
    match failed.first() {
        None => Ok(format!("{} residuals zero", report.results.len())),
        Some(first) => Err(format!(
            "{} of {} residuals nonzero, first {} ({})",
            failed.len(),
            report.results.len(),
            first.id,
            first.params
        )),
    }
}

fn golden_numbers() -> Outcome {
    let g = genocchi_table(31).map_err(|e| e.to_string())?.numbers();
    let even: Vec<Rational> = (1..=6).map(|n| g[2 * n].clone()).collect();
    if even != [-1, 1, -3, 17, -155, 2073].map(r) {
        return Err(format!("G_2..G_12 = {even:?}"));
    }
    if g[0] != r(0) || g[1] != r(1) {
        return Err(format!("G_0 = {}, G_1 = {}", g[0], g[1]));
    }
    match (3..=31).step_by(2).find(|&n| !g[n].is_zero()) {
        None => Ok("G_0..G_31".into()),
        Some(n) => Err(format!("G_{n} = {}", g[n])),
    }
}

fn golden_rows() -> Outcome {
    let rows = genocchi_table(6).map_err(|e| e.to_string())?.rows;
    let printed: [&[i64]; 6] =
        [&[1], &[-1, 2], &[0, -3, 3], &[1, 0, -6, 4], &[0, 5, 0, -10, 5], &[-3, 0, 15, 0, -15, 6]];
    for (i, c) in printed.iter().enumerate() {
        let want = XPoly::new(c.iter().map(|&v| r(v)).collect());
        if rows[i + 1] != want {
            return Err(format!("G_{}(x) = {}", i + 1, rows[i + 1]));
        }
    }
    Ok("G_1(x)..G_6(x)".into())
}

fn bridges() -> Outcome {
    checks_pass(&bridge_check(15).map_err(|e| e.to_string())?)
}

fn euler_formula() -> Outcome {
    let report = euler_formula_conventions(10).map_err(|e| e.to_string())?;
    match report.tangent_convention {
        Some(c) => Ok(format!("Euler numbers {c:?}")),
        None => Err("no sign convention reproduces the tangent sequence".into()),
    }
}

fn multiplication() -> Outcome {
    let sym = strict(&[T2_1, T2_4], LambdaChoice::Symbolic, 16)?;
    let one = strict(&[T2_4, C2_5, C2_6], LambdaChoice::Rational(r(1)), 16)?;
    Ok(format!("symbolic {sym}, λ = 1 {one}"))
}

fn z_sums() -> Outcome {
    let lam = RatFun::lambda();
    for k in 0..=8 {
        for l in 0..=3 {
            for m in 1..=4 {
                if z_sum_multi(k, l, m, &lam) != z_sum_multi_gf(k, l, m, &lam).map_err(|e| e.to_string())? {
                    return Err(format!("k = {k}, l = {l}, m = {m}"));
                }
            }
        }
    }
    strict(&[T2_7], LambdaChoice::Symbolic, 10)
}

fn howard() -> Outcome {
    strict(&[T2_9, C2_10, C2_11, C2_12, T2_13, C2_14], LambdaChoice::Symbolic, 16)
}

fn order_lowering() -> Outcome {
    strict(&[T2_15], LambdaChoice::Symbolic, 16)
}

fn abc_suite() -> Outcome {
    strict(&[T3_1, T3_2, T3_3_1, T3_3_2, T3_3_3, T3_3_4, T3_3_5, T3_3_6], LambdaChoice::Symbolic, 12)
}

/// Runs the command line in process; standard error is discarded.
fn genocchi_bin(args: &[&str]) -> Result<(Option<i32>, Vec<u8>), String> {
    let mut out = Vec::new();
    let code =
        genocchi_cli::run(std::iter::once("genocchi").chain(args.iter().copied()), &mut out, &mut std::io::sink());
    Ok((Some(code as i32), out))
}

fn discrepancies() -> Outcome {
    let checker = Checker::new(Tables::new(RatFun::lambda(), 8, 40));
    let res = checker.r3_4_printed(2, 1, &LogTuple::classical()).map_err(|e| e.to_string())?;
    let s = RatFun::lambda() + &RatFun::one();
    let want = RatFun::from_int(4) * &RatFun::lambda() / (s.clone() * &s);
    if res.residual != [want.into()] {
        return Err(format!("printed recurrence residual {:?}", res.residual));
    }
    strict(&[R3_4_corrected, R3_5_2, R3_5_3], LambdaChoice::Symbolic, 12)?;
    let at_one = Checker::new(Tables::new(r(1), 8, 40));
    if at_one.r3_5_1(1, &r(0), &LogTuple::classical()).map_err(|e| e.to_string())?.is_zero() {
        return Err("a,b Bernoulli addition holds at n = 1".into());
    }
    let (code, stdout) = genocchi_bin(&["verify", "--suite", "all", "--max-n", "12", "--lambda", "symbolic"])?;
    let summary = String::from_utf8_lossy(&stdout).trim().to_string();
    if code != Some(0) || summary.ends_with("documented_discrepancy 0") {
        return Err(format!("default run exit {code:?}, {summary}"));
    }
    let (code, _) = genocchi_bin(&["verify", "--only", "R3_4_printed,R3_5_1", "--max-n", "12", "--expect-pass"])?;
    if code != Some(1) {
        return Err(format!("strict run of the discrepancies exit {code:?}"));
    }
    Ok(summary)
}

fn two_variable() -> Outcome {
    let suite = strict(&[T4_1, R4_2], LambdaChoice::Symbolic, 12)?;
    let dual = checks_pass(&dual_construction_checks(16).map_err(|e| e.to_string())?)?;
    Ok(format!("{suite}, {dual}"))
}

fn pde() -> Outcome {
    strict(&[PHI_PDE], LambdaChoice::Symbolic, 16)
}

fn full_run() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let mut reports = Vec::new();
    for name in ["a.json", "b.json"] {
        let path = dir.path().join(name);
        let (code, _) = genocchi_bin(&["verify", "--suite", "all", "--report", path.to_str().unwrap()])?;
        if code != Some(0) {
            return Err(format!("exit {code:?}"));
        }
        reports.push(std::fs::read(&path).map_err(|e| e.to_string())?);
    }
    if reports[0] != reports[1] {
        return Err("reports differ between runs".into());
    }
    Ok(format!("2 runs, {} identical bytes", reports[0].len()))
}

pub fn criteria() -> Vec<Criterion> {
    let c = |number, name, secs_bound, check| Criterion { number, name, bound: secs(secs_bound), check };
    vec![
        c(1, "Genocchi golden values", 1, golden_numbers),
        c(2, "Genocchi golden rows", 1, golden_rows),
        c(3, "Bernoulli and Euler bridges, n <= 15", 1, bridges),
        c(4, "Euler-number formula vs tangent sequence, n <= 10", 1, euler_formula),
        c(5, "multiplication theorems, n <= 16", 60, multiplication),
        c(6, "alternating sums", 60, z_sums),
        c(7, "Howard-type recurrences, l <= 3, n <= 16", 60, howard),
        c(8, "order lowering", 5, order_lowering),
        c(9, "a,b,c identities", 60, abc_suite),
        c(10, "documented discrepancies", 60, discrepancies),
        c(11, "two-variable and Hermite families", 60, two_variable),
        c(12, "kernel differential equations", 5, pde),
        c(13, "full verify run, deterministic", 300, full_run),
    ]
}

/// Runs every criterion, writing one PASS/FAIL line each, and returns the
/// number that failed. Exceeding the bound is a failure.
pub fn run_all(out: &mut dyn Write) -> std::io::Result<usize> {
    let all = criteria();
    let mut failed = 0;
    for c in &all {
        let start = Instant::now();
        let outcome = (c.check)();
        let elapsed = start.elapsed();
        let (ok, detail) = match outcome {
            Ok(d) if elapsed < c.bound => (true, d),
            Ok(d) => (false, format!("{d}; over the {} s bound", c.bound.as_secs())),
            Err(d) => (false, d),
        };
        if !ok {
            failed += 1;
        }
        writeln!(
            out,
            "{} {:>2} {} [{:.2} s < {} s]: {detail}",
            if ok { "PASS" } else { "FAIL" },
            c.number,
            c.name,
            elapsed.as_secs_f64(),
            c.bound.as_secs()
        )?;
    }
    writeln!(out, "{} of {} criteria pass", all.len() - failed, all.len())?;
    Ok(failed)
}

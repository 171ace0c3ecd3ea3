//! Whole-sequence consistency checks that are not single residuals: golden
//! values, the Bernoulli and Euler bridges, the Euler-number sign
//! convention, and agreement of the two constructions of the Hermite and
//! two-variable families.

use serde::Serialize;

use crate::algebra::{RatFun, Rational, Ring, XPoly};
use crate::families::{
    bernoulli_table, euler_table, genocchi_from_euler, genocchi_table, unsigned_genocchi, Family, FamilySpec,
    PolyTable, SignConvention,
};
use crate::Error;

/// Outcome of one named consistency check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConsistencyCheck {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl ConsistencyCheck {
    fn new(name: impl Into<String>, mismatches: Vec<String>) -> Self {
        let detail = if mismatches.is_empty() { None } else { Some(mismatches.join("; ")) };
        ConsistencyCheck { name: name.into(), passed: detail.is_none(), detail }
    }
}

fn r(n: i64) -> Rational {
    Rational::from(n)
}

/// `G_0..G_12` against `0, 1, -1, 0, 1, 0, -3, 0, 17, 0, -155, 0, 2073` and
/// `G_1(x)..G_6(x)` against their expanded forms.
pub fn golden_genocchi_check() -> Result<Vec<ConsistencyCheck>, Error> {
    let table = genocchi_table(12)?;
    let numbers = table.numbers();
    let expected = [0, 1, -1, 0, 1, 0, -3, 0, 17, 0, -155, 0, 2073];
    let mismatches = expected
        .iter()
        .enumerate()
        .filter(|(n, &v)| numbers[*n] != r(v))
        .map(|(n, v)| format!("G_{n} = {}, expected {v}", numbers[n]))
        .collect();
    let numbers_check = ConsistencyCheck::new("genocchi_numbers", mismatches);

    let rows: [&[i64]; 6] = [&[1], &[-1, 2], &[0, -3, 3], &[1, 0, -6, 4], &[0, 5, 0, -10, 5], &[-3, 0, 15, 0, -15, 6]];
    let mismatches = rows
        .iter()
        .enumerate()
        .filter_map(|(i, c)| {
            let want = XPoly::new(c.iter().map(|&v| r(v)).collect());
            (table.rows[i + 1] != want).then(|| format!("G_{}(x) = {}, expected {want}", i + 1, table.rows[i + 1]))
        })
        .collect();
    Ok(vec![numbers_check, ConsistencyCheck::new("genocchi_rows", mismatches)])
}

/// `G_{2n} = 2(1 - 2^{2n}) B_{2n}` and `G_{2n} = 2n E_{2n-1}(0)` for
/// `1 <= n <= max_n`.
pub fn bridge_check(max_n: usize) -> Result<Vec<ConsistencyCheck>, Error> {
    let top = 2 * max_n;
    let g = genocchi_table(top)?.numbers();
    let b = bernoulli_table::<Rational>(1, top)?.numbers();
    let e = euler_table::<Rational>(1, top)?.numbers();
    let mut bern = Vec::new();
    let mut eul = Vec::new();
    for n in 1..=max_n {
        let k = 2 * n;
        let via_b = b[k].clone() * &(r(2) * &(r(1) - r(2).pow(k as u32)));
        if via_b != g[k] {
            bern.push(format!("n = {n}: {} vs {via_b}", g[k]));
        }
        let via_e = e[k - 1].clone() * &r(k as i64);
        if via_e != g[k] {
            eul.push(format!("n = {n}: {} vs {via_e}", g[k]));
        }
    }
    Ok(vec![ConsistencyCheck::new("bernoulli_bridge", bern), ConsistencyCheck::new("euler_bridge", eul)])
}

/// One pairing of Euler-number signs with a reference Genocchi sequence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConventionTrial {
    pub euler_numbers: SignConvention,
    pub genocchi_numbers: SignConvention,
    pub matches: bool,
}

/// Which sign conventions make the Euler-number formula reproduce a
/// Genocchi sequence, and the one that reproduces the tangent-EGF sequence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EulerFormulaReport {
    pub max_n: usize,
    pub trials: Vec<ConventionTrial>,
    pub tangent_convention: Option<SignConvention>,
}

impl EulerFormulaReport {
    pub fn reproduces_tangent(&self) -> bool {
        self.tangent_convention.is_some()
    }
}

/// Tries both Euler sign conventions against the signed (`2t/(e^t+1)`) and
/// unsigned (tangent EGF) Genocchi numbers for `1 <= n <= max_n`.
pub fn euler_formula_conventions(max_n: usize) -> Result<EulerFormulaReport, Error> {
    let signed = genocchi_table(2 * max_n)?.numbers();
    let unsigned = unsigned_genocchi(2 * max_n);
    let conventions = [SignConvention::Signed, SignConvention::Unsigned];
    let mut trials = Vec::new();
    for euler in conventions {
        let values: Vec<Rational> = (1..=max_n).map(|n| genocchi_from_euler(n, euler)).collect::<Result<_, _>>()?;
        for target in conventions {
            let reference = if target == SignConvention::Signed { &signed } else { &unsigned };
            let matches = values.iter().enumerate().all(|(i, v)| *v == reference[2 * (i + 1)]);
            trials.push(ConventionTrial { euler_numbers: euler, genocchi_numbers: target, matches });
        }
    }
    let tangent_convention =
        trials.iter().find(|t| t.matches && t.genocchi_numbers == SignConvention::Unsigned).map(|t| t.euler_numbers);
    Ok(EulerFormulaReport { max_n, trials, tangent_convention })
}

/// Generating-function rows against convolution-sum rows for the Hermite
/// and two-variable families over `ℚ(λ)`.
pub fn dual_construction_checks(max_n: usize) -> Result<Vec<ConsistencyCheck>, Error> {
    let lam = RatFun::lambda();
    let q = |p: i64, d: i64| RatFun::from_rational(&Rational::new(p, d).expect("nonzero"));
    let mut specs = vec![
        ("hermite-genocchi".to_string(), FamilySpec::new(Family::HermiteGenocchi, max_n).with_lambda(lam.clone())),
        (
            "hermite-genocchi-ab(2, -1/3)".to_string(),
            FamilySpec::new(Family::HermiteGenocchiAb, max_n).with_lambda(lam.clone()).with_scales(q(2, 1), q(-1, 3)),
        ),
    ];
    for (order, y, p) in [(1, (1, 2), (3, 1)), (2, (-2, 3), (1, 1)), (3, (5, 1), (-1, 4))] {
        let spec = FamilySpec::new(Family::TwoVarGenocchi, max_n)
            .with_order(order)
            .with_lambda(lam.clone())
            .with_aux(q(y.0, y.1), q(p.0, p.1));
        specs.push((format!("two-var-genocchi(l = {order}, y = {}/{}, p = {}/{})", y.0, y.1, p.0, p.1), spec));
    }
    specs
        .into_iter()
        .map(|(name, spec)| {
            let egf = PolyTable::build(&spec)?;
            let sum = PolyTable::build_by_sum(&spec)?;
            let mismatches =
                (0..=max_n).filter(|&n| egf.rows[n] != sum.rows[n]).map(|n| format!("row {n} differs")).collect();
            Ok(ConsistencyCheck::new(format!("dual_construction {name}"), mismatches))
        })
        .collect()
}

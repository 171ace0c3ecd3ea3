//! Identities as exact residuals (`LHS - RHS`) and the grid runner that
//! classifies them.

mod checks;
mod sequences;
mod suite;
mod tables;

use std::fmt;
use std::str::FromStr;

use serde::ser::SerializeMap;
use serde::{Deserialize, Serialize, Serializer};

use crate::algebra::{ExactScalar, IntoExact, Ring, XPoly};
use crate::Error;

pub use checks::{Checker, LogTuple};
pub use sequences::{
    bridge_check, dual_construction_checks, euler_formula_conventions, golden_genocchi_check, ConsistencyCheck,
    ConventionTrial, EulerFormulaReport,
};
pub use suite::{
    log_tuples, run_suite, ExpectationOutcome, ExpectedFailure, LambdaChoice, SuiteConfig, SuiteReport, Summary,
    SUITE_VERSION,
};
pub use tables::Tables;

macro_rules! identity_ids {
    ($($v:ident => $doc:literal),* $(,)?) => {
        #[allow(non_camel_case_types)]
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
        pub enum IdentityId {
            $(#[doc = $doc] $v,)*
        }

        impl IdentityId {
            pub const ALL: &'static [IdentityId] = &[$(IdentityId::$v,)*];

            pub fn name(self) -> &'static str {
                match self {
                    $(IdentityId::$v => stringify!($v),)*
                }
            }

            pub fn description(self) -> &'static str {
                match self {
                    $(IdentityId::$v => $doc,)*
                }
            }
        }
    };
}

identity_ids! {
    T2_1 => "multiplication formula, odd m, order l, Apostol parameter",
    C2_2 => "multiplication formula, odd m, order l, λ = 1",
    C2_3 => "multiplication formula, odd m, order 1, λ = 1",
    T2_4 => "Genocchi in terms of Apostol-Bernoulli, even m, order l",
    C2_5 => "Genocchi in terms of Bernoulli, even m, order l, λ = 1",
    C2_6 => "Raabe-type formula, even m, order 1, λ = 1",
    T2_7 => "multiple alternating sums through Apostol-Genocchi polynomials",
    C2_8 => "multiple alternating sums, λ = 1",
    T2_9 => "Howard-type recurrence, odd m, order l",
    C2_10 => "Howard-type recurrence, odd m, order l, λ = 1",
    C2_11 => "Howard-type recurrence, odd m, order 1",
    C2_12 => "Howard-type recurrence, odd m, order 1, λ = 1",
    T2_13 => "Howard-type recurrence, even m, order l",
    C2_14 => "Howard-type recurrence, even m, order l, λ = 1",
    T2_15 => "order lowering for Apostol-Genocchi numbers",
    T3_1 => "a,b numbers through Apostol-Genocchi polynomials",
    T3_2 => "a,b,c polynomials through Apostol-Genocchi polynomials",
    T3_3_1 => "a,b,c polynomials: unit shift",
    T3_3_2 => "a,b,c polynomials: shift by the order",
    T3_3_3 => "a,b,c polynomials: reflection",
    T3_3_4 => "a,b,c polynomials: addition of orders",
    T3_3_5 => "a,b,c polynomials: repeated derivative",
    T3_3_6 => "a,b,c polynomials: definite integral",
    R3_4_printed => "logarithmic-derivative recurrence as printed",
    R3_4_corrected => "logarithmic-derivative recurrence, rederived",
    R3_5_1 => "a,b Bernoulli addition through Genocchi polynomials",
    R3_5_2 => "Genocchi addition through Euler polynomials",
    R3_5_3 => "Genocchi addition through Euler polynomials, closed form",
    T4_1 => "multiplication formula for two-variable Genocchi polynomials",
    R4_2 => "multiplication formula for Hermite-Genocchi polynomials",
    PHI_PDE => "the two partial differential equations of the higher-order kernel",
    COMPLEMENT => "λ G_n(x+1; λ) + G_n(x; λ) = 2n x^(n-1)",
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdentityId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        IdentityId::ALL
            .iter()
            .copied()
            .find(|id| id.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown identity id {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    DocumentedDiscrepancy,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ParamValue {
    Int(i64),
    Text(String),
}

/// Parameter tuple of one check, serialized as a JSON object in insertion
/// order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Params(Vec<(String, ParamValue)>);

impl Params {
    pub fn new() -> Self {
        Params(Vec::new())
    }

    pub fn int(mut self, name: &str, v: impl Into<i64>) -> Self {
        self.0.push((name.to_string(), ParamValue::Int(v.into())));
        self
    }

    pub fn text(mut self, name: &str, v: impl fmt::Display) -> Self {
        self.0.push((name.to_string(), ParamValue::Text(v.to_string())));
        self
    }

    pub fn get(&self, name: &str) -> Option<&ParamValue> {
        self.0.iter().find(|(k, _)| k == name).map(|(_, v)| v)
    }

    pub fn get_int(&self, name: &str) -> Option<i64> {
        match self.get(name) {
            Some(ParamValue::Int(v)) => Some(*v),
            _ => None,
        }
    }

    pub fn entries(&self) -> &[(String, ParamValue)] {
        &self.0
    }
}

impl Serialize for Params {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (k, v)) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            match v {
                ParamValue::Int(n) => write!(f, "{k}={n}")?,
                ParamValue::Text(t) => write!(f, "{k}={t}")?,
            }
        }
        Ok(())
    }
}

/// One identity instance. `residual` holds the coefficients (ascending in
/// `x`) of `LHS - RHS`; for series-valued identities it is the first nonzero
/// `t`-coefficient. Empty means identically zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityResult {
    pub id: IdentityId,
    pub params: Params,
    pub residual: Vec<ExactScalar>,
    pub status: Status,
}

impl IdentityResult {
    pub fn from_poly<F: Ring + IntoExact>(id: IdentityId, params: Params, residual: &XPoly<F>) -> Self {
        let residual: Vec<ExactScalar> = residual.coeffs().iter().map(IntoExact::to_exact).collect();
        let status = if residual.is_empty() { Status::Pass } else { Status::Fail };
        IdentityResult { id, params, residual, status }
    }

    pub fn from_scalar<F: Ring + IntoExact>(id: IdentityId, params: Params, residual: &F) -> Self {
        IdentityResult::from_poly(id, params, &XPoly::constant(residual.clone()))
    }

    pub fn is_zero(&self) -> bool {
        self.residual.is_empty()
    }

    /// First nonzero coefficient of the residual.
    pub fn residual_sample(&self) -> Option<&ExactScalar> {
        self.residual.iter().find(|c| !c.is_zero())
    }
}

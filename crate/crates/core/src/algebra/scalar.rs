use std::fmt;

use serde::{Deserialize, Serialize};

use super::field::Ring;
use super::{RatFun, Rational};

/// A coefficient from either supported field, for reports and file formats
/// that mix rational and symbolic runs.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ExactScalar {
    Rational(Rational),
    RatFun(RatFun),
}

impl ExactScalar {
    pub fn is_zero(&self) -> bool {
        match self {
            ExactScalar::Rational(q) => q.is_zero(),
            ExactScalar::RatFun(f) => f.is_zero(),
        }
    }
}

impl From<Rational> for ExactScalar {
    fn from(q: Rational) -> Self {
        ExactScalar::Rational(q)
    }
}

impl From<RatFun> for ExactScalar {
    fn from(f: RatFun) -> Self {
        ExactScalar::RatFun(f)
    }
}

impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExactScalar::Rational(q) => write!(f, "{q}"),
            ExactScalar::RatFun(r) => write!(f, "{r}"),
        }
    }
}

impl fmt::Debug for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Fields whose elements can be erased into an [`ExactScalar`] and
/// recovered from one.
pub trait IntoExact: Sized {
    fn to_exact(&self) -> ExactScalar;
    fn from_exact(s: &ExactScalar) -> Option<Self>;
}

impl IntoExact for Rational {
    fn to_exact(&self) -> ExactScalar {
        ExactScalar::Rational(self.clone())
    }

    fn from_exact(s: &ExactScalar) -> Option<Self> {
        match s {
            ExactScalar::Rational(q) => Some(q.clone()),
            ExactScalar::RatFun(f) => f.as_rational(),
        }
    }
}

impl IntoExact for RatFun {
    fn to_exact(&self) -> ExactScalar {
        ExactScalar::RatFun(self.clone())
    }

    fn from_exact(s: &ExactScalar) -> Option<Self> {
        match s {
            ExactScalar::Rational(q) => Some(RatFun::from_rational(q)),
            ExactScalar::RatFun(f) => Some(f.clone()),
        }
    }
}

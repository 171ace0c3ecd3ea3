//! Exact computation of the Genocchi, Bernoulli and Euler polynomial
//! families (Apostol parameter, integer higher order, `a,b,c` parameters,
//! two-variable and Hermite forms) together with a harness that checks the
//! identities relating them as exact polynomial residuals.

pub mod algebra;
pub mod families;
pub mod identities;
pub mod io;
pub mod series;
pub mod zsum;

pub use algebra::{ExactScalar, Field, RatFun, Rational, Ring, XPoly};
pub use families::{Family, FamilySpec, PolyTable};
pub use series::Series;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("division by zero")]
    DivisionByZero,
    #[error("series precision mismatch ({0} vs {1})")]
    PrecisionMismatch(usize, usize),
    #[error("non-series quotient: numerator valuation {num} is below denominator valuation {den}")]
    NonSeriesQuotient { num: usize, den: usize },
    #[error("index {index} is outside series precision {precision}")]
    OutOfPrecision { index: usize, precision: usize },
    #[error("multinomial parts sum to {sum}, expected {n}")]
    MultinomialMismatch { n: u64, sum: u64 },
    #[error("singular parameter: {0}")]
    SingularParameter(String),
    #[error("invalid parameters: {0}")]
    InvalidParameter(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("configuration error: {0}")]
    Config(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

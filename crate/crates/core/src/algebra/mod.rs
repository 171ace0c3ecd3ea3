//! Exact coefficient arithmetic: big rationals, the rational function field
//! Q(λ), dense polynomials in `x`, and combinatorial scalars.

pub mod combinat;
mod field;
pub mod intpoly;
mod ratfun;
mod rational;
mod scalar;
mod xpoly;

pub use combinat::{binomial, factorial, multinomial, rising_factorial};
pub use field::{Field, Ring};
pub use ratfun::RatFun;
pub use rational::Rational;
pub use scalar::{ExactScalar, IntoExact};
pub use xpoly::XPoly;

/// Shorthand for tests and call sites that build constants from `"p/q"`.
pub fn q(s: &str) -> Rational {
    s.parse().expect("valid rational literal")
}

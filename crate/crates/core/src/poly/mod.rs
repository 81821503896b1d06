//! Exact sparse multivariate polynomials over ℚ and ℚ(t).

mod coeff;
mod exponent;
mod parse;
mod polynomial;
mod ratfunc;

use thiserror::Error;

pub use coeff::{fmt_rational, rat, Coefficient, Rational};
pub use exponent::{Exponent, SubsetI, WeightVector, AMBIENT_CAP, EXPONENT_CAP};
pub use parse::{parse_polynomial, parse_rational_polynomial, ParsedPoly};
pub use polynomial::{Polynomial, QPoly, TPoly};
pub use ratfunc::{RatFunc, UniPoly};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum PolyError {
    #[error("syntax error at column {}: {msg}", pos + 1)]
    Syntax { pos: usize, msg: String },
    #[error("variable z{index} at column {} is out of range (n = {n})", pos + 1)]
    VariableOutOfRange { pos: usize, index: String, n: usize },
    #[error("exponent at column {} exceeds the cap {}", pos + 1, EXPONENT_CAP)]
    ExponentCap { pos: usize },
    #[error("number of variables {n} outside 1..={}", AMBIENT_CAP)]
    AmbientCap { n: usize },
    #[error("parameter t is not allowed here")]
    UnexpectedParameter,
    #[error("ambient dimension mismatch ({left} vs {right})")]
    AmbientMismatch { left: usize, right: usize },
    #[error("variable index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("empty polynomial list")]
    EmptyList,
    #[error("coefficient has a pole at t = {t0}")]
    Pole { t0: Rational },
}

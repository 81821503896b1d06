//! Ideal-theoretic decisions: Buchberger's algorithm, unit-ideal and
//! torus-emptiness tests, Jacobian minors.

mod buchberger;
mod minors;
mod order;
mod torus;

use thiserror::Error;

pub use buchberger::{
    buchberger, buchberger_with_budget, is_unit_ideal, normal_form, s_polynomial, GroebnerBasis, DEFAULT_STEP_BUDGET,
};
pub(crate) use minors::combinations;
pub use minors::{bareiss_det, jacobian_minors};
pub use order::{MonomialOrder, OrderKind};
pub use torus::torus_emptiness;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroebnerError {
    #[error("empty generator list")]
    EmptyInput,
    #[error("polynomials and monomial order disagree on the number of variables")]
    AmbientMismatch,
    #[error("{rows} polynomials in {cols} variables have no maximal minors")]
    TooManyRows { rows: usize, cols: usize },
    #[error("step budget of {budget} reductions exhausted")]
    ResourceExhausted { budget: u64 },
}

//! Floating-point probes of the Milnor transversality condition. Results are
//! heuristic and never change a certificate.

mod eval;
mod lemma;
mod scan;

use thiserror::Error;

pub use eval::{evaluate_complex, gradient, milnor_residual, ComplexGradient, ComplexPoly};
pub use lemma::{lemma_condition_residual, lemma_residual_parts, optimal_lambda, LemmaCandidate, LemmaResidualParts};
pub use scan::{
    project_to_level, sample_point, transversality_scan, ResidualReport, ScanConfig, DEFAULT_TOLERANCE, LEVEL_SLACK,
    MAX_NEWTON_STEPS,
};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum NumericError {
    #[error("the zero vector has no Milnor residual")]
    ZeroVector,
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("polynomial does not vanish at the origin")]
    NonzeroConstantTerm,
    #[error("expected length {expected}, found {found}")]
    ShapeMismatch { expected: usize, found: usize },
    #[error("coordinate {index} of the point is zero or outside the ambient space")]
    SubsetCoordinate { index: usize },
    #[error("multiplier vector must have unit norm")]
    MultiplierNorm,
    #[error("invalid scan configuration: {0}")]
    InvalidConfig(String),
    #[error("none of the {samples} samples reached the target level")]
    NoSurvivors { samples: usize },
}

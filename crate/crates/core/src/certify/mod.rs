//! Hypothesis checks and certificates for Milnor fibrations of products of
//! germs.
//!
//! Every exact check runs over ℚ or ℚ(t) through the Newton and Gröbner
//! layers. A `resource-exhausted` outcome is kept apart from pass and fail.

mod checks;
mod family;
mod pair;
mod witness;

use serde::Serialize;
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::groebner::{GroebnerError, DEFAULT_STEP_BUDGET};
use crate::newton::{GeomError, JointFaceCone};
use crate::poly::{Coefficient, Exponent, PolyError, Polynomial};

pub use checks::{
    certify_ndci, certify_nondegenerate, certify_stable_radius, check_assumptions_product,
    check_hypersurface_nondegenerate, check_ndci, distinct_subsets, product_degeneracy_report, subset_verdicts,
    ProductDegeneracyReport,
};
pub use family::{build_principal_homotopy, check_family, newton_principal_part, FamilyInput};
pub use pair::certify_pair;
pub use witness::{small_torus_zero, WITNESS_EVAL_CAP, WITNESS_VALUES};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    ResourceExhausted,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Conclusion {
    StableRadiusExists,
    FamilyUniformlyStable,
    FibrationsIsomorphicFamily,
    FibrationsIsomorphicPair,
    Degenerate,
    Nondegenerate,
}

impl Conclusion {
    pub fn as_str(self) -> &'static str {
        match self {
            Conclusion::StableRadiusExists => "stable-radius-exists",
            Conclusion::FamilyUniformlyStable => "family-uniformly-stable",
            Conclusion::FibrationsIsomorphicFamily => "fibrations-isomorphic-family",
            Conclusion::FibrationsIsomorphicPair => "fibrations-isomorphic-pair",
            Conclusion::Degenerate => "degenerate",
            Conclusion::Nondegenerate => "nondegenerate",
        }
    }
}

/// Outcome of one hypothesis check.
///
/// Face-based failures carry the offending cone and the 1-based indices of
/// the polynomials involved. Boundary comparisons carry offending vertices
/// instead of a cone.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub label: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failing_subset: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failing_cone: Option<JointFaceCone>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_point: Option<Vec<i64>>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub offending_vertices: Vec<Exponent>,
    pub detail: String,
}

impl Verdict {
    pub fn pass(label: impl Into<String>, detail: impl Into<String>) -> Self {
        Verdict {
            label: label.into(),
            status: Status::Pass,
            failing_subset: None,
            failing_cone: None,
            witness_point: None,
            offending_vertices: Vec::new(),
            detail: detail.into(),
        }
    }

    pub fn exhausted(label: impl Into<String>, detail: impl Into<String>) -> Self {
        Verdict {
            status: Status::ResourceExhausted,
            ..Verdict::pass(label, detail)
        }
    }

    pub fn is_pass(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn is_fail(&self) -> bool {
        self.status == Status::Fail
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub conclusion: Option<Conclusion>,
    pub status: Status,
    pub theorem_anchor: String,
    pub inputs_digest: String,
    pub checks: Vec<Verdict>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub audits: Vec<Verdict>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub implied: Vec<Conclusion>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CheckOptions {
    /// Reduction steps allowed per Gröbner basis computation.
    pub step_budget: u64,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            step_budget: DEFAULT_STEP_BUDGET,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CertError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Geom(#[from] GeomError),
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    #[error("empty polynomial list")]
    EmptyList,
    #[error("polynomial {index} is zero")]
    ZeroPolynomial { index: usize },
    #[error("polynomial {index} does not vanish at the origin")]
    NonzeroConstantTerm { index: usize },
    #[error("polynomial {index} has a coefficient that is not polynomial in t")]
    NonPolynomialCoefficient { index: usize },
    #[error("polynomials live in different ambient spaces")]
    AmbientMismatch,
    #[error("lists have different lengths ({left} and {right})")]
    LengthMismatch { left: usize, right: usize },
}

pub const NONDEGENERACY_ANCHOR: &str = "A germ is Newton non-degenerate when, for every strictly positive weight, \
the face function has no critical point on its zero set inside the complex torus.";

pub const NDCI_ANCHOR: &str = "A tuple of germs is a non-degenerate complete intersection when, for every strictly \
positive weight, the face functions cut out a reduced smooth complete intersection in the complex torus.";

pub const STABLE_RADIUS_ANCHOR: &str = "If every tuple of distinct factors of f = f^1...f^k0 is a non-degenerate \
complete intersection, then f admits a stable radius for its Milnor fibration at the origin.";

pub const FAMILY_ANCHOR: &str = "If the Newton boundary of each factor f^k(t, z) does not depend on t and every tuple \
of distinct factors stays a non-degenerate complete intersection for small |t|, then the product family has a \
uniform stable radius and its Milnor fibrations are isomorphic for all small t.";

pub const PAIR_ANCHOR: &str = "If f^k and g^k have the same Newton boundary for every k and both tuples satisfy the \
non-degeneracy hypotheses, then the Milnor fibrations of f^1...f^k0 and g^1...g^k0 at the origin are isomorphic.";

/// Hex SHA-256 of a canonical rendering of the inputs.
pub fn inputs_digest(canonical_text: &str) -> String {
    hex::encode(Sha256::digest(canonical_text.as_bytes()))
}

/// Canonical text of named polynomial lists: one `name[i] = poly` line each.
pub fn canonical_input_text<C: Coefficient>(kind: &str, n: usize, groups: &[(&str, &[Polynomial<C>])]) -> String {
    let mut out = format!("kind = {kind}\nn = {n}\n");
    for (name, polys) in groups {
        for (i, p) in polys.iter().enumerate() {
            out.push_str(&format!("{name}[{}] = {p}\n", i + 1));
        }
    }
    out
}

pub(crate) fn overall_status(checks: &[Verdict]) -> Status {
    if checks.iter().any(Verdict::is_fail) {
        Status::Fail
    } else if checks.iter().any(|v| v.status == Status::ResourceExhausted) {
        Status::ResourceExhausted
    } else {
        Status::Pass
    }
}

/// Keeps verdicts up to and including the first failure.
pub(crate) fn truncate_at_failure(mut checks: Vec<Verdict>) -> Vec<Verdict> {
    if let Some(i) = checks.iter().position(Verdict::is_fail) {
        checks.truncate(i + 1);
    }
    checks
}

/// 1-based set notation such as `{1,3}`.
pub(crate) fn fmt_subset(indices: &[usize]) -> String {
    let parts: Vec<String> = indices.iter().map(|i| i.to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

pub(crate) fn validate_germs<C: Coefficient>(fs: &[Polynomial<C>]) -> Result<usize, CertError> {
    let first = fs.first().ok_or(CertError::EmptyList)?;
    let n = first.ambient();
    for (i, f) in fs.iter().enumerate() {
        if f.ambient() != n {
            return Err(CertError::AmbientMismatch);
        }
        if f.is_zero() {
            return Err(CertError::ZeroPolynomial { index: i + 1 });
        }
        if !f.constant_term().is_zero() {
            return Err(CertError::NonzeroConstantTerm { index: i + 1 });
        }
    }
    Ok(n)
}

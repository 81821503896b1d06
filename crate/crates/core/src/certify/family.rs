use num_traits::{One, Zero};

use super::checks::subset_verdicts;
use super::{
    canonical_input_text, inputs_digest, overall_status, truncate_at_failure, validate_germs, CertError, Certificate,
    CheckOptions, Conclusion, Status, Verdict, FAMILY_ANCHOR,
};
use crate::newton::{boundary_membership, family_boundary_stable};
use crate::poly::{Coefficient, Polynomial, QPoly, RatFunc, Rational, TPoly};

/// Members `f^k(t, z)` of a one-parameter family with coefficients in ℚ[t],
/// each vanishing at `z = 0` for every `t`.
#[derive(Clone, Debug, PartialEq)]
pub struct FamilyInput {
    members: Vec<TPoly>,
}

impl FamilyInput {
    pub fn new(members: Vec<TPoly>) -> Result<Self, CertError> {
        validate_germs(&members)?;
        if let Some(i) = members.iter().position(|m| !m.has_polynomial_coefficients()) {
            return Err(CertError::NonPolynomialCoefficient { index: i + 1 });
        }
        Ok(FamilyInput { members })
    }

    pub fn members(&self) -> &[TPoly] {
        &self.members
    }

    pub fn ambient(&self) -> usize {
        self.members[0].ambient()
    }

    /// Members at `t = t0`.
    pub fn at(&self, t0: &Rational) -> Result<Vec<QPoly>, CertError> {
        Ok(self
            .members
            .iter()
            .map(|m| m.specialize_parameter(t0))
            .collect::<Result<_, _>>()?)
    }
}

fn boundary_verdicts(family: &FamilyInput) -> Result<Vec<Verdict>, CertError> {
    family
        .members()
        .iter()
        .enumerate()
        .map(|(i, m)| {
            let report = family_boundary_stable(m)?;
            let label = format!("boundary-stable {}", i + 1);
            if report.stable {
                Ok(Verdict::pass(
                    label,
                    "Newton polyhedron at t = 0 equals the generic one",
                ))
            } else {
                Ok(Verdict {
                    label,
                    status: Status::Fail,
                    failing_subset: Some(vec![i + 1]),
                    failing_cone: None,
                    witness_point: None,
                    offending_vertices: report.offending.into_iter().collect(),
                    detail: "vertex sets at generic t and at t = 0 differ".into(),
                })
            }
        })
        .collect()
}

/// Certificate for a family: boundary stability of each member, then the
/// complete intersection tests at generic `t` and at `t = 0`.
pub fn check_family(family: &FamilyInput, opts: &CheckOptions) -> Result<Certificate, CertError> {
    let n = family.ambient();
    let digest = inputs_digest(&canonical_input_text("family", n, &[("f", family.members())]));
    let mut checks = boundary_verdicts(family)?;
    let mut notes = Vec::new();
    if checks.iter().any(Verdict::is_fail) {
        notes.push("Newton boundary depends on t; the family hypotheses are not met".into());
        let checks = truncate_at_failure(checks);
        return Ok(Certificate {
            conclusion: None,
            status: Status::Fail,
            theorem_anchor: FAMILY_ANCHOR.into(),
            inputs_digest: digest,
            checks,
            audits: Vec::new(),
            implied: Vec::new(),
            notes,
        });
    }
    checks.extend(subset_verdicts(family.members(), opts, "generic ")?);
    checks.extend(subset_verdicts(&family.at(&Rational::zero())?, opts, "t=0 ")?);
    let checks = truncate_at_failure(checks);
    let status = overall_status(&checks);
    let (conclusion, implied) = match status {
        Status::Pass => {
            notes.push(
                "a pass over Q(t) fails for at most finitely many t; with the pass at t = 0 some tau0 > 0 \
                 keeps every |t| <= tau0 inside the hypotheses"
                    .into(),
            );
            (
                Some(Conclusion::FibrationsIsomorphicFamily),
                vec![Conclusion::FamilyUniformlyStable],
            )
        }
        Status::Fail => (Some(Conclusion::Degenerate), Vec::new()),
        Status::ResourceExhausted => (None, Vec::new()),
    };
    notes.push("the uniform radius and tau0 are asserted to exist; no values are computed".into());
    Ok(Certificate {
        conclusion,
        status,
        theorem_anchor: FAMILY_ANCHOR.into(),
        inputs_digest: digest,
        checks,
        audits: Vec::new(),
        implied,
        notes,
    })
}

/// Terms of `f` whose exponents lie on the Newton boundary.
pub fn newton_principal_part<C: Coefficient>(f: &Polynomial<C>) -> Result<Polynomial<C>, CertError> {
    if f.is_zero() {
        return Err(CertError::ZeroPolynomial { index: 1 });
    }
    let mut kept = Vec::new();
    for (e, c) in f.terms() {
        if boundary_membership(e, f)? {
            kept.push((e.clone(), c.clone()));
        }
    }
    Ok(Polynomial::from_terms(f.ambient(), kept))
}

/// The family `(1 - t) f^k + t F^k` with `F^k` the Newton principal part.
pub fn build_principal_homotopy(fs: &[QPoly]) -> Result<FamilyInput, CertError> {
    validate_germs(fs)?;
    let t = RatFunc::t();
    let one_minus_t = RatFunc::one() - t.clone();
    let members = fs
        .iter()
        .map(|f| {
            let principal = newton_principal_part(f)?.to_parametric();
            Ok(f.to_parametric().scale(&one_minus_t).add(&principal.scale(&t))?)
        })
        .collect::<Result<Vec<_>, CertError>>()?;
    FamilyInput::new(members)
}

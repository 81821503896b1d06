use rayon::prelude::*;

use super::witness::small_torus_zero;
use super::{
    canonical_input_text, fmt_subset, inputs_digest, overall_status, truncate_at_failure, validate_germs, CertError,
    Certificate, CheckOptions, Conclusion, Status, Verdict, NDCI_ANCHOR, NONDEGENERACY_ANCHOR, STABLE_RADIUS_ANCHOR,
};
use crate::groebner::{jacobian_minors, torus_emptiness, GroebnerError};
use crate::newton::{compact_faces, enumerate_joint_faces, JointFaceCone};
use crate::poly::{Coefficient, Polynomial, QPoly};

enum ConeOutcome {
    Empty,
    Nonempty,
    Exhausted,
}

/// Face functions of `fs` on the cone, followed by their maximal Jacobian
/// minors when there are at most `n` of them.
fn face_system<C: Coefficient>(fs: &[Polynomial<C>], cone: &JointFaceCone) -> Result<Vec<Polynomial<C>>, CertError> {
    let n = fs[0].ambient();
    let faces = fs
        .iter()
        .map(|f| f.face_function(&cone.witness))
        .collect::<Result<Vec<_>, _>>()?;
    let mut sys = faces.clone();
    if faces.len() <= n {
        sys.extend(jacobian_minors(&faces)?);
    }
    Ok(sys)
}

fn cone_outcome<C: Coefficient>(
    fs: &[Polynomial<C>],
    cone: &JointFaceCone,
    budget: u64,
) -> Result<ConeOutcome, CertError> {
    if cone.has_monomial_face() {
        return Ok(ConeOutcome::Empty);
    }
    let sys = face_system(fs, cone)?;
    match torus_emptiness(&sys, budget) {
        Ok(true) => Ok(ConeOutcome::Empty),
        Ok(false) => Ok(ConeOutcome::Nonempty),
        Err(GroebnerError::ResourceExhausted { .. }) => Ok(ConeOutcome::Exhausted),
        Err(e) => Err(e.into()),
    }
}

fn fmt_weight(cone: &JointFaceCone) -> String {
    let parts: Vec<String> = cone.witness.entries().iter().map(|w| w.to_string()).collect();
    format!("({})", parts.join(","))
}

/// Runs the torus test on every cone and reports the first failure in
/// canonical cone order.
fn verdict_over_cones<C: Coefficient>(
    label: String,
    fs: &[Polynomial<C>],
    cones: &[JointFaceCone],
    opts: &CheckOptions,
) -> Result<Verdict, CertError> {
    let outcomes = cones
        .par_iter()
        .map(|c| cone_outcome(fs, c, opts.step_budget))
        .collect::<Result<Vec<_>, _>>()?;
    if let Some(i) = outcomes.iter().position(|o| matches!(o, ConeOutcome::Nonempty)) {
        let cone = &cones[i];
        let sys = face_system(fs, cone)?;
        let witness_point = small_torus_zero(&sys);
        let mut detail = format!(
            "face system at weight {} has a common zero in the torus",
            fmt_weight(cone)
        );
        if let Some(p) = &witness_point {
            let parts: Vec<String> = p.iter().map(|x| x.to_string()).collect();
            detail.push_str(&format!(", e.g. ({})", parts.join(",")));
        }
        return Ok(Verdict {
            label,
            status: Status::Fail,
            failing_subset: Some((1..=fs.len()).collect()),
            failing_cone: Some(cone.clone()),
            witness_point,
            offending_vertices: Vec::new(),
            detail,
        });
    }
    if let Some(i) = outcomes.iter().position(|o| matches!(o, ConeOutcome::Exhausted)) {
        return Ok(Verdict::exhausted(
            label,
            format!(
                "step budget of {} exhausted at weight {}",
                opts.step_budget,
                fmt_weight(&cones[i])
            ),
        ));
    }
    Ok(Verdict::pass(
        label,
        format!("no torus zero on any of {} face cones", cones.len()),
    ))
}

/// Newton non-degeneracy of a single germ, one torus test per compact face
/// with at least two points.
pub fn check_hypersurface_nondegenerate<C: Coefficient>(
    f: &Polynomial<C>,
    opts: &CheckOptions,
) -> Result<Verdict, CertError> {
    validate_germs(std::slice::from_ref(f))?;
    let cones: Vec<JointFaceCone> = compact_faces(f)?
        .into_iter()
        .filter(|face| !face.is_vertex())
        .map(|face| JointFaceCone {
            witness: face.witness.clone(),
            faces: vec![face],
        })
        .collect();
    verdict_over_cones("nondegenerate".into(), std::slice::from_ref(f), &cones, opts)
}

/// Non-degenerate complete intersection test for a tuple of germs.
pub fn check_ndci<C: Coefficient>(fs: &[Polynomial<C>], opts: &CheckOptions) -> Result<Verdict, CertError> {
    validate_germs(fs)?;
    let cones = enumerate_joint_faces(fs)?;
    verdict_over_cones("ndci".into(), fs, &cones, opts)
}

/// Nonempty subsets of `0..k0`, by size and then lexicographically.
pub fn distinct_subsets(k0: usize) -> Vec<Vec<usize>> {
    (1..=k0).flat_map(|m| crate::groebner::combinations(k0, m)).collect()
}

/// [`check_ndci`] on every tuple of distinct members, in canonical order.
/// Labels are `"{prefix}ndci {i,j}"` with 1-based indices.
pub fn subset_verdicts<C: Coefficient>(
    fs: &[Polynomial<C>],
    opts: &CheckOptions,
    prefix: &str,
) -> Result<Vec<Verdict>, CertError> {
    validate_germs(fs)?;
    distinct_subsets(fs.len())
        .par_iter()
        .map(|subset| {
            let members: Vec<Polynomial<C>> = subset.iter().map(|&i| fs[i].clone()).collect();
            let one_based: Vec<usize> = subset.iter().map(|i| i + 1).collect();
            let mut v = check_ndci(&members, opts)?;
            v.label = format!("{prefix}ndci {}", fmt_subset(&one_based));
            if v.is_fail() {
                v.failing_subset = Some(one_based);
            }
            Ok(v)
        })
        .collect()
}

/// Aggregate of [`subset_verdicts`]: the first failure, else the first
/// exhausted subset, else a pass.
pub fn check_assumptions_product(fs: &[QPoly], opts: &CheckOptions) -> Result<Verdict, CertError> {
    let all = subset_verdicts(fs, opts, "")?;
    let total = all.len();
    let first = |s: Status| all.iter().find(|v| v.status == s).cloned();
    let mut v = first(Status::Fail)
        .or_else(|| first(Status::ResourceExhausted))
        .unwrap_or_else(|| Verdict::pass("", format!("all {total} tuples of distinct members pass")));
    v.label = "assumptions".into();
    Ok(v)
}

fn conclusion_for(status: Status, positive: Conclusion) -> Option<Conclusion> {
    match status {
        Status::Pass => Some(positive),
        Status::Fail => Some(Conclusion::Degenerate),
        Status::ResourceExhausted => None,
    }
}

/// Certificate that the product of `fs` has a stable radius.
pub fn certify_stable_radius(fs: &[QPoly], opts: &CheckOptions) -> Result<Certificate, CertError> {
    let n = validate_germs(fs)?;
    let checks = truncate_at_failure(subset_verdicts(fs, opts, "")?);
    let status = overall_status(&checks);
    Ok(Certificate {
        conclusion: conclusion_for(status, Conclusion::StableRadiusExists),
        status,
        theorem_anchor: STABLE_RADIUS_ANCHOR.into(),
        inputs_digest: inputs_digest(&canonical_input_text("product", n, &[("f", fs)])),
        checks,
        audits: Vec::new(),
        implied: Vec::new(),
        notes: vec!["existence of the radius is certified; no value is computed".into()],
    })
}

/// Certificate wrapping [`check_hypersurface_nondegenerate`].
pub fn certify_nondegenerate(f: &QPoly, opts: &CheckOptions) -> Result<Certificate, CertError> {
    let n = validate_germs(std::slice::from_ref(f))?;
    let check = check_hypersurface_nondegenerate(f, opts)?;
    let status = check.status;
    Ok(Certificate {
        conclusion: conclusion_for(status, Conclusion::Nondegenerate),
        status,
        theorem_anchor: NONDEGENERACY_ANCHOR.into(),
        inputs_digest: inputs_digest(&canonical_input_text("single", n, &[("f", std::slice::from_ref(f))])),
        checks: vec![check],
        audits: Vec::new(),
        implied: Vec::new(),
        notes: Vec::new(),
    })
}

/// Certificate wrapping [`check_ndci`] on the whole tuple.
pub fn certify_ndci<C: Coefficient>(fs: &[Polynomial<C>], opts: &CheckOptions) -> Result<Certificate, CertError> {
    let n = validate_germs(fs)?;
    let check = check_ndci(fs, opts)?;
    let status = check.status;
    Ok(Certificate {
        conclusion: conclusion_for(status, Conclusion::Nondegenerate),
        status,
        theorem_anchor: NDCI_ANCHOR.into(),
        inputs_digest: inputs_digest(&canonical_input_text("ndci", n, &[("f", fs)])),
        checks: vec![check],
        audits: Vec::new(),
        implied: Vec::new(),
        notes: Vec::new(),
    })
}

/// The product hypotheses next to the Newton non-degeneracy of the product
/// itself.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductDegeneracyReport {
    pub assumptions: Verdict,
    pub product: Verdict,
}

impl ProductDegeneracyReport {
    /// Hypotheses hold while the product is Newton degenerate.
    pub fn hypotheses_hold_product_degenerate(&self) -> bool {
        self.assumptions.is_pass() && self.product.is_fail()
    }
}

pub fn product_degeneracy_report(fs: &[QPoly], opts: &CheckOptions) -> Result<ProductDegeneracyReport, CertError> {
    validate_germs(fs)?;
    let assumptions = check_assumptions_product(fs, opts)?;
    let product = Polynomial::product(fs)?;
    let mut product_verdict = check_hypersurface_nondegenerate(&product, opts)?;
    product_verdict.label = "product nondegenerate".into();
    Ok(ProductDegeneracyReport {
        assumptions,
        product: product_verdict,
    })
}

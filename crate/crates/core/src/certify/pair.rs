use super::checks::subset_verdicts;
use super::family::{build_principal_homotopy, check_family};
use super::{
    canonical_input_text, inputs_digest, overall_status, truncate_at_failure, validate_germs, CertError, Certificate,
    CheckOptions, Conclusion, Status, Verdict, PAIR_ANCHOR,
};
use crate::newton::{newton_boundary_equal, newton_vertices};
use crate::poly::QPoly;

fn boundary_verdict(k: usize, f: &QPoly, g: &QPoly) -> Result<Verdict, CertError> {
    let label = format!("boundary-equal {k}");
    if newton_boundary_equal(f, g)? {
        return Ok(Verdict::pass(label, "same Newton boundary"));
    }
    let vf = newton_vertices(f)?.vertices;
    let vg = newton_vertices(g)?.vertices;
    Ok(Verdict {
        label,
        status: Status::Fail,
        failing_subset: Some(vec![k]),
        failing_cone: None,
        witness_point: None,
        offending_vertices: vf.symmetric_difference(&vg).cloned().collect(),
        detail: "Newton boundaries differ".into(),
    })
}

fn audit_verdict(label: &str, fs: &[QPoly], opts: &CheckOptions) -> Result<Verdict, CertError> {
    let cert = check_family(&build_principal_homotopy(fs)?, opts)?;
    let detail = match cert.conclusion {
        Some(c) => format!("principal homotopy certificate: {}", c.as_str()),
        None => "principal homotopy certificate: no conclusion".into(),
    };
    Ok(Verdict {
        status: cert.status,
        ..Verdict::pass(label, detail)
    })
}

/// Certificate that the Milnor fibrations of `∏fs` and `∏gs` at the origin
/// are isomorphic.
pub fn certify_pair(fs: &[QPoly], gs: &[QPoly], opts: &CheckOptions) -> Result<Certificate, CertError> {
    if fs.len() != gs.len() {
        return Err(CertError::LengthMismatch {
            left: fs.len(),
            right: gs.len(),
        });
    }
    let n = validate_germs(fs)?;
    if validate_germs(gs)? != n {
        return Err(CertError::AmbientMismatch);
    }
    let digest = inputs_digest(&canonical_input_text("pair", n, &[("f", fs), ("g", gs)]));

    let mut checks = fs
        .iter()
        .zip(gs)
        .enumerate()
        .map(|(i, (f, g))| boundary_verdict(i + 1, f, g))
        .collect::<Result<Vec<_>, _>>()?;
    let boundaries_ok = checks.iter().all(Verdict::is_pass);
    let mut audits = Vec::new();
    let mut notes = Vec::new();
    if boundaries_ok {
        checks.extend(subset_verdicts(fs, opts, "f: ")?);
        checks.extend(subset_verdicts(gs, opts, "g: ")?);
        if checks.iter().all(Verdict::is_pass) {
            audits.push(audit_verdict("audit: principal homotopy of f", fs, opts)?);
            audits.push(audit_verdict("audit: principal homotopy of g", gs, opts)?);
            if audits.iter().any(Verdict::is_fail) {
                notes.push("a principal homotopy audit failed although the hypotheses hold".into());
            }
        }
    }
    let checks = truncate_at_failure(checks);
    let status = overall_status(&checks);
    let conclusion = match status {
        Status::Pass => Some(Conclusion::FibrationsIsomorphicPair),
        Status::Fail if boundaries_ok => Some(Conclusion::Degenerate),
        _ => None,
    };
    Ok(Certificate {
        conclusion,
        status,
        theorem_anchor: PAIR_ANCHOR.into(),
        inputs_digest: digest,
        checks,
        audits,
        implied: Vec::new(),
        notes,
    })
}

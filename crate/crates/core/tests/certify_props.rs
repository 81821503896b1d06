mod oracle;

use ndcert_core::certify::{
    build_principal_homotopy, certify_pair, certify_stable_radius, check_hypersurface_nondegenerate, check_ndci,
    product_degeneracy_report, subset_verdicts, CheckOptions, Conclusion, Status,
};
use ndcert_core::newton::compact_faces;
use ndcert_core::poly::{rat, Exponent, Polynomial, QPoly, WeightVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn opts() -> CheckOptions {
    CheckOptions::default()
}

fn random_nondegenerate(rng: &mut ChaCha8Rng, n: usize) -> QPoly {
    loop {
        let f = oracle::random_poly(rng, n, 5, 4);
        if check_hypersurface_nondegenerate(&f, &opts()).unwrap().is_pass() {
            return f;
        }
    }
}

fn random_linear(rng: &mut ChaCha8Rng, n: usize) -> QPoly {
    Polynomial::from_terms(
        n,
        (0..n).map(|i| {
            let c = rng.random_range(1i64..=6) * if rng.random_bool(0.5) { 1 } else { -1 };
            (Exponent::unit(n, i, 1), rat(c, 1))
        }),
    )
}

#[test]
fn homotopy_preserves_every_face_function() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for _ in 0..20 {
        let n = rng.random_range(2..=3);
        let f = random_nondegenerate(&mut rng, n);
        let family = build_principal_homotopy(std::slice::from_ref(&f)).unwrap();
        let ft = &family.members()[0];
        let mut weights: Vec<WeightVector> = compact_faces(&f).unwrap().into_iter().map(|c| c.witness).collect();
        weights.extend((0..20).map(|_| WeightVector::new((0..n).map(|_| rng.random_range(1..=9)).collect())));
        for w in &weights {
            assert_eq!(
                ft.face_function(w).unwrap(),
                f.face_function(w).unwrap().to_parametric(),
                "{f} at {w:?}"
            );
        }
    }
}

/// The product certificate passes exactly when every distinct tuple does,
/// and a failure reports the first failing tuple in canonical order.
#[test]
fn product_certificate_is_the_conjunction_of_subsets() {
    let mut rng = ChaCha8Rng::seed_from_u64(32);
    for _ in 0..25 {
        let n = rng.random_range(2..=3);
        let k0 = rng.random_range(1..=3);
        let fs: Vec<QPoly> = (0..k0).map(|_| oracle::random_poly(&mut rng, n, 3, 2)).collect();
        let all = subset_verdicts(&fs, &opts(), "").unwrap();
        let cert = certify_stable_radius(&fs, &opts()).unwrap();
        match all.iter().find(|v| !v.is_pass()) {
            None => {
                assert_eq!(cert.status, Status::Pass);
                assert_eq!(cert.conclusion, Some(Conclusion::StableRadiusExists));
                assert_eq!(cert.checks.len(), all.len());
            }
            Some(first) if first.is_fail() => {
                assert_eq!(cert.status, Status::Fail);
                let last = cert.checks.last().unwrap();
                assert_eq!(last, first);
                let expected: Vec<usize> = last.label["ndci {".len()..last.label.len() - 1]
                    .split(',')
                    .map(|s| s.parse().unwrap())
                    .collect();
                assert_eq!(last.failing_subset.as_ref(), Some(&expected));
            }
            Some(_) => {}
        }
    }
}

#[test]
fn ndci_subset_verdict_matches_direct_check() {
    let mut rng = ChaCha8Rng::seed_from_u64(33);
    for _ in 0..10 {
        let fs: Vec<QPoly> = (0..3).map(|_| oracle::random_poly(&mut rng, 3, 3, 2)).collect();
        let all = subset_verdicts(&fs, &opts(), "").unwrap();
        assert_eq!(all.len(), 7);
        assert_eq!(all[3].label, "ndci {1,2}");
        let direct = check_ndci(&fs[..2], &opts()).unwrap();
        assert_eq!(all[3].status, direct.status);
    }
}

#[test]
fn pair_with_itself_depends_only_on_the_hypotheses() {
    let mut rng = ChaCha8Rng::seed_from_u64(34);
    for _ in 0..8 {
        let n = rng.random_range(2..=3);
        let fs = vec![random_nondegenerate(&mut rng, n)];
        let pair = certify_pair(&fs, &fs, &opts()).unwrap();
        let single = certify_stable_radius(&fs, &opts()).unwrap();
        assert!(pair
            .checks
            .iter()
            .filter(|v| v.label.starts_with("boundary-equal"))
            .all(|v| v.is_pass()));
        assert_eq!(pair.status, single.status, "{}", fs[0]);
        if pair.status == Status::Pass {
            assert_eq!(pair.conclusion, Some(Conclusion::FibrationsIsomorphicPair));
            assert!(pair.audits.iter().all(|a| a.is_pass()));
        }
    }
}

#[test]
fn single_member_certificate_agrees_with_hypersurface_check() {
    let mut rng = ChaCha8Rng::seed_from_u64(35);
    for _ in 0..30 {
        let n = rng.random_range(2..=3);
        let f = oracle::random_poly(&mut rng, n, 5, 4);
        let direct = check_hypersurface_nondegenerate(&f, &opts()).unwrap();
        let cert = certify_stable_radius(std::slice::from_ref(&f), &opts()).unwrap();
        assert_eq!(cert.status, direct.status, "{f}");
    }
}

#[test]
fn products_of_independent_linear_forms_are_degenerate() {
    let mut rng = ChaCha8Rng::seed_from_u64(36);
    let mut hypotheses_held = 0;
    for _ in 0..15 {
        let n = 3;
        let fs = vec![random_linear(&mut rng, n), random_linear(&mut rng, n)];
        let report = product_degeneracy_report(&fs, &opts()).unwrap();
        assert!(report.product.is_fail(), "{} * {}", fs[0], fs[1]);
        if report.assumptions.is_pass() {
            hypotheses_held += 1;
            assert!(report.hypotheses_hold_product_degenerate());
        }
    }
    assert!(hypotheses_held >= 10);
}

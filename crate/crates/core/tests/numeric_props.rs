mod oracle;

use ndcert_core::numeric::{
    evaluate_complex, gradient, lemma_condition_residual, lemma_residual_parts, milnor_residual, optimal_lambda,
    project_to_level, sample_point, transversality_scan, ComplexGradient, LemmaCandidate, ScanConfig,
};
use ndcert_core::poly::{parse_rational_polynomial, SubsetI, WeightVector};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_point(rng: &mut ChaCha8Rng, n: usize, scale: f64) -> Vec<Complex64> {
    (0..n)
        .map(|_| Complex64::new(rng.random_range(-scale..scale), rng.random_range(-scale..scale)))
        .collect()
}

#[test]
fn gradient_matches_finite_differences() {
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    for _ in 0..100 {
        let n = rng.random_range(1..=4);
        let f = oracle::random_poly(&mut rng, n, 6, 6);
        let z = random_point(&mut rng, n, 1.0);
        let g = gradient(&f, &z).unwrap();
        for (i, gi) in g.iter().enumerate() {
            let fd = oracle::central_difference(|p| evaluate_complex(&f, p).unwrap(), &z, i, 1e-5);
            let rel = (fd - gi).norm() / gi.norm().max(1.0);
            assert!(rel <= 1e-6, "{f} at {z:?}, coordinate {i}: rel {rel}");
        }
    }
}

#[test]
fn residual_is_between_zero_and_gradient_norm() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for _ in 0..200 {
        let n = rng.random_range(1..=4);
        let f = oracle::random_poly(&mut rng, n, 6, 4);
        let z = random_point(&mut rng, n, 1.0);
        let r = milnor_residual(&f, &z).unwrap();
        let g2: f64 = gradient(&f, &z).unwrap().iter().map(|c| c.norm_sqr()).sum();
        assert!(r >= 0.0 && r <= g2 * (1.0 + 1e-12) + 1e-300, "{r} vs {g2}");
    }
}

#[test]
fn residual_vanishes_for_radial_gradients() {
    // ∇(z1² + z2²) = 2z, which is conj-aligned with z on real points.
    let f = parse_rational_polynomial("z1^2 + z2^2", 2).unwrap();
    let z = [Complex64::new(0.3, 0.0), Complex64::new(-0.2, 0.0)];
    assert!(milnor_residual(&f, &z).unwrap() < 1e-15);
}

#[test]
fn samples_lie_in_the_shell_and_are_reproducible() {
    let cfg = ScanConfig::new(0.1, 0.5, 1e-4, 10, 7).unwrap();
    for i in 0..200 {
        let z = sample_point(&cfg, 3, i);
        let r = z.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
        assert!((0.1 - 1e-12..=0.5 + 1e-12).contains(&r));
        assert_eq!(z, sample_point(&cfg, 3, i));
    }
    assert_ne!(sample_point(&cfg, 3, 0), sample_point(&cfg, 3, 1));
}

#[test]
fn projection_lands_on_the_level_set() {
    let f = parse_rational_polynomial("z1^2 + z2^3 + z1*z2", 2).unwrap();
    let fg = ComplexGradient::new(&f);
    let cfg = ScanConfig::new(0.1, 0.5, 1e-3, 10, 3).unwrap();
    let mut landed = 0;
    for i in 0..100 {
        if let Some(z) = project_to_level(&fg, sample_point(&cfg, 2, i), 1e-3) {
            let v = evaluate_complex(&f, &z).unwrap().norm();
            assert!((v - 1e-3).abs() <= 0.1 * 1e-3);
            landed += 1;
        }
    }
    assert!(landed > 50);
}

#[test]
fn scan_is_independent_of_thread_count() {
    let f = parse_rational_polynomial("z1^3 + z2^2 + z1*z2*z3 + z3^4", 3).unwrap();
    let cfg = ScanConfig::new(0.1, 0.5, 1e-4, 300, 99).unwrap();
    let run = |threads| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap()
            .install(|| transversality_scan(&f, &cfg).unwrap())
    };
    let one = run(1);
    assert_eq!(one, run(4));
    assert_eq!(one, run(4));
    assert_eq!(one.points_tested + one.discarded, 300);
}

fn candidate(rng: &mut ChaCha8Rng, n: usize, k: usize) -> LemmaCandidate {
    let mu = random_point(rng, k, 1.0);
    let norm = mu.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
    LemmaCandidate {
        point: random_point(rng, n, 1.0),
        weight: WeightVector::new((0..n).map(|_| rng.random_range(0..=2)).collect()),
        subset: SubsetI::new((0..n).filter(|_| rng.random_bool(0.7))),
        multipliers: mu.into_iter().map(|c| c / norm).collect(),
        lambda: Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)),
    }
}

#[test]
fn lemma_residual_decomposes_and_lambda_is_least_squares() {
    let mut rng = ChaCha8Rng::seed_from_u64(43);
    for _ in 0..100 {
        let n = 3;
        let k = rng.random_range(1..=2);
        let fs: Vec<_> = (0..k).map(|_| oracle::random_poly(&mut rng, n, 4, 3)).collect();
        let mut cand = candidate(&mut rng, n, k);
        let parts = lemma_residual_parts(&fs, &cand).unwrap();
        assert!(parts.values >= 0.0 && parts.aligned >= 0.0 && parts.free >= 0.0);
        assert_eq!(lemma_condition_residual(&fs, &cand).unwrap(), parts.total());
        if cand.weight.zero_set().intersection(&cand.subset).is_empty() {
            assert_eq!(parts.aligned, 0.0);
        }
        cand.lambda = optimal_lambda(&fs, &cand).unwrap();
        let best = lemma_residual_parts(&fs, &cand).unwrap();
        assert!(best.aligned <= parts.aligned * (1.0 + 1e-12) + 1e-12);
        assert_eq!(best.values, parts.values);
        assert_eq!(best.free, parts.free);
    }
}

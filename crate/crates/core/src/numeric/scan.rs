use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;
use serde::Serialize;

use super::eval::{norm_sqr, residual_from_gradient, ComplexGradient};
use super::NumericError;
use crate::poly::QPoly;

pub const DEFAULT_TOLERANCE: f64 = 1e-9;
pub const MAX_NEWTON_STEPS: usize = 50;
/// Survivors must land within this relative distance of `eta`.
pub const LEVEL_SLACK: f64 = 0.1;
const LEVEL_TARGET: f64 = 1e-6;
const MAX_HALVINGS: usize = 30;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ScanConfig {
    eps1: f64,
    eps2: f64,
    eta: f64,
    samples: usize,
    seed: u64,
    tolerance: f64,
}

impl ScanConfig {
    pub fn new(eps1: f64, eps2: f64, eta: f64, samples: usize, seed: u64) -> Result<Self, NumericError> {
        Self::with_tolerance(eps1, eps2, eta, samples, seed, DEFAULT_TOLERANCE)
    }

    pub fn with_tolerance(
        eps1: f64,
        eps2: f64,
        eta: f64,
        samples: usize,
        seed: u64,
        tolerance: f64,
    ) -> Result<Self, NumericError> {
        let positive = |x: f64| x.is_finite() && x > 0.0;
        if !(positive(eps1) && positive(eps2) && eps1 <= eps2) {
            return Err(NumericError::InvalidConfig("need 0 < eps1 <= eps2".into()));
        }
        if !positive(eta) {
            return Err(NumericError::InvalidConfig("need eta > 0".into()));
        }
        if samples == 0 {
            return Err(NumericError::InvalidConfig("need samples >= 1".into()));
        }
        if !positive(tolerance) {
            return Err(NumericError::InvalidConfig("need tolerance > 0".into()));
        }
        Ok(ScanConfig {
            eps1,
            eps2,
            eta,
            samples,
            seed,
            tolerance,
        })
    }

    pub fn eps1(&self) -> f64 {
        self.eps1
    }

    pub fn eps2(&self) -> f64 {
        self.eps2
    }

    pub fn eta(&self) -> f64 {
        self.eta
    }

    pub fn samples(&self) -> usize {
        self.samples
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn tolerance(&self) -> f64 {
        self.tolerance
    }
}

fn serialize_point<S: serde::Serializer>(z: &[Complex64], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(z.iter().map(|c| [c.re, c.im]))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ResidualReport {
    pub min_residual: f64,
    /// Coordinates as `[re, im]` pairs.
    #[serde(serialize_with = "serialize_point")]
    pub argmin_point: Vec<Complex64>,
    pub points_tested: usize,
    pub discarded: usize,
    pub tolerance: f64,
    pub below_tolerance: bool,
}

/// Point drawn for sample `index`: uniform direction on the unit sphere of
/// `ℂⁿ`, radius uniform in `[eps1, eps2]`. Each index has its own stream.
pub fn sample_point(cfg: &ScanConfig, n: usize, index: u64) -> Vec<Complex64> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    rng.set_stream(index);
    let dir: Vec<Complex64> = (0..n)
        .map(|_| Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal)))
        .collect();
    let r = if cfg.eps1 < cfg.eps2 {
        rng.random_range(cfg.eps1..=cfg.eps2)
    } else {
        cfg.eps1
    };
    let scale = r / norm_sqr(&dir).sqrt();
    dir.into_iter().map(|c| c * scale).collect()
}

/// Damped Newton moves along `conj(∇f)` toward `|f| = eta`, keeping the
/// phase of `f`. `None` when the level is not reached within the slack.
pub fn project_to_level(fg: &ComplexGradient, mut z: Vec<Complex64>, eta: f64) -> Option<Vec<Complex64>> {
    let gap = |z: &[Complex64]| (fg.f.eval(z).norm() - eta).abs();
    for _ in 0..MAX_NEWTON_STEPS {
        let err = gap(&z);
        if err <= LEVEL_TARGET * eta {
            break;
        }
        let fz = fg.f.eval(&z);
        let g = fg.gradient(&z);
        let gn = norm_sqr(&g);
        if gn == 0.0 || !gn.is_finite() {
            break;
        }
        let target = if fz.norm() > 0.0 {
            fz * (eta / fz.norm())
        } else {
            Complex64::new(eta, 0.0)
        };
        let delta = (target - fz) / gn;
        let step: Vec<Complex64> = g.iter().map(|gi| delta * gi.conj()).collect();
        let mut alpha = 1.0;
        let mut moved = false;
        for _ in 0..MAX_HALVINGS {
            let cand: Vec<Complex64> = z.iter().zip(&step).map(|(zi, si)| zi + si * alpha).collect();
            if gap(&cand) < err {
                z = cand;
                moved = true;
                break;
            }
            alpha *= 0.5;
        }
        if !moved {
            break;
        }
    }
    (gap(&z) <= LEVEL_SLACK * eta).then_some(z)
}

/// Samples points in the shell `eps1 ≤ ‖z‖ ≤ eps2`, projects them to
/// `|f| = eta` and reports the smallest Milnor residual among survivors.
///
/// A residual below tolerance is evidence that some fibre is tangent to a
/// sphere in the scanned range.
pub fn transversality_scan(f: &QPoly, cfg: &ScanConfig) -> Result<ResidualReport, NumericError> {
    if f.is_zero() {
        return Err(NumericError::ZeroPolynomial);
    }
    if !num_traits::Zero::is_zero(&f.constant_term()) {
        return Err(NumericError::NonzeroConstantTerm);
    }
    let n = f.ambient();
    let fg = ComplexGradient::new(f);
    let results: Vec<Option<(f64, Vec<Complex64>)>> = (0..cfg.samples as u64)
        .into_par_iter()
        .map(|i| {
            let z = project_to_level(&fg, sample_point(cfg, n, i), cfg.eta)?;
            if norm_sqr(&z) == 0.0 {
                return None;
            }
            Some((residual_from_gradient(&fg.gradient(&z), &z), z))
        })
        .collect();
    let discarded = results.iter().filter(|r| r.is_none()).count();
    let survivors: Vec<(f64, Vec<Complex64>)> = results.into_iter().flatten().collect();
    let points_tested = survivors.len();
    let mut best: Option<(f64, Vec<Complex64>)> = None;
    for (r, z) in survivors {
        if best.as_ref().is_none_or(|(b, _)| r < *b) {
            best = Some((r, z));
        }
    }
    let (min_residual, argmin_point) = best.ok_or(NumericError::NoSurvivors { samples: cfg.samples })?;
    Ok(ResidualReport {
        min_residual,
        argmin_point,
        points_tested,
        discarded,
        tolerance: cfg.tolerance,
        below_tolerance: min_residual < cfg.tolerance,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_rational_polynomial;

    fn q(t: &str, n: usize) -> QPoly {
        parse_rational_polynomial(t, n).unwrap()
    }

    #[test]
    fn config_validation() {
        assert!(ScanConfig::new(0.5, 0.1, 1e-4, 10, 0).is_err());
        assert!(ScanConfig::new(0.1, 0.5, 0.0, 10, 0).is_err());
        assert!(ScanConfig::new(0.1, 0.5, 1e-4, 0, 0).is_err());
        assert!(ScanConfig::new(0.1, 0.5, 1e-4, 1, 0).is_ok());
    }

    #[test]
    fn samples_lie_in_shell() {
        let cfg = ScanConfig::new(0.1, 0.5, 1e-4, 1, 7).unwrap();
        for i in 0..50 {
            let r = norm_sqr(&sample_point(&cfg, 3, i)).sqrt();
            assert!((0.1 - 1e-12..=0.5 + 1e-12).contains(&r));
        }
        assert_eq!(sample_point(&cfg, 3, 4), sample_point(&cfg, 3, 4));
        assert_ne!(sample_point(&cfg, 3, 4), sample_point(&cfg, 3, 5));
    }

    #[test]
    fn projection_reaches_level() {
        let fg = ComplexGradient::new(&q("z1^2+z2^2+z3^2", 3));
        let cfg = ScanConfig::new(0.1, 0.5, 1e-4, 1, 1).unwrap();
        let z = project_to_level(&fg, sample_point(&cfg, 3, 0), 1e-4).unwrap();
        assert!((fg.f.eval(&z).norm() - 1e-4).abs() <= 1e-4 * LEVEL_SLACK);
    }

    #[test]
    fn unreachable_level_has_no_survivors() {
        // Newton on z1^40 = 1e30 gains about 2.5% in radius per step.
        let cfg = ScanConfig::new(0.1, 0.1, 1e30, 1, 3).unwrap();
        assert_eq!(
            transversality_scan(&q("z1^40", 1), &cfg),
            Err(NumericError::NoSurvivors { samples: 1 })
        );
    }

    #[test]
    fn report_is_reproducible() {
        let cfg = ScanConfig::new(0.1, 0.5, 1e-4, 40, 11).unwrap();
        let f = q("z1^2+z2^3", 2);
        assert_eq!(
            transversality_scan(&f, &cfg).unwrap(),
            transversality_scan(&f, &cfg).unwrap()
        );
    }
}

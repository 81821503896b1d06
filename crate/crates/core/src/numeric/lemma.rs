use num_complex::Complex64;

use super::eval::{norm_sqr, ComplexPoly};
use super::NumericError;
use crate::poly::{QPoly, SubsetI, WeightVector};

/// A candidate point for the two-condition curve lemma: a point `a`, a
/// weight `w`, a coordinate subset `I`, unit multipliers `μ` and `λ`.
#[derive(Clone, Debug, PartialEq)]
pub struct LemmaCandidate {
    pub point: Vec<Complex64>,
    pub weight: WeightVector,
    pub subset: SubsetI,
    pub multipliers: Vec<Complex64>,
    pub lambda: Complex64,
}

const UNIT_NORM_SLACK: f64 = 1e-9;

/// The three blocks of the residual, summed by [`lemma_condition_residual`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LemmaResidualParts {
    /// `Σⱼ |f^{kⱼ,I}_w(a)|²`
    pub values: f64,
    /// Alignment defect over `I ∩ I(w)`.
    pub aligned: f64,
    /// Gradient mass over `I ∖ I(w)`.
    pub free: f64,
}

impl LemmaResidualParts {
    pub fn total(&self) -> f64 {
        self.values + self.aligned + self.free
    }
}

struct Prepared {
    faces: Vec<ComplexPoly>,
    partials: Vec<Vec<ComplexPoly>>,
}

fn prepare(fs: &[QPoly], cand: &LemmaCandidate) -> Result<Prepared, NumericError> {
    let n = fs.first().ok_or(NumericError::ZeroPolynomial)?.ambient();
    let shape = |expected: usize, found: usize| {
        if expected == found {
            Ok(())
        } else {
            Err(NumericError::ShapeMismatch { expected, found })
        }
    };
    for f in fs {
        shape(n, f.ambient())?;
        if f.is_zero() {
            return Err(NumericError::ZeroPolynomial);
        }
    }
    shape(n, cand.point.len())?;
    shape(n, cand.weight.len())?;
    shape(fs.len(), cand.multipliers.len())?;
    if let Some(i) = cand.subset.iter().find(|&i| i >= n || cand.point[i].norm_sqr() == 0.0) {
        return Err(NumericError::SubsetCoordinate { index: i + 1 });
    }
    if (norm_sqr(&cand.multipliers).sqrt() - 1.0).abs() > UNIT_NORM_SLACK {
        return Err(NumericError::MultiplierNorm);
    }
    let mut faces = Vec::with_capacity(fs.len());
    let mut partials = Vec::with_capacity(fs.len());
    for f in fs {
        let restricted = f.restrict_to_subspace(&cand.subset);
        let face = if restricted.is_zero() {
            restricted
        } else {
            restricted.face_function(&cand.weight).expect("shapes checked")
        };
        partials.push(
            (0..n)
                .map(|i| ComplexPoly::from_rational(&face.partial_derivative(i).expect("index in range")))
                .collect(),
        );
        faces.push(ComplexPoly::from_rational(&face));
    }
    Ok(Prepared { faces, partials })
}

/// `v_i = Σⱼ μⱼ ∂f^{kⱼ,I}_w/∂z_i(a)` for every coordinate.
fn combined_gradient(p: &Prepared, cand: &LemmaCandidate) -> Vec<Complex64> {
    let n = cand.point.len();
    (0..n)
        .map(|i| {
            p.partials
                .iter()
                .zip(&cand.multipliers)
                .map(|(d, mu)| mu * d[i].eval(&cand.point))
                .sum()
        })
        .collect()
}

pub fn lemma_residual_parts(fs: &[QPoly], cand: &LemmaCandidate) -> Result<LemmaResidualParts, NumericError> {
    let p = prepare(fs, cand)?;
    let values = p.faces.iter().map(|f| f.eval(&cand.point).norm_sqr()).sum();
    let v = combined_gradient(&p, cand);
    let zero_set = cand.weight.zero_set();
    let (mut aligned, mut free) = (0.0, 0.0);
    for i in cand.subset.iter() {
        if zero_set.contains(i) {
            aligned += (v[i] - cand.lambda * cand.point[i].conj()).norm_sqr();
        } else {
            free += v[i].norm_sqr();
        }
    }
    Ok(LemmaResidualParts { values, aligned, free })
}

/// Defect of the two lemma conditions at the candidate; zero exactly when
/// both hold.
pub fn lemma_condition_residual(fs: &[QPoly], cand: &LemmaCandidate) -> Result<f64, NumericError> {
    Ok(lemma_residual_parts(fs, cand)?.total())
}

/// Least-squares `λ` for the `I ∩ I(w)` block; zero when that block is
/// empty.
pub fn optimal_lambda(fs: &[QPoly], cand: &LemmaCandidate) -> Result<Complex64, NumericError> {
    let p = prepare(fs, cand)?;
    let v = combined_gradient(&p, cand);
    let block = cand.subset.intersection(&cand.weight.zero_set());
    let den: f64 = block.iter().map(|i| cand.point[i].norm_sqr()).sum();
    if den == 0.0 {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let num: Complex64 = block.iter().map(|i| v[i] * cand.point[i]).sum();
    Ok(num / den)
}

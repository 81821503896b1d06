use num_complex::Complex64;
use num_traits::ToPrimitive;

use super::NumericError;
use crate::poly::QPoly;

/// A polynomial with `f64` complex coefficients, for fast evaluation.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexPoly {
    n: usize,
    terms: Vec<(Vec<u32>, Complex64)>,
}

impl ComplexPoly {
    pub fn from_rational(f: &QPoly) -> Self {
        ComplexPoly {
            n: f.ambient(),
            terms: f
                .terms()
                .map(|(e, c)| {
                    (
                        e.entries().to_vec(),
                        Complex64::new(c.to_f64().unwrap_or(f64::NAN), 0.0),
                    )
                })
                .collect(),
        }
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    /// Value at `z`; `z.len()` must equal the ambient dimension.
    pub fn eval(&self, z: &[Complex64]) -> Complex64 {
        debug_assert_eq!(z.len(), self.n);
        self.terms
            .iter()
            .map(|(e, c)| {
                e.iter()
                    .zip(z)
                    .fold(*c, |acc, (&a, zi)| if a == 0 { acc } else { acc * zi.powu(a) })
            })
            .sum()
    }
}

/// A polynomial together with its formal partial derivatives.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexGradient {
    pub f: ComplexPoly,
    pub partials: Vec<ComplexPoly>,
}

impl ComplexGradient {
    pub fn new(f: &QPoly) -> Self {
        ComplexGradient {
            f: ComplexPoly::from_rational(f),
            partials: (0..f.ambient())
                .map(|i| ComplexPoly::from_rational(&f.partial_derivative(i).expect("index in range")))
                .collect(),
        }
    }

    pub fn gradient(&self, z: &[Complex64]) -> Vec<Complex64> {
        self.partials.iter().map(|p| p.eval(z)).collect()
    }
}

fn check_len(f: &QPoly, z: &[Complex64]) -> Result<(), NumericError> {
    if z.len() == f.ambient() {
        Ok(())
    } else {
        Err(NumericError::ShapeMismatch {
            expected: f.ambient(),
            found: z.len(),
        })
    }
}

pub fn evaluate_complex(f: &QPoly, z: &[Complex64]) -> Result<Complex64, NumericError> {
    check_len(f, z)?;
    Ok(ComplexPoly::from_rational(f).eval(z))
}

/// `(∂f/∂z_i(z))_i` from the formal derivatives.
pub fn gradient(f: &QPoly, z: &[Complex64]) -> Result<Vec<Complex64>, NumericError> {
    check_len(f, z)?;
    Ok(ComplexGradient::new(f).gradient(z))
}

pub(crate) fn norm_sqr(v: &[Complex64]) -> f64 {
    v.iter().map(|x| x.norm_sqr()).sum()
}

/// Squared distance from `g` to the complex line spanned by `z̄`.
pub(crate) fn residual_from_gradient(g: &[Complex64], z: &[Complex64]) -> f64 {
    let pairing: Complex64 = g.iter().zip(z).map(|(gi, zi)| gi * zi).sum();
    (norm_sqr(g) - pairing.norm_sqr() / norm_sqr(z)).max(0.0)
}

/// `‖g‖² − |Σ gᵢzᵢ|²/‖z‖²` with `g = ∇f(z)`; zero exactly when `∇f(z)` is
/// a complex multiple of `z̄`.
pub fn milnor_residual(f: &QPoly, z: &[Complex64]) -> Result<f64, NumericError> {
    check_len(f, z)?;
    if norm_sqr(z) == 0.0 {
        return Err(NumericError::ZeroVector);
    }
    Ok(residual_from_gradient(&gradient(f, z)?, z))
}

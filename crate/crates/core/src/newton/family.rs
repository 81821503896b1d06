use std::collections::BTreeSet;

use num_traits::Zero;
use serde::Serialize;

use super::polyhedron::vertices_of;
use super::GeomError;
use crate::poly::{Exponent, TPoly};

/// Comparison of the Newton polyhedron of a family member at generic `t`
/// and at `t = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundaryStabilityReport {
    pub stable: bool,
    pub generic_vertices: BTreeSet<Exponent>,
    pub at_zero_vertices: BTreeSet<Exponent>,
    /// Vertices present in exactly one of the two sets.
    pub offending: BTreeSet<Exponent>,
}

/// Whether the Newton boundary of `f(t, ·)` is the same for all small `t`.
///
/// A coefficient `c_α(t) ≢ 0` has finitely many roots, so the support is
/// constant on a punctured disc around `0`. If the vertex sets at generic
/// `t` and at `t = 0` agree, the boundary is constant on the whole disc.
pub fn family_boundary_stable(f: &TPoly) -> Result<BoundaryStabilityReport, GeomError> {
    if f.is_zero() {
        return Err(GeomError::ZeroPolynomial);
    }
    if !f.has_polynomial_coefficients() {
        return Err(GeomError::NonPolynomialCoefficient);
    }
    let zero = crate::poly::Rational::zero();
    let generic: Vec<Exponent> = f.support().into_iter().collect();
    let at_zero: Vec<Exponent> = f
        .terms()
        .filter(|(_, c)| !c.eval(&zero).expect("polynomial coefficient").is_zero())
        .map(|(e, _)| e.clone())
        .collect();
    let generic_vertices = vertices_of(&generic);
    let at_zero_vertices = vertices_of(&at_zero);
    let offending: BTreeSet<Exponent> = generic_vertices
        .symmetric_difference(&at_zero_vertices)
        .cloned()
        .collect();
    Ok(BoundaryStabilityReport {
        stable: offending.is_empty(),
        generic_vertices,
        at_zero_vertices,
        offending,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_polynomial;

    fn tp(text: &str, n: usize) -> TPoly {
        parse_polynomial(text, n).unwrap().into_parametric()
    }

    #[test]
    fn hesse_family_is_stable() {
        let r = family_boundary_stable(&tp("z1^3+z2^3+z3^3+t*z1*z2*z3", 3)).unwrap();
        assert!(r.stable);
        assert_eq!(r.generic_vertices.len(), 3);
    }

    #[test]
    fn vanishing_vertex_coefficient_is_unstable() {
        let r = family_boundary_stable(&tp("t*z1 + z2", 2)).unwrap();
        assert!(!r.stable);
        assert_eq!(r.offending, BTreeSet::from([Exponent::new(vec![1, 0])]));
    }

    #[test]
    fn one_minus_t_is_stable() {
        assert!(family_boundary_stable(&tp("(1-t)*z1 + z2", 2)).unwrap().stable);
    }

    #[test]
    fn rational_coefficient_rejected() {
        let f = TPoly::monomial(Exponent::new(vec![1]), crate::poly::RatFunc::t().inv());
        assert_eq!(family_boundary_stable(&f), Err(GeomError::NonPolynomialCoefficient));
    }
}

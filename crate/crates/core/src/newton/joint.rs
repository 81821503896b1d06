//! Common refinement of the positive parts of several normal fans.

use rayon::prelude::*;
use serde::Serialize;

use super::cone::{integer_weight, ConeSystem};
use super::polyhedron::{compact_faces, nonzero_support, CompactFace};
use super::GeomError;
use crate::poly::{Coefficient, Exponent, Polynomial, WeightVector};

/// One face per polynomial, all realized by a single positive weight.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JointFaceCone {
    pub faces: Vec<CompactFace>,
    /// Entries ≥ 1; `face_function(f^k, witness)` has support `faces[k].points`.
    pub witness: WeightVector,
}

impl JointFaceCone {
    /// Some member's face is a single point, so its face function is a monomial.
    pub fn has_monomial_face(&self) -> bool {
        self.faces.iter().any(CompactFace::is_vertex)
    }
}

/// Every distinct tuple `(Δ(w;f¹),…,Δ(w;fᵐ))` for `w ∈ ℕ^{*n}`, exactly once.
///
/// Candidate tuples are built one member at a time from the compact faces
/// of each polynomial and pruned as soon as the prefix is not jointly
/// realizable.
pub fn enumerate_joint_faces<C: Coefficient>(fs: &[Polynomial<C>]) -> Result<Vec<JointFaceCone>, GeomError> {
    let Some(first) = fs.first() else {
        return Err(GeomError::EmptyList);
    };
    let n = first.ambient();
    if fs.iter().any(|f| f.ambient() != n) {
        return Err(GeomError::AmbientMismatch);
    }
    let supports = fs.iter().map(nonzero_support).collect::<Result<Vec<_>, _>>()?;
    let faces = fs.iter().map(compact_faces).collect::<Result<Vec<_>, _>>()?;

    let search = Search {
        supports: &supports,
        faces: &faces,
    };
    let mut cones: Vec<JointFaceCone> = faces[0]
        .par_iter()
        .map(|f0| {
            let mut sys = ConeSystem::new(n, fs.len());
            search.constrain(&mut sys, 0, f0);
            let mut out = Vec::new();
            if let Some(w) = sys.solve() {
                search.extend(sys, w, vec![f0.clone()], &mut out)?;
            }
            Ok(out)
        })
        .collect::<Result<Vec<Vec<_>>, GeomError>>()?
        .into_iter()
        .flatten()
        .collect();
    cones.sort_by(|a, b| cone_key(a).cmp(&cone_key(b)));
    Ok(cones)
}

fn cone_key(c: &JointFaceCone) -> Vec<&Vec<Exponent>> {
    c.faces.iter().map(|f| &f.points).collect()
}

struct Search<'a> {
    supports: &'a [Vec<Exponent>],
    faces: &'a [Vec<CompactFace>],
}

impl Search<'_> {
    fn constrain(&self, sys: &mut ConeSystem, k: usize, face: &CompactFace) {
        for p in &self.supports[k] {
            if face.contains(p) {
                sys.on_face(k, p);
            } else {
                sys.above(k, p, true);
            }
        }
    }

    fn extend(
        &self,
        sys: ConeSystem,
        w: Vec<crate::poly::Rational>,
        prefix: Vec<CompactFace>,
        out: &mut Vec<JointFaceCone>,
    ) -> Result<(), GeomError> {
        let k = prefix.len();
        if k == self.supports.len() {
            let witness = integer_weight(&w)?;
            debug_assert!(prefix.iter().zip(self.supports).all(|(f, s)| {
                let d = s.iter().map(|p| p.dot(&witness)).min().unwrap();
                s.iter().all(|p| (p.dot(&witness) == d) == f.contains(p))
            }));
            out.push(JointFaceCone { faces: prefix, witness });
            return Ok(());
        }
        for face in &self.faces[k] {
            let mut next = sys.clone();
            self.constrain(&mut next, k, face);
            if let Some(wn) = next.solve() {
                let mut p = prefix.clone();
                p.push(face.clone());
                self.extend(next, wn, p, out)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_rational_polynomial;

    fn polys(texts: &[&str], n: usize) -> Vec<Polynomial<crate::poly::Rational>> {
        texts.iter().map(|t| parse_rational_polynomial(t, n).unwrap()).collect()
    }

    #[test]
    fn single_polynomial_matches_compact_faces() {
        let fs = polys(&["z1^2+z2^3"], 2);
        let cones = enumerate_joint_faces(&fs).unwrap();
        assert_eq!(cones.len(), 3);
    }

    #[test]
    fn two_monomials_give_one_cone() {
        let fs = polys(&["z1", "z2"], 2);
        let cones = enumerate_joint_faces(&fs).unwrap();
        assert_eq!(cones.len(), 1);
        assert!(cones[0].witness.is_positive());
    }

    #[test]
    fn two_planes_top_cone_at_ones() {
        let fs = polys(&["z1+z2+z3", "z1+2*z2+3*z3"], 3);
        let cones = enumerate_joint_faces(&fs).unwrap();
        // same support, so tuples are the diagonal of the simplex face lattice
        assert_eq!(cones.len(), 7);
        let top = cones.iter().find(|c| c.faces[0].points.len() == 3).unwrap();
        assert_eq!(top.faces[1].points.len(), 3);
        assert_eq!(top.witness, WeightVector::ones(3));
    }

    #[test]
    fn empty_list_is_an_error() {
        let fs: Vec<Polynomial<crate::poly::Rational>> = Vec::new();
        assert_eq!(enumerate_joint_faces(&fs), Err(GeomError::EmptyList));
    }
}

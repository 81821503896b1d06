//! Newton polyhedra and their compact faces, decided by exact rational LP.

mod cone;
mod family;
mod joint;
pub mod lp;
mod polyhedron;

use thiserror::Error;

pub use family::{family_boundary_stable, BoundaryStabilityReport};
pub use joint::{enumerate_joint_faces, JointFaceCone};
pub use polyhedron::{
    boundary_membership, compact_faces, compact_faces_of, face_points, newton_boundary_equal, newton_vertices,
    vertices_of, CompactFace, NewtonPolyhedron,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeomError {
    #[error("zero polynomial has no Newton polyhedron")]
    ZeroPolynomial,
    #[error("polynomials live in different ambient spaces")]
    AmbientMismatch,
    #[error("empty polynomial list")]
    EmptyList,
    #[error("family coefficient is not polynomial in t")]
    NonPolynomialCoefficient,
    #[error("witness weight does not fit in 64 bits")]
    WeightOverflow,
}

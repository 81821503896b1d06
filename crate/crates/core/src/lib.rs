//! Exact certification of Newton non-degeneracy hypotheses for products and
//! one-parameter families of polynomial map-germs, with certificates for the
//! Milnor-fibration conclusions they license.
//!
//! The crate is layered bottom-up:
//!
//! - [`poly`]: sparse polynomials over ℚ and ℚ(t), parsing and printing.
//! - [`newton`]: Newton polyhedra, compact faces and joint face cones, all
//!   decided by an exact rational simplex.
//! - [`groebner`]: Buchberger's algorithm, torus emptiness and Jacobian minors.
//! - [`certify`]: hypothesis checks and certificates.
//! - [`numeric`]: floating-point transversality probes (never used for verdicts).

pub mod certify;
pub mod groebner;
pub mod newton;
pub mod numeric;
pub mod poly;

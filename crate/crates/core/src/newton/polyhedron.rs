use std::collections::{BTreeMap, BTreeSet, VecDeque};

use num_traits::One;
use serde::Serialize;

use super::cone::{affine_dim, integer_weight, rational_dot, ConeSystem};
use super::lp::{find_feasible_point, Constraint, Relation};
use super::GeomError;
use crate::poly::{Coefficient, Exponent, Polynomial, Rational, WeightVector};

/// Vertex presentation of `Γ₊(f) = conv(vertices) + ℝ₊ⁿ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NewtonPolyhedron {
    pub ambient_n: usize,
    pub vertices: BTreeSet<Exponent>,
}

/// A compact face `Δ(w; f)` of the Newton polyhedron, `w` strictly positive.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CompactFace {
    /// Support points on the face, ascending graded-lex.
    pub points: Vec<Exponent>,
    /// Entries ≥ 1, gcd 1; `points` is exactly the argmin of `⟨witness,·⟩`.
    pub witness: WeightVector,
    /// `⟨witness, α⟩` for every `α` in `points`.
    pub level: u128,
    pub dim: usize,
    /// Not contained in a larger compact face.
    pub maximal: bool,
}

impl CompactFace {
    pub fn is_vertex(&self) -> bool {
        self.points.len() == 1
    }

    pub fn contains(&self, alpha: &Exponent) -> bool {
        self.points.binary_search(alpha).is_ok()
    }
}

pub(crate) fn nonzero_support<C: Coefficient>(f: &Polynomial<C>) -> Result<Vec<Exponent>, GeomError> {
    if f.is_zero() {
        return Err(GeomError::ZeroPolynomial);
    }
    Ok(f.support().into_iter().collect())
}

pub fn newton_vertices<C: Coefficient>(f: &Polynomial<C>) -> Result<NewtonPolyhedron, GeomError> {
    let pts = nonzero_support(f)?;
    Ok(NewtonPolyhedron {
        ambient_n: f.ambient(),
        vertices: vertices_of(&pts),
    })
}

/// Points of `pts` that are not in `conv(other points) + ℝ₊ⁿ`.
pub fn vertices_of(pts: &[Exponent]) -> BTreeSet<Exponent> {
    pts.iter()
        .enumerate()
        .filter(|(i, alpha)| {
            let others: Vec<&Exponent> = pts.iter().enumerate().filter(|(j, _)| j != i).map(|(_, b)| b).collect();
            !in_polyhedron(alpha, &others)
        })
        .map(|(_, a)| a.clone())
        .collect()
}

/// `α ∈ conv(pts) + ℝ₊ⁿ`.
pub(crate) fn in_polyhedron(alpha: &Exponent, pts: &[&Exponent]) -> bool {
    if pts.is_empty() {
        return false;
    }
    if pts.iter().any(|b| b.divides(alpha)) {
        return true;
    }
    // λ ≥ 0, Σλ = 1, Σ λ_j β_j ≤ α.
    let mut rows = vec![Constraint {
        coeffs: vec![Rational::one(); pts.len()],
        rel: Relation::Eq,
        rhs: Rational::one(),
    }];
    for i in 0..alpha.len() {
        rows.push(Constraint {
            coeffs: pts
                .iter()
                .map(|b| Rational::from_integer(b.entries()[i].into()))
                .collect(),
            rel: Relation::Le,
            rhs: Rational::from_integer(alpha.entries()[i].into()),
        });
    }
    find_feasible_point(pts.len(), &rows).is_some()
}

pub fn compact_faces<C: Coefficient>(f: &Polynomial<C>) -> Result<Vec<CompactFace>, GeomError> {
    let pts = nonzero_support(f)?;
    compact_faces_of(f.ambient(), &pts)
}

/// All compact faces of `conv(pts) + ℝ₊ⁿ`, each with its support points.
///
/// Faces are found by walking up the face lattice from the vertices: for a
/// face `F` and a vertex `v ∉ F`, the smallest face containing `F ∪ {v}`
/// (when one exists) is computed by LP closure. Every compact face is the
/// closure of its vertex set, so the walk reaches all of them.
pub fn compact_faces_of(n: usize, pts: &[Exponent]) -> Result<Vec<CompactFace>, GeomError> {
    let vertex_set = vertices_of(pts);
    let vertex_idx: Vec<usize> = (0..pts.len()).filter(|&i| vertex_set.contains(&pts[i])).collect();

    let mut found: BTreeMap<BTreeSet<usize>, WeightVector> = BTreeMap::new();
    let mut tried: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
    let mut queue: VecDeque<BTreeSet<usize>> = VecDeque::new();

    for &v in &vertex_idx {
        let seed = BTreeSet::from([v]);
        if let Some((face, w)) = closure(n, pts, &seed)? {
            if !found.contains_key(&face) {
                found.insert(face.clone(), w);
                queue.push_back(face);
            }
        }
    }
    while let Some(face) = queue.pop_front() {
        for &v in &vertex_idx {
            if face.contains(&v) {
                continue;
            }
            let mut cand = face.clone();
            cand.insert(v);
            if !tried.insert(cand.clone()) {
                continue;
            }
            if let Some((closed, w)) = closure(n, pts, &cand)? {
                if !found.contains_key(&closed) {
                    found.insert(closed.clone(), w);
                    queue.push_back(closed);
                }
            }
        }
    }

    let keys: Vec<&BTreeSet<usize>> = found.keys().collect();
    let mut faces: Vec<CompactFace> = found
        .iter()
        .map(|(idx, w)| {
            let mut points: Vec<Exponent> = idx.iter().map(|&i| pts[i].clone()).collect();
            points.sort();
            let level = points[0].dot(w);
            let maximal = !keys.iter().any(|k| k.len() > idx.len() && idx.is_subset(k));
            CompactFace {
                dim: affine_dim(&points),
                points,
                witness: w.clone(),
                level,
                maximal,
            }
        })
        .collect();
    faces.sort_by(|a, b| (a.dim, &a.points).cmp(&(b.dim, &b.points)));
    Ok(faces)
}

/// Smallest compact face containing the points `seed`, with a witness
/// realizing exactly that face; `None` if no compact face contains them all.
fn closure(
    n: usize,
    pts: &[Exponent],
    seed: &BTreeSet<usize>,
) -> Result<Option<(BTreeSet<usize>, WeightVector)>, GeomError> {
    let mut base = ConeSystem::new(n, 1);
    for (i, p) in pts.iter().enumerate() {
        if seed.contains(&i) {
            base.on_face(0, p);
        } else {
            base.above(0, p, false);
        }
    }
    let Some(w0) = base.solve() else {
        return Ok(None);
    };
    let level_of = |w: &[Rational]| rational_dot(w, &pts[*seed.iter().next().unwrap()]);

    let mut sum = w0.clone();
    let d0 = level_of(&w0);
    let mut undecided: BTreeSet<usize> = (0..pts.len())
        .filter(|i| !seed.contains(i) && rational_dot(&w0, &pts[*i]) == d0)
        .collect();
    let mut face = seed.clone();
    while let Some(b) = undecided.pop_first() {
        let mut sys = base.clone();
        sys.above(0, &pts[b], true);
        match sys.solve() {
            Some(w) => {
                let d = level_of(&w);
                undecided.retain(|&j| rational_dot(&w, &pts[j]) == d);
                for (s, x) in sum.iter_mut().zip(&w) {
                    *s += x;
                }
            }
            None => {
                face.insert(b);
            }
        }
    }
    let w = integer_weight(&sum)?;
    debug_assert!(argmin(pts, &w) == face);
    Ok(Some((face, w)))
}

pub(crate) fn argmin(pts: &[Exponent], w: &WeightVector) -> BTreeSet<usize> {
    let d = pts.iter().map(|p| p.dot(w)).min().unwrap_or(0);
    (0..pts.len()).filter(|&i| pts[i].dot(w) == d).collect()
}

/// `α` lies on some compact face of `Γ₊(f)`.
pub fn boundary_membership<C: Coefficient>(alpha: &Exponent, f: &Polynomial<C>) -> Result<bool, GeomError> {
    let pts = nonzero_support(f)?;
    if alpha.len() != f.ambient() {
        return Err(GeomError::AmbientMismatch);
    }
    if !pts.contains(alpha) && !in_polyhedron(alpha, &pts.iter().collect::<Vec<_>>()) {
        return Ok(false);
    }
    let mut sys = ConeSystem::new(f.ambient(), 1);
    sys.on_face(0, alpha);
    for p in &pts {
        sys.above(0, p, false);
    }
    Ok(sys.solve().is_some())
}

/// `Γ(f) = Γ(g)`, decided by comparing vertex sets.
pub fn newton_boundary_equal<C: Coefficient, D: Coefficient>(
    f: &Polynomial<C>,
    g: &Polynomial<D>,
) -> Result<bool, GeomError> {
    if f.ambient() != g.ambient() {
        return Err(GeomError::AmbientMismatch);
    }
    Ok(newton_vertices(f)?.vertices == newton_vertices(g)?.vertices)
}

/// The support points of `f` with `⟨w,·⟩` minimal, as a face point list.
pub fn face_points<C: Coefficient>(f: &Polynomial<C>, w: &WeightVector) -> Result<Vec<Exponent>, GeomError> {
    let pts = nonzero_support(f)?;
    Ok(argmin(&pts, w).into_iter().map(|i| pts[i].clone()).collect())
}

//! Linear systems over positive weight vectors.
//!
//! Unknowns are `w' = w - 1 ≥ 0` (so `w_i ≥ 1`) followed by one level `d_k`
//! per polynomial. A strict inequality `⟨w,β⟩ > d` is encoded as
//! `⟨w,β⟩ ≥ d + 1`; the realizable weights form an open cone, so any
//! solution of the strict system scales to one of the encoded system.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::lp::{find_feasible_point, Constraint, Relation};
use super::GeomError;
use crate::poly::{Exponent, Rational, WeightVector};

#[derive(Clone, Debug)]
pub(crate) struct ConeSystem {
    n: usize,
    levels: usize,
    rows: Vec<Constraint>,
}

impl ConeSystem {
    pub(crate) fn new(n: usize, levels: usize) -> Self {
        ConeSystem {
            n,
            levels,
            rows: Vec::new(),
        }
    }

    fn row(&self, level: usize, alpha: &Exponent) -> (Vec<Rational>, Rational) {
        let mut coeffs = vec![Rational::zero(); self.n + self.levels];
        for (c, &a) in coeffs.iter_mut().zip(alpha.entries()) {
            *c = Rational::from_integer(a.into());
        }
        coeffs[self.n + level] = -Rational::one();
        (coeffs, -Rational::from_integer(alpha.degree().into()))
    }

    /// `⟨w, α⟩ = d_level`.
    pub(crate) fn on_face(&mut self, level: usize, alpha: &Exponent) {
        let (coeffs, rhs) = self.row(level, alpha);
        self.rows.push(Constraint {
            coeffs,
            rel: Relation::Eq,
            rhs,
        });
    }

    /// `⟨w, β⟩ ≥ d_level`, or `≥ d_level + 1` when `strict`.
    pub(crate) fn above(&mut self, level: usize, beta: &Exponent, strict: bool) {
        let (coeffs, mut rhs) = self.row(level, beta);
        if strict {
            rhs += Rational::one();
        }
        self.rows.push(Constraint {
            coeffs,
            rel: Relation::Ge,
            rhs,
        });
    }

    /// A feasible weight `w` (entries ≥ 1), if any.
    pub(crate) fn solve(&self) -> Option<Vec<Rational>> {
        let x = find_feasible_point(self.n + self.levels, &self.rows)?;
        Some(x[..self.n].iter().map(|v| v + Rational::one()).collect())
    }
}

pub(crate) fn rational_dot(w: &[Rational], alpha: &Exponent) -> Rational {
    w.iter()
        .zip(alpha.entries())
        .map(|(wi, &a)| wi * Rational::from_integer(a.into()))
        .sum()
}

/// Scale a positive rational weight to integers and divide out the gcd.
pub(crate) fn integer_weight(w: &[Rational]) -> Result<WeightVector, GeomError> {
    let lcm = w.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let ints: Vec<BigInt> = w.iter().map(|q| (q * &lcm).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
    ints.iter()
        .map(|v| (v / &g).to_u64().ok_or(GeomError::WeightOverflow))
        .collect::<Result<Vec<_>, _>>()
        .map(WeightVector::new)
}

/// Rank of the differences `p_i - p_0`.
pub(crate) fn affine_dim(points: &[Exponent]) -> usize {
    let Some(base) = points.first() else {
        return 0;
    };
    let mut rows: Vec<Vec<Rational>> = points[1..]
        .iter()
        .map(|p| {
            p.entries()
                .iter()
                .zip(base.entries())
                .map(|(&a, &b)| Rational::from_integer(BigInt::from(a) - BigInt::from(b)))
                .collect()
        })
        .collect();
    let cols = base.len();
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank].clone();
        for row in rows.iter_mut().skip(rank + 1) {
            if row[c].is_zero() {
                continue;
            }
            let f = &row[c] / &pivot[c];
            for (v, pv) in row.iter_mut().zip(&pivot) {
                *v -= &f * pv;
            }
        }
        rank += 1;
    }
    rank
}

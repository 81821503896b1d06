//! Exact rational linear feasibility by the phase-one simplex method.
//!
//! Bland's rule (smallest index for both the entering and the leaving
//! variable) guarantees termination on degenerate problems.

use num_traits::{Signed, Zero};

use crate::poly::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Le,
    Eq,
    Ge,
}

/// `Σ coeffs[j]·x_j  (rel)  rhs`.
#[derive(Clone, Debug)]
pub struct Constraint {
    pub coeffs: Vec<Rational>,
    pub rel: Relation,
    pub rhs: Rational,
}

/// Find some `x ≥ 0` satisfying every constraint, or `None` if there is none.
pub fn find_feasible_point(num_vars: usize, constraints: &[Constraint]) -> Option<Vec<Rational>> {
    Tableau::build(num_vars, constraints).solve()
}

struct Tableau {
    num_vars: usize,
    /// Rows of `[a_1 … a_cols | b]`.
    rows: Vec<Vec<Rational>>,
    /// Reduced costs of the phase-one objective, last entry is `-z`.
    cost: Vec<Rational>,
    basis: Vec<usize>,
    cols: usize,
}

impl Tableau {
    fn build(num_vars: usize, constraints: &[Constraint]) -> Self {
        let m = constraints.len();
        let mut slack_count = 0;
        let mut art_count = 0;
        let normalized: Vec<(Vec<Rational>, Relation, Rational)> = constraints
            .iter()
            .map(|c| {
                debug_assert_eq!(c.coeffs.len(), num_vars);
                if c.rhs.is_negative() {
                    let rel = match c.rel {
                        Relation::Le => Relation::Ge,
                        Relation::Ge => Relation::Le,
                        Relation::Eq => Relation::Eq,
                    };
                    (c.coeffs.iter().map(|a| -a).collect(), rel, -c.rhs.clone())
                } else {
                    (c.coeffs.clone(), c.rel, c.rhs.clone())
                }
            })
            .collect();
        for (_, rel, _) in &normalized {
            match rel {
                Relation::Le => slack_count += 1,
                Relation::Ge => {
                    slack_count += 1;
                    art_count += 1;
                }
                Relation::Eq => art_count += 1,
            }
        }
        let art_start = num_vars + slack_count;
        let cols = art_start + art_count;
        let mut rows = Vec::with_capacity(m);
        let mut basis = Vec::with_capacity(m);
        let mut cost = vec![Rational::zero(); cols + 1];
        let (mut s, mut a) = (num_vars, art_start);
        for (coeffs, rel, rhs) in normalized {
            let mut row = vec![Rational::zero(); cols + 1];
            for (j, c) in coeffs.into_iter().enumerate() {
                row[j] = c;
            }
            row[cols] = rhs;
            match rel {
                Relation::Le => {
                    row[s] = Rational::from_integer(1.into());
                    basis.push(s);
                    s += 1;
                }
                Relation::Ge => {
                    row[s] = Rational::from_integer((-1).into());
                    s += 1;
                    row[a] = Rational::from_integer(1.into());
                    basis.push(a);
                    a += 1;
                }
                Relation::Eq => {
                    row[a] = Rational::from_integer(1.into());
                    basis.push(a);
                    a += 1;
                }
            }
            rows.push(row);
        }
        // Phase-one objective: minimise the sum of artificials, expressed
        // in terms of the non-basic columns.
        for c in &mut cost[art_start..cols] {
            *c = Rational::from_integer(1.into());
        }
        for (r, &b) in basis.iter().enumerate() {
            if b >= art_start {
                for (cj, aj) in cost.iter_mut().zip(&rows[r]) {
                    *cj -= aj;
                }
            }
        }
        Tableau {
            num_vars,
            rows,
            cost,
            basis,
            cols,
        }
    }

    fn solve(mut self) -> Option<Vec<Rational>> {
        while let Some(enter) = (0..self.cols).find(|&j| self.cost[j].is_negative()) {
            let mut leave: Option<(usize, Rational)> = None;
            for (r, row) in self.rows.iter().enumerate() {
                if !row[enter].is_positive() {
                    continue;
                }
                let ratio = &row[self.cols] / &row[enter];
                let better = match &leave {
                    None => true,
                    Some((lr, lratio)) => ratio < *lratio || (ratio == *lratio && self.basis[r] < self.basis[*lr]),
                };
                if better {
                    leave = Some((r, ratio));
                }
            }
            // Phase one is bounded below by zero, so some row always qualifies.
            let (r, _) = leave.expect("phase-one objective is bounded");
            self.pivot(r, enter);
        }
        if !self.cost[self.cols].is_zero() {
            return None;
        }
        let mut x = vec![Rational::zero(); self.num_vars];
        for (r, &b) in self.basis.iter().enumerate() {
            if b < self.num_vars {
                x[b] = self.rows[r][self.cols].clone();
            }
        }
        Some(x)
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let p = self.rows[r][c].clone();
        for v in self.rows[r].iter_mut() {
            *v /= &p;
        }
        let pivot_row = self.rows[r].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (v, pv) in row.iter_mut().zip(&pivot_row) {
                if !pv.is_zero() {
                    *v -= &f * pv;
                }
            }
        }
        if !self.cost[c].is_zero() {
            let f = self.cost[c].clone();
            for (v, pv) in self.cost.iter_mut().zip(&pivot_row) {
                if !pv.is_zero() {
                    *v -= &f * pv;
                }
            }
        }
        self.basis[r] = c;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    fn c(coeffs: &[i64], rel: Relation, rhs: i64) -> Constraint {
        Constraint {
            coeffs: coeffs.iter().map(|&a| rat(a, 1)).collect(),
            rel,
            rhs: rat(rhs, 1),
        }
    }

    fn satisfies(x: &[Rational], cs: &[Constraint]) -> bool {
        x.iter().all(|v| !v.is_negative())
            && cs.iter().all(|k| {
                let lhs: Rational = k.coeffs.iter().zip(x).map(|(a, b)| a * b).sum();
                match k.rel {
                    Relation::Le => lhs <= k.rhs,
                    Relation::Eq => lhs == k.rhs,
                    Relation::Ge => lhs >= k.rhs,
                }
            })
    }

    #[test]
    fn feasible_system_returns_a_point() {
        let cs = vec![
            c(&[1, 1], Relation::Eq, 3),
            c(&[1, -1], Relation::Ge, 1),
            c(&[0, 1], Relation::Ge, 1),
        ];
        let x = find_feasible_point(2, &cs).unwrap();
        assert!(satisfies(&x, &cs));
    }

    #[test]
    fn infeasible_system_is_detected() {
        let cs = vec![c(&[1, 1], Relation::Le, 1), c(&[1, 0], Relation::Ge, 2)];
        assert!(find_feasible_point(2, &cs).is_none());
    }

    #[test]
    fn negative_rhs_is_normalised() {
        let cs = vec![c(&[-1, 0], Relation::Le, -2), c(&[1, 0], Relation::Le, 2)];
        let x = find_feasible_point(2, &cs).unwrap();
        assert_eq!(x[0], rat(2, 1));
    }

    #[test]
    fn degenerate_problem_terminates() {
        // Classic cycling example for the largest-coefficient rule.
        let cs = vec![
            Constraint {
                coeffs: vec![rat(1, 4), rat(-8, 1), rat(-1, 1), rat(9, 1)],
                rel: Relation::Le,
                rhs: rat(0, 1),
            },
            Constraint {
                coeffs: vec![rat(1, 2), rat(-12, 1), rat(-1, 2), rat(3, 1)],
                rel: Relation::Le,
                rhs: rat(0, 1),
            },
            c(&[0, 0, 1, 0], Relation::Le, 1),
            c(&[1, 1, 1, 1], Relation::Ge, 1),
        ];
        let x = find_feasible_point(4, &cs).unwrap();
        assert!(satisfies(&x, &cs));
    }
}

//! Independent reference implementations used by the integration and
//! acceptance tests. Nothing here calls the LP or Gröbner code under test.
#![allow(dead_code)]

use std::collections::BTreeSet;

use ndcert_core::poly::{rat, Exponent, Polynomial, QPoly, Rational};
use num_complex::Complex64;
use num_traits::Zero;
use rand::Rng;

/// Random polynomial with `1..=max_terms` distinct nonzero exponents, each
/// entry at most `max_exp`, and small nonzero integer coefficients.
pub fn random_poly<R: Rng>(rng: &mut R, n: usize, max_terms: usize, max_exp: u32) -> QPoly {
    let k = rng.random_range(1..=max_terms);
    let mut terms = Vec::new();
    let mut seen = BTreeSet::new();
    let mut guard = 0;
    while terms.len() < k && guard < 1000 {
        guard += 1;
        let e: Vec<u32> = (0..n).map(|_| rng.random_range(0..=max_exp)).collect();
        if e.iter().all(|&x| x == 0) || !seen.insert(e.clone()) {
            continue;
        }
        let mut c = rng.random_range(-5i64..=5);
        if c == 0 {
            c = 1;
        }
        terms.push((Exponent::new(e), rat(c, 1)));
    }
    Polynomial::from_terms(n, terms)
}

pub fn support(f: &QPoly) -> Vec<Vec<u32>> {
    f.terms().map(|(e, _)| e.entries().to_vec()).collect()
}

fn dot(a: &[u32], w: &[u64]) -> u128 {
    a.iter().zip(w).map(|(&x, &y)| u128::from(x) * u128::from(y)).sum()
}

pub fn brute_min(f: &QPoly, w: &[u64]) -> u128 {
    support(f).iter().map(|a| dot(a, w)).min().unwrap()
}

pub fn argmin_set(pts: &[Vec<u32>], w: &[u64]) -> Vec<Vec<u32>> {
    let d = pts.iter().map(|a| dot(a, w)).min().unwrap();
    let mut s: Vec<Vec<u32>> = pts.iter().filter(|a| dot(a, w) == d).cloned().collect();
    s.sort();
    s
}

fn det_i128(m: &[Vec<i128>]) -> i128 {
    // Bareiss over the integers.
    let n = m.len();
    let mut a = m.to_vec();
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&r| a[r][k] != 0) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

fn subsets(m: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, m: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..m {
            cur.push(i);
            rec(i + 1, m, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, m, k, &mut Vec::new(), &mut out);
    out
}

/// Whether `{w : A w ≥ b}` is nonempty, assuming the rows of `A` span.
/// Enumerates basic solutions by Cramer's rule.
fn pointed_feasible(a: &[Vec<i128>], b: &[i128]) -> bool {
    let n = a[0].len();
    for rows in subsets(a.len(), n) {
        let m: Vec<Vec<i128>> = rows.iter().map(|&r| a[r].clone()).collect();
        let d = det_i128(&m);
        if d == 0 {
            continue;
        }
        // w_j = det_j / d
        let num: Vec<i128> = (0..n)
            .map(|j| {
                let mj: Vec<Vec<i128>> = rows
                    .iter()
                    .enumerate()
                    .map(|(ri, &r)| {
                        let mut row = a[r].clone();
                        row[j] = b[rows[ri]];
                        row
                    })
                    .collect();
                det_i128(&mj)
            })
            .collect();
        // A w ≥ b  ⇔  (A num) * sign(d) ≥ b * |d|
        let s = d.signum();
        let ok = a.iter().zip(b).all(|(row, &bi)| {
            let lhs: i128 = row.iter().zip(&num).map(|(x, y)| x * y).sum();
            lhs * s >= bi * d.abs()
        });
        if ok {
            return true;
        }
    }
    false
}

/// Vertices of `conv(pts) + ℝ₊ⁿ`: `α` is a vertex iff some `w ≥ 1` has
/// `⟨w, β − α⟩ ≥ 1` for every other point `β`.
pub fn vertex_oracle(pts: &[Vec<u32>]) -> BTreeSet<Vec<u32>> {
    let n = pts[0].len();
    let mut out = BTreeSet::new();
    for alpha in pts {
        let mut a = Vec::new();
        let mut b = Vec::new();
        for i in 0..n {
            let mut row = vec![0i128; n];
            row[i] = 1;
            a.push(row);
            b.push(1);
        }
        for beta in pts.iter().filter(|p| *p != alpha) {
            a.push(
                beta.iter()
                    .zip(alpha)
                    .map(|(&x, &y)| i128::from(x) - i128::from(y))
                    .collect(),
            );
            b.push(1);
        }
        if pointed_feasible(&a, &b) {
            out.insert(alpha.clone());
        }
    }
    out
}

/// Determinant by cofactor expansion along the first row.
pub fn laplace_det(m: &[Vec<QPoly>]) -> QPoly {
    let k = m.len();
    let n = m[0][0].ambient();
    if k == 1 {
        return m[0][0].clone();
    }
    let mut acc = QPoly::zero(n);
    for j in 0..k {
        let minor: Vec<Vec<QPoly>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != j)
                    .map(|(_, p)| p.clone())
                    .collect()
            })
            .collect();
        let term = m[0][j].mul(&laplace_det(&minor)).unwrap();
        acc = if j % 2 == 0 {
            acc.add(&term).unwrap()
        } else {
            acc.sub(&term).unwrap()
        };
    }
    acc
}

/// Exact evaluation by Horner-free term sums, independent of the library's
/// own evaluator.
pub fn eval_exact(f: &QPoly, z: &[Rational]) -> Rational {
    let mut acc = Rational::zero();
    for (e, c) in f.terms() {
        let mut t = c.clone();
        for (zi, &a) in z.iter().zip(e.entries()) {
            for _ in 0..a {
                t *= zi.clone();
            }
        }
        acc += t;
    }
    acc
}

/// Central finite difference of `f` along coordinate `i`.
pub fn central_difference(f: impl Fn(&[Complex64]) -> Complex64, z: &[Complex64], i: usize, h: f64) -> Complex64 {
    let mut zp = z.to_vec();
    let mut zm = z.to_vec();
    zp[i] += h;
    zm[i] -= h;
    (f(&zp) - f(&zm)) / (2.0 * h)
}

/// The same polynomial with each coefficient multiplied by `λ^{⟨w,α⟩}`.
pub fn weighted_substitution_value(f: &QPoly, w: &[u64], lambda: &Rational, z: &[Rational]) -> Rational {
    let scaled: Vec<Rational> = z
        .iter()
        .zip(w)
        .map(|(zi, &wi)| zi * num_traits::pow(lambda.clone(), wi as usize))
        .collect();
    eval_exact(f, &scaled)
}

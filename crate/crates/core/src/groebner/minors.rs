use super::GroebnerError;
use crate::poly::{Coefficient, Polynomial};

/// All maximal minors of the Jacobian matrix `(∂f^j/∂z_i)` of `m ≤ n`
/// polynomials, one per `m`-subset of columns in lexicographic order.
pub fn jacobian_minors<C: Coefficient>(polys: &[Polynomial<C>]) -> Result<Vec<Polynomial<C>>, GroebnerError> {
    let Some(first) = polys.first() else {
        return Err(GroebnerError::EmptyInput);
    };
    let n = first.ambient();
    let m = polys.len();
    if polys.iter().any(|p| p.ambient() != n) {
        return Err(GroebnerError::AmbientMismatch);
    }
    if m > n {
        return Err(GroebnerError::TooManyRows { rows: m, cols: n });
    }
    let jac: Vec<Vec<Polynomial<C>>> = polys
        .iter()
        .map(|p| {
            (0..n)
                .map(|i| p.partial_derivative(i).expect("index in range"))
                .collect()
        })
        .collect();
    Ok(combinations(n, m)
        .into_iter()
        .map(|cols| {
            let sub: Vec<Vec<Polynomial<C>>> = jac
                .iter()
                .map(|row| cols.iter().map(|&c| row[c].clone()).collect())
                .collect();
            bareiss_det(sub)
        })
        .collect())
}

/// `k`-subsets of `0..n` in lexicographic order.
pub(crate) fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Fraction-free determinant; every division is exact.
pub fn bareiss_det<C: Coefficient>(mut a: Vec<Vec<Polynomial<C>>>) -> Polynomial<C> {
    let k = a.len();
    let n = a[0][0].ambient();
    let mut negate = false;
    let mut prev = Polynomial::one(n);
    for p in 0..k.saturating_sub(1) {
        if a[p][p].is_zero() {
            let Some(r) = (p + 1..k).find(|&r| !a[r][p].is_zero()) else {
                return Polynomial::zero(n);
            };
            a.swap(p, r);
            negate = !negate;
        }
        for i in p + 1..k {
            for j in p + 1..k {
                let num = a[i][j]
                    .mul(&a[p][p])
                    .and_then(|x| x.sub(&a[i][p].mul(&a[p][j])?))
                    .expect("same ambient");
                a[i][j] = num.exact_div(&prev).expect("Bareiss division is exact");
            }
        }
        prev = a[p][p].clone();
    }
    let det = a[k - 1][k - 1].clone();
    if negate {
        det.neg()
    } else {
        det
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_rational_polynomial, QPoly};

    fn q(t: &str, n: usize) -> QPoly {
        parse_rational_polynomial(t, n).unwrap()
    }

    #[test]
    fn single_row_gives_partials() {
        let m = jacobian_minors(&[q("(z1+z2)*(z1+z2)", 2)]).unwrap();
        assert_eq!(m, vec![q("2*z1+2*z2", 2), q("2*z1+2*z2", 2)]);
    }

    #[test]
    fn identity_rows() {
        assert_eq!(jacobian_minors(&[q("z1", 2), q("z2", 2)]).unwrap(), vec![q("1", 2)]);
    }

    #[test]
    fn constant_matrix_minors() {
        let m = jacobian_minors(&[q("z1+z2+z3", 3), q("z1+2*z2+3*z3", 3)]).unwrap();
        assert_eq!(m, vec![q("1", 3), q("2", 3), q("1", 3)]);
    }

    #[test]
    fn too_many_rows() {
        assert_eq!(
            jacobian_minors(&[q("z1", 1), q("z1^2", 1)]),
            Err(GroebnerError::TooManyRows { rows: 2, cols: 1 })
        );
    }

    #[test]
    fn pivoting_on_zero_entry() {
        // [[0, z1], [z2, 0]] has determinant -z1*z2
        let m = vec![vec![q("0", 2), q("z1", 2)], vec![q("z2", 2), q("0", 2)]];
        assert_eq!(bareiss_det(m), q("-z1*z2", 2));
    }
}

use num_traits::Zero;

use crate::poly::{rat, Coefficient, Polynomial, QPoly, Rational};

/// Candidate coordinates, tried in this order.
pub const WITNESS_VALUES: [i64; 6] = [1, -1, 2, -2, 3, -3];

/// Upper bound on the number of points evaluated by [`small_torus_zero`].
pub const WITNESS_EVAL_CAP: usize = 100_000;

/// First common zero of `sys` with coordinates in [`WITNESS_VALUES`].
///
/// Points are ordered by largest absolute coordinate, then
/// lexicographically by position in [`WITNESS_VALUES`]. Parametric systems
/// with non-constant coefficients get no witness.
pub fn small_torus_zero<C: Coefficient>(sys: &[Polynomial<C>]) -> Option<Vec<i64>> {
    let n = sys.first()?.ambient();
    let sys: Vec<QPoly> = sys
        .iter()
        .map(|p| {
            let terms: Option<Vec<_>> = p.terms().map(|(e, c)| Some((e.clone(), c.as_rational()?))).collect();
            Some(Polynomial::from_terms(n, terms?))
        })
        .collect::<Option<_>>()?;
    let mut budget = WITNESS_EVAL_CAP;
    for level in 1..=WITNESS_VALUES.len() / 2 {
        let width = 2 * level;
        let mut idx = vec![0usize; n];
        loop {
            if idx.iter().any(|&i| i / 2 + 1 == level) {
                if budget == 0 {
                    return None;
                }
                budget -= 1;
                let point: Vec<Rational> = idx.iter().map(|&i| rat(WITNESS_VALUES[i], 1)).collect();
                if sys.iter().all(|p| p.eval_rational(&point).is_zero()) {
                    return Some(idx.iter().map(|&i| WITNESS_VALUES[i]).collect());
                }
            }
            if !advance(&mut idx, width) {
                break;
            }
        }
    }
    None
}

/// Odometer step with the last coordinate fastest; `false` after wrapping.
fn advance(idx: &mut [usize], width: usize) -> bool {
    for slot in idx.iter_mut().rev() {
        *slot += 1;
        if *slot < width {
            return true;
        }
        *slot = 0;
    }
    false
}

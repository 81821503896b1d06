use super::buchberger::buchberger_with_budget;
use super::order::MonomialOrder;
use super::GroebnerError;
use crate::poly::{Coefficient, Exponent, Polynomial};

/// Whether the polynomials have no common zero in `(ℂ∖{0})ⁿ`.
///
/// Adjoins an auxiliary variable `u` (last in grevlex) and tests whether
/// `⟨polys, 1 - u·z1⋯zn⟩` is the unit ideal. Over ℚ(t) a `true` verdict
/// holds for all but finitely many values of `t`.
pub fn torus_emptiness<C: Coefficient>(polys: &[Polynomial<C>], budget: u64) -> Result<bool, GroebnerError> {
    let Some(first) = polys.first() else {
        return Err(GroebnerError::EmptyInput);
    };
    let n = first.ambient();
    if polys.iter().any(|p| p.ambient() != n) {
        return Err(GroebnerError::AmbientMismatch);
    }
    // A nonzero monomial never vanishes on the torus.
    if polys.iter().any(|p| p.len() == 1) {
        return Ok(true);
    }
    let mut gens: Vec<Polynomial<C>> = polys
        .iter()
        .filter(|p| !p.is_zero())
        .map(|p| p.with_extra_vars(1))
        .collect();
    let mut all = vec![1; n + 1];
    let uz = Polynomial::monomial(Exponent::new(std::mem::take(&mut all)), C::one());
    gens.push(Polynomial::one(n + 1).sub(&uz).expect("same ambient"));
    let gb = buchberger_with_budget(&gens, &MonomialOrder::grevlex(n + 1), budget)?;
    Ok(gb.is_unit_ideal())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::DEFAULT_STEP_BUDGET;
    use crate::poly::{parse_rational_polynomial, QPoly};

    fn q(t: &str, n: usize) -> QPoly {
        parse_rational_polynomial(t, n).unwrap()
    }

    #[test]
    fn monomial_has_no_torus_zero() {
        assert!(torus_emptiness(&[q("z1*z2", 2)], DEFAULT_STEP_BUDGET).unwrap());
    }

    #[test]
    fn diagonal_line_meets_torus() {
        assert!(!torus_emptiness(&[q("z1 - z2", 2)], DEFAULT_STEP_BUDGET).unwrap());
    }

    #[test]
    fn constant_minors_make_it_empty() {
        let sys = [q("z1+z2+z3", 3), q("z1+2*z2+3*z3", 3), q("1", 3), q("2", 3), q("1", 3)];
        assert!(torus_emptiness(&sys, DEFAULT_STEP_BUDGET).unwrap());
    }

    #[test]
    fn zeros_only_on_axes_are_excluded() {
        // z1*(z2 - 1) and z1*(z2 + 1): common zeros have z1 = 0.
        assert!(torus_emptiness(&[q("z1*z2 - z1", 2), q("z1*z2 + z1", 2)], DEFAULT_STEP_BUDGET).unwrap());
    }

    #[test]
    fn empty_list_is_an_error() {
        let r: Result<bool, _> = torus_emptiness::<crate::poly::Rational>(&[], DEFAULT_STEP_BUDGET);
        assert_eq!(r, Err(GroebnerError::EmptyInput));
    }
}

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::Zero;

use super::coeff::{Coefficient, Rational};
use super::exponent::{Exponent, SubsetI, WeightVector};
use super::ratfunc::RatFunc;
use super::PolyError;

/// Exact sparse multivariate polynomial in `z1,…,zn` over the field `C`.
///
/// Terms are keyed by exponent in graded-lexicographic order; no stored
/// coefficient is zero.
#[derive(Clone, PartialEq)]
pub struct Polynomial<C> {
    n: usize,
    terms: BTreeMap<Exponent, C>,
}

/// Polynomial over ℚ.
pub type QPoly = Polynomial<Rational>;
/// Polynomial over ℚ(t).
pub type TPoly = Polynomial<RatFunc>;

impl<C: Coefficient> Polynomial<C> {
    pub fn zero(n: usize) -> Self {
        Polynomial {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(n: usize, c: C) -> Self {
        Self::monomial(Exponent::zero(n), c)
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, C::one())
    }

    /// `c·z^α`.
    pub fn monomial(alpha: Exponent, c: C) -> Self {
        let n = alpha.len();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(alpha, c);
        }
        Polynomial { n, terms }
    }

    /// The coordinate function `z_i` (0-based `i`).
    pub fn var(n: usize, i: usize) -> Self {
        Self::monomial(Exponent::unit(n, i, 1), C::one())
    }

    /// Sum of terms; repeated exponents are combined.
    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (Exponent, C)>) -> Self {
        let mut p = Self::zero(n);
        for (e, c) in terms {
            debug_assert_eq!(e.len(), n);
            p.add_term(e, c);
        }
        p
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponent, &C)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn coeff(&self, alpha: &Exponent) -> Option<&C> {
        self.terms.get(alpha)
    }

    pub fn support(&self) -> BTreeSet<Exponent> {
        self.terms.keys().cloned().collect()
    }

    pub fn constant_term(&self) -> C {
        self.terms.get(&Exponent::zero(self.n)).cloned().unwrap_or_else(C::zero)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Exponent::is_zero)
    }

    /// Leading term in graded-lex order.
    pub fn leading(&self) -> Option<(&Exponent, &C)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.keys().map(Exponent::degree).max()
    }

    fn add_term(&mut self, e: Exponent, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&e) {
            Some(old) => {
                let s = old + c;
                if !s.is_zero() {
                    self.terms.insert(e, s);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    fn check_ambient(&self, o: &Self) -> Result<(), PolyError> {
        if self.n == o.n {
            Ok(())
        } else {
            Err(PolyError::AmbientMismatch {
                left: self.n,
                right: o.n,
            })
        }
    }

    pub fn add(&self, o: &Self) -> Result<Self, PolyError> {
        self.check_ambient(o)?;
        let mut r = self.clone();
        for (e, c) in &o.terms {
            r.add_term(e.clone(), c.clone());
        }
        Ok(r)
    }

    pub fn sub(&self, o: &Self) -> Result<Self, PolyError> {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        self.map_coeffs(|c| -c.clone())
    }

    pub fn scale(&self, k: &C) -> Self {
        if k.is_zero() {
            return Self::zero(self.n);
        }
        self.map_coeffs(|c| c.clone() * k.clone())
    }

    /// Multiply by the term `c·z^α`.
    pub fn mul_term(&self, alpha: &Exponent, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        Polynomial {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(e, a)| (e.add(alpha), a.clone() * c.clone()))
                .collect(),
        }
    }

    pub fn mul(&self, o: &Self) -> Result<Self, PolyError> {
        self.check_ambient(o)?;
        let mut r = Self::zero(self.n);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &o.terms {
                r.add_term(ea.add(eb), ca.clone() * cb.clone());
            }
        }
        Ok(r)
    }

    /// Product of a nonempty list.
    pub fn product<'a>(fs: impl IntoIterator<Item = &'a Self>) -> Result<Self, PolyError>
    where
        C: 'a,
    {
        let mut it = fs.into_iter();
        let first = it.next().ok_or(PolyError::EmptyList)?.clone();
        it.try_fold(first, |acc, f| acc.mul(f))
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut r = Self::one(self.n);
        for _ in 0..k {
            r = r.mul(self).expect("same ambient");
        }
        r
    }

    /// Formal partial derivative `∂/∂z_i` (0-based `i`).
    pub fn partial_derivative(&self, i: usize) -> Result<Self, PolyError> {
        if i >= self.n {
            return Err(PolyError::IndexOutOfRange {
                index: i + 1,
                n: self.n,
            });
        }
        let mut r = Self::zero(self.n);
        for (e, c) in &self.terms {
            let a = e.entries()[i];
            if a == 0 {
                continue;
            }
            let mut d = e.clone();
            d.entries_mut()[i] -= 1;
            r.add_term(d, c.clone() * C::from_rational(Rational::from_integer(a.into())));
        }
        Ok(r)
    }

    /// `f^I`: drop every term involving a variable outside `I`.
    pub fn restrict_to_subspace(&self, subset: &SubsetI) -> Self {
        Polynomial {
            n: self.n,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| {
                    e.entries()
                        .iter()
                        .enumerate()
                        .all(|(i, &a)| a == 0 || subset.contains(i))
                })
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// `d(w; f)`, the minimum of `⟨w, α⟩` over the support.
    pub fn d_of_w(&self, w: &WeightVector) -> Result<u128, PolyError> {
        self.check_weight(w)?;
        self.terms
            .keys()
            .map(|e| e.dot(w))
            .min()
            .ok_or(PolyError::ZeroPolynomial)
    }

    /// `f_w`: the terms of `f` on the face `Δ(w; f)`.
    pub fn face_function(&self, w: &WeightVector) -> Result<Self, PolyError> {
        let d = self.d_of_w(w)?;
        Ok(Polynomial {
            n: self.n,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.dot(w) == d)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        })
    }

    fn check_weight(&self, w: &WeightVector) -> Result<(), PolyError> {
        if w.len() == self.n {
            Ok(())
        } else {
            Err(PolyError::AmbientMismatch {
                left: self.n,
                right: w.len(),
            })
        }
    }

    /// Every coordinate axis meets the support away from the origin.
    pub fn is_convenient(&self) -> Result<bool, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        Ok((0..self.n).all(|i| {
            self.terms.keys().any(|e| {
                e.entries()
                    .iter()
                    .enumerate()
                    .all(|(j, &a)| if j == i { a >= 1 } else { a == 0 })
            })
        }))
    }

    pub fn map_coeffs<D: Coefficient>(&self, mut f: impl FnMut(&C) -> D) -> Polynomial<D> {
        let mut r = Polynomial::zero(self.n);
        for (e, c) in &self.terms {
            r.add_term(e.clone(), f(c));
        }
        r
    }

    /// Same polynomial in `n + k` variables; the new ones come last.
    pub fn with_extra_vars(&self, k: usize) -> Self {
        Polynomial {
            n: self.n + k,
            terms: self.terms.iter().map(|(e, c)| (e.extended(k), c.clone())).collect(),
        }
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        let (dl, dc) = d.leading()?;
        let (dl, dc) = (dl.clone(), dc.clone());
        let mut rem = self.clone();
        let mut quot = Self::zero(self.n);
        while let Some((rl, rc)) = rem.leading() {
            if !dl.divides(rl) {
                return None;
            }
            let e = rl.sub(&dl);
            let c = rc.clone() / dc.clone();
            rem = rem.sub(&d.mul_term(&e, &c)).ok()?;
            quot.add_term(e, c);
        }
        Some(quot)
    }
}

impl QPoly {
    /// View a rational polynomial as a (constant-in-t) parametric one.
    pub fn to_parametric(&self) -> TPoly {
        self.map_coeffs(|c| RatFunc::from_rational(c.clone()))
    }

    /// Exact value at a rational point.
    pub fn eval_rational(&self, z: &[Rational]) -> Rational {
        self.terms
            .iter()
            .map(|(e, c)| {
                e.entries()
                    .iter()
                    .zip(z)
                    .fold(c.clone(), |acc, (&a, zi)| acc * num_traits::pow(zi.clone(), a as usize))
            })
            .fold(Rational::zero(), |acc, v| acc + v)
    }
}

impl TPoly {
    /// Coefficient-wise evaluation at `t = t0`.
    pub fn specialize_parameter(&self, t0: &Rational) -> Result<QPoly, PolyError> {
        let mut r = QPoly::zero(self.n);
        for (e, c) in &self.terms {
            let v = c.eval(t0).ok_or(PolyError::Pole { t0: t0.clone() })?;
            r.add_term(e.clone(), v);
        }
        Ok(r)
    }

    /// All coefficients lie in ℚ[t].
    pub fn has_polynomial_coefficients(&self) -> bool {
        self.terms.values().all(RatFunc::is_polynomial)
    }

    /// The rational polynomial, if no coefficient actually depends on `t`.
    pub fn to_rational(&self) -> Option<QPoly> {
        let mut r = QPoly::zero(self.n);
        for (e, c) in &self.terms {
            r.add_term(e.clone(), c.as_rational()?);
        }
        Some(r)
    }
}

fn fmt_monomial(e: &Exponent, out: &mut String) {
    let mut first = true;
    for (i, &a) in e.entries().iter().enumerate() {
        if a == 0 {
            continue;
        }
        if !first {
            out.push('*');
        }
        first = false;
        out.push_str(&format!("z{}", i + 1));
        if a > 1 {
            out.push_str(&format!("^{a}"));
        }
    }
}

impl<C: Coefficient> fmt::Display for Polynomial<C> {
    /// Canonical text in the parser's grammar, terms in descending graded-lex order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut s = String::new();
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.sign_negative();
            match (k, neg) {
                (0, true) => s.push('-'),
                (0, false) => {}
                (_, true) => s.push_str(" - "),
                (_, false) => s.push_str(" + "),
            }
            let standalone = e.is_zero();
            c.fmt_abs(standalone, &mut s);
            if !standalone {
                fmt_monomial(e, &mut s);
            }
        }
        f.write_str(&s)
    }
}

impl<C: Coefficient> fmt::Debug for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial[n={}]({})", self.n, self)
    }
}

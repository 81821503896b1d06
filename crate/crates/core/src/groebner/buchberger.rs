use std::cmp::Ordering;
use std::collections::BTreeSet;

use super::order::MonomialOrder;
use super::GroebnerError;
use crate::poly::{Coefficient, Exponent, Polynomial};

/// Reduction steps allowed per basis computation unless configured otherwise.
pub const DEFAULT_STEP_BUDGET: u64 = 1_000_000;

/// Reduced Gröbner basis: monic, inter-reduced generators sorted by
/// ascending leading monomial.
#[derive(Clone, Debug, PartialEq)]
pub struct GroebnerBasis<C: Coefficient> {
    pub order: MonomialOrder,
    pub generators: Vec<Polynomial<C>>,
}

impl<C: Coefficient> GroebnerBasis<C> {
    /// The ideal is the whole ring: the basis is `{1}`.
    pub fn is_unit_ideal(&self) -> bool {
        matches!(self.generators.as_slice(), [g] if g.is_constant() && !g.is_zero())
    }
}

pub fn is_unit_ideal<C: Coefficient>(gb: &GroebnerBasis<C>) -> bool {
    gb.is_unit_ideal()
}

/// Terms sorted descending in a fixed monomial order.
#[derive(Clone, Debug)]
struct Sparse<C> {
    terms: Vec<(Exponent, C)>,
}

impl<C: Coefficient> Sparse<C> {
    fn from_poly(p: &Polynomial<C>, order: &MonomialOrder) -> Self {
        let mut terms: Vec<(Exponent, C)> = p.terms().map(|(e, c)| (e.clone(), c.clone())).collect();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        Sparse { terms }
    }

    fn to_poly(&self, n: usize) -> Polynomial<C> {
        Polynomial::from_terms(n, self.terms.iter().cloned())
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn lm(&self) -> &Exponent {
        &self.terms[0].0
    }

    fn lc(&self) -> &C {
        &self.terms[0].1
    }

    fn is_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_zero()
    }

    fn monic(mut self) -> Self {
        if self.is_zero() || self.lc().is_one() {
            return self;
        }
        let inv = C::one() / self.lc().clone();
        for (_, c) in &mut self.terms {
            *c = c.clone() * inv.clone();
        }
        self
    }

    /// `self - c·z^shift·g`.
    fn sub_scaled(&self, c: &C, shift: &Exponent, g: &Sparse<C>, order: &MonomialOrder) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = g
            .terms
            .iter()
            .map(|(e, k)| (e.add(shift), k.clone() * c.clone()))
            .peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => out.push(a.next().unwrap().clone()),
                (None, Some(_)) => {
                    let (e, k) = b.next().unwrap();
                    out.push((e, -k));
                }
                (Some((ea, _)), Some((eb, _))) => match order.cmp(ea, eb) {
                    Ordering::Greater => out.push(a.next().unwrap().clone()),
                    Ordering::Less => {
                        let (e, k) = b.next().unwrap();
                        out.push((e, -k));
                    }
                    Ordering::Equal => {
                        let (e, ka) = a.next().unwrap().clone();
                        let (_, kb) = b.next().unwrap();
                        let s = ka - kb;
                        if !s.is_zero() {
                            out.push((e, s));
                        }
                    }
                },
            }
        }
        Sparse { terms: out }
    }
}

struct Budget {
    used: u64,
    limit: u64,
}

impl Budget {
    fn new(limit: u64) -> Self {
        Budget { used: 0, limit }
    }

    fn charge(&mut self) -> Result<(), GroebnerError> {
        self.used += 1;
        if self.used > self.limit {
            Err(GroebnerError::ResourceExhausted { budget: self.limit })
        } else {
            Ok(())
        }
    }
}

fn reduce_full<C: Coefficient>(
    p: Sparse<C>,
    basis: &[Sparse<C>],
    skip: Option<usize>,
    order: &MonomialOrder,
    budget: &mut Budget,
) -> Result<Sparse<C>, GroebnerError> {
    let mut p = p;
    let mut rem: Vec<(Exponent, C)> = Vec::new();
    while !p.is_zero() {
        let lm = p.lm().clone();
        let divisor = basis
            .iter()
            .enumerate()
            .find(|(k, g)| Some(*k) != skip && g.lm().divides(&lm));
        match divisor {
            Some((_, g)) => {
                budget.charge()?;
                let c = p.lc().clone() / g.lc().clone();
                p = p.sub_scaled(&c, &lm.sub(g.lm()), g, order);
            }
            None => rem.push(p.terms.remove(0)),
        }
    }
    Ok(Sparse { terms: rem })
}

fn check_inputs<C: Coefficient>(polys: &[Polynomial<C>], order: &MonomialOrder) -> Result<usize, GroebnerError> {
    let n = order.nvars();
    if polys.iter().any(|p| p.ambient() != n) {
        return Err(GroebnerError::AmbientMismatch);
    }
    Ok(n)
}

/// Remainder of `p` on multivariate division by `basis`; no term of the
/// result is divisible by a leading monomial of `basis`.
pub fn normal_form<C: Coefficient>(
    p: &Polynomial<C>,
    basis: &[Polynomial<C>],
    order: &MonomialOrder,
) -> Result<Polynomial<C>, GroebnerError> {
    let n = check_inputs(std::slice::from_ref(p), order)?;
    check_inputs(basis, order)?;
    let basis: Vec<Sparse<C>> = basis
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| Sparse::from_poly(g, order))
        .collect();
    let mut budget = Budget::new(u64::MAX);
    Ok(reduce_full(Sparse::from_poly(p, order), &basis, None, order, &mut budget)?.to_poly(n))
}

/// S-polynomial of `f` and `g` with respect to `order`.
pub fn s_polynomial<C: Coefficient>(f: &Polynomial<C>, g: &Polynomial<C>, order: &MonomialOrder) -> Polynomial<C> {
    let (a, b) = (Sparse::from_poly(f, order), Sparse::from_poly(g, order));
    if a.is_zero() || b.is_zero() {
        return Polynomial::zero(order.nvars());
    }
    spoly(&a, &b, order).to_poly(order.nvars())
}

fn spoly<C: Coefficient>(a: &Sparse<C>, b: &Sparse<C>, order: &MonomialOrder) -> Sparse<C> {
    let l = a.lm().lcm(b.lm());
    let sa = l.sub(a.lm());
    let sb = l.sub(b.lm());
    let lifted = Sparse { terms: Vec::new() }.sub_scaled(&(-(C::one() / a.lc().clone())), &sa, a, order);
    lifted.sub_scaled(&(C::one() / b.lc().clone()), &sb, b, order)
}

pub fn buchberger<C: Coefficient>(
    gens: &[Polynomial<C>],
    order: &MonomialOrder,
) -> Result<GroebnerBasis<C>, GroebnerError> {
    buchberger_with_budget(gens, order, DEFAULT_STEP_BUDGET)
}

/// Buchberger's algorithm with the normal selection strategy and both of
/// Buchberger's criteria; fails with `ResourceExhausted` after `budget`
/// reduction steps.
pub fn buchberger_with_budget<C: Coefficient>(
    gens: &[Polynomial<C>],
    order: &MonomialOrder,
    budget: u64,
) -> Result<GroebnerBasis<C>, GroebnerError> {
    if gens.is_empty() {
        return Err(GroebnerError::EmptyInput);
    }
    let n = check_inputs(gens, order)?;
    let mut budget = Budget::new(budget);
    let unit = || GroebnerBasis {
        order: order.clone(),
        generators: vec![Polynomial::one(n)],
    };

    let mut basis: Vec<Sparse<C>> = Vec::new();
    let mut pairs: BTreeSet<(usize, usize)> = BTreeSet::new();
    for g in gens.iter().filter(|g| !g.is_zero()) {
        let s = Sparse::from_poly(g, order).monic();
        if s.is_constant() {
            return Ok(unit());
        }
        let k = basis.len();
        pairs.extend((0..k).map(|i| (i, k)));
        basis.push(s);
    }

    while let Some((i, j)) = pairs.iter().copied().min_by(|p, q| {
        let lp = basis[p.0].lm().lcm(basis[p.1].lm());
        let lq = basis[q.0].lm().lcm(basis[q.1].lm());
        order.cmp(&lp, &lq).then_with(|| (p.1, p.0).cmp(&(q.1, q.0)))
    }) {
        pairs.remove(&(i, j));
        let (li, lj) = (basis[i].lm(), basis[j].lm());
        if li.coprime(lj) {
            continue;
        }
        let l = li.lcm(lj);
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].lm().divides(&l)
                && !pairs.contains(&(i.min(k), i.max(k)))
                && !pairs.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        let s = spoly(&basis[i], &basis[j], order);
        let h = reduce_full(s, &basis, None, order, &mut budget)?;
        if h.is_zero() {
            continue;
        }
        let h = h.monic();
        if h.is_constant() {
            return Ok(unit());
        }
        let k = basis.len();
        pairs.extend((0..k).map(|i| (i, k)));
        basis.push(h);
    }

    // Minimalize, then inter-reduce.
    let keep: Vec<usize> = (0..basis.len())
        .filter(|&i| {
            !(0..basis.len())
                .any(|k| k != i && basis[k].lm().divides(basis[i].lm()) && (basis[k].lm() != basis[i].lm() || k < i))
        })
        .collect();
    let minimal: Vec<Sparse<C>> = keep.iter().map(|&i| basis[i].clone()).collect();
    let mut reduced = Vec::with_capacity(minimal.len());
    for (k, g) in minimal.iter().enumerate() {
        let head = Sparse {
            terms: vec![g.terms[0].clone()],
        };
        let tail = Sparse {
            terms: g.terms[1..].to_vec(),
        };
        let tail = reduce_full(tail, &minimal, Some(k), order, &mut budget)?;
        let mut terms = head.terms;
        terms.extend(tail.terms);
        reduced.push(Sparse { terms }.monic());
    }
    reduced.sort_by(|a, b| order.cmp(a.lm(), b.lm()));
    Ok(GroebnerBasis {
        order: order.clone(),
        generators: reduced.iter().map(|g| g.to_poly(n)).collect(),
    })
}

use std::cmp::Ordering;

use crate::poly::Exponent;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrderKind {
    GRevLex,
    Lex,
}

/// A monomial order together with a variable ranking.
///
/// `ranking[0]` is the most significant variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    kind: OrderKind,
    ranking: Vec<usize>,
}

impl MonomialOrder {
    /// Graded reverse lexicographic with `z1 > z2 > … > zn`.
    pub fn grevlex(n: usize) -> Self {
        MonomialOrder {
            kind: OrderKind::GRevLex,
            ranking: (0..n).collect(),
        }
    }

    /// Lexicographic with `z1 > z2 > … > zn`.
    pub fn lex(n: usize) -> Self {
        MonomialOrder {
            kind: OrderKind::Lex,
            ranking: (0..n).collect(),
        }
    }

    /// `ranking` must be a permutation of `0..n`.
    pub fn with_ranking(kind: OrderKind, ranking: Vec<usize>) -> Option<Self> {
        let mut seen = vec![false; ranking.len()];
        for &v in &ranking {
            if v >= seen.len() || std::mem::replace(&mut seen[v], true) {
                return None;
            }
        }
        Some(MonomialOrder { kind, ranking })
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn nvars(&self) -> usize {
        self.ranking.len()
    }

    pub fn cmp(&self, a: &Exponent, b: &Exponent) -> Ordering {
        let (a, b) = (a.entries(), b.entries());
        match self.kind {
            OrderKind::Lex => {
                for &v in &self.ranking {
                    match a[v].cmp(&b[v]) {
                        Ordering::Equal => continue,
                        o => return o,
                    }
                }
                Ordering::Equal
            }
            OrderKind::GRevLex => {
                let da: u64 = a.iter().map(|&x| u64::from(x)).sum();
                let db: u64 = b.iter().map(|&x| u64::from(x)).sum();
                if da != db {
                    return da.cmp(&db);
                }
                for &v in self.ranking.iter().rev() {
                    match a[v].cmp(&b[v]) {
                        Ordering::Equal => continue,
                        o => return o.reverse(),
                    }
                }
                Ordering::Equal
            }
        }
    }
}

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

/// Largest admissible exponent entry.
pub const EXPONENT_CAP: u32 = 1 << 16;
/// Largest admissible number of variables.
pub const AMBIENT_CAP: usize = 16;

/// Exponent vector `α ∈ ℕⁿ` of a monomial `z^α`.
///
/// Ordered graded-lexicographically: total degree first, then the
/// first differing entry (`z1 > z2 > … > zn`).
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct Exponent(Vec<u32>);

impl Exponent {
    pub fn new(entries: Vec<u32>) -> Self {
        Exponent(entries)
    }

    pub fn zero(n: usize) -> Self {
        Exponent(vec![0; n])
    }

    /// `m·e_i`.
    pub fn unit(n: usize, i: usize, m: u32) -> Self {
        let mut e = vec![0; n];
        e[i] = m;
        Exponent(e)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&a| u64::from(a)).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&a| a == 0)
    }

    pub fn add(&self, o: &Exponent) -> Exponent {
        Exponent(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    /// `self - o`, assuming `o` divides `self`.
    pub fn sub(&self, o: &Exponent) -> Exponent {
        Exponent(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }

    pub fn lcm(&self, o: &Exponent) -> Exponent {
        Exponent(self.0.iter().zip(&o.0).map(|(a, b)| *a.max(b)).collect())
    }

    /// Coordinatewise `self ≤ o`, i.e. `z^self` divides `z^o`.
    pub fn divides(&self, o: &Exponent) -> bool {
        self.0.iter().zip(&o.0).all(|(a, b)| a <= b)
    }

    /// Disjoint supports.
    pub fn coprime(&self, o: &Exponent) -> bool {
        self.0.iter().zip(&o.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// `⟨w, α⟩`.
    pub fn dot(&self, w: &WeightVector) -> u128 {
        self.0
            .iter()
            .zip(w.entries())
            .map(|(&a, &b)| u128::from(a) * u128::from(b))
            .sum()
    }

    /// Append `k` zero entries (for auxiliary variables).
    pub fn extended(&self, k: usize) -> Exponent {
        let mut e = self.0.clone();
        e.extend(std::iter::repeat_n(0, k));
        Exponent(e)
    }

    pub(crate) fn entries_mut(&mut self) -> &mut [u32] {
        &mut self.0
    }
}

impl Ord for Exponent {
    fn cmp(&self, o: &Self) -> Ordering {
        self.degree().cmp(&o.degree()).then_with(|| self.0.cmp(&o.0))
    }
}

impl PartialOrd for Exponent {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl fmt::Debug for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str(")")
    }
}

/// Weight vector `w ∈ ℕⁿ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct WeightVector(Vec<u64>);

impl WeightVector {
    pub fn new(entries: Vec<u64>) -> Self {
        WeightVector(entries)
    }

    pub fn zero(n: usize) -> Self {
        WeightVector(vec![0; n])
    }

    pub fn ones(n: usize) -> Self {
        WeightVector(vec![1; n])
    }

    pub fn entries(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Every entry is strictly positive.
    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&w| w > 0)
    }

    /// `I(w) = {i : w_i = 0}`.
    pub fn zero_set(&self) -> SubsetI {
        SubsetI::new(self.0.iter().enumerate().filter(|(_, &w)| w == 0).map(|(i, _)| i))
    }
}

/// A subset `I ⊆ {1,…,n}` of coordinate indices, stored 0-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct SubsetI(BTreeSet<usize>);

impl SubsetI {
    pub fn new(members: impl IntoIterator<Item = usize>) -> Self {
        SubsetI(members.into_iter().collect())
    }

    pub fn full(n: usize) -> Self {
        SubsetI((0..n).collect())
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.contains(&i)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn intersection(&self, o: &SubsetI) -> SubsetI {
        SubsetI(self.0.intersection(&o.0).copied().collect())
    }

    pub fn difference(&self, o: &SubsetI) -> SubsetI {
        SubsetI(self.0.difference(&o.0).copied().collect())
    }
}

impl fmt::Display for SubsetI {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, i) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", i + 1)?;
        }
        f.write_str("}")
    }
}

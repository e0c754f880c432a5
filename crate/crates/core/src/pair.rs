//! Unordered strand pairs `{i, j}` and integer vectors indexed by them.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// An unordered pair `{i, j}` of strands, stored with `i < j` (1-based).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pair {
    i: usize,
    j: usize,
}

impl Pair {
    /// Normalizes the order; `None` when `a == b`.
    pub fn new(a: usize, b: usize) -> Option<Pair> {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Some(Pair { i: a, j: b }),
            std::cmp::Ordering::Greater => Some(Pair { i: b, j: a }),
            std::cmp::Ordering::Equal => None,
        }
    }

    pub fn i(self) -> usize {
        self.i
    }

    pub fn j(self) -> usize {
        self.j
    }

    /// `{π(i), π(j)}`.
    pub fn image(self, perm: &Permutation) -> Pair {
        Pair::new(perm.apply(self.i), perm.apply(self.j)).expect("permutations are injective")
    }

    /// All pairs `1 ≤ i < j ≤ n` in lexicographic order.
    pub fn all(n: usize) -> impl Iterator<Item = Pair> {
        (1..=n).flat_map(move |i| (i + 1..=n).map(move |j| Pair { i, j }))
    }

    /// Position of the pair in the lexicographic enumeration for `n` strands.
    #[inline]
    pub fn index(self, n: usize) -> usize {
        // pairs starting with 1..i-1 come first
        let before = (self.i - 1) * (2 * n - self.i) / 2;
        before + (self.j - self.i - 1)
    }

    pub fn from_index(n: usize, mut idx: usize) -> Pair {
        for i in 1..n {
            let row = n - i;
            if idx < row {
                return Pair { i, j: i + 1 + idx };
            }
            idx -= row;
        }
        panic!("pair index out of range for n = {n}");
    }
}

impl fmt::Display for Pair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.i, self.j)
    }
}

impl fmt::Debug for Pair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.i, self.j)
    }
}

pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Integer values on the `n(n−1)/2` unordered pairs, in lexicographic
/// pair order. Crossing counts, `A_{i,j}` exponents and the unknowns of
/// the translation systems all live here.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PairVector {
    n: usize,
    entries: Vec<i64>,
}

impl PairVector {
    pub fn zeros(n: usize) -> Self {
        PairVector {
            n,
            entries: vec![0; pair_count(n)],
        }
    }

    pub fn from_entries(n: usize, entries: Vec<i64>) -> Result<Self> {
        if entries.len() != pair_count(n) {
            return Err(Error::Domain(format!(
                "expected {} pair entries for n = {n}, got {}",
                pair_count(n),
                entries.len()
            )));
        }
        Ok(PairVector { n, entries })
    }

    /// Unit vector at `{i, j}`.
    pub fn unit(n: usize, pair: Pair) -> Self {
        let mut v = PairVector::zeros(n);
        v.set(pair, 1);
        v
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    #[inline]
    pub fn get(&self, pair: Pair) -> i64 {
        self.entries[pair.index(self.n)]
    }

    /// Lookup with either argument order, `m_{j,i} = m_{i,j}`.
    pub fn at(&self, a: usize, b: usize) -> i64 {
        self.get(Pair::new(a, b).expect("distinct strands"))
    }

    #[inline]
    pub fn set(&mut self, pair: Pair, value: i64) {
        let idx = pair.index(self.n);
        self.entries[idx] = value;
    }

    #[inline]
    pub fn add_at(&mut self, pair: Pair, delta: i64) {
        let idx = pair.index(self.n);
        self.entries[idx] += delta;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&x| x == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (Pair, i64)> + '_ {
        Pair::all(self.n).zip(self.entries.iter().copied())
    }

    /// Non-zero entries in lexicographic pair order.
    pub fn nonzero(&self) -> impl Iterator<Item = (Pair, i64)> + '_ {
        self.iter().filter(|&(_, v)| v != 0)
    }

    pub fn map(&self, f: impl Fn(i64) -> i64) -> Self {
        PairVector {
            n: self.n,
            entries: self.entries.iter().map(|&x| f(x)).collect(),
        }
    }

    /// The vector `p ↦ self[{π(i), π(j)}]`.
    pub fn pull_back(&self, perm: &Permutation) -> Self {
        let mut out = PairVector::zeros(self.n);
        for (k, p) in Pair::all(self.n).enumerate() {
            out.entries[k] = self.get(p.image(perm));
        }
        out
    }
}

impl fmt::Debug for PairVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.nonzero()).finish()
    }
}

impl Add for &PairVector {
    type Output = PairVector;

    fn add(self, rhs: &PairVector) -> PairVector {
        assert_eq!(self.n, rhs.n);
        PairVector {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &PairVector {
    type Output = PairVector;

    fn sub(self, rhs: &PairVector) -> PairVector {
        self + &(-rhs)
    }
}

impl Neg for &PairVector {
    type Output = PairVector;

    fn neg(self) -> PairVector {
        self.map(|x| -x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn index_matches_enumeration() {
        for n in 2..9 {
            for (k, p) in Pair::all(n).enumerate() {
                assert_eq!(p.index(n), k);
                assert_eq!(Pair::from_index(n, k), p);
            }
            assert_eq!(Pair::all(n).count(), pair_count(n));
        }
    }

    #[test]
    fn swapped_lookup() {
        let mut v = PairVector::zeros(4);
        v.set(Pair::new(3, 1).unwrap(), 7);
        assert_eq!(v.at(1, 3), 7);
        assert_eq!(v.at(3, 1), 7);
        assert!(Pair::new(2, 2).is_none());
    }

    #[test]
    fn pull_back_relabels() {
        let theta = Permutation::from_cycles(3, &[vec![1, 2, 3]]).unwrap();
        let v = PairVector::from_entries(3, vec![1, 2, 3]).unwrap();
        // {1,2}↦{2,3}, {1,3}↦{1,2}, {2,3}↦{1,3}
        assert_eq!(v.pull_back(&theta).entries(), &[3, 1, 2]);
    }

    #[test]
    fn arithmetic() {
        let a = PairVector::from_entries(3, vec![1, -2, 3]).unwrap();
        let b = PairVector::from_entries(3, vec![4, 5, -6]).unwrap();
        assert_eq!((&a + &b).entries(), &[5, 3, -3]);
        assert_eq!((&a - &a), PairVector::zeros(3));
        assert!(PairVector::from_entries(3, vec![1]).is_err());
    }
}

//! Permutations of `{1, …, n}` with left-to-right composition.
//!
//! The product `a.compose(&b)` applies `a` first and then `b`, so
//! `a.compose(&b).apply(i) == b.apply(a.apply(i))`. This is the
//! convention under which the permutation of a braid word is the product
//! of its letters' transpositions read left to right.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    // images[k] = π(k + 1), stored 1-based
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n).collect(),
        }
    }

    /// Builds a permutation from its image list `[π(1), …, π(n)]`.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x == 0 || x > n || seen[x - 1] {
                return Err(Error::Domain(format!(
                    "{images:?} is not a permutation of 1..={n}"
                )));
            }
            seen[x - 1] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation from disjoint cycles, e.g. `[[1, 2, 3]]` maps
    /// 1→2→3→1.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (1..=n).collect();
        let mut touched = vec![false; n];
        for cycle in cycles {
            for (k, &x) in cycle.iter().enumerate() {
                if x == 0 || x > n || touched[x - 1] {
                    return Err(Error::Domain(format!(
                        "cycles {cycles:?} are not disjoint cycles on 1..={n}"
                    )));
                }
                touched[x - 1] = true;
                images[x - 1] = cycle[(k + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    /// The adjacent transposition `(k, k+1)`, the image of `σ_k`.
    pub fn adjacent(n: usize, k: usize) -> Self {
        assert!(
            k >= 1 && k < n,
            "adjacent transposition ({k},{}) outside S_{n}",
            k + 1
        );
        let mut images: Vec<usize> = (1..=n).collect();
        images.swap(k - 1, k);
        Permutation { images }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &x)| x == k + 1)
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.n()];
        for (k, &x) in self.images.iter().enumerate() {
            images[x - 1] = k + 1;
        }
        Permutation { images }
    }

    /// Left-to-right product: `self` first, then `other`.
    pub fn compose(&self, other: &Permutation) -> Self {
        assert_eq!(self.n(), other.n());
        Permutation {
            images: self.images.iter().map(|&x| other.apply(x)).collect(),
        }
    }

    /// `self · other · self⁻¹` in the left-to-right convention.
    pub fn conjugate(&self, other: &Permutation) -> Self {
        self.compose(other).compose(&self.inverse())
    }

    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = Permutation::identity(self.n());
        for _ in 0..k.unsigned_abs() {
            out = out.compose(&base);
        }
        out
    }

    pub fn commutes_with(&self, other: &Permutation) -> bool {
        self.compose(other) == other.compose(self)
    }

    /// Disjoint cycles including fixed points, each written from its least
    /// element, listed by least element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 1..=n {
            if seen[start - 1] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start - 1] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x - 1] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            out.push(cycle);
        }
        out
    }

    /// Cycle lengths (fixed points included) in non-increasing order.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut lengths: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        lengths
    }

    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .map(|c| c.len() as u64)
            .fold(1, |acc, l| acc / gcd(acc, l) * l)
    }

    /// Cycles ordered by `(length, least element)`, the alignment order
    /// used by [`Permutation::conjugator_to`].
    fn aligned_cycles(&self) -> Vec<Vec<usize>> {
        let mut cycles = self.cycles();
        cycles.sort_by_key(|c| (c.len(), c[0]));
        cycles
    }

    /// Returns `ρ` with `ρ · self · ρ⁻¹ = target`, or `None` when the cycle
    /// types differ. Cycles of equal length are paired in
    /// `(length, least element)` order and matched point by point from
    /// their least elements.
    pub fn conjugator_to(&self, target: &Permutation) -> Option<Permutation> {
        if self.n() != target.n() || self.cycle_type() != target.cycle_type() {
            return None;
        }
        let mut images = vec![0; self.n()];
        for (mine, theirs) in self.aligned_cycles().iter().zip(target.aligned_cycles()) {
            debug_assert_eq!(mine.len(), theirs.len());
            for (&d, &c) in mine.iter().zip(theirs.iter()) {
                images[c - 1] = d;
            }
        }
        let rho = Permutation { images };
        debug_assert_eq!(&rho.conjugate(self), target);
        Some(rho)
    }

    /// The canonical permutation of a cycle type: cycles by non-increasing
    /// length on consecutive blocks starting at 1, each block `[s, e]`
    /// mapping `s ↦ e` and `i ↦ i − 1` otherwise. Its section is the
    /// positive word `σ_s σ_{s+1} ⋯ σ_{e−1}` on every block.
    pub fn canonical_of_type(n: usize, cycle_type: &[usize]) -> Result<Self> {
        let mut lengths = cycle_type.to_vec();
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        if lengths.iter().sum::<usize>() != n || lengths.contains(&0) {
            return Err(Error::Domain(format!(
                "{cycle_type:?} is not a cycle type of S_{n}"
            )));
        }
        let mut images = vec![0; n];
        let mut start = 1;
        for len in lengths {
            let end = start + len - 1;
            images[start - 1] = end;
            for i in start + 1..=end {
                images[i - 1] = i - 1;
            }
            start = end + 1;
        }
        Ok(Permutation { images })
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;

    fn try_from(images: Vec<usize>) -> Result<Self> {
        Permutation::from_images(images)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.images
    }
}

/// Cycle notation without fixed points; the identity prints as `()`.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for cycle in self.cycles().into_iter().filter(|c| c.len() > 1) {
            any = true;
            let body: Vec<String> = cycle.iter().map(ToString::to_string).collect();
            write!(f, "({})", body.join(","))?;
        }
        if !any {
            write!(f, "()")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{:?}", self.images)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn left_to_right_composition() {
        // s1 then s2 sends 1→3, 2→1, 3→2
        let p = Permutation::adjacent(3, 1).compose(&Permutation::adjacent(3, 2));
        assert_eq!(p.images(), &[3, 1, 2]);
        assert_eq!(p.to_string(), "(1,3,2)");
    }

    #[test]
    fn cycles_and_type() {
        let p = Permutation::from_cycles(6, &[vec![1, 2, 3], vec![5, 6]]).unwrap();
        assert_eq!(p.cycles(), vec![vec![1, 2, 3], vec![4], vec![5, 6]]);
        assert_eq!(p.cycle_type(), vec![3, 2, 1]);
        assert_eq!(p.order(), 6);
        assert_eq!(p.pow(6), Permutation::identity(6));
        assert_eq!(p.pow(-1), p.inverse());
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::from_images(vec![1, 1, 3]).is_err());
        assert!(Permutation::from_images(vec![0, 1]).is_err());
        assert!(Permutation::from_cycles(3, &[vec![1, 2], vec![2, 3]]).is_err());
    }

    #[test]
    fn conjugator_aligns_cycles() {
        let u = Permutation::from_cycles(5, &[vec![2, 5, 3], vec![1, 4]]).unwrap();
        let v = Permutation::from_cycles(5, &[vec![1, 2], vec![3, 4, 5]]).unwrap();
        let rho = u.conjugator_to(&v).unwrap();
        assert_eq!(rho.conjugate(&u), v);
        let w = Permutation::from_cycles(5, &[vec![1, 2, 3, 4]]).unwrap();
        assert!(u.conjugator_to(&w).is_none());
    }

    #[test]
    fn canonical_layout() {
        let c = Permutation::canonical_of_type(6, &[2, 3, 1]).unwrap();
        assert_eq!(c.images(), &[3, 1, 2, 5, 4, 6]);
        assert_eq!(c.cycle_type(), vec![3, 2, 1]);
        assert!(Permutation::canonical_of_type(4, &[2, 1]).is_err());
    }

    #[test]
    fn serde_uses_image_list() {
        let p = Permutation::from_images(vec![2, 3, 1]).unwrap();
        assert_eq!(serde_json::to_string(&p).unwrap(), "[2,3,1]");
        let back: Permutation = serde_json::from_str("[2,3,1]").unwrap();
        assert_eq!(back, p);
        assert!(serde_json::from_str::<Permutation>("[2,2,1]").is_err());
    }
}

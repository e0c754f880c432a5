//! Enumeration of the centralizer `C_{S_n}(θ)`.
//!
//! An element commuting with `θ` rotates each cycle of `θ` and permutes
//! cycles of equal length among themselves, so the centralizer has
//! `∏_ℓ ℓ^{m_ℓ} · m_ℓ!` elements, `m_ℓ` being the number of `ℓ`-cycles
//! (fixed points count as 1-cycles). Elements are addressed by a
//! mixed-radix index: the low digits are the rotation of each cycle, the
//! high digits the arrangement of equal-length cycles. Index 0 is the
//! identity.

use crate::perm::Permutation;

#[derive(Clone, Debug)]
pub struct Centralizer {
    n: usize,
    // cycles of θ grouped by length, each class sorted by least element
    classes: Vec<Vec<Vec<usize>>>,
    len: Option<u64>,
}

impl Centralizer {
    pub fn new(theta: &Permutation) -> Self {
        let mut cycles = theta.cycles();
        cycles.sort_by_key(|c| (c.len(), c[0]));
        let mut classes: Vec<Vec<Vec<usize>>> = Vec::new();
        for cycle in cycles {
            match classes.last_mut() {
                Some(class) if class[0].len() == cycle.len() => class.push(cycle),
                _ => classes.push(vec![cycle]),
            }
        }
        let len = classes.iter().try_fold(1u64, |acc, class| {
            let l = class[0].len() as u64;
            let m = class.len() as u64;
            let rotations = l.checked_pow(m as u32)?;
            let arrangements = (1..=m).try_fold(1u64, |f, k| f.checked_mul(k))?;
            acc.checked_mul(rotations)?.checked_mul(arrangements)
        });
        Centralizer {
            n: theta.n(),
            classes,
            len,
        }
    }

    /// Number of elements, `None` if it overflows `u64`.
    pub fn size(&self) -> Option<u64> {
        self.len
    }

    /// Number of elements; panics when the size overflows `u64`.
    pub fn len(&self) -> u64 {
        self.len.expect("centralizer size overflows u64")
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// The element with mixed-radix index `idx < len()`.
    pub fn get(&self, mut idx: u64) -> Permutation {
        assert!(idx < self.len(), "centralizer index {idx} out of range");
        let mut rotations = Vec::new();
        for class in &self.classes {
            let l = class[0].len() as u64;
            for _ in class {
                rotations.push((idx % l) as usize);
                idx /= l;
            }
        }
        let mut images = vec![0; self.n];
        let mut r = rotations.into_iter();
        let mut arrangements = Vec::with_capacity(self.classes.len());
        for class in &self.classes {
            let m = class.len() as u64;
            let fact: u64 = (1..=m).product();
            arrangements.push(decode_lehmer(class.len(), idx % fact));
            idx /= fact;
        }
        for (class, arrangement) in self.classes.iter().zip(arrangements) {
            let l = class[0].len();
            for (k, cycle) in class.iter().enumerate() {
                let shift = r.next().expect("one rotation per cycle");
                let target = &class[arrangement[k]];
                for (j, &x) in cycle.iter().enumerate() {
                    images[x - 1] = target[(j + shift) % l];
                }
            }
        }
        Permutation::from_images(images).expect("centralizer elements are permutations")
    }

    pub fn iter(&self) -> impl Iterator<Item = Permutation> + '_ {
        (0..self.len()).map(move |k| self.get(k))
    }
}

/// The `idx`-th permutation of `0..m` in factorial-number order; index 0
/// is the identity.
fn decode_lehmer(m: usize, mut idx: u64) -> Vec<usize> {
    let mut pool: Vec<usize> = (0..m).collect();
    let mut out = Vec::with_capacity(m);
    for k in 0..m {
        let radix = (m - k) as u64;
        out.push(pool.remove((idx % radix) as usize));
        idx /= radix;
    }
    out
}

/// `|C_{S_n}(θ)|`, saturating at `u64::MAX`.
pub fn centralizer_size(theta: &Permutation) -> u64 {
    Centralizer::new(theta).size().unwrap_or(u64::MAX)
}

pub fn centralizer(theta: &Permutation) -> Centralizer {
    Centralizer::new(theta)
}

#[cfg(test)]
mod tests {
    use std::collections::HashSet;

    use super::*;

    fn all_perms(n: usize) -> Vec<Permutation> {
        let c = Centralizer::new(&Permutation::identity(n));
        c.iter().collect()
    }

    fn brute_force(theta: &Permutation) -> HashSet<Permutation> {
        all_perms(theta.n())
            .into_iter()
            .filter(|p| p.commutes_with(theta))
            .collect()
    }

    #[test]
    fn identity_gives_symmetric_group() {
        let perms = all_perms(4);
        assert_eq!(perms.len(), 24);
        assert_eq!(perms.iter().collect::<HashSet<_>>().len(), 24);
        assert!(perms[0].is_identity());
    }

    #[test]
    fn full_cycle_gives_its_powers() {
        let theta = Permutation::from_cycles(5, &[vec![1, 2, 3, 4, 5]]).unwrap();
        let c = Centralizer::new(&theta);
        assert_eq!(c.len(), 5);
        for t in 0..5 {
            assert_eq!(c.get(t), theta.pow(t as i64));
        }
    }

    #[test]
    fn three_cycle_in_s6_matches_brute_force() {
        let theta = Permutation::from_cycles(6, &[vec![1, 2, 3]]).unwrap();
        let c = Centralizer::new(&theta);
        assert_eq!(c.len(), 18);
        let listed: HashSet<_> = c.iter().collect();
        assert_eq!(listed.len(), 18);
        assert_eq!(listed, brute_force(&theta));
    }

    #[test]
    fn all_cycle_types_of_s6() {
        // one representative per cycle type of S_6
        let types: &[&[usize]] = &[
            &[6],
            &[5, 1],
            &[4, 2],
            &[4, 1, 1],
            &[3, 3],
            &[3, 2, 1],
            &[3, 1, 1, 1],
            &[2, 2, 2],
            &[2, 2, 1, 1],
            &[2, 1, 1, 1, 1],
            &[1, 1, 1, 1, 1, 1],
        ];
        for ty in types {
            let theta = Permutation::canonical_of_type(6, ty).unwrap();
            let c = Centralizer::new(&theta);
            let listed: Vec<_> = c.iter().collect();
            let set: HashSet<_> = listed.iter().cloned().collect();
            assert_eq!(set.len(), listed.len(), "duplicates for {ty:?}");
            assert_eq!(set, brute_force(&theta), "wrong centralizer for {ty:?}");
        }
    }

    #[test]
    fn size_overflow_is_reported() {
        assert_eq!(
            centralizer_size(&Permutation::identity(20)),
            2_432_902_008_176_640_000
        );
        assert_eq!(centralizer_size(&Permutation::identity(21)), u64::MAX);
    }
}

//! Exact arithmetic in `B_n/[P_n,P_n]`.
//!
//! A coset is stored as its permutation together with the signed crossing
//! count of every pair of strands, the strands being labelled by their
//! starting positions. This pair is a complete invariant: the crossing
//! counts of a pure braid are twice its coordinates in the basis
//! `{A_{i,j}}` of `P_n/[P_n,P_n]`, and the extension by `S_n` acts by
//! relabelling strands.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::pair::{Pair, PairVector};
use crate::perm::Permutation;
use crate::word::{BraidWord, Generator, Letter};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Element {
    perm: Permutation,
    cross: PairVector,
}

impl Element {
    pub fn identity(n: usize) -> Self {
        Element {
            perm: Permutation::identity(n),
            cross: PairVector::zeros(n),
        }
    }

    /// Assembles an element, checking that crossing parities agree with the
    /// permutation.
    pub fn from_parts(perm: Permutation, cross: PairVector) -> Result<Self> {
        if perm.n() != cross.n() {
            return Err(Error::SizeMismatch {
                left: perm.n(),
                right: cross.n(),
            });
        }
        let e = Element { perm, cross };
        if !e.parity_holds() {
            return Err(Error::Domain(
                "crossing parities disagree with the permutation".into(),
            ));
        }
        Ok(e)
    }

    pub fn n(&self) -> usize {
        self.perm.n()
    }

    pub fn perm(&self) -> &Permutation {
        &self.perm
    }

    pub fn cross(&self) -> &PairVector {
        &self.cross
    }

    pub fn is_identity(&self) -> bool {
        self.perm.is_identity() && self.cross.is_zero()
    }

    pub fn is_pure(&self) -> bool {
        self.perm.is_identity()
    }

    /// A pair crosses an odd number of times exactly when its strands end
    /// in swapped order.
    pub fn parity_holds(&self) -> bool {
        self.cross.iter().all(|(p, c)| {
            let swapped = (self.perm.apply(p.i()) > self.perm.apply(p.j())) as i64;
            c.rem_euclid(2) == swapped
        })
    }

    /// Evaluates a word by following its strands.
    pub fn from_word(w: &BraidWord) -> Element {
        let n = w.n();
        // labels[k] = starting position of the strand now at position k + 1
        let mut labels: Vec<usize> = (1..=n).collect();
        let mut cross = PairVector::zeros(n);
        for letter in w.expand_pure().letters() {
            let Generator::Artin(k) = letter.generator else {
                unreachable!("expand_pure leaves only Artin letters");
            };
            let pair = Pair::new(labels[k - 1], labels[k]).expect("labels are distinct");
            cross.add_at(pair, letter.exponent);
            if letter.exponent % 2 != 0 {
                labels.swap(k - 1, k);
            }
        }
        let mut images = vec![0; n];
        for (pos, &label) in labels.iter().enumerate() {
            images[label - 1] = pos + 1;
        }
        Element {
            perm: Permutation::from_images(images).expect("labels form a permutation"),
            cross,
        }
    }

    /// `self · other`: strand `i` of `other` is the strand that `self`
    /// carried to position `i`.
    pub fn multiply(&self, other: &Element) -> Result<Element> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch {
                left: self.n(),
                right: other.n(),
            });
        }
        Ok(self.mul(other))
    }

    pub(crate) fn mul(&self, other: &Element) -> Element {
        Element {
            perm: self.perm.compose(&other.perm),
            cross: &self.cross + &other.cross.pull_back(&self.perm),
        }
    }

    pub fn inverse(&self) -> Element {
        let inv = self.perm.inverse();
        Element {
            cross: -&self.cross.pull_back(&inv),
            perm: inv,
        }
    }

    pub fn power(&self, k: i64) -> Element {
        let mut base = if k < 0 { self.inverse() } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = Element::identity(self.n());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// `self · u · self⁻¹`.
    pub fn conjugate(&self, u: &Element) -> Result<Element> {
        Ok(self.multiply(u)?.mul(&self.inverse()))
    }

    /// Coordinates in the basis `{A_{i,j}}` of a pure element.
    pub fn pure_exponents(&self) -> Result<PairVector> {
        if !self.is_pure() {
            return Err(Error::NotPure {
                perm: self.perm.to_string(),
            });
        }
        debug_assert!(self.cross.entries().iter().all(|c| c % 2 == 0));
        Ok(self.cross.map(|c| c / 2))
    }

    /// `∏ A_{i,j}^{m_{i,j}}`.
    pub fn from_pure(m: &PairVector) -> Element {
        Element {
            perm: Permutation::identity(m.n()),
            cross: m.map(|x| 2 * x),
        }
    }

    /// `A_{i,j}`.
    pub fn pure_generator(n: usize, pair: Pair) -> Element {
        Element::from_pure(&PairVector::unit(n, pair))
    }

    /// The section evaluated: see [`section_word`].
    pub fn section(perm: &Permutation) -> Element {
        Element::from_word(&section_word(perm))
    }

    /// Writes the element as `section(π) · ∏ A_{i,j}^{m_{i,j}}`.
    pub fn to_word(&self) -> BraidWord {
        let section = section_word(&self.perm);
        let base = Element::from_word(&section);
        let m = base
            .inverse()
            .mul(self)
            .pure_exponents()
            .expect("same permutation as its section");
        let mut letters = section.letters().to_vec();
        letters.extend(m.nonzero().map(|(p, e)| Letter::pure(p.i(), p.j(), e)));
        BraidWord::new(self.n(), letters).expect("indices come from a valid element")
    }
}

/// A positive word with permutation `perm`, obtained by insertion-sorting
/// the final arrangement of strand labels and reading the swaps backwards.
pub fn section_word(perm: &Permutation) -> BraidWord {
    let n = perm.n();
    // arrangement[q] = label of the strand ending at position q + 1
    let mut arrangement = vec![0; n];
    for i in 1..=n {
        arrangement[perm.apply(i) - 1] = i;
    }
    let mut swaps = Vec::new();
    for k in 1..n {
        let mut q = k;
        while q > 0 && arrangement[q - 1] > arrangement[q] {
            arrangement.swap(q - 1, q);
            swaps.push(q);
            q -= 1;
        }
    }
    let letters = swaps
        .into_iter()
        .rev()
        .map(|k| Letter::artin(k, 1))
        .collect();
    BraidWord::new(n, letters).expect("adjacent swaps stay in range")
}

fn check_delta_domain(r: usize, p: usize, n: usize) -> Result<()> {
    if p < 3 || n < 3 || p.is_multiple_of(2) || r + p > n {
        return Err(Error::Domain(format!(
            "need odd p >= 3, n >= 3 and r + p <= n (got r = {r}, p = {p}, n = {n})"
        )));
    }
    Ok(())
}

/// `σ_{r+p−1}⋯σ_{r+(p+1)/2} · σ_{r+(p−1)/2}^{−1}⋯σ_{r+1}^{−1}`, an element
/// of order `p` projecting to the cycle `(r+1, …, r+p)`.
pub fn delta_word(r: usize, p: usize, n: usize) -> Result<BraidWord> {
    check_delta_domain(r, p, n)?;
    let half = (p - 1) / 2;
    let mut letters: Vec<Letter> = (r + half + 1..r + p)
        .rev()
        .map(|k| Letter::artin(k, 1))
        .collect();
    letters.extend((r + 1..=r + half).rev().map(|k| Letter::artin(k, -1)));
    BraidWord::new(n, letters)
}

/// `σ_{r+1} ⋯ σ_{r+p−1}`.
pub fn alpha_word(r: usize, p: usize, n: usize) -> Result<BraidWord> {
    check_delta_domain(r, p, n)?;
    BraidWord::new(n, (r + 1..r + p).map(|k| Letter::artin(k, 1)).collect())
}

pub fn delta(r: usize, p: usize, n: usize) -> Result<Element> {
    Ok(Element::from_word(&delta_word(r, p, n)?))
}

pub fn alpha(r: usize, p: usize, n: usize) -> Result<Element> {
    Ok(Element::from_word(&alpha_word(r, p, n)?))
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w = self.to_word();
        if w.is_empty() {
            f.write_str("1")
        } else {
            write!(f, "{w}")
        }
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Element")
            .field("perm", &self.perm)
            .field("cross", &self.cross)
            .finish()
    }
}

/// JSON shape: `{"n", "perm": [π(1), …], "cross": [[i, j, c], …]}` with the
/// non-zero crossing counts in lexicographic pair order.
#[derive(Serialize, Deserialize)]
struct ElementJson {
    n: usize,
    perm: Vec<usize>,
    cross: Vec<[i64; 3]>,
}

impl Serialize for Element {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ElementJson {
            n: self.n(),
            perm: self.perm.images().to_vec(),
            cross: self
                .cross
                .nonzero()
                .map(|(p, c)| [p.i() as i64, p.j() as i64, c])
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Element {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = ElementJson::deserialize(d)?;
        if raw.perm.len() != raw.n {
            return Err(D::Error::custom("perm length differs from n"));
        }
        let perm = Permutation::from_images(raw.perm).map_err(D::Error::custom)?;
        let mut cross = PairVector::zeros(raw.n);
        for [i, j, c] in raw.cross {
            let pair = usize::try_from(i)
                .ok()
                .zip(usize::try_from(j).ok())
                .filter(|&(i, j)| i >= 1 && i < j && j <= raw.n)
                .and_then(|(i, j)| Pair::new(i, j))
                .ok_or_else(|| D::Error::custom(format!("bad pair [{i},{j}]")))?;
            cross.set(pair, c);
        }
        Element::from_parts(perm, cross).map_err(D::Error::custom)
    }
}

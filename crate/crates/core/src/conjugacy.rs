//! Conjugacy in `B_n/[P_n,P_n]`.
//!
//! Two elements can only be conjugate if their permutations have the same
//! cycle type. After moving both into one fiber `σ̄⁻¹(π)` with a fixed
//! base `β`, an element `β·∏A^{a}` is conjugate by pure elements exactly
//! to those with the same orbit sums of `a` under `θ = π⁻¹`. Any other
//! conjugator factors as a pure element times a lift of some `C` in
//! `C_{S_n}(θ)`, so scanning the centralizer decides the question.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::centralizer::Centralizer;
use crate::element::Element;
use crate::error::{Error, Result};
use crate::orbit::{
    decompose, on_transversal, orbit_sum, solve_translation_system, OrbitDecomposition,
};
use crate::pair::{Pair, PairVector};
use crate::perm::Permutation;

/// `u = base · ∏ A_{i,j}^{a_{i,j}}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberCoordinates {
    pub base: Element,
    pub a: PairVector,
}

pub fn fiber_coordinates(u: &Element, base: &Element) -> Result<FiberCoordinates> {
    if u.n() != base.n() {
        return Err(Error::SizeMismatch {
            left: u.n(),
            right: base.n(),
        });
    }
    if u.perm() != base.perm() {
        return Err(Error::FiberMismatch {
            element: u.perm().to_string(),
            base: base.perm().to_string(),
        });
    }
    let a = base.inverse().mul(u).pure_exponents()?;
    Ok(FiberCoordinates {
        base: base.clone(),
        a,
    })
}

/// The reduced form `base · ∏_{T_θ} A_{r,s}^{S_{r,s}}` of an element,
/// together with a pure `witness` conjugating the element onto it.
#[derive(Clone, Debug)]
pub struct NormalForm {
    pub nf: Element,
    pub witness: Element,
    pub transversal: Vec<Pair>,
    /// Orbit sums, in transversal order.
    pub sums: Vec<i64>,
}

pub fn theorem1_normal_form(u: &Element, base: &Element) -> Result<NormalForm> {
    let coords = fiber_coordinates(u, base)?;
    let theta = base.perm().inverse();
    let dec = decompose(&theta);
    let sums = orbit_sum(&coords.a, &dec);
    let reduced = on_transversal(&sums, &dec);
    let nf = base.mul(&Element::from_pure(&reduced));
    // X·base = base·X' with X'[p] = X[θ(p)], so X u X⁻¹ = nf reads
    // x[θ(p)] − x[p] = reduced[p] − a[p]
    let x = solve_translation_system(&theta, &(&reduced - &coords.a))
        .ok_or_else(|| Error::Internal("orbit sums do not balance".into()))?;
    let witness = Element::from_pure(&x);
    if witness.conjugate(u)? != nf {
        return Err(Error::Internal(
            "normal form witness failed to verify".into(),
        ));
    }
    Ok(NormalForm {
        nf,
        witness,
        transversal: dec.transversal(),
        sums,
    })
}

/// The exponent vector `c` with `C̃ β C̃⁻¹ = β · ∏ A^{c}` for the section
/// `C̃` of `C`.
pub fn centralizer_correction(base: &Element, c: &Permutation) -> Result<PairVector> {
    let lift = Element::section(c);
    Ok(fiber_coordinates(&lift.conjugate(base)?, base)?.a)
}

/// Decides whether `C̃` together with some pure `X` conjugates
/// `β·∏_{T_θ}A^{z}` onto `β·∏_{T_θ}A^{b}`: for every representative
/// `{t,q}`, the orbit sum of the correction `c` plus the `z`-exponent of
/// the orbit that `C` carries `{t,q}` into must equal `b_{t,q}`.
pub fn theorem2_condition_check(
    base: &Element,
    c: &Permutation,
    z: &PairVector,
    b: &PairVector,
) -> Result<bool> {
    let theta = base.perm().inverse();
    if c.n() != theta.n() || z.n() != theta.n() || b.n() != theta.n() {
        return Err(Error::SizeMismatch {
            left: theta.n(),
            right: c.n().max(z.n()).max(b.n()),
        });
    }
    if !c.commutes_with(&theta) {
        return Err(Error::NotInCentralizer {
            perm: c.to_string(),
            theta: theta.to_string(),
        });
    }
    let dec = decompose(&theta);
    for v in [z, b] {
        if v.nonzero().any(|(p, _)| dec.representative(p) != p) {
            return Err(Error::Domain(
                "exponent vectors must be supported on the transversal".into(),
            ));
        }
    }
    let correction = orbit_sum(&centralizer_correction(base, c)?, &dec);
    let c_inv = c.inverse();
    Ok(dec.transversal().iter().enumerate().all(|(k, &rep)| {
        let z_read = if dec.same_orbit(rep.image(&c_inv), rep) {
            // C preserves the orbit
            z.get(rep)
        } else {
            z.get(dec.representative(rep.image(c)))
        };
        correction[k] + z_read == b.get(rep)
    }))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Conjugate,
    NotConjugate,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Refutation {
    CycleTypeMismatch,
    /// Every lift of the centralizer was tried; carries how many.
    CentralizerExhausted(u64),
}

#[derive(Clone, Debug)]
pub struct ConjugacyCertificate {
    pub verdict: Verdict,
    /// Present iff conjugate: `witness · u · witness⁻¹ = v`.
    pub witness: Option<Element>,
    pub refutation: Option<Refutation>,
    /// Centralizer elements examined before the verdict.
    pub tested: u64,
}

impl ConjugacyCertificate {
    pub fn is_conjugate(&self) -> bool {
        self.verdict == Verdict::Conjugate
    }

    /// Re-checks a positive certificate by one conjugation.
    pub fn verify(&self, u: &Element, v: &Element) -> bool {
        match (&self.verdict, &self.witness) {
            (Verdict::Conjugate, Some(w)) => w.conjugate(u).map(|x| &x == v).unwrap_or(false),
            (Verdict::NotConjugate, None) => true,
            _ => false,
        }
    }

    pub fn to_json(&self) -> CertificateJson {
        CertificateJson {
            verdict: self.verdict,
            witness_word: self.witness.as_ref().map(|w| w.to_word().to_string()),
            tested_centralizer_elements: self.tested,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CertificateJson {
    pub verdict: Verdict,
    pub witness_word: Option<String>,
    pub tested_centralizer_elements: u64,
}

impl fmt::Display for ConjugacyCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.witness, &self.refutation) {
            (Some(w), _) => write!(f, "conjugate, witness {w}"),
            (None, Some(Refutation::CycleTypeMismatch)) => {
                write!(f, "not conjugate: cycle types differ")
            }
            (None, Some(Refutation::CentralizerExhausted(k))) => {
                write!(f, "not conjugate: {k} centralizer elements exhausted")
            }
            (None, None) => write!(f, "not conjugate"),
        }
    }
}

/// Common preparation for the fiber-based procedures: conjugates `u` into
/// the fiber of `target`, returning the conjugator and the result.
fn move_into_fiber(u: &Element, target: &Permutation) -> Option<(Element, Element)> {
    let rho = u.perm().conjugator_to(target)?;
    let g0 = Element::section(&rho);
    let moved = g0.conjugate(u).expect("same strand count");
    debug_assert_eq!(moved.perm(), target);
    Some((g0, moved))
}

pub fn are_conjugate(u: &Element, v: &Element) -> Result<ConjugacyCertificate> {
    if u.n() != v.n() {
        return Err(Error::SizeMismatch {
            left: u.n(),
            right: v.n(),
        });
    }
    let Some((g0, moved)) = move_into_fiber(u, v.perm()) else {
        return Ok(ConjugacyCertificate {
            verdict: Verdict::NotConjugate,
            witness: None,
            refutation: Some(Refutation::CycleTypeMismatch),
            tested: 0,
        });
    };
    let base = Element::section(v.perm());
    let theta = v.perm().inverse();
    let target = fiber_coordinates(v, &base)?.a;
    let cent = Centralizer::new(&theta);
    let count = cent.len();

    let attempt = |idx: u64| -> Option<Element> {
        let lift = Element::section(&cent.get(idx));
        let w = lift.conjugate(&moved).ok()?;
        let d = fiber_coordinates(&w, &base).ok()?.a;
        let x = solve_translation_system(&theta, &(&target - &d))?;
        Some(Element::from_pure(&x).mul(&lift).mul(&g0))
    };
    let found = (0..count)
        .into_par_iter()
        .find_map_first(|idx| attempt(idx).map(|w| (idx, w)));

    match found {
        Some((idx, witness)) => {
            if &witness.conjugate(u)? != v {
                return Err(Error::Internal(
                    "conjugating witness failed to verify".into(),
                ));
            }
            Ok(ConjugacyCertificate {
                verdict: Verdict::Conjugate,
                witness: Some(witness),
                refutation: None,
                tested: idx + 1,
            })
        }
        None => Ok(ConjugacyCertificate {
            verdict: Verdict::NotConjugate,
            witness: None,
            refutation: Some(Refutation::CentralizerExhausted(count)),
            tested: count,
        }),
    }
}

/// A second decision route built only from orbit sums and
/// [`theorem2_condition_check`]; it produces no witness.
pub fn decide_by_conditions(u: &Element, v: &Element) -> Result<bool> {
    if u.n() != v.n() {
        return Err(Error::SizeMismatch {
            left: u.n(),
            right: v.n(),
        });
    }
    let Some((_, moved)) = move_into_fiber(u, v.perm()) else {
        return Ok(false);
    };
    let base = Element::section(v.perm());
    let dec = decompose(&v.perm().inverse());
    let reduce = |e: &Element| -> Result<PairVector> {
        Ok(on_transversal(
            &orbit_sum(&fiber_coordinates(e, &base)?.a, &dec),
            &dec,
        ))
    };
    let z = reduce(&moved)?;
    let b = reduce(v)?;
    let cent = Centralizer::new(dec.theta());
    for c in cent.iter() {
        if theorem2_condition_check(&base, &c, &z, &b)? {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Order of `u`, `None` when infinite. An element of finite order has
/// order dividing the order `m` of its permutation, since `u^m` is pure
/// and the pure subgroup is torsion free.
pub fn order_of(u: &Element) -> Option<u64> {
    let m = u.perm().order();
    if !u.power(m as i64).is_identity() {
        return None;
    }
    (1..=m)
        .filter(|d| m.is_multiple_of(*d))
        .find(|&d| u.power(d as i64).is_identity())
}

/// Finiteness through orbit sums. Writing `u = β·∏A^{a}` over the section
/// `β` of its permutation, `u^m = β^m · ∏A^{Σ_k a∘θ^k}`, and the exponent
/// of that product at `p` is `h[p] + (m/|O|)·S_O` where `h` are the
/// coordinates of `β^m` and `S_O` the sum of `a` over the orbit of `p`.
pub fn is_finite_by_orbit_sums(u: &Element) -> bool {
    let m = u.perm().order();
    let base = Element::section(u.perm());
    let a = fiber_coordinates(u, &base)
        .expect("section shares the permutation")
        .a;
    let h = base
        .power(m as i64)
        .pure_exponents()
        .expect("power of the permutation order is pure");
    let dec = decompose(&u.perm().inverse());
    let sums = orbit_sum(&a, &dec);
    dec.orbits().iter().zip(&sums).all(|(orbit, &s)| {
        let reps = (m / orbit.len() as u64) as i64;
        orbit.iter().all(|&p| h.get(p) + reps * s == 0)
    })
}

/// A canonical element of the conjugacy class of `u`: the permutation is
/// moved to [`Permutation::canonical_of_type`], and among the reduced
/// forms reachable through the centralizer the lexicographically least
/// vector of orbit sums is kept.
#[derive(Clone, Debug)]
pub struct CanonicalForm {
    pub element: Element,
    pub base: Element,
    pub transversal: Vec<Pair>,
    pub exponents: Vec<i64>,
}

pub fn canonical_representative(u: &Element) -> CanonicalForm {
    let n = u.n();
    let canonical = Permutation::canonical_of_type(n, &u.perm().cycle_type())
        .expect("cycle type of an existing permutation");
    let (_, moved) = move_into_fiber(u, &canonical).expect("same cycle type");
    let base = Element::section(&canonical);
    let dec = decompose(&canonical.inverse());
    let cent = Centralizer::new(dec.theta());
    let sums_for = |idx: u64| -> Vec<i64> {
        let lift = Element::section(&cent.get(idx));
        let w = lift.conjugate(&moved).expect("same strand count");
        orbit_sum(
            &fiber_coordinates(&w, &base).expect("C commutes with θ").a,
            &dec,
        )
    };
    let exponents = (0..cent.len())
        .into_par_iter()
        .map(sums_for)
        .min()
        .expect("centralizer contains the identity");
    let element = base.mul(&Element::from_pure(&on_transversal(&exponents, &dec)));
    CanonicalForm {
        element,
        base,
        transversal: dec.transversal(),
        exponents,
    }
}

/// The reduced form over the section of `u`'s own permutation.
pub fn default_normal_form(u: &Element) -> NormalForm {
    theorem1_normal_form(u, &Element::section(u.perm())).expect("section shares the permutation")
}

pub fn transversal_of(base: &Element) -> OrbitDecomposition {
    decompose(&base.perm().inverse())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::element::delta;
    use crate::word::parse_word;

    fn el(s: &str, n: usize) -> Element {
        Element::from_word(&parse_word(s, n).unwrap())
    }

    fn pair(i: usize, j: usize) -> Pair {
        Pair::new(i, j).unwrap()
    }

    #[test]
    fn fiber_coordinate_examples() {
        let base = el("s1", 3);
        assert!(fiber_coordinates(&base, &base).unwrap().a.is_zero());
        let a = fiber_coordinates(&el("s1 A1,2 A1,3", 3), &base).unwrap().a;
        assert_eq!((a.at(1, 2), a.at(1, 3), a.at(2, 3)), (1, 1, 0));
        let beta = el("s1 s3 s2^-1", 5);
        let u = beta.mul(&el("A1,4^-6", 5));
        assert_eq!(fiber_coordinates(&u, &beta).unwrap().a.at(1, 4), -6);
        assert!(matches!(
            fiber_coordinates(&el("s2", 3), &base),
            Err(Error::FiberMismatch { .. })
        ));
    }

    #[test]
    fn normal_form_collapses_an_orbit() {
        // θ = (1,2,3); one orbit of size 3 with exponent 1 everywhere
        let base = el("s1 s2", 3);
        let u = base.mul(&el("A1,2 A1,3 A2,3", 3));
        let nf = theorem1_normal_form(&u, &base).unwrap();
        assert_eq!(nf.sums, vec![3]);
        assert_eq!(nf.nf, base.mul(&el("A1,2^3", 3)));
        assert_eq!(nf.witness.conjugate(&u).unwrap(), nf.nf);
    }

    #[test]
    fn normal_form_of_bare_base() {
        let base = el("s1 s3 s4", 5);
        let nf = theorem1_normal_form(&base, &base).unwrap();
        assert_eq!(nf.nf, base);
        assert!(nf.witness.is_identity());
    }

    #[test]
    fn condition_check_worked_example_b3() {
        let base = el("s1", 3);
        let c = el("s1", 3).perm().clone();
        let z = PairVector::unit(3, pair(1, 2));
        let mut b = PairVector::zeros(3);
        b.set(pair(1, 2), 1);
        assert!(theorem2_condition_check(&base, &c, &z, &b).unwrap());
        b.set(pair(1, 3), 1);
        assert!(!theorem2_condition_check(&base, &c, &z, &b).unwrap());
    }

    #[test]
    fn condition_check_identity_centralizer_element() {
        let base = el("s1 s2", 6);
        let id = Permutation::identity(6);
        let mut z = PairVector::zeros(6);
        z.set(pair(1, 4), 3);
        z.set(pair(5, 6), -2);
        assert!(theorem2_condition_check(&base, &id, &z, &z).unwrap());
        let mut b = z.clone();
        b.set(pair(4, 5), 1);
        assert!(!theorem2_condition_check(&base, &id, &z, &b).unwrap());
    }

    #[test]
    fn condition_check_errors() {
        let base = el("s1 s2", 4);
        let not_central = el("s3", 4).perm().clone();
        let z = PairVector::zeros(4);
        assert!(matches!(
            theorem2_condition_check(&base, &not_central, &z, &z),
            Err(Error::NotInCentralizer { .. })
        ));
        let off = PairVector::unit(4, pair(2, 3));
        assert!(matches!(
            theorem2_condition_check(&base, &Permutation::identity(4), &off, &z),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn worked_non_conjugacy() {
        let u = el("s1 A1,2", 3);
        let v = el("s1 s2 s1 A1,3", 3);
        let cert = are_conjugate(&u, &v).unwrap();
        assert_eq!(cert.verdict, Verdict::NotConjugate);
        assert_eq!(cert.refutation, Some(Refutation::CentralizerExhausted(2)));
        assert!(!decide_by_conditions(&u, &v).unwrap());
    }

    #[test]
    fn worked_conjugacy() {
        let u = el("s2 s1 s2 s1 A1,3 s2^-1", 3);
        let v = el("s1 s2 s1 A1,3", 3);
        let cert = are_conjugate(&u, &v).unwrap();
        assert!(cert.is_conjugate());
        assert!(cert.verify(&u, &v));
        assert!(decide_by_conditions(&u, &v).unwrap());
        let self_cert = are_conjugate(&v, &v).unwrap();
        assert!(self_cert.verify(&v, &v));
        assert_eq!(self_cert.tested, 1);
    }

    #[test]
    fn cycle_type_refutation() {
        let cert = are_conjugate(&el("s1", 3), &el("s1 s2", 3)).unwrap();
        assert_eq!(cert.refutation, Some(Refutation::CycleTypeMismatch));
        assert_eq!(cert.tested, 0);
        assert!(are_conjugate(&el("s1", 3), &el("s1", 4)).is_err());
    }

    #[test]
    fn certificate_json() {
        let cert = are_conjugate(&el("s1 A1,2", 3), &el("s1 s2 s1 A1,3", 3)).unwrap();
        let json = serde_json::to_string(&cert.to_json()).unwrap();
        assert_eq!(
            json,
            r#"{"verdict":"not_conjugate","witness_word":null,"tested_centralizer_elements":2}"#
        );
    }

    #[test]
    fn orders() {
        assert_eq!(order_of(&el("s2 s1^-1", 3)), Some(3));
        assert_eq!(order_of(&el("s1 s2", 3)), None);
        assert_eq!(order_of(&el("s5 s4^-1", 6)), Some(3));
        assert_eq!(order_of(&Element::identity(4)), Some(1));
        assert_eq!(order_of(&el("s1", 3)), None);
        for p in [3, 5, 7] {
            assert_eq!(order_of(&delta(0, p, p).unwrap()), Some(p as u64));
        }
        for s in ["s2 s1^-1", "s1 s2", "s1", "", "A1,2", "s2 s1^-1 s5 s4^-1"] {
            let u = el(s, 6);
            assert_eq!(is_finite_by_orbit_sums(&u), order_of(&u).is_some(), "{s}");
        }
    }

    #[test]
    fn canonical_forms_in_b3() {
        let pure = el("A1,2^4 A1,3^-1 A2,3^2", 3);
        let canon = canonical_representative(&pure);
        assert_eq!(canon.exponents, vec![-1, 2, 4]);
        let again = canonical_representative(&canon.element);
        assert_eq!(again.element, canon.element);

        let three_cycle = el("s2 s1^-1", 3);
        let canon = canonical_representative(&three_cycle);
        assert_eq!(canon.base, el("s1 s2", 3));
        assert_eq!(canon.transversal, vec![pair(1, 2)]);
    }
}

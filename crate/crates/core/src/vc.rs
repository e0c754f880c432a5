//! Infinite virtually cyclic subgroups `F ⋊ ℤ` with `F` finite.
//!
//! Given torsion generators `g_i` and prescribed images `h_i` of the
//! action, the infinite generator is sought as `B = X·γ` with `γ` a lift
//! of a permutation conjugating every `perm(g_i)` to `perm(h_i)` and `X`
//! pure. Writing `γ g_i γ⁻¹ = C_i h_i`, the relation `B g_i B⁻¹ = h_i`
//! turns into `x[φ_i(p)] = x[p] + c_i[p]` with `φ_i = perm(h_i)`, one
//! translation system per generator, all sharing `x`.

use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::conjugacy::order_of;
use crate::element::{delta, Element};
use crate::error::{Error, Result};
use crate::orbit::{check_translation_solution, solve_stacked_systems};
use crate::pair::PairVector;
use crate::perm::Permutation;
use crate::word::{parse_word, BraidWord};

/// Value given to the unknowns left free by the translation systems. With
/// this choice the trivial actions come out as the products of all `A_{i,j}`.
pub const DEFAULT_FREE_VALUE: i64 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind")]
pub enum VcKind {
    #[serde(rename = "zp_by_z")]
    ZpByZ { p: usize, k: usize },
    #[serde(rename = "z3xz3_by_z")]
    Z3xZ3ByZ { k: usize },
}

impl fmt::Display for VcKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VcKind::ZpByZ { p, k } => write!(f, "Z{p} x|_alpha{k} Z"),
            VcKind::Z3xZ3ByZ { k } => write!(f, "(Z3 x Z3) x|_upsilon{k} Z"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct VcPresentation {
    pub kind: VcKind,
    pub n: usize,
    pub torsion_generators: Vec<Element>,
    /// Images of the torsion generators under conjugation by `B`.
    pub action_images: Vec<Element>,
    pub infinite_generator: Element,
    pub relations_verified: bool,
    pub gamma_word: BraidWord,
    pub pure_part: PairVector,
}

impl VcPresentation {
    /// Re-checks every defining relation by multiplication.
    pub fn check_relations(&self) -> bool {
        relations_hold(
            &self.torsion_generators,
            &self.action_images,
            &self.infinite_generator,
            torsion_order(self.kind),
        )
    }
}

fn torsion_order(kind: VcKind) -> u64 {
    match kind {
        VcKind::ZpByZ { p, .. } => p as u64,
        VcKind::Z3xZ3ByZ { .. } => 3,
    }
}

fn relations_hold(gens: &[Element], images: &[Element], b: &Element, order: u64) -> bool {
    let b_inv = b.inverse();
    let torsion = gens.iter().all(|g| g.power(order as i64).is_identity());
    let commuting = gens
        .iter()
        .enumerate()
        .all(|(i, g)| gens[i + 1..].iter().all(|h| g.mul(h) == h.mul(g)));
    let action = gens
        .iter()
        .zip(images)
        .all(|(g, h)| &b.mul(g).mul(&b_inv) == h);
    torsion && commuting && action
}

/// Result of an attempted realization.
#[derive(Clone, Debug)]
pub enum Realization {
    Realized(VcPresentation),
    /// No `γ̄` among `candidates` permutations led to a solvable system.
    Unrealizable {
        candidates: usize,
    },
}

impl Realization {
    pub fn presentation(&self) -> Option<&VcPresentation> {
        match self {
            Realization::Realized(p) => Some(p),
            Realization::Unrealizable { .. } => None,
        }
    }
}

/// The translation systems `(perm(h_i), c_i)` for a given lift `γ`.
fn systems_for(
    gamma: &Element,
    gens: &[Element],
    images: &[Element],
) -> Vec<(Permutation, PairVector)> {
    gens.iter()
        .zip(images)
        .map(|(g, h)| {
            let c = gamma
                .mul(g)
                .mul(&gamma.inverse())
                .mul(&h.inverse())
                .pure_exponents()
                .expect("γ̄ conjugates the permutations");
            (h.perm().clone(), c)
        })
        .collect()
}

fn lifts_conjugating(gamma: &Permutation, gens: &[Element], images: &[Element]) -> bool {
    gens.iter()
        .zip(images)
        .all(|(g, h)| &gamma.conjugate(g.perm()) == h.perm())
}

/// Solves for `B = X·γ`; `None` when the stacked systems are inconsistent.
fn solve_with_gamma(
    gamma_word: &BraidWord,
    gens: &[Element],
    images: &[Element],
    free_value: i64,
) -> Result<Option<(PairVector, Element)>> {
    let gamma = Element::from_word(gamma_word);
    let systems = systems_for(&gamma, gens, images);
    Ok(solve_stacked_systems(&systems, free_value)?.map(|x| {
        let b = Element::from_pure(&x).mul(&gamma);
        (x, b)
    }))
}

/// `γ̄` sending the `i`-th entry of `(1, …, p)` to the `i`-th entry of
/// `(1, …, p)^k` written from 1, oriented so that it conjugates
/// `perm(a)` to `perm(a^k)`.
fn cycle_power_alignment(
    n: usize,
    p: usize,
    k: usize,
    a: &Permutation,
    ak: &Permutation,
) -> Result<Permutation> {
    let mut images: Vec<usize> = (1..=n).collect();
    for (i, image) in images.iter_mut().take(p).enumerate() {
        *image = 1 + (i * k) % p;
    }
    let candidate = Permutation::from_images(images)?;
    [candidate.clone(), candidate.inverse()]
        .into_iter()
        .find(|g| &g.conjugate(a) == ak)
        .ok_or_else(|| Error::Internal("cycle-power alignment does not conjugate".into()))
}

/// Realizes `ℤ_p ⋊_{α_k} ℤ = ⟨A, B | A^p = 1, BAB⁻¹ = A^k⟩` with
/// `A = δ_{0,p}`. The `γ` recorded for `(n, p, k)` in the bundled tables
/// is used when there is one; otherwise `γ̄` comes from aligning the cycle
/// with its `k`-th power.
pub fn realize_zp_by_z(n: usize, p: usize, k: usize) -> Result<VcPresentation> {
    realize_zp_by_z_with(n, p, k, DEFAULT_FREE_VALUE)
}

pub fn realize_zp_by_z_with(
    n: usize,
    p: usize,
    k: usize,
    free_value: i64,
) -> Result<VcPresentation> {
    if !is_odd_prime(p) || p > n || k == 0 || k >= p {
        return Err(Error::Domain(format!(
            "need an odd prime p <= n and 1 <= k <= p - 1 (got n = {n}, p = {p}, k = {k})"
        )));
    }
    let a = delta(0, p, n)?;
    let ak = a.power(k as i64);
    let gens = [a.clone()];
    let images = [ak.clone()];
    let gamma_word = match tabulated_gamma(n, p, k, &gens, &images) {
        Some(w) => w,
        None => {
            let gbar = cycle_power_alignment(n, p, k, a.perm(), ak.perm())?;
            Element::section(&gbar).to_word()
        }
    };
    let (x, b) = solve_with_gamma(&gamma_word, &gens, &images, free_value)?.ok_or_else(|| {
        Error::Internal(format!(
            "translation system for p = {p}, k = {k} is unsolvable"
        ))
    })?;
    let pres = VcPresentation {
        kind: VcKind::ZpByZ { p, k },
        n,
        torsion_generators: gens.to_vec(),
        action_images: images.to_vec(),
        infinite_generator: b,
        relations_verified: false,
        gamma_word,
        pure_part: x,
    };
    finish(pres)
}

fn finish(mut pres: VcPresentation) -> Result<VcPresentation> {
    if !pres.check_relations() {
        return Err(Error::Internal(format!(
            "relations of {} failed to verify",
            pres.kind
        )));
    }
    if order_of(&pres.infinite_generator).is_some() {
        return Err(Error::Internal(format!(
            "{}: B has finite order",
            pres.kind
        )));
    }
    pres.relations_verified = true;
    Ok(pres)
}

fn is_odd_prime(p: usize) -> bool {
    p >= 3
        && p % 2 == 1
        && (3..)
            .step_by(2)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

fn tabulated_gamma(
    n: usize,
    p: usize,
    k: usize,
    gens: &[Element],
    images: &[Element],
) -> Option<BraidWord> {
    let row = table_rows().iter().find(|r| {
        r.n == n
            && r.torsion_order == p as u64
            && r.action_name == format!("alpha{k}")
            && r.generator_words.len() == 2
            && parse_word(&r.generator_words[0], n)
                .map(|w| Element::from_word(&w) == gens[0])
                .unwrap_or(false)
    })?;
    let w = parse_word(&row.gamma_word, n).ok()?;
    lifts_conjugating(Element::from_word(&w).perm(), gens, images).then_some(w)
}

/// `δ_{0,3}` and `σ_5σ_4⁻¹` in `B_6`, generating a copy of `ℤ_3 × ℤ_3`.
pub fn z3z3_generators() -> [Element; 2] {
    let a1 = delta(0, 3, 6).expect("valid indices");
    let a2 = Element::from_word(&parse_word("s5 s4^-1", 6).expect("valid word"));
    [a1, a2]
}

/// Images of `(A_1, A_2)` under `υ_k`, `k = 1, …, 6`.
pub fn upsilon_images(k: usize) -> Result<[Element; 2]> {
    let [a1, a2] = z3z3_generators();
    let sq = |e: &Element| e.power(2);
    Ok(match k {
        1 => [a1, a2],
        2 => [a2, a1],
        3 => [sq(&a1), sq(&a2)],
        4 => [sq(&a2), sq(&a1)],
        5 => [a1.mul(&sq(&a2)), sq(&a1).mul(&a2)],
        6 => [sq(&a1).mul(&a2), a1.mul(&sq(&a2))],
        _ => {
            return Err(Error::Domain(format!(
                "upsilon index must be in 1..=6, got {k}"
            )))
        }
    })
}

/// Realizes `(ℤ_3 × ℤ_3) ⋊_{υ_k} ℤ` in `B_6`. The tabulated `γ` is tried
/// first; failing that every `γ̄ ∈ S_6` compatible with both generators is
/// tried before giving up.
pub fn realize_z3z3_by_z(k: usize) -> Result<Realization> {
    realize_z3z3_by_z_with(k, DEFAULT_FREE_VALUE)
}

pub fn realize_z3z3_by_z_with(k: usize, free_value: i64) -> Result<Realization> {
    let images = upsilon_images(k)?;
    let gens = z3z3_generators();
    let make = |gamma_word: BraidWord, x: PairVector, b: Element| {
        finish(VcPresentation {
            kind: VcKind::Z3xZ3ByZ { k },
            n: 6,
            torsion_generators: gens.to_vec(),
            action_images: images.to_vec(),
            infinite_generator: b,
            relations_verified: false,
            gamma_word,
            pure_part: x,
        })
        .map(Realization::Realized)
    };

    let tabulated = table_rows()
        .iter()
        .find(|r| r.table == 4 && r.action_name == format!("upsilon{k}"))
        .and_then(|r| parse_word(&r.gamma_word, 6).ok())
        .filter(|w| lifts_conjugating(Element::from_word(w).perm(), &gens, &images));
    if let Some(w) = tabulated {
        if let Some((x, b)) = solve_with_gamma(&w, &gens, &images, free_value)? {
            return make(w, x, b);
        }
    }

    let candidates: Vec<Permutation> =
        crate::centralizer::Centralizer::new(&Permutation::identity(6))
            .iter()
            .filter(|g| lifts_conjugating(g, &gens, &images))
            .collect();
    for gbar in &candidates {
        let w = Element::section(gbar).to_word();
        if let Some((x, b)) = solve_with_gamma(&w, &gens, &images, free_value)? {
            return make(w, x, b);
        }
    }
    Ok(Realization::Unrealizable {
        candidates: candidates.len(),
    })
}

/// Whether two solutions differ by a solution of the homogeneous systems,
/// i.e. only in the free parameters.
pub fn same_up_to_free_parameters(pres: &VcPresentation, other_pure: &PairVector) -> bool {
    let zero = PairVector::zeros(pres.n);
    let diff = &pres.pure_part - other_pure;
    pres.action_images
        .iter()
        .all(|h| check_translation_solution(h.perm(), &zero, &diff))
}

/// One row of the bundled tables, transcribed as printed.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TableRow {
    pub table: u8,
    pub row: String,
    pub n: usize,
    pub group: String,
    pub action_name: String,
    pub torsion_order: u64,
    /// Torsion generators followed by the pure part of `B`.
    pub generator_words: Vec<String>,
    /// Images of the torsion generators under conjugation by `B`.
    pub action_images: Vec<String>,
    /// `B` is the last generator word times `γ`.
    pub gamma_word: String,
}

pub fn table_rows() -> &'static [TableRow] {
    static ROWS: OnceLock<Vec<TableRow>> = OnceLock::new();
    ROWS.get_or_init(|| {
        serde_json::from_str(include_str!("../data/tables.json"))
            .expect("bundled table data is valid")
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct RelationCheck {
    pub relation: String,
    pub holds: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct RowReport {
    pub table: u8,
    pub row: String,
    pub n: usize,
    pub group: String,
    pub checks: Vec<RelationCheck>,
    /// Observations about the transcription itself, such as a pure
    /// generator listed twice.
    pub notes: Vec<String>,
    pub passed: bool,
}

impl fmt::Display for RowReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "pass" } else { "FLAGGED" };
        write!(
            f,
            "table {} {:<14} n={} {status}",
            self.table, self.row, self.n
        )?;
        for c in self.checks.iter().filter(|c| !c.holds) {
            write!(f, "\n    fails: {}", c.relation)?;
        }
        for note in &self.notes {
            write!(f, "\n    note: {note}")?;
        }
        Ok(())
    }
}

/// Evaluates a tabulated row and checks the defining relations of its
/// group. Failures are reported, never corrected.
pub fn verify_table_row(row: &TableRow) -> RowReport {
    let mut checks = Vec::new();
    let mut notes = Vec::new();
    let parse = |s: &str| parse_word(s, row.n).map(|w| Element::from_word(&w));
    let parsed: std::result::Result<Vec<Element>, Error> =
        row.generator_words.iter().map(|s| parse(s)).collect();
    let images: std::result::Result<Vec<Element>, Error> =
        row.action_images.iter().map(|s| parse(s)).collect();
    let gamma = parse(&row.gamma_word);
    let (mut parsed, images, gamma) = match (parsed, images, gamma) {
        (Ok(p), Ok(i), Ok(g)) if p.len() == i.len() + 1 => (p, i, g),
        (p, i, g) => {
            let reason = [p.err(), i.err(), g.err()]
                .into_iter()
                .flatten()
                .map(|e| e.to_string())
                .next()
                .unwrap_or_else(|| "generator and image counts disagree".into());
            checks.push(RelationCheck {
                relation: format!("row parses ({reason})"),
                holds: false,
            });
            return report(row, checks, notes);
        }
    };
    let b = parsed.pop().expect("at least one generator").mul(&gamma);
    let b_inv = b.inverse();
    let names: Vec<String> = (1..=parsed.len()).map(|i| format!("g{i}")).collect();

    for (g, name) in parsed.iter().zip(&names) {
        checks.push(RelationCheck {
            relation: format!("{name}^{} = 1", row.torsion_order),
            holds: g.power(row.torsion_order as i64).is_identity(),
        });
    }
    for i in 0..parsed.len() {
        for j in i + 1..parsed.len() {
            checks.push(RelationCheck {
                relation: format!("{0} {1} = {1} {0}", names[i], names[j]),
                holds: parsed[i].mul(&parsed[j]) == parsed[j].mul(&parsed[i]),
            });
        }
    }
    for ((g, h), (name, img)) in parsed
        .iter()
        .zip(&images)
        .zip(names.iter().zip(&row.action_images))
    {
        checks.push(RelationCheck {
            relation: format!("B {name} B^-1 = {img}"),
            holds: &b.mul(g).mul(&b_inv) == h,
        });
    }
    checks.push(RelationCheck {
        relation: "B has infinite order".into(),
        holds: order_of(&b).is_none(),
    });

    if let Ok(w) = parse_word(row.generator_words.last().expect("non-empty"), row.n) {
        let mut seen = std::collections::BTreeMap::new();
        for l in w.letters() {
            *seen.entry(l.generator).or_insert(0) += 1;
        }
        for (g, count) in seen.into_iter().filter(|&(_, c)| c > 1) {
            let crate::word::Generator::Pure(i, j) = g else {
                continue;
            };
            notes.push(format!("A{i},{j} is listed {count} times in the pure part"));
        }
    }
    report(row, checks, notes)
}

fn report(row: &TableRow, checks: Vec<RelationCheck>, notes: Vec<String>) -> RowReport {
    RowReport {
        table: row.table,
        row: row.row.clone(),
        n: row.n,
        group: row.group.clone(),
        passed: checks.iter().all(|c| c.holds),
        checks,
        notes,
    }
}

/// Verifies every bundled row, optionally restricted to one table.
pub fn verify_tables(table: Option<u8>) -> Vec<RowReport> {
    use rayon::prelude::*;
    table_rows()
        .par_iter()
        .filter(|r| table.is_none_or(|t| r.table == t))
        .map(verify_table_row)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(s: &str, n: usize) -> Element {
        Element::from_word(&parse_word(s, n).unwrap())
    }

    #[test]
    fn table1_alpha1_example() {
        let pres = realize_zp_by_z(3, 3, 1).unwrap();
        assert!(pres.relations_verified);
        assert_eq!(pres.torsion_generators[0], el("s2 s1^-1", 3));
        assert!(pres.gamma_word.is_empty());
        assert_eq!(pres.infinite_generator, el("A1,2 A2,3 A1,3", 3));
    }

    #[test]
    fn table1_alpha2_example() {
        let pres = realize_zp_by_z(3, 3, 2).unwrap();
        assert_eq!(pres.gamma_word.to_string(), "s1 s2 s1");
        assert_eq!(pres.infinite_generator, el("A1,2 A1,3 A2,3 s1 s2 s1", 3));
    }

    #[test]
    fn z5_alpha4_relations() {
        let pres = realize_zp_by_z(5, 5, 4).unwrap();
        assert!(pres.check_relations());
        assert_eq!(pres.gamma_word.to_string(), "s4 s3 s2 s3 s4 s3");
        assert_eq!(order_of(&pres.torsion_generators[0]), Some(5));
    }

    #[test]
    fn untabulated_cases_use_alignment() {
        for k in 1..7 {
            let pres = realize_zp_by_z(7, 7, k).unwrap();
            assert!(pres.relations_verified, "k = {k}");
        }
    }

    #[test]
    fn free_parameters_do_not_matter() {
        for (n, p, k) in [(3, 3, 2), (4, 3, 2), (5, 5, 3), (6, 5, 2)] {
            let one = realize_zp_by_z_with(n, p, k, 1).unwrap();
            let zero = realize_zp_by_z_with(n, p, k, 0).unwrap();
            assert_ne!(one.infinite_generator, zero.infinite_generator);
            assert!(zero.check_relations());
            assert!(same_up_to_free_parameters(&one, &zero.pure_part));
        }
    }

    #[test]
    fn zero_free_value_degenerates_for_trivial_action() {
        // with every free unknown at 0 and γ = 1, B collapses to the identity
        assert!(realize_zp_by_z_with(3, 3, 1, 0).is_err());
    }

    #[test]
    fn domain_errors() {
        for (n, p, k) in [(3, 2, 1), (4, 9, 1), (3, 5, 1), (5, 5, 0), (5, 5, 5)] {
            assert!(matches!(realize_zp_by_z(n, p, k), Err(Error::Domain(_))));
        }
        assert!(matches!(realize_z3z3_by_z(7), Err(Error::Domain(_))));
        assert!(matches!(realize_z3z3_by_z(0), Err(Error::Domain(_))));
    }

    #[test]
    fn upsilon2_matches_worked_example() {
        let pres = match realize_z3z3_by_z(2).unwrap() {
            Realization::Realized(p) => p,
            other => panic!("expected a realization, got {other:?}"),
        };
        assert_eq!(pres.gamma_word.to_string(), "s3 s2 s4 s1 s3 s5 s4 s2 s3");
        let expected = el(
            "A1,2 A1,3 A2,3 A4,5 A4,6 A5,6 A2,4 A2,5 A2,6 A3,4 A3,5 A3,6 A1,4 A1,5 A1,6",
            6,
        );
        assert_eq!(pres.pure_part, expected.pure_exponents().unwrap());
        let [a1, a2] = z3z3_generators();
        let b = &pres.infinite_generator;
        assert_eq!(b.conjugate(&a1).unwrap(), a2);
        assert_eq!(b.conjugate(&a2).unwrap(), a1);
    }

    #[test]
    fn upsilon_realizable_cases() {
        for k in 1..=4 {
            let r = realize_z3z3_by_z(k).unwrap();
            assert!(
                r.presentation().is_some_and(|p| p.relations_verified),
                "k = {k}"
            );
        }
        let trivial = realize_z3z3_by_z(1).unwrap();
        let b = &trivial.presentation().unwrap().infinite_generator;
        for g in z3z3_generators() {
            assert_eq!(b.mul(&g), g.mul(b));
        }
    }

    #[test]
    fn upsilon5_and_6_are_unrealizable() {
        for k in [5, 6] {
            assert!(matches!(
                realize_z3z3_by_z(k).unwrap(),
                Realization::Unrealizable { candidates: 0 }
            ));
        }
    }

    #[test]
    fn bundled_torsion_words_are_deltas() {
        for row in table_rows() {
            let first = el(&row.generator_words[0], row.n);
            if row.torsion_order == 5 {
                assert_eq!(first, delta(0, 5, row.n).unwrap());
            } else if !row.row.starts_with("Z3diag") {
                assert_eq!(first, delta(0, 3, row.n).unwrap());
            }
        }
        assert_eq!(table_rows().len(), 22);
    }

    #[test]
    fn tables_one_and_two_pass() {
        for report in verify_tables(Some(1)).iter().chain(&verify_tables(Some(2))) {
            assert!(report.passed, "{report}");
        }
    }

    #[test]
    fn duplicated_letters_are_noted() {
        let reports = verify_tables(Some(4));
        let up1 = reports.iter().find(|r| r.row == "upsilon1").unwrap();
        assert!(up1.notes.iter().any(|n| n.contains("A1,3")));
    }
}

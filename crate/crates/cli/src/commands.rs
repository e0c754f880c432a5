use std::fmt::Write as _;

use serde::Serialize;
use serde_json::json;

use braidquot::conjugacy::NormalForm;
use braidquot::vc::VcPresentation;
use braidquot::{
    are_conjugate, canonical_representative, centralizer_size, fiber_coordinates, order_of,
    parse_word, realize_z3z3_by_z, realize_zp_by_z, theorem1_normal_form, verify_tables, Element,
    Error, PairVector, Permutation, Realization, Result,
};

use crate::{Cli, Command};

/// Centralizers larger than this are refused unless `--force` is given.
const REFUSE_ABOVE: u64 = 100_000_000;

pub fn run(cli: &Cli) -> Result<String> {
    let json = cli.json;
    match &cli.command {
        Command::Eval { strands, word } => element_out(&eval(word, strands.get())?, json),
        Command::Mul { strands, words } => {
            let n = strands.get();
            let mut acc = Element::identity(n);
            for w in words {
                acc = acc.multiply(&eval(w, n)?)?;
            }
            element_out(&acc, json)
        }
        Command::Inv { strands, word } => element_out(&eval(word, strands.get())?.inverse(), json),
        Command::Pow {
            strands,
            word,
            exponent,
        } => element_out(&eval(word, strands.get())?.power(*exponent), json),
        Command::Perm { strands, word } => {
            let u = eval(word, strands.get())?;
            Ok(if json {
                to_json(&json!({
                    "perm": u.perm().images(),
                    "cycles": u.perm().to_string(),
                    "cycle_type": u.perm().cycle_type(),
                }))
            } else {
                u.perm().to_string()
            })
        }
        Command::Coords {
            strands,
            word,
            base,
        } => {
            let n = strands.get();
            let u = eval(word, n)?;
            let base = base_for(&u, base.as_deref(), n)?;
            let coords = fiber_coordinates(&u, &base)?;
            Ok(if json {
                to_json(&json!({
                    "base_word": base.to_word().to_string(),
                    "exponents": triples(&coords.a),
                }))
            } else {
                format!("base: {}\npure part: {}", base, pure_text(&coords.a))
            })
        }
        Command::Nf {
            strands,
            word,
            base,
        } => {
            let n = strands.get();
            let u = eval(word, n)?;
            let base = base_for(&u, base.as_deref(), n)?;
            let nf = theorem1_normal_form(&u, &base)?;
            Ok(normal_form_out(&nf, &base, json))
        }
        Command::Conj { strands, u, v } => {
            let n = strands.get();
            let (u, v) = (eval(u, n)?, eval(v, n)?);
            if u.perm().cycle_type() == v.perm().cycle_type() {
                guard(cli, v.perm())?;
            }
            let cert = are_conjugate(&u, &v)?;
            Ok(if json {
                to_json(&cert.to_json())
            } else {
                let mut s = match &cert.witness {
                    Some(w) => format!("conjugate\nwitness: {w}"),
                    None => cert.to_string(),
                };
                let _ = write!(s, "\ntested centralizer elements: {}", cert.tested);
                s
            })
        }
        Command::Order { strands, word } => {
            let order = order_of(&eval(word, strands.get())?);
            Ok(match (json, order) {
                (true, o) => to_json(&json!({ "order": o })),
                (false, Some(k)) => k.to_string(),
                (false, None) => "infinite".to_string(),
            })
        }
        Command::Canon { strands, word } => {
            let u = eval(word, strands.get())?;
            guard(cli, &u.perm().inverse())?;
            let canon = canonical_representative(&u);
            Ok(if json {
                let sums: Vec<_> = canon
                    .transversal
                    .iter()
                    .zip(&canon.exponents)
                    .map(|(p, &s)| [p.i() as i64, p.j() as i64, s])
                    .collect();
                to_json(&json!({
                    "element": canon.element,
                    "word": canon.element.to_word().to_string(),
                    "base_word": canon.base.to_word().to_string(),
                    "orbit_sums": sums,
                }))
            } else {
                canon.element.to_string()
            })
        }
        Command::VcZp { strands, p, k } => {
            let pres = realize_zp_by_z(strands.get(), *p, *k)?;
            Ok(presentation_out(&pres, json))
        }
        Command::VcZ3z3 { k } => match realize_z3z3_by_z(*k)? {
            Realization::Realized(pres) => Ok(presentation_out(&pres, json)),
            Realization::Unrealizable { candidates } => Ok(if json {
                to_json(&json!({
                    "kind": {"kind": "z3xz3_by_z", "k": k},
                    "realizable": false,
                    "compatible_gamma_candidates": candidates,
                }))
            } else {
                format!(
                    "(Z3 x Z3) x|_upsilon{k} Z: unrealizable ({candidates} compatible permutations, none solvable)"
                )
            }),
        },
        Command::VerifyTables { table } => {
            let reports = verify_tables(*table);
            Ok(if json {
                to_json(&reports)
            } else {
                let passed = reports.iter().filter(|r| r.passed).count();
                let mut s: Vec<String> = reports.iter().map(|r| r.to_string()).collect();
                s.push(format!("{passed}/{} rows pass", reports.len()));
                s.join("\n")
            })
        }
    }
}

fn eval(word: &str, n: usize) -> Result<Element> {
    Ok(Element::from_word(&parse_word(word, n)?))
}

fn base_for(u: &Element, base: Option<&str>, n: usize) -> Result<Element> {
    match base {
        Some(b) => eval(b, n),
        None => Ok(Element::section(u.perm())),
    }
}

/// Refuses or warns about large centralizer scans.
fn guard(cli: &Cli, theta: &Permutation) -> Result<()> {
    let size = centralizer_size(theta);
    if size > REFUSE_ABOVE && !cli.force {
        return Err(Error::Domain(format!(
            "centralizer has {size} elements, above the 10^8 limit; pass --force to proceed"
        )));
    }
    if size > cli.warn_threshold {
        eprintln!("warning: scanning a centralizer of {size} elements");
    } else if cli.verbose > 0 {
        eprintln!("centralizer size: {size}");
    }
    Ok(())
}

fn to_json<T: Serialize + ?Sized>(value: &T) -> String {
    serde_json::to_string(value).expect("output types serialize")
}

fn element_out(e: &Element, json: bool) -> Result<String> {
    Ok(if json { to_json(e) } else { e.to_string() })
}

fn triples(v: &PairVector) -> Vec<[i64; 3]> {
    v.nonzero()
        .map(|(p, a)| [p.i() as i64, p.j() as i64, a])
        .collect()
}

fn pure_text(v: &PairVector) -> String {
    Element::from_pure(v).to_string()
}

fn normal_form_out(nf: &NormalForm, base: &Element, json: bool) -> String {
    if json {
        let sums: Vec<_> = nf
            .transversal
            .iter()
            .zip(&nf.sums)
            .map(|(p, &s)| [p.i() as i64, p.j() as i64, s])
            .collect();
        to_json(&json!({
            "normal_form": nf.nf,
            "normal_form_word": nf.nf.to_word().to_string(),
            "base_word": base.to_word().to_string(),
            "witness_word": nf.witness.to_word().to_string(),
            "orbit_sums": sums,
        }))
    } else {
        let sums: Vec<String> = nf
            .transversal
            .iter()
            .zip(&nf.sums)
            .map(|(p, s)| format!("{p}={s}"))
            .collect();
        format!(
            "normal form: {}\nwitness: {}\norbit sums: {}",
            nf.nf,
            nf.witness,
            sums.join(" ")
        )
    }
}

fn presentation_out(pres: &VcPresentation, json: bool) -> String {
    let words =
        |es: &[Element]| -> Vec<String> { es.iter().map(|e| e.to_word().to_string()).collect() };
    if json {
        to_json(&json!({
            "kind": pres.kind,
            "n": pres.n,
            "torsion_generators": words(&pres.torsion_generators),
            "action_images": words(&pres.action_images),
            "infinite_generator": pres.infinite_generator.to_word().to_string(),
            "gamma_word": pres.gamma_word.to_string(),
            "pure_part": triples(&pres.pure_part),
            "relations_verified": pres.relations_verified,
        }))
    } else {
        let mut s = format!("{} in B_{}", pres.kind, pres.n);
        for (k, (g, h)) in pres
            .torsion_generators
            .iter()
            .zip(&pres.action_images)
            .enumerate()
        {
            let _ = write!(s, "\ng{}: {}  (B g{} B^-1 = {})", k + 1, g, k + 1, h);
        }
        let gamma = if pres.gamma_word.is_empty() {
            "1".to_string()
        } else {
            pres.gamma_word.to_string()
        };
        let _ = write!(
            s,
            "\ngamma: {gamma}\npure part: {}\nB: {}\nrelations verified: {}",
            pure_text(&pres.pure_part),
            pres.infinite_generator,
            pres.relations_verified
        );
        s
    }
}

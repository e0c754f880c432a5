//! The action of `⟨θ⟩` on unordered pairs, its orbits, and the integer
//! translation systems `x[θ(p)] = x[p] + d[p]` that arise from conjugating
//! by pure elements.
//!
//! A translation system splits into one independent chain per orbit and is
//! solved by walking the orbit from its representative. It is solvable
//! exactly when `d` sums to zero over every orbit.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::pair::{Pair, PairVector};
use crate::perm::Permutation;

/// `{θ(i), θ(j)}`.
pub fn pair_action(theta: &Permutation, pair: Pair) -> Pair {
    pair.image(theta)
}

/// Orbits of `⟨θ⟩` on pairs. Each orbit starts at its lexicographically
/// least pair and lists `p, θ(p), θ²(p), …`; orbits are sorted by
/// representative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitDecomposition {
    theta: Permutation,
    orbits: Vec<Vec<Pair>>,
    // orbit index of every pair, by pair index
    orbit_of: Vec<usize>,
}

impl OrbitDecomposition {
    pub fn new(theta: &Permutation) -> Self {
        let n = theta.n();
        let mut orbit_of = vec![usize::MAX; crate::pair::pair_count(n)];
        let mut orbits = Vec::new();
        for rep in Pair::all(n) {
            if orbit_of[rep.index(n)] != usize::MAX {
                continue;
            }
            let id = orbits.len();
            let mut orbit = vec![rep];
            orbit_of[rep.index(n)] = id;
            let mut p = pair_action(theta, rep);
            while p != rep {
                orbit_of[p.index(n)] = id;
                orbit.push(p);
                p = pair_action(theta, p);
            }
            orbits.push(orbit);
        }
        OrbitDecomposition {
            theta: theta.clone(),
            orbits,
            orbit_of,
        }
    }

    pub fn theta(&self) -> &Permutation {
        &self.theta
    }

    pub fn n(&self) -> usize {
        self.theta.n()
    }

    pub fn orbits(&self) -> &[Vec<Pair>] {
        &self.orbits
    }

    /// The canonical transversal: the least pair of every orbit.
    pub fn transversal(&self) -> Vec<Pair> {
        self.orbits.iter().map(|o| o[0]).collect()
    }

    pub fn orbit_index(&self, pair: Pair) -> usize {
        self.orbit_of[pair.index(self.n())]
    }

    pub fn representative(&self, pair: Pair) -> Pair {
        self.orbits[self.orbit_index(pair)][0]
    }

    pub fn same_orbit(&self, a: Pair, b: Pair) -> bool {
        self.orbit_index(a) == self.orbit_index(b)
    }
}

pub fn decompose(theta: &Permutation) -> OrbitDecomposition {
    OrbitDecomposition::new(theta)
}

/// Sum of `a` over each orbit, listed in transversal order.
pub fn orbit_sum(a: &PairVector, dec: &OrbitDecomposition) -> Vec<i64> {
    assert_eq!(a.n(), dec.n());
    dec.orbits
        .iter()
        .map(|orbit| orbit.iter().map(|&p| a.get(p)).sum())
        .collect()
}

/// Spreads per-orbit values onto the representatives, zero elsewhere.
pub fn on_transversal(values: &[i64], dec: &OrbitDecomposition) -> PairVector {
    assert_eq!(values.len(), dec.orbits.len());
    let mut v = PairVector::zeros(dec.n());
    for (orbit, &x) in dec.orbits.iter().zip(values) {
        v.set(orbit[0], x);
    }
    v
}

/// Solves `x[θ(p)] = x[p] + d[p]` for every pair `p`, with `x` set to
/// zero on the representatives. `None` when some orbit sum of `d` is
/// non-zero.
pub fn solve_translation_system(theta: &Permutation, d: &PairVector) -> Option<PairVector> {
    let dec = decompose(theta);
    solve_with_free_values(&dec, d, &vec![0; dec.orbits.len()])
}

/// As [`solve_translation_system`], with `x` at the representative of
/// orbit `k` fixed to `free[k]`.
pub fn solve_with_free_values(
    dec: &OrbitDecomposition,
    d: &PairVector,
    free: &[i64],
) -> Option<PairVector> {
    assert_eq!(d.n(), dec.n());
    assert_eq!(free.len(), dec.orbits.len());
    let mut x = PairVector::zeros(dec.n());
    for (orbit, &start) in dec.orbits.iter().zip(free) {
        if orbit.iter().map(|&p| d.get(p)).sum::<i64>() != 0 {
            return None;
        }
        let mut value = start;
        x.set(orbit[0], value);
        for w in orbit.windows(2) {
            value += d.get(w[0]);
            x.set(w[1], value);
        }
    }
    debug_assert!(check_translation_solution(dec.theta(), d, &x));
    Some(x)
}

/// Substitutes `x` back into `x[θ(p)] − x[p] = d[p]`.
pub fn check_translation_solution(theta: &Permutation, d: &PairVector, x: &PairVector) -> bool {
    Pair::all(theta.n()).all(|p| x.get(pair_action(theta, p)) - x.get(p) == d.get(p))
}

/// Solves several translation systems sharing one unknown vector:
/// `x[θ_k(p)] = x[p] + d_k[p]` for all `k` and `p`.
///
/// The constraints form a graph on pairs whose edges carry differences.
/// Each connected component gets its least pair fixed to `free_value`
/// and the rest follows by propagation; `None` when some cycle of
/// constraints does not close up.
pub fn solve_stacked_systems(
    systems: &[(Permutation, PairVector)],
    free_value: i64,
) -> Result<Option<PairVector>> {
    let Some((first, _)) = systems.first() else {
        return Err(Error::Domain("no systems to solve".into()));
    };
    let n = first.n();
    if let Some((theta, d)) = systems.iter().find(|(t, d)| t.n() != n || d.n() != n) {
        return Err(Error::SizeMismatch {
            left: n,
            right: if theta.n() != n { theta.n() } else { d.n() },
        });
    }
    let count = crate::pair::pair_count(n);
    // adjacency: (neighbour, x[neighbour] − x[self])
    let mut edges: Vec<Vec<(Pair, i64)>> = vec![Vec::new(); count];
    for (theta, d) in systems {
        for p in Pair::all(n) {
            let q = pair_action(theta, p);
            edges[p.index(n)].push((q, d.get(p)));
            edges[q.index(n)].push((p, -d.get(p)));
        }
    }
    let mut x = PairVector::zeros(n);
    let mut assigned = vec![false; count];
    let mut queue = VecDeque::new();
    for root in Pair::all(n) {
        if assigned[root.index(n)] {
            continue;
        }
        assigned[root.index(n)] = true;
        x.set(root, free_value);
        queue.push_back(root);
        while let Some(p) = queue.pop_front() {
            for &(q, diff) in &edges[p.index(n)] {
                let want = x.get(p) + diff;
                if assigned[q.index(n)] {
                    if x.get(q) != want {
                        return Ok(None);
                    }
                } else {
                    assigned[q.index(n)] = true;
                    x.set(q, want);
                    queue.push_back(q);
                }
            }
        }
    }
    debug_assert!(systems
        .iter()
        .all(|(t, d)| check_translation_solution(t, d, &x)));
    Ok(Some(x))
}

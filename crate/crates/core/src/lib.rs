//! Computations in the quotient `B_n/[P_n,P_n]` of the braid group by the
//! commutator subgroup of the pure braid group.
//!
//! Elements are stored as a permutation together with a signed crossing
//! count for every unordered pair of strands. On top of that sit orbit
//! decompositions of pairs, a conjugacy decision procedure with explicit
//! witnesses, torsion and canonical-form routines, and constructions of
//! virtually cyclic subgroups.

pub mod centralizer;
pub mod conjugacy;
pub mod element;
pub mod error;
pub mod orbit;
pub mod pair;
pub mod perm;
pub mod vc;
pub mod word;

pub use centralizer::{centralizer, centralizer_size, Centralizer};
pub use conjugacy::{
    are_conjugate, canonical_representative, decide_by_conditions, fiber_coordinates,
    is_finite_by_orbit_sums, order_of, theorem1_normal_form, theorem2_condition_check,
    CanonicalForm, ConjugacyCertificate, FiberCoordinates, NormalForm, Refutation, Verdict,
};
pub use element::{alpha, delta, section_word, Element};
pub use error::{Error, Result};
pub use orbit::{
    decompose, orbit_sum, solve_stacked_systems, solve_translation_system, OrbitDecomposition,
};
pub use pair::{Pair, PairVector};
pub use perm::Permutation;
pub use vc::{
    realize_z3z3_by_z, realize_zp_by_z, verify_table_row, verify_tables, Realization, RowReport,
    TableRow, VcKind, VcPresentation,
};
pub use word::{parse_word, render_word, BraidWord, Generator, Letter};

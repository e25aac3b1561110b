//! Exact-arithmetic calculus for boundary cohomology weights of Picard-type
//! similitude groups.
//!
//! Everything is computed over the character lattice of the maximal torus of
//! `GL(3)^g x GL(1)`: enumeration of the irreducible constituents of exterior
//! powers of the dual standard representation, Kostant cohomology of the
//! unipotent radical, the rank-(g-1) unit-group triviality gate with its
//! binomial multiplicities, degree-indexed Hodge weight profiles, the
//! weight-avoidance decision procedure, and closed-form degeneration weight
//! tables verified against brute-force aggregation.
//!
//! The crate is `no_std` (with `alloc`); all values are immutable after
//! construction and every operation is a pure function, so everything can be
//! shared freely across threads. IO, serialization and the command line live
//! in the companion `picard-weights-cli` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod avoidance;
pub mod boundary;
pub mod character;
pub mod comb;
pub mod constituents;
pub mod degeneration;
pub mod error;
pub mod weyl;

pub use avoidance::{avoids_weights, classify, weight_obstruction, Classification, Verdict};
pub use boundary::{
    boundary_profile, hc_cohomology_multiplicity, hc_triviality, kostant_cohomology,
    kuga_sato_profile, Contribution, WeightProfile,
};
pub use character::{parse_character, KostantParallelWitness, TorusCharacter, Triple};
pub use constituents::{
    enumerate, gl3_dimension, gl3_weight_multiplicity, is_constituent, oracle_decompose,
    ConstituentSet, Decomposition, EnumerationSpec, DEFAULT_SUBSET_BUDGET,
};
pub use degeneration::{
    brute_force_weights, closed_form_weights, compare, compare_degree, unexplained_mismatches,
    CellComparison, ComparisonReport, Discrepancy, LedgerCell, SourcedContribution,
};
pub use error::Error;
pub use weyl::{all_elements, length_counts, Factor, Positivity, WeylElement};

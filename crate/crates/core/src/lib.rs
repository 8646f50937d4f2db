//! Finite-model laboratory for pseudo-BCK- and pseudo-BCI-algebras.
//!
//! Algebras are stored as two `n × n` tables over element indices `0..n`
//! with a distinguished unit. Everything else (order, filters,
//! congruences, the group part, decompositions, model search) is computed
//! from the tables and checked exhaustively.

pub mod algebra;
pub mod congruences;
pub mod decomposition;
pub mod embedding;
pub mod error;
pub mod filters;
mod format;
pub mod iso;
pub mod lattice;
pub mod library;
pub mod report;
pub mod search;
pub mod structure;
pub mod subset;
pub mod term;

pub use algebra::{
    check_arithmetic_laws, check_pseudo_bci, check_pseudo_bck, derive_order, word_arrow,
    word_squig, Algebra, DerivedOrder,
};
pub use error::{Error, Result};
pub use congruences::Partition;
pub use decomposition::{builtin_example, decompose, DecompositionReport};
pub use embedding::{build_f, build_j, check_residuated_pomonoid, embed, ResiduatedPoMonoid};
pub use filters::{all_filters, all_prefilters, filter_generated, is_filter, is_prefilter, prefilter_generated};
pub use iso::{canonical_key, find_isomorphism, is_isomorphism};
pub use lattice::FiniteLattice;
pub use report::{Verdict, VerificationReport, Violation};
pub use search::{enumerate, find_counterexample, Class, SearchSpec};
pub use structure::{group_part, group_to_algebra, group_view, integral_part, Group, GroupView};
pub use subset::Subset;
pub use term::{check_term_identity, Operations, Term};

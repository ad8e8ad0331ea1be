//! Numerical semigroups of fixed multiplicity.
//!
//! Semigroups are stored by Kunz coordinates ([`NumericalSemigroup`]). On
//! top of the basic invariants the crate computes special gaps, enumerates
//! the oversemigroups with the same multiplicity, tests m-irreducibility and
//! finds decompositions into the fewest m-irreducible semigroups. The
//! [`oracle`] module holds brute-force counterparts used for verification.

pub mod decomposition;
pub mod error;
pub mod gapsets;
pub mod irreducibility;
pub mod oracle;
pub mod oversemigroups;
pub mod semigroup;

pub use decomposition::{
    decomposition_bound, min_cover, minimal_decomposition, minimal_m_irreducible_oversemigroups,
    p_set, DecompositionResult,
};
pub use error::{Error, Result};
pub use gapsets::{apery_maximals, pseudo_frobenius, special_gaps, special_gaps_above_m};
pub use irreducibility::{
    canonical_maximal, classify, enumerate_maximal, frobenius_seed, is_irreducible,
    is_m_irreducible, min_genus, ClassificationLabel, FrobeniusPair,
};
pub use oversemigroups::{
    adjoin, coordinate_candidates, oversemigroups, oversemigroups_with, EnumerationOptions,
    Frontier, DEFAULT_LIMIT,
};
pub use semigroup::{AperySet, NumericalSemigroup};

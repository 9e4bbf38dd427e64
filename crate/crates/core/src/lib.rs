//! Skew Schur functions through direct Littlewood-Richardson enumeration, and
//! the Schur-positivity order on fat staircases with hook foundations.
//!
//! The text encoding shared by every entry point writes partitions and
//! compositions as comma-separated parts (`4,1,1`, with `-` for the empty
//! partition) and skew shapes as `outer/inner`.

pub mod error;
pub mod hasse;
pub mod shapes;
pub mod schur;
pub mod tableaux;
pub mod theory;
mod text;

pub use error::{Error, Result};
pub use shapes::{
    complement, contains, delta_fat, delta_fat_rotated, direct_sum, hooks_of_size, is_connected,
    reverse_composition, rotate180, staircase_with_foundation, Composition, Hook, Partition,
    Rectangle, SkewShape,
};
pub use tableaux::{
    content, count_lr_fillings_with_content, enumerate_lr_fillings, is_lattice, is_semistandard,
    lr_coefficient, lr_counts_by_content, r_set, reading_word, shift_join, unique_staircase_filling,
    unshift_join, Content, LrFillings, RSet, Tableau,
};
pub use schur::{
    compare, compare_expansions, is_schur_positive, multiply, product_expansion,
    skew_schur_expansion, skew_schur_expansion_limited, subtract, truncated_complement,
    ComparisonResult, SchurCache, SchurExpansion, Term, Verdict,
};
pub use theory::{
    binomial_count, build_transfer_instance, hook_family, predicted_relation,
    predicted_relation_complement, proof_content_tableau, verify_hook_family, ConditionValues,
    CountSide, FamilyReport, PairRecord, PredictedRelation, ProofFilling, Relation, Rule,
};
pub use hasse::{
    build_order, emit_dot, emit_json, transitive_closure, transitive_reduction, HasseGraph,
    HasseNode,
};

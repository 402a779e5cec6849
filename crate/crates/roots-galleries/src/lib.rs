//! Roots (half-spaces), walls, minimal galleries and pair classification
//! for the rank-3 Coxeter group of type (4,4,4).

pub mod gallery;
pub mod lemmas;
pub mod pairs;
pub mod projgal;
pub mod root;

pub use gallery::{min_galleries, min_galleries_starting, phi, roots_to_depth, Gallery};
pub use lemmas::{lemma_suite_core, LemmaReport};
pub use pairs::{classify_pair, PairClassification, PairKind};
pub use projgal::{
    check_dichotomy, is_simple_in, non_simple_setups, projgal, wall_neighborhood, ProjGallery,
    Setup, WallWalk,
};
pub use root::{
    common_residue, wall_panels, wall_panels_in_residue, wall_residues, Panel, Root, RootRelation,
};

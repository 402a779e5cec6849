//! Named chain constructions over wall groups: residue classification,
//! chamber-set bookkeeping, vertex-word schedules, tree assembly and the
//! decomposition/embedding certificates that tie the chains together.

pub mod build;
pub mod classify;
pub mod csets;
pub mod nonsimple;
pub mod words;

pub use build::{build_named, build_tree, build_vertex, generator_support, NamedConstruction};
pub use classify::{classify_level, gen_pairs, partner, rank2_residues, ResidueClassification, TMember};
pub use csets::{c_level, c_of_member, c_of_residue, c_zero, d_level, prefix_set, ChamberSet};
pub use nonsimple::{hat_phi, hat_phi_residue, lemma_suite_levels, nonsimple_pair, r_eps, NonSimpleRoots};
pub use words::{kind_words, resolve, words_from_frame, Anchor, Frame, Kind, PairFrame, SingleFrame, VertexWord};

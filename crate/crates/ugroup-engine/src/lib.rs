//! Finite 2-groups attached to group elements: one involutive generator
//! per separating root, commutator tails supplied by a blueprint provider,
//! multiplication by collection, and certification that the normal forms
//! exhaust a group of order 2^{l(w)}.  On top of that: prefix subgroups and
//! their embeddings, the index-2 wall subgroup V, and the finite
//! intersection identities used downstream by the amalgam constructions.

mod embed;
mod key_lemma;
mod pc;
mod subgroup;

pub use embed::{embed, EmbeddingReport};
pub use key_lemma::{key_lemma_finite, v_matches_generated_closure, KeyLemmaReport, KeyPart};
pub use pc::{build_ugroup, Bits, Certificate, PcGroup, MAX_GROUP_LEN};
pub use subgroup::{closure, subgroup_for, v_subgroup, SubgroupHandle};

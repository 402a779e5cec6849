//! The canonical generator map between the groups of a prefix pair
//! v ≼ w: u_α goes to u_α.  We verify it preserves every defining
//! relation of the smaller group and lands on a subgroup of full size
//! 2^{l(v)}, which together make it a monomorphism.

use coxeter_core::{CoxeterError, Result};

use crate::pc::PcGroup;
use crate::subgroup::closure;

#[derive(Debug, Clone)]
pub struct EmbeddingReport {
    /// `index_map[i]` = generator index in the big group of small generator `i`.
    pub index_map: Vec<usize>,
    pub relations_preserved: bool,
    pub image_order: u64,
    pub injective: bool,
    pub failures: Vec<String>,
}

/// Check the canonical map from the group of a prefix into the group of the
/// full word.
pub fn embed(small: &PcGroup, big: &PcGroup) -> Result<EmbeddingReport> {
    if !small.word().is_prefix_of(big.word()) {
        return Err(CoxeterError::invalid(format!(
            "{} is not a prefix of {}",
            small.word(),
            big.word()
        )));
    }
    let mut index_map = Vec::with_capacity(small.rank());
    for root in small.gens() {
        let idx = big.index_of(root).ok_or_else(|| {
            CoxeterError::invalid(format!(
                "root {} separates the prefix but not the full word",
                root.serial()
            ))
        })?;
        index_map.push(idx);
    }

    let mut failures = Vec::new();
    for j in 0..small.rank() {
        for i in 0..j {
            // Image of the small tail versus the collected commutator of the
            // image generators, both evaluated in the big group.
            let lhs = big.collect_word(&[index_map[i], index_map[j], index_map[i], index_map[j]]);
            let small_tail = small.tail(i, j);
            let mut letters = Vec::new();
            for t in 0..small.rank() {
                if small_tail & (1 << t) != 0 {
                    letters.push(index_map[t]);
                }
            }
            let rhs = big.collect_word(&letters);
            if lhs != rhs {
                failures.push(format!(
                    "relation of pair ({}, {}) is not preserved",
                    i + 1,
                    j + 1
                ));
            }
        }
    }
    let relations_preserved = failures.is_empty();
    let image = closure(big, &index_map);
    let image_order = image.order();
    let injective = relations_preserved && image_order == small.order();
    Ok(EmbeddingReport {
        index_map,
        relations_preserved,
        image_order,
        injective,
        failures,
    })
}

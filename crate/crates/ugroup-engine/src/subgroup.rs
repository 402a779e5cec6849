//! Subgroup closures inside a finite 2-group, and the index-2 subgroup
//! generated by the two one-step extensions below a rank-2 wall.

use std::collections::BTreeSet;

use coxeter_core::{longest_element, CoxeterError, Gen, GenSet, GroupElement, Result};
use roots_galleries::{phi, Root};

use crate::pc::{Bits, PcGroup};

/// A subgroup of a `PcGroup`, stored as its full (sorted) member set.
#[derive(Debug, Clone)]
pub struct SubgroupHandle {
    generator_roots: Vec<Root>,
    members: Vec<Bits>,
}

impl SubgroupHandle {
    /// Wrap an explicit member set; no root bookkeeping.
    pub fn from_members(mut members: Vec<Bits>) -> SubgroupHandle {
        members.sort_unstable();
        members.dedup();
        SubgroupHandle {
            generator_roots: Vec::new(),
            members,
        }
    }

    pub fn generator_roots(&self) -> &[Root] {
        &self.generator_roots
    }

    pub fn members(&self) -> &[Bits] {
        &self.members
    }

    pub fn order(&self) -> u64 {
        self.members.len() as u64
    }

    pub fn contains(&self, x: Bits) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn index_in(&self, g: &PcGroup) -> u64 {
        g.order() / self.order()
    }

    /// Intersection as plain member sets; both handles must live in the
    /// same parent group.
    pub fn intersect(&self, other: &SubgroupHandle) -> SubgroupHandle {
        let members: Vec<Bits> = self
            .members
            .iter()
            .copied()
            .filter(|x| other.contains(*x))
            .collect();
        SubgroupHandle {
            generator_roots: Vec::new(),
            members,
        }
    }

    pub fn same_members(&self, other: &SubgroupHandle) -> bool {
        self.members == other.members
    }
}

/// Closure of a set of generator indices under right multiplication.
pub fn closure(g: &PcGroup, generators: &[usize]) -> SubgroupHandle {
    let mut members: BTreeSet<Bits> = BTreeSet::new();
    members.insert(0);
    let mut frontier: Vec<Bits> = vec![0];
    while let Some(x) = frontier.pop() {
        for &gen in generators {
            let y = g.rmul(x, gen);
            if members.insert(y) {
                frontier.push(y);
            }
        }
    }
    SubgroupHandle {
        generator_roots: generators.iter().map(|&i| g.gens()[i].clone()).collect(),
        members: members.into_iter().collect(),
    }
}

/// Closure of the subgroup attached to a smaller element `v`: its
/// generators are the roots separating `v` from the identity.
pub fn subgroup_for(g: &PcGroup, v: &GroupElement) -> Result<SubgroupHandle> {
    if !v.is_prefix_of(g.word()) {
        return Err(CoxeterError::invalid(format!(
            "{} is not a prefix of {}",
            v, g.word()
        )));
    }
    let mut indices = Vec::with_capacity(v.length());
    for root in phi(v) {
        let idx = g.index_of(&root).ok_or_else(|| {
            CoxeterError::invalid(format!(
                "separating root {} of the prefix is not a generator",
                root.serial()
            ))
        })?;
        indices.push(idx);
    }
    Ok(closure(g, &indices))
}

/// The subgroup `V` of the group at `w = w_R · r_{s,t}` generated by the
/// two one-step extensions of the wall projection `w_R`.  Errors unless the
/// closure has index exactly 2, the hallmark of local shift invariance at
/// the residue.
pub fn v_subgroup(g: &PcGroup, s: Gen, t: Gen) -> Result<SubgroupHandle> {
    let w = g.word();
    let r_j = longest_element(GenSet::pair(s, t))?;
    let w_r = w.mul(&r_j);
    if w_r.length() + 4 != w.length() {
        return Err(CoxeterError::invalid(format!(
            "{} does not end with the full {}{}-wall",
            w,
            s.letter(),
            t.letter()
        )));
    }
    let ws = w_r.mul_gen(s);
    let wt = w_r.mul_gen(t);
    debug_assert_eq!(ws.length(), w_r.length() + 1);
    debug_assert_eq!(wt.length(), w_r.length() + 1);

    let mut indices = Vec::new();
    for root in phi(&ws).into_iter().chain(phi(&wt)) {
        let idx = g.index_of(&root).ok_or_else(|| {
            CoxeterError::invalid(format!(
                "generating root {} missing from the ambient group",
                root.serial()
            ))
        })?;
        if !indices.contains(&idx) {
            indices.push(idx);
        }
    }
    let handle = closure(g, &indices);
    let index = handle.index_in(g);
    if index != 2 {
        return Err(CoxeterError::invalid(format!(
            "V has index {} in the wall group of {}, expected 2",
            index, w
        )));
    }
    Ok(handle)
}

#[cfg(test)]
mod tests {
    use super::*;
    use blueprints::Blueprint;
    use crate::pc::build_ugroup;

    fn el(word: &str) -> GroupElement {
        GroupElement::parse(word).unwrap()
    }

    #[test]
    fn octagon_v_subgroup_has_order_eight() {
        let p = Blueprint::kac_moody();
        let g = build_ugroup(&p, &el("stst")).unwrap();
        let v = v_subgroup(&g, Gen::S, Gen::T).unwrap();
        assert_eq!(v.order(), 8);
        assert_eq!(v.index_in(&g), 2);
        // The two middle wall generators only enter through their product.
        assert!(!v.contains(0b0010));
        assert!(!v.contains(0b0100));
        assert!(v.contains(0b0110));
    }

    #[test]
    fn abelian_wall_group_fails_the_index_two_check() {
        // Without the extreme-pair commutator the closure of the two
        // one-step extensions is only order 4: index 4, reported loudly.
        let p = Blueprint::empty();
        let g = build_ugroup(&p, &el("stst")).unwrap();
        let err = v_subgroup(&g, Gen::S, Gen::T).unwrap_err();
        assert!(err.to_string().contains("index 4"));
    }

    #[test]
    fn inflated_wall_group_fails_the_index_two_check() {
        // Tails that leak single middle letters let V swallow the whole
        // group: index 1, reported loudly.
        let p = Blueprint::kac_moody();
        let base = build_ugroup(&p, &el("stst")).unwrap();
        let n = base.rank();
        let mut tails = vec![0u16; n * n];
        tails[3 * n] = base.tail(0, 3);
        tails[2 * n] = 0b0010;
        tails[3 * n + 1] = 0b0100;
        let g = crate::pc::PcGroup::from_tails(&el("stst"), tails).unwrap();
        let err = v_subgroup(&g, Gen::S, Gen::T).unwrap_err();
        assert!(err.to_string().contains("index 1"));
    }

    #[test]
    fn wall_precondition_is_checked() {
        let p = Blueprint::kac_moody();
        let g = build_ugroup(&p, &el("sts")).unwrap();
        assert!(v_subgroup(&g, Gen::S, Gen::T).is_err());
    }

    #[test]
    fn prefix_subgroup_order_matches_prefix_length() {
        let p = Blueprint::kac_moody();
        let g = build_ugroup(&p, &el("ststrs")).unwrap();
        let h = subgroup_for(&g, &el("st")).unwrap();
        assert_eq!(h.order(), 4);
        let full = subgroup_for(&g, &el("ststrs")).unwrap();
        assert_eq!(full.order(), g.order());
    }

    #[test]
    fn non_prefix_is_rejected() {
        let p = Blueprint::kac_moody();
        let g = build_ugroup(&p, &el("stst")).unwrap();
        assert!(subgroup_for(&g, &el("rs")).is_err());
    }
}

//! Prefix-order chamber sets: the downward-closed set below a chamber, the
//! sets attached to rank-2 residues, and the cumulative level sets.

use std::collections::BTreeSet;

use coxeter_core::{r_pair, Gen, GroupElement, Residue, Result};

use crate::classify::{classify_level, gen_pairs, TMember};

pub type ChamberSet = BTreeSet<GroupElement>;

/// All chambers below `w` in the prefix order.
pub fn prefix_set(w: &GroupElement) -> ChamberSet {
    let mut out = ChamberSet::new();
    let mut frontier = vec![w.clone()];
    out.insert(w.clone());
    while let Some(x) = frontier.pop() {
        for s in x.right_descents() {
            let y = x.mul_gen(s);
            if out.insert(y.clone()) {
                frontier.push(y);
            }
        }
    }
    out
}

/// Base set: for every generator pair `{a, b}` with third letter `c`, the
/// chambers below `r_{a,b}` and below `c r_{a,b}`.
pub fn c_zero() -> ChamberSet {
    let mut out = ChamberSet::new();
    for (a, b) in gen_pairs() {
        let c = Gen::third(a, b);
        let long = r_pair(a, b);
        out.extend(prefix_set(&long));
        out.extend(prefix_set(&long.lmul_gen(c)));
    }
    out
}

/// The four maximal chambers of the set attached to a rank-2 residue of type
/// `{s, t}` with gate `w`: `w s t r_{r,s}`, `w r_{s,t} r t r`, `w r_{s,t} r s r`
/// and `w t s r_{r,t}`.
pub fn c_max_words(res: &Residue) -> Result<[GroupElement; 4]> {
    let (s, t) = res.typ().two()?;
    let r = Gen::third(s, t);
    let w = res.gate();
    let rj = r_pair(s, t);
    Ok([
        w.mul_gen(s).mul_gen(t).mul(&r_pair(r, s)),
        w.mul(&rj).mul_gen(r).mul_gen(t).mul_gen(r),
        w.mul(&rj).mul_gen(r).mul_gen(s).mul_gen(r),
        w.mul_gen(t).mul_gen(s).mul(&r_pair(r, t)),
    ])
}

/// The chamber set attached to a rank-2 residue.
pub fn c_of_residue(res: &Residue) -> Result<ChamberSet> {
    let mut out = ChamberSet::new();
    for m in c_max_words(res)? {
        out.extend(prefix_set(&m));
    }
    Ok(out)
}

/// The chamber set attached to a classification entry (union over its
/// residues).
pub fn c_of_member(m: &TMember) -> Result<ChamberSet> {
    let mut out = ChamberSet::new();
    for res in m.residues() {
        out.extend(c_of_residue(res)?);
    }
    Ok(out)
}

/// Cumulative level set: level 0 is the base set, level `i + 1` adds the set
/// of every classification entry of gate length `i`.
pub fn c_level(i: usize) -> Result<ChamberSet> {
    let mut out = c_zero();
    for j in 0..i {
        for m in classify_level(j)?.members() {
            out.extend(c_of_member(&m)?);
        }
    }
    Ok(out)
}

/// Wall words attached to a level set: `w r_{s,t}` for every rank-2 gate `w`
/// of type `{s, t}` with both `w s` and `w t` in the set.
pub fn d_level(c_i: &ChamberSet) -> ChamberSet {
    let mut out = ChamberSet::new();
    for w in c_i {
        for (a, b) in gen_pairs() {
            let wa = w.mul_gen(a);
            let wb = w.mul_gen(b);
            if wa.length() == w.length() + 1
                && wb.length() == w.length() + 1
                && c_i.contains(&wa)
                && c_i.contains(&wb)
            {
                out.insert(w.mul(&r_pair(a, b)));
            }
        }
    }
    out
}

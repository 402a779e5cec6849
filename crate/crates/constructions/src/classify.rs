//! Rank-2 residues sorted by gate length, split into the solitary class and
//! the paired class.
//!
//! A residue whose gate `w` has length `i` extends in two ways past the third
//! generator `r`: either both `l(w s r)` and `l(w t r)` equal `i + 2`
//! (solitary), or exactly one of them drops back to `i` and the residue is
//! paired with another rank-2 residue of the same gate length.

use std::collections::HashSet;

use coxeter_core::{sphere, CoxeterError, Gen, GenSet, GroupElement, Residue, Result, GENS};
use serde::Serialize;

/// The three unordered generator pairs.
pub fn gen_pairs() -> [(Gen, Gen); 3] {
    [
        (GENS[0], GENS[1]),
        (GENS[0], GENS[2]),
        (GENS[1], GENS[2]),
    ]
}

fn res_key(res: &Residue) -> (GroupElement, String) {
    (res.gate().clone(), res.typ().to_string())
}

/// All rank-2 residues whose gate has length `i`, sorted by (gate, type).
pub fn rank2_residues(i: usize) -> Result<Vec<Residue>> {
    let mut out = Vec::new();
    for w in sphere(i)? {
        for (a, b) in gen_pairs() {
            if w.mul_gen(a).length() == i + 1 && w.mul_gen(b).length() == i + 1 {
                out.push(Residue::of(&w, GenSet::pair(a, b)));
            }
        }
    }
    out.sort_by_key(res_key);
    Ok(out)
}

/// The residue paired with `res`, or `None` when `res` is solitary.
///
/// For a residue of type `{s, t}` with gate `w` of length `i` and third
/// generator `r`, the two extension lengths `l(w s r)`, `l(w t r)` form the
/// set `{i + 2}` (solitary) or `{i, i + 2}`.  In the second case the partner
/// is the `{v, r}`-residue at `w u`, where `u` is the letter with
/// `l(w u r) = i`.
pub fn partner(res: &Residue) -> Result<Option<Residue>> {
    let (s, t) = res.typ().two()?;
    let r = Gen::third(s, t);
    let w = res.gate();
    let i = w.length();
    let lsr = w.mul_gen(s).mul_gen(r).length();
    let ltr = w.mul_gen(t).mul_gen(r).length();
    if lsr == i + 2 && ltr == i + 2 {
        return Ok(None);
    }
    let (u, v) = if lsr == i && ltr == i + 2 {
        (s, t)
    } else if ltr == i && lsr == i + 2 {
        (t, s)
    } else {
        return Err(CoxeterError::invalid(format!(
            "extension lengths at {res} are ({lsr}, {ltr}); expected {{{}}} or {{{}, {}}}",
            i + 2,
            i,
            i + 2
        )));
    };
    let p = Residue::of(&w.mul_gen(u), GenSet::pair(v, r));
    if p.gate().length() != i {
        return Err(CoxeterError::invalid(format!(
            "partner of {res} has gate length {}, expected {i}",
            p.gate().length()
        )));
    }
    Ok(Some(p))
}

/// One entry of the level-`i` classification.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum TMember {
    Single(Residue),
    Pair(Residue, Residue),
}

impl TMember {
    pub fn label(&self) -> String {
        match self {
            TMember::Single(res) => res.to_string(),
            TMember::Pair(a, b) => format!("{{{a}, {b}}}"),
        }
    }

    pub fn residues(&self) -> Vec<&Residue> {
        match self {
            TMember::Single(res) => vec![res],
            TMember::Pair(a, b) => vec![a, b],
        }
    }
}

/// The rank-2 residues of gate length `i`, split into classes.
#[derive(Debug, Clone, Serialize)]
pub struct ResidueClassification {
    pub i: usize,
    pub t1: Vec<Residue>,
    pub t2: Vec<(Residue, Residue)>,
}

impl ResidueClassification {
    pub fn members(&self) -> Vec<TMember> {
        let mut out: Vec<TMember> = self
            .t1
            .iter()
            .cloned()
            .map(TMember::Single)
            .collect();
        out.extend(
            self.t2
                .iter()
                .cloned()
                .map(|(a, b)| TMember::Pair(a, b)),
        );
        out
    }

    pub fn total_residues(&self) -> usize {
        self.t1.len() + 2 * self.t2.len()
    }
}

/// Classify all rank-2 residues of gate length `i`.
///
/// Checks that the pairing is an involution and that paired residues share
/// exactly one generator; each pair is listed once, smaller key first.
pub fn classify_level(i: usize) -> Result<ResidueClassification> {
    let all = rank2_residues(i)?;
    let mut t1 = Vec::new();
    let mut t2 = Vec::new();
    let mut emitted: HashSet<String> = HashSet::new();
    for res in &all {
        match partner(res)? {
            None => t1.push(res.clone()),
            Some(p) => {
                if partner(&p)? != Some(res.clone()) {
                    return Err(CoxeterError::invalid(format!(
                        "pairing is not an involution at {res}"
                    )));
                }
                let shared: Vec<Gen> = res
                    .typ()
                    .iter()
                    .filter(|g| p.typ().contains(*g))
                    .collect();
                if shared.len() != 1 {
                    return Err(CoxeterError::invalid(format!(
                        "paired residues {res} and {p} share {} letters, expected 1",
                        shared.len()
                    )));
                }
                let pair = if res_key(res) <= res_key(&p) {
                    (res.clone(), p.clone())
                } else {
                    (p.clone(), res.clone())
                };
                if emitted.insert(format!("{}|{}", pair.0, pair.1)) {
                    t2.push(pair);
                }
            }
        }
    }
    t2.sort_by_key(|(a, _)| res_key(a));
    Ok(ResidueClassification { i, t1, t2 })
}

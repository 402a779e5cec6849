//! Residues (cosets x W_J), gates and projections.

use crate::element::GroupElement;
use crate::error::CoxeterError;
use crate::gens::{Gen, GenSet};
use serde::{Deserialize, Serialize};
use std::fmt;

/// The residue R_J(x) = x W_J, canonically identified by its type J and its
/// gate proj_R(1), the unique element of minimal length in the coset.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct Residue {
    typ: GenSet,
    gate: GroupElement,
}

impl Residue {
    /// The residue of type `typ` containing `x`.
    pub fn of(x: &GroupElement, typ: GenSet) -> Residue {
        Residue {
            typ,
            gate: coset_gate(x, typ),
        }
    }

    pub fn typ(&self) -> GenSet {
        self.typ
    }

    /// proj_R(1), written w_R in the construction layer.
    pub fn gate(&self) -> &GroupElement {
        &self.gate
    }

    pub fn contains(&self, x: &GroupElement) -> bool {
        coset_gate(x, self.typ) == self.gate
    }

    /// proj_R(x): the chamber of R closest to x; every minimal gallery from
    /// x into R passes through it.
    pub fn projection(&self, x: &GroupElement) -> GroupElement {
        let u = coset_gate(&x.inverse().mul(&self.gate), self.typ);
        x.mul(&u)
    }

    /// All chambers of the residue. Only valid for spherical types
    /// (rank <= 2 here; the rank-3 residue is the whole infinite group).
    pub fn chambers(&self) -> Result<Vec<GroupElement>, CoxeterError> {
        if self.typ.len() >= 3 {
            return Err(CoxeterError::invalid(
                "rank-3 residue is infinite; cannot enumerate",
            ));
        }
        let mut out = vec![self.gate.clone()];
        let mut frontier = vec![self.gate.clone()];
        while let Some(w) = frontier.pop() {
            for g in self.typ.iter() {
                let n = w.mul_gen(g);
                if !out.contains(&n) {
                    out.push(n.clone());
                    frontier.push(n);
                }
            }
        }
        out.sort();
        Ok(out)
    }

    /// Spherical rank-2 residues have 8 chambers in this group (m = 4).
    pub fn is_rank2(&self) -> bool {
        self.typ.len() == 2
    }

    /// Parse "st:w" (type letters, then gate word; "1" or "" = identity).
    pub fn parse(s: &str) -> Result<Residue, CoxeterError> {
        let (typ_s, word_s) = s
            .split_once(':')
            .ok_or_else(|| CoxeterError::invalid("residue syntax is '<type>:<word>'"))?;
        let typ: GenSet = typ_s.parse()?;
        if typ.is_empty() {
            return Err(CoxeterError::invalid("residue type must be nonempty"));
        }
        let x = GroupElement::parse(word_s)?;
        Ok(Residue::of(&x, typ))
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.typ, self.gate)
    }
}

/// Gate (minimal-length element) of the coset x W_J.
fn coset_gate(x: &GroupElement, typ: GenSet) -> GroupElement {
    let mut w = x.clone();
    'outer: loop {
        for g in typ.iter() {
            let n = w.mul_gen(g);
            if n.length() < w.length() {
                w = n;
                continue 'outer;
            }
        }
        return w;
    }
}

/// Longest element r_J of a standard rank-2 parabolic: the alternating word
/// of length 4. Rank 1 gives the generator itself.
pub fn longest_element(typ: GenSet) -> Result<GroupElement, CoxeterError> {
    match typ.len() {
        1 => Ok(GroupElement::gen(typ.iter().next().unwrap())),
        2 => {
            let (a, b) = typ.two()?;
            Ok(GroupElement::from_word(&[a, b, a, b]))
        }
        _ => Err(CoxeterError::invalid(
            "longest element exists only for spherical types (rank <= 2)",
        )),
    }
}

/// Convenience: the longest element of the parabolic on {a, b}.
pub fn r_pair(a: Gen, b: Gen) -> GroupElement {
    longest_element(GenSet::pair(a, b)).unwrap()
}

//! Pair classification and closed root intervals.
//!
//! For roots a, b the closed interval is
//!   [a, b] = { roots c : a∩b ⊆ c  and  (-a)∩(-b) ⊆ -c },
//! nonempty exactly for prenilpotent pairs (a∩b and (-a)∩(-b) both
//! inhabited).  Both membership conditions are decided exactly: crossing
//! pairs localise to the unique rank-2 residue both walls pass through,
//! nested pairs reduce to pairwise wall containments.

use coxeter_core::{CoxeterError, GroupElement, Mat3, Result};
use serde::Serialize;

use crate::root::{common_residue, Root, RootRelation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum PairKind {
    Equal,
    Opposite,
    /// Walls meet; `order` of the product of the two reflections (2 or 4).
    Crossing { order: u8 },
    /// One root properly contains the other.
    Nested { first_in_second: bool },
    /// The union is all of W (complements disjoint); not prenilpotent.
    CoNested,
    /// The roots are disjoint; not prenilpotent.
    Disjoint,
}

#[derive(Clone, Debug, Serialize)]
pub struct PairClassification {
    #[serde(flatten)]
    pub kind: PairKind,
    pub prenilpotent: bool,
    /// Closed interval, listed from the first argument to the second.
    /// `None` exactly when the pair is not prenilpotent.
    pub interval: Option<Vec<Root>>,
}

impl PairClassification {
    /// Interval without its endpoints.
    pub fn open_interval(&self) -> Option<&[Root]> {
        self.interval
            .as_deref()
            .map(|v| if v.len() >= 2 { &v[1..v.len() - 1] } else { &[] })
    }
}

pub fn classify_pair(a: &Root, b: &Root) -> Result<PairClassification> {
    let (kind, interval) = match a.relation(b)? {
        RootRelation::Equal => (PairKind::Equal, Some(vec![a.clone()])),
        RootRelation::Opposite => (PairKind::Opposite, None),
        RootRelation::Crossing { order } => (
            PairKind::Crossing { order },
            Some(crossing_interval(a, b)?),
        ),
        RootRelation::FirstInSecond => (
            PairKind::Nested {
                first_in_second: true,
            },
            Some(nested_interval(a, b)?),
        ),
        RootRelation::SecondInFirst => (
            PairKind::Nested {
                first_in_second: false,
            },
            Some(nested_interval(b, a).map(|mut v| {
                v.reverse();
                v
            })?),
        ),
        RootRelation::CoNested => (PairKind::CoNested, None),
        RootRelation::Disjoint => (PairKind::Disjoint, None),
    };
    Ok(PairClassification {
        kind,
        prenilpotent: interval.is_some(),
        interval,
    })
}

/// Interval of a crossing pair, computed inside the unique rank-2 residue
/// both walls pass through.  Membership there decides membership globally:
/// projection onto the residue preserves sides of every wall through it.
fn crossing_interval(a: &Root, b: &Root) -> Result<Vec<Root>> {
    let bound = a.depth()? + b.depth()? + 4;
    let res = common_residue(a, b, bound)?.ok_or_else(|| {
        CoxeterError::invalid("crossing walls: no common residue within walk bound")
    })?;
    let chambers = res.chambers()?;
    let invs: Vec<Mat3> = chambers.iter().map(GroupElement::inverse_matrix).collect();
    let mask = |root: &Root| -> u32 {
        invs.iter()
            .enumerate()
            .filter(|(_, inv)| root.contains_inv(inv))
            .map(|(i, _)| 1u32 << i)
            .sum()
    };
    let full: u32 = (1 << chambers.len()) - 1;
    let inside = mask(a) & mask(b);
    let outside = !mask(a) & !mask(b) & full;
    debug_assert!(inside != 0 && outside != 0, "crossing pair quadrants");
    // The walls through the residue, both orientations each.
    let mut oriented: Vec<(Root, u32)> = Vec::new();
    for c in &chambers {
        for g in res.typ().iter() {
            let root = Root::simple(g).act(c);
            if oriented.iter().all(|(r, _)| *r != root) {
                let m = mask(&root);
                oriented.push((root.neg(), m ^ full));
                oriented.push((root, m));
            }
        }
    }
    let mut members: Vec<(i32, Root)> = oriented
        .into_iter()
        .filter(|(_, m)| inside & !m == 0 && outside & m == 0)
        .map(|(root, m)| {
            let key = (m & mask(b)).count_ones() as i32 - (m & mask(a)).count_ones() as i32;
            (key, root)
        })
        .collect();
    members.sort_by_key(|(key, _)| *key);
    debug_assert!(
        members.windows(2).all(|w| w[0].0 < w[1].0),
        "interval order must be strict"
    );
    debug_assert_eq!(members.first().map(|(_, r)| r), Some(a));
    debug_assert_eq!(members.last().map(|(_, r)| r), Some(b));
    Ok(members.into_iter().map(|(_, root)| root).collect())
}

/// Interval of a nested pair a ⊆ b: the roots c with a ⊆ c ⊆ b.  Candidates
/// are the walls separating a chamber just inside `a` from one just outside
/// `b`; each candidate is tested by exact wall containment.
fn nested_interval(a: &Root, b: &Root) -> Result<Vec<Root>> {
    let pa = a.abs().distinguished_panel()?;
    let pb = b.abs().distinguished_panel()?;
    let u_in = pa
        .chambers()
        .into_iter()
        .find(|c| a.contains(c))
        .expect("one side of a wall panel lies in the root");
    let u_out = pb
        .chambers()
        .into_iter()
        .find(|c| !b.contains(c))
        .expect("one side of a wall panel lies outside the root");
    debug_assert!(b.contains(&u_in), "wall chambers of a lie inside b");
    debug_assert!(!a.contains(&u_out), "chambers beyond b lie outside a");
    let mut out = Vec::new();
    let diff = u_in.inverse().mul(&u_out);
    let m_in = u_in.matrix();
    let mut prefix = Mat3::IDENTITY;
    for g in diff.word() {
        // Root crossed at this step, oriented to contain u_in.
        let c = Root::simple(*g).act_mat(&m_in.mul(&prefix));
        prefix = prefix.mul(&Mat3::reflection(*g));
        if a.is_subset(&c)? && c.is_subset(b)? {
            out.push(c);
        }
    }
    debug_assert_eq!(out.first(), Some(a));
    debug_assert_eq!(out.last(), Some(b));
    Ok(out)
}

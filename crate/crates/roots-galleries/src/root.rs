//! Roots as half-spaces of the chamber graph.
//!
//! A root is stored by the vector of its wall's reflection, oriented so that
//! the root is the set `{ w : sign(w^{-1} v) > 0 }`.  The identity chamber
//! lies in a root iff the vector is positive.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use coxeter_core::{
    ball, matrix, two_b, vec_sign, CoxeterError, Gen, GenSet, GroupElement, Mat3, Residue, Result,
    Ring2, Vec3, GENS,
};

/// A half-space of the chamber graph, determined by an oriented wall vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Root {
    vec: Vec3,
}

type VecKey = [(i64, i64); 3];

fn key_of(v: &Vec3) -> VecKey {
    [(v[0].a, v[0].b), (v[1].a, v[1].b), (v[2].a, v[2].b)]
}

fn wall_cache() -> &'static Mutex<HashMap<VecKey, (GroupElement, Gen)>> {
    static CACHE: OnceLock<Mutex<HashMap<VecKey, (GroupElement, Gen)>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Search cap for expressing a root as `v(alpha_g)`; such an expression with
/// `len(v) = depth(alpha) - 1` always exists, so this caps the root depth.
const PAIR_SEARCH_RADIUS: usize = 24;

impl Root {
    /// The simple root whose wall separates the identity from `g`.
    pub fn simple(g: Gen) -> Root {
        Root {
            vec: matrix::basis(g),
        }
    }

    pub fn from_vec(vec: Vec3) -> Result<Root> {
        if vec_sign(&vec) == 0 {
            return Err(CoxeterError::invalid("zero vector is not a root"));
        }
        Ok(Root { vec })
    }

    pub fn vec(&self) -> &Vec3 {
        &self.vec
    }

    /// `w(alpha)`.
    pub fn act(&self, w: &GroupElement) -> Root {
        self.act_mat(&w.matrix())
    }

    pub fn act_mat(&self, m: &Mat3) -> Root {
        Root {
            vec: m.apply(&self.vec),
        }
    }

    pub fn neg(&self) -> Root {
        Root {
            vec: [-self.vec[0], -self.vec[1], -self.vec[2]],
        }
    }

    /// Positive roots contain the identity chamber.
    pub fn is_positive(&self) -> bool {
        vec_sign(&self.vec) > 0
    }

    /// The positive member of `{alpha, -alpha}`.
    pub fn abs(&self) -> Root {
        if self.is_positive() {
            self.clone()
        } else {
            self.neg()
        }
    }

    /// Chamber membership: `w` lies in the half-space `alpha`.
    pub fn contains(&self, w: &GroupElement) -> bool {
        self.contains_inv(&w.inverse_matrix())
    }

    /// Membership given a precomputed inverse matrix (hot path for sweeps).
    pub fn contains_inv(&self, w_inv: &Mat3) -> bool {
        vec_sign(&w_inv.apply(&self.vec)) > 0
    }

    /// Minimal expression `alpha = v(alpha_g)` with ShortLex-least `v`.
    /// For positive roots `len(v) = depth - 1`; for negative `len(v) = depth`.
    pub fn canonical_pair(&self) -> Result<(GroupElement, Gen)> {
        let key = key_of(&self.vec);
        if let Some((v, g)) = wall_cache().lock().unwrap().get(&key) {
            return Ok((v.clone(), *g));
        }
        for radius in 0..=PAIR_SEARCH_RADIUS {
            for w in coxeter_core::sphere(radius)? {
                let m = w.matrix();
                for g in GENS {
                    if m.col(g) == self.vec {
                        wall_cache().lock().unwrap().insert(key, (w.clone(), g));
                        return Ok((w, g));
                    }
                }
            }
        }
        Err(CoxeterError::limit(
            "root expression search radius",
            PAIR_SEARCH_RADIUS + 1,
            PAIR_SEARCH_RADIUS,
        ))
    }

    /// Depth: least length of a chamber outside the positive root
    /// (equivalently, inside the negative one).
    pub fn depth(&self) -> Result<usize> {
        let (v, _) = self.abs().canonical_pair()?;
        Ok(v.length() + 1)
    }

    /// The reflection across the wall of this root.
    pub fn reflection(&self) -> Result<GroupElement> {
        let (v, g) = self.canonical_pair()?;
        Ok(v.mul(&GroupElement::gen(g)).mul(&v.inverse()))
    }

    /// The unique wall panel whose gate is at distance `depth - 1` from the
    /// identity.  Returned for the positive member of the wall pair.
    pub fn distinguished_panel(&self) -> Result<Panel> {
        let (v, g) = self.abs().canonical_pair()?;
        Ok(Panel { gate: v, dir: g })
    }

    /// `"word:g"` with `word` the canonical expression chamber.
    pub fn serial(&self) -> String {
        match self.canonical_pair() {
            Ok((v, g)) => format!("{}:{}", v, g),
            Err(_) => "<deep root>".to_owned(),
        }
    }

    pub fn parse(text: &str) -> Result<Root> {
        let (w, g) = text
            .split_once(':')
            .ok_or_else(|| CoxeterError::invalid(format!("root `{text}`: expected `word:gen`")))?;
        let v: GroupElement = w.parse()?;
        let g: Gen = g.parse()?;
        Ok(Root::simple(g).act(&v))
    }

    /// Exact subset test on the full (infinite) chamber set.
    ///
    /// Equal or opposite walls are immediate.  Crossing walls (|2B| < 2)
    /// leave all four sign patterns inhabited, so no containment.  Disjoint
    /// walls (|2B| >= 2) are decided by which of the two distinguished wall
    /// panels lies inside the other root.
    pub fn is_subset(&self, other: &Root) -> Result<bool> {
        match self.relation(other)? {
            RootRelation::Equal => Ok(true),
            RootRelation::Opposite | RootRelation::Crossing { .. } => Ok(false),
            RootRelation::FirstInSecond => Ok(true),
            _ => Ok(false),
        }
    }

    /// Classify the wall geometry of an ordered root pair.
    pub fn relation(&self, other: &Root) -> Result<RootRelation> {
        if self.vec == other.vec {
            return Ok(RootRelation::Equal);
        }
        if self.vec == other.neg().vec {
            return Ok(RootRelation::Opposite);
        }
        let c = two_b(&self.vec, &other.vec);
        if c.signum() == 0 {
            return Ok(RootRelation::Crossing { order: 2 });
        }
        let abs = c.abs();
        if abs < Ring2::new(2, 0) {
            debug_assert_eq!(abs, Ring2::SQRT2, "pairings lie in {{0, ±√2, ...}}");
            return Ok(RootRelation::Crossing { order: 4 });
        }
        // Distinct non-crossing walls: test each wall's panel against the
        // other root.  Both chambers of a panel agree about any root whose
        // wall is a different wall.
        let in_other = |a: &Root, b: &Root| -> Result<bool> {
            let p = a.distinguished_panel()?;
            let near = b.contains(&p.gate());
            debug_assert_eq!(near, b.contains(&p.far()), "panel split by foreign wall");
            Ok(near)
        };
        let self_in_other = in_other(self, other)?;
        let other_in_self = in_other(other, self)?;
        Ok(match (self_in_other, other_in_self) {
            (true, false) => RootRelation::FirstInSecond,
            (false, true) => RootRelation::SecondInFirst,
            (true, true) => RootRelation::CoNested,
            (false, false) => RootRelation::Disjoint,
        })
    }
}

impl fmt::Debug for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Root[{}, {}, {}]",
            self.vec[0], self.vec[1], self.vec[2]
        )
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.serial())
    }
}

impl serde::Serialize for Root {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.serial())
    }
}

impl<'de> serde::Deserialize<'de> for Root {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Root, D::Error> {
        let text = String::deserialize(d)?;
        Root::parse(&text).map_err(serde::de::Error::custom)
    }
}

/// Geometry of an ordered pair of walls/half-spaces.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RootRelation {
    Equal,
    Opposite,
    /// Walls meet; the product of the two reflections has this order.
    Crossing { order: u8 },
    FirstInSecond,
    SecondInFirst,
    /// Complements are disjoint: the union of the two roots is everything.
    CoNested,
    /// The two half-spaces are disjoint.
    Disjoint,
}

/// A panel, stored as its gate chamber plus the direction that crosses it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Panel {
    gate: GroupElement,
    dir: Gen,
}

impl Panel {
    pub fn new(gate: GroupElement, dir: Gen) -> Panel {
        Panel { gate, dir }
    }

    /// Canonicalise an arbitrary chamber pair `{x, x·g}`: gate first.
    pub fn of(x: &GroupElement, dir: Gen) -> Panel {
        let other = x.mul_gen(dir);
        if other.length() < x.length() {
            Panel { gate: other, dir }
        } else {
            Panel {
                gate: x.clone(),
                dir,
            }
        }
    }

    pub fn gate(&self) -> GroupElement {
        self.gate.clone()
    }

    pub fn far(&self) -> GroupElement {
        self.gate.mul_gen(self.dir)
    }

    pub fn dir(&self) -> Gen {
        self.dir
    }

    pub fn chambers(&self) -> [GroupElement; 2] {
        [self.gate(), self.far()]
    }

    /// The root containing the gate whose wall is this panel's wall.
    pub fn root_toward_gate(&self) -> Root {
        // w(alpha_g) always contains the chamber w.
        Root::simple(self.dir).act(&self.gate)
    }

    /// The two rank-2 residues containing this panel.
    pub fn residues(&self) -> [Residue; 2] {
        let others: Vec<Gen> = GENS.iter().copied().filter(|g| *g != self.dir).collect();
        [
            Residue::of(&self.gate, GenSet::pair(self.dir, others[0])),
            Residue::of(&self.gate, GenSet::pair(self.dir, others[1])),
        ]
    }
}

impl fmt::Display for Panel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}, {}}}", self.gate, self.far())
    }
}

/// All panels of the wall of `alpha` whose chambers lie in `ball(radius)`.
pub fn wall_panels(alpha: &Root, radius: usize) -> Result<Vec<Panel>> {
    let refl = alpha.reflection()?;
    let mut out = Vec::new();
    for x in ball(radius)? {
        let conj = x.inverse().mul(&refl).mul(&x);
        if let [g] = conj.word() {
            // x and x·g are swapped by the reflection: {x, x·g} is a wall panel.
            let p = Panel::of(&x, *g);
            if !out.contains(&p) {
                out.push(p);
            }
        }
    }
    Ok(out)
}

/// Rank-2 residues crossed by the wall of `alpha`, i.e. residues containing
/// a wall panel, with gates inside `ball(radius)`.
pub fn wall_residues(alpha: &Root, radius: usize) -> Result<Vec<Residue>> {
    let mut out: Vec<Residue> = Vec::new();
    for p in wall_panels(alpha, radius)? {
        for r in p.residues() {
            if r.gate().length() <= radius && !out.contains(&r) {
                out.push(r);
            }
        }
    }
    Ok(out)
}

/// The wall of `alpha` crosses `res` in exactly two panels; return them.
pub fn wall_panels_in_residue(alpha: &Root, res: &Residue) -> Result<Vec<Panel>> {
    let refl = alpha.reflection()?;
    let mut out = Vec::new();
    for x in res.chambers()? {
        let conj = x.inverse().mul(&refl).mul(&x);
        if let [g] = conj.word() {
            let p = Panel::of(&x, *g);
            if !out.contains(&p) {
                out.push(p);
            }
        }
    }
    Ok(out)
}

/// Walk the wall of `alpha` residue-by-residue from its distinguished panel
/// until a residue stabilised by the reflection of `beta` is found.
///
/// For crossing walls the common residue exists and is unique; `bound` caps
/// the number of walk steps in each direction.
pub fn common_residue(alpha: &Root, beta: &Root, bound: usize) -> Result<Option<Residue>> {
    let r_beta = beta.reflection()?;
    let stabilises = |res: &Residue| -> bool {
        let g = res.gate();
        let conj = g.inverse().mul(&r_beta).mul(g);
        conj.word().iter().all(|l| res.typ().contains(*l))
    };
    let start = alpha.distinguished_panel()?;
    let [r0, r1] = start.residues();
    // Distance to the identity is unimodal along a wall, so once the gate is
    // deeper than both depths plus a margin this direction cannot succeed.
    let max_gate = alpha.depth()? + beta.depth()? + 6;
    // Two walk directions from the starting panel.
    for first in [r0, r1] {
        let mut panel = start.clone();
        let mut res = first;
        for _ in 0..=bound {
            if res.gate().length() > max_gate {
                break;
            }
            if stabilises(&res) {
                return Ok(Some(res));
            }
            // Step: the other wall panel inside `res`, then the next residue
            // on the far side of that panel.
            let panels = wall_panels_in_residue(alpha, &res)?;
            debug_assert_eq!(panels.len(), 2, "wall crosses a rank-2 residue twice");
            let next_panel = panels.into_iter().find(|p| *p != panel).ok_or_else(|| {
                CoxeterError::invalid("wall walk: residue lost its entry panel")
            })?;
            let next_res = next_panel
                .residues()
                .into_iter()
                .find(|r| *r != res)
                .ok_or_else(|| CoxeterError::invalid("wall walk: no next residue"))?;
            panel = next_panel;
            res = next_res;
        }
    }
    Ok(None)
}

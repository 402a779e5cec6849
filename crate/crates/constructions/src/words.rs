//! Vertex-word schedules for the named chain constructions.
//!
//! Each construction is a path-shaped sequence of wall groups `U(x)` and
//! index-2 subgroups `V(x r_{a,b})`, anchored either at a solitary rank-2
//! residue or at a paired couple.  This module computes only the words; the
//! group building lives in `build`.

use std::fmt;
use std::str::FromStr;

use coxeter_core::{r_pair, CoxeterError, Gen, GroupElement, Residue, Result};
use coxeter_core::GenSet;
use serde::Serialize;

use crate::classify::partner;

/// The thirteen chain constructions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Kind {
    VR,
    OR,
    HR,
    JRt,
    GR,
    ERs,
    URs,
    XR,
    HRR,
    JRR,
    GRR,
    C,
    CRR,
}

impl Kind {
    pub const ALL: [Kind; 13] = [
        Kind::VR,
        Kind::OR,
        Kind::HR,
        Kind::JRt,
        Kind::GR,
        Kind::ERs,
        Kind::URs,
        Kind::XR,
        Kind::HRR,
        Kind::JRR,
        Kind::GRR,
        Kind::C,
        Kind::CRR,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Kind::VR => "VR",
            Kind::OR => "OR",
            Kind::HR => "HR",
            Kind::JRt => "JRt",
            Kind::GR => "GR",
            Kind::ERs => "ERs",
            Kind::URs => "URs",
            Kind::XR => "XR",
            Kind::HRR => "HRR",
            Kind::JRR => "JRR",
            Kind::GRR => "GRR",
            Kind::C => "C",
            Kind::CRR => "CRR",
        }
    }

    /// Kinds anchored at a paired couple rather than a single residue.
    pub fn is_pair_kind(self) -> bool {
        matches!(
            self,
            Kind::HRR | Kind::JRR | Kind::GRR | Kind::C | Kind::CRR
        )
    }

    /// Kinds whose orientation is fixed by a distinguished letter.
    pub fn takes_letter(self) -> bool {
        matches!(self, Kind::JRt | Kind::ERs | Kind::URs | Kind::XR)
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Kind {
    type Err = CoxeterError;

    fn from_str(s: &str) -> Result<Kind> {
        Kind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| {
                CoxeterError::invalid(format!(
                    "unknown construction kind {s:?}; expected one of VR, OR, HR, JRt, GR, \
                     ERs, URs, XR, HRR, JRR, GRR, C, CRR"
                ))
            })
    }
}

/// Where a construction is anchored.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Anchor {
    Single {
        residue: Residue,
        letter: Option<Gen>,
    },
    Pair {
        first: Residue,
        second: Residue,
    },
}

impl Anchor {
    pub fn single(residue: Residue) -> Anchor {
        Anchor::Single {
            residue,
            letter: None,
        }
    }

    pub fn single_with_letter(residue: Residue, letter: Gen) -> Anchor {
        Anchor::Single {
            residue,
            letter: Some(letter),
        }
    }

    pub fn pair(first: Residue, second: Residue) -> Anchor {
        Anchor::Pair { first, second }
    }

    pub fn label(&self) -> String {
        match self {
            Anchor::Single {
                residue,
                letter: None,
            } => residue.to_string(),
            Anchor::Single {
                residue,
                letter: Some(g),
            } => format!("{residue}/{}", g.letter()),
            Anchor::Pair { first, second } => format!("{first}&{second}"),
        }
    }
}

/// One link of a chain: a full wall group or the index-2 subgroup generated
/// by the two halves one letter short of the wall.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum VertexWord {
    U(GroupElement),
    V {
        prefix: GroupElement,
        a: Gen,
        b: Gen,
    },
}

impl VertexWord {
    /// The wall word the vertex group lives in.
    pub fn full_word(&self) -> GroupElement {
        match self {
            VertexWord::U(w) => w.clone(),
            VertexWord::V { prefix, a, b } => prefix.mul(&r_pair(*a, *b)),
        }
    }

    pub fn is_v(&self) -> bool {
        matches!(self, VertexWord::V { .. })
    }

    pub fn name(&self) -> String {
        match self {
            VertexWord::U(w) => format!("U({w})"),
            VertexWord::V { prefix, a, b } => {
                format!("V({prefix}|{}{})", a.letter(), b.letter())
            }
        }
    }
}

impl fmt::Display for VertexWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// Letters and gate of a resolved solitary anchor: `w` is the gate of an
/// `{s, t}`-residue and `r` the third letter.
#[derive(Debug, Clone)]
pub struct SingleFrame {
    pub r: Gen,
    pub s: Gen,
    pub t: Gen,
    pub w: GroupElement,
}

/// Letters and gates of a resolved paired anchor: the two residues share the
/// letter `r`; the first has type `{r, s}` and gate `w`, the second type
/// `{r, t}` and gate `wp`.  `wt` and `wtp` are the gates of the `{r, t}`- and
/// `{r, s}`-residues at `w` and `wp`.
#[derive(Debug, Clone)]
pub struct PairFrame {
    pub r: Gen,
    pub s: Gen,
    pub t: Gen,
    pub w: GroupElement,
    pub wp: GroupElement,
    pub wt: GroupElement,
    pub wtp: GroupElement,
}

#[derive(Debug, Clone)]
pub enum Frame {
    Single(SingleFrame),
    Pair(PairFrame),
}

impl Frame {
    pub fn single(&self) -> Result<&SingleFrame> {
        match self {
            Frame::Single(f) => Ok(f),
            Frame::Pair(_) => Err(CoxeterError::invalid("expected a solitary-anchor frame")),
        }
    }

    pub fn pair(&self) -> Result<&PairFrame> {
        match self {
            Frame::Pair(f) => Ok(f),
            Frame::Single(_) => Err(CoxeterError::invalid("expected a paired-anchor frame")),
        }
    }
}

fn ext(w: &GroupElement, gens: &[Gen]) -> GroupElement {
    gens.iter().fold(w.clone(), |x, g| x.mul_gen(*g))
}

fn resolve_single(kind: Kind, residue: &Residue, letter: Option<Gen>) -> Result<SingleFrame> {
    let (a, b) = residue.typ().two()?;
    let r = Gen::third(a, b);
    let w = residue.gate().clone();
    let i = w.length();
    if let Some(p) = partner(residue)? {
        return Err(CoxeterError::invalid(format!(
            "{kind} needs a solitary anchor, but {residue} is paired with {p}"
        )));
    }
    let (s, t) = match kind {
        Kind::VR | Kind::OR | Kind::HR | Kind::GR => {
            if letter.is_some() {
                return Err(CoxeterError::invalid(format!(
                    "{kind} takes no distinguished letter"
                )));
            }
            (a, b)
        }
        Kind::JRt => {
            let t = letter.unwrap_or(b);
            if !residue.typ().contains(t) {
                return Err(CoxeterError::invalid(format!(
                    "letter {} is not in the type of {residue}",
                    t.letter()
                )));
            }
            (Gen::third(r, t), t)
        }
        Kind::ERs | Kind::URs | Kind::XR => {
            let qualifies =
                |x: Gen| i >= 2 && w.mul_gen(r).mul_gen(x).length() == i - 2;
            let s = match letter {
                Some(s) => {
                    if !residue.typ().contains(s) {
                        return Err(CoxeterError::invalid(format!(
                            "letter {} is not in the type of {residue}",
                            s.letter()
                        )));
                    }
                    if !qualifies(s) {
                        return Err(CoxeterError::invalid(format!(
                            "{kind} at {residue} needs l(w r {0}) = l(w) - 2, but l = {1}",
                            s.letter(),
                            w.mul_gen(r).mul_gen(s).length()
                        )));
                    }
                    s
                }
                None => match (qualifies(a), qualifies(b)) {
                    (true, _) => a,
                    (false, true) => b,
                    (false, false) => {
                        return Err(CoxeterError::invalid(format!(
                            "{kind} at {residue} needs a letter x with l(w r x) = l(w) - 2; \
                             got l(w r {}) = {}, l(w r {}) = {}",
                            a.letter(),
                            w.mul_gen(r).mul_gen(a).length(),
                            b.letter(),
                            w.mul_gen(r).mul_gen(b).length()
                        )));
                    }
                },
            };
            let t = Gen::third(r, s);
            if kind == Kind::XR && w.mul_gen(r).mul_gen(t).length() != i {
                return Err(CoxeterError::invalid(format!(
                    "{kind} at {residue} needs l(w r {0}) = l(w), but l = {1}",
                    t.letter(),
                    w.mul_gen(r).mul_gen(t).length()
                )));
            }
            (s, t)
        }
        _ => unreachable!("pair kinds resolved elsewhere"),
    };
    Ok(SingleFrame { r, s, t, w })
}

fn resolve_pair(first: &Residue, second: &Residue) -> Result<PairFrame> {
    match partner(first)? {
        Some(p) if &p == second => {}
        Some(p) => {
            return Err(CoxeterError::invalid(format!(
                "{first} and {second} are not paired; the partner of {first} is {p}"
            )));
        }
        None => {
            return Err(CoxeterError::invalid(format!(
                "{first} is solitary, not paired with {second}"
            )));
        }
    }
    let shared: Vec<Gen> = first
        .typ()
        .iter()
        .filter(|g| second.typ().contains(*g))
        .collect();
    if shared.len() != 1 {
        return Err(CoxeterError::invalid(format!(
            "{first} and {second} share {} letters, expected 1",
            shared.len()
        )));
    }
    let r = shared[0];
    let (fa, fb) = first.typ().two()?;
    let s = if fa == r { fb } else { fa };
    let (ga, gb) = second.typ().two()?;
    let t = if ga == r { gb } else { ga };
    let w = first.gate().clone();
    let wp = second.gate().clone();
    let wt = Residue::of(&w, GenSet::pair(r, t)).gate().clone();
    let wtp = Residue::of(&wp, GenSet::pair(r, s)).gate().clone();
    // The gate geometry a paired couple guarantees; violations mean the
    // classification and the chain schedules disagree.
    if wt.mul_gen(t) != w
        || wtp.mul_gen(s) != wp
        || w.mul_gen(s).mul_gen(t) != wp
        || wt.length() + 1 != w.length()
    {
        return Err(CoxeterError::invalid(format!(
            "gate geometry violated for the pair {first}, {second}"
        )));
    }
    Ok(PairFrame {
        r,
        s,
        t,
        w,
        wp,
        wt,
        wtp,
    })
}

/// Resolve an anchor into concrete letters and gates for `kind`.
pub fn resolve(kind: Kind, anchor: &Anchor) -> Result<Frame> {
    match (kind.is_pair_kind(), anchor) {
        (false, Anchor::Single { residue, letter }) => {
            Ok(Frame::Single(resolve_single(kind, residue, *letter)?))
        }
        (true, Anchor::Pair { first, second }) => {
            Ok(Frame::Pair(resolve_pair(first, second)?))
        }
        (false, Anchor::Pair { .. }) => Err(CoxeterError::invalid(format!(
            "{kind} is anchored at a single residue, not a pair"
        ))),
        (true, Anchor::Single { .. }) => Err(CoxeterError::invalid(format!(
            "{kind} is anchored at a paired couple"
        ))),
    }
}

fn u(w: GroupElement) -> VertexWord {
    VertexWord::U(w)
}

fn v(prefix: GroupElement, a: Gen, b: Gen) -> VertexWord {
    VertexWord::V { prefix, a, b }
}

fn hr_words(f: &SingleFrame) -> Vec<VertexWord> {
    let (r, s, t, w) = (f.r, f.s, f.t, &f.w);
    vec![
        u(ext(w, &[s]).mul(&r_pair(r, t))),
        v(ext(w, &[s, t]), r, s),
        u(w.mul(&r_pair(s, t))),
        v(ext(w, &[t, s]), r, t),
        u(ext(w, &[t]).mul(&r_pair(r, s))),
    ]
}

fn gr_words(f: &SingleFrame) -> Vec<VertexWord> {
    let (r, s, t, w) = (f.r, f.s, f.t, &f.w);
    vec![
        u(ext(w, &[s]).mul(&r_pair(r, t))),
        v(ext(w, &[s, t, r]), s, t),
        u(ext(w, &[s, t]).mul(&r_pair(r, s))),
        v(ext(w, &[s, t, s, r]), s, t),
        u(ext(w, &[s, t, s]).mul(&r_pair(r, t))),
        v(w.mul(&r_pair(s, t)).mul_gen(r), s, t),
        u(ext(w, &[t, s, t]).mul(&r_pair(r, s))),
        v(ext(w, &[t, s, t, r]), s, t),
        u(ext(w, &[t, s]).mul(&r_pair(r, t))),
        v(ext(w, &[t, s, r]), s, t),
        u(ext(w, &[t]).mul(&r_pair(r, s))),
    ]
}

/// The shared four-vertex head of the letter-oriented kinds: built over the
/// gate `wz` of the `{r, s}`-residue at `w`.
fn e_head(f: &SingleFrame) -> Vec<VertexWord> {
    let (r, s, t, w) = (f.r, f.s, f.t, &f.w);
    let wz = Residue::of(w, GenSet::pair(r, s)).gate().clone();
    vec![
        u(ext(&wz, &[r, s]).mul(&r_pair(r, t))),
        v(ext(&wz, &[r, s, r, t]), r, s),
        u(ext(&wz, &[r, s, r]).mul(&r_pair(s, t))),
        v(ext(w, &[s, r, t]), r, s),
    ]
}

fn hrr_words(f: &PairFrame) -> Vec<VertexWord> {
    let (r, s, t) = (f.r, f.s, f.t);
    let (w, wp, wt, wtp) = (&f.w, &f.wp, &f.wt, &f.wtp);
    vec![
        u(ext(wt, &[r, t, r]).mul(&r_pair(s, t))),
        v(wt.mul(&r_pair(r, t)).mul_gen(s), r, t),
        u(ext(wt, &[t, r, t]).mul(&r_pair(r, s))),
        v(ext(wt, &[t, r, t, s]), r, t),
        u(ext(wt, &[t, r]).mul(&r_pair(s, t))),
        v(ext(w, &[r, s]), r, t),
        u(w.mul(&r_pair(r, s))),
        v(ext(w, &[s, r]), s, t),
        u(wp.mul(&r_pair(r, t))),
        v(ext(wp, &[r, t]), r, s),
        u(ext(wtp, &[s, r]).mul(&r_pair(s, t))),
        v(ext(wtp, &[s, r, s, t]), r, s),
        u(ext(wtp, &[s, r, s]).mul(&r_pair(r, t))),
        v(wtp.mul(&r_pair(r, s)).mul_gen(t), r, s),
        u(ext(wtp, &[r, s, r]).mul(&r_pair(s, t))),
    ]
}

/// The vertex-word sequence of `kind` at a resolved frame.
pub fn words_from_frame(kind: Kind, frame: &Frame) -> Result<Vec<VertexWord>> {
    Ok(match kind {
        Kind::VR => {
            let f = frame.single()?;
            let (r, s, t, w) = (f.r, f.s, f.t, &f.w);
            vec![
                u(ext(w, &[s, r])),
                v(w.clone(), s, t),
                u(ext(w, &[t, r])),
            ]
        }
        Kind::OR => {
            let f = frame.single()?;
            let (r, s, t, w) = (f.r, f.s, f.t, &f.w);
            vec![
                v(ext(w, &[s]), r, t),
                u(w.mul(&r_pair(s, t))),
                v(ext(w, &[t]), r, s),
            ]
        }
        Kind::HR => hr_words(frame.single()?),
        Kind::JRt => {
            let f = frame.single()?;
            let (r, s, t, w) = (f.r, f.s, f.t, &f.w);
            vec![
                u(ext(w, &[s]).mul(&r_pair(r, t))),
                v(ext(w, &[s, t]), r, s),
                v(ext(w, &[t, s, t]), r, s),
                u(ext(w, &[t, s]).mul(&r_pair(r, t))),
                v(ext(w, &[t, s, r]), s, t),
                u(ext(w, &[t]).mul(&r_pair(r, s))),
            ]
        }
        Kind::GR => gr_words(frame.single()?),
        Kind::ERs => {
            let f = frame.single()?;
            let mut out = e_head(f);
            out.extend(hr_words(f));
            out
        }
        Kind::URs => {
            let f = frame.single()?;
            let mut out = e_head(f);
            out.extend(gr_words(f));
            out
        }
        Kind::XR => {
            let f = frame.single()?;
            let (r, s, t, w) = (f.r, f.s, f.t, &f.w);
            let wz = Residue::of(w, GenSet::pair(r, s)).gate().clone();
            let mut out = e_head(f);
            out.extend([
                u(ext(w, &[s]).mul(&r_pair(r, t))),
                v(ext(w, &[s, t]), r, s),
                u(w.mul(&r_pair(s, t))),
                v(ext(w, &[t]), r, s),
                u(ext(&wz, &[s]).mul(&r_pair(r, t))),
            ]);
            out
        }
        Kind::HRR => hrr_words(frame.pair()?),
        Kind::JRR => {
            let f = frame.pair()?;
            let (r, s, t) = (f.r, f.s, f.t);
            let (w, wp) = (&f.w, &f.wp);
            let h = hrr_words(f);
            let mut out = h[0..5].to_vec();
            out.extend([
                v(ext(w, &[r, s, t]), r, s),
                u(ext(w, &[r, s]).mul(&r_pair(r, t))),
                v(ext(w, &[r, s, r]), s, t),
                v(ext(w, &[s, r]), s, t),
                u(wp.mul(&r_pair(r, t))),
                v(ext(wp, &[r, t]), r, s),
            ]);
            out.extend_from_slice(&h[10..15]);
            out
        }
        Kind::GRR => {
            let f = frame.pair()?;
            let (r, s, t) = (f.r, f.s, f.t);
            let (w, wp) = (&f.w, &f.wp);
            let h = hrr_words(f);
            let mut out = h[0..5].to_vec();
            out.extend([
                v(ext(w, &[r, s, t]), r, s),
                u(ext(w, &[r, s]).mul(&r_pair(r, t))),
                v(ext(w, &[r, s, r, t]), r, s),
                u(ext(w, &[r, s, r]).mul(&r_pair(s, t))),
                v(w.mul(&r_pair(r, s)).mul_gen(t), r, s),
                u(ext(w, &[s, r, s]).mul(&r_pair(r, t))),
                v(ext(w, &[s, r, s, t]), r, s),
                u(ext(w, &[s, r]).mul(&r_pair(s, t))),
                v(ext(wp, &[t, r, t, s]), r, t),
                u(ext(wp, &[t, r, t]).mul(&r_pair(r, s))),
                v(wp.mul(&r_pair(r, t)).mul_gen(s), r, t),
                u(ext(wp, &[r, t, r]).mul(&r_pair(s, t))),
                v(ext(wp, &[r, t, r, s]), r, t),
                u(ext(wp, &[r, t]).mul(&r_pair(r, s))),
                v(ext(wp, &[r, t, s]), r, t),
            ]);
            out.extend_from_slice(&h[10..15]);
            out
        }
        Kind::C => {
            let f = frame.pair()?;
            let (r, s, t) = (f.r, f.s, f.t);
            let (w, wp, wt, wtp) = (&f.w, &f.wp, &f.wt, &f.wtp);
            vec![
                u(wt.mul(&r_pair(r, t))),
                v(ext(wt, &[t, r]), s, t),
                u(w.mul(&r_pair(r, s))),
                v(ext(w, &[s, r]), s, t),
                u(wp.mul(&r_pair(r, t))),
                v(ext(wtp, &[s, r]), s, t),
                u(wtp.mul(&r_pair(r, s))),
            ]
        }
        Kind::CRR => {
            let f = frame.pair()?;
            let (r, s, t) = (f.r, f.s, f.t);
            let (w, wp, wt, wtp) = (&f.w, &f.wp, &f.wt, &f.wtp);
            vec![
                u(ext(wt, &[r, t, r]).mul(&r_pair(s, t))),
                v(wt.mul(&r_pair(r, t)).mul_gen(s), r, t),
                u(ext(w, &[r, t]).mul(&r_pair(r, s))),
                v(ext(w, &[r, t, s]), r, t),
                u(ext(w, &[r]).mul(&r_pair(s, t))),
                v(ext(w, &[r, s]), r, t),
                u(w.mul(&r_pair(r, s))),
                v(ext(w, &[s, r]), s, t),
                u(wp.mul(&r_pair(r, t))),
                v(ext(wp, &[r]), s, t),
                u(wtp.mul(&r_pair(r, s))),
            ]
        }
    })
}

/// Resolve and compute the vertex-word sequence in one step.
pub fn kind_words(kind: Kind, anchor: &Anchor) -> Result<Vec<VertexWord>> {
    words_from_frame(kind, &resolve(kind, anchor)?)
}

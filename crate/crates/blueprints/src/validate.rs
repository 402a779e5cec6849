//! Validators for the blueprint axioms: prefix consistency, the rank-2
//! table, shift invariance (full and finite-order-only), and the nested
//! commutation dichotomy.

use coxeter_core::{ball, longest_element, Gen, GenSet, GroupElement, Result};
use roots_galleries::{min_galleries, Gallery, Root, RootRelation};
use serde::Serialize;

use crate::provider::Blueprint;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Axiom {
    #[serde(rename = "CB1")]
    Cb1,
    #[serde(rename = "CB2")]
    Cb2,
    #[serde(rename = "CB3")]
    Cb3,
    #[serde(rename = "WEYL")]
    Weyl,
    #[serde(rename = "LOCAL_WEYL")]
    LocalWeyl,
}

/// One broken instance; positions are 1-based for display.
#[derive(Clone, Debug, Serialize)]
pub struct Violation {
    pub gallery: Gallery,
    pub pair: (usize, usize),
    pub expected: Vec<Root>,
    pub got: Vec<Root>,
    pub note: String,
}

#[derive(Debug, Serialize)]
pub struct ValidationReport {
    pub axiom: Axiom,
    pub radius: usize,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Prefix consistency: the answer for a crossing pair does not change when
/// the gallery is extended.
pub fn validate_cb1(p: &Blueprint, radius: usize) -> Result<ValidationReport> {
    let mut report = ValidationReport {
        axiom: Axiom::Cb1,
        radius,
        violations: Vec::new(),
    };
    for w in ball(radius)? {
        for gal in min_galleries(&w) {
            for m in 2..gal.len() {
                let prefix = Gallery::new(gal.typ()[..m].to_vec())?;
                for i in 0..m {
                    for j in i + 1..m {
                        let on_full = p.query(&gal, i, j)?;
                        let on_prefix = p.query(&prefix, i, j)?;
                        if on_full != on_prefix {
                            report.violations.push(Violation {
                                gallery: gal.clone(),
                                pair: (i + 1, j + 1),
                                expected: on_full,
                                got: on_prefix,
                                note: format!("prefix of length {m} answers differently"),
                            });
                        }
                    }
                }
            }
        }
    }
    Ok(report)
}

/// The rank-2 table: on each minimal gallery of a longest rank-2 element,
/// the extreme pair maps onto the two middle crossings and every other pair
/// commutes.
pub fn validate_cb2(p: &Blueprint) -> Result<ValidationReport> {
    let mut report = ValidationReport {
        axiom: Axiom::Cb2,
        radius: 4,
        violations: Vec::new(),
    };
    for (a, b) in [(Gen::R, Gen::S), (Gen::R, Gen::T), (Gen::S, Gen::T)] {
        let top = longest_element(GenSet::pair(a, b))?;
        for gal in min_galleries(&top) {
            let crossings = gal.crossings();
            for i in 0..4 {
                for j in i + 1..4 {
                    let expected = if (i, j) == (0, 3) {
                        vec![crossings[1].clone(), crossings[2].clone()]
                    } else {
                        Vec::new()
                    };
                    let got = p.query(&gal, i, j)?;
                    if got != expected {
                        report.violations.push(Violation {
                            gallery: gal.clone(),
                            pair: (i + 1, j + 1),
                            expected,
                            got,
                            note: "rank-2 table".into(),
                        });
                    }
                }
            }
        }
    }
    Ok(report)
}

/// Shift invariance: stripping the first step of a gallery and translating
/// transports every answer (restricted to finite-order pairs when `local`).
pub fn validate_weyl(p: &Blueprint, radius: usize, local: bool) -> Result<ValidationReport> {
    let mut report = ValidationReport {
        axiom: if local { Axiom::LocalWeyl } else { Axiom::Weyl },
        radius,
        violations: Vec::new(),
    };
    for w in ball(radius)? {
        for gal in min_galleries(&w) {
            if gal.len() < 3 {
                continue;
            }
            let s = gal.typ()[0];
            let s_elem = GroupElement::gen(s);
            let shifted = gal.shift(s)?;
            let crossings = gal.crossings();
            for i in 1..gal.len() {
                for j in i + 1..gal.len() {
                    if local {
                        let finite = matches!(
                            crossings[i].relation(&crossings[j])?,
                            RootRelation::Crossing { .. }
                        );
                        if !finite {
                            continue;
                        }
                    }
                    let transported: Vec<Root> = p
                        .query(&gal, i, j)?
                        .iter()
                        .map(|g| g.act(&s_elem))
                        .collect();
                    let got = p.query(&shifted, i - 1, j - 1)?;
                    if got != transported {
                        report.violations.push(Violation {
                            gallery: gal.clone(),
                            pair: (i + 1, j + 1),
                            expected: transported,
                            got,
                            note: format!("shift by {s}"),
                        });
                    }
                }
            }
        }
    }
    Ok(report)
}

/// Nested-pair commutation report: within the ball, every nested crossing
/// pair that already has a witness chamber outside both roots at length <= n
/// must commute, while at least one nested pair somewhere should not.
#[derive(Debug, Serialize)]
pub struct DnReport {
    pub n: usize,
    pub radius: usize,
    pub shallow_violations: Vec<Violation>,
    pub nonempty_nested: Option<(Gallery, (usize, usize))>,
}

impl DnReport {
    /// Nested pairs visible at level n all commute.
    pub fn shallow_pairs_commute(&self) -> bool {
        self.shallow_violations.is_empty()
    }

    /// Some nested pair carries a nontrivial commutation set.
    pub fn has_nested_commutation(&self) -> bool {
        self.nonempty_nested.is_some()
    }
}

pub fn corollary_dn_check(p: &Blueprint, n: usize, radius: usize) -> Result<DnReport> {
    let mut report = DnReport {
        n,
        radius,
        shallow_violations: Vec::new(),
        nonempty_nested: None,
    };
    let witnesses = ball(n)?;
    for w in ball(radius)? {
        for gal in min_galleries(&w) {
            let crossings = gal.crossings();
            for i in 0..gal.len() {
                for j in i + 1..gal.len() {
                    if crossings[i].relation(&crossings[j])? != RootRelation::FirstInSecond {
                        continue;
                    }
                    let m = p.query(&gal, i, j)?;
                    if !m.is_empty() && report.nonempty_nested.is_none() {
                        report.nonempty_nested = Some((gal.clone(), (i + 1, j + 1)));
                    }
                    if m.is_empty() {
                        continue;
                    }
                    // A chamber outside the larger root is outside both.
                    let shallow = witnesses
                        .iter()
                        .any(|x| !crossings[i].contains(x) && !crossings[j].contains(x));
                    if shallow {
                        report.shallow_violations.push(Violation {
                            gallery: gal.clone(),
                            pair: (i + 1, j + 1),
                            expected: Vec::new(),
                            got: m,
                            note: format!("nested pair visible at level {n}"),
                        });
                    }
                }
            }
        }
    }
    Ok(report)
}

/// Convenience: run CB1, CB2 and the requested shift validator.
pub fn validate_all(p: &Blueprint, radius: usize, local: bool) -> Result<Vec<ValidationReport>> {
    Ok(vec![
        validate_cb1(p, radius)?,
        validate_cb2(p)?,
        validate_weyl(p, radius, local)?,
    ])
}

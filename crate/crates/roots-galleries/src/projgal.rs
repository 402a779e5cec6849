//! Wall walks, simple/non-simple residues of a wall, and the reconstruction
//! of projection galleries along a wall.
//!
//! Throughout, `alpha` is a positive non-simple root (depth k >= 2).  For a
//! rank-2 residue R stabilised by the reflection of alpha, the wall crosses
//! R in exactly two panels; alpha is a *simple root of R* when one of them
//! has the same gate as R.  Otherwise the two panel gates sit at lengths
//! l(w_R)+1 < l(w_R)+2, and the closer panel turns out to be the wall's
//! distinguished panel.

use coxeter_core::{CoxeterError, Gen, GroupElement, Residue, Result};

use crate::gallery::{min_galleries, Gallery};
use crate::root::{wall_panels_in_residue, Panel, Root};

/// A walk along the wall of a root: panels[0], ..., panels[n] with
/// residues[i] containing panels[i] and panels[i+1].
pub struct WallWalk {
    pub panels: Vec<Panel>,
    pub residues: Vec<Residue>,
}

/// Walk from the distinguished panel of `alpha` to the panel `q` of the same
/// wall.  Each direction is abandoned once the walk is farther from the
/// identity than `q` by a safe margin (distance along a wall is unimodal),
/// and `bound` caps the step count outright.
pub fn walk_toward(alpha: &Root, q: &Panel, bound: usize) -> Result<WallWalk> {
    let start = alpha.distinguished_panel()?;
    if start == *q {
        return Ok(WallWalk {
            panels: vec![start],
            residues: Vec::new(),
        });
    }
    let max_gate = q.gate().length() + 6;
    for first in start.residues() {
        let mut panels = vec![start.clone()];
        let mut residues = Vec::new();
        let mut res = first;
        for _ in 0..bound {
            if res.gate().length() > max_gate {
                break;
            }
            let next = other_panel(alpha, &res, panels.last().unwrap())?;
            residues.push(res.clone());
            panels.push(next.clone());
            if next == *q {
                return Ok(WallWalk { panels, residues });
            }
            res = next
                .residues()
                .into_iter()
                .find(|r| *r != res)
                .ok_or_else(|| CoxeterError::invalid("wall walk: no next residue"))?;
        }
    }
    Err(CoxeterError::limit("wall walk steps", bound + 1, bound))
}

fn other_panel(alpha: &Root, res: &Residue, this: &Panel) -> Result<Panel> {
    wall_panels_in_residue(alpha, res)?
        .into_iter()
        .find(|p| p != this)
        .ok_or_else(|| CoxeterError::invalid("wall crosses each stabilised residue twice"))
}

/// All wall residues with gate length <= `max_gate`, obtained by walking the
/// wall in both directions.  Distance to the identity is unimodal along the
/// wall, so a short overshoot margin guarantees completeness.
pub fn wall_neighborhood(alpha: &Root, max_gate: usize) -> Result<Vec<Residue>> {
    let start = alpha.distinguished_panel()?;
    let [ra, rb] = start.residues();
    let mut out: Vec<Residue> = Vec::new();
    for first in [ra, rb] {
        let mut panel = start.clone();
        let mut res = first;
        loop {
            if !out.contains(&res) {
                out.push(res.clone());
            }
            if res.gate().length() > max_gate + 4 {
                break;
            }
            let next = other_panel(alpha, &res, &panel)?;
            let next_res = next
                .residues()
                .into_iter()
                .find(|r| *r != res)
                .ok_or_else(|| CoxeterError::invalid("wall walk: no next residue"))?;
            panel = next;
            res = next_res;
        }
    }
    out.retain(|r| r.gate().length() <= max_gate);
    out.sort_by_key(|r| (r.gate().length(), r.gate().clone(), r.typ().0));
    Ok(out)
}

/// alpha is a simple root of R when the wall panel closer to the identity
/// shares its gate with R.
pub fn is_simple_in(alpha: &Root, res: &Residue) -> Result<bool> {
    let panels = wall_panels_in_residue(alpha, res)?;
    Ok(panels.iter().any(|p| p.gate() == *res.gate()))
}

/// The data fixed by choosing a residue in which `alpha` is non-simple:
/// the closer wall panel P (gate c_{k-1}), the step directions
/// (s_prev: w_R -> c_{k-1}, s_last: across P) and the third letter.
#[derive(Clone, Debug)]
pub struct Setup {
    pub alpha: Root,
    pub res: Residue,
    pub p: Panel,
    pub s_prev: Gen,
    pub s_last: Gen,
    pub r: Gen,
}

impl Setup {
    pub fn new(alpha: &Root, res: &Residue) -> Result<Setup> {
        if !alpha.is_positive() {
            return Err(CoxeterError::invalid("setup needs a positive root"));
        }
        if is_simple_in(alpha, res)? {
            return Err(CoxeterError::invalid(format!(
                "{alpha} is a simple root of {res}"
            )));
        }
        let panels = wall_panels_in_residue(alpha, res)?;
        let p = panels
            .iter()
            .min_by_key(|p| p.gate().length())
            .unwrap()
            .clone();
        let far = panels.iter().map(|p| p.gate().length()).max().unwrap();
        debug_assert_eq!(p.gate().length() + 1, far, "panel gates differ by one");
        let w_r = res.gate();
        let s_prev = res
            .typ()
            .iter()
            .find(|g| w_r.mul_gen(*g) == p.gate())
            .ok_or_else(|| {
                CoxeterError::invalid("closer panel gate must neighbour the residue gate")
            })?;
        let s_last = p.dir();
        debug_assert_ne!(s_prev, s_last);
        Ok(Setup {
            alpha: alpha.clone(),
            res: res.clone(),
            p,
            s_prev,
            s_last,
            r: res.typ().complement().iter().next().unwrap(),
        })
    }

    /// k = l(w_R) + 2: the position at which galleries through the setup
    /// cross the wall.
    pub fn k(&self) -> usize {
        self.res.gate().length() + 2
    }

    /// c_{k-1} = proj_P(1), the chamber just inside alpha at the crossing.
    pub fn c_km1(&self) -> GroupElement {
        self.p.gate()
    }

    /// The residue the projection gallery for panel `q` must pass through:
    /// the first walk residue R_1 if the walk leaves R and the third letter
    /// descends from c_{k-1}, otherwise R itself.
    pub fn residue_for(&self, q: &Panel, bound: usize) -> Result<Residue> {
        if *q == self.p {
            return Ok(self.res.clone());
        }
        let walk = walk_toward(&self.alpha, q, bound)?;
        let r1 = walk.residues.first().cloned().unwrap_or_else(|| self.res.clone());
        let c = self.c_km1();
        if r1 != self.res && c.mul_gen(self.r).length() == self.k() - 2 {
            Ok(r1)
        } else {
            Ok(self.res.clone())
        }
    }
}

/// All residues in which `alpha` is non-simple, within the wall
/// neighbourhood of gate length <= depth(alpha) + 2.
pub fn non_simple_setups(alpha: &Root) -> Result<Vec<Setup>> {
    let k = alpha.depth()?;
    let mut out = Vec::new();
    for res in wall_neighborhood(alpha, k + 2)? {
        if !is_simple_in(alpha, &res)? {
            out.push(Setup::new(alpha, &res)?);
        }
    }
    Ok(out)
}

/// A reconstructed projection gallery for a wall panel: ends just beyond the
/// panel, passes through the gate of the rule residue at `pivot`, and from
/// there on every step stays inside wall residues.
pub struct ProjGallery {
    pub h: Gallery,
    pub pivot: usize,
    pub rule_residue: Residue,
}

/// Find a minimal gallery H = (1, ..., proj_Q(1), y) witnessing the
/// projection-gallery property for `q` under `setup`.
pub fn projgal(setup: &Setup, q: &Panel, bound: usize) -> Result<ProjGallery> {
    let rule_residue = setup.residue_for(q, bound)?;
    let pivot_chamber = rule_residue.gate().clone();
    let x = q
        .chambers()
        .into_iter()
        .find(|c| setup.alpha.contains(c))
        .expect("panel gate lies inside the positive root");
    debug_assert_eq!(x, q.gate(), "the alpha-side chamber of a wall panel is its gate");
    let refl = setup.alpha.reflection()?;
    for gal in min_galleries(&x) {
        let chambers = gal.chambers();
        let Some(pivot) = chambers.iter().position(|c| *c == pivot_chamber) else {
            continue;
        };
        let tail_ok = (pivot + 1..chambers.len()).all(|j| {
            panel_in_wall_residue(&chambers[j - 1], &chambers[j], &refl)
        });
        if !tail_ok {
            continue;
        }
        let mut typ = gal.typ().to_vec();
        typ.push(q.dir());
        return Ok(ProjGallery {
            h: Gallery::new(typ)?,
            pivot,
            rule_residue,
        });
    }
    Err(CoxeterError::invalid(format!(
        "no projection gallery to {q} through {}",
        rule_residue
    )))
}

/// Is the panel {a, b} contained in a rank-2 residue stabilised by `refl`?
pub(crate) fn panel_in_wall_residue(a: &GroupElement, b: &GroupElement, refl: &GroupElement) -> bool {
    let dir = {
        let d = a.inverse().mul(b);
        debug_assert_eq!(d.length(), 1, "consecutive gallery chambers");
        d.word()[0]
    };
    Panel::of(a, dir).residues().into_iter().any(|res| {
        let g = res.gate();
        let conj = g.inverse().mul(refl).mul(g);
        conj.word().iter().all(|l| res.typ().contains(*l))
    })
}

/// Outcome of the crossing-dichotomy check for one `setup`: every root of
/// bounded depth whose wall meets the wall of alpha away from R is the last
/// crossing of one of two explicit galleries.
pub struct DichotomyReport {
    pub straight: usize,
    pub bent: usize,
}

/// For a setup with l(c_{k-1} r) = k: every beta in Phi(k) minus the simple
/// roots with o(r_alpha r_beta) finite and R not a wall residue of beta is
/// either the last crossing of (w_R, s_prev, s_last-path)·r straight
/// extension, or of the bent extension through the other panel direction —
/// and in the bent case l(w_R s_last r) = k - 2.
pub fn check_dichotomy(setup: &Setup, candidates: &[Root]) -> Result<DichotomyReport> {
    let k = setup.k();
    let c = setup.c_km1();
    if c.mul_gen(setup.r).length() != k {
        return Err(CoxeterError::invalid(
            "dichotomy setup requires the third letter to ascend from c_{k-1}",
        ));
    }
    let w_r = setup.res.gate();
    let straight = Root::simple(setup.r).act(&c);
    let bent_base = w_r.mul_gen(setup.s_last).mul_gen(setup.s_prev);
    // The bent gallery only exists when its type is reduced end to end.
    let bent = (bent_base.length() == k && bent_base.mul_gen(setup.r).length() == k + 1)
        .then(|| Root::simple(setup.r).act(&bent_base));
    let mut report = DichotomyReport {
        straight: 0,
        bent: 0,
    };
    for beta in candidates {
        if beta.depth()? == 1 {
            continue;
        }
        let finite_order = matches!(
            setup.alpha.relation(beta)?,
            crate::root::RootRelation::Crossing { .. } | crate::root::RootRelation::Equal
        );
        if !finite_order {
            continue;
        }
        // Skip beta whose wall also runs through R.
        let g = setup.res.gate();
        let conj = g.inverse().mul(&beta.reflection()?).mul(g);
        if conj.word().iter().all(|l| setup.res.typ().contains(*l)) {
            continue;
        }
        if *beta == straight {
            report.straight += 1;
        } else if bent.as_ref() == Some(beta) {
            report.bent += 1;
            // The dichotomy asserts the bent case forces a descent.
            if w_r.mul_gen(setup.s_last).mul_gen(setup.r).length() != k - 2 {
                return Err(CoxeterError::invalid(format!(
                    "bent case without descent at setup {} / {}",
                    setup.alpha, setup.res
                )));
            }
        } else {
            return Err(CoxeterError::invalid(format!(
                "dichotomy violated: {beta} vs setup {} / {}",
                setup.alpha, setup.res
            )));
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gallery::roots_to_depth;
    use coxeter_core::GenSet;

    #[test]
    fn simple_roots_of_residues() {
        // alpha_s is simple in both rank-2 residues through the identity
        // whose type contains s.
        let a_s = Root::simple(Gen::S);
        let id = GroupElement::identity();
        for other in [Gen::R, Gen::T] {
            let res = Residue::of(&id, GenSet::pair(Gen::S, other));
            assert!(is_simple_in(&a_s, &res).unwrap());
        }
    }

    #[test]
    fn non_simple_residues_sit_at_depth_minus_two() {
        // For every positive root of depth 2..=5: all non-simple wall
        // residues have gate length exactly depth - 2, and the closer panel
        // is the distinguished one.
        for root in roots_to_depth(5).unwrap() {
            let k = root.depth().unwrap();
            if k < 2 {
                continue;
            }
            let setups = non_simple_setups(&root).unwrap();
            assert!(!setups.is_empty(), "no non-simple residue for {root}");
            for setup in &setups {
                assert_eq!(setup.res.gate().length(), k - 2, "root {root}");
                assert_eq!(setup.k(), k);
                assert_eq!(setup.p, root.distinguished_panel().unwrap());
                assert_eq!(setup.c_km1().length(), k - 1);
            }
        }
    }

    #[test]
    fn last_two_steps_give_non_simple_residue() {
        // The residue spanned by the last two steps of any depth-realising
        // minimal gallery is one where the root is non-simple.
        for root in roots_to_depth(5).unwrap() {
            let k = root.depth().unwrap();
            if k < 2 {
                continue;
            }
            let p = root.distinguished_panel().unwrap();
            let far = p.far();
            for gal in min_galleries(&far) {
                if gal.typ().last() != Some(&p.dir()) {
                    continue;
                }
                let typ = gal.typ();
                let pair = GenSet::pair(typ[k - 2], typ[k - 1]);
                let res = Residue::of(&far, pair);
                assert!(!is_simple_in(&root, &res).unwrap());
                assert_eq!(res.gate().length(), k - 2);
            }
        }
    }

    #[test]
    fn projection_galleries_exist() {
        // For roots of depth <= 4 and wall panels with gates in ball(6):
        // a projection gallery exists for every non-simple setup.
        for root in roots_to_depth(4).unwrap() {
            if root.depth().unwrap() < 2 {
                continue;
            }
            for setup in non_simple_setups(&root).unwrap() {
                for q in crate::root::wall_panels(&root, 6).unwrap() {
                    if q.gate().length() > 5 {
                        continue;
                    }
                    let pg = projgal(&setup, &q, 24).unwrap();
                    // Shape: ends one step beyond proj_Q(1).
                    let chambers = pg.h.chambers();
                    let m = chambers.len() - 2;
                    assert_eq!(chambers[m], q.gate());
                    assert_eq!(chambers[m + 1], q.far());
                    assert_eq!(chambers[pg.pivot], *pg.rule_residue.gate());
                    // Tail property re-check on the returned gallery.
                    let refl = root.reflection().unwrap();
                    for j in pg.pivot + 1..=m {
                        assert!(panel_in_wall_residue(
                            &chambers[j - 1],
                            &chambers[j],
                            &refl
                        ));
                    }
                }
            }
        }
    }

    #[test]
    fn dichotomy_on_shallow_setups() {
        // Every applicable setup from roots of depth <= 5 passes, and both
        // branches of the dichotomy are actually exercised somewhere.
        let mut straight = 0;
        let mut bent = 0;
        for root in roots_to_depth(5).unwrap() {
            if root.depth().unwrap() < 2 {
                continue;
            }
            for setup in non_simple_setups(&root).unwrap() {
                let k = setup.k();
                if setup.c_km1().mul_gen(setup.r).length() != k {
                    continue;
                }
                let candidates = roots_to_depth(k).unwrap();
                let report = check_dichotomy(&setup, &candidates).unwrap();
                straight += report.straight;
                bent += report.bent;
            }
        }
        assert!(straight > 0, "straight branch never hit");
        assert!(bent > 0, "bent branch never hit");
    }
}

//! Non-simple roots of classified residues and the containment lemmas
//! tying them to the level chamber sets.

use coxeter_core::{r_pair, CoxeterError, Gen, GenSet, GroupElement, Residue, Result};
use roots_galleries::{LemmaReport, Root};

use crate::classify::{classify_level, rank2_residues, TMember};
use crate::csets::{c_level, c_of_member, c_of_residue, prefix_set, ChamberSet};
use crate::words::{kind_words, Anchor, Kind};

/// The two walls of a rank-2 residue that do not cut next to its gate.
/// Both sit at gate depth plus two.
pub fn nonsimple_pair(res: &Residue) -> Result<[Root; 2]> {
    let (a, b) = res.typ().two()?;
    let w = res.gate();
    let first = Root::simple(b).act(&w.mul_gen(a));
    let second = Root::simple(a).act(&w.mul_gen(b));
    for root in [&first, &second] {
        let d = root.depth()?;
        if d != w.length() + 2 {
            return Err(CoxeterError::invalid(format!(
                "non-simple root {} of {res} has depth {d}, expected {}",
                root.serial(),
                w.length() + 2
            )));
        }
    }
    let mut out = [first, second];
    out.sort_by_key(|r| r.serial());
    Ok(out)
}

/// All rank-2 residues having `eps` among their non-simple pair.
pub fn residues_with_nonsimple(eps: &Root) -> Result<Vec<Residue>> {
    let d = eps.depth()?;
    if d < 2 {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for res in rank2_residues(d - 2)? {
        if nonsimple_pair(&res)?.contains(eps) {
            out.push(res);
        }
    }
    Ok(out)
}

/// The unique rank-2 residue having `eps` among its non-simple pair.
pub fn r_eps(eps: &Root) -> Result<Residue> {
    let mut found = residues_with_nonsimple(eps)?;
    match found.len() {
        1 => Ok(found.pop().unwrap()),
        n => Err(CoxeterError::invalid(format!(
            "{} is a non-simple root of {n} residues, expected exactly 1",
            eps.serial()
        ))),
    }
}

/// The distinguished root pair of a classification member: for a solitary
/// residue its own non-simple pair; for a paired couple the two non-simple
/// roots not shared between the partners.
#[derive(Debug, Clone)]
pub struct NonSimpleRoots {
    pub member: TMember,
    pub delta: Root,
    pub gamma: Root,
    pub delta_residue: Residue,
    pub gamma_residue: Residue,
}

impl NonSimpleRoots {
    pub fn of_member(m: &TMember) -> Result<NonSimpleRoots> {
        let (delta, gamma) = match m {
            TMember::Single(res) => {
                let [d, g] = nonsimple_pair(res)?;
                (d, g)
            }
            TMember::Pair(a, b) => {
                let pa = nonsimple_pair(a)?;
                let pb = nonsimple_pair(b)?;
                let shared = pa.iter().filter(|r| pb.contains(r)).count();
                if shared != 1 {
                    return Err(CoxeterError::invalid(format!(
                        "partners {a} and {b} share {shared} non-simple roots, expected 1"
                    )));
                }
                let d = pa.iter().find(|r| !pb.contains(r)).unwrap().clone();
                let g = pb.iter().find(|r| !pa.contains(r)).unwrap().clone();
                (d, g)
            }
        };
        let delta_residue = r_eps(&delta)?;
        let gamma_residue = r_eps(&gamma)?;
        Ok(NonSimpleRoots {
            member: m.clone(),
            delta,
            gamma,
            delta_residue,
            gamma_residue,
        })
    }

    pub fn both(&self) -> [&Root; 2] {
        [&self.delta, &self.gamma]
    }

    pub fn residue_of(&self, eps: &Root) -> Option<&Residue> {
        if eps == &self.delta {
            Some(&self.delta_residue)
        } else if eps == &self.gamma {
            Some(&self.gamma_residue)
        } else {
            None
        }
    }
}

/// The eight non-simple roots (with multiplicity) of the four head residues
/// one step beyond `res`.
pub fn hat_phi_residue(res: &Residue) -> Result<Vec<Root>> {
    let (s, t) = res.typ().two()?;
    let r = Gen::third(s, t);
    let w = res.gate();
    let rj = r_pair(s, t);
    let heads = [
        Residue::of(&w.mul_gen(s).mul_gen(t), GenSet::pair(r, s)),
        Residue::of(&w.mul(&rj), GenSet::pair(r, t)),
        Residue::of(&w.mul(&rj), GenSet::pair(r, s)),
        Residue::of(&w.mul_gen(t).mul_gen(s), GenSet::pair(r, t)),
    ];
    let mut out = Vec::with_capacity(8);
    for h in &heads {
        out.extend(nonsimple_pair(h)?);
    }
    Ok(out)
}

/// Head-residue roots of a member, deduplicated and sorted.
pub fn hat_phi(m: &TMember) -> Result<Vec<Root>> {
    let mut out: Vec<Root> = Vec::new();
    for res in m.residues() {
        for root in hat_phi_residue(res)? {
            if !out.contains(&root) {
                out.push(root);
            }
        }
    }
    out.sort_by_key(|r| r.serial());
    Ok(out)
}

/// Chamber sets reachable along the long chain of a member: the union of
/// the prefix sets of its full wall words.
pub fn chain_extension(m: &TMember) -> Result<ChamberSet> {
    let anchor = match m {
        TMember::Single(res) => Anchor::single(res.clone()),
        TMember::Pair(a, b) => Anchor::pair(a.clone(), b.clone()),
    };
    let kind = if m.residues().len() == 1 {
        Kind::GR
    } else {
        Kind::GRR
    };
    let mut out = ChamberSet::new();
    for vw in kind_words(kind, &anchor)? {
        if !vw.is_v() {
            out.extend(prefix_set(&vw.full_word()));
        }
    }
    Ok(out)
}

struct Level {
    i: usize,
    members: Vec<TMember>,
    roots: Vec<NonSimpleRoots>,
    c_sets: Vec<ChamberSet>,
    c_i: ChamberSet,
}

fn level(i: usize) -> Result<Level> {
    let members = classify_level(i)?.members();
    let roots = members
        .iter()
        .map(NonSimpleRoots::of_member)
        .collect::<Result<Vec<_>>>()?;
    let c_sets = members
        .iter()
        .map(c_of_member)
        .collect::<Result<Vec<_>>>()?;
    Ok(Level {
        i,
        members,
        roots,
        c_sets,
        c_i: c_level(i)?,
    })
}

fn report(name: &'static str) -> LemmaReport {
    LemmaReport {
        name,
        instances: 0,
        failures: Vec::new(),
    }
}

fn check_four_roots(levels: &[Level], rep: &mut LemmaReport) {
    for lv in levels {
        for p in 0..lv.members.len() {
            for q in (p + 1)..lv.members.len() {
                rep.instances += 1;
                let mut all: Vec<&Root> = Vec::new();
                for root in lv.roots[p].both().into_iter().chain(lv.roots[q].both()) {
                    if !all.contains(&root) {
                        all.push(root);
                    }
                }
                if all.len() != 4 {
                    rep.failures.push(format!(
                        "i={}: {} and {} have only {} distinct roots",
                        lv.i,
                        lv.members[p].label(),
                        lv.members[q].label(),
                        all.len()
                    ));
                }
            }
        }
    }
}

fn check_opposite_containment(levels: &[Level], rep: &mut LemmaReport) -> Result<()> {
    for lv in levels.iter().filter(|lv| lv.i > 0) {
        for p in 0..lv.members.len() {
            for q in 0..lv.members.len() {
                if p == q {
                    continue;
                }
                for ep in lv.roots[p].both() {
                    for eq in lv.roots[q].both() {
                        rep.instances += 1;
                        if !ep.neg().is_subset(eq)? {
                            rep.failures.push(format!(
                                "i={}: -{} of {} not inside {} of {}",
                                lv.i,
                                ep.serial(),
                                lv.members[p].label(),
                                eq.serial(),
                                lv.members[q].label()
                            ));
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

fn panel_meeting(rp: &Residue, rq: &Residue) -> Result<Option<(GroupElement, GroupElement)>> {
    let cp = rp.chambers()?;
    let cq = rq.chambers()?;
    let mut shared: Vec<GroupElement> = cp.into_iter().filter(|x| cq.contains(x)).collect();
    if shared.len() != 2 {
        return Ok(None);
    }
    shared.sort();
    let (x, y) = (shared[0].clone(), shared[1].clone());
    if x.inverse().mul(&y).length() != 1 {
        return Ok(None);
    }
    Ok(Some((x, y)))
}

fn check_adjacent_levels(levels: &[Level], rep: &mut LemmaReport) -> Result<()> {
    for pair in levels.windows(2) {
        let (lo, hi) = (&pair[0], &pair[1]);
        for (pm, pr) in hi.members.iter().zip(&hi.roots) {
            for (qm, qr) in lo.members.iter().zip(&lo.roots) {
                for ep in pr.both() {
                    for eq in qr.both() {
                        rep.instances += 1;
                        if eq.neg().is_subset(ep)? {
                            continue;
                        }
                        let rp = pr.residue_of(ep).unwrap();
                        let rq = qr.residue_of(eq).unwrap();
                        let panel_ok = match panel_meeting(rp, rq)? {
                            Some((x, y)) => {
                                (x == *rp.gate() || y == *rp.gate())
                                    && rq.gate().length() + 1 == rp.gate().length()
                            }
                            None => false,
                        };
                        if !panel_ok {
                            rep.failures.push(format!(
                                "i={}/{}: neither containment nor shared panel for {} of {} \
                                 against {} of {}",
                                hi.i,
                                lo.i,
                                ep.serial(),
                                pm.label(),
                                eq.serial(),
                                qm.label()
                            ));
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

fn check_escape(levels: &[Level], rep: &mut LemmaReport) {
    for lv in levels {
        for ((m, roots), c_set) in lv.members.iter().zip(&lv.roots).zip(&lv.c_sets) {
            for w in c_set.difference(&lv.c_i) {
                rep.instances += 1;
                if roots.delta.contains(w) && roots.gamma.contains(w) {
                    rep.failures.push(format!(
                        "i={}: {} leaves the level set inside both roots of {}",
                        lv.i,
                        w,
                        m.label()
                    ));
                }
            }
        }
    }
}

fn check_unique_supplier(levels: &[Level], rep: &mut LemmaReport) -> Result<()> {
    for lv in levels {
        let c_next = c_level(lv.i + 1)?;
        for w in c_next.difference(&lv.c_i) {
            rep.instances += 1;
            let suppliers = lv.c_sets.iter().filter(|c| c.contains(w)).count();
            if suppliers != 1 {
                rep.failures.push(format!(
                    "i={}: {} is supplied by {} members, expected 1",
                    lv.i, w, suppliers
                ));
            }
        }
    }
    Ok(())
}

fn check_chain_extension(levels: &[Level], rep: &mut LemmaReport) -> Result<()> {
    for lv in levels {
        let c_next = c_level(lv.i + 1)?;
        for m in &lv.members {
            rep.instances += 1;
            for w in chain_extension(m)? {
                if !c_next.contains(&w) {
                    rep.failures.push(format!(
                        "i={}: chain of {} reaches {} outside the next level set",
                        lv.i,
                        m.label(),
                        w
                    ));
                    break;
                }
            }
        }
    }
    Ok(())
}

fn check_auxiliary(levels: &[Level], rep: &mut LemmaReport) -> Result<()> {
    for lv in levels {
        for res in rank2_residues(lv.i)? {
            let (a, b) = res.typ().two()?;
            let w = res.gate();
            let i = w.length();
            for (s, t) in [(a, b), (b, a)] {
                let r = Gen::third(s, t);
                if i == 0
                    || w.mul_gen(r).length() != i - 1
                    || w.mul_gen(r).mul_gen(t).length() != i
                {
                    continue;
                }
                let target = Residue::of(w, GenSet::pair(r, t));
                let c_target = c_of_residue(&target)?;
                let escape = Root::simple(t).act(&w.mul_gen(t).mul_gen(r)).neg();
                for alpha in hat_phi_residue(&res)? {
                    rep.instances += 1;
                    if let Some(x) = c_target.iter().find(|x| !alpha.contains(x)) {
                        rep.failures.push(format!(
                            "i={}: chamber {} of the {} side-residue of {} outside {}",
                            lv.i,
                            x,
                            target,
                            res,
                            alpha.serial()
                        ));
                        continue;
                    }
                    if !escape.is_subset(&alpha)? {
                        rep.failures.push(format!(
                            "i={}: escape root {} of {} not inside {}",
                            lv.i,
                            escape.serial(),
                            res,
                            alpha.serial()
                        ));
                    }
                }
            }
        }
    }
    Ok(())
}

fn check_level_containment(levels: &[Level], rep: &mut LemmaReport) -> Result<()> {
    for lv in levels {
        for m in &lv.members {
            for alpha in hat_phi(m)? {
                rep.instances += 1;
                if let Some(w) = lv.c_i.iter().find(|w| !alpha.contains(w)) {
                    rep.failures.push(format!(
                        "i={}: {} outside head root {} of {}",
                        lv.i,
                        w,
                        alpha.serial(),
                        m.label()
                    ));
                }
            }
        }
    }
    Ok(())
}

/// The containment lemma battery over classified members at gate lengths up
/// to `i_max`, reported per lemma.
pub fn lemma_suite_levels(i_max: usize) -> Result<Vec<LemmaReport>> {
    let levels = (0..=i_max).map(level).collect::<Result<Vec<_>>>()?;
    let mut reports = Vec::new();

    let mut rep = report("four-roots-distinct");
    check_four_roots(&levels, &mut rep);
    reports.push(rep);

    let mut rep = report("opposite-root-containment");
    check_opposite_containment(&levels, &mut rep)?;
    reports.push(rep);

    let mut rep = report("adjacent-level-alternative");
    check_adjacent_levels(&levels, &mut rep)?;
    reports.push(rep);

    let mut rep = report("escape-through-opposite-roots");
    check_escape(&levels, &mut rep);
    reports.push(rep);

    let mut rep = report("unique-supplier");
    check_unique_supplier(&levels, &mut rep)?;
    reports.push(rep);

    let mut rep = report("chain-extension-next-level");
    check_chain_extension(&levels, &mut rep)?;
    reports.push(rep);

    let mut rep = report("side-residue-containment");
    check_auxiliary(&levels, &mut rep)?;
    reports.push(rep);

    let mut rep = report("level-set-inside-head-roots");
    check_level_containment(&levels, &mut rep)?;
    reports.push(rep);

    Ok(reports)
}

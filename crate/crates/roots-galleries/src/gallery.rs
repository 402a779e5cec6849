//! Minimal galleries from the identity chamber and their crossing sequences.

use std::fmt;

use coxeter_core::{sphere, CoxeterError, Gen, GroupElement, Result};

use crate::root::Root;

/// A minimal gallery starting at the identity chamber, stored by its type.
/// The type is always a reduced word.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gallery {
    typ: Vec<Gen>,
}

impl Gallery {
    pub fn new(typ: Vec<Gen>) -> Result<Gallery> {
        if GroupElement::from_word(&typ).length() != typ.len() {
            return Err(CoxeterError::invalid(format!(
                "gallery type {} is not reduced",
                typ.iter().map(|g| g.letter()).collect::<String>()
            )));
        }
        Ok(Gallery { typ })
    }

    /// The canonical (ShortLex) minimal gallery to `w`.
    pub fn canonical(w: &GroupElement) -> Gallery {
        Gallery {
            typ: w.word().to_vec(),
        }
    }

    pub fn parse(text: &str) -> Result<Gallery> {
        let trimmed = text.trim();
        let mut typ = Vec::new();
        if trimmed != "1" && !trimmed.is_empty() {
            for c in trimmed.chars() {
                if c == '.' || c == ' ' {
                    continue;
                }
                typ.push(Gen::from_letter(c)?);
            }
        }
        Gallery::new(typ)
    }

    pub fn typ(&self) -> &[Gen] {
        &self.typ
    }

    pub fn len(&self) -> usize {
        self.typ.len()
    }

    pub fn is_empty(&self) -> bool {
        self.typ.is_empty()
    }

    /// The chamber the gallery ends at.
    pub fn target(&self) -> GroupElement {
        GroupElement::from_word(&self.typ)
    }

    /// All `len + 1` chambers, starting at the identity.
    pub fn chambers(&self) -> Vec<GroupElement> {
        let mut out = Vec::with_capacity(self.typ.len() + 1);
        out.push(GroupElement::identity());
        for (i, _) in self.typ.iter().enumerate() {
            out.push(GroupElement::from_word(&self.typ[..=i]));
        }
        out
    }

    /// The root crossed by step `i` (0-based), oriented to contain the
    /// identity chamber.  For a minimal gallery these are positive, distinct,
    /// and their set is the separating set of the target.
    pub fn crossing(&self, i: usize) -> Result<Root> {
        if i >= self.typ.len() {
            return Err(CoxeterError::invalid(format!(
                "crossing index {i} out of range for gallery of length {}",
                self.typ.len()
            )));
        }
        let prefix = GroupElement::from_word(&self.typ[..i]);
        Ok(Root::simple(self.typ[i]).act(&prefix))
    }

    /// All crossed roots in gallery order.
    pub fn crossings(&self) -> Vec<Root> {
        let mut out = Vec::with_capacity(self.typ.len());
        let mut m = coxeter_core::Mat3::IDENTITY;
        for g in &self.typ {
            out.push(Root::simple(*g).act_mat(&m));
            m = m.mul(&coxeter_core::Mat3::reflection(*g));
        }
        out
    }

    /// Prepend or strip `s`: the length-preserving bijection between
    /// galleries of `w` compatible with `s` and galleries of `s·w`.
    pub fn shift(&self, s: Gen) -> Result<Gallery> {
        let w = self.target();
        if w.lmul_gen(s).length() == w.length() + 1 {
            let mut typ = Vec::with_capacity(self.typ.len() + 1);
            typ.push(s);
            typ.extend_from_slice(&self.typ);
            Ok(Gallery { typ })
        } else if self.typ.first() == Some(&s) {
            Ok(Gallery {
                typ: self.typ[1..].to_vec(),
            })
        } else {
            Err(CoxeterError::invalid(format!(
                "shift by {s}: gallery {self} does not start with {s}"
            )))
        }
    }
}

impl fmt::Display for Gallery {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.typ.is_empty() {
            return write!(f, "1");
        }
        for g in &self.typ {
            write!(f, "{}", g.letter())?;
        }
        Ok(())
    }
}

impl fmt::Debug for Gallery {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gallery({self})")
    }
}

impl serde::Serialize for Gallery {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.typ.serialize(s)
    }
}

impl<'de> serde::Deserialize<'de> for Gallery {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Gallery, D::Error> {
        let typ = Vec::<Gen>::deserialize(d)?;
        Gallery::new(typ).map_err(serde::de::Error::custom)
    }
}

/// All minimal galleries ending at `w`, in lexicographic order of type.
/// The first entry is always the canonical gallery.
pub fn min_galleries(w: &GroupElement) -> Vec<Gallery> {
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    collect_min(w.clone(), &mut prefix, &mut out);
    out
}

fn collect_min(w: GroupElement, prefix: &mut Vec<Gen>, out: &mut Vec<Gallery>) {
    if w.is_identity() {
        out.push(Gallery {
            typ: prefix.clone(),
        });
        return;
    }
    for s in w.left_descents() {
        prefix.push(s);
        collect_min(w.lmul_gen(s), prefix, out);
        prefix.pop();
    }
}

/// Galleries of `w` compatible with a left shift by `s`: all of them when
/// `l(sw) > l(w)`, otherwise the ones whose type starts with `s`.
pub fn min_galleries_starting(w: &GroupElement, s: Gen) -> Vec<Gallery> {
    let all = min_galleries(w);
    if w.lmul_gen(s).length() > w.length() {
        all
    } else {
        all.into_iter()
            .filter(|gal| gal.typ().first() == Some(&s))
            .collect()
    }
}

/// The separating roots of `w` (all oriented to contain the identity),
/// in canonical-gallery crossing order.  There are `l(w)` of them.
pub fn phi(w: &GroupElement) -> Vec<Root> {
    Gallery::canonical(w).crossings()
}

/// All roots separated from the identity by some chamber of length <= k:
/// the positive roots of depth <= k.
pub fn roots_to_depth(k: usize) -> Result<Vec<Root>> {
    let mut out: Vec<Root> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for radius in 1..=k {
        for w in sphere(radius)? {
            let gal = Gallery::canonical(&w);
            let last = gal.crossing(radius - 1)?;
            if seen.insert(last.vec().clone()) {
                out.push(last);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use coxeter_core::ball;

    fn g(text: &str) -> GroupElement {
        text.parse().unwrap()
    }

    #[test]
    fn chambers_and_crossings() {
        let gal = Gallery::parse("stst").unwrap();
        assert_eq!(gal.len(), 4);
        let chambers = gal.chambers();
        assert_eq!(chambers.len(), 5);
        assert_eq!(chambers[0], GroupElement::identity());
        assert_eq!(chambers[4], g("stst"));
        let roots = gal.crossings();
        assert_eq!(roots.len(), 4);
        // First crossing = alpha_s; all positive and distinct.
        assert_eq!(roots[0], Root::simple(Gen::S));
        for r in &roots {
            assert!(r.is_positive());
        }
        for i in 0..4 {
            for j in i + 1..4 {
                assert_ne!(roots[i], roots[j]);
            }
            assert_eq!(roots[i], gal.crossing(i).unwrap());
        }
        // Crossed roots contain exactly the chambers before the crossing.
        for (i, root) in roots.iter().enumerate() {
            for (j, c) in chambers.iter().enumerate() {
                assert_eq!(root.contains(c), j <= i);
            }
        }
    }

    #[test]
    fn non_reduced_type_rejected() {
        assert!(Gallery::parse("ss").is_err());
        assert!(Gallery::parse("srrs").is_err());
        assert!(Gallery::parse("ststst").is_err()); // = ts, not reduced
    }

    #[test]
    fn min_gallery_counts() {
        assert_eq!(min_galleries(&g("r")).len(), 1);
        assert_eq!(min_galleries(&g("rs")).len(), 1);
        // The longest element of the {r,s} residue has exactly the two
        // reduced words rsrs and srsr.
        let w = g("rsrs");
        let gals = min_galleries(&w);
        assert_eq!(gals.len(), 2);
        assert_eq!(gals[0].typ(), g("rsrs").word());
        assert_eq!(gals[1].target(), w);
        // Canonical gallery always first.
        for w in ball(6).unwrap() {
            let gals = min_galleries(&w);
            assert_eq!(gals[0], Gallery::canonical(&w));
            assert!(!gals.is_empty());
            for gal in &gals {
                assert_eq!(gal.target(), w);
                assert_eq!(gal.len(), w.length());
            }
            // Lexicographic and duplicate-free.
            for pair in gals.windows(2) {
                assert!(pair[0].typ() < pair[1].typ());
            }
        }
    }

    #[test]
    fn crossing_sets_agree_across_galleries() {
        // The crossing set depends only on the target chamber.
        use std::collections::HashSet;
        for w in ball(6).unwrap() {
            let canon: HashSet<Vec<(i64, i64)>> = phi(&w)
                .iter()
                .map(|r| r.vec().iter().map(|c| (c.a, c.b)).collect())
                .collect();
            assert_eq!(canon.len(), w.length());
            for gal in min_galleries(&w) {
                let other: HashSet<Vec<(i64, i64)>> = gal
                    .crossings()
                    .iter()
                    .map(|r| r.vec().iter().map(|c| (c.a, c.b)).collect())
                    .collect();
                assert_eq!(canon, other, "galleries of {w} disagree");
            }
        }
    }

    #[test]
    fn shifts() {
        let gal = Gallery::parse("st").unwrap();
        // l(r·st) = 3: prepend.
        let up = gal.shift(Gen::R).unwrap();
        assert_eq!(up.typ(), g("rst").word());
        // Strip: galleries of rsrs starting with s: srsr.
        let w = g("rsrs");
        let starting = min_galleries_starting(&w, Gen::S);
        assert_eq!(starting.len(), 1);
        let down = starting[0].shift(Gen::S).unwrap();
        assert_eq!(down.target(), w.lmul_gen(Gen::S));
        assert_eq!(down.len(), 3);
        // Galleries not starting with s cannot shift down by s.
        let canon = Gallery::canonical(&w);
        assert!(canon.shift(Gen::S).is_err());
        // Bijection check over a ball: |Min_s(w)| = |Min(sw)| when l(sw)<l(w).
        for w in ball(5).unwrap() {
            for s in coxeter_core::GENS {
                if w.lmul_gen(s).length() < w.length() {
                    assert_eq!(
                        min_galleries_starting(&w, s).len(),
                        min_galleries(&w.lmul_gen(s)).len()
                    );
                }
            }
        }
    }

    #[test]
    fn phi_matches_membership() {
        // phi(w) = separating roots: alpha in phi(w) iff w outside alpha.
        for w in ball(5).unwrap() {
            let inv = w.inverse_matrix();
            let set = phi(&w);
            assert_eq!(set.len(), w.length());
            for root in &set {
                assert!(root.is_positive());
                assert!(!root.contains_inv(&inv));
            }
        }
        // roots_to_depth(k) is exactly the union of phi(w) over the ball,
        // and each reported depth is the true minimum over chambers.
        let k = 4;
        let all = roots_to_depth(k).unwrap();
        let mut union: Vec<Root> = Vec::new();
        for w in ball(k).unwrap() {
            for root in phi(&w) {
                if !union.contains(&root) {
                    union.push(root);
                }
            }
        }
        assert_eq!(all.len(), union.len());
        for root in &all {
            assert!(union.contains(root));
            let depth = root.depth().unwrap();
            assert!(depth <= k);
            let brute = ball(k)
                .unwrap()
                .iter()
                .filter(|w| !root.contains(w))
                .map(|w| w.length())
                .min()
                .unwrap();
            assert_eq!(depth, brute);
        }
        assert_eq!(roots_to_depth(1).unwrap().len(), 3);
        assert_eq!(roots_to_depth(2).unwrap().len(), 9);
    }
}

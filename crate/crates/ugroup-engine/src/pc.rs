//! Power-commutator presentations for the finite 2-groups attached to a
//! group element: one generator per separating root, exponent 2, and one
//! tail word per generator pair recording the collected commutator value.

use blueprints::Blueprint;
use coxeter_core::{CoxeterError, GroupElement, Result};
use roots_galleries::{min_galleries, Gallery, Root};

/// Exponent vector in base-gallery order: bit `i` set means generator `i`
/// appears in the normal form.  Normal forms are ascending products.
pub type Bits = u16;

/// Default length cap: groups up to 2^12 elements.
pub const MAX_GROUP_LEN: usize = 12;

/// Steps allowed per collection before we declare the tail table broken.
const COLLECT_FUEL: u64 = 1 << 24;

/// Outcome of consistency certification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    /// All overlap, permutation-action and gallery-relation checks passed,
    /// so the normal forms really are 2^n distinct elements.
    Consistent {
        overlap_checks: usize,
        gallery_relations: usize,
        permutation_checked: bool,
    },
    /// Some check failed; the witness names the first offending relation.
    Inconsistent { witness: String },
    Unchecked,
}

impl Certificate {
    pub fn is_consistent(&self) -> bool {
        matches!(self, Certificate::Consistent { .. })
    }
}

/// A finite 2-group on `n = l(w)` involutive generators, one per root
/// crossed by the base gallery, with multiplication by collection.
#[derive(Debug, Clone)]
pub struct PcGroup {
    word: GroupElement,
    base_gallery: Gallery,
    gens: Vec<Root>,
    /// `tails[j * n + i]` for `i < j` is the collected value of
    /// `u_i u_j u_i u_j`, supported strictly between `i` and `j`.
    tails: Vec<Bits>,
    certificate: Certificate,
}

impl PcGroup {
    /// Build the group for `w` by reading every pair's commutator value off
    /// the base gallery of the provider.
    pub fn build(p: &Blueprint, w: &GroupElement) -> Result<PcGroup> {
        if w.length() > MAX_GROUP_LEN {
            return Err(CoxeterError::limit("group length", w.length(), MAX_GROUP_LEN));
        }
        let base_gallery = Gallery::canonical(w);
        let gens = base_gallery.crossings();
        let n = gens.len();
        let mut tails = vec![0u16; n * n];
        for j in 0..n {
            for i in 0..j {
                let m = p.query(&base_gallery, i, j)?;
                let mut word = 0u16;
                for root in &m {
                    let pos = gens.iter().position(|g| g == root).ok_or_else(|| {
                        CoxeterError::invalid(format!(
                            "tail letter {} is not crossed by the base gallery",
                            root.serial()
                        ))
                    })?;
                    if pos <= i || pos >= j {
                        return Err(CoxeterError::invalid(format!(
                            "tail letter {} sits outside the open interval ({}, {})",
                            root.serial(),
                            i + 1,
                            j + 1
                        )));
                    }
                    word |= 1 << pos;
                }
                tails[j * n + i] = word;
            }
        }
        Ok(PcGroup {
            word: w.clone(),
            base_gallery,
            gens,
            tails,
            certificate: Certificate::Unchecked,
        })
    }

    /// Raw constructor from an explicit tail table; callers own the burden
    /// of supplying tails supported below their `j` index (collection cannot
    /// terminate otherwise).  Meant for experiments and negative tests.
    pub fn from_tails(w: &GroupElement, tails: Vec<Bits>) -> Result<PcGroup> {
        let base_gallery = Gallery::canonical(w);
        let gens = base_gallery.crossings();
        let n = gens.len();
        if tails.len() != n * n {
            return Err(CoxeterError::invalid(format!(
                "tail table has {} entries, expected {}",
                tails.len(),
                n * n
            )));
        }
        Ok(PcGroup {
            word: w.clone(),
            base_gallery,
            gens,
            tails,
            certificate: Certificate::Unchecked,
        })
    }

    pub fn word(&self) -> &GroupElement {
        &self.word
    }

    pub fn base_gallery(&self) -> &Gallery {
        &self.base_gallery
    }

    /// Generators in base-gallery crossing order.
    pub fn gens(&self) -> &[Root] {
        &self.gens
    }

    pub fn rank(&self) -> usize {
        self.gens.len()
    }

    /// 2^n; the true group order once the certificate is consistent.
    pub fn order(&self) -> u64 {
        1u64 << self.rank()
    }

    pub fn certificate(&self) -> &Certificate {
        &self.certificate
    }

    /// Tail word of the pair `(i, j)`, `i < j`, zero-based.
    pub fn tail(&self, i: usize, j: usize) -> Bits {
        self.tails[j * self.rank() + i]
    }

    /// Overwrite one tail entry.  Only sensible for negative tests.
    pub fn set_tail(&mut self, i: usize, j: usize, word: Bits) {
        let n = self.rank();
        self.tails[j * n + i] = word;
        self.certificate = Certificate::Unchecked;
    }

    /// Index of a root among the generators.
    pub fn index_of(&self, root: &Root) -> Option<usize> {
        self.gens.iter().position(|g| g == root)
    }

    /// Right-multiply a normal form by generator `g`.
    ///
    /// The highest letter `h > g` blocks; the relation `u_h u_g =
    /// u_g T u_h` (with `T = tails[h][g]`) moves `g` leftwards.  Tail
    /// letters live strictly inside `(g, h)`, so the top index shrinks and
    /// collection terminates.
    pub fn rmul(&self, x: Bits, g: usize) -> Bits {
        debug_assert!(g < self.rank());
        let mut fuel = COLLECT_FUEL;
        self.rmul_fuel(x, g, &mut fuel)
    }

    fn rmul_fuel(&self, x: Bits, g: usize, fuel: &mut u64) -> Bits {
        assert!(*fuel > 0, "collection did not terminate: tail table is broken");
        *fuel -= 1;
        let blockers = x >> (g + 1);
        if blockers == 0 {
            return x ^ (1 << g);
        }
        let h = (Bits::BITS - 1 - x.leading_zeros()) as usize;
        let rest = x & !(1 << h);
        let mut acc = self.rmul_fuel(rest, g, fuel);
        let mut tail = self.tails[h * self.rank() + g];
        while tail != 0 {
            let t = tail.trailing_zeros() as usize;
            tail &= tail - 1;
            acc = self.rmul_fuel(acc, t, fuel);
        }
        self.rmul_fuel(acc, h, fuel)
    }

    /// Collected product of two normal forms.
    pub fn multiply(&self, x: Bits, y: Bits) -> Bits {
        let mut acc = x;
        let mut rest = y;
        while rest != 0 {
            let g = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            acc = self.rmul(acc, g);
        }
        acc
    }

    /// Inverse of a normal form: the letters in descending order.
    pub fn inverse(&self, x: Bits) -> Bits {
        let mut acc = 0;
        for g in (0..self.rank()).rev() {
            if x & (1 << g) != 0 {
                acc = self.rmul(acc, g);
            }
        }
        acc
    }

    /// Collected value of an arbitrary word in the generators.
    pub fn collect_word(&self, letters: &[usize]) -> Bits {
        let mut acc = 0;
        for &g in letters {
            acc = self.rmul(acc, g);
        }
        acc
    }

    /// Consistency certification.
    ///
    /// Three independent checks: polycyclic overlap tests (both
    /// bracketings of `u_k u_j u_i` and the power overlaps with `u² = 1`),
    /// a brute-force verification for n <= 8 that left multiplication by
    /// each generator is an involution of the 2^n normal forms satisfying
    /// the defining relations pointwise, and a re-evaluation of every
    /// commutator relation along *every* reduced gallery of `w` against the
    /// provider.  Any disagreement between two galleries' answers is a
    /// failure, not a tie to break.
    pub fn certify_cb3(&mut self, p: &Blueprint) -> Result<&Certificate> {
        let cert = self.run_checks(p)?;
        self.certificate = cert;
        Ok(&self.certificate)
    }

    fn run_checks(&self, p: &Blueprint) -> Result<Certificate> {
        let n = self.rank();
        let mut overlap_checks = 0usize;

        for j in 0..n {
            for i in 0..j {
                let ei = 1u16 << i;
                let ej = 1u16 << j;
                // u_j u_i u_i = u_j and u_j u_j u_i = u_i, associated both ways.
                let a = self.multiply(self.multiply(ej, ei), ei);
                let b = self.multiply(ej, self.multiply(ei, ei));
                if a != ej || b != ej {
                    return Ok(Certificate::Inconsistent {
                        witness: format!("power overlap u_{} u_{}^2 failed", j + 1, i + 1),
                    });
                }
                let c = self.multiply(self.multiply(ej, ej), ei);
                let d = self.multiply(ej, self.multiply(ej, ei));
                if c != ei || d != ei {
                    return Ok(Certificate::Inconsistent {
                        witness: format!("power overlap u_{}^2 u_{} failed", j + 1, i + 1),
                    });
                }
                overlap_checks += 2;
            }
        }
        for k in 0..n {
            for j in 0..k {
                for i in 0..j {
                    let ei = 1u16 << i;
                    let ej = 1u16 << j;
                    let ek = 1u16 << k;
                    let left = self.multiply(self.multiply(ek, ej), ei);
                    let right = self.multiply(ek, self.multiply(ej, ei));
                    if left != right {
                        return Ok(Certificate::Inconsistent {
                            witness: format!(
                                "associativity overlap u_{} u_{} u_{} failed",
                                k + 1,
                                j + 1,
                                i + 1
                            ),
                        });
                    }
                    overlap_checks += 1;
                }
            }
        }

        let permutation_checked = n <= 8;
        if permutation_checked {
            if let Some(witness) = self.check_left_action() {
                return Ok(Certificate::Inconsistent { witness });
            }
        }

        let mut gallery_relations = 0usize;
        for gal in min_galleries(&self.word) {
            let crossings = gal.crossings();
            for j in 0..crossings.len() {
                for i in 0..j {
                    let a = self.index_of(&crossings[i]).ok_or_else(|| {
                        CoxeterError::invalid("gallery crossing missing from generator list")
                    })?;
                    let b = self.index_of(&crossings[j]).ok_or_else(|| {
                        CoxeterError::invalid("gallery crossing missing from generator list")
                    })?;
                    let lhs = self.collect_word(&[a, b, a, b]);
                    let m = p.query(&gal, i, j)?;
                    let mut letters = Vec::with_capacity(m.len());
                    for root in &m {
                        letters.push(self.index_of(root).ok_or_else(|| {
                            CoxeterError::invalid(format!(
                                "commutator value {} is not a generator",
                                root.serial()
                            ))
                        })?);
                    }
                    let rhs = self.collect_word(&letters);
                    if lhs != rhs {
                        return Ok(Certificate::Inconsistent {
                            witness: format!(
                                "gallery {} pair ({}, {}): commutator collects to {:#06b}, \
                                 provider word collects to {:#06b}",
                                gal, i + 1, j + 1, lhs, rhs
                            ),
                        });
                    }
                    gallery_relations += 1;
                }
            }
        }

        Ok(Certificate::Consistent {
            overlap_checks,
            gallery_relations,
            permutation_checked,
        })
    }

    /// Brute-force stage: left multiplication by each generator must be an
    /// involution of the full set of normal forms, and each defining
    /// relation `u_j u_i = u_i T u_j` must hold pointwise as maps.  Passing
    /// exhibits 2^n distinct elements, the lower bound matching collection's
    /// upper bound.
    fn check_left_action(&self) -> Option<String> {
        let n = self.rank();
        let total: u32 = 1 << n;
        for g in 0..n {
            let eg = 1u16 << g;
            for z in 0..total {
                let z = z as Bits;
                if self.multiply(eg, self.multiply(eg, z)) != z {
                    return Some(format!(
                        "left multiplication by u_{} is not an involution at {:#b}",
                        g + 1,
                        z
                    ));
                }
            }
        }
        for j in 0..n {
            for i in 0..j {
                let ei = 1u16 << i;
                let ej = 1u16 << j;
                for z in 0..total {
                    let z = z as Bits;
                    // u_j (u_i z) versus u_i T u_j z, letters applied right to left.
                    let lhs = self.multiply(ej, self.multiply(ei, z));
                    let mut rhs = self.multiply(ej, z);
                    let tail = self.tails[j * n + i];
                    for t in (0..n).rev() {
                        if tail & (1 << t) != 0 {
                            rhs = self.multiply(1 << t, rhs);
                        }
                    }
                    rhs = self.multiply(ei, rhs);
                    if lhs != rhs {
                        return Some(format!(
                            "relation u_{} u_{} = u_{} T u_{} fails as a permutation at {:#b}",
                            j + 1,
                            i + 1,
                            i + 1,
                            j + 1,
                            z
                        ));
                    }
                }
            }
        }
        None
    }
}

/// Convenience free function mirroring the builder.
pub fn build_ugroup(p: &Blueprint, w: &GroupElement) -> Result<PcGroup> {
    PcGroup::build(p, w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use coxeter_core::Gen;

    fn el(word: &str) -> GroupElement {
        GroupElement::parse(word).unwrap()
    }

    #[test]
    fn single_letter_group_has_order_two() {
        let p = Blueprint::kac_moody();
        let g = PcGroup::build(&p, &el("s")).unwrap();
        assert_eq!(g.rank(), 1);
        assert_eq!(g.order(), 2);
        assert_eq!(g.multiply(1, 1), 0);
        assert_eq!(g.multiply(1, 0), 1);
    }

    #[test]
    fn octagon_group_tails_match_the_rank2_table() {
        let p = Blueprint::kac_moody();
        let g = PcGroup::build(&p, &el("stst")).unwrap();
        assert_eq!(g.rank(), 4);
        for j in 0..4 {
            for i in 0..j {
                let expected = if (i, j) == (0, 3) { 0b0110 } else { 0 };
                assert_eq!(g.tail(i, j), expected, "pair ({}, {})", i + 1, j + 1);
            }
        }
    }

    #[test]
    fn extreme_pair_collection_inserts_the_tail() {
        let p = Blueprint::kac_moody();
        let g = PcGroup::build(&p, &el("stst")).unwrap();
        // u_4 * u_1 = u_1 u_2 u_3 u_4.
        assert_eq!(g.multiply(0b1000, 0b0001), 0b1111);
        // u_1 * u_4 stays in normal form.
        assert_eq!(g.multiply(0b0001, 0b1000), 0b1001);
        // The commutator itself.
        assert_eq!(g.collect_word(&[0, 3, 0, 3]), 0b0110);
    }

    #[test]
    fn empty_blueprint_gives_elementary_abelian_groups() {
        let p = Blueprint::empty();
        let g = PcGroup::build(&p, &el("rstsrt")).unwrap();
        assert_eq!(g.rank(), 6);
        for x in 0..(1u16 << 6) {
            assert_eq!(g.multiply(x, x), 0);
            assert_eq!(g.inverse(x), x);
        }
        let mut g = g;
        assert!(g.certify_cb3(&p).unwrap().is_consistent());
    }

    #[test]
    fn inverse_undoes_multiplication() {
        let p = Blueprint::kac_moody();
        let g = PcGroup::build(&p, &el("ststrs")).unwrap();
        for x in 0..(1u16 << g.rank()) {
            let inv = g.inverse(x);
            assert_eq!(g.multiply(x, inv), 0);
            assert_eq!(g.multiply(inv, x), 0);
        }
    }

    #[test]
    fn octagon_group_certifies() {
        let p = Blueprint::kac_moody();
        let mut g = PcGroup::build(&p, &el("stst")).unwrap();
        let cert = g.certify_cb3(&p).unwrap().clone();
        match cert {
            Certificate::Consistent {
                permutation_checked,
                gallery_relations,
                ..
            } => {
                assert!(permutation_checked);
                // stst = tsts has two reduced galleries with six pairs each.
                assert_eq!(gallery_relations, 12);
            }
            other => panic!("expected consistency, got {:?}", other),
        }
    }

    #[test]
    fn corrupted_tail_is_caught() {
        let p = Blueprint::kac_moody();
        let mut g = PcGroup::build(&p, &el("stst")).unwrap();
        // Pair (2, 3) has an empty open interval; planting the letter u_1
        // below it breaks consistency without breaking termination.
        g.set_tail(1, 2, 0b0001);
        let cert = g.certify_cb3(&p).unwrap().clone();
        assert!(matches!(cert, Certificate::Inconsistent { .. }));
    }

    #[test]
    fn oversized_words_are_rejected() {
        let p = Blueprint::kac_moody();
        let long = GroupElement::from_word(&[
            Gen::R,
            Gen::S,
            Gen::T,
            Gen::R,
            Gen::S,
            Gen::T,
            Gen::R,
            Gen::S,
            Gen::T,
            Gen::R,
            Gen::S,
            Gen::T,
            Gen::R,
        ]);
        assert_eq!(long.length(), 13);
        assert!(PcGroup::build(&p, &long).is_err());
    }
}

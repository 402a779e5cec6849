//! Exhaustive sweeps: certification of every group up to length 6,
//! embeddings across every covering pair, the index-2 wall subgroup for
//! every shallow wall, and the intersection lemma on its full shallow range.

use blueprints::Blueprint;
use coxeter_core::{ball, sphere, Gen, GroupElement, GENS};
use ugroup_engine::{
    build_ugroup, embed, key_lemma_finite, v_subgroup, Certificate, KeyPart, PcGroup,
};

#[test]
fn every_group_up_to_length_six_certifies() {
    let p = Blueprint::kac_moody();
    let mut certified = 0usize;
    for w in ball(6).unwrap() {
        let mut g = PcGroup::build(&p, &w).unwrap();
        let cert = g.certify_cb3(&p).unwrap();
        match cert {
            Certificate::Consistent {
                permutation_checked,
                ..
            } => {
                assert!(*permutation_checked, "length {} fits the brute force", w.length());
            }
            other => panic!("group of {} failed: {:?}", w, other),
        }
        assert_eq!(g.order(), 1u64 << w.length());
        certified += 1;
    }
    assert_eq!(certified, 142);
}

#[test]
fn every_covering_pair_up_to_length_six_embeds() {
    let p = Blueprint::kac_moody();
    let mut pairs = 0usize;
    for w in ball(6).unwrap() {
        if w.is_identity() {
            continue;
        }
        let big = build_ugroup(&p, &w).unwrap();
        for s in w.right_descents() {
            let v = w.mul_gen(s);
            let small = build_ugroup(&p, &v).unwrap();
            let rep = embed(&small, &big).unwrap();
            assert!(
                rep.injective,
                "embedding {} into {} failed: {:?}",
                v, w, rep.failures
            );
            assert_eq!(rep.image_order, small.order());
            pairs += 1;
        }
    }
    assert!(pairs > 150);
}

#[test]
fn every_shallow_wall_has_an_index_two_v() {
    let p = Blueprint::kac_moody();
    let mut walls = 0usize;
    for w_r in ball(3).unwrap() {
        for a in 0..3 {
            for b in (a + 1)..3 {
                let (s, t) = (GENS[a], GENS[b]);
                if w_r.mul_gen(s).length() != w_r.length() + 1
                    || w_r.mul_gen(t).length() != w_r.length() + 1
                {
                    continue;
                }
                let wall = w_r
                    .mul(&coxeter_core::longest_element(coxeter_core::GenSet::pair(s, t)).unwrap());
                if wall.length() != w_r.length() + 4 {
                    continue;
                }
                let g = build_ugroup(&p, &wall).unwrap();
                let v = v_subgroup(&g, s, t).unwrap();
                assert_eq!(v.index_in(&g), 2, "wall of {} at {}{}", w_r, s.letter(), t.letter());

                // The middle wall crossings never enter individually.
                let gal = g.base_gallery();
                let len = gal.len();
                let middle1 = g.index_of(&gal.crossing(len - 3).unwrap()).unwrap();
                let middle2 = g.index_of(&gal.crossing(len - 2).unwrap()).unwrap();
                assert!(!v.contains(1 << middle1));
                assert!(!v.contains(1 << middle2));
                walls += 1;
            }
        }
    }
    assert!(walls >= 20, "only {} walls exercised", walls);
}

#[test]
fn intersection_lemma_part_a_sweeps_clean() {
    let p = Blueprint::kac_moody();
    let mut checked = 0usize;
    for w in ball(3).unwrap() {
        for a in 0..3 {
            for b in (a + 1)..3 {
                let (s, t) = (GENS[a], GENS[b]);
                if w.mul_gen(s).length() != w.length() + 1
                    || w.mul_gen(t).length() != w.length() + 1
                {
                    continue;
                }
                let rep = key_lemma_finite(&p, &w, s, t, KeyPart::A).unwrap();
                assert!(rep.holds, "part (a) at {} for {}{}: {:?}", w, s.letter(), t.letter(), rep.details);
                checked += 1;
            }
        }
    }
    assert!(checked >= 20);
}

#[test]
fn intersection_lemma_part_b_sweeps_clean() {
    let p = Blueprint::kac_moody();
    let mut checked = 0usize;
    for w in ball(3).unwrap() {
        for s in GENS {
            for t in GENS {
                if s == t {
                    continue;
                }
                if w.mul_gen(s).length() != w.length() + 1
                    || w.mul_gen(t).length() != w.length() + 1
                {
                    continue;
                }
                let r = Gen::third(s, t);
                let tail = GroupElement::from_word(&[t, s, t])
                    .mul(&coxeter_core::longest_element(coxeter_core::GenSet::pair(r, s)).unwrap());
                if w.mul(&tail).length() != w.length() + 7 {
                    continue;
                }
                let rep = key_lemma_finite(&p, &w, s, t, KeyPart::B).unwrap();
                assert!(rep.holds, "part (b) at {} for ({}, {}): {:?}", w, s.letter(), t.letter(), rep.details);
                checked += 1;
            }
        }
    }
    assert!(checked >= 10, "only {} part (b) instances", checked);
}

#[test]
fn ball_sizes_match_the_frozen_counts() {
    // The sweep sizes above assume these.
    let sizes: Vec<usize> = (0..=4).map(|k| sphere(k).unwrap().len()).collect();
    assert_eq!(sizes, vec![1, 3, 6, 12, 21]);
    assert_eq!(ball(4).unwrap().len(), 43);
}

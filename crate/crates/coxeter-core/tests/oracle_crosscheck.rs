//! Two independent implementations of the group must agree: the braid-move
//! word oracle (presentation only) versus the reflection-representation
//! kernel (exact matrices over Z[sqrt 2]).

use coxeter_core::oracle;
use coxeter_core::{ball, sphere, Gen, GroupElement};

fn to_word(w: &GroupElement) -> oracle::Word {
    w.word().iter().map(|g| g.index() as u8).collect()
}

#[test]
fn sphere_sizes_agree_to_radius_8() {
    let by_words = oracle::sphere_sizes(8);
    let by_matrices: Vec<usize> = (0..=8).map(|k| sphere(k).unwrap().len()).collect();
    assert_eq!(by_words, by_matrices);
    // Freeze the sequence itself: growth of the (4,4,4) group.
    assert_eq!(&by_words[..5], &[1, 3, 6, 12, 21]);
}

#[test]
fn canonical_ball_words_agree_to_radius_7() {
    let by_words = oracle::ball_words(7);
    let by_matrices: Vec<oracle::Word> =
        ball(7).unwrap().iter().map(to_word).collect();
    assert_eq!(by_words, by_matrices);
}

#[test]
fn reducedness_agrees_on_all_short_words() {
    // Every word over {r,s,t} of length <= 7.
    let mut words: Vec<oracle::Word> = vec![Vec::new()];
    for _ in 0..7 {
        let mut next = Vec::new();
        for w in &words {
            for g in 0..3u8 {
                let mut cand = w.clone();
                cand.push(g);
                next.push(cand);
            }
        }
        for w in &next {
            let gens: Vec<Gen> = w.iter().map(|g| Gen::from_index(*g as usize)).collect();
            let elem = GroupElement::from_word(&gens);
            assert_eq!(
                oracle::is_reduced(w),
                elem.length() == w.len(),
                "disagree on {w:?}"
            );
            if oracle::is_reduced(w) {
                let canon = oracle::canonical(w);
                assert_eq!(canon, to_word(&elem), "canonical forms differ for {w:?}");
            }
        }
        words = next;
    }
}

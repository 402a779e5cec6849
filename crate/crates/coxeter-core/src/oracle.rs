//! Independent word oracle built on the presentation alone.
//!
//! Tits' solution of the word problem: a word is reduced iff no sequence of
//! braid moves (xyxy <-> yxyx, since every m = 4) produces a square gg, and
//! two reduced words represent the same element iff they are connected by
//! braid moves. No matrices, no bilinear form: this module exists so the
//! test suites can cross-check the reflection-representation kernel against
//! a second, unrelated implementation path.

use std::collections::{BTreeSet, HashSet, VecDeque};

pub type Word = Vec<u8>; // letters 0 = r, 1 = s, 2 = t

/// All words reachable from `w` by braid moves.
pub fn braid_class(w: &Word) -> BTreeSet<Word> {
    let mut seen: BTreeSet<Word> = BTreeSet::new();
    let mut queue: VecDeque<Word> = VecDeque::new();
    seen.insert(w.clone());
    queue.push_back(w.clone());
    while let Some(v) = queue.pop_front() {
        if v.len() < 4 {
            continue;
        }
        for i in 0..=v.len() - 4 {
            let (x, y) = (v[i], v[i + 1]);
            if x != y && v[i + 2] == x && v[i + 3] == y {
                let mut u = v.clone();
                u[i] = y;
                u[i + 1] = x;
                u[i + 2] = y;
                u[i + 3] = x;
                if seen.insert(u.clone()) {
                    queue.push_back(u);
                }
            }
        }
    }
    seen
}

fn has_square(w: &Word) -> bool {
    w.windows(2).any(|p| p[0] == p[1])
}

/// Reduced = no braid-equivalent word contains a square.
pub fn is_reduced(w: &Word) -> bool {
    !braid_class(w).iter().any(has_square)
}

/// Canonical name of the element of a reduced word: the least member of its
/// braid class (all members share the same length, so least = ShortLex-least).
pub fn canonical(w: &Word) -> Word {
    braid_class(w).into_iter().next().unwrap()
}

/// Sphere sizes up to `radius`, computed purely by word combinatorics.
pub fn sphere_sizes(radius: usize) -> Vec<usize> {
    let mut sizes = vec![1usize];
    let mut sphere: HashSet<Word> = HashSet::new();
    sphere.insert(Vec::new());
    for _ in 1..=radius {
        let mut next: HashSet<Word> = HashSet::new();
        for w in &sphere {
            for g in 0..3u8 {
                if w.last() == Some(&g) {
                    continue;
                }
                let mut cand = w.clone();
                cand.push(g);
                if is_reduced(&cand) {
                    next.insert(canonical(&cand));
                }
            }
        }
        sizes.push(next.len());
        sphere = next;
    }
    sizes
}

/// Canonical reduced words of the ball, for direct comparison with the
/// matrix kernel's ShortLex forms.
pub fn ball_words(radius: usize) -> Vec<Word> {
    let mut all: Vec<Word> = vec![Vec::new()];
    let mut sphere: HashSet<Word> = HashSet::new();
    sphere.insert(Vec::new());
    for _ in 1..=radius {
        let mut next: HashSet<Word> = HashSet::new();
        for w in &sphere {
            for g in 0..3u8 {
                if w.last() == Some(&g) {
                    continue;
                }
                let mut cand = w.clone();
                cand.push(g);
                if is_reduced(&cand) {
                    next.insert(canonical(&cand));
                }
            }
        }
        all.extend(next.iter().cloned());
        sphere = next;
    }
    all.sort_by(|a, b| (a.len(), &a[..]).cmp(&(b.len(), &b[..])));
    all
}

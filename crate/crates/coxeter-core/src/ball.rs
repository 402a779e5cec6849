//! Breadth-first enumeration of metric balls around the identity,
//! memoized once per process and shared read-only.

use crate::element::GroupElement;
use crate::error::CoxeterError;
use crate::gens::GENS;
use std::collections::HashSet;
use std::sync::{Mutex, OnceLock};

/// Default cap on ball radii; larger requests need an explicit limit.
pub const DEFAULT_MAX_RADIUS: usize = 14;

/// Hard cap: coefficient growth stays far inside i64 here.
const ABSOLUTE_MAX_RADIUS: usize = 24;

struct Cache {
    /// spheres[k] = elements of length k, sorted (ShortLex = lex within k).
    spheres: Vec<Vec<GroupElement>>,
}

fn cache() -> &'static Mutex<Cache> {
    static CACHE: OnceLock<Mutex<Cache>> = OnceLock::new();
    CACHE.get_or_init(|| {
        Mutex::new(Cache {
            spheres: vec![vec![GroupElement::identity()]],
        })
    })
}

fn extend_to(c: &mut Cache, radius: usize) {
    while c.spheres.len() <= radius {
        let last = c.spheres.last().unwrap();
        let k = c.spheres.len();
        let mut seen: HashSet<GroupElement> = HashSet::new();
        for w in last {
            for g in GENS {
                let next = w.mul_gen(g);
                if next.length() == k {
                    seen.insert(next);
                }
            }
        }
        let mut sphere: Vec<GroupElement> = seen.into_iter().collect();
        sphere.sort();
        c.spheres.push(sphere);
    }
}

/// All elements with length <= radius, sorted ShortLex.
pub fn ball(radius: usize) -> Result<Vec<GroupElement>, CoxeterError> {
    ball_with_limit(radius, DEFAULT_MAX_RADIUS)
}

/// Same as [`ball`] but with a caller-supplied radius cap.
pub fn ball_with_limit(radius: usize, max: usize) -> Result<Vec<GroupElement>, CoxeterError> {
    let max = max.min(ABSOLUTE_MAX_RADIUS);
    if radius > max {
        return Err(CoxeterError::limit("ball radius", radius, max));
    }
    let mut c = cache().lock().unwrap();
    extend_to(&mut c, radius);
    let mut out = Vec::new();
    for k in 0..=radius {
        out.extend(c.spheres[k].iter().cloned());
    }
    Ok(out)
}

/// Elements of length exactly `radius`.
pub fn sphere(radius: usize) -> Result<Vec<GroupElement>, CoxeterError> {
    if radius > DEFAULT_MAX_RADIUS {
        return Err(CoxeterError::limit(
            "sphere radius",
            radius,
            DEFAULT_MAX_RADIUS,
        ));
    }
    let mut c = cache().lock().unwrap();
    extend_to(&mut c, radius);
    Ok(c.spheres[radius].clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sphere_sizes() {
        // 1, 3, 6, 12, 21: the radius-4 count already sees all three braid
        // relations collapse one pair each (24 - 3).
        let expect = [1usize, 3, 6, 12, 21];
        for (k, n) in expect.iter().enumerate() {
            assert_eq!(sphere(k).unwrap().len(), *n, "sphere {k}");
        }
        assert_eq!(ball(4).unwrap().len(), 43);
    }

    #[test]
    fn radius_cap() {
        assert!(matches!(
            ball(15),
            Err(CoxeterError::ResourceLimit { .. })
        ));
        assert!(ball_with_limit(15, 16).is_ok());
    }

    #[test]
    fn sorted_and_deduplicated() {
        let b = ball(5).unwrap();
        for pair in b.windows(2) {
            assert!(pair[0] < pair[1]);
        }
    }
}

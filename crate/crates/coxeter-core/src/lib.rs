//! Exact kernel for the rank-3 Coxeter group of type (4,4,4).
//!
//! W = <r, s, t | r^2 = s^2 = t^2 = 1, (rs)^4 = (st)^4 = (rt)^4 = 1>
//!
//! Elements are kept in canonical ShortLex normal form (alphabet order
//! r < s < t). Lengths, descents and reduced words are derived from the
//! reflection representation over Z[sqrt(2)], which is exact: no floats
//! appear anywhere in this crate.

pub mod ball;
pub mod element;
pub mod error;
pub mod gens;
pub mod matrix;
#[cfg(feature = "oracle")]
pub mod oracle;
pub mod residue;
pub mod ring2;

pub use ball::{ball, ball_with_limit, sphere, DEFAULT_MAX_RADIUS};
pub use element::GroupElement;
pub use error::{CoxeterError, Result};
pub use gens::{Gen, GenSet, GENS};
pub use matrix::{two_b, vec_sign, Mat3, Vec3};
pub use residue::{longest_element, r_pair, Residue};
pub use ring2::Ring2;

/// Lemma "not both down": for `w` with l(ws) = l(w)+1 = l(wt) and `r` the
/// third generator, at least one of `wsr`, `wtr` has length l(w)+2, and if
/// l(wsr) = l(w) then l(wsrt) = l(w)+1.
///
/// Returns Ok(true) when both assertions hold for this `w`.
pub fn check_not_both_down(w: &GroupElement, s: Gen, t: Gen) -> Result<bool> {
    if s == t {
        return Err(CoxeterError::invalid("check_not_both_down needs s != t"));
    }
    let r = Gen::third(s, t);
    let n = w.length();
    if w.mul_gen(s).length() != n + 1 || w.mul_gen(t).length() != n + 1 {
        return Err(CoxeterError::invalid(
            "check_not_both_down requires l(ws) = l(w)+1 = l(wt)",
        ));
    }
    let wsr = w.mul_gen(s).mul_gen(r);
    let wtr = w.mul_gen(t).mul_gen(r);
    let up = wsr.length() == n + 2 || wtr.length() == n + 2;
    let moreover = if wsr.length() == n {
        wsr.mul_gen(t).length() == n + 1
    } else {
        true
    };
    Ok(up && moreover)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn not_both_down_sweep() {
        for w in ball(6).unwrap() {
            for (s, t) in [
                (Gen::R, Gen::S),
                (Gen::R, Gen::T),
                (Gen::S, Gen::T),
            ] {
                let n = w.length();
                if w.mul_gen(s).length() == n + 1 && w.mul_gen(t).length() == n + 1 {
                    assert!(check_not_both_down(&w, s, t).unwrap(), "failed at {w}");
                }
            }
        }
    }
}

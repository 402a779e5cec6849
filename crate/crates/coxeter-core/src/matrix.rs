//! 3x3 matrices and vectors over Z[sqrt(2)]: the reflection representation.
//!
//! Basis (e_r, e_s, e_t). The bilinear form has B(e_a, e_a) = 1 and
//! B(e_a, e_b) = -sqrt(2)/2 for a != b; to stay in the ring we work with
//! 2B throughout. The simple reflection sigma_a fixes this form and acts by
//!   sigma_a(e_a) = -e_a,     sigma_a(e_b) = e_b + sqrt(2) e_a  (b != a),
//! so all matrix entries lie in Z[sqrt(2)].

use crate::gens::{Gen, GENS};
use crate::ring2::Ring2;

pub type Vec3 = [Ring2; 3];

/// Column-major action: columns[j] = image of e_j.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Mat3 {
    pub cols: [Vec3; 3],
}

pub const ZERO3: Vec3 = [Ring2::ZERO; 3];

pub fn basis(g: Gen) -> Vec3 {
    let mut v = ZERO3;
    v[g.index()] = Ring2::ONE;
    v
}

impl Mat3 {
    pub const IDENTITY: Mat3 = {
        let z = Ring2::ZERO;
        let o = Ring2::ONE;
        Mat3 {
            cols: [[o, z, z], [z, o, z], [z, z, o]],
        }
    };

    /// Reflection matrix of a simple generator.
    pub fn reflection(g: Gen) -> Mat3 {
        let mut m = Mat3::IDENTITY;
        for b in GENS {
            if b == g {
                m.cols[b.index()][g.index()] = -Ring2::ONE;
            } else {
                m.cols[b.index()][g.index()] = Ring2::SQRT2;
            }
        }
        m
    }

    pub fn apply(&self, v: &Vec3) -> Vec3 {
        let mut out = ZERO3;
        for j in 0..3 {
            let c = v[j];
            if c.is_zero() {
                continue;
            }
            for i in 0..3 {
                out[i] += self.cols[j][i] * c;
            }
        }
        out
    }

    pub fn mul(&self, o: &Mat3) -> Mat3 {
        Mat3 {
            cols: [
                self.apply(&o.cols[0]),
                self.apply(&o.cols[1]),
                self.apply(&o.cols[2]),
            ],
        }
    }

    pub fn is_identity(&self) -> bool {
        *self == Mat3::IDENTITY
    }

    /// Column j, i.e. the image of the j-th basis vector.
    pub fn col(&self, g: Gen) -> Vec3 {
        self.cols[g.index()]
    }
}

/// 2B(x, y) in Z[sqrt(2)].
pub fn two_b(x: &Vec3, y: &Vec3) -> Ring2 {
    let mut diag = Ring2::ZERO;
    let mut off = Ring2::ZERO;
    for i in 0..3 {
        diag += x[i] * y[i];
        for j in 0..3 {
            if i != j {
                off += x[i] * y[j];
            }
        }
    }
    diag + diag - Ring2::SQRT2 * off
}

/// Componentwise sign of a vector that is known to be one-sided
/// (every root vector is). Returns +1, -1, or 0 for the zero vector.
pub fn vec_sign(v: &Vec3) -> i32 {
    let mut pos = false;
    let mut neg = false;
    for c in v {
        match c.signum() {
            1 => pos = true,
            -1 => neg = true,
            _ => {}
        }
    }
    debug_assert!(!(pos && neg), "mixed-sign vector is not a root image");
    if pos {
        1
    } else if neg {
        -1
    } else {
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reflections_are_involutions_and_isometries() {
        for g in GENS {
            let m = Mat3::reflection(g);
            assert!(m.mul(&m).is_identity());
            for a in GENS {
                for b in GENS {
                    let x = basis(a);
                    let y = basis(b);
                    assert_eq!(two_b(&m.apply(&x), &m.apply(&y)), two_b(&x, &y));
                }
            }
        }
    }

    #[test]
    fn gram_values() {
        // 2B(e_a, e_a) = 2 and 2B(e_a, e_b) = -sqrt(2): order 4 everywhere.
        for a in GENS {
            for b in GENS {
                let v = two_b(&basis(a), &basis(b));
                if a == b {
                    assert_eq!(v, Ring2::new(2, 0));
                } else {
                    assert_eq!(v, Ring2::new(0, -1));
                }
            }
        }
    }
}

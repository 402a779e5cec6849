//! The ring Z[sqrt(2)], with exact sign computation.

use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

/// a + b*sqrt(2) with integer a, b.
///
/// Coefficients stay small here (words of length <= ~24 give entries below
/// 2^40), but sign comparisons square them, so those run through i128.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Ring2 {
    pub a: i64,
    pub b: i64,
}

impl Ring2 {
    pub const ZERO: Ring2 = Ring2 { a: 0, b: 0 };
    pub const ONE: Ring2 = Ring2 { a: 1, b: 0 };
    pub const SQRT2: Ring2 = Ring2 { a: 0, b: 1 };

    pub const fn new(a: i64, b: i64) -> Self {
        Ring2 { a, b }
    }

    pub fn is_zero(self) -> bool {
        self.a == 0 && self.b == 0
    }

    /// Sign of a + b*sqrt(2): -1, 0 or 1.
    pub fn signum(self) -> i32 {
        match (self.a.signum(), self.b.signum()) {
            (0, 0) => 0,
            (sa, 0) => sa as i32,
            (0, sb) => sb as i32,
            (1, 1) => 1,
            (-1, -1) => -1,
            (sa, _) => {
                // Mixed signs: compare a^2 with 2 b^2; sqrt(2) irrational,
                // so equality would force a = b = 0, excluded above.
                let a2 = (self.a as i128) * (self.a as i128);
                let b2 = 2 * (self.b as i128) * (self.b as i128);
                debug_assert_ne!(a2, b2);
                if a2 > b2 {
                    sa as i32
                } else {
                    -(sa as i32)
                }
            }
        }
    }

    pub fn is_positive(self) -> bool {
        self.signum() > 0
    }

    pub fn is_negative(self) -> bool {
        self.signum() < 0
    }

    pub fn abs(self) -> Ring2 {
        if self.is_negative() {
            -self
        } else {
            self
        }
    }
}

/// Coefficient overflow means an element left the supported radius; wrapping
/// silently would corrupt sign tests, so fail loudly in every build profile.
#[inline]
fn checked(v: i128) -> i64 {
    i64::try_from(v).expect("Ring2 coefficient overflow: element beyond supported radius")
}

impl Add for Ring2 {
    type Output = Ring2;
    fn add(self, o: Ring2) -> Ring2 {
        Ring2::new(
            checked(self.a as i128 + o.a as i128),
            checked(self.b as i128 + o.b as i128),
        )
    }
}

impl AddAssign for Ring2 {
    fn add_assign(&mut self, o: Ring2) {
        *self = *self + o;
    }
}

impl Sub for Ring2 {
    type Output = Ring2;
    fn sub(self, o: Ring2) -> Ring2 {
        Ring2::new(
            checked(self.a as i128 - o.a as i128),
            checked(self.b as i128 - o.b as i128),
        )
    }
}

impl Neg for Ring2 {
    type Output = Ring2;
    fn neg(self) -> Ring2 {
        Ring2::new(-self.a, -self.b)
    }
}

impl Mul for Ring2 {
    type Output = Ring2;
    fn mul(self, o: Ring2) -> Ring2 {
        // (a + b√2)(c + d√2) = ac + 2bd + (ad + bc)√2
        let (a, b, c, d) = (self.a as i128, self.b as i128, o.a as i128, o.b as i128);
        Ring2::new(checked(a * c + 2 * b * d), checked(a * d + b * c))
    }
}

impl PartialOrd for Ring2 {
    fn partial_cmp(&self, o: &Ring2) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl Ord for Ring2 {
    fn cmp(&self, o: &Ring2) -> Ordering {
        match (*self - *o).signum() {
            x if x < 0 => Ordering::Less,
            0 => Ordering::Equal,
            _ => Ordering::Greater,
        }
    }
}

impl fmt::Debug for Ring2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Ring2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a, self.b) {
            (a, 0) => write!(f, "{a}"),
            (0, b) => write!(f, "{b}√2"),
            (a, b) if b > 0 => write!(f, "{a}+{b}√2"),
            (a, b) => write!(f, "{a}{b}√2"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn signs() {
        assert_eq!(Ring2::new(3, -2).signum(), 1); // 3 > 2√2 ≈ 2.83
        assert_eq!(Ring2::new(-3, 2).signum(), -1);
        assert_eq!(Ring2::new(2, -2).signum(), -1); // 2 < 2√2
        assert_eq!(Ring2::new(-1, 1).signum(), 1); // √2 > 1
        assert_eq!(Ring2::ZERO.signum(), 0);
    }

    proptest! {
        #[test]
        fn ring_axioms(a in -50i64..50, b in -50i64..50, c in -50i64..50, d in -50i64..50) {
            let x = Ring2::new(a, b);
            let y = Ring2::new(c, d);
            prop_assert_eq!(x * y, y * x);
            prop_assert_eq!(x + y, y + x);
            prop_assert_eq!((x - y) + y, x);
            prop_assert_eq!(x * (y + y), x * y + x * y);
        }

        #[test]
        fn order_total(a in -50i64..50, b in -50i64..50, c in -50i64..50, d in -50i64..50) {
            let x = Ring2::new(a, b);
            let y = Ring2::new(c, d);
            // Order agrees with the real embedding: sampled via f64 away from ties.
            let fx = a as f64 + (b as f64) * std::f64::consts::SQRT_2;
            let fy = c as f64 + (d as f64) * std::f64::consts::SQRT_2;
            if (fx - fy).abs() > 1e-6 {
                prop_assert_eq!(x < y, fx < fy);
            }
        }
    }
}

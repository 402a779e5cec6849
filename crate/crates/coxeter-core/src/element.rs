//! Group elements in canonical ShortLex normal form.

use crate::error::CoxeterError;
use crate::gens::{Gen, GENS};
use crate::matrix::{vec_sign, Mat3};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::str::FromStr;

/// An element of W, stored as its ShortLex-least reduced word.
///
/// Equality and hashing go through the canonical word; `Ord` is ShortLex
/// (length first, then alphabet order r < s < t).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GroupElement {
    word: Vec<Gen>,
}

impl Ord for GroupElement {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.word
            .len()
            .cmp(&other.word.len())
            .then_with(|| self.word.cmp(&other.word))
    }
}

impl PartialOrd for GroupElement {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl GroupElement {
    pub fn identity() -> GroupElement {
        GroupElement { word: Vec::new() }
    }

    pub fn gen(g: Gen) -> GroupElement {
        GroupElement { word: vec![g] }
    }

    /// Canonicalize an arbitrary word.
    pub fn from_word(word: &[Gen]) -> GroupElement {
        // Matrix of the inverse: N e_g is then directly the vector deciding
        // whether g is a left descent.
        let mut n = Mat3::IDENTITY;
        for g in word.iter().rev() {
            n = n.mul(&Mat3::reflection(*g));
        }
        Self::from_inverse_matrix(n)
    }

    /// Greedy ShortLex extraction: repeatedly strip the least left descent.
    /// `n` is the matrix of w^{-1}; column g is negative iff l(gw) < l(w).
    pub(crate) fn from_inverse_matrix(mut n: Mat3) -> GroupElement {
        let mut word = Vec::new();
        loop {
            let mut descent = None;
            for g in GENS {
                if vec_sign(&n.col(g)) < 0 {
                    descent = Some(g);
                    break;
                }
            }
            match descent {
                Some(g) => {
                    word.push(g);
                    // w := g w, so w^{-1} := w^{-1} g.
                    n = n.mul(&Mat3::reflection(g));
                }
                None => {
                    debug_assert!(n.is_identity());
                    return GroupElement { word };
                }
            }
        }
    }

    pub fn word(&self) -> &[Gen] {
        &self.word
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }

    /// Matrix of the element acting on root vectors.
    pub fn matrix(&self) -> Mat3 {
        let mut m = Mat3::IDENTITY;
        for g in &self.word {
            m = m.mul(&Mat3::reflection(*g));
        }
        m
    }

    /// Matrix of the inverse element.
    pub fn inverse_matrix(&self) -> Mat3 {
        let mut m = Mat3::IDENTITY;
        for g in self.word.iter().rev() {
            m = m.mul(&Mat3::reflection(*g));
        }
        m
    }

    pub fn inverse(&self) -> GroupElement {
        let rev: Vec<Gen> = self.word.iter().rev().copied().collect();
        GroupElement::from_word(&rev)
    }

    pub fn mul(&self, other: &GroupElement) -> GroupElement {
        // (xy)^{-1} = y^{-1} x^{-1}
        let n = other.inverse_matrix().mul(&self.inverse_matrix());
        GroupElement::from_inverse_matrix(n)
    }

    pub fn mul_gen(&self, g: Gen) -> GroupElement {
        let n = Mat3::reflection(g).mul(&self.inverse_matrix());
        GroupElement::from_inverse_matrix(n)
    }

    pub fn lmul_gen(&self, g: Gen) -> GroupElement {
        let n = self.inverse_matrix().mul(&Mat3::reflection(g));
        GroupElement::from_inverse_matrix(n)
    }

    /// Left descents: { g | l(gx) < l(x) }.
    pub fn left_descents(&self) -> Vec<Gen> {
        let n = self.inverse_matrix();
        GENS.into_iter()
            .filter(|g| vec_sign(&n.col(*g)) < 0)
            .collect()
    }

    /// Right descents: { g | l(xg) < l(x) }.
    pub fn right_descents(&self) -> Vec<Gen> {
        let m = self.matrix();
        GENS.into_iter()
            .filter(|g| vec_sign(&m.col(*g)) < 0)
            .collect()
    }

    /// Prefix order: x <= y iff l(x) + l(x^{-1} y) = l(y).
    pub fn is_prefix_of(&self, other: &GroupElement) -> bool {
        self.length() + self.inverse().mul(other).length() == other.length()
    }

    /// Parse "rst", "" or "1".
    pub fn parse(s: &str) -> Result<GroupElement, CoxeterError> {
        if s.is_empty() || s == "1" {
            return Ok(GroupElement::identity());
        }
        let mut word = Vec::with_capacity(s.len());
        for c in s.chars() {
            word.push(Gen::from_letter(c)?);
        }
        Ok(GroupElement::from_word(&word))
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return write!(f, "1");
        }
        for g in &self.word {
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for GroupElement {
    type Err = CoxeterError;
    fn from_str(s: &str) -> Result<GroupElement, CoxeterError> {
        GroupElement::parse(s)
    }
}

impl Serialize for GroupElement {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        if self.is_identity() {
            ser.serialize_str("")
        } else {
            ser.serialize_str(&self.to_string())
        }
    }
}

impl<'de> Deserialize<'de> for GroupElement {
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<GroupElement, D::Error> {
        let s = String::deserialize(de)?;
        GroupElement::parse(&s).map_err(D::Error::custom)
    }
}

//! Generators r < s < t and small generator sets.

use crate::error::CoxeterError;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// One of the three Coxeter generators. The derived order r < s < t is the
/// global ShortLex alphabet order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Gen {
    R,
    S,
    T,
}

pub const GENS: [Gen; 3] = [Gen::R, Gen::S, Gen::T];

impl Gen {
    pub fn index(self) -> usize {
        match self {
            Gen::R => 0,
            Gen::S => 1,
            Gen::T => 2,
        }
    }

    pub fn from_index(i: usize) -> Gen {
        GENS[i]
    }

    pub fn letter(self) -> char {
        match self {
            Gen::R => 'r',
            Gen::S => 's',
            Gen::T => 't',
        }
    }

    pub fn from_letter(c: char) -> Result<Gen, CoxeterError> {
        match c {
            'r' => Ok(Gen::R),
            's' => Ok(Gen::S),
            't' => Ok(Gen::T),
            _ => Err(CoxeterError::invalid(format!("unknown generator '{c}'"))),
        }
    }

    /// The generator that is neither `a` nor `b` (a != b required).
    pub fn third(a: Gen, b: Gen) -> Gen {
        debug_assert_ne!(a, b);
        GENS.into_iter().find(|g| *g != a && *g != b).unwrap()
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

impl FromStr for Gen {
    type Err = CoxeterError;
    fn from_str(s: &str) -> Result<Gen, CoxeterError> {
        let mut it = s.chars();
        match (it.next(), it.next()) {
            (Some(c), None) => Gen::from_letter(c),
            _ => Err(CoxeterError::invalid(format!("bad generator '{s}'"))),
        }
    }
}

/// A subset of {r, s, t} as a 3-bit mask.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct GenSet(pub u8);

impl GenSet {
    pub const EMPTY: GenSet = GenSet(0);
    pub const ALL: GenSet = GenSet(0b111);

    pub fn of(gens: &[Gen]) -> GenSet {
        let mut m = 0;
        for g in gens {
            m |= 1 << g.index();
        }
        GenSet(m)
    }

    pub fn pair(a: Gen, b: Gen) -> GenSet {
        GenSet::of(&[a, b])
    }

    pub fn contains(self, g: Gen) -> bool {
        self.0 & (1 << g.index()) != 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = Gen> {
        GENS.into_iter().filter(move |g| self.contains(*g))
    }

    /// For a rank-2 set, its two members in alphabet order.
    pub fn two(self) -> Result<(Gen, Gen), CoxeterError> {
        let v: Vec<Gen> = self.iter().collect();
        match v.as_slice() {
            [a, b] => Ok((*a, *b)),
            _ => Err(CoxeterError::invalid("expected a rank-2 generator set")),
        }
    }

    /// Complement within {r, s, t}.
    pub fn complement(self) -> GenSet {
        GenSet(!self.0 & 0b111)
    }
}

impl fmt::Display for GenSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for g in self.iter() {
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

impl FromStr for GenSet {
    type Err = CoxeterError;
    fn from_str(s: &str) -> Result<GenSet, CoxeterError> {
        let mut m = GenSet::EMPTY;
        for c in s.chars() {
            m = GenSet(m.0 | 1 << Gen::from_letter(c)?.index());
        }
        Ok(m)
    }
}

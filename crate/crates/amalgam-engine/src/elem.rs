//! Elements of tree products.  A syllable is a vertex index together with
//! an element of that vertex group: a bitvector for finite vertices, a
//! nested normal form for contracted (product) vertices.  Normal forms are
//! ordered shortest-first, then lexicographically, so "least element of a
//! finite coset" is well defined.

use std::cmp::Ordering;
use std::fmt;

use ugroup_engine::Bits;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Elem {
    Bits(Bits),
    Nested(AmalgamElement),
}

impl Elem {
    pub fn bits(&self) -> Option<Bits> {
        match self {
            Elem::Bits(b) => Some(*b),
            Elem::Nested(_) => None,
        }
    }
}

impl PartialOrd for Elem {
    fn partial_cmp(&self, other: &Elem) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Elem {
    fn cmp(&self, other: &Elem) -> Ordering {
        match (self, other) {
            (Elem::Bits(a), Elem::Bits(b)) => a.cmp(b),
            (Elem::Nested(a), Elem::Nested(b)) => a.cmp(b),
            (Elem::Bits(_), Elem::Nested(_)) => Ordering::Less,
            (Elem::Nested(_), Elem::Bits(_)) => Ordering::Greater,
        }
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Elem::Bits(b) => write!(f, "{:b}", b),
            Elem::Nested(x) => write!(f, "[{}]", x),
        }
    }
}

/// Canonical form of a tree-product element: a sequence of nontrivial
/// syllables.  The empty sequence is the identity.  Canonicity is relative
/// to a fixed tree and its elimination order; see `TreeOfGroups::reduce`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct AmalgamElement {
    pub(crate) syllables: Vec<(usize, Elem)>,
}

impl AmalgamElement {
    pub fn identity() -> AmalgamElement {
        AmalgamElement::default()
    }

    pub fn single(vertex: usize, elem: Elem) -> AmalgamElement {
        AmalgamElement {
            syllables: vec![(vertex, elem)],
        }
    }

    pub fn is_identity(&self) -> bool {
        self.syllables.is_empty()
    }

    pub fn syllables(&self) -> &[(usize, Elem)] {
        &self.syllables
    }

    pub fn syllable_count(&self) -> usize {
        self.syllables.len()
    }
}

impl PartialOrd for AmalgamElement {
    fn partial_cmp(&self, other: &AmalgamElement) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for AmalgamElement {
    fn cmp(&self, other: &AmalgamElement) -> Ordering {
        self.syllables
            .len()
            .cmp(&other.syllables.len())
            .then_with(|| self.syllables.cmp(&other.syllables))
    }
}

impl fmt::Display for AmalgamElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.syllables.is_empty() {
            return write!(f, "1");
        }
        for (i, (v, g)) in self.syllables.iter().enumerate() {
            if i > 0 {
                write!(f, "·")?;
            }
            write!(f, "v{}:{}", v, g)?;
        }
        Ok(())
    }
}

use crate::semigroup::Semigroup;
use std::cmp::Ordering;

/// Canonical form of one semigroup element.
///
/// Every variant is a normal form: two elements are equal iff their payloads
/// are byte-for-byte equal, so `Eq`/`Ord` derive structurally. Which variant a
/// family uses is fixed by its handle; mixing is a `FamilyMismatch` error at
/// the operation boundary, never silent.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum Payload {
    /// Non-empty word over letters `0..rank` (free semigroup).
    Word(Vec<u8>),
    /// Non-negative integer vector, not the origin (free commutative semigroup).
    Vector(Vec<i64>),
    /// Sorted `(prime index, exponent)` pairs with exponents >= 1; empty means 1.
    Factors(Vec<(u32, i64)>),
    /// q^j p^k with j, k >= 0.
    Bicyclic { j: i64, k: i64 },
    /// Element of the polycyclic monoid P2.
    Poly(PolyElt),
    /// Triple (p, q, r) with p >= 0, r >= 0, p+q >= 0, q+r >= 0 (and hence p+q+r >= 0).
    Munn { p: i64, q: i64, r: i64 },
    /// Integer under minimum.
    Int(i64),
    /// Index into a finite multiplication table.
    Index(usize),
    /// Adjoined absorbing zero.
    Zero,
    /// Adjoined identity.
    One,
    /// Element of the base family inside a derived family.
    Inner(Box<Payload>),
    /// Element of a direct product.
    Pair(Box<Payload>, Box<Payload>),
}

/// x^{-1} y over the alphabet {p, q}, plus the absorbing zero and the identity.
///
/// `Pair(x, y)` stores both words in reading order; the pair is canonical as
/// long as x and y are not both empty, because no rewrite rule applies across
/// the x^{-1} | y boundary.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum PolyElt {
    Zero,
    One,
    Pair(Vec<u8>, Vec<u8>),
}

/// One element together with the handle of the semigroup it lives in.
#[derive(Debug, Clone)]
pub struct Element {
    family: Semigroup,
    payload: Payload,
}

impl Element {
    pub(crate) fn new(family: Semigroup, payload: Payload) -> Self {
        Element { family, payload }
    }

    pub fn family(&self) -> &Semigroup {
        &self.family
    }

    pub fn payload(&self) -> &Payload {
        &self.payload
    }

    /// The integer behind a min-plus element, if that is what this is.
    pub fn as_int(&self) -> Option<i64> {
        match self.payload {
            Payload::Int(x) => Some(x),
            _ => None,
        }
    }

    /// The (j, k) coordinates of a bicyclic element q^j p^k.
    pub fn as_pair(&self) -> Option<(i64, i64)> {
        match self.payload {
            Payload::Bicyclic { j, k } => Some((j, k)),
            _ => None,
        }
    }

    /// The (p, q, r) coordinates of a free monogenic inverse element.
    pub fn as_triple(&self) -> Option<(i64, i64, i64)> {
        match self.payload {
            Payload::Munn { p, q, r } => Some((p, q, r)),
            _ => None,
        }
    }

    /// The table index of a finite-family element.
    pub fn as_index(&self) -> Option<usize> {
        match self.payload {
            Payload::Index(i) => Some(i),
            _ => None,
        }
    }

    /// The letter sequence of a free-semigroup word.
    pub fn as_word(&self) -> Option<&[u8]> {
        match &self.payload {
            Payload::Word(w) => Some(w),
            _ => None,
        }
    }

    /// The exponent vector of a free commutative element.
    pub fn as_vector(&self) -> Option<&[i64]> {
        match &self.payload {
            Payload::Vector(v) => Some(v),
            _ => None,
        }
    }
}

impl PartialEq for Element {
    fn eq(&self, other: &Self) -> bool {
        self.payload == other.payload && self.family == other.family
    }
}

impl Eq for Element {}

impl PartialOrd for Element {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Element {
    fn cmp(&self, other: &Self) -> Ordering {
        // Same-handle comparisons dominate; the structural family comparison
        // only runs for elements of distinct handles.
        if self.family.ptr_eq(&other.family) {
            self.payload.cmp(&other.payload)
        } else {
            self.family
                .cmp_structural(&other.family)
                .then_with(|| self.payload.cmp(&other.payload))
        }
    }
}

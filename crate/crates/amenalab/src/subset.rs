//! Finite subsets of a semigroup, kept sorted for merge-style set algebra.

use crate::element::Element;
use crate::error::Result;
use crate::semigroup::Semigroup;

/// A finite subset of one semigroup.
///
/// Elements are stored sorted and deduplicated, so membership is a binary
/// search and the set operations are linear merges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteSubset {
    family: Semigroup,
    elems: Vec<Element>,
}

impl FiniteSubset {
    /// Build a subset from any iterable of elements, all of `family`.
    pub fn new<I>(family: &Semigroup, elements: I) -> Result<Self>
    where
        I: IntoIterator<Item = Element>,
    {
        let mut elems: Vec<Element> = Vec::new();
        for e in elements {
            family.check_member(&e)?;
            elems.push(e);
        }
        elems.sort();
        elems.dedup();
        Ok(FiniteSubset {
            family: family.clone(),
            elems,
        })
    }

    pub fn empty(family: &Semigroup) -> Self {
        FiniteSubset {
            family: family.clone(),
            elems: Vec::new(),
        }
    }

    /// Internal constructor for elements already known to be sorted, unique
    /// and members of `family`.
    pub(crate) fn from_sorted_unchecked(family: &Semigroup, elems: Vec<Element>) -> Self {
        debug_assert!(elems.windows(2).all(|w| w[0] < w[1]));
        FiniteSubset {
            family: family.clone(),
            elems,
        }
    }

    pub fn family(&self) -> &Semigroup {
        &self.family
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn elements(&self) -> &[Element] {
        &self.elems
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Element> {
        self.elems.iter()
    }

    pub fn contains(&self, e: &Element) -> bool {
        self.elems.binary_search(e).is_ok()
    }

    pub(crate) fn contains_payload(&self, p: &crate::element::Payload) -> bool {
        self.elems
            .binary_search_by(|e| e.payload().cmp(p))
            .is_ok()
    }

    pub fn union(&self, other: &FiniteSubset) -> FiniteSubset {
        self.merge(other, true, true, true)
    }

    pub fn intersection(&self, other: &FiniteSubset) -> FiniteSubset {
        self.merge(other, false, true, false)
    }

    pub fn difference(&self, other: &FiniteSubset) -> FiniteSubset {
        self.merge(other, true, false, false)
    }

    pub fn symmetric_difference(&self, other: &FiniteSubset) -> FiniteSubset {
        self.merge(other, true, false, true)
    }

    pub fn intersection_len(&self, other: &FiniteSubset) -> usize {
        self.count_merge(other, false, true, false)
    }

    pub fn symmetric_difference_len(&self, other: &FiniteSubset) -> usize {
        self.count_merge(other, true, false, true)
    }

    /// One merge walk serves every binary set operation: the three flags say
    /// whether to keep elements found only on the left, in both, or only on
    /// the right.
    fn merge(&self, other: &FiniteSubset, left: bool, both: bool, right: bool) -> FiniteSubset {
        let mut out = Vec::new();
        self.walk(other, |e, side| {
            let keep = match side {
                std::cmp::Ordering::Less => left,
                std::cmp::Ordering::Equal => both,
                std::cmp::Ordering::Greater => right,
            };
            if keep {
                out.push(e.clone());
            }
        });
        FiniteSubset::from_sorted_unchecked(&self.family, out)
    }

    fn count_merge(&self, other: &FiniteSubset, left: bool, both: bool, right: bool) -> usize {
        let mut count = 0usize;
        self.walk(other, |_, side| {
            let keep = match side {
                std::cmp::Ordering::Less => left,
                std::cmp::Ordering::Equal => both,
                std::cmp::Ordering::Greater => right,
            };
            if keep {
                count += 1;
            }
        });
        count
    }

    /// Visit the merged sequence of both sets; `side` tells where each
    /// element came from (Less = only self, Equal = both, Greater = only
    /// other).
    fn walk<'a>(&'a self, other: &'a FiniteSubset, mut f: impl FnMut(&'a Element, std::cmp::Ordering)) {
        let mut i = 0;
        let mut j = 0;
        while i < self.elems.len() && j < other.elems.len() {
            match self.elems[i].cmp(&other.elems[j]) {
                std::cmp::Ordering::Less => {
                    f(&self.elems[i], std::cmp::Ordering::Less);
                    i += 1;
                }
                std::cmp::Ordering::Equal => {
                    f(&self.elems[i], std::cmp::Ordering::Equal);
                    i += 1;
                    j += 1;
                }
                std::cmp::Ordering::Greater => {
                    f(&other.elems[j], std::cmp::Ordering::Greater);
                    j += 1;
                }
            }
        }
        for e in &self.elems[i..] {
            f(e, std::cmp::Ordering::Less);
        }
        for e in &other.elems[j..] {
            f(e, std::cmp::Ordering::Greater);
        }
    }
}

impl<'a> IntoIterator for &'a FiniteSubset {
    type Item = &'a Element;
    type IntoIter = std::slice::Iter<'a, Element>;

    fn into_iter(self) -> Self::IntoIter {
        self.elems.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::Semigroup;

    fn set(xs: &[i64]) -> FiniteSubset {
        let s = Semigroup::min_z();
        FiniteSubset::new(&s, xs.iter().map(|&x| s.element_from_int(x).unwrap())).unwrap()
    }

    fn ints(a: &FiniteSubset) -> Vec<i64> {
        a.iter().map(|e| e.as_int().unwrap()).collect()
    }

    #[test]
    fn operations_agree_with_the_obvious_model() {
        let a = set(&[3, 1, 2, 2]);
        let b = set(&[2, 4]);
        assert_eq!(a.len(), 3, "duplicates collapse");
        assert_eq!(ints(&a.union(&b)), vec![1, 2, 3, 4]);
        assert_eq!(ints(&a.intersection(&b)), vec![2]);
        assert_eq!(ints(&a.difference(&b)), vec![1, 3]);
        assert_eq!(ints(&a.symmetric_difference(&b)), vec![1, 3, 4]);
        assert_eq!(a.intersection_len(&b), 1);
        assert_eq!(a.symmetric_difference_len(&b), 3);
        assert!(a.contains(&set(&[2]).elements()[0]));
        assert!(!a.contains(&set(&[4]).elements()[0]));
    }

    #[test]
    fn empty_set_behaves() {
        let s = Semigroup::min_z();
        let empty = FiniteSubset::empty(&s);
        let a = set(&[1]);
        assert!(empty.is_empty());
        assert_eq!(empty.union(&a), a);
        assert_eq!(a.intersection(&empty), empty);
        assert_eq!(a.symmetric_difference_len(&empty), 1);
    }

    #[test]
    fn wrong_family_is_rejected() {
        let z = Semigroup::min_z();
        let b = Semigroup::bicyclic();
        let q = b.element_from_pair(1, 0).unwrap();
        assert!(FiniteSubset::new(&z, [q]).is_err());
    }
}

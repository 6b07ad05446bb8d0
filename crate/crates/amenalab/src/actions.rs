//! Injectivity of translations on finite sets, their fibers, and the
//! deterministic splitting of a set into injectively-translated parts.

use crate::element::Element;
use crate::error::{Error, Result};
use crate::semigroup::Side;
use crate::subset::FiniteSubset;

/// Verdict of an injectivity test; a failing test names the first colliding
/// pair in canonical order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Injectivity {
    Injective,
    Collision { a: Element, b: Element },
}

impl Injectivity {
    pub fn is_injective(&self) -> bool {
        matches!(self, Injectivity::Injective)
    }
}

/// θ_s on a finite base set: elements grouped by their image under the
/// translation by `s`.
#[derive(Debug, Clone)]
pub struct FiberPartition {
    element: Element,
    side: Side,
    base: FiniteSubset,
    fibers: Vec<(Element, FiniteSubset)>,
    max_fiber: usize,
}

impl FiberPartition {
    pub fn element(&self) -> &Element {
        &self.element
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn base(&self) -> &FiniteSubset {
        &self.base
    }

    /// Fibers keyed by image point, sorted by image.
    pub fn fibers(&self) -> &[(Element, FiniteSubset)] {
        &self.fibers
    }

    pub fn max_fiber_size(&self) -> usize {
        self.max_fiber
    }

    pub fn fiber_at(&self, image: &Element) -> Option<&FiniteSubset> {
        self.fibers
            .binary_search_by(|(x, _)| x.cmp(image))
            .ok()
            .map(|i| &self.fibers[i].1)
    }
}

fn check_same_family(s: &Element, a: &FiniteSubset) -> Result<()> {
    if s.family() != a.family() {
        return Err(Error::FamilyMismatch {
            expected: a.family().name(),
            got: s.family().name(),
        });
    }
    Ok(())
}

/// Is the translation by `s` injective on `a`? `Side::Left` tests x ↦ s·x,
/// `Side::Right` tests x ↦ x·s.
pub fn acts_injectively(side: Side, s: &Element, a: &FiniteSubset) -> Result<Injectivity> {
    check_same_family(s, a)?;
    let family = a.family();
    let mut seen: std::collections::BTreeMap<Element, Element> = Default::default();
    for x in a.iter() {
        let image = family.translate(side, s, x)?;
        if let Some(first) = seen.get(&image) {
            return Ok(Injectivity::Collision {
                a: first.clone(),
                b: x.clone(),
            });
        }
        seen.insert(image, x.clone());
    }
    Ok(Injectivity::Injective)
}

pub fn fibers(side: Side, s: &Element, a: &FiniteSubset) -> Result<FiberPartition> {
    check_same_family(s, a)?;
    let family = a.family().clone();
    let mut grouped: std::collections::BTreeMap<Element, Vec<Element>> = Default::default();
    for x in a.iter() {
        let image = family.translate(side, s, x)?;
        grouped.entry(image).or_default().push(x.clone());
    }
    let mut max_fiber = 0;
    let fibers: Vec<(Element, FiniteSubset)> = grouped
        .into_iter()
        .map(|(image, members)| {
            max_fiber = max_fiber.max(members.len());
            // Members arrive in base-set order, which is sorted.
            (image, FiniteSubset::from_sorted_unchecked(&family, members))
        })
        .collect();
    Ok(FiberPartition {
        element: s.clone(),
        side,
        base: a.clone(),
        fibers,
        max_fiber,
    })
}

/// Split `a` into the fewest parts on which `s` translates injectively:
/// round i collects the i-th member, in canonical order, of every fiber
/// still holding one. The part count equals the largest fiber.
pub fn injective_partition(side: Side, s: &Element, a: &FiniteSubset) -> Result<Vec<FiniteSubset>> {
    let partition = fibers(side, s, a)?;
    let family = a.family();
    let mut parts = Vec::with_capacity(partition.max_fiber_size());
    for round in 0..partition.max_fiber_size() {
        let mut members: Vec<Element> = partition
            .fibers()
            .iter()
            .filter_map(|(_, fiber)| fiber.elements().get(round).cloned())
            .collect();
        members.sort();
        parts.push(FiniteSubset::from_sorted_unchecked(family, members));
    }
    Ok(parts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::semigroup::Semigroup;

    fn subset(family: &Semigroup, literals: &[&str]) -> FiniteSubset {
        FiniteSubset::new(
            family,
            literals
                .iter()
                .map(|lit| family.parse_element(lit).unwrap()),
        )
        .unwrap()
    }

    #[test]
    fn free_words_always_act_injectively() {
        let f = Semigroup::free_word(2).unwrap();
        let a = subset(&f, &["a", "b", "ab", "ba", "bbb"]);
        for lit in ["a", "b", "abab"] {
            let s = f.parse_element(lit).unwrap();
            for side in [Side::Left, Side::Right] {
                assert!(acts_injectively(side, &s, &a).unwrap().is_injective());
            }
        }
    }

    #[test]
    fn left_zero_collapses_with_the_expected_witness() {
        let lz = catalog::left_zero(2);
        let carrier = FiniteSubset::new(&lz, lz.carrier().unwrap()).unwrap();
        let x = lz.element_from_index(0).unwrap();
        match acts_injectively(Side::Left, &x, &carrier).unwrap() {
            Injectivity::Collision { a, b } => {
                assert_eq!(a, lz.element_from_index(0).unwrap());
                assert_eq!(b, lz.element_from_index(1).unwrap());
            }
            Injectivity::Injective => panic!("left zero cannot act injectively"),
        }
        // On the right every translation is the identity map.
        assert!(acts_injectively(Side::Right, &x, &carrier)
            .unwrap()
            .is_injective());
    }

    #[test]
    fn bicyclic_minimal_noninjective_pair() {
        let b = Semigroup::bicyclic();
        let p = b.parse_element("p").unwrap();
        let a = subset(&b, &["1", "qp"]);
        match acts_injectively(Side::Left, &p, &a).unwrap() {
            Injectivity::Collision { a, b: other } => {
                assert_eq!(a.to_string(), "1");
                assert_eq!(other.to_string(), "qp");
            }
            Injectivity::Injective => panic!("p collapses {{1, qp}}"),
        }
    }

    #[test]
    fn bicyclic_fibers_on_the_unit_window() {
        let b = Semigroup::bicyclic();
        let p = b.parse_element("p").unwrap();
        let square = b.window(2).unwrap();
        let partition = fibers(Side::Left, &p, &square).unwrap();
        assert_eq!(partition.max_fiber_size(), 2);
        let shapes: Vec<(String, Vec<String>)> = partition
            .fibers()
            .iter()
            .map(|(image, fiber)| {
                (
                    image.to_string(),
                    fiber.iter().map(|e| e.to_string()).collect(),
                )
            })
            .collect();
        assert_eq!(
            shapes,
            vec![
                ("1".into(), vec!["q".into()]),
                ("p".into(), vec!["1".into(), "qp".into()]),
                ("p^2".into(), vec!["p".into()]),
            ]
        );
    }

    #[test]
    fn cancellative_fibers_are_singletons() {
        let c = Semigroup::free_commutative(2).unwrap();
        let s = c.parse_element("(1,2)").unwrap();
        let a = c.window(3).unwrap();
        let partition = fibers(Side::Left, &s, &a).unwrap();
        assert_eq!(partition.max_fiber_size(), 1);
        assert_eq!(partition.fibers().len(), a.len());
    }

    #[test]
    fn zero_collapses_everything_to_one_fiber() {
        let s = Semigroup::adjoin_zero(catalog::cyclic(4));
        let zero = s.zero_element().unwrap();
        let a = FiniteSubset::new(&s, s.carrier().unwrap()).unwrap();
        let partition = fibers(Side::Left, &zero, &a).unwrap();
        assert_eq!(partition.fibers().len(), 1);
        assert_eq!(partition.max_fiber_size(), a.len());

        let parts = injective_partition(Side::Left, &zero, &a).unwrap();
        assert_eq!(parts.len(), a.len());
        assert!(parts.iter().all(|p| p.len() == 1));
    }

    #[test]
    fn bicyclic_partition_matches_the_greedy_construction() {
        let b = Semigroup::bicyclic();
        let p = b.parse_element("p").unwrap();
        let square = b.window(2).unwrap();
        let parts = injective_partition(Side::Left, &p, &square).unwrap();
        assert_eq!(parts.len(), 2);
        let render = |part: &FiniteSubset| -> Vec<String> {
            part.iter().map(|e| e.to_string()).collect()
        };
        assert_eq!(render(&parts[0]), vec!["1", "p", "q"]);
        assert_eq!(render(&parts[1]), vec!["qp"]);
        for part in &parts {
            assert!(acts_injectively(Side::Left, &p, part).unwrap().is_injective());
        }
        let reunion = parts
            .iter()
            .fold(FiniteSubset::empty(&b), |acc, part| acc.union(part));
        assert_eq!(reunion, square);
    }

    #[test]
    fn injective_translations_stay_whole() {
        let f = Semigroup::free_word(2).unwrap();
        let a = subset(&f, &["a", "ab", "bb"]);
        let s = f.parse_element("ba").unwrap();
        let parts = injective_partition(Side::Left, &s, &a).unwrap();
        assert_eq!(parts.len(), 1);
        assert_eq!(parts[0], a);

        let empty = FiniteSubset::empty(&f);
        assert!(injective_partition(Side::Left, &s, &empty)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn two_element_subsets_decide_injectivity() {
        let b = Semigroup::bicyclic();
        let a = b.window(3).unwrap();
        for lit in ["p", "q", "qp", "q^2p"] {
            let s = b.parse_element(lit).unwrap();
            for side in [Side::Left, Side::Right] {
                let whole = acts_injectively(side, &s, &a).unwrap().is_injective();
                let mut all_pairs = true;
                let elems = a.elements();
                for i in 0..elems.len() {
                    for j in (i + 1)..elems.len() {
                        let pair = FiniteSubset::new(
                            &b,
                            [elems[i].clone(), elems[j].clone()],
                        )
                        .unwrap();
                        all_pairs &=
                            acts_injectively(side, &s, &pair).unwrap().is_injective();
                    }
                }
                assert_eq!(whole, all_pairs, "{lit} on side {side:?}");

                // |s·F| = |F| for every subset F is the same statement.
                let mut all_counts = true;
                for mask in 0u32..(1 << elems.len().min(6)) {
                    let sub: Vec<Element> = elems
                        .iter()
                        .take(6)
                        .enumerate()
                        .filter(|(i, _)| mask & (1 << i) != 0)
                        .map(|(_, e)| e.clone())
                        .collect();
                    let size = sub.len();
                    let mut images: Vec<Element> = sub
                        .iter()
                        .map(|x| b.translate(side, &s, x).unwrap())
                        .collect();
                    images.sort();
                    images.dedup();
                    all_counts &= images.len() == size;
                }
                let first_six = FiniteSubset::new(
                    &b,
                    elems.iter().take(6).cloned(),
                )
                .unwrap();
                let on_first_six =
                    acts_injectively(side, &s, &first_six).unwrap().is_injective();
                assert_eq!(on_first_six, all_counts, "{lit} counts on side {side:?}");
            }
        }
    }

    #[test]
    fn family_mismatch_is_reported() {
        let b = Semigroup::bicyclic();
        let f = Semigroup::free_word(2).unwrap();
        let a = subset(&f, &["a"]);
        let s = b.parse_element("p").unwrap();
        assert!(matches!(
            acts_injectively(Side::Left, &s, &a),
            Err(Error::FamilyMismatch { .. })
        ));
    }
}

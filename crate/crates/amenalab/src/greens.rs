//! Green's relations on finite families.
//!
//! Two elements are L-related when they generate the same principal left
//! ideal over the monoid completion, R-related for right ideals, H-related
//! when both hold, and D-related in the smallest equivalence containing both
//! L and R. Only finite families are accepted; the relations exist elsewhere
//! but the all-pairs comparison does not.

use std::fmt;

use crate::element::Element;
use crate::error::{Error, Result};
use crate::semigroup::{Semigroup, Side};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GreenRelation {
    L,
    R,
    H,
    D,
}

impl GreenRelation {
    pub fn parse(text: &str) -> Result<GreenRelation> {
        match text.trim() {
            "L" | "l" => Ok(GreenRelation::L),
            "R" | "r" => Ok(GreenRelation::R),
            "H" | "h" => Ok(GreenRelation::H),
            "D" | "d" => Ok(GreenRelation::D),
            other => Err(Error::Parse(format!(
                "unknown Green relation '{other}', expected L, R, H, or D"
            ))),
        }
    }
}

impl fmt::Display for GreenRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self {
            GreenRelation::L => "L",
            GreenRelation::R => "R",
            GreenRelation::H => "H",
            GreenRelation::D => "D",
        };
        f.write_str(tag)
    }
}

/// A partition of a finite carrier into classes of one Green relation.
#[derive(Debug, Clone)]
pub struct GreenClasses {
    family: Semigroup,
    relation: GreenRelation,
    classes: Vec<Vec<Element>>,
}

impl GreenClasses {
    pub fn family(&self) -> &Semigroup {
        &self.family
    }

    pub fn relation(&self) -> GreenRelation {
        self.relation
    }

    /// Classes sorted by their least element; each class is sorted.
    pub fn classes(&self) -> &[Vec<Element>] {
        &self.classes
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn class_of(&self, x: &Element) -> Option<&[Element]> {
        self.classes
            .iter()
            .find(|c| c.binary_search(x).is_ok())
            .map(|c| c.as_slice())
    }
}

/// Does `a` lie in the principal ideal of `b` over the monoid completion?
/// The side names the translation sweeping the ideal: `Side::Right` compares
/// left ideals S¹b (the L order), `Side::Left` right ideals b·S¹ (the R
/// order).
fn in_principal_ideal(family: &Semigroup, side: Side, a: &Element, b: &Element) -> Result<bool> {
    Ok(a == b || family.ideal_contains(side, b, a)?)
}

fn mutually_related(family: &Semigroup, side: Side, a: &Element, b: &Element) -> Result<bool> {
    Ok(in_principal_ideal(family, side, a, b)? && in_principal_ideal(family, side, b, a)?)
}

pub fn green_classes(family: &Semigroup, relation: GreenRelation) -> Result<GreenClasses> {
    let carrier = family.carrier()?;
    let n = carrier.len();

    let mut uf = UnionFind::new(n);
    for i in 0..n {
        for j in (i + 1)..n {
            let a = &carrier[i];
            let b = &carrier[j];
            let l = || mutually_related(family, Side::Right, a, b);
            let r = || mutually_related(family, Side::Left, a, b);
            let related = match relation {
                GreenRelation::L => l()?,
                GreenRelation::R => r()?,
                GreenRelation::H => l()? && r()?,
                // The generated equivalence is the transitive closure of
                // L ∪ R, which the union-find accumulates.
                GreenRelation::D => l()? || r()?,
            };
            if related {
                uf.union(i, j);
            }
        }
    }

    let mut grouped: Vec<Vec<Element>> = vec![Vec::new(); n];
    for (i, e) in carrier.into_iter().enumerate() {
        grouped[uf.find(i)].push(e);
    }
    let mut classes: Vec<Vec<Element>> = grouped.into_iter().filter(|c| !c.is_empty()).collect();
    for class in &mut classes {
        class.sort();
    }
    classes.sort_by(|a, b| a[0].cmp(&b[0]));

    Ok(GreenClasses {
        family: family.clone(),
        relation,
        classes,
    })
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> UnionFind {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, i: usize) -> usize {
        let mut root = i;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut walk = i;
        while self.parent[walk] != root {
            let next = self.parent[walk];
            self.parent[walk] = root;
            walk = next;
        }
        root
    }

    pub(crate) fn union(&mut self, i: usize, j: usize) {
        let (ri, rj) = (self.find(i), self.find(j));
        if ri != rj {
            self.parent[ri] = rj;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn rectangular_band() -> Semigroup {
        Semigroup::product(catalog::left_zero(2), catalog::right_zero(3))
    }

    fn class_sizes(classes: &GreenClasses) -> Vec<usize> {
        let mut sizes: Vec<usize> = classes.classes().iter().map(|c| c.len()).collect();
        sizes.sort();
        sizes
    }

    #[test]
    fn rectangular_band_rows_and_columns() {
        let band = rectangular_band();
        let r = green_classes(&band, GreenRelation::R).unwrap();
        let l = green_classes(&band, GreenRelation::L).unwrap();
        let h = green_classes(&band, GreenRelation::H).unwrap();
        let d = green_classes(&band, GreenRelation::D).unwrap();
        assert_eq!(class_sizes(&r), vec![3, 3]);
        assert_eq!(class_sizes(&l), vec![2, 2, 2]);
        assert_eq!(class_sizes(&h), vec![1; 6]);
        assert_eq!(class_sizes(&d), vec![6]);

        // R-classes share the first coordinate, L-classes the second.
        let coords = |e: &Element| match e.payload() {
            crate::element::Payload::Pair(a, b) => (a.clone(), b.clone()),
            other => panic!("expected a product element, got {other:?}"),
        };
        for class in r.classes() {
            let row = coords(&class[0]).0;
            for e in class {
                assert_eq!(coords(e).0, row, "R-class mixes rows");
            }
        }
        for class in l.classes() {
            let col = coords(&class[0]).1;
            for e in class {
                assert_eq!(coords(e).1, col, "L-class mixes columns");
            }
        }
    }

    #[test]
    fn groups_are_one_class_for_every_relation() {
        for g in [catalog::sym3(), catalog::klein4(), catalog::cyclic(5)] {
            for rel in [
                GreenRelation::L,
                GreenRelation::R,
                GreenRelation::H,
                GreenRelation::D,
            ] {
                let classes = green_classes(&g, rel).unwrap();
                assert_eq!(classes.class_count(), 1, "{} under {rel}", g.name());
            }
        }
    }

    #[test]
    fn chains_split_into_singletons() {
        let chain = catalog::chain(2);
        for rel in [
            GreenRelation::L,
            GreenRelation::R,
            GreenRelation::H,
            GreenRelation::D,
        ] {
            let classes = green_classes(&chain, rel).unwrap();
            assert_eq!(class_sizes(&classes), vec![1, 1], "chain under {rel}");
        }
    }

    #[test]
    fn h_refines_l_and_r_across_the_catalog() {
        for family in catalog::standard_catalog() {
            let h = green_classes(&family, GreenRelation::H).unwrap();
            for rel in [GreenRelation::L, GreenRelation::R] {
                let coarse = green_classes(&family, rel).unwrap();
                for class in h.classes() {
                    let home = coarse.class_of(&class[0]).unwrap();
                    for e in class {
                        assert!(
                            home.binary_search(e).is_ok(),
                            "{}: H-class escapes its {rel}-class",
                            family.name()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn l_and_r_compositions_commute_on_the_catalog() {
        for family in catalog::standard_catalog() {
            let carrier = family.carrier().unwrap();
            let n = carrier.len();
            let mut l = vec![vec![false; n]; n];
            let mut r = vec![vec![false; n]; n];
            for i in 0..n {
                for j in 0..n {
                    l[i][j] = mutually_related(&family, Side::Right, &carrier[i], &carrier[j])
                        .unwrap();
                    r[i][j] = mutually_related(&family, Side::Left, &carrier[i], &carrier[j])
                        .unwrap();
                }
            }
            let compose = |x: &Vec<Vec<bool>>, y: &Vec<Vec<bool>>| {
                let mut out = vec![vec![false; n]; n];
                for i in 0..n {
                    for k in 0..n {
                        if x[i][k] {
                            for j in 0..n {
                                out[i][j] |= y[k][j];
                            }
                        }
                    }
                }
                out
            };
            assert_eq!(
                compose(&l, &r),
                compose(&r, &l),
                "{}: L∘R differs from R∘L",
                family.name()
            );
        }
    }

    #[test]
    fn d_classes_have_equal_sized_l_and_r_classes() {
        for family in catalog::standard_catalog() {
            let d = green_classes(&family, GreenRelation::D).unwrap();
            for (rel_tag, rel) in [("L", GreenRelation::L), ("R", GreenRelation::R)] {
                let fine = green_classes(&family, rel).unwrap();
                for dclass in d.classes() {
                    let mut sizes = Vec::new();
                    let mut seen: Vec<&Element> = Vec::new();
                    for e in dclass {
                        if seen.iter().any(|s| {
                            fine.class_of(s).unwrap().binary_search(e).is_ok()
                        }) {
                            continue;
                        }
                        seen.push(e);
                        sizes.push(fine.class_of(e).unwrap().len());
                    }
                    assert!(
                        sizes.windows(2).all(|w| w[0] == w[1]),
                        "{}: unequal {rel_tag}-classes inside one D-class: {sizes:?}",
                        family.name()
                    );
                }
            }
        }
    }

    #[test]
    fn infinite_families_are_rejected() {
        assert!(matches!(
            green_classes(&Semigroup::bicyclic(), GreenRelation::L),
            Err(Error::NotFinite { .. })
        ));
    }
}

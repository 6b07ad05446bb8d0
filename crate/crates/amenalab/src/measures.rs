//! Exact fairness checking on finite carriers, transfers between carriers,
//! and windowed measure series.
//!
//! A finitely-supported probability vector is fair on a side exactly when
//! every translation preserves every mass pointwise; additivity then extends
//! the identity to all sets the translation moves injectively. Everything
//! here is exact rational arithmetic: a check passes or it produces a
//! witness, never a tolerance.

use std::collections::BTreeMap;
use std::fmt;

use num::rational::BigRational;
use num::{BigInt, Zero};

use crate::element::Element;
use crate::error::{Error, Result};
use crate::folner;
use crate::greens::UnionFind;
use crate::semigroup::{Semigroup, Side};
use crate::subset::FiniteSubset;
use crate::symbolic::SymbolicSet;

/// A finitely-supported probability vector with exact rational masses.
/// Zero masses are not stored; absent elements weigh nothing.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightVector {
    family: Semigroup,
    masses: BTreeMap<Element, BigRational>,
}

impl WeightVector {
    pub fn new(
        family: &Semigroup,
        masses: impl IntoIterator<Item = (Element, BigRational)>,
    ) -> Result<WeightVector> {
        let mut map: BTreeMap<Element, BigRational> = BTreeMap::new();
        let mut total = BigRational::zero();
        for (e, m) in masses {
            family.check_member(&e)?;
            if m < BigRational::zero() {
                return Err(Error::NegativeMass {
                    element: e.to_string(),
                    mass: render_rational(&m),
                });
            }
            total += &m;
            if !m.is_zero() {
                *map.entry(e).or_insert_with(BigRational::zero) += m;
            }
        }
        if total != BigRational::from(BigInt::from(1)) {
            return Err(Error::NotProbability {
                total: render_rational(&total),
            });
        }
        Ok(WeightVector {
            family: family.clone(),
            masses: map,
        })
    }

    /// Equal mass on every carrier element.
    pub fn uniform(family: &Semigroup) -> Result<WeightVector> {
        let carrier = family.carrier()?;
        let share = BigRational::new(BigInt::from(1), BigInt::from(carrier.len() as u64));
        WeightVector::new(family, carrier.into_iter().map(|e| (e, share.clone())))
    }

    /// All mass on one element.
    pub fn dirac(x: &Element) -> WeightVector {
        WeightVector {
            family: x.family().clone(),
            masses: BTreeMap::from([(x.clone(), BigRational::from(BigInt::from(1)))]),
        }
    }

    pub fn family(&self) -> &Semigroup {
        &self.family
    }

    pub fn mass(&self, e: &Element) -> BigRational {
        self.masses.get(e).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn support(&self) -> impl Iterator<Item = (&Element, &BigRational)> {
        self.masses.iter()
    }

    pub fn mass_of(&self, set: &FiniteSubset) -> BigRational {
        set.iter().map(|e| self.mass(e)).sum()
    }

    /// One `element-literal mass-num/mass-den` line per supported element.
    pub fn parse(family: &Semigroup, text: &str) -> Result<WeightVector> {
        let mut masses = Vec::new();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let Some((lit, mass)) = line.rsplit_once(char::is_whitespace) else {
                return Err(Error::Parse(format!(
                    "expected 'element mass' on line '{line}'"
                )));
            };
            masses.push((family.parse_element(lit.trim_end())?, parse_rational(mass)?));
        }
        WeightVector::new(family, masses)
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (e, m) in &self.masses {
            writeln!(f, "{e} {}", render_rational(m))?;
        }
        Ok(())
    }
}

pub(crate) fn parse_rational(text: &str) -> Result<BigRational> {
    let bad = || Error::Parse(format!("expected a rational like 3/4, got '{text}'"));
    let t = text.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n, d),
        None => (t, "1"),
    };
    let n: BigInt = num.trim().parse().map_err(|_| bad())?;
    let d: BigInt = den.trim().parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(n, d))
}

pub(crate) fn render_rational(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Outcome of a fairness check; failures carry the first offending
/// translation in carrier order.
#[derive(Debug, Clone, PartialEq)]
pub struct FairnessVerdict {
    pub pass: bool,
    pub side: Side,
    pub witness: Option<FairnessWitness>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FairnessWitness {
    pub s: Element,
    pub a: Element,
    pub moved: Element,
    pub mass_a: BigRational,
    pub mass_moved: BigRational,
}

/// Check w(s·a) = w(a) (or the right-sided mirror) for all s, a in the
/// carrier.
pub fn fair_check_finite(w: &WeightVector, side: Side) -> Result<FairnessVerdict> {
    let carrier = w.family().carrier()?;
    fair_check_on(w, side, &carrier)
}

fn fair_check_on(w: &WeightVector, side: Side, carrier: &[Element]) -> Result<FairnessVerdict> {
    for s in carrier {
        for a in carrier {
            let moved = w.family().translate(side, s, a)?;
            let mass_a = w.mass(a);
            let mass_moved = w.mass(&moved);
            if mass_a != mass_moved {
                return Ok(FairnessVerdict {
                    pass: false,
                    side,
                    witness: Some(FairnessWitness {
                        s: s.clone(),
                        a: a.clone(),
                        moved,
                        mass_a,
                        mass_moved,
                    }),
                });
            }
        }
    }
    Ok(FairnessVerdict {
        pass: true,
        side,
        witness: None,
    })
}

/// The partition of the carrier on which every fair vector must be
/// constant: the equivalence closure of a ~ s·a (or a ~ a·s) over all s.
/// Fair vectors are exactly the probability vectors constant on each class.
pub fn solve_fair_classes(family: &Semigroup, side: Side) -> Result<Vec<Vec<Element>>> {
    let carrier = family.carrier()?;
    let index: BTreeMap<&Element, usize> =
        carrier.iter().enumerate().map(|(i, e)| (e, i)).collect();
    let mut uf = UnionFind::new(carrier.len());
    for (i, a) in carrier.iter().enumerate() {
        for s in &carrier {
            let moved = family.translate(side, s, a)?;
            uf.union(i, index[&moved]);
        }
    }
    let mut grouped: Vec<Vec<Element>> = vec![Vec::new(); carrier.len()];
    for (i, e) in carrier.into_iter().enumerate() {
        grouped[uf.find(i)].push(e);
    }
    let mut classes: Vec<Vec<Element>> = grouped.into_iter().filter(|c| !c.is_empty()).collect();
    for class in &mut classes {
        class.sort();
    }
    classes.sort_by(|a, b| a[0].cmp(&b[0]));
    Ok(classes)
}

/// How to carry a vector from one carrier to another.
#[derive(Debug, Clone)]
pub enum Transfer {
    /// w*(x) = w(x*) on the same family; a passing side flips.
    Involution,
    /// Tensor with a second vector on the product family.
    Product(WeightVector),
    /// Normalized restriction to a closed, positive-mass subsemigroup;
    /// checked on the restricted carrier.
    Restrict(FiniteSubset),
    /// Lift to the family with an adjoined zero, the zero weightless.
    AdjoinZero,
}

/// Build the transferred vector and check it on the appropriate side.
pub fn transfer_check(
    w: &WeightVector,
    side: Side,
    mode: &Transfer,
) -> Result<(WeightVector, FairnessVerdict)> {
    match mode {
        Transfer::Involution => {
            let family = w.family();
            let starred = w
                .support()
                .map(|(e, m)| Ok((family.involution(e)?, m.clone())))
                .collect::<Result<Vec<_>>>()?;
            let moved = WeightVector::new(family, starred)?;
            let verdict = fair_check_finite(&moved, side.flipped())?;
            Ok((moved, verdict))
        }
        Transfer::Product(v) => {
            let product = Semigroup::product(w.family().clone(), v.family().clone());
            let mut masses = Vec::new();
            for (a, ma) in w.support() {
                for (b, mb) in v.support() {
                    masses.push((product.pair_element(a, b)?, ma * mb));
                }
            }
            let tensor = WeightVector::new(&product, masses)?;
            let verdict = fair_check_finite(&tensor, side)?;
            Ok((tensor, verdict))
        }
        Transfer::Restrict(t) => {
            if t.family() != w.family() {
                return Err(Error::FamilyMismatch {
                    expected: w.family().name(),
                    got: t.family().name(),
                });
            }
            for a in t.iter() {
                for b in t.iter() {
                    let c = w.family().mul(a, b)?;
                    if !t.contains(&c) {
                        return Err(Error::NotClosed {
                            subset: "restriction carrier".into(),
                            a: a.to_string(),
                            b: b.to_string(),
                            c: c.to_string(),
                        });
                    }
                }
            }
            let total = w.mass_of(t);
            if total.is_zero() {
                return Err(Error::ZeroMassCarrier);
            }
            let restricted = WeightVector::new(
                w.family(),
                t.iter().map(|e| (e.clone(), w.mass(e) / &total)),
            )?;
            let verdict = fair_check_on(&restricted, side, t.elements())?;
            Ok((restricted, verdict))
        }
        Transfer::AdjoinZero => {
            let bigger = Semigroup::adjoin_zero(w.family().clone());
            let lifted = w
                .support()
                .map(|(e, m)| Ok((bigger.lift(e)?, m.clone())))
                .collect::<Result<Vec<_>>>()?;
            let moved = WeightVector::new(&bigger, lifted)?;
            let verdict = fair_check_finite(&moved, side)?;
            Ok((moved, verdict))
        }
    }
}

/// Quotient by a congruence partition, pushing the vector onto classes.
/// Classes are indexed in the given order; the quotient is a table family.
pub fn quotient_pushforward(
    w: &WeightVector,
    classes: &[Vec<Element>],
) -> Result<(Semigroup, WeightVector)> {
    let family = w.family();
    let carrier = family.carrier()?;
    let mut class_of: BTreeMap<&Element, usize> = BTreeMap::new();
    for (ci, class) in classes.iter().enumerate() {
        for e in class {
            family.check_member(e)?;
            if class_of.insert(e, ci).is_some() {
                return Err(Error::Parse(format!("element {e} appears in two classes")));
            }
        }
    }
    if class_of.len() != carrier.len() {
        return Err(Error::Parse(
            "classes do not cover the carrier exactly".into(),
        ));
    }
    let index: BTreeMap<&Element, usize> =
        carrier.iter().enumerate().map(|(i, e)| (e, i)).collect();

    // Congruence: multiplying related pairs by any element on either side
    // must land in one class.
    for class in classes {
        for a in class {
            let b = &class[0];
            if a == b {
                continue;
            }
            for c in &carrier {
                for (x, y) in [
                    (family.mul(a, c)?, family.mul(b, c)?),
                    (family.mul(c, a)?, family.mul(c, b)?),
                ] {
                    if class_of[&x] != class_of[&y] {
                        return Err(Error::NotCongruence {
                            a: index[a],
                            b: index[b],
                            c: index[c],
                        });
                    }
                }
            }
        }
    }

    let k = classes.len();
    let mut entries = Vec::with_capacity(k * k);
    for row in classes {
        for col in classes {
            entries.push(class_of[&family.mul(&row[0], &col[0])?]);
        }
    }
    let table = crate::families::finite::CayleyTable::new(k, entries)?;
    let quotient =
        Semigroup::from_cayley_table(&format!("quotient({})", family.name()), table);
    let pushed = WeightVector::new(
        &quotient,
        classes.iter().enumerate().map(|(ci, class)| {
            let mass = class.iter().map(|e| w.mass(e)).sum::<BigRational>();
            (quotient.element_from_index(ci).unwrap(), mass)
        }),
    )?;
    Ok((quotient, pushed))
}

/// |A ∩ F_n| / |F_n| over strictly increasing window indices.
pub fn measure_series(a: &SymbolicSet, ns: &[usize]) -> Result<Vec<(usize, BigRational)>> {
    if ns.is_empty() || ns.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::BadRange);
    }
    ns.iter()
        .map(|&n| Ok((n, folner::empirical_measure(a, n)?)))
        .collect()
}

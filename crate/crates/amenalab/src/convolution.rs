//! Convolution of finitely supported functions and the partial action s∗f.
//!
//! On finite supports everything is total and exact. Symbolic indicators
//! are only ever evaluated inside a window, so their results carry a
//! verdict instead of a boundedness claim: per-point values are fiber
//! counts, and the only honest global statements are "the support is
//! s·supp(f)" and whatever a sweep of growing windows reveals.

use std::collections::BTreeMap;
use std::fmt;

use num::rational::BigRational;
use num::{BigInt, Zero};

use crate::actions::{fibers, injective_partition};
use crate::element::Element;
use crate::error::{Error, Result};
use crate::measures::{fair_check_finite, parse_rational, render_rational, WeightVector};
use crate::semigroup::{Semigroup, Side};
use crate::subset::FiniteSubset;
use crate::symbolic::SymbolicSet;

/// A finitely supported rational-valued function on a family. Stored
/// entries are nonzero; everything else is 0. Values may be negative.
#[derive(Debug, Clone, PartialEq)]
pub struct FinFunc {
    family: Semigroup,
    values: BTreeMap<Element, BigRational>,
}

impl FinFunc {
    pub fn new(
        family: &Semigroup,
        entries: impl IntoIterator<Item = (Element, BigRational)>,
    ) -> Result<FinFunc> {
        let mut values: BTreeMap<Element, BigRational> = BTreeMap::new();
        for (e, v) in entries {
            family.check_member(&e)?;
            *values.entry(e).or_insert_with(BigRational::zero) += v;
        }
        values.retain(|_, v| !v.is_zero());
        Ok(FinFunc {
            family: family.clone(),
            values,
        })
    }

    pub fn zero(family: &Semigroup) -> FinFunc {
        FinFunc {
            family: family.clone(),
            values: BTreeMap::new(),
        }
    }

    pub fn dirac(x: &Element) -> FinFunc {
        FinFunc {
            family: x.family().clone(),
            values: BTreeMap::from([(x.clone(), BigRational::from(BigInt::from(1)))]),
        }
    }

    /// χ_A for a finite set A.
    pub fn indicator(a: &FiniteSubset) -> FinFunc {
        FinFunc {
            family: a.family().clone(),
            values: a
                .iter()
                .map(|e| (e.clone(), BigRational::from(BigInt::from(1))))
                .collect(),
        }
    }

    pub fn family(&self) -> &Semigroup {
        &self.family
    }

    pub fn value(&self, e: &Element) -> BigRational {
        self.values.get(e).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn support(&self) -> impl Iterator<Item = (&Element, &BigRational)> {
        self.values.iter()
    }

    pub fn support_len(&self) -> usize {
        self.values.len()
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    pub fn add(&self, other: &FinFunc) -> Result<FinFunc> {
        if self.family != other.family {
            return Err(Error::FamilyMismatch {
                expected: self.family.name(),
                got: other.family.name(),
            });
        }
        FinFunc::new(
            &self.family,
            self.values
                .iter()
                .chain(other.values.iter())
                .map(|(e, v)| (e.clone(), v.clone())),
        )
    }

    pub fn scale(&self, c: &BigRational) -> FinFunc {
        let mut values = BTreeMap::new();
        if !c.is_zero() {
            for (e, v) in &self.values {
                values.insert(e.clone(), v * c);
            }
        }
        FinFunc {
            family: self.family.clone(),
            values,
        }
    }

    /// One `element-literal value` line per supported element.
    pub fn parse(family: &Semigroup, text: &str) -> Result<FinFunc> {
        let mut entries = Vec::new();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let Some((lit, value)) = line.rsplit_once(char::is_whitespace) else {
                return Err(Error::Parse(format!(
                    "expected 'element value' on line '{line}'"
                )));
            };
            entries.push((family.parse_element(lit.trim_end())?, parse_rational(value)?));
        }
        FinFunc::new(family, entries)
    }
}

impl fmt::Display for FinFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (e, v) in &self.values {
            writeln!(f, "{e} {}", render_rational(v))?;
        }
        Ok(())
    }
}

/// (f∗g)(x) = Σ_{st=x} f(s)g(t). The sum runs over supp(f) × supp(g), so
/// the result's support sits inside the product set supp(f)·supp(g).
pub fn convolve(f: &FinFunc, g: &FinFunc) -> Result<FinFunc> {
    if f.family != g.family {
        return Err(Error::FamilyMismatch {
            expected: f.family.name(),
            got: g.family.name(),
        });
    }
    let mut entries = Vec::new();
    for (s, fs) in f.support() {
        for (t, gt) in g.support() {
            entries.push((f.family.mul(s, t)?, fs * gt));
        }
    }
    FinFunc::new(&f.family, entries)
}

/// What a window computation can honestly say about boundedness of s∗f.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundednessVerdict {
    /// Finite support: the values are total and the function is bounded.
    Bounded,
    /// The largest fiber grew strictly across the window sweep.
    UnboundedTrend,
    /// Window evidence only; no global claim either way.
    WindowLimited,
}

impl fmt::Display for BoundednessVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BoundednessVerdict::Bounded => "bounded",
            BoundednessVerdict::UnboundedTrend => "unbounded-trend",
            BoundednessVerdict::WindowLimited => "window-limited",
        })
    }
}

/// The computed s∗f. `values` covers every point of s·supp(f) (keeping
/// explicit zeros where signed masses cancel), so its key set is the
/// support image, which is well defined even when the values are not
/// total.
#[derive(Debug, Clone)]
pub struct PartialActionResult {
    element: Element,
    total: bool,
    values: BTreeMap<Element, BigRational>,
    max_fiber: usize,
    support_image: FiniteSubset,
    verdict: BoundednessVerdict,
}

impl PartialActionResult {
    pub fn element(&self) -> &Element {
        &self.element
    }

    /// True when the values are the global function, not a window view.
    pub fn is_total(&self) -> bool {
        self.total
    }

    pub fn values(&self) -> &BTreeMap<Element, BigRational> {
        &self.values
    }

    pub fn value_at(&self, x: &Element) -> BigRational {
        self.values.get(x).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn max_fiber(&self) -> usize {
        self.max_fiber
    }

    pub fn support_image(&self) -> &FiniteSubset {
        &self.support_image
    }

    pub fn verdict(&self) -> BoundednessVerdict {
        self.verdict
    }
}

/// s∗f for finitely supported f: total, exact and always bounded.
pub fn partial_action(s: &Element, f: &FinFunc) -> Result<PartialActionResult> {
    let family = f.family();
    family.check_member(s)?;
    let mut values: BTreeMap<Element, BigRational> = BTreeMap::new();
    let mut fiber: BTreeMap<Element, usize> = BTreeMap::new();
    for (t, v) in f.support() {
        let x = family.mul(s, t)?;
        *values.entry(x.clone()).or_insert_with(BigRational::zero) += v;
        *fiber.entry(x).or_insert(0) += 1;
    }
    let max_fiber = fiber.values().copied().max().unwrap_or(0);
    let support_image = FiniteSubset::new(family, values.keys().cloned())?;
    Ok(PartialActionResult {
        element: s.clone(),
        total: true,
        values,
        max_fiber,
        support_image,
        verdict: BoundednessVerdict::Bounded,
    })
}

/// s∗χ_A evaluated inside window(n): per-point fiber counts. The verdict
/// comes from sweeping the max fiber over growing sub-windows; a strict
/// climb is reported as a trend, anything else stays window-limited.
pub fn partial_action_indicator(
    s: &Element,
    a: &SymbolicSet,
    n: usize,
) -> Result<PartialActionResult> {
    let family = a.family();
    family.check_member(s)?;
    let mut sweep: Vec<usize> = [n / 4, n / 2, (3 * n) / 4, n]
        .into_iter()
        .filter(|&k| k >= 1)
        .collect();
    sweep.dedup();

    let mut maxes = Vec::with_capacity(sweep.len());
    let mut values: BTreeMap<Element, BigRational> = BTreeMap::new();
    for (i, &k) in sweep.iter().enumerate() {
        let base = a.intersect_window(k)?;
        let mut counts: BTreeMap<Element, u64> = BTreeMap::new();
        for t in base.iter() {
            *counts.entry(family.mul(s, t)?).or_insert(0) += 1;
        }
        maxes.push(counts.values().copied().max().unwrap_or(0));
        if i + 1 == sweep.len() {
            values = counts
                .into_iter()
                .map(|(x, c)| (x, BigRational::from(BigInt::from(c))))
                .collect();
        }
    }
    let climbing = maxes.len() >= 2 && maxes.windows(2).all(|w| w[0] < w[1]);
    let max_fiber = maxes.last().copied().unwrap_or(0) as usize;
    let support_image = FiniteSubset::new(family, values.keys().cloned())?;
    Ok(PartialActionResult {
        element: s.clone(),
        total: false,
        values,
        max_fiber,
        support_image,
        verdict: if climbing {
            BoundednessVerdict::UnboundedTrend
        } else {
            BoundednessVerdict::WindowLimited
        },
    })
}

/// The three sides of the finite-window boundedness equivalence: the
/// largest fiber, a greedy split of A∩window into that many injectively
/// moved parts, and whether the fiber counts equal the sum of the parts'
/// image indicators. The last flag is computed by comparison, not assumed.
#[derive(Debug, Clone)]
pub struct IndicatorVerdict {
    pub max_fiber: usize,
    pub partition: Vec<FiniteSubset>,
    pub simple: bool,
}

pub fn bounded_indicator_verdict(
    s: &Element,
    a: &SymbolicSet,
    n: usize,
) -> Result<IndicatorVerdict> {
    let family = a.family();
    family.check_member(s)?;
    let base = a.intersect_window(n)?;
    let fiber_view = fibers(Side::Left, s, &base)?;
    let partition = injective_partition(Side::Left, s, &base)?;

    // Independent recomputation of s∗χ_A on the window: once from the
    // fibers, once as Σ_i χ_{s·A_i} over the partition.
    let mut from_fibers: BTreeMap<Element, usize> = BTreeMap::new();
    for (image, fiber) in fiber_view.fibers() {
        from_fibers.insert(image.clone(), fiber.len());
    }
    let mut from_parts: BTreeMap<Element, usize> = BTreeMap::new();
    for part in &partition {
        for t in part.iter() {
            *from_parts
                .entry(family.translate(Side::Left, s, t)?)
                .or_insert(0) += 1;
        }
    }
    let simple = from_fibers == from_parts;
    Ok(IndicatorVerdict {
        max_fiber: fiber_view.max_fiber_size(),
        partition,
        simple,
    })
}

/// Both sides of the invariance identity ∫(s∗f) dw = ∫f dw, exactly.
#[derive(Debug, Clone)]
pub struct AstInvariance {
    pub equal: bool,
    pub moved_integral: BigRational,
    pub original_integral: BigRational,
    /// Whether w itself passed the left fairness check; when false the
    /// identity carries no guarantee and the comparison is informational.
    pub fair: bool,
}

pub fn ast_invariance_check(
    w: &WeightVector,
    f: &FinFunc,
    s: &Element,
) -> Result<AstInvariance> {
    if w.family() != f.family() {
        return Err(Error::FamilyMismatch {
            expected: w.family().name(),
            got: f.family().name(),
        });
    }
    w.family().check_member(s)?;
    let fair = fair_check_finite(w, Side::Left)?.pass;
    let moved = partial_action(s, f)?;
    let moved_integral: BigRational = moved
        .values()
        .iter()
        .map(|(x, v)| v * w.mass(x))
        .sum();
    let original_integral: BigRational = f.support().map(|(x, v)| v * w.mass(x)).sum();
    Ok(AstInvariance {
        equal: moved_integral == original_integral,
        moved_integral,
        original_integral,
        fair,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn random_func(family: &Semigroup, pool: &[Element], rng: &mut ChaCha8Rng) -> FinFunc {
        let mut entries = Vec::new();
        for e in pool {
            if rng.gen_bool(0.6) {
                entries.push((e.clone(), rat(rng.gen_range(-4..=4), rng.gen_range(1..=4))));
            }
        }
        FinFunc::new(family, entries).unwrap()
    }

    #[test]
    fn dirac_convolution_multiplies_the_points() {
        let s = Semigroup::free_word(2).unwrap();
        let a = FinFunc::dirac(&s.parse_element("a").unwrap());
        let b = FinFunc::dirac(&s.parse_element("b").unwrap());
        let ab = convolve(&a, &b).unwrap();
        assert_eq!(ab, FinFunc::dirac(&s.parse_element("ab").unwrap()));
    }

    #[test]
    fn bicyclic_two_point_convolution() {
        let b = Semigroup::bicyclic();
        let f = FinFunc::parse(&b, "p 1\nq 1\n").unwrap();
        let g = FinFunc::dirac(&b.parse_element("p").unwrap());
        let fg = convolve(&f, &g).unwrap();
        assert_eq!(fg, FinFunc::parse(&b, "p^2 1\nqp 1\n").unwrap());
    }

    #[test]
    fn left_zero_convolution_collapses_coefficients() {
        let lz = catalog::left_zero(2);
        let x = lz.element_from_index(0).unwrap();
        let y = lz.element_from_index(1).unwrap();
        let fg = convolve(
            &FinFunc::dirac(&x),
            &FinFunc::new(&lz, [(x.clone(), rat(1, 1)), (y, rat(1, 1))]).unwrap(),
        )
        .unwrap();
        assert_eq!(fg.value(&x), rat(2, 1));
        assert_eq!(fg.support_len(), 1);
    }

    #[test]
    fn convolution_is_associative_and_bilinear() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let families = [
            (Semigroup::bicyclic(), Semigroup::bicyclic().window(2).unwrap()),
            (
                Semigroup::free_word(2).unwrap(),
                Semigroup::free_word(2).unwrap().window(2).unwrap(),
            ),
            (catalog::left_zero(3), catalog::left_zero(3).window(1).unwrap()),
        ];
        for (family, window) in families {
            let pool = window.elements().to_vec();
            for _ in 0..10 {
                let f = random_func(&family, &pool, &mut rng);
                let g = random_func(&family, &pool, &mut rng);
                let h = random_func(&family, &pool, &mut rng);
                let assoc_l = convolve(&convolve(&f, &g).unwrap(), &h).unwrap();
                let assoc_r = convolve(&f, &convolve(&g, &h).unwrap()).unwrap();
                assert_eq!(assoc_l, assoc_r);

                let alpha = rat(2, 3);
                let beta = rat(-1, 2);
                let combo = f.scale(&alpha).add(&g.scale(&beta)).unwrap();
                let lhs = convolve(&combo, &h).unwrap();
                let rhs = convolve(&f, &h)
                    .unwrap()
                    .scale(&alpha)
                    .add(&convolve(&g, &h).unwrap().scale(&beta))
                    .unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn convolution_support_sits_in_the_product_set() {
        let b = Semigroup::bicyclic();
        let window = b.window(3).unwrap();
        let f = FinFunc::parse(&b, "p 2/3\nqp 1/5\n").unwrap();
        let g = FinFunc::indicator(&window);
        let fg = convolve(&f, &g).unwrap();
        let mut products = std::collections::BTreeSet::new();
        for (s, _) in f.support() {
            for t in window.iter() {
                products.insert(b.mul(s, t).unwrap());
            }
        }
        for (x, _) in fg.support() {
            assert!(products.contains(x));
        }

        // Signed masses can cancel to the empty support.
        let lz = catalog::left_zero(2);
        let x = lz.element_from_index(0).unwrap();
        let y = lz.element_from_index(1).unwrap();
        let signed = FinFunc::new(&lz, [(x.clone(), rat(1, 1)), (y, rat(-1, 1))]).unwrap();
        let cancelled = convolve(&FinFunc::dirac(&x), &signed).unwrap();
        assert!(cancelled.is_zero());
    }

    #[test]
    fn injective_translation_relabels_the_function() {
        let s = Semigroup::free_word(2).unwrap();
        let f = FinFunc::parse(&s, "a 1/2\nb 1/3\nab 1/6\n").unwrap();
        let b = s.parse_element("b").unwrap();
        let moved = partial_action(&b, &f).unwrap();
        assert!(moved.is_total());
        assert_eq!(moved.verdict(), BoundednessVerdict::Bounded);
        assert_eq!(moved.max_fiber(), 1);
        assert_eq!(moved.value_at(&s.parse_element("ba").unwrap()), rat(1, 2));
        assert_eq!(moved.value_at(&s.parse_element("bab").unwrap()), rat(1, 6));
        assert_eq!(moved.support_image().len(), 3);
    }

    #[test]
    fn zero_translation_piles_the_mass_at_zero() {
        let n0 = Semigroup::adjoin_zero(crate::literal::parse_family("commvec(1)").unwrap());
        let zero = n0.zero_element().unwrap();
        // f((k)) = 2^{-k} for k = 1..=6, truncated geometric tail.
        let f = FinFunc::new(
            &n0,
            (1..=6).map(|k| {
                (
                    n0.parse_element(&format!("({k})")).unwrap(),
                    rat(1, 1 << k),
                )
            }),
        )
        .unwrap();
        let moved = partial_action(&zero, &f).unwrap();
        assert_eq!(moved.value_at(&zero), rat(63, 64), "partial geometric sum");
        assert_eq!(moved.support_image().len(), 1);
        assert_eq!(moved.max_fiber(), 6);
    }

    #[test]
    fn indicator_action_detects_the_zero_trend() {
        let n0 = Semigroup::adjoin_zero(crate::literal::parse_family("commvec(1)").unwrap());
        let zero = n0.zero_element().unwrap();
        let all = SymbolicSet::all(&n0);
        let res = partial_action_indicator(&zero, &all, 8).unwrap();
        assert_eq!(res.verdict(), BoundednessVerdict::UnboundedTrend);
        assert!(!res.is_total());
        let window_size = n0.window_size(8).unwrap();
        assert_eq!(res.value_at(&zero), rat(window_size as i64, 1));
    }

    #[test]
    fn indicator_action_on_the_bicyclic_box_stays_flat() {
        let b = Semigroup::bicyclic();
        let p = b.parse_element("p").unwrap();
        let res = partial_action_indicator(&p, &SymbolicSet::all(&b), 8).unwrap();
        assert_eq!(res.verdict(), BoundednessVerdict::WindowLimited);
        assert_eq!(res.max_fiber(), 2);
        // The size-2 fiber over p is {1, qp}.
        assert_eq!(res.value_at(&p), rat(2, 1));
    }

    #[test]
    fn indicator_verdict_chain_on_the_bicyclic_box() {
        let b = Semigroup::bicyclic();
        let p = b.parse_element("p").unwrap();
        let verdict = bounded_indicator_verdict(&p, &SymbolicSet::all(&b), 5).unwrap();
        assert_eq!(verdict.max_fiber, 2);
        assert_eq!(verdict.partition.len(), 2);
        assert!(verdict.simple);
    }

    #[test]
    fn indicator_verdict_for_injective_and_collapsing_translations() {
        let s = Semigroup::free_word(2).unwrap();
        let a = s.parse_element("a").unwrap();
        let verdict = bounded_indicator_verdict(&a, &SymbolicSet::all(&s), 4).unwrap();
        assert_eq!(verdict.max_fiber, 1);
        assert_eq!(verdict.partition.len(), 1);
        assert!(verdict.simple);

        let g0 = Semigroup::adjoin_zero(catalog::cyclic(3));
        let zero = g0.zero_element().unwrap();
        let verdict = bounded_indicator_verdict(&zero, &SymbolicSet::all(&g0), 1).unwrap();
        assert_eq!(verdict.max_fiber, g0.order().unwrap() as usize);
        assert!(verdict.simple);
    }

    #[test]
    fn partial_action_is_linear() {
        let b = Semigroup::bicyclic();
        let f = FinFunc::parse(&b, "1 1/2\np 1/3\n").unwrap();
        let g = FinFunc::parse(&b, "q 3/4\nqp 1/9\n").unwrap();
        let s = b.parse_element("qp").unwrap();
        let alpha = rat(5, 7);
        let beta = rat(-2, 3);
        let combo = f.scale(&alpha).add(&g.scale(&beta)).unwrap();
        let lhs = partial_action(&s, &combo).unwrap();
        let f_moved = partial_action(&s, &f).unwrap();
        let g_moved = partial_action(&s, &g).unwrap();
        for x in lhs.values().keys() {
            assert_eq!(
                lhs.value_at(x),
                &alpha * f_moved.value_at(x) + &beta * g_moved.value_at(x)
            );
        }
    }

    #[test]
    fn invariance_holds_for_fair_vectors_on_the_band() {
        let band = Semigroup::product(catalog::left_zero(2), catalog::right_zero(3));
        let w = WeightVector::uniform(&band).unwrap();
        let carrier = band.carrier().unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..100 {
            let f = random_func(&band, &carrier, &mut rng);
            for s in &carrier {
                let check = ast_invariance_check(&w, &f, s).unwrap();
                assert!(check.fair);
                assert!(check.equal, "s = {s}");
            }
        }
    }

    #[test]
    fn invariance_fails_without_fairness() {
        let lz = catalog::left_zero(2);
        let x = lz.element_from_index(0).unwrap();
        let y = lz.element_from_index(1).unwrap();
        let w = WeightVector::new(&lz, [(x.clone(), rat(3, 4)), (y.clone(), rat(1, 4))])
            .unwrap();
        let check = ast_invariance_check(&w, &FinFunc::dirac(&y), &x).unwrap();
        assert!(!check.fair);
        assert!(!check.equal);
        assert_eq!(check.moved_integral, rat(3, 4), "x∗χ_y = χ_x");
        assert_eq!(check.original_integral, rat(1, 4));
    }

    #[test]
    fn finite_invariance_agrees_with_the_fairness_check() {
        // Singleton indicators span everything, so checking them on every
        // translation decides invariance; it must match fair_check_finite.
        let mut vectors: Vec<(Semigroup, WeightVector)> = Vec::new();
        for family in [
            catalog::trivial(),
            catalog::cyclic(3),
            catalog::left_zero(2),
            catalog::right_zero(3),
            catalog::chain(2),
        ] {
            let carrier = family.carrier().unwrap();
            vectors.push((family.clone(), WeightVector::uniform(&family).unwrap()));
            vectors.push((family.clone(), WeightVector::dirac(&carrier[0])));
        }
        for (family, w) in vectors {
            let carrier = family.carrier().unwrap();
            let fair = fair_check_finite(&w, Side::Left).unwrap().pass;
            let mut invariant = true;
            for s in &carrier {
                for a in &carrier {
                    let check =
                        ast_invariance_check(&w, &FinFunc::dirac(a), s).unwrap();
                    invariant &= check.equal;
                }
            }
            assert_eq!(fair, invariant, "family {}", family.name());
        }
    }

    #[test]
    fn finfunc_round_trips_and_rejects_garbage() {
        let b = Semigroup::bicyclic();
        let text = "1 -2/3\nqp 7/1\n";
        let f = FinFunc::parse(&b, text).unwrap();
        assert_eq!(f.to_string(), text);
        assert_eq!(f.value(&b.parse_element("qp").unwrap()), rat(7, 1));
        assert!(FinFunc::parse(&b, "p one\n").is_err());
        assert!(FinFunc::parse(&b, "nonsense 1/2\n").is_err());

        // Zero entries vanish, opposite entries cancel.
        let z = FinFunc::parse(&b, "p 0/5\nq 1/2\nq -1/2\n").unwrap();
        assert!(z.is_zero());
    }
}

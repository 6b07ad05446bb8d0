//! Window sweeps of translation stability.
//!
//! For a window sequence F_n, an element s, and a subset A, the sweep counts
//! an exact symmetric difference per window and reports the ratio against
//! |F_n| as an exact rational. Ratios that sink to zero witness the
//! invariance that a fair measure needs; ratios bounded away from zero are
//! evidence of the opposite kind.

use num::rational::BigRational;
use num::BigInt;

use crate::element::{Element, Payload};
use crate::error::{Error, Result};
use crate::families::nat_mul;
use crate::semigroup::{ReprView, Side};
use crate::subset::FiniteSubset;
use crate::symbolic::{SetKind, SymbolicSet};

/// Which comparison set the symmetric difference uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variant {
    /// s(A ∩ F_n) against A ∩ F_n itself: the classical window difference,
    /// and the reading that reproduces the counted examples.
    ProofVariant,
    /// s(A ∩ F_n) against the swept ideal clipped to the window. The two
    /// readings genuinely differ (a collapsing s can translate everything
    /// into the window and still move no mass), so both stay available.
    TheoremLiteral,
}

impl Variant {
    pub fn parse(text: &str) -> Result<Variant> {
        match text.trim() {
            "proof" => Ok(Variant::ProofVariant),
            "literal" => Ok(Variant::TheoremLiteral),
            other => Err(Error::Parse(format!(
                "unknown variant '{other}', expected 'proof' or 'literal'"
            ))),
        }
    }

    pub fn tag(self) -> &'static str {
        match self {
            Variant::ProofVariant => "proof",
            Variant::TheoremLiteral => "literal",
        }
    }
}

impl std::fmt::Display for Variant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.tag())
    }
}

/// One row of a sweep.
#[derive(Debug, Clone, PartialEq)]
pub struct RatioRecord {
    pub n: usize,
    pub window_size: u64,
    pub symdiff: u64,
    pub ratio: BigRational,
}

/// A sweep of exact ratios over strictly increasing window indices.
#[derive(Debug, Clone)]
pub struct RatioSeries {
    element: Element,
    side: Side,
    variant: Variant,
    set: SymbolicSet,
    records: Vec<RatioRecord>,
}

impl RatioSeries {
    pub fn element(&self) -> &Element {
        &self.element
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn set(&self) -> &SymbolicSet {
        &self.set
    }

    pub fn records(&self) -> &[RatioRecord] {
        &self.records
    }

    pub fn min_ratio(&self) -> Option<&BigRational> {
        self.records.iter().map(|r| &r.ratio).min()
    }

    pub fn max_ratio(&self) -> Option<&BigRational> {
        self.records.iter().map(|r| &r.ratio).max()
    }

    pub fn last_ratio(&self) -> Option<&BigRational> {
        self.records.last().map(|r| &r.ratio)
    }

    /// Smallest record index from which the ratios never increase again.
    pub fn nonincreasing_from(&self) -> Option<usize> {
        if self.records.is_empty() {
            return None;
        }
        let mut from = self.records.len() - 1;
        while from > 0 && self.records[from - 1].ratio >= self.records[from].ratio {
            from -= 1;
        }
        Some(from)
    }

    /// Is the final quarter of the series non-increasing?
    pub fn tail_nonincreasing(&self) -> bool {
        match self.nonincreasing_from() {
            Some(from) => from <= self.records.len().saturating_sub(self.tail_len()),
            None => false,
        }
    }

    /// Smallest ratio over the final quarter: the only liminf estimate an
    /// exact finite sweep can offer.
    pub fn liminf_estimate(&self) -> Option<&BigRational> {
        self.tail().iter().map(|r| &r.ratio).min()
    }

    /// Largest ratio over the final quarter.
    pub fn limsup_estimate(&self) -> Option<&BigRational> {
        self.tail().iter().map(|r| &r.ratio).max()
    }

    /// The first window index whose ratio is at or below the threshold.
    pub fn first_n_at_or_below(&self, threshold: &BigRational) -> Option<usize> {
        self.records
            .iter()
            .find(|r| &r.ratio <= threshold)
            .map(|r| r.n)
    }

    fn tail_len(&self) -> usize {
        (self.records.len() / 4).max(1)
    }

    fn tail(&self) -> &[RatioRecord] {
        &self.records[self.records.len() - self.tail_len().min(self.records.len())..]
    }

    pub fn to_csv(&self) -> String {
        let mut out =
            String::from("family,element,side,variant,n,window_size,symdiff,ratio_num,ratio_den\n");
        let family = csv_field(&self.set.family().name());
        let element = csv_field(&self.element.to_string());
        for r in &self.records {
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{},{}\n",
                family,
                element,
                self.side,
                self.variant,
                r.n,
                r.window_size,
                r.symdiff,
                r.ratio.numer(),
                r.ratio.denom(),
            ));
        }
        out
    }
}

fn csv_field(text: &str) -> String {
    if text.contains(',') || text.contains('"') {
        format!("\"{}\"", text.replace('"', "\"\""))
    } else {
        text.to_string()
    }
}

fn check_same_family(s: &Element, a: &SymbolicSet) -> Result<()> {
    if s.family() != a.family() {
        return Err(Error::FamilyMismatch {
            expected: a.family().name(),
            got: s.family().name(),
        });
    }
    Ok(())
}

/// s·(A ∩ F_n) (or (A ∩ F_n)·s) as an explicit set, not clipped to the
/// window.
pub fn translated_intersection(
    side: Side,
    s: &Element,
    a: &SymbolicSet,
    n: usize,
) -> Result<FiniteSubset> {
    check_same_family(s, a)?;
    let family = a.family();
    let mut image = Vec::new();
    for x in a.intersect_window(n)?.iter() {
        image.push(family.translate(side, s, x)?);
    }
    image.sort();
    image.dedup();
    Ok(FiniteSubset::from_sorted_unchecked(family, image))
}

/// |sA ∩ F_n|, by translate-set algebra when the set's shape survives
/// translation, otherwise by enumerating a padded window. Errors when
/// neither route exists.
pub fn translate_count_in_window(
    side: Side,
    s: &Element,
    a: &SymbolicSet,
    n: usize,
) -> Result<u64> {
    check_same_family(s, a)?;
    if let Some(image) = a.pushforward(side, s) {
        return image.count_in_window(n);
    }
    let family = a.family();
    let Some(pad) = family.enumeration_pad(s.payload()) else {
        return Err(Error::NoMembershipOracle {
            family: family.name(),
            set: format!("the translate of {a} by {s}"),
        });
    };
    // Every window point of sA has all its preimages inside the padded
    // window, so the clipped image below is complete.
    let mut image = Vec::new();
    for x in a.intersect_window(n + pad)?.iter() {
        let y = family.translate(side, s, x)?;
        if family.window_contains_payload(n, y.payload()) {
            image.push(y);
        }
    }
    image.sort();
    image.dedup();
    Ok(image.len() as u64)
}

/// Exact size of the chosen symmetric difference at one window.
pub fn symdiff_count(
    side: Side,
    s: &Element,
    a: &SymbolicSet,
    n: usize,
    variant: Variant,
) -> Result<u64> {
    check_same_family(s, a)?;
    let family = a.family();

    // Prime generators of the multiplicative naturals admit a face count;
    // the window is far too large to enumerate beyond small n.
    if matches!(family.view(), ReprView::NatMul) && matches!(a.kind(), SetKind::All) {
        if let Payload::Factors(f) = s.payload() {
            if let [(j, 1)] = f[..] {
                if (j as usize) < n {
                    let literal = variant == Variant::TheoremLiteral;
                    return Ok(nat_mul::prime_generator_symdiffs(n, literal)[j as usize]);
                }
            }
        }
    }

    let image = translated_intersection(side, s, a, n)?;
    let other = match variant {
        Variant::ProofVariant => a.intersect_window(n)?,
        Variant::TheoremLiteral => {
            let ideal = match side {
                Side::Left => SymbolicSet::right_ideal(s),
                Side::Right => SymbolicSet::left_ideal(s),
            };
            ideal.intersect_window(n)?
        }
    };
    Ok(image.symmetric_difference_len(&other) as u64)
}

/// |A ∩ F_n| / |F_n| as an exact rational.
pub fn empirical_measure(a: &SymbolicSet, n: usize) -> Result<BigRational> {
    let size = a.family().window_size(n)?;
    if size == 0 {
        return Err(Error::EmptyWindow { n });
    }
    let count = a.count_in_window(n)?;
    Ok(BigRational::new(BigInt::from(count), BigInt::from(size)))
}

/// Sweep the symmetric-difference ratio over strictly increasing window
/// indices.
pub fn folner_sweep(
    side: Side,
    s: &Element,
    a: &SymbolicSet,
    ns: &[usize],
    variant: Variant,
) -> Result<RatioSeries> {
    check_same_family(s, a)?;
    if ns.is_empty() || ns.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::BadRange);
    }
    let family = a.family();
    let mut records = Vec::with_capacity(ns.len());
    for &n in ns {
        let window_size = family.window_size(n)?;
        if window_size == 0 {
            return Err(Error::EmptyWindow { n });
        }
        let symdiff = symdiff_count(side, s, a, n, variant)?;
        records.push(RatioRecord {
            n,
            window_size,
            symdiff,
            ratio: BigRational::new(BigInt::from(symdiff), BigInt::from(window_size)),
        });
    }
    Ok(RatioSeries {
        element: s.clone(),
        side,
        variant,
        set: a.clone(),
        records,
    })
}

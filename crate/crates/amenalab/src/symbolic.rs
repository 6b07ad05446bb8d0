//! Symbolic subsets: membership oracles for possibly infinite sets.
//!
//! Translation sweeps compare `s(A ∩ F_n)` against `sA ∩ F_n` on windows far
//! too large for explicit listings, so subsets are carried as rules rather
//! than element lists. Every kind answers `contains`; some kinds can also
//! name their own translate `sA` as another symbolic set, which keeps a
//! sweep exact without padded re-enumeration.

use std::fmt;

use crate::element::{Element, Payload, PolyElt};
use crate::error::{Error, Result};
use crate::literal::split_top_level;
use crate::semigroup::{ReprView, Semigroup, Side};
use crate::subset::FiniteSubset;

/// A subset of one family, described by rule.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolicSet {
    family: Semigroup,
    kind: SetKind,
}

/// The supported set descriptions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SetKind {
    /// The whole family.
    All,
    /// Exactly one element.
    Singleton(Payload),
    /// An explicit finite set.
    FiniteList(FiniteSubset),
    /// Word-family cylinder: every element whose literal extends the base
    /// literal, the base itself included.
    Prefix(Payload),
    /// The product set `sS`.
    RightIdeal(Payload),
    /// The product set `Ss`.
    LeftIdeal(Payload),
    /// Bicyclic `{q^j p^k : k >= 0}` at fixed `j`.
    Row(i64),
    /// Bicyclic `{q^j p^k : j >= 0}` at fixed `k`.
    Column(i64),
}

impl SymbolicSet {
    pub fn all(family: &Semigroup) -> SymbolicSet {
        SymbolicSet {
            family: family.clone(),
            kind: SetKind::All,
        }
    }

    pub fn singleton(x: &Element) -> SymbolicSet {
        SymbolicSet {
            family: x.family().clone(),
            kind: SetKind::Singleton(x.payload().clone()),
        }
    }

    pub fn finite_list(set: FiniteSubset) -> SymbolicSet {
        SymbolicSet {
            family: set.family().clone(),
            kind: SetKind::FiniteList(set),
        }
    }

    /// Cylinder over `base`: defined for the word families, where literals
    /// are prefix-free readable (one symbol per character).
    pub fn prefix(base: &Element) -> Result<SymbolicSet> {
        let family = base.family().clone();
        match family.view() {
            ReprView::FreeWord { .. } | ReprView::Polycyclic2 => Ok(SymbolicSet {
                kind: SetKind::Prefix(base.payload().clone()),
                family,
            }),
            _ => Err(Error::NoMembershipOracle {
                family: family.name(),
                set: "prefix cylinders".into(),
            }),
        }
    }

    pub fn right_ideal(s: &Element) -> SymbolicSet {
        SymbolicSet {
            family: s.family().clone(),
            kind: SetKind::RightIdeal(s.payload().clone()),
        }
    }

    pub fn left_ideal(s: &Element) -> SymbolicSet {
        SymbolicSet {
            family: s.family().clone(),
            kind: SetKind::LeftIdeal(s.payload().clone()),
        }
    }

    pub fn row(family: &Semigroup, j: i64) -> Result<SymbolicSet> {
        Self::line(family, SetKind::Row(j), j)
    }

    pub fn column(family: &Semigroup, k: i64) -> Result<SymbolicSet> {
        Self::line(family, SetKind::Column(k), k)
    }

    fn line(family: &Semigroup, kind: SetKind, index: i64) -> Result<SymbolicSet> {
        if !matches!(family.view(), ReprView::Bicyclic) {
            return Err(Error::NoMembershipOracle {
                family: family.name(),
                set: "rows and columns".into(),
            });
        }
        if index < 0 {
            return Err(Error::Parse(format!(
                "row and column indices are non-negative, got {index}"
            )));
        }
        Ok(SymbolicSet {
            family: family.clone(),
            kind,
        })
    }

    pub fn family(&self) -> &Semigroup {
        &self.family
    }

    pub fn kind(&self) -> &SetKind {
        &self.kind
    }

    pub fn contains(&self, x: &Element) -> Result<bool> {
        if self.family != *x.family() {
            return Err(Error::FamilyMismatch {
                expected: self.family.name(),
                got: x.family().name(),
            });
        }
        self.contains_payload(x.payload())
    }

    pub(crate) fn contains_payload(&self, p: &Payload) -> Result<bool> {
        match &self.kind {
            SetKind::All => Ok(true),
            SetKind::Singleton(a) => Ok(a == p),
            SetKind::FiniteList(set) => Ok(set.contains_payload(p)),
            SetKind::Prefix(base) => Ok(self.literal_extends(p, base)),
            SetKind::RightIdeal(s) => self.family.right_ideal_contains_payload(s, p),
            SetKind::LeftIdeal(s) => self.family.left_ideal_contains_payload(s, p),
            SetKind::Row(j) => Ok(matches!(p, Payload::Bicyclic { j: pj, .. } if pj == j)),
            SetKind::Column(k) => Ok(matches!(p, Payload::Bicyclic { k: pk, .. } if pk == k)),
        }
    }

    fn literal_extends(&self, x: &Payload, base: &Payload) -> bool {
        match (x, base) {
            (Payload::Word(w), Payload::Word(b)) => w.starts_with(b),
            _ => self
                .family
                .render_payload(x)
                .starts_with(&self.family.render_payload(base)),
        }
    }

    /// `A ∩ F_n` as an explicit set.
    pub fn intersect_window(&self, n: usize) -> Result<FiniteSubset> {
        match &self.kind {
            SetKind::Singleton(p) => {
                if self.family.window_contains_payload(n, p) {
                    FiniteSubset::new(&self.family, [self.family.el(p.clone())])
                } else {
                    Ok(FiniteSubset::empty(&self.family))
                }
            }
            SetKind::FiniteList(set) => FiniteSubset::new(
                &self.family,
                set.iter()
                    .filter(|e| self.family.window_contains_payload(n, e.payload()))
                    .cloned(),
            ),
            _ => {
                let mut out = Vec::new();
                self.scan_window(n, |fam, p| out.push(fam.el(p.clone())))?;
                out.sort();
                Ok(FiniteSubset::from_sorted_unchecked(&self.family, out))
            }
        }
    }

    /// `|A ∩ F_n|` without materialising the set; `All` uses the window-size
    /// formula, so it stays cheap on windows too large to enumerate.
    pub fn count_in_window(&self, n: usize) -> Result<u64> {
        match &self.kind {
            SetKind::All => self.family.window_size(n),
            SetKind::Singleton(p) => {
                Ok(u64::from(self.family.window_contains_payload(n, p)))
            }
            SetKind::FiniteList(set) => Ok(set
                .iter()
                .filter(|e| self.family.window_contains_payload(n, e.payload()))
                .count() as u64),
            _ => {
                let mut count = 0u64;
                self.scan_window(n, |_, _| count += 1)?;
                Ok(count)
            }
        }
    }

    fn scan_window(&self, n: usize, mut hit: impl FnMut(&Semigroup, &Payload)) -> Result<()> {
        let mut err = None;
        self.family.for_each_window_payload(n, &mut |p| {
            if err.is_some() {
                return;
            }
            match self.contains_payload(p) {
                Ok(true) => hit(&self.family, p),
                Ok(false) => {}
                Err(e) => err = Some(e),
            }
        });
        match err {
            Some(e) => Err(e),
            None => Ok(()),
        }
    }

    /// The translate `sA` (left side) or `As` (right side) as another
    /// symbolic set, when the algebra of the kind supports it exactly.
    /// `None` means "not expressible", not "empty".
    pub fn pushforward(&self, side: Side, s: &Element) -> Option<SymbolicSet> {
        debug_assert!(self.family == *s.family());
        let fam = &self.family;
        if fam.identity_payload().as_ref() == Some(s.payload()) {
            return Some(self.clone());
        }
        if fam.zero_payload().as_ref() == Some(s.payload()) {
            // s absorbs every nonempty set to {0}; the finite kinds fall
            // through to exact mapping, which covers the empty list.
            match self.kind {
                SetKind::All
                | SetKind::Prefix(_)
                | SetKind::RightIdeal(_)
                | SetKind::LeftIdeal(_)
                | SetKind::Row(_)
                | SetKind::Column(_) => {
                    return Some(SymbolicSet {
                        family: fam.clone(),
                        kind: SetKind::Singleton(s.payload().clone()),
                    });
                }
                SetKind::Singleton(_) | SetKind::FiniteList(_) => {}
            }
        }
        match (&self.kind, side) {
            (SetKind::All, Side::Left) => Some(Self::right_ideal(s)),
            (SetKind::All, Side::Right) => Some(Self::left_ideal(s)),
            (SetKind::Singleton(a), _) => {
                let moved = fam.translate(side, s, &fam.el(a.clone())).ok()?;
                Some(Self::singleton(&moved))
            }
            (SetKind::FiniteList(set), _) => {
                let mut moved = Vec::with_capacity(set.len());
                for a in set.iter() {
                    moved.push(fam.translate(side, s, a).ok()?);
                }
                Some(Self::finite_list(FiniteSubset::new(fam, moved).ok()?))
            }
            (SetKind::RightIdeal(t), Side::Left) => {
                let st = fam.mul_payload(s.payload(), t).ok()?;
                Some(SymbolicSet {
                    family: fam.clone(),
                    kind: SetKind::RightIdeal(st),
                })
            }
            (SetKind::LeftIdeal(t), Side::Right) => {
                let ts = fam.mul_payload(t, s.payload()).ok()?;
                Some(SymbolicSet {
                    family: fam.clone(),
                    kind: SetKind::LeftIdeal(ts),
                })
            }
            (SetKind::Prefix(w), Side::Left) => self.prefix_pushforward(s, w),
            (SetKind::Row(r), Side::Left) => {
                let Payload::Bicyclic { j: a, k: b } = *s.payload() else {
                    return None;
                };
                // (a,b)·(r,k') = (a+r-b, k') whenever b <= r: a full row.
                if b <= *r {
                    let j = r.checked_sub(b)?.checked_add(a)?;
                    Some(SymbolicSet {
                        family: fam.clone(),
                        kind: SetKind::Row(j),
                    })
                } else {
                    None
                }
            }
            (SetKind::Column(c), Side::Right) => {
                let Payload::Bicyclic { j: a, k: b } = *s.payload() else {
                    return None;
                };
                // (j',c)·(a,b) = (j', c+b-a) whenever a <= c: a full column.
                if a <= *c {
                    let k = c.checked_sub(a)?.checked_add(b)?;
                    Some(SymbolicSet {
                        family: fam.clone(),
                        kind: SetKind::Column(k),
                    })
                } else {
                    None
                }
            }
            _ => None,
        }
    }

    fn prefix_pushforward(&self, s: &Element, base: &Payload) -> Option<SymbolicSet> {
        let fam = &self.family;
        match fam.view() {
            // s·{u : u extends w} = {s·u·v} = everything extending s·w.
            ReprView::FreeWord { .. } => {
                let sw = fam.mul_payload(s.payload(), base).ok()?;
                Some(SymbolicSet {
                    family: fam.clone(),
                    kind: SetKind::Prefix(sw),
                })
            }
            ReprView::Polycyclic2 => {
                // A pure-inverse s only prepends to the literal, so the
                // cylinder moves as a whole; any positive part of s could
                // cancel against members and break the cylinder shape.
                let Payload::Poly(PolyElt::Pair(x, y)) = s.payload() else {
                    return None;
                };
                if !y.is_empty() || x.is_empty() {
                    return None;
                }
                match base {
                    Payload::Poly(PolyElt::One) => {
                        // The cylinder over 1 is just {1}.
                        Some(Self::singleton(s))
                    }
                    _ => {
                        let sw = fam.mul_payload(s.payload(), base).ok()?;
                        Some(SymbolicSet {
                            family: fam.clone(),
                            kind: SetKind::Prefix(sw),
                        })
                    }
                }
            }
            _ => None,
        }
    }

    /// Parse a set spec: `all`, `singleton:<lit>`, `list:<lit>,...`,
    /// `prefix:<lit>`, `ideal:<lit>`, `leftideal:<lit>`, `row:<j>`,
    /// `column:<k>`.
    pub fn parse(family: &Semigroup, text: &str) -> Result<SymbolicSet> {
        let t = text.trim();
        if t == "all" {
            return Ok(Self::all(family));
        }
        let Some((head, rest)) = t.split_once(':') else {
            return Err(Error::Parse(format!("unknown set spec '{t}'")));
        };
        match head {
            "singleton" => Ok(Self::singleton(&family.parse_element(rest)?)),
            "list" => {
                if rest.trim().is_empty() {
                    return Ok(Self::finite_list(FiniteSubset::empty(family)));
                }
                let elems = split_top_level(rest, ',')
                    .into_iter()
                    .map(|part| family.parse_element(part))
                    .collect::<Result<Vec<_>>>()?;
                Ok(Self::finite_list(FiniteSubset::new(family, elems)?))
            }
            "prefix" => Self::prefix(&family.parse_element(rest)?),
            "ideal" => Ok(Self::right_ideal(&family.parse_element(rest)?)),
            "leftideal" => Ok(Self::left_ideal(&family.parse_element(rest)?)),
            "row" => Self::row(family, parse_index(rest)?),
            "column" => Self::column(family, parse_index(rest)?),
            _ => Err(Error::Parse(format!("unknown set spec '{t}'"))),
        }
    }
}

fn parse_index(text: &str) -> Result<i64> {
    text.trim()
        .parse::<i64>()
        .map_err(|_| Error::Parse(format!("expected an integer index, got '{text}'")))
}

impl fmt::Display for SymbolicSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            SetKind::All => write!(f, "all"),
            SetKind::Singleton(p) => write!(f, "singleton:{}", self.family.render_payload(p)),
            SetKind::FiniteList(set) => {
                write!(f, "list:")?;
                for (i, e) in set.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{}", self.family.render_payload(e.payload()))?;
                }
                Ok(())
            }
            SetKind::Prefix(p) => write!(f, "prefix:{}", self.family.render_payload(p)),
            SetKind::RightIdeal(p) => write!(f, "ideal:{}", self.family.render_payload(p)),
            SetKind::LeftIdeal(p) => write!(f, "leftideal:{}", self.family.render_payload(p)),
            SetKind::Row(j) => write!(f, "row:{j}"),
            SetKind::Column(k) => write!(f, "column:{k}"),
        }
    }
}

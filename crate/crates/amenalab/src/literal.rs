//! Plain-text element literals and family names.
//!
//! Every family has one canonical literal per element; `parse_element` and
//! `Display` round-trip. Family names round-trip through `parse_family`
//! except `table:` families, which only exist once a table file is loaded.

use std::fmt;

use crate::catalog;
use crate::element::{Element, Payload, PolyElt};
use crate::error::{Error, Result};
use crate::families::{nat_mul, polycyclic};
use crate::semigroup::{ReprView, Semigroup};

impl Semigroup {
    /// Parse one element literal of this family.
    pub fn parse_element(&self, text: &str) -> Result<Element> {
        let payload = self.parse_payload(text.trim())?;
        self.element(payload)
    }

    pub(crate) fn render_payload(&self, p: &Payload) -> String {
        match (self.view(), p) {
            (ReprView::FreeWord { .. }, Payload::Word(w)) => {
                w.iter().map(|&c| (b'a' + c) as char).collect()
            }
            (ReprView::CommVec, Payload::Vector(v)) => {
                let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
                format!("({})", parts.join(","))
            }
            (ReprView::NatMul, Payload::Factors(fs)) => nat_mul::to_biguint(fs).to_string(),
            (ReprView::Bicyclic, &Payload::Bicyclic { j, k }) => render_bicyclic(j, k),
            (ReprView::Polycyclic2, Payload::Poly(e)) => render_poly(e),
            (ReprView::Munn, &Payload::Munn { p, q, r }) => format!("({p},{q},{r})"),
            (ReprView::MinZ, &Payload::Int(x)) => x.to_string(),
            (ReprView::Finite, &Payload::Index(i)) => i.to_string(),
            (ReprView::AdjoinZero(_), Payload::Zero) => "0".into(),
            (ReprView::AdjoinIdentity(_), Payload::One) => "1".into(),
            (ReprView::AdjoinZero(inner), Payload::Inner(q)) => {
                wrap_reserved(inner.render_payload(q), "0")
            }
            (ReprView::AdjoinIdentity(inner), Payload::Inner(q)) => {
                wrap_reserved(inner.render_payload(q), "1")
            }
            (ReprView::Product(l, r), Payload::Pair(a, b)) => {
                format!("({} ; {})", l.render_payload(a), r.render_payload(b))
            }
            _ => panic!("payload shape does not match family {}", self.name()),
        }
    }

    fn parse_payload(&self, text: &str) -> Result<Payload> {
        let bad = |reason: &str| Error::Parse(format!("{reason} in {:?} for {}", text, self.name()));
        match self.view() {
            ReprView::FreeWord { rank } => {
                let mut w = Vec::with_capacity(text.len());
                for c in text.chars() {
                    let idx = (c as u32).wrapping_sub('a' as u32);
                    if c.is_ascii_lowercase() && (idx as usize) < rank {
                        w.push(idx as u8);
                    } else {
                        return Err(bad("letter outside the alphabet"));
                    }
                }
                Ok(Payload::Word(w))
            }
            ReprView::CommVec => Ok(Payload::Vector(parse_int_tuple(text)?)),
            ReprView::NatMul => {
                let value: u64 = text
                    .parse()
                    .map_err(|_| bad("expected a positive integer"))?;
                let factors = nat_mul::factorize(value)
                    .ok_or_else(|| bad("value is zero or has an unsupported prime factor"))?;
                Ok(Payload::Factors(factors))
            }
            ReprView::Bicyclic => {
                let (j, k) = parse_bicyclic(text).ok_or_else(|| {
                    bad("expected a bicyclic literal like \"1\", \"p\", \"qp\" or \"q^2p^3\"")
                })?;
                Ok(Payload::Bicyclic { j, k })
            }
            ReprView::Polycyclic2 => {
                let e = parse_poly(text)
                    .ok_or_else(|| bad("expected \"0\", \"1\" or a word over p, q, P, Q"))?;
                Ok(Payload::Poly(e))
            }
            ReprView::Munn => {
                let v = parse_int_tuple(text)?;
                if v.len() != 3 {
                    return Err(bad("expected a triple (p,q,r)"));
                }
                Ok(Payload::Munn {
                    p: v[0],
                    q: v[1],
                    r: v[2],
                })
            }
            ReprView::MinZ => Ok(Payload::Int(
                text.parse().map_err(|_| bad("expected an integer"))?,
            )),
            ReprView::Finite => Ok(Payload::Index(
                text.parse().map_err(|_| bad("expected a table index"))?,
            )),
            ReprView::AdjoinZero(inner) => {
                if text == "0" {
                    Ok(Payload::Zero)
                } else {
                    Ok(Payload::Inner(Box::new(
                        inner.parse_payload(unwrap_reserved(text))?,
                    )))
                }
            }
            ReprView::AdjoinIdentity(inner) => {
                if text == "1" {
                    Ok(Payload::One)
                } else {
                    Ok(Payload::Inner(Box::new(
                        inner.parse_payload(unwrap_reserved(text))?,
                    )))
                }
            }
            ReprView::Product(l, r) => {
                let body = text
                    .strip_prefix('(')
                    .and_then(|t| t.strip_suffix(')'))
                    .ok_or_else(|| bad("expected a pair (x ; y)"))?;
                let parts = split_top_level(body, ';');
                if parts.len() != 2 {
                    return Err(bad("expected exactly two components"));
                }
                Ok(Payload::Pair(
                    Box::new(l.parse_payload(parts[0].trim())?),
                    Box::new(r.parse_payload(parts[1].trim())?),
                ))
            }
        }
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.family().render_payload(self.payload()))
    }
}

/// Inner literals equal to the reserved token of their wrapper (or already
/// wrapped) are sheltered as `in(...)`.
fn wrap_reserved(lit: String, reserved: &str) -> String {
    if lit == reserved || lit.starts_with("in(") {
        format!("in({lit})")
    } else {
        lit
    }
}

fn unwrap_reserved(text: &str) -> &str {
    text.strip_prefix("in(")
        .and_then(|t| t.strip_suffix(')'))
        .unwrap_or(text)
}

fn parse_int_tuple(text: &str) -> Result<Vec<i64>> {
    let body = text
        .trim()
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .ok_or_else(|| Error::Parse(format!("expected a tuple, got {text:?}")))?;
    body.split(',')
        .map(|part| {
            part.trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad tuple entry {:?}", part.trim())))
        })
        .collect()
}

/// Split at `sep` occurrences that are outside any parentheses.
pub(crate) fn split_top_level(text: &str, sep: char) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0usize;
    let mut start = 0usize;
    for (i, c) in text.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            c if c == sep && depth == 0 => {
                parts.push(&text[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(&text[start..]);
    parts
}

fn render_bicyclic(j: i64, k: i64) -> String {
    if j == 0 && k == 0 {
        return "1".into();
    }
    let part = |letter: char, e: i64| match e {
        0 => String::new(),
        1 => letter.to_string(),
        _ => format!("{letter}^{e}"),
    };
    format!("{}{}", part('q', j), part('p', k))
}

fn parse_bicyclic(text: &str) -> Option<(i64, i64)> {
    let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if t == "1" {
        return Some((0, 0));
    }
    let mut rest = t.as_str();
    let mut exponent_of = |letter: char| -> Option<i64> {
        if let Some(after) = rest.strip_prefix(letter) {
            let after = after.strip_prefix('^').unwrap_or(after);
            let digits = after.len() - after.trim_start_matches(|c: char| c.is_ascii_digit()).len();
            if digits == 0 {
                rest = after;
                Some(1)
            } else {
                let e = after[..digits].parse().ok()?;
                rest = &after[digits..];
                Some(e)
            }
        } else {
            Some(0)
        }
    };
    let j = exponent_of('q')?;
    let k = exponent_of('p')?;
    if !rest.is_empty() || (j == 0 && k == 0) {
        return None;
    }
    Some((j, k))
}

fn render_poly(e: &PolyElt) -> String {
    match e {
        PolyElt::Zero => "0".into(),
        PolyElt::One => "1".into(),
        PolyElt::Pair(x, y) => {
            let upper = |&c: &u8| if c == polycyclic::LP { 'P' } else { 'Q' };
            let lower = |&c: &u8| if c == polycyclic::LP { 'p' } else { 'q' };
            x.iter()
                .rev()
                .map(upper)
                .chain(y.iter().map(lower))
                .collect()
        }
    }
}

/// Literals are words in the four generators; non-canonical spellings reduce
/// through the multiplication, so "pQ" parses to the zero.
fn parse_poly(text: &str) -> Option<PolyElt> {
    match text {
        "0" => return Some(PolyElt::Zero),
        "1" => return Some(PolyElt::One),
        "" => return None,
        _ => {}
    }
    let mut acc = PolyElt::One;
    for c in text.chars() {
        let gen = match c {
            'p' => PolyElt::Pair(Vec::new(), vec![polycyclic::LP]),
            'q' => PolyElt::Pair(Vec::new(), vec![polycyclic::LQ]),
            'P' => PolyElt::Pair(vec![polycyclic::LP], Vec::new()),
            'Q' => PolyElt::Pair(vec![polycyclic::LQ], Vec::new()),
            _ => return None,
        };
        acc = polycyclic::mul(&acc, &gen);
    }
    Some(acc)
}

/// Resolve a family name: base families, derived wrappers, catalog tables.
pub fn parse_family(name: &str) -> Result<Semigroup> {
    let name = name.trim();
    match name {
        "natmul" => return Ok(Semigroup::nat_mul()),
        "bicyclic" => return Ok(Semigroup::bicyclic()),
        "polycyclic2" => return Ok(Semigroup::polycyclic2()),
        "munn" => return Ok(Semigroup::free_monogenic_inverse()),
        "zmin" => return Ok(Semigroup::min_z()),
        _ => {}
    }
    if let Some(inner) = strip_call(name, "freeword") {
        let rank = parse_rank(inner)?;
        return Semigroup::free_word(rank);
    }
    if let Some(inner) = strip_call(name, "commvec") {
        let rank = parse_rank(inner)?;
        return Semigroup::free_commutative(rank);
    }
    if let Some(inner) = strip_call(name, "zero") {
        return Ok(Semigroup::adjoin_zero(parse_family(inner)?));
    }
    if let Some(inner) = strip_call(name, "one") {
        return Ok(Semigroup::adjoin_identity(parse_family(inner)?));
    }
    if let Some(inner) = strip_call(name, "product") {
        let parts = split_top_level(inner, ',');
        if parts.len() != 2 {
            return Err(Error::Parse(format!(
                "product takes exactly two families, got {name:?}"
            )));
        }
        return Ok(Semigroup::product(
            parse_family(parts[0])?,
            parse_family(parts[1])?,
        ));
    }
    catalog::builtin(name).ok_or_else(|| Error::Parse(format!("unknown family {name:?}")))
}

fn strip_call<'a>(name: &'a str, head: &str) -> Option<&'a str> {
    name.strip_prefix(head)
        .and_then(|t| t.strip_prefix('('))
        .and_then(|t| t.strip_suffix(')'))
}

fn parse_rank(text: &str) -> Result<usize> {
    text.trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad rank {text:?}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn families_for_roundtrip() -> Vec<(Semigroup, usize)> {
        vec![
            (Semigroup::free_word(2).unwrap(), 3),
            (Semigroup::free_commutative(2).unwrap(), 3),
            (Semigroup::nat_mul(), 2),
            (Semigroup::bicyclic(), 3),
            (Semigroup::polycyclic2(), 3),
            (Semigroup::free_monogenic_inverse(), 2),
            (Semigroup::min_z(), 3),
            (crate::catalog::cyclic(3), 1),
            (
                Semigroup::adjoin_zero(Semigroup::free_commutative(1).unwrap()),
                4,
            ),
            (Semigroup::adjoin_identity(Semigroup::min_z()), 2),
            (
                Semigroup::product(Semigroup::bicyclic(), Semigroup::min_z()),
                2,
            ),
            (Semigroup::adjoin_zero(Semigroup::min_z()), 3),
            (Semigroup::adjoin_zero(Semigroup::adjoin_zero(Semigroup::min_z())), 3),
        ]
    }

    #[test]
    fn literals_roundtrip_over_windows() {
        for (s, n) in families_for_roundtrip() {
            for e in s.window(n).unwrap().iter() {
                let lit = e.to_string();
                let back = s.parse_element(&lit).unwrap_or_else(|err| {
                    panic!("{}: literal {lit:?} failed to parse back: {err}", s.name())
                });
                assert_eq!(&back, e, "{}: {lit:?}", s.name());
            }
        }
    }

    #[test]
    fn family_names_roundtrip() {
        for (s, _) in families_for_roundtrip() {
            let name = s.name();
            assert_eq!(parse_family(&name).unwrap(), s, "{name}");
        }
        assert!(parse_family("nonsense").is_err());
    }

    #[test]
    fn bicyclic_literals() {
        let b = Semigroup::bicyclic();
        assert_eq!(b.parse_element("1").unwrap().as_pair(), Some((0, 0)));
        assert_eq!(b.parse_element("p").unwrap().as_pair(), Some((0, 1)));
        assert_eq!(b.parse_element("qp").unwrap().as_pair(), Some((1, 1)));
        assert_eq!(b.parse_element("q^2p^3").unwrap().as_pair(), Some((2, 3)));
        assert_eq!(b.parse_element("q^2 p^3").unwrap().as_pair(), Some((2, 3)));
        assert_eq!(b.element_from_pair(2, 3).unwrap().to_string(), "q^2p^3");
        assert_eq!(b.element_from_pair(0, 1).unwrap().to_string(), "p");
        assert!(b.parse_element("pq").is_err(), "canonical order is q before p");
        assert!(b.parse_element("").is_err());
    }

    #[test]
    fn natmul_literals() {
        let n = Semigroup::nat_mul();
        let twelve = n.parse_element("12").unwrap();
        assert_eq!(twelve.to_string(), "12");
        assert_eq!(
            n.mul(&n.parse_element("4").unwrap(), &n.parse_element("3").unwrap())
                .unwrap(),
            twelve
        );
        assert_eq!(n.parse_element("1").unwrap(), n.identity().unwrap());
        assert!(n.parse_element("0").is_err());
    }

    #[test]
    fn polycyclic_literals_reduce() {
        let s = Semigroup::polycyclic2();
        // Canonical: inverse letters (uppercase) first, then plain letters.
        let e = s.parse_element("QPq").unwrap();
        assert_eq!(e.to_string(), "QPq");
        // Non-canonical spellings evaluate through the relations.
        assert_eq!(s.parse_element("pP").unwrap(), s.identity().unwrap());
        assert_eq!(s.parse_element("pQ").unwrap(), s.zero_element().unwrap());
        assert_eq!(s.parse_element("0").unwrap(), s.zero_element().unwrap());
        assert_eq!(s.parse_element("1").unwrap(), s.identity().unwrap());
    }

    #[test]
    fn derived_literals_shelter_reserved_tokens() {
        let s = Semigroup::adjoin_zero(Semigroup::min_z());
        let zero = s.zero_element().unwrap();
        assert_eq!(zero.to_string(), "0");
        let inner = Semigroup::min_z();
        let lifted_zero = s.lift(&inner.element_from_int(0).unwrap()).unwrap();
        assert_eq!(lifted_zero.to_string(), "in(0)");
        assert_eq!(s.parse_element("in(0)").unwrap(), lifted_zero);
        let lifted_one = s.lift(&inner.element_from_int(1).unwrap()).unwrap();
        assert_eq!(lifted_one.to_string(), "1", "1 is not reserved under zero(S)");
    }

    #[test]
    fn munn_and_vector_literals() {
        let m = Semigroup::free_monogenic_inverse();
        let t = m.parse_element("(1,-1,1)").unwrap();
        assert_eq!(t.as_triple(), Some((1, -1, 1)));
        assert_eq!(t.to_string(), "(1,-1,1)");
        assert!(m.parse_element("(1,-2,1)").is_err(), "invalid triple");

        let c = Semigroup::free_commutative(2).unwrap();
        assert_eq!(c.parse_element("(1, 0)").unwrap().to_string(), "(1,0)");
        assert!(c.parse_element("(0,0)").is_err());
    }

    #[test]
    fn product_literals_nest() {
        let s = Semigroup::product(
            Semigroup::bicyclic(),
            Semigroup::product(Semigroup::min_z(), Semigroup::min_z()),
        );
        let lit = "(qp ; (-1 ; 2))";
        let e = s.parse_element(lit).unwrap();
        assert_eq!(e.to_string(), lit);
    }
}

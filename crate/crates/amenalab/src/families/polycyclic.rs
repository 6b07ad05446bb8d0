//! The polycyclic monoid P2 = < p, q | pp' = qq' = 1, pq' = qp' = 0 >,
//! writing x' for the inverse of x.
//!
//! Nonzero elements are x^{-1} y for words x, y over {p, q}; the pair (x, y)
//! is already a normal form because the rewrite rules only fire on a plain
//! letter followed by an inverse letter, and all inverse letters of x^{-1} y
//! come first.

use crate::element::PolyElt;

pub const LP: u8 = 0; // letter p
pub const LQ: u8 = 1; // letter q

/// Suffix cancellation: in y * u^{-1} the words cancel from their common end,
/// and a mismatch before either is exhausted kills the product.
pub fn mul(a: &PolyElt, b: &PolyElt) -> PolyElt {
    match (a, b) {
        (PolyElt::Zero, _) | (_, PolyElt::Zero) => PolyElt::Zero,
        (PolyElt::One, e) | (e, PolyElt::One) => e.clone(),
        (PolyElt::Pair(x, y), PolyElt::Pair(u, v)) => {
            let c = y
                .iter()
                .rev()
                .zip(u.iter().rev())
                .take_while(|(a, b)| a == b)
                .count();
            if c < y.len().min(u.len()) {
                return PolyElt::Zero;
            }
            if c == u.len() {
                // y = w ++ u, result x^{-1} (w ++ v).
                let mut w = y[..y.len() - c].to_vec();
                w.extend_from_slice(v);
                pair(x.clone(), w)
            } else {
                // u = w ++ y, result (w ++ x)^{-1} v.
                let mut wx = u[..u.len() - c].to_vec();
                wx.extend_from_slice(x);
                pair(wx, v.clone())
            }
        }
    }
}

fn pair(x: Vec<u8>, y: Vec<u8>) -> PolyElt {
    if x.is_empty() && y.is_empty() {
        PolyElt::One
    } else {
        PolyElt::Pair(x, y)
    }
}

/// (x^{-1} y)* = y^{-1} x; zero and one are self-adjoint.
pub fn involution(a: &PolyElt) -> PolyElt {
    match a {
        PolyElt::Zero => PolyElt::Zero,
        PolyElt::One => PolyElt::One,
        PolyElt::Pair(x, y) => PolyElt::Pair(y.clone(), x.clone()),
    }
}

/// Ball at n: zero, one, and every pair with |x| + |y| <= n.
pub fn for_each_window(n: usize, f: &mut dyn FnMut(&PolyElt)) {
    if n == 0 {
        return;
    }
    f(&PolyElt::Zero);
    f(&PolyElt::One);
    let words = words_by_length(n);
    for total in 1..=n {
        for xlen in 0..=total {
            for xw in &words[xlen] {
                for yw in &words[total - xlen] {
                    f(&PolyElt::Pair(xw.clone(), yw.clone()));
                }
            }
        }
    }
}

/// words[len] lists all words over {p, q} of that length, lexicographically.
fn words_by_length(n: usize) -> Vec<Vec<Vec<u8>>> {
    let mut out: Vec<Vec<Vec<u8>>> = vec![vec![vec![]]];
    for len in 1..=n {
        let mut layer = Vec::with_capacity(1 << len);
        for w in &out[len - 1] {
            for c in [LP, LQ] {
                let mut w2 = w.clone();
                w2.push(c);
                layer.push(w2);
            }
        }
        out.push(layer);
    }
    out
}

/// 2 + sum over 1 <= s <= n of (s+1) 2^s.
pub fn window_size(n: usize) -> Option<u64> {
    if n == 0 {
        return Some(0);
    }
    let mut total = 2u64;
    for s in 1..=n as u64 {
        let layer = (s + 1).checked_mul(1u64.checked_shl(s as u32)?)?;
        total = total.checked_add(layer)?;
    }
    Some(total)
}

pub fn window_contains(n: usize, a: &PolyElt) -> bool {
    if n == 0 {
        return false;
    }
    match a {
        PolyElt::Zero | PolyElt::One => true,
        PolyElt::Pair(x, y) => x.len() + y.len() <= n,
    }
}

pub fn grading(a: &PolyElt) -> usize {
    match a {
        PolyElt::Zero | PolyElt::One => 1,
        PolyElt::Pair(x, y) => x.len() + y.len(),
    }
}

/// s P2 = {0} plus every (x~)^{-1} v whose inverse part ends with the inverse
/// part of s; the plain part of s always cancels away against a cofactor.
pub fn right_ideal_contains(s: &PolyElt, e: &PolyElt) -> bool {
    match s {
        PolyElt::Zero => *e == PolyElt::Zero,
        PolyElt::One => true,
        PolyElt::Pair(sx, _) => match e {
            PolyElt::Zero => true,
            PolyElt::One => sx.is_empty(),
            PolyElt::Pair(x, _) => x.len() >= sx.len() && x.ends_with(sx),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Free rewriting oracle: multiply as strings over {p, q, p', q'} and
    /// apply pp' -> 1, qq' -> 1, pq' -> 0, qp' -> 0 to normal form.
    /// Letters: (c, false) plain, (c, true) inverse.
    fn oracle(a: &PolyElt, b: &PolyElt) -> PolyElt {
        fn letters(e: &PolyElt) -> Option<Vec<(u8, bool)>> {
            match e {
                PolyElt::Zero => None,
                PolyElt::One => Some(vec![]),
                PolyElt::Pair(x, y) => Some(
                    x.iter()
                        .rev()
                        .map(|&c| (c, true))
                        .chain(y.iter().map(|&c| (c, false)))
                        .collect(),
                ),
            }
        }
        let (Some(mut w), Some(tail)) = (letters(a), letters(b)) else {
            return PolyElt::Zero;
        };
        w.extend(tail);
        loop {
            let mut changed = false;
            for i in 0..w.len().saturating_sub(1) {
                let (l, r) = (w[i], w[i + 1]);
                if !l.1 && r.1 {
                    if l.0 == r.0 {
                        w.drain(i..i + 2);
                        changed = true;
                        break;
                    }
                    return PolyElt::Zero;
                }
            }
            if !changed {
                break;
            }
        }
        let split = w.iter().take_while(|l| l.1).count();
        assert!(w[split..].iter().all(|l| !l.1), "not a normal form");
        let x: Vec<u8> = w[..split].iter().rev().map(|l| l.0).collect();
        let y: Vec<u8> = w[split..].iter().map(|l| l.0).collect();
        if x.is_empty() && y.is_empty() {
            PolyElt::One
        } else {
            PolyElt::Pair(x, y)
        }
    }

    fn ball(n: usize) -> Vec<PolyElt> {
        let mut out = Vec::new();
        for_each_window(n, &mut |e| out.push(e.clone()));
        out
    }

    #[test]
    fn mul_matches_rewriting_oracle_on_small_ball() {
        let elems = ball(4);
        for a in &elems {
            for b in &elems {
                assert_eq!(mul(a, b), oracle(a, b), "a = {a:?}, b = {b:?}");
            }
        }
    }

    #[test]
    fn defining_relations_hold() {
        let p = PolyElt::Pair(vec![], vec![LP]);
        let q = PolyElt::Pair(vec![], vec![LQ]);
        let pi = PolyElt::Pair(vec![LP], vec![]);
        let qi = PolyElt::Pair(vec![LQ], vec![]);
        assert_eq!(mul(&p, &pi), PolyElt::One);
        assert_eq!(mul(&q, &qi), PolyElt::One);
        assert_eq!(mul(&p, &qi), PolyElt::Zero);
        assert_eq!(mul(&q, &pi), PolyElt::Zero);
        // p'p and q'q are idempotents, not the identity.
        assert_eq!(mul(&pi, &p), PolyElt::Pair(vec![LP], vec![LP]));
    }

    #[test]
    fn involution_reverses_products() {
        let elems = ball(3);
        for a in &elems {
            for b in &elems {
                assert_eq!(involution(&mul(a, b)), mul(&involution(b), &involution(a)));
            }
        }
    }

    #[test]
    fn window_size_matches_enumeration() {
        for n in 0..=6 {
            assert_eq!(Some(ball(n).len() as u64), window_size(n), "n = {n}");
        }
    }

    #[test]
    fn right_ideal_matches_enumeration() {
        let pi = PolyElt::Pair(vec![LP], vec![]);
        let s2 = PolyElt::Pair(vec![LQ, LP], vec![LQ]);
        for s in [pi, s2] {
            let n = 4usize;
            let pad = grading(&s);
            let image: std::collections::BTreeSet<PolyElt> =
                ball(n + pad).iter().map(|t| mul(&s, t)).collect();
            for e in ball(n) {
                assert_eq!(
                    right_ideal_contains(&s, &e),
                    image.contains(&e),
                    "s = {s:?}, e = {e:?}"
                );
            }
        }
    }
}

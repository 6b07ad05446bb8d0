//! The free inverse semigroup on one generator, in triple coordinates.
//!
//! Every element is written (p, q, r) with p >= 0, r >= 0 and
//! q >= -min(p, r).  The correspondence with reduced words in the
//! generator x: the element is x^(p+q) x^-(p+q+r) x^(q+r), and the walk
//! of the word on the integers reaches maximum p+q, minimum -r and ends
//! at q.  The triple (0, 0, 0) is the identity.

use crate::error::{Error, Result};

fn add(a: i64, b: i64) -> Result<i64> {
    a.checked_add(b).ok_or(Error::Overflow { op: "munn add" })
}

fn sub(a: i64, b: i64) -> Result<i64> {
    a.checked_sub(b).ok_or(Error::Overflow { op: "munn sub" })
}

pub fn is_valid(p: i64, q: i64, r: i64) -> bool {
    p >= 0 && r >= 0 && q >= -p.min(r)
}

/// Product of (p, q, r) and (p2, q2, r2).
pub fn mul(p: i64, q: i64, r: i64, p2: i64, q2: i64, r2: i64) -> Result<(i64, i64, i64)> {
    let np = p.max(sub(p2, q)?);
    let nq = add(q, q2)?;
    let nr = r2.max(sub(r, q2)?);
    Ok((np, nq, nr))
}

/// The inverse element; s s* s = s and s* s s* = s*.
pub fn involution(p: i64, q: i64, r: i64) -> Result<(i64, i64, i64)> {
    Ok((add(p, q)?, -q, add(q, r)?))
}

/// Window at n: all triples with p, r in [0, n] and q in [-min(p, r), n].
pub fn for_each_window(n: usize, f: &mut dyn FnMut(i64, i64, i64)) {
    let n = n as i64;
    for p in 0..=n {
        for r in 0..=n {
            for q in -p.min(r)..=n {
                f(p, q, r);
            }
        }
    }
}

pub fn window_size(n: usize) -> Option<u64> {
    // Per (p, r) cell the q range has n + 1 + min(p, r) values.
    let n = n as u64;
    let mut total = 0u64;
    for p in 0..=n {
        for r in 0..=n {
            total = total.checked_add(n.checked_add(1)?.checked_add(p.min(r))?)?;
        }
    }
    Some(total)
}

pub fn window_contains(n: usize, p: i64, q: i64, r: i64) -> bool {
    let n = n as i64;
    is_valid(p, q, r) && p <= n && r <= n && q <= n
}

pub fn grading(p: i64, q: i64, r: i64) -> usize {
    p.max(q).max(r).max(0) as usize
}

/// Does (ep, eq, er) lie in the right ideal sS generated by s = (p, q, r)?
///
/// Solving s t = e coordinatewise: t's middle entry is forced to eq - q,
/// the first entry is pinned when ep > p and otherwise ranges over
/// [0, p + q], and the last entry can always be taken to be er.
pub fn right_ideal_contains(
    p: i64,
    q: i64,
    r: i64,
    ep: i64,
    eq: i64,
    er: i64,
) -> Result<bool> {
    if ep < p {
        return Ok(false);
    }
    let y = sub(eq, q)?;
    // t = (x, y, z) must satisfy x + y >= 0 and z + y >= 0; z <= er is
    // forced, and z = er works exactly when r - y <= er.
    if sub(r, y)? > er || add(er, y)? < 0 {
        return Ok(false);
    }
    if ep > p && add(ep, q)? < 0 {
        return Ok(false);
    }
    Ok(true)
}

//! The bicyclic monoid B = < p, q | pq = 1 >, elements written q^j p^k.

use crate::error::{Error, Result};

/// (j, k) * (j2, k2): the inner p^k q^j2 block collapses by pq = 1.
pub fn mul(j: i64, k: i64, j2: i64, k2: i64) -> Result<(i64, i64)> {
    let t = k.min(j2);
    let j3 = j
        .checked_add(j2 - t)
        .ok_or(Error::Overflow { op: "bicyclic mul" })?;
    let k3 = k2
        .checked_add(k - t)
        .ok_or(Error::Overflow { op: "bicyclic mul" })?;
    Ok((j3, k3))
}

/// (q^j p^k)* = q^k p^j.
pub fn involution(j: i64, k: i64) -> (i64, i64) {
    (k, j)
}

/// Window at n: both exponents in [0, n-1], so the window has n^2 elements.
pub fn for_each_window(n: usize, f: &mut dyn FnMut(i64, i64)) {
    let n = n as i64;
    for j in 0..n {
        for k in 0..n {
            f(j, k);
        }
    }
}

pub fn window_size(n: usize) -> Option<u64> {
    (n as u64).checked_mul(n as u64)
}

pub fn window_contains(n: usize, j: i64, k: i64) -> bool {
    let n = n as i64;
    (0..n).contains(&j) && (0..n).contains(&k)
}

/// Least n with the element inside the window.
pub fn grading(j: i64, k: i64) -> usize {
    (j.max(k) + 1) as usize
}

/// x in (q^j p^k)B iff the q-exponent of x is at least j.
///
/// Follows from the product formula: the k-block either cancels into the
/// right factor or pads its p-exponent, but the j-block always survives, and
/// p is right-invertible so everything above q^j is reached.
pub fn right_ideal_contains(j: i64, _k: i64, xj: i64, _xk: i64) -> bool {
    xj >= j
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn presentation_relation_pq_is_identity() {
        // p = (0,1), q = (1,0).
        assert_eq!(mul(0, 1, 1, 0).unwrap(), (0, 0));
        // qp stays reduced.
        assert_eq!(mul(1, 0, 0, 1).unwrap(), (1, 1));
    }

    #[test]
    fn mul_matches_word_rewriting_oracle() {
        // Oracle: multiply as words over {p, q} and rewrite pq -> 1 to
        // normal form q^j p^k; independent of the closed formula.
        fn oracle(j: i64, k: i64, j2: i64, k2: i64) -> (i64, i64) {
            let mut word: Vec<u8> = Vec::new();
            word.extend(std::iter::repeat(b'q').take(j as usize));
            word.extend(std::iter::repeat(b'p').take(k as usize));
            word.extend(std::iter::repeat(b'q').take(j2 as usize));
            word.extend(std::iter::repeat(b'p').take(k2 as usize));
            loop {
                let mut changed = false;
                for i in 0..word.len().saturating_sub(1) {
                    if word[i] == b'p' && word[i + 1] == b'q' {
                        word.drain(i..i + 2);
                        changed = true;
                        break;
                    }
                }
                if !changed {
                    break;
                }
            }
            let qs = word.iter().take_while(|&&c| c == b'q').count();
            assert!(word[qs..].iter().all(|&c| c == b'p'), "not a normal form");
            (qs as i64, (word.len() - qs) as i64)
        }
        for j in 0..5 {
            for k in 0..5 {
                for j2 in 0..5 {
                    for k2 in 0..5 {
                        assert_eq!(mul(j, k, j2, k2).unwrap(), oracle(j, k, j2, k2));
                    }
                }
            }
        }
    }

    #[test]
    fn right_ideal_matches_enumeration() {
        // Cross-check the closed-form oracle against s * (padded window).
        for (j, k) in [(0, 0), (0, 1), (1, 0), (2, 1), (1, 3)] {
            let n = 6usize;
            let pad = k as usize;
            let mut image = std::collections::BTreeSet::new();
            for_each_window(n + pad, &mut |mj, mk| {
                image.insert(mul(j, k, mj, mk).unwrap());
            });
            for_each_window(n, &mut |xj, xk| {
                let enumerated = image.contains(&(xj, xk));
                assert_eq!(
                    right_ideal_contains(j, k, xj, xk),
                    enumerated,
                    "s = ({j},{k}), x = ({xj},{xk})"
                );
            });
        }
    }
}

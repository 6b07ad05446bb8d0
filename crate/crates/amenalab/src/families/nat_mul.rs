//! Positive integers under multiplication, stored as factorizations.
//!
//! The canonical form is the sorted list of (prime index, exponent) pairs
//! with positive exponents; the empty list is 1. Windows are prime boxes:
//! at n, all products of the first n primes with every exponent in [0, n].

use crate::error::{Error, Result};
use num::BigUint;

/// First `count` primes, extended on demand by trial division.
pub fn primes(count: usize) -> Vec<u64> {
    let mut ps: Vec<u64> = Vec::with_capacity(count);
    let mut c = 2u64;
    while ps.len() < count {
        if ps.iter().take_while(|&&p| p * p <= c).all(|&p| c % p != 0) {
            ps.push(c);
        }
        c += 1;
    }
    ps
}


/// Largest prime index a parsed value may use; keeps factorization cheap.
pub const MAX_PRIME_INDEX: u32 = 10_000;

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Factor a positive integer. `None` for zero, or when a prime factor falls
/// outside the first `MAX_PRIME_INDEX` primes.
pub fn factorize(mut value: u64) -> Option<Vec<(u32, i64)>> {
    if value == 0 {
        return None;
    }
    let mut out = Vec::new();
    let mut idx = 0u32;
    let mut p = 2u64;
    while value > 1 {
        if idx >= MAX_PRIME_INDEX {
            return None;
        }
        if p * p > value {
            // The remainder is prime: walk the prime sequence up to it.
            while p < value {
                p += 1;
                while !is_prime(p) {
                    p += 1;
                }
                idx += 1;
                if idx >= MAX_PRIME_INDEX {
                    return None;
                }
            }
            out.push((idx, 1));
            return Some(out);
        }
        let mut e = 0i64;
        while value % p == 0 {
            value /= p;
            e += 1;
        }
        if e > 0 {
            out.push((idx, e));
        }
        p += 1;
        while !is_prime(p) {
            p += 1;
        }
        idx += 1;
    }
    Some(out)
}

/// Render the factorization as the integer it canonically names.
pub fn to_biguint(factors: &[(u32, i64)]) -> BigUint {
    let max_idx = factors.iter().map(|&(i, _)| i as usize + 1).max().unwrap_or(0);
    let ps = primes(max_idx);
    let mut out = BigUint::from(1u32);
    for &(i, e) in factors {
        out *= BigUint::from(ps[i as usize]).pow(e as u32);
    }
    out
}

pub fn mul(a: &[(u32, i64)], b: &[(u32, i64)]) -> Result<Vec<(u32, i64)>> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                let e = a[i]
                    .1
                    .checked_add(b[j].1)
                    .ok_or(Error::Overflow { op: "exponent add" })?;
                out.push((a[i].0, e));
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    Ok(out)
}

pub fn for_each_window(n: usize, f: &mut dyn FnMut(&[(u32, i64)])) {
    // Dense odometer over exponent vectors of length n with entries in [0, n];
    // the sparse canonical form is materialized per element.
    let mut exps = vec![0i64; n];
    let mut sparse: Vec<(u32, i64)> = Vec::with_capacity(n);
    loop {
        sparse.clear();
        sparse.extend(
            exps.iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| (i as u32, e)),
        );
        f(&sparse);
        let mut i = 0;
        loop {
            if i == n {
                return;
            }
            exps[i] += 1;
            if exps[i] <= n as i64 {
                break;
            }
            exps[i] = 0;
            i += 1;
        }
    }
}

/// |window(n)| = (n+1)^n: one choice of exponent in [0, n] per prime.
pub fn window_size(n: usize) -> Option<u64> {
    (n as u64 + 1).checked_pow(u32::try_from(n).ok()?)
}

pub fn window_contains(n: usize, factors: &[(u32, i64)]) -> bool {
    factors
        .iter()
        .all(|&(i, e)| (i as usize) < n && e <= n as i64)
}

pub fn grading(factors: &[(u32, i64)]) -> usize {
    factors
        .iter()
        .map(|&(i, e)| (i as usize + 1).max(e as usize))
        .max()
        .unwrap_or(1)
}

/// x in sN iff s divides x.
pub fn right_ideal_contains(s: &[(u32, i64)], x: &[(u32, i64)]) -> bool {
    s.iter().all(|&(i, e)| {
        x.iter()
            .find(|&&(xi, _)| xi == i)
            .map(|&(_, xe)| xe >= e)
            .unwrap_or(false)
    })
}

/// Exact symmetric-difference counts for a prime generator against the whole
/// window, one pass for all n generators at once.
///
/// For s = p_j the map x -> s*x shifts the j-th exponent up by one, so within
/// the box the only losses and gains sit on the two j-faces:
///   |s(F) at F|        : vectors with exponent n at j escape, those with 0 are missed;
///   |s(F) vs sS in F|  : only the escape face differs, divisibility covers the rest.
/// Streaming over the box cross-checks the per-face counting without ever
/// materializing the window.
pub fn prime_generator_symdiffs(n: usize, theorem_literal: bool) -> Vec<u64> {
    let mut at_cap = vec![0u64; n]; // exponent exactly n at coordinate j
    let mut at_zero = vec![0u64; n]; // exponent exactly 0 at coordinate j
    let mut exps = vec![0i64; n];
    loop {
        for j in 0..n {
            if exps[j] == n as i64 {
                at_cap[j] += 1;
            } else if exps[j] == 0 {
                at_zero[j] += 1;
            }
        }
        let mut i = 0;
        loop {
            if i == n {
                return (0..n)
                    .map(|j| {
                        if theorem_literal {
                            // s(F_n) and sS∩F_n differ exactly on the escape face.
                            at_cap[j]
                        } else {
                            at_cap[j] + at_zero[j]
                        }
                    })
                    .collect();
            }
            exps[i] += 1;
            if exps[i] <= n as i64 {
                break;
            }
            exps[i] = 0;
            i += 1;
        }
    }
}

//! Free commutative semigroup of a fixed rank: integer vectors >= 0 under
//! addition, with the origin excluded.

use crate::error::{Error, Result};

pub fn mul(a: &[i64], b: &[i64]) -> Result<Vec<i64>> {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.checked_add(*y).ok_or(Error::Overflow { op: "vector add" }))
        .collect()
}

/// Window at n: the box with every coordinate in [0, n), minus the origin.
/// Empty when n <= 1.
pub fn for_each_window(rank: usize, n: usize, f: &mut dyn FnMut(&[i64])) {
    if n <= 1 {
        return;
    }
    let mut v = vec![0i64; rank];
    loop {
        // Odometer over the box, skipping the origin.
        let mut i = 0;
        loop {
            if i == rank {
                return;
            }
            v[i] += 1;
            if v[i] < n as i64 {
                break;
            }
            v[i] = 0;
            i += 1;
        }
        f(&v);
    }
}

pub fn window_size(rank: usize, n: usize) -> Option<u64> {
    if n == 0 {
        return Some(0);
    }
    let cube = (n as u64).checked_pow(u32::try_from(rank).ok()?)?;
    Some(cube - 1)
}

pub fn window_contains(n: usize, v: &[i64]) -> bool {
    v.iter().all(|&c| (0..n as i64).contains(&c)) && v.iter().any(|&c| c > 0)
}

pub fn grading(v: &[i64]) -> usize {
    (v.iter().copied().max().unwrap_or(0) + 2) as usize
}

/// x in v + S iff x - v is a valid element: componentwise >= and x != v.
pub fn right_ideal_contains(v: &[i64], x: &[i64]) -> bool {
    x.iter().zip(v).all(|(a, b)| a >= b) && x != v
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn window_matches_spec_example() {
        let mut got = Vec::new();
        for_each_window(2, 2, &mut |v| got.push(v.to_vec()));
        got.sort();
        assert_eq!(got, vec![vec![0, 1], vec![1, 0], vec![1, 1]]);
        assert_eq!(window_size(2, 2), Some(3));
    }

    #[test]
    fn window_at_one_is_empty() {
        let mut count = 0;
        for_each_window(3, 1, &mut |_| count += 1);
        assert_eq!(count, 0);
        assert_eq!(window_size(3, 1), Some(0));
    }

    #[test]
    fn ideal_oracle_matches_enumeration() {
        let s = vec![1i64, 2];
        let n = 5usize;
        let mut image = std::collections::BTreeSet::new();
        // Pad by the largest coordinate of s; translation only grows coordinates.
        for_each_window(2, n + 2, &mut |t| {
            image.insert(mul(&s, t).unwrap());
        });
        for_each_window(2, n, &mut |x| {
            assert_eq!(right_ideal_contains(&s, x), image.contains(x), "x = {x:?}");
        });
    }
}

//! The integers under minimum, a commutative idempotent semigroup.

pub fn mul(a: i64, b: i64) -> i64 {
    a.min(b)
}

/// Window at n: the interval [-n, n].
pub fn for_each_window(n: usize, f: &mut dyn FnMut(i64)) {
    let n = n as i64;
    for x in -n..=n {
        f(x);
    }
}

pub fn window_size(n: usize) -> Option<u64> {
    (n as u64).checked_mul(2)?.checked_add(1)
}

pub fn window_contains(n: usize, x: i64) -> bool {
    x.unsigned_abs() <= n as u64
}

pub fn grading(x: i64) -> usize {
    x.unsigned_abs() as usize
}

/// sS is the down-set of s: min(s, x) ranges over everything <= s.
pub fn right_ideal_contains(s: i64, x: i64) -> bool {
    x <= s
}

//! Free semigroup on `rank` letters; elements are non-empty words.

/// Windows are balls: all words of length 1..=n.
pub fn for_each_window(rank: usize, n: usize, f: &mut dyn FnMut(&[u8])) {
    let mut word: Vec<u8> = Vec::with_capacity(n);
    // Depth-first, so words arrive in prefix order: each word right before
    // its extensions.
    fn rec(rank: usize, n: usize, word: &mut Vec<u8>, f: &mut dyn FnMut(&[u8])) {
        if word.len() == n {
            return;
        }
        for c in 0..rank as u8 {
            word.push(c);
            f(word);
            rec(rank, n, word, f);
            word.pop();
        }
    }
    rec(rank, n, &mut word, f);
}

/// |ball(n)| = rank + rank^2 + ... + rank^n.
pub fn window_size(rank: usize, n: usize) -> Option<u64> {
    let mut total = 0u64;
    let mut layer = 1u64;
    for _ in 0..n {
        layer = layer.checked_mul(rank as u64)?;
        total = total.checked_add(layer)?;
    }
    Some(total)
}

pub fn window_contains(n: usize, w: &[u8]) -> bool {
    !w.is_empty() && w.len() <= n
}

/// x in wS iff w is a proper prefix of x (the factor must be non-empty).
pub fn right_ideal_contains(w: &[u8], x: &[u8]) -> bool {
    x.len() > w.len() && &x[..w.len()] == w
}

/// x in Sw iff w is a proper suffix of x.
pub fn left_ideal_contains(w: &[u8], x: &[u8]) -> bool {
    x.len() > w.len() && &x[x.len() - w.len()..] == w
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn window_enumeration_matches_closed_form() {
        for rank in 1..=3usize {
            for n in 1..=6usize {
                let mut count = 0u64;
                let mut seen = std::collections::BTreeSet::new();
                for_each_window(rank, n, &mut |w| {
                    count += 1;
                    assert!(window_contains(n, w));
                    assert!(seen.insert(w.to_vec()), "duplicate window element");
                });
                assert_eq!(Some(count), window_size(rank, n));
            }
        }
    }
}

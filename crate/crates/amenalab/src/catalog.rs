//! Ready-made finite families: standard small tables plus a sampler for
//! random associative tables on three elements.

use rand::Rng;

use crate::families::finite::CayleyTable;
use crate::semigroup::Semigroup;

fn table(name: &str, order: usize, entry: impl Fn(usize, usize) -> usize) -> Semigroup {
    let mut entries = Vec::with_capacity(order * order);
    for a in 0..order {
        for b in 0..order {
            entries.push(entry(a, b));
        }
    }
    let table = CayleyTable::new(order, entries)
        .unwrap_or_else(|e| panic!("catalog table {name} failed validation: {e}"));
    Semigroup::from_cayley_table(name, table)
}

fn with_star(s: Semigroup, star: Vec<usize>) -> Semigroup {
    let name = s.name();
    s.with_involution(star)
        .unwrap_or_else(|e| panic!("catalog star for {name} failed validation: {e}"))
}

/// The one-element semigroup.
pub fn trivial() -> Semigroup {
    with_star(table("trivial", 1, |_, _| 0), vec![0])
}

/// Cyclic group of order k, written additively; the star is negation.
pub fn cyclic(k: usize) -> Semigroup {
    assert!(k >= 1, "cyclic order must be positive");
    let s = table(&format!("cyclic({k})"), k, |a, b| (a + b) % k);
    with_star(s, (0..k).map(|i| (k - i) % k).collect())
}

/// Left zero semigroup: a * b = a. No involution exists for k >= 2, since
/// (ab)* = a* but b*a* = b*.
pub fn left_zero(k: usize) -> Semigroup {
    assert!(k >= 1);
    table(&format!("leftzero({k})"), k, |a, _| a)
}

/// Right zero semigroup: a * b = b.
pub fn right_zero(k: usize) -> Semigroup {
    assert!(k >= 1);
    table(&format!("rightzero({k})"), k, |_, b| b)
}

/// The Klein four-group as xor on two bits; every element is self-inverse.
pub fn klein4() -> Semigroup {
    with_star(table("klein4", 4, |a, b| a ^ b), vec![0, 1, 2, 3])
}

/// The symmetric group on three points; the star is permutation inverse.
pub fn sym3() -> Semigroup {
    let perms: [[usize; 3]; 6] = [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    let index = |p: [usize; 3]| perms.iter().position(|&q| q == p).unwrap();
    let compose = |a: [usize; 3], b: [usize; 3]| [a[b[0]], a[b[1]], a[b[2]]];
    let s = table("sym3", 6, |a, b| index(compose(perms[a], perms[b])));
    let star = perms
        .iter()
        .map(|p| {
            let mut inv = [0; 3];
            for (x, &px) in p.iter().enumerate() {
                inv[px] = x;
            }
            index(inv)
        })
        .collect();
    with_star(s, star)
}

/// The chain 0 < 1 < ... < k-1 under minimum; commutative, so the identity
/// map is an involution.
pub fn chain(k: usize) -> Semigroup {
    assert!(k >= 1);
    let s = table(&format!("chain({k})"), k, |a, b| a.min(b));
    with_star(s, (0..k).collect())
}

/// Resolve a catalog name like "leftzero(2)" or "sym3".
pub fn builtin(name: &str) -> Option<Semigroup> {
    match name {
        "trivial" => return Some(trivial()),
        "klein4" => return Some(klein4()),
        "sym3" => return Some(sym3()),
        _ => {}
    }
    let (head, rest) = name.split_once('(')?;
    let arg = rest.strip_suffix(')')?;
    let k: usize = arg.trim().parse().ok()?;
    if k == 0 {
        return None;
    }
    match head {
        "cyclic" => Some(cyclic(k)),
        "leftzero" => Some(left_zero(k)),
        "rightzero" => Some(right_zero(k)),
        "chain" => Some(chain(k)),
        _ => None,
    }
}

/// The fixed list of finite families used by summary reports.
pub fn standard_catalog() -> Vec<Semigroup> {
    vec![
        trivial(),
        cyclic(2),
        cyclic(3),
        cyclic(4),
        left_zero(2),
        left_zero(3),
        right_zero(2),
        right_zero(3),
        klein4(),
        sym3(),
        chain(2),
        chain(3),
        Semigroup::adjoin_zero(cyclic(3)),
        Semigroup::product(left_zero(2), right_zero(3)),
    ]
}

/// Sample `count` associative 3x3 tables by rejection from the 3^9 space of
/// all binary operations. Roughly one draw in six is associative, so this
/// terminates quickly.
pub fn random_associative_tables(rng: &mut impl Rng, count: usize) -> Vec<CayleyTable> {
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let entries: Vec<usize> = (0..9).map(|_| rng.gen_range(0..3)).collect();
        if let Ok(t) = CayleyTable::new(3, entries) {
            out.push(t);
        }
    }
    out
}

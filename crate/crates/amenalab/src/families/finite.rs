//! Finite semigroups given by an explicit multiplication table.

use crate::error::{Error, Result};

/// Row-major table over elements 0..order; entry(i, j) is the product i j.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct CayleyTable {
    order: usize,
    entries: Vec<usize>,
}

impl CayleyTable {
    /// Validates entry ranges and associativity; the first failing triple
    /// in lexicographic order is reported.
    pub fn new(order: usize, entries: Vec<usize>) -> Result<CayleyTable> {
        if order == 0 || entries.len() != order * order {
            return Err(Error::Parse(format!(
                "table needs {} entries for order {}, got {}",
                order * order,
                order,
                entries.len()
            )));
        }
        for (pos, &value) in entries.iter().enumerate() {
            if value >= order {
                return Err(Error::EntryOutOfRange {
                    row: pos / order,
                    col: pos % order,
                    value,
                    order,
                });
            }
        }
        let table = CayleyTable { order, entries };
        table.check_associative()?;
        Ok(table)
    }

    fn check_associative(&self) -> Result<()> {
        for a in 0..self.order {
            for b in 0..self.order {
                let ab = self.entry(a, b);
                for c in 0..self.order {
                    let left = self.entry(ab, c);
                    let right = self.entry(a, self.entry(b, c));
                    if left != right {
                        return Err(Error::NotAssociative {
                            a,
                            b,
                            c,
                            left,
                            right,
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// Text format: first line the order, then one row per line of
    /// space-separated 0-based indices.  Blank lines and # comments are
    /// skipped.
    pub fn parse(text: &str) -> Result<CayleyTable> {
        let mut numbers = Vec::new();
        for line in text.lines() {
            let line = line.split('#').next().unwrap_or("");
            for tok in line.split_whitespace() {
                let v: usize = tok
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad table entry {tok:?}")))?;
                numbers.push(v);
            }
        }
        let Some((&order, rest)) = numbers.split_first() else {
            return Err(Error::Parse("empty table".into()));
        };
        CayleyTable::new(order, rest.to_vec())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn entry(&self, a: usize, b: usize) -> usize {
        self.entries[a * self.order + b]
    }

    pub fn identity(&self) -> Option<usize> {
        (0..self.order)
            .find(|&e| (0..self.order).all(|x| self.entry(e, x) == x && self.entry(x, e) == x))
    }

    pub fn zero(&self) -> Option<usize> {
        (0..self.order)
            .find(|&z| (0..self.order).all(|x| self.entry(z, x) == z && self.entry(x, z) == z))
    }

    /// Checks that perm is an involutive anti-automorphism of the table.
    pub fn check_involution(&self, perm: &[usize]) -> Result<()> {
        if perm.len() != self.order {
            return Err(Error::BadInvolution {
                reason: format!("permutation length {} for order {}", perm.len(), self.order),
            });
        }
        let mut seen = vec![false; self.order];
        for &img in perm {
            if img >= self.order || seen[img] {
                return Err(Error::BadInvolution {
                    reason: "not a permutation".into(),
                });
            }
            seen[img] = true;
        }
        for (x, &img) in perm.iter().enumerate() {
            if perm[img] != x {
                return Err(Error::BadInvolution {
                    reason: format!("not an involution at {x}"),
                });
            }
        }
        for a in 0..self.order {
            for b in 0..self.order {
                if perm[self.entry(a, b)] != self.entry(perm[b], perm[a]) {
                    return Err(Error::BadInvolution {
                        reason: format!("star of {a} {b} does not reverse the product"),
                    });
                }
            }
        }
        Ok(())
    }
}

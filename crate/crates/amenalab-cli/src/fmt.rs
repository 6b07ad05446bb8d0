//! Rendering and small parsers shared by the subcommands.

use num::rational::BigRational;
use num::{BigInt, Signed};

/// Exact "num/den" with the denominator always written, as the report
/// columns expect.
pub fn rational(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Truncated decimal expansion; for reading next to an exact column, never
/// instead of one.
pub fn decimal(r: &BigRational, places: u32) -> String {
    let scale = BigInt::from(10u64).pow(places);
    let abs = r.abs();
    let scaled = (abs.numer() * &scale) / abs.denom();
    let int = &scaled / &scale;
    let frac = &scaled % &scale;
    let sign = if r.is_negative() { "-" } else { "" };
    format!("{sign}{int}.{frac:0width$}", width = places as usize)
}

/// Window indices: a single index "8", a list "2,4,8", or a range "10..100"
/// including both ends.
pub fn parse_ns(text: &str) -> Result<Vec<usize>, String> {
    let t = text.trim();
    if let Some((a, b)) = t.split_once("..") {
        let a: usize = a
            .trim()
            .parse()
            .map_err(|_| format!("bad range start in {t:?}"))?;
        let b: usize = b
            .trim()
            .parse()
            .map_err(|_| format!("bad range end in {t:?}"))?;
        if a > b {
            return Err(format!("empty range {t:?}"));
        }
        if b - a > 100_000 {
            return Err(format!("range {t:?} is too large to sweep"));
        }
        return Ok((a..=b).collect());
    }
    t.split(',')
        .map(|p| p.trim().parse().map_err(|_| format!("bad index {p:?}")))
        .collect()
}

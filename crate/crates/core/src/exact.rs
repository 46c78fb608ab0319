//! Exact integer evaluation of ceilings of rational powers.

use num_bigint::BigUint;
use num_rational::Ratio;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = Ratio<u64>;

/// `⌈ (num/den)^(1/root) ⌉`.
pub fn ceil_root(num: &BigUint, den: &BigUint, root: u32) -> BigUint {
    assert!(!den.is_zero() && root > 0);
    // floor((num/den)^(1/root)) == floor(floor(num/den)^(1/root))
    let floor = (num / den).nth_root(root);
    if floor.pow(root) * den >= *num {
        floor
    } else {
        floor + 1u32
    }
}

/// `⌈ (p/q)^(a/b) ⌉` for a non-negative rational base.
pub fn ceil_rational_power(base: Rational, a: u32, b: u32) -> BigUint {
    let num = BigUint::from(*base.numer()).pow(a);
    let den = BigUint::from(*base.denom()).pow(a);
    ceil_root(&num, &den, b)
}

/// Clamp a big integer into `usize`, saturating.
pub fn to_usize_saturating(x: &BigUint) -> usize {
    x.to_usize().unwrap_or(usize::MAX)
}

/// Parses `3`, `5/2` or `2.5` into an exact rational.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let bad = |reason: &str| Error::Parse { text: text.to_string(), reason: reason.to_string() };
    let t = text.trim();
    if let Some((n, d)) = t.split_once('/') {
        let n: u64 = n.trim().parse().map_err(|_| bad("bad numerator"))?;
        let d: u64 = d.trim().parse().map_err(|_| bad("bad denominator"))?;
        if d == 0 {
            return Err(bad("zero denominator"));
        }
        return Ok(Ratio::new(n, d));
    }
    if let Some((int, frac)) = t.split_once('.') {
        if frac.is_empty() || frac.len() > 18 || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad("bad decimal fraction"));
        }
        let int: u64 = if int.is_empty() { 0 } else { int.parse().map_err(|_| bad("bad integer part"))? };
        let scale = 10u64.pow(frac.len() as u32);
        let frac: u64 = frac.parse().map_err(|_| bad("bad decimal fraction"))?;
        let n = int.checked_mul(scale).and_then(|x| x.checked_add(frac)).ok_or_else(|| bad("overflow"))?;
        return Ok(Ratio::new(n, scale));
    }
    t.parse::<u64>().map(Ratio::from_integer).map_err(|_| bad("not a rational number"))
}

pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn ceil_root_exact_and_inexact() {
        assert_eq!(ceil_root(&big(32), &big(1), 5), big(2));
        assert_eq!(ceil_root(&big(33), &big(1), 5), big(3));
        assert_eq!(ceil_root(&big(16), &big(1), 5), big(2));
        assert_eq!(ceil_root(&big(1), &big(1), 5), big(1));
        assert_eq!(ceil_root(&big(9), &big(4), 1), big(3));
        assert_eq!(ceil_root(&big(8), &big(4), 1), big(2));
    }

    #[test]
    fn rational_power_ceiling() {
        // ⌈2^(4/5)⌉ = 2, ⌈2^(8/5)⌉ = 4, ⌈2^(16/5)⌉ = 10
        let two = Ratio::from_integer(2);
        assert_eq!(ceil_rational_power(two, 4, 5), big(2));
        assert_eq!(ceil_rational_power(two, 8, 5), big(4));
        assert_eq!(ceil_rational_power(two, 16, 5), big(10));
        assert_eq!(ceil_rational_power(two, 20, 5), big(16));
        assert_eq!(ceil_rational_power(Ratio::new(5, 2), 2, 1), big(7));
    }

    #[test]
    fn parse_rationals() {
        assert_eq!(parse_rational("3").unwrap(), Ratio::from_integer(3));
        assert_eq!(parse_rational("5/2").unwrap(), Ratio::new(5, 2));
        assert_eq!(parse_rational("2.5").unwrap(), Ratio::new(5, 2));
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("1/0").is_err());
        assert_eq!(format_rational(&Ratio::new(10, 4)), "5/2");
    }
}

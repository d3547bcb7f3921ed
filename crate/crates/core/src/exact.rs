//! Helpers for exact rational values and their presentation.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Renders as `p/q`, always with an explicit denominator.
pub fn fraction_string(x: &Q) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

pub fn parse_fraction(s: &str) -> Option<Q> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Q::new(n, d))
            }
        }
        None => s.parse::<BigInt>().ok().map(Q::from_integer),
    }
}

/// Rounds to `places` decimal digits, ties to even.
pub fn round_half_even(x: &Q, places: u32) -> Q {
    let scale = BigInt::from(10u32).pow(places);
    let scaled = x * Q::from_integer(scale.clone());
    let floor = scaled.floor();
    let rem = &scaled - &floor;
    let half = Q::new(BigInt::one(), BigInt::from(2));
    let mut whole = floor.to_integer();
    if rem > half || (rem == half && whole.is_odd()) {
        whole += BigInt::one();
    }
    Q::new(whole, scale)
}

/// Fixed-point rendering after half-even rounding, e.g. `0.930693`.
pub fn decimal_string(x: &Q, places: u32) -> String {
    let r = round_half_even(x, places);
    let scale = BigInt::from(10u32).pow(places);
    let scaled = (r * Q::from_integer(scale.clone())).to_integer();
    let neg = scaled.is_negative();
    let (int_part, frac_part) = scaled.abs().div_rem(&scale);
    let sign = if neg { "-" } else { "" };
    if places == 0 {
        return format!("{sign}{int_part}");
    }
    format!(
        "{sign}{int_part}.{:0>width$}",
        frac_part.to_string(),
        width = places as usize
    )
}

/// Parses a plain decimal literal like `0.872` or `1.04918` exactly.
pub fn parse_decimal(s: &str) -> Option<Q> {
    let s = s.trim();
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part.chars().chain(frac_part.chars()).all(|ch| ch.is_ascii_digit()) {
        return None;
    }
    let digits = format!("{int_part}{frac_part}");
    let numer: BigInt = if digits.is_empty() { BigInt::zero() } else { digits.parse().ok()? };
    let denom = BigInt::from(10u32).pow(frac_part.len() as u32);
    let v = Q::new(numer, denom);
    Some(if neg { -v } else { v })
}

/// Number of digits after the decimal point in a printed literal.
pub fn printed_places(s: &str) -> u32 {
    s.trim().split_once('.').map_or(0, |(_, f)| f.len() as u32)
}

pub fn to_f64(x: &Q) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

pub fn is_integer(x: &Q) -> bool {
    x.is_integer()
}

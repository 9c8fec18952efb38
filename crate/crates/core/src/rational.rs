//! Arbitrary-precision rationals and small helpers around them.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{input, Result};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qr(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn zero() -> Q {
    Q::zero()
}

pub fn one() -> Q {
    Q::one()
}

/// Formats as `p/q`, or `p` when the denominator is one.
pub fn fmt_q(x: &Q) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parses `p`, `p/q` or a finite decimal such as `-1.25`.
pub fn parse_q(s: &str) -> Result<Q> {
    let s = s.trim();
    if let Some((a, b)) = s.split_once('/') {
        let n: BigInt = a
            .trim()
            .parse()
            .or_else(|_| input(format!("bad rational '{s}'")))?;
        let d: BigInt = b
            .trim()
            .parse()
            .or_else(|_| input(format!("bad rational '{s}'")))?;
        if d.is_zero() {
            return input(format!("zero denominator in '{s}'"));
        }
        return Ok(Q::new(n, d));
    }
    if let Some((a, b)) = s.split_once('.') {
        let neg = a.starts_with('-');
        let ip: BigInt = if a.is_empty() || a == "-" || a == "+" {
            BigInt::zero()
        } else {
            a.parse()
                .or_else(|_| input(format!("bad rational '{s}'")))?
        };
        if b.is_empty() || !b.chars().all(|c| c.is_ascii_digit()) {
            return input(format!("bad rational '{s}'"));
        }
        let fp: BigInt = b.parse().unwrap();
        let scale = num_traits::pow(BigInt::from(10), b.len());
        let frac = Q::new(fp, scale);
        let ip = Q::from_integer(ip.abs());
        let v = ip + frac;
        return Ok(if neg { -v } else { v });
    }
    let n: BigInt = s
        .parse()
        .or_else(|_| input(format!("bad rational '{s}'")))?;
    Ok(Q::from_integer(n))
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |a, k| a * BigInt::from(k))
}

/// Generalized binomial coefficient `t choose k` for rational `t`.
pub fn binom_q(t: &Q, k: usize) -> Q {
    let mut num = one();
    for i in 0..k {
        num *= t - q(i as i64);
    }
    num / Q::from_integer(factorial(k as u64))
}

pub fn pow_q(x: &Q, e: usize) -> Q {
    let mut r = one();
    for _ in 0..e {
        r *= x;
    }
    r
}

pub fn to_i64(x: &Q) -> Option<i64> {
    if x.is_integer() {
        x.numer().to_i64()
    } else {
        None
    }
}

pub fn is_nonneg(x: &Q) -> bool {
    !x.is_negative()
}

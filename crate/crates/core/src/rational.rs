//! Exact rationals and the fixed dense enumeration of `[0, 1)`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::Rng;

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Accepts `p`, `p/q` and signed variants.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    let bad = |why: &str| Error::parse(t, why);
    let (num, den) = match t.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (t, "1"),
    };
    let p: BigInt = num.parse().map_err(|_| bad("expected an integer numerator"))?;
    let q: BigInt = den.parse().map_err(|_| bad("expected an integer denominator"))?;
    if q.is_zero() {
        return Err(bad("zero denominator"));
    }
    Ok(Rational::new(p, q))
}

pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn floor(r: &Rational) -> BigInt {
    r.numer().div_floor(r.denom())
}

/// Fractional part in `[0, 1)`.
pub fn frac(r: &Rational) -> Rational {
    r - Rational::from_integer(floor(r))
}

pub fn floor_i64(r: &Rational) -> i64 {
    i64::try_from(floor(r)).expect("integer part fits in i64")
}

/// 0, 1/2, 1/3, 2/3, 1/4, 3/4, 1/5, ... : reduced fractions in `[0, 1)`
/// ordered by denominator, then numerator.
#[derive(Debug, Clone)]
pub struct DenseSequence {
    num: i64,
    den: i64,
}

impl DenseSequence {
    pub fn new() -> Self {
        DenseSequence { num: 0, den: 1 }
    }
}

impl Default for DenseSequence {
    fn default() -> Self {
        Self::new()
    }
}

impl Iterator for DenseSequence {
    type Item = Rational;

    fn next(&mut self) -> Option<Rational> {
        let out = rat(self.num, self.den);
        loop {
            self.num += 1;
            if self.num >= self.den {
                self.den += 1;
                self.num = 1;
            }
            if self.num.gcd(&self.den) == 1 {
                break;
            }
        }
        Some(out)
    }
}

/// Uniform-ish rational in `[0, 1]` with denominator at most `max_den`.
pub fn sample_unit<R: Rng + ?Sized>(rng: &mut R, max_den: i64) -> Rational {
    let d = rng.gen_range(1..=max_den);
    let n = rng.gen_range(0..=d);
    rat(n, d)
}

pub fn is_nonnegative(r: &Rational) -> bool {
    !r.is_negative()
}

//! Arbitrary-precision rationals and small construction helpers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Reduced fraction of arbitrary-precision integers.
pub type Rational = num_rational::BigRational;

/// The integer `n` as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// The fraction `n/d`; panics if `d == 0`.
pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn half() -> Rational {
    frac(1, 2)
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

/// `true` when `r` has denominator one.
pub fn is_integer(r: &Rational) -> bool {
    r.is_integer()
}

/// `true` when `2r` is an odd integer.
pub fn is_half_odd(r: &Rational) -> bool {
    let two = r * int(2);
    two.is_integer() && !r.is_integer()
}

/// Converts an integral rational to `i64`.
pub fn to_i64(r: &Rational) -> Option<i64> {
    if r.is_integer() {
        r.to_integer().to_i64()
    } else {
        None
    }
}

/// Integer power with a non-negative exponent.
pub fn pow(r: &Rational, e: u32) -> Rational {
    // A reduced fraction stays reduced under powers.
    Rational::new_raw(r.numer().pow(e), r.denom().pow(e))
}

fn common_denominator(v: &[Rational]) -> BigInt {
    v.iter().fold(BigInt::one(), |d, x| if x.denom().is_one() { d } else { d.lcm(x.denom()) })
}

/// `Σ xᵢ·yᵢ`, summed over a common denominator.
pub fn dot(x: &[Rational], y: &[Rational]) -> Rational {
    let (dx, dy) = (common_denominator(x), common_denominator(y));
    let total = x
        .iter()
        .zip(y)
        .fold(BigInt::zero(), |acc, (a, b)| acc + (a.numer() * (&dx / a.denom())) * (b.numer() * (&dy / b.denom())));
    Rational::new(total, dx * dy)
}

/// `Σ xᵢ^e`, summed over a common denominator.
pub fn power_sum(v: &[Rational], e: u32) -> Rational {
    let d = common_denominator(v);
    if d.is_one() {
        return Rational::from_integer(v.iter().fold(BigInt::zero(), |acc, x| acc + x.numer().pow(e)));
    }
    let total = v.iter().fold(BigInt::zero(), |acc, x| acc + (x.numer() * (&d / x.denom())).pow(e));
    Rational::new(total, d.pow(e))
}

pub fn abs(r: &Rational) -> Rational {
    r.abs()
}

/// Canonical text form: `p` for integers, `p/q` otherwise.
pub fn to_string(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `p` or `p/q`.
pub fn parse(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// Serde adapter writing rationals as `"p/q"` strings.
pub mod serde_str {
    use super::Rational;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&super::to_string(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        super::parse(&s).map_err(serde::de::Error::custom)
    }
}

/// Serde adapter for `Vec<Rational>` as a list of strings.
pub mod serde_vec {
    use super::Rational;
    use serde::ser::SerializeSeq;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(v.len()))?;
        for r in v {
            seq.serialize_element(&super::to_string(r))?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
        let v = Vec::<String>::deserialize(d)?;
        v.iter().map(|s| super::parse(s).map_err(serde::de::Error::custom)).collect()
    }
}

/// Serde adapter for a row-major matrix of rationals.
pub mod serde_mat {
    use super::Rational;
    use serde::ser::SerializeSeq;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(m: &[Vec<Rational>], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(m.len()))?;
        for row in m {
            let row: Vec<String> = row.iter().map(super::to_string).collect();
            seq.serialize_element(&row)?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Vec<Rational>>, D::Error> {
        let m = Vec::<Vec<String>>::deserialize(d)?;
        m.iter().map(|row| row.iter().map(|s| super::parse(s).map_err(serde::de::Error::custom)).collect()).collect()
    }
}

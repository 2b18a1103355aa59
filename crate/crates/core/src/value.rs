//! Exact rational index values.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, Mul, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// An exact rational number. Used for distances, Wiener and connectivity indices.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IndexValue(BigRational);

impl IndexValue {
    pub fn zero() -> Self {
        IndexValue(BigRational::zero())
    }

    pub fn from_integer(n: i64) -> Self {
        IndexValue(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_ratio(numer: i64, denom: i64) -> Self {
        IndexValue(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    /// `micros · 10⁻⁶`.
    pub fn from_micros(micros: u64) -> Self {
        Self::from_scaled(BigInt::from(micros), 6)
    }

    /// `numer · 10^-exponent`.
    pub fn from_scaled(numer: BigInt, exponent: u32) -> Self {
        IndexValue(BigRational::new(numer, BigInt::from(10u32).pow(exponent)))
    }

    pub fn as_rational(&self) -> &BigRational {
        &self.0
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    /// Lossy conversion for plotting or logging only.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    /// Number of decimal places needed to write the value exactly, or `None`
    /// when the expansion does not terminate.
    fn terminating_places(&self) -> Option<u32> {
        let mut d = self.0.denom().clone();
        let two = BigInt::from(2u32);
        let five = BigInt::from(5u32);
        let (mut twos, mut fives) = (0u32, 0u32);
        while d.is_even() {
            d /= &two;
            twos += 1;
        }
        while (&d % &five).is_zero() {
            d /= &five;
            fives += 1;
        }
        d.is_one().then_some(twos.max(fives))
    }
}

/// Inverse of `Display`: a decimal literal such as `7.4` or a fraction `p/q`.
impl FromStr for IndexValue {
    type Err = crate::error::Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || crate::error::Error::BadParams(format!("not an exact number: `{s}`"));
        if let Some((p, q)) = s.split_once('/') {
            let p: BigInt = p.parse().map_err(|_| bad())?;
            let q: BigInt = q.parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            return Ok(IndexValue(BigRational::new(p, q)));
        }
        let (negative, body) = match s.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, s),
        };
        let (int, frac) = body.split_once('.').unwrap_or((body, ""));
        let digits_ok = |t: &str| t.bytes().all(|b| b.is_ascii_digit());
        if int.is_empty() || !digits_ok(int) || !digits_ok(frac) || (body.contains('.') && frac.is_empty()) {
            return Err(bad());
        }
        let mut numer: BigInt = format!("{int}{frac}").parse().map_err(|_| bad())?;
        if negative {
            numer = -numer;
        }
        Ok(Self::from_scaled(numer, frac.len() as u32))
    }
}

impl From<BigRational> for IndexValue {
    fn from(r: BigRational) -> Self {
        IndexValue(r)
    }
}

impl fmt::Display for IndexValue {
    /// Shortest exact decimal when the expansion terminates, `p/q` otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Some(places) = self.terminating_places() else {
            return write!(f, "{}/{}", self.0.numer(), self.0.denom());
        };
        let scaled = (self.0.clone() * BigRational::from_integer(BigInt::from(10u32).pow(places))).to_integer();
        let sign = if scaled.is_negative() { "-" } else { "" };
        let digits = scaled.abs().to_string();
        if places == 0 {
            return write!(f, "{sign}{digits}");
        }
        let places = places as usize;
        let padded = format!("{digits:0>width$}", width = places + 1);
        let (int, frac) = padded.split_at(padded.len() - places);
        let frac = frac.trim_end_matches('0');
        if frac.is_empty() {
            write!(f, "{sign}{int}")
        } else {
            write!(f, "{sign}{int}.{frac}")
        }
    }
}

impl Add for IndexValue {
    type Output = IndexValue;
    fn add(self, rhs: IndexValue) -> IndexValue {
        IndexValue(self.0 + rhs.0)
    }
}

impl<'a> Add<&'a IndexValue> for &'a IndexValue {
    type Output = IndexValue;
    fn add(self, rhs: &IndexValue) -> IndexValue {
        IndexValue(&self.0 + &rhs.0)
    }
}

impl Sub for IndexValue {
    type Output = IndexValue;
    fn sub(self, rhs: IndexValue) -> IndexValue {
        IndexValue(self.0 - rhs.0)
    }
}

impl Mul for IndexValue {
    type Output = IndexValue;
    fn mul(self, rhs: IndexValue) -> IndexValue {
        IndexValue(self.0 * rhs.0)
    }
}

impl<'a> Mul<&'a IndexValue> for &'a IndexValue {
    type Output = IndexValue;
    fn mul(self, rhs: &IndexValue) -> IndexValue {
        IndexValue(&self.0 * &rhs.0)
    }
}

impl Sum for IndexValue {
    fn sum<I: Iterator<Item = IndexValue>>(iter: I) -> Self {
        iter.fold(IndexValue::zero(), |a, b| a + b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renders_terminating_values_as_decimals() {
        assert_eq!(IndexValue::from_ratio(37, 5).to_string(), "7.4");
        assert_eq!(IndexValue::from_ratio(7, 2).to_string(), "3.5");
        assert_eq!(IndexValue::from_integer(46).to_string(), "46");
        assert_eq!(IndexValue::from_micros(1).to_string(), "0.000001");
        assert_eq!(IndexValue::from_ratio(43, 4).to_string(), "10.75");
        assert_eq!(IndexValue::from_ratio(-1, 8).to_string(), "-0.125");
        assert_eq!(IndexValue::zero().to_string(), "0");
    }

    #[test]
    fn renders_repeating_values_as_fractions() {
        assert_eq!(IndexValue::from_ratio(1, 3).to_string(), "1/3");
        assert_eq!(IndexValue::from_ratio(10, 6).to_string(), "5/3");
    }

    #[test]
    fn parses_its_own_rendering() {
        for v in [
            IndexValue::from_ratio(37, 5),
            IndexValue::from_ratio(1, 3),
            IndexValue::from_ratio(-1, 8),
            IndexValue::from_integer(46),
        ] {
            assert_eq!(v.to_string().parse::<IndexValue>().unwrap(), v);
        }
        assert_eq!("1.20".parse::<IndexValue>().unwrap(), IndexValue::from_ratio(6, 5));
        for bad in ["", "1.", ".5", "1/0", "x", "1.2.3"] {
            assert!(bad.parse::<IndexValue>().is_err(), "{bad:?}");
        }
    }

    #[test]
    fn micro_sums_are_exact() {
        let x = IndexValue::from_micros(300_000);
        let total: IndexValue = (0..4).map(|_| x.clone()).sum();
        assert_eq!(total, IndexValue::from_ratio(6, 5));
    }
}

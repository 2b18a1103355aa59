//! Fixed-point membership grades.
//!
//! A grade is stored as an integer number of micro-units, so `0.1` is exactly
//! `100_000` and comparisons between path strengths and edge grades are exact.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::value::IndexValue;

/// Micro-units per whole unit.
pub const SCALE: u32 = 1_000_000;

const FRACTION_DIGITS: usize = 6;

/// A membership grade in `[0, 1]` with 10⁻⁶ resolution.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Membership(u32);

impl Membership {
    pub const ZERO: Membership = Membership(0);
    pub const ONE: Membership = Membership(SCALE);

    pub fn from_micros(micros: u32) -> Result<Self, Error> {
        if micros > SCALE {
            return Err(Error::InvalidMembership(format!("{micros}e-6")));
        }
        Ok(Membership(micros))
    }

    /// Grade on the hundredths grid: `from_hundredths(30)` is `0.3`.
    pub fn from_hundredths(h: u32) -> Result<Self, Error> {
        h.checked_mul(10_000)
            .ok_or_else(|| Error::InvalidMembership(format!("{h}/100")))
            .and_then(Self::from_micros)
    }

    pub fn micros(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Exact sum, `None` when it would leave `[0, 1]`.
    pub fn checked_add(self, other: Membership) -> Option<Membership> {
        let sum = self.0 + other.0;
        (sum <= SCALE).then_some(Membership(sum))
    }

    pub fn to_value(self) -> IndexValue {
        IndexValue::from_micros(u64::from(self.0))
    }
}

impl FromStr for Membership {
    type Err = Error;

    /// Accepts `1`, `0.3`, `0.000001`; at most six fractional digits.
    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::InvalidMembership(s.to_string());
        let (int_part, frac_part) = match s.split_once('.') {
            Some((i, f)) => (i, Some(f)),
            None => (s, None),
        };
        if int_part.is_empty() || !int_part.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let significant = int_part.trim_start_matches('0');
        if significant.len() > 1 {
            return Err(bad());
        }
        let int: u64 = significant.parse().unwrap_or(0);
        let mut frac: u64 = 0;
        if let Some(f) = frac_part {
            if f.is_empty() || f.len() > FRACTION_DIGITS || !f.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            frac = f.parse().map_err(|_| bad())?;
            frac *= 10u64.pow((FRACTION_DIGITS - f.len()) as u32);
        }
        let micros = int * u64::from(SCALE) + frac;
        if micros > u64::from(SCALE) {
            return Err(bad());
        }
        Ok(Membership(micros as u32))
    }
}

impl fmt::Display for Membership {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let int = self.0 / SCALE;
        let frac = self.0 % SCALE;
        if frac == 0 {
            return write!(f, "{int}");
        }
        let digits = format!("{frac:06}");
        write!(f, "{int}.{}", digits.trim_end_matches('0'))
    }
}

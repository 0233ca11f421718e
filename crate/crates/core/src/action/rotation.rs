use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::Zero;
use thiserror::Error;

use super::Sign;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FractionError {
    #[error("decimal '{0}' not allowed; write an exact fraction such as 1/2")]
    Decimal(String),
    #[error("malformed fraction '{0}'")]
    Malformed(String),
    #[error("zero denominator in '{0}'")]
    ZeroDenominator(String),
}

/// An element of `Q/Z`, i.e. a finite-order rotation of the circle, stored as
/// a reduced fraction in `[0, 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RotationNumber(Ratio<i64>);

impl RotationNumber {
    pub const ZERO: RotationNumber = RotationNumber(Ratio::new_raw(0, 1));

    pub fn new(numer: i64, denom: i64) -> Self {
        Self::from_ratio(Ratio::new(numer, denom))
    }

    pub fn half() -> Self {
        RotationNumber(Ratio::new_raw(1, 2))
    }

    pub fn from_ratio(r: Ratio<i64>) -> Self {
        let floor = r.numer().div_floor(r.denom());
        RotationNumber(r - floor)
    }

    pub fn numer(&self) -> i64 {
        *self.0.numer()
    }

    pub fn denom(&self) -> i64 {
        *self.0.denom()
    }

    pub fn as_ratio(&self) -> Ratio<i64> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn times(self, k: i64) -> Self {
        Self::from_ratio(self.0 * k)
    }

    pub fn signed(self, sign: Sign) -> Self {
        match sign {
            Sign::Plus => self,
            Sign::Minus => -self,
        }
    }
}

impl Add for RotationNumber {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::from_ratio(self.0 + rhs.0)
    }
}

impl Sub for RotationNumber {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::from_ratio(self.0 - rhs.0)
    }
}

impl Neg for RotationNumber {
    type Output = Self;
    fn neg(self) -> Self {
        Self::from_ratio(-self.0)
    }
}

impl fmt::Display for RotationNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Accepts `a/b` or a bare integer `a`, optionally signed; the value is
/// reduced mod 1.
impl FromStr for RotationNumber {
    type Err = FractionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let text = s.trim();
        if text.contains(['.', 'e', 'E']) {
            return Err(FractionError::Decimal(s.to_string()));
        }
        let malformed = || FractionError::Malformed(s.to_string());
        let (numer, denom) = match text.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (text, "1"),
        };
        let numer: i64 = numer.parse().map_err(|_| malformed())?;
        let denom: i64 = denom.parse().map_err(|_| malformed())?;
        if denom == 0 {
            return Err(FractionError::ZeroDenominator(s.to_string()));
        }
        if denom.is_negative() {
            return Err(malformed());
        }
        Ok(RotationNumber::new(numer, denom))
    }
}

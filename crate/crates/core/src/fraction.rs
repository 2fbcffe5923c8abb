//! Exact rational numbers over big integers.
//!
//! Waldschmidt constants and resurgence bounds are rationals like `7/3`; every
//! comparison in this crate is exact, no floating point anywhere.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

/// A reduced fraction with positive denominator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Fraction {
    num: BigInt,
    den: BigInt,
}

impl Fraction {
    /// Builds `num/den` in lowest terms. Panics when `den == 0`.
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Self {
        let mut num: BigInt = num.into();
        let mut den: BigInt = den.into();
        assert!(!den.is_zero(), "fraction with zero denominator");
        if den.is_negative() {
            num = -num;
            den = -den;
        }
        let g = num.gcd(&den);
        if !g.is_zero() {
            num /= &g;
            den /= &g;
        }
        Fraction { num, den }
    }

    pub fn from_integer(k: impl Into<BigInt>) -> Self {
        Fraction { num: k.into(), den: BigInt::from(1) }
    }

    pub fn ratio(num: u64, den: u64) -> Self {
        Fraction::new(BigInt::from(num), BigInt::from(den))
    }

    pub fn numerator(&self) -> &BigInt {
        &self.num
    }

    pub fn denominator(&self) -> &BigInt {
        &self.den
    }

    pub fn is_integer(&self) -> bool {
        self.den == BigInt::from(1)
    }
}

impl Ord for Fraction {
    fn cmp(&self, other: &Self) -> Ordering {
        // denominators are positive, so cross multiplication preserves order
        (&self.num * &other.den).cmp(&(&other.num * &self.den))
    }
}

impl PartialOrd for Fraction {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl fmt::Debug for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for Fraction {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Fraction", 2)?;
        // values in this crate are tiny; fall back to strings only on overflow
        match (i64::try_from(&self.num), i64::try_from(&self.den)) {
            (Ok(n), Ok(d)) => {
                s.serialize_field("num", &n)?;
                s.serialize_field("den", &d)?;
            }
            _ => {
                s.serialize_field("num", &self.num.to_string())?;
                s.serialize_field("den", &self.den.to_string())?;
            }
        }
        s.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduction_and_sign() {
        let f = Fraction::new(14, -6);
        assert_eq!(f, Fraction::new(-7, 3));
        assert_eq!(f.to_string(), "-7/3");
        assert_eq!(Fraction::new(4, 2).to_string(), "2");
    }

    #[test]
    fn exact_ordering() {
        assert!(Fraction::ratio(7, 3) > Fraction::ratio(2, 1));
        assert!(Fraction::ratio(1, 3) < Fraction::ratio(1, 2));
        assert_eq!(Fraction::ratio(2, 6), Fraction::ratio(1, 3));
    }

    #[test]
    fn serializes_num_den() {
        let j = serde_json::to_string(&Fraction::ratio(7, 3)).unwrap();
        assert_eq!(j, r#"{"num":7,"den":3}"#);
    }
}

//! Exact rational arithmetic for cusp bounds and the verification bound.
//!
//! [`ExactRational`] wraps `num_rational::BigRational`: always in lowest
//! terms, denominator positive, arithmetic exact. There is deliberately no
//! constructor from floating point; every value entering a certificate is
//! produced by integer arithmetic and exact division only.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

/// An exact rational number. Serializes as `{"num": "...", "den": "..."}`
/// with both parts as decimal strings.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Wire", into = "Wire")]
pub struct ExactRational(BigRational);

impl ExactRational {
    /// Build `num/den`, reduced to lowest terms with a positive denominator.
    ///
    /// Panics if `den` is zero.
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Self {
        let den = den.into();
        assert!(!den.is_zero(), "rational denominator must be nonzero");
        ExactRational(BigRational::new(num.into(), den))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        ExactRational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        ExactRational(BigRational::zero())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_nonnegative(&self) -> bool {
        !self.0.is_negative()
    }

    /// Largest integer not exceeding the value (true floor, also for
    /// negatives: `floor(-85/3) = -29`).
    pub fn floor(&self) -> BigInt {
        self.0.floor().to_integer()
    }

    /// `floor` narrowed to `i64`; panics if it does not fit.
    pub fn floor_i64(&self) -> i64 {
        i64::try_from(self.floor()).expect("floor exceeds i64 range")
    }
}

impl fmt::Display for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for ExactRational {
            type Output = ExactRational;
            fn $method(self, rhs: ExactRational) -> ExactRational {
                ExactRational((self.0).$method(rhs.0))
            }
        }
        impl $trait for &ExactRational {
            type Output = ExactRational;
            fn $method(self, rhs: &ExactRational) -> ExactRational {
                ExactRational((&self.0).$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Neg for ExactRational {
    type Output = ExactRational;
    fn neg(self) -> ExactRational {
        ExactRational(-self.0)
    }
}

impl PartialEq<i64> for ExactRational {
    fn eq(&self, other: &i64) -> bool {
        self.0 == BigRational::from_integer(BigInt::from(*other))
    }
}

impl PartialOrd<i64> for ExactRational {
    fn partial_cmp(&self, other: &i64) -> Option<Ordering> {
        self.0
            .partial_cmp(&BigRational::from_integer(BigInt::from(*other)))
    }
}

#[derive(Serialize, Deserialize)]
struct Wire {
    num: String,
    den: String,
}

impl From<ExactRational> for Wire {
    fn from(r: ExactRational) -> Wire {
        Wire {
            num: r.numer().to_string(),
            den: r.denom().to_string(),
        }
    }
}

impl TryFrom<Wire> for ExactRational {
    type Error = String;

    fn try_from(w: Wire) -> Result<Self, String> {
        let num: BigInt = w.num.parse().map_err(|_| format!("bad numerator {:?}", w.num))?;
        let den: BigInt = w.den.parse().map_err(|_| format!("bad denominator {:?}", w.den))?;
        if den.is_zero() {
            return Err("zero denominator".into());
        }
        Ok(ExactRational::new(num, den))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalizes_to_lowest_terms_with_positive_denominator() {
        let r = ExactRational::new(50, 24);
        assert_eq!(r.numer(), &BigInt::from(25));
        assert_eq!(r.denom(), &BigInt::from(12));

        let s = ExactRational::new(3, -6);
        assert_eq!(s.numer(), &BigInt::from(-1));
        assert_eq!(s.denom(), &BigInt::from(2));
    }

    #[test]
    fn floor_of_negatives_rounds_down() {
        assert_eq!(ExactRational::new(85, 3).floor_i64(), 28);
        assert_eq!(ExactRational::new(-85, 3).floor_i64(), -29);
        assert_eq!(ExactRational::new(57, 2).floor_i64(), 28);
        assert_eq!(ExactRational::from_integer(47).floor_i64(), 47);
    }

    #[test]
    fn arithmetic_is_exact() {
        let a = ExactRational::new(1, 60);
        let b = ExactRational::new(5, 4);
        assert_eq!(&a + &b, ExactRational::new(76, 60));
        assert_eq!(&b - &b, ExactRational::zero());
        assert_eq!(&a * &b, ExactRational::new(1, 48));
    }

    #[test]
    fn display_elides_unit_denominator() {
        assert_eq!(ExactRational::new(85, 3).to_string(), "85/3");
        assert_eq!(ExactRational::new(30, 1).to_string(), "30");
        assert_eq!(ExactRational::new(-5, 4).to_string(), "-5/4");
    }

    #[test]
    fn serde_round_trip_uses_decimal_strings() {
        let r = ExactRational::new(-5, 4);
        let json = serde_json::to_string(&r).unwrap();
        assert_eq!(json, r#"{"num":"-5","den":"4"}"#);
        let back: ExactRational = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r);
    }
}

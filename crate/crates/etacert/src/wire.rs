//! Serde adapters for the certificate format.
//!
//! Certificates carry every integer as a decimal string so that consumers
//! without 64-bit (or bignum) integers can still parse them losslessly.
//! These modules plug into `#[serde(with = "...")]` on the certificate
//! structs.

use serde::de::Error as DeError;
use serde::{Deserialize, Deserializer, Serializer};

macro_rules! scalar_as_string {
    ($mod_name:ident, $ty:ty) => {
        pub mod $mod_name {
            use super::*;

            pub fn serialize<S: Serializer>(v: &$ty, s: S) -> Result<S::Ok, S::Error> {
                s.serialize_str(&v.to_string())
            }

            pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<$ty, D::Error> {
                let text = String::deserialize(d)?;
                text.parse()
                    .map_err(|_| D::Error::custom(format!("invalid integer string {text:?}")))
            }
        }
    };
}

scalar_as_string!(u64_str, u64);
scalar_as_string!(i64_str, i64);
scalar_as_string!(biguint_str, num_bigint::BigUint);

macro_rules! opt_scalar_as_string {
    ($mod_name:ident, $ty:ty) => {
        pub mod $mod_name {
            use super::*;

            pub fn serialize<S: Serializer>(v: &Option<$ty>, s: S) -> Result<S::Ok, S::Error> {
                match v {
                    Some(x) => s.serialize_some(&x.to_string()),
                    None => s.serialize_none(),
                }
            }

            pub fn deserialize<'de, D: Deserializer<'de>>(
                d: D,
            ) -> Result<Option<$ty>, D::Error> {
                let text: Option<String> = Option::deserialize(d)?;
                match text {
                    None => Ok(None),
                    Some(t) => t
                        .parse()
                        .map(Some)
                        .map_err(|_| D::Error::custom(format!("invalid integer string {t:?}"))),
                }
            }
        }
    };
}

opt_scalar_as_string!(opt_u64_str, u64);
opt_scalar_as_string!(opt_i64_str, i64);

pub mod opt_vec_u64_str {
    use super::*;

    pub fn serialize<S: Serializer>(v: &Option<Vec<u64>>, s: S) -> Result<S::Ok, S::Error> {
        match v {
            Some(xs) => {
                let strings: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
                s.serialize_some(&strings)
            }
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Vec<u64>>, D::Error> {
        let strings: Option<Vec<String>> = Option::deserialize(d)?;
        match strings {
            None => Ok(None),
            Some(xs) => xs
                .into_iter()
                .map(|t| {
                    t.parse()
                        .map_err(|_| D::Error::custom(format!("invalid integer string {t:?}")))
                })
                .collect::<Result<Vec<u64>, _>>()
                .map(Some),
        }
    }
}

#[cfg(test)]
mod tests {
    use serde::{Deserialize, Serialize};

    #[derive(Serialize, Deserialize, PartialEq, Debug)]
    struct Sample {
        #[serde(with = "super::u64_str")]
        a: u64,
        #[serde(with = "super::opt_i64_str")]
        b: Option<i64>,
        #[serde(with = "super::opt_vec_u64_str")]
        c: Option<Vec<u64>>,
    }

    #[test]
    fn integers_round_trip_as_strings() {
        let v = Sample { a: 1197, b: Some(-3), c: Some(vec![16, 21]) };
        let json = serde_json::to_string(&v).unwrap();
        assert_eq!(json, r#"{"a":"1197","b":"-3","c":["16","21"]}"#);
        assert_eq!(serde_json::from_str::<Sample>(&json).unwrap(), v);

        let none = Sample { a: 0, b: None, c: None };
        let json = serde_json::to_string(&none).unwrap();
        assert_eq!(json, r#"{"a":"0","b":null,"c":null}"#);
        assert_eq!(serde_json::from_str::<Sample>(&json).unwrap(), none);
    }

    #[test]
    fn garbage_strings_are_rejected() {
        assert!(serde_json::from_str::<Sample>(r#"{"a":"12x","b":null,"c":null}"#).is_err());
    }
}

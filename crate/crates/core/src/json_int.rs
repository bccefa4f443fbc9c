//! Serde helpers for integers that must survive JSON consumers limited to
//! IEEE doubles. Magnitudes above 2^53 are written as decimal strings; both
//! forms are accepted on input.

use std::fmt::Display;
use std::str::FromStr;

use serde::de::{self, Deserializer, Visitor};
use serde::Serializer;

const SAFE: u128 = 1 << 53;

/// Integer types handled by this module.
pub trait JsonInt: Copy + Display + FromStr + TryFrom<u64> + TryFrom<i64> {
    fn to_i128(self) -> i128;
}

macro_rules! impl_json_int {
    ($($t:ty),*) => {$(
        impl JsonInt for $t {
            fn to_i128(self) -> i128 {
                self as i128
            }
        }
    )*};
}

impl_json_int!(u64, i64, usize, i128);

pub fn serialize<T: JsonInt, S: Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
    let x = v.to_i128();
    if x.unsigned_abs() > SAFE {
        s.serialize_str(&x.to_string())
    } else if x < 0 {
        s.serialize_i64(x as i64)
    } else {
        s.serialize_u64(x as u64)
    }
}

pub fn deserialize<'de, T: JsonInt, D: Deserializer<'de>>(d: D) -> Result<T, D::Error> {
    struct V<T>(std::marker::PhantomData<T>);

    impl<T: JsonInt> Visitor<'_> for V<T> {
        type Value = T;

        fn expecting(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
            f.write_str("an integer or a decimal string")
        }

        fn visit_u64<E: de::Error>(self, v: u64) -> Result<T, E> {
            T::try_from(v).map_err(|_| E::custom("integer out of range"))
        }

        fn visit_i64<E: de::Error>(self, v: i64) -> Result<T, E> {
            T::try_from(v).map_err(|_| E::custom("integer out of range"))
        }

        fn visit_str<E: de::Error>(self, v: &str) -> Result<T, E> {
            v.parse().map_err(|_| E::custom("malformed integer string"))
        }
    }

    d.deserialize_any(V(std::marker::PhantomData))
}

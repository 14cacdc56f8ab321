//! Max-plus scalars and residuation.
//!
//! The max-plus semiring is `R ∪ {-inf}` with
//! - addition (⊕) = maximum, neutral element 𝟘 = -inf
//! - multiplication (⊙) = ordinary addition, neutral element 𝟙 = 0
//!
//! `-inf` is a separate variant rather than a float sentinel, so `𝟘 ⊙ x = 𝟘`
//! holds structurally for every scalar type (including integers and
//! rationals) and residuals never produce NaN.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul};

use num_traits::{FromPrimitive, Num, Signed, ToPrimitive};
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Underlying ordered field for finite max-plus values.
///
/// Implemented for every signed numeric type from `num-traits`: `f32`, `f64`,
/// the signed integers, and `num_rational::Ratio<i64>`.
pub trait Scalar:
    Copy
    + PartialOrd
    + fmt::Debug
    + fmt::Display
    + Num
    + Signed
    + FromPrimitive
    + ToPrimitive
    + Send
    + Sync
    + 'static
{
    /// `|self - other| <= tol`. With `tol = 0` this is exact equality.
    fn approx_eq(self, other: Self, tol: Self) -> bool {
        (self - other).abs() <= tol
    }

    fn partial_max(self, other: Self) -> Self {
        if other > self {
            other
        } else {
            self
        }
    }

    fn partial_min(self, other: Self) -> Self {
        if other < self {
            other
        } else {
            self
        }
    }
}

impl<T> Scalar for T where
    T: Copy
        + PartialOrd
        + fmt::Debug
        + fmt::Display
        + Num
        + Signed
        + FromPrimitive
        + ToPrimitive
        + Send
        + Sync
        + 'static
{
}

/// An element of the max-plus semiring.
///
/// Variant order gives the semiring order: `NegInf` is below every finite
/// value.
#[derive(Clone, Copy, Debug, Default, PartialEq, PartialOrd)]
pub enum MaxPlus<T> {
    #[default]
    NegInf,
    Finite(T),
}

impl<T: Scalar> MaxPlus<T> {
    /// 𝟘 = -inf.
    pub fn zero() -> Self {
        MaxPlus::NegInf
    }

    /// 𝟙 = 0.
    pub fn one() -> Self {
        MaxPlus::Finite(T::zero())
    }

    pub fn finite(v: T) -> Self {
        MaxPlus::Finite(v)
    }

    /// Lossy conversion used by parsers: `-inf` maps to 𝟘, other non-finite
    /// values are rejected.
    pub fn from_f64(v: f64) -> Option<Self> {
        if v == f64::NEG_INFINITY {
            Some(MaxPlus::NegInf)
        } else if v.is_finite() {
            T::from_f64(v).map(MaxPlus::Finite)
        } else {
            None
        }
    }

    pub fn to_f64(self) -> f64 {
        match self {
            MaxPlus::NegInf => f64::NEG_INFINITY,
            MaxPlus::Finite(v) => v.to_f64().unwrap_or(f64::NAN),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, MaxPlus::NegInf)
    }

    pub fn value(&self) -> Option<T> {
        match *self {
            MaxPlus::NegInf => None,
            MaxPlus::Finite(v) => Some(v),
        }
    }

    /// Multiplicative inverse; 𝟘 has none.
    pub fn inverse(self) -> Option<Self> {
        self.value().map(|v| MaxPlus::Finite(-v))
    }

    /// Greatest `λ` with `λ ⊙ a ≤ b`.
    pub fn residual(b: Self, a: Self) -> Residual<T> {
        match (b, a) {
            (_, MaxPlus::NegInf) => Residual::PosInf,
            (MaxPlus::NegInf, MaxPlus::Finite(_)) => Residual::NegInf,
            (MaxPlus::Finite(b), MaxPlus::Finite(a)) => Residual::Finite(b - a),
        }
    }

    /// Equality up to an absolute tolerance on finite values. 𝟘 only equals 𝟘.
    pub fn approx_eq(self, other: Self, tol: T) -> bool {
        match (self, other) {
            (MaxPlus::NegInf, MaxPlus::NegInf) => true,
            (MaxPlus::Finite(a), MaxPlus::Finite(b)) => a.approx_eq(b, tol),
            _ => false,
        }
    }

    /// Total order for sorting; inputs never hold NaN.
    pub fn total_cmp(&self, other: &Self) -> Ordering {
        self.partial_cmp(other).unwrap_or(Ordering::Equal)
    }
}

impl<T: Scalar> From<T> for MaxPlus<T> {
    fn from(v: T) -> Self {
        MaxPlus::Finite(v)
    }
}

/// Max-plus addition: the maximum.
impl<T: Scalar> Add for MaxPlus<T> {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        match (self, rhs) {
            (MaxPlus::NegInf, x) | (x, MaxPlus::NegInf) => x,
            (MaxPlus::Finite(a), MaxPlus::Finite(b)) => MaxPlus::Finite(a.partial_max(b)),
        }
    }
}

/// Max-plus multiplication: ordinary addition, 𝟘 absorbing.
impl<T: Scalar> Mul for MaxPlus<T> {
    type Output = Self;

    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: Self) -> Self {
        match (self, rhs) {
            (MaxPlus::Finite(a), MaxPlus::Finite(b)) => MaxPlus::Finite(a + b),
            _ => MaxPlus::NegInf,
        }
    }
}

impl<T: Scalar> fmt::Display for MaxPlus<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MaxPlus::NegInf => f.write_str("-inf"),
            MaxPlus::Finite(v) => write!(f, "{v}"),
        }
    }
}

/// A residual `b / a`, living in `R ∪ {-inf, +inf}`.
///
/// `+inf` shows up only when dividing by 𝟘 and never enters a vector.
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd)]
pub enum Residual<T> {
    NegInf,
    Finite(T),
    PosInf,
}

impl<T: Scalar> Residual<T> {
    pub fn min(self, other: Self) -> Self {
        match (self, other) {
            (Residual::Finite(a), Residual::Finite(b)) => Residual::Finite(a.partial_min(b)),
            (a, b) => {
                if b < a {
                    b
                } else {
                    a
                }
            }
        }
    }

    /// Converts back into the semiring; fails on `+inf`.
    pub fn to_max_plus(self) -> Result<MaxPlus<T>> {
        match self {
            Residual::NegInf => Ok(MaxPlus::NegInf),
            Residual::Finite(v) => Ok(MaxPlus::Finite(v)),
            Residual::PosInf => Err(Error::InfiniteResidual),
        }
    }

    /// Like [`Residual::to_max_plus`] but sends `+inf` to 𝟘.
    pub fn clamp(self) -> MaxPlus<T> {
        match self {
            Residual::Finite(v) => MaxPlus::Finite(v),
            _ => MaxPlus::NegInf,
        }
    }
}

impl<T: Scalar> From<MaxPlus<T>> for Residual<T> {
    fn from(v: MaxPlus<T>) -> Self {
        match v {
            MaxPlus::NegInf => Residual::NegInf,
            MaxPlus::Finite(v) => Residual::Finite(v),
        }
    }
}

// JSON: finite values are numbers (integral values as integers), 𝟘 is "-inf".

impl<T: Scalar> Serialize for MaxPlus<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match *self {
            MaxPlus::NegInf => serializer.serialize_str("-inf"),
            MaxPlus::Finite(v) => {
                let f = v.to_f64().ok_or_else(|| serde::ser::Error::custom("value not representable"))?;
                if f.fract() == 0.0 && f.abs() < 9.0e15 {
                    serializer.serialize_i64(f as i64)
                } else {
                    serializer.serialize_f64(f)
                }
            }
        }
    }
}

struct MaxPlusVisitor<T>(std::marker::PhantomData<T>);

impl<'de, T: Scalar> Visitor<'de> for MaxPlusVisitor<T> {
    type Value = MaxPlus<T>;

    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str("a finite number or the string \"-inf\"")
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<Self::Value, E> {
        T::from_i64(v)
            .map(MaxPlus::Finite)
            .ok_or_else(|| E::custom(format!("{v} out of range")))
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<Self::Value, E> {
        T::from_u64(v)
            .map(MaxPlus::Finite)
            .ok_or_else(|| E::custom(format!("{v} out of range")))
    }

    fn visit_f64<E: de::Error>(self, v: f64) -> std::result::Result<Self::Value, E> {
        if !v.is_finite() {
            return Err(E::custom("non-finite number"));
        }
        T::from_f64(v)
            .map(MaxPlus::Finite)
            .ok_or_else(|| E::custom(format!("{v} out of range")))
    }

    fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<Self::Value, E> {
        if v == "-inf" {
            Ok(MaxPlus::NegInf)
        } else {
            Err(E::invalid_value(de::Unexpected::Str(v), &self))
        }
    }
}

impl<'de, T: Scalar> Deserialize<'de> for MaxPlus<T> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        deserializer.deserialize_any(MaxPlusVisitor(std::marker::PhantomData))
    }
}

#![allow(dead_code)]

pub mod oracle;

use maxplus_convex::{MaxPlus, TropVector};
use proptest::prelude::*;

use oracle::IVec;

pub fn to_ivec(v: &TropVector<i64>) -> IVec {
    v.iter().map(|c| c.value()).collect()
}

pub fn from_ivec(v: &IVec) -> TropVector<i64> {
    TropVector::new(v.iter().map(|c| c.map_or(MaxPlus::NegInf, MaxPlus::Finite)).collect())
}

pub fn entry() -> impl Strategy<Value = Option<i64>> {
    prop_oneof![1 => Just(None), 5 => (-5i64..=5).prop_map(Some)]
}

pub fn ivec(n: usize) -> impl Strategy<Value = IVec> {
    prop::collection::vec(entry(), n)
}

/// Nonzero integer vector.
pub fn nonzero_ivec(n: usize) -> impl Strategy<Value = IVec> {
    ivec(n).prop_filter("nonzero", |v| v.iter().any(Option::is_some))
}

pub fn coeff() -> impl Strategy<Value = MaxPlus<i64>> {
    prop_oneof![1 => Just(MaxPlus::NegInf), 4 => (-6i64..=6).prop_map(MaxPlus::Finite)]
}

/// Coefficients whose max-plus sum is 𝟙: entries in [-6, 0], one forced to 0.
pub fn convex_coeffs(len: usize) -> impl Strategy<Value = Vec<MaxPlus<i64>>> {
    (
        prop::collection::vec(prop_oneof![1 => Just(MaxPlus::NegInf), 4 => (-6i64..=0).prop_map(MaxPlus::Finite)], len),
        0..len,
    )
        .prop_map(|(mut c, top)| {
            c[top] = MaxPlus::Finite(0);
            c
        })
}

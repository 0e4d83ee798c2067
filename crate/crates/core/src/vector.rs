//! Exponent vectors over `N` and lattice vectors over `Z`.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{ToPrimitive, Zero};
use serde::ser::{Serialize, SerializeSeq, Serializer};

use crate::error::{Error, Result};

/// A vector of naturals, used for exponent vectors `γ ∈ N^p` and ambient points of `N^d`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct NVec(Vec<BigUint>);

/// A vector of integers, used for lattice elements of `G ⊆ Z^p`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ZVec(Vec<BigInt>);

impl NVec {
    pub fn new(entries: Vec<BigUint>) -> Self {
        NVec(entries)
    }

    pub fn zeros(len: usize) -> Self {
        NVec(vec![BigUint::zero(); len])
    }

    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = Self::zeros(len);
        v.0[i] = BigUint::from(1u32);
        v
    }

    pub fn from_u64s(xs: &[u64]) -> Self {
        NVec(xs.iter().map(|&x| BigUint::from(x)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn entries(&self) -> &[BigUint] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<BigUint> {
        self.0
    }

    /// Sum of the coordinates.
    pub fn norm(&self) -> BigUint {
        self.0.iter().sum()
    }

    /// Componentwise order: `self ≤ other` iff `other − self ∈ N^p`.
    pub fn le(&self, other: &NVec) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Componentwise maximum.
    pub fn join(&self, other: &NVec) -> Result<NVec> {
        check_arity(self.len(), other.len())?;
        Ok(NVec(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.max(b).clone())
                .collect(),
        ))
    }

    pub fn add(&self, other: &NVec) -> Result<NVec> {
        check_arity(self.len(), other.len())?;
        Ok(NVec(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect()))
    }

    pub fn scale(&self, k: &BigUint) -> NVec {
        NVec(self.0.iter().map(|a| a * k).collect())
    }

    pub fn to_zvec(&self) -> ZVec {
        ZVec(self.0.iter().map(|a| BigInt::from(a.clone())).collect())
    }

    /// Returns `None` if some coordinate does not fit a `u64`.
    pub fn to_u64s(&self) -> Option<Vec<u64>> {
        self.0.iter().map(ToPrimitive::to_u64).collect()
    }
}

impl ZVec {
    pub fn new(entries: Vec<BigInt>) -> Self {
        ZVec(entries)
    }

    pub fn from_i64s(xs: &[i64]) -> Self {
        ZVec(xs.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.0
    }

    pub fn neg(&self) -> ZVec {
        ZVec(self.0.iter().map(|a| -a).collect())
    }

    /// Flips the sign so that the first nonzero entry is positive.
    pub fn normalize_sign(self) -> ZVec {
        match self.0.iter().find(|a| !a.is_zero()).map(BigInt::sign) {
            Some(Sign::Minus) => self.neg(),
            _ => self,
        }
    }

    /// `Some` iff every entry is nonnegative.
    pub fn to_nvec(&self) -> Option<NVec> {
        self.0
            .iter()
            .map(|a| a.to_biguint())
            .collect::<Option<Vec<_>>>()
            .map(NVec)
    }
}

pub(crate) fn check_arity(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::MixedArity { expected, found })
    }
}

/// Partial-order comparison under the componentwise order.
pub fn compare(a: &NVec, b: &NVec) -> Option<Ordering> {
    match (a.le(b), b.le(a)) {
        (true, true) => Some(Ordering::Equal),
        (true, false) => Some(Ordering::Less),
        (false, true) => Some(Ordering::Greater),
        (false, false) => None,
    }
}

fn write_tuple<T: fmt::Display>(f: &mut fmt::Formatter<'_>, xs: &[T]) -> fmt::Result {
    write!(f, "(")?;
    for (i, x) in xs.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{x}")?;
    }
    write!(f, ")")
}

impl fmt::Display for NVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

impl fmt::Display for ZVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

/// Serializes a big natural as a JSON number when it fits `u64`, else as a decimal string.
pub(crate) fn serialize_biguint<S: Serializer>(x: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    match x.to_u64() {
        Some(v) => s.serialize_u64(v),
        None => s.serialize_str(&x.to_string()),
    }
}

pub(crate) fn serialize_bigint<S: Serializer>(x: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    match x.to_i64() {
        Some(v) => s.serialize_i64(v),
        None => s.serialize_str(&x.to_string()),
    }
}

struct BigUintRef<'a>(&'a BigUint);

impl Serialize for BigUintRef<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        serialize_biguint(self.0, s)
    }
}

struct BigIntRef<'a>(&'a BigInt);

impl Serialize for BigIntRef<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        serialize_bigint(self.0, s)
    }
}

impl Serialize for NVec {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.0.len()))?;
        for x in &self.0 {
            seq.serialize_element(&BigUintRef(x))?;
        }
        seq.end()
    }
}

impl Serialize for ZVec {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.0.len()))?;
        for x in &self.0 {
            seq.serialize_element(&BigIntRef(x))?;
        }
        seq.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn norm_and_join() {
        let a = NVec::from_u64s(&[1, 5, 0]);
        let b = NVec::from_u64s(&[3, 2, 0]);
        assert_eq!(a.norm(), BigUint::from(6u32));
        assert_eq!(a.join(&b).unwrap(), NVec::from_u64s(&[3, 5, 0]));
        assert_eq!(compare(&a, &b), None);
        assert_eq!(compare(&b, &b.join(&a).unwrap()), Some(Ordering::Less));
    }

    #[test]
    fn join_rejects_mixed_arity() {
        let a = NVec::from_u64s(&[1]);
        let b = NVec::from_u64s(&[1, 2]);
        assert_eq!(
            a.join(&b),
            Err(Error::MixedArity {
                expected: 1,
                found: 2
            })
        );
    }

    #[test]
    fn sign_normalization() {
        let z = ZVec::from_i64s(&[0, -5, 3]).normalize_sign();
        assert_eq!(z, ZVec::from_i64s(&[0, 5, -3]));
        assert_eq!(ZVec::from_i64s(&[2, -1]).to_nvec(), None);
    }

    #[test]
    fn big_entries_serialize_as_strings() {
        let big = BigUint::from(u64::MAX) * 10u32;
        let v = NVec::new(vec![BigUint::from(7u32), big.clone()]);
        let json = serde_json::to_string(&v).unwrap();
        assert_eq!(json, format!("[7,\"{big}\"]"));
    }
}

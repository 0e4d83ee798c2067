use std::cmp::Ordering;

use num_bigint::BigUint;
use num_traits::Zero;
use serde::{Serialize, Serializer};

use crate::error::Result;
use crate::vector::{check_arity, NVec};

/// A finite set of pairwise incomparable vectors, kept in ascending lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Antichain {
    elements: Vec<NVec>,
}

impl Antichain {
    pub fn empty() -> Self {
        Antichain::default()
    }

    /// Wraps vectors already known to be pairwise incomparable.
    pub(crate) fn from_minimal_unchecked(mut elements: Vec<NVec>) -> Self {
        elements.sort();
        elements.dedup();
        debug_assert!(is_antichain(&elements));
        Antichain { elements }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, NVec> {
        self.elements.iter()
    }

    pub fn as_slice(&self) -> &[NVec] {
        &self.elements
    }

    pub fn contains(&self, v: &NVec) -> bool {
        self.elements.binary_search(v).is_ok()
    }

    /// Largest coordinate sum among the elements (zero for the empty set).
    pub fn max_norm(&self) -> BigUint {
        self.elements
            .iter()
            .map(NVec::norm)
            .max()
            .unwrap_or_else(BigUint::zero)
    }

    /// Elements attaining [`Antichain::max_norm`].
    pub fn argmax_norm(&self) -> Vec<NVec> {
        let m = self.max_norm();
        self.elements.iter().filter(|v| v.norm() == m).cloned().collect()
    }

    /// True iff some element lies below `v`.
    pub fn dominated(&self, v: &NVec) -> bool {
        self.elements.iter().any(|e| e.le(v))
    }
}

impl<'a> IntoIterator for &'a Antichain {
    type Item = &'a NVec;
    type IntoIter = std::slice::Iter<'a, NVec>;

    fn into_iter(self) -> Self::IntoIter {
        self.elements.iter()
    }
}

impl Serialize for Antichain {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.elements.serialize(s)
    }
}

fn is_antichain(xs: &[NVec]) -> bool {
    xs.iter()
        .enumerate()
        .all(|(i, a)| xs[i + 1..].iter().all(|b| !a.le(b) && !b.le(a)))
}

/// Keeps exactly the inputs not strictly dominated by another input.
pub fn minimals_filter<I>(vs: I) -> Result<Antichain>
where
    I: IntoIterator<Item = NVec>,
{
    let mut vs: Vec<NVec> = vs.into_iter().collect();
    if let Some(first) = vs.first() {
        let n = first.len();
        for v in &vs {
            check_arity(n, v.len())?;
        }
    }
    vs.sort();
    vs.dedup();
    // a vector can only be dominated by one of strictly smaller norm
    let mut by_norm: Vec<(BigUint, NVec)> = vs.into_iter().map(|v| (v.norm(), v)).collect();
    by_norm.sort_by(|a, b| match a.0.cmp(&b.0) {
        Ordering::Equal => a.1.cmp(&b.1),
        o => o,
    });
    let mut kept: Vec<NVec> = Vec::new();
    for (_, v) in by_norm {
        if !kept.iter().any(|k| k.le(&v)) {
            kept.push(v);
        }
    }
    Ok(Antichain::from_minimal_unchecked(kept))
}

//! Bounded brute force for `Minimals(E([γ]σ + S))`, used to validate the engine.

use num_bigint::{BigInt, BigUint};
use num_traits::{ToPrimitive, Zero};

use super::{e_membership, minimals_filter, Antichain, Limits};
use crate::asymptotic::k_vector;
use crate::error::{Error, Result};
use crate::semigroup::{frobenius, Monoid, SemigroupSpec};
use crate::vector::{check_arity, NVec};

/// How a search bound measures a vector `x`: `Σ wᵢ·xᵢ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BoundMetric {
    /// Numerical semigroups: the value `Σ xᵢ·sᵢ`.
    Value(Vec<BigUint>),
    /// Quasi-Archimedean monoids: `Σ (K/kᵢ)·xᵢ` with `K = k₁⋯k_p`.
    Weighted(Vec<BigUint>),
}

impl BoundMetric {
    pub fn weights(&self) -> &[BigUint] {
        match self {
            BoundMetric::Value(w) | BoundMetric::Weighted(w) => w,
        }
    }

    pub fn measure(&self, x: &NVec) -> BigUint {
        self.weights().iter().zip(x.entries()).map(|(w, a)| w * a).sum()
    }
}

/// Right-hand side of the quasi-Archimedean bound
/// `Σ K/kᵢ + (p−1)·K + n·Σ (K/kᵢ)·γᵢ` with `K = k₁⋯k_p`.
///
/// Every minimal element of `E(n[γ]σ + S)` has weighted norm `Σ (K/kᵢ)·xᵢ` at most this.
pub fn qa_search_bound(k: &NVec, gamma: &NVec, n: &BigUint) -> Result<BigUint> {
    check_arity(k.len(), gamma.len())?;
    if k.entries().iter().any(Zero::is_zero) {
        return Err(Error::InvalidSpec("k-vector entries must be positive".into()));
    }
    let weights = qa_weights(k);
    let big_k: BigUint = k.entries().iter().product();
    let p = k.len() as u64;
    let sum_w: BigUint = weights.iter().sum();
    let dot: BigUint = weights.iter().zip(gamma.entries()).map(|(w, g)| w * g).sum();
    Ok(sum_w + big_k * (p.saturating_sub(1)) + n * dot)
}

fn qa_weights(k: &NVec) -> Vec<BigUint> {
    let big_k: BigUint = k.entries().iter().product();
    k.entries().iter().map(|ki| &big_k / ki).collect()
}

/// The smallest bound the oracle accepts for `γ`, with its metric.
///
/// Numerical semigroups: if `x` is minimal and `xᵢ > 0` then
/// `Σ xⱼsⱼ − sᵢ − value(γ) ∉ S`, so `Σ xⱼsⱼ ≤ value(γ) + F(S) + max sᵢ`.
/// Other quasi-Archimedean monoids use [`qa_search_bound`] with `n = 1`.
pub fn sound_bound(monoid: &Monoid, gamma: &NVec) -> Result<(BoundMetric, BigUint)> {
    check_arity(monoid.arity(), gamma.len())?;
    if let SemigroupSpec::Numerical { generators } = monoid.spec() {
        let value = monoid.evaluate(gamma)?.entries()[0].clone();
        let f = frobenius(monoid.spec())?;
        let max = generators.iter().max().expect("nonempty").clone();
        let bound = BigInt::from(value) + f + BigInt::from(max);
        let bound = bound.to_biguint().expect("bound is nonnegative");
        return Ok((BoundMetric::Value(generators.clone()), bound));
    }
    let k = k_vector(monoid)?;
    let bound = qa_search_bound(&k.k, gamma, &BigUint::from(1u32))?;
    Ok((BoundMetric::Weighted(qa_weights(&k.k)), bound))
}

/// Enumerates every `x` with metric at most `bound`, keeps members of the
/// ideal and returns the minimal ones.
///
/// Rejects bounds below [`sound_bound`].
pub fn brute_minimals_bounded(
    monoid: &Monoid,
    gamma: &NVec,
    bound: &BigUint,
    limits: &Limits,
) -> Result<Antichain> {
    let (metric, required) = sound_bound(monoid, gamma)?;
    if *bound < required {
        return Err(Error::UnsoundBound {
            given: bound.to_string(),
            required: required.to_string(),
        });
    }
    let too_large = |x: &BigUint| Error::TooLarge(x.to_string());
    let weights: Vec<u64> = metric
        .weights()
        .iter()
        .map(|w| w.to_u64().ok_or_else(|| too_large(w)))
        .collect::<Result<_>>()?;
    let cap = bound.to_u64().ok_or_else(|| too_large(bound))?;

    let mut search = Search {
        monoid,
        gamma,
        weights: &weights,
        limits,
        x: vec![0; weights.len()],
        members: Vec::new(),
        visited: 0,
    };
    search.descend(0, cap)?;
    let members = std::mem::take(&mut search.members);
    minimals_filter(members.into_iter().map(|x| NVec::from_u64s(&x)))
}

struct Search<'a> {
    monoid: &'a Monoid,
    gamma: &'a NVec,
    weights: &'a [u64],
    limits: &'a Limits,
    x: Vec<u64>,
    members: Vec<Vec<u64>>,
    visited: u64,
}

impl Search<'_> {
    /// Fills coordinates `i..` with budget `room`. Once the current prefix
    /// (zero-padded) is a member, every extension dominates it, so only the
    /// prefix itself is recorded.
    fn descend(&mut self, i: usize, room: u64) -> Result<()> {
        let p = self.weights.len();
        if i == p {
            return Ok(());
        }
        let w = self.weights[i];
        let mut used = 0u64;
        loop {
            // x_i = 0 repeats the parent vector, already known to be outside the ideal
            let fresh = self.x[i] > 0 || i == 0;
            if fresh {
                self.visited += 1;
                if self.visited > self.limits.max_nodes {
                    return Err(Error::resource(self.visited, self.limits.max_nodes));
                }
                let v = NVec::from_u64s(&self.x);
                if e_membership(self.monoid, self.gamma, &v, self.limits)? {
                    self.members.push(self.x.clone());
                    break;
                }
            }
            self.descend(i + 1, room - used)?;
            if used + w > room {
                break;
            }
            used += w;
            self.x[i] += 1;
        }
        self.x[i] = 0;
        Ok(())
    }
}

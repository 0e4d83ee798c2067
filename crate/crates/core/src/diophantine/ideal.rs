//! Minimal elements of `E([γ]σ + S)`, the exponent vectors whose class is a
//! multiple of `[γ]σ`.
//!
//! Ambient modes solve `A·x − A·y = A·γ`; presentation modes solve
//! `x − δ − B·z⁺ + B·z⁻ = γ`. In both cases the minimal `x` are the
//! projections of minimal solutions.
//!
//! If `x` is minimal in `E`, then `x = (γ + g) ∨ 0` for some `g ∈ G`, and the
//! matching cofactor is `(γ + g)⁻`, whose support is disjoint from `x`. So the
//! search may forbid `x_i` and `y_i` (resp. `x_i` and `δ_i`, `z⁺_j` and `z⁻_j`)
//! from being positive together. Such a pair `(x, y)` is a minimal solution
//! because the monoid is reduced: any smaller solution `(x, y')` would give
//! `A·(y − y') = 0` with `y − y' ∈ N^p`, forcing `y' = y`.
//!
//! Numerical semigroups get two more cuts from the Apéry table of the smallest
//! generator `s₁`. The cofactor `y` only needs to be one factorization of
//! `A·x − A·γ`, and the one with the largest `s₁` count has the rest of its
//! value in the Apéry set; that property is inherited by every `y' ≤ y`. A
//! branch also closes as soon as its `x` lies in `E`, since every `x` on a path
//! to a minimal element stays below it. Both cuts bound the search on their
//! own, so the homogeneous part is skipped.

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::frontier::{Frontier, Guide, Verdict};
use super::{find_solution, minimals_filter, solve_restricted, Antichain, IntMatrix, Limits};
use crate::error::Result;
use crate::semigroup::{Monoid, Structure};
use crate::vector::{check_arity, NVec, ZVec};

/// `Minimals{x ∈ N^p : [x]σ ∈ [γ]σ + S}`.
pub fn ideal_preimage_minimals(monoid: &Monoid, gamma: &NVec, limits: &Limits) -> Result<Antichain> {
    let p = monoid.arity();
    check_arity(p, gamma.len())?;
    let (system, rhs, exclusive) = match monoid.lattice_system() {
        None => {
            let a = monoid.generator_matrix().expect("ambient mode");
            let system = a.hstack(&a.neg())?;
            let rhs = a.mul_nvec(gamma)?;
            let exclusive: Vec<_> = (0..p).map(|i| (i, p + i)).collect();
            (system, rhs, exclusive)
        }
        Some(lat) => {
            let lat = lat?;
            let r = monoid.lattice_basis().map_or(0, <[ZVec]>::len);
            // columns: x | −δ | −B z⁺ | B z⁻
            let id = IntMatrix::identity(p);
            let mut system = id.hstack(&id.neg())?;
            if r > 0 {
                let b_cols: Vec<ZVec> = (p..p + 2 * r).map(|j| lat.column(j)).collect();
                system = system.hstack(&IntMatrix::from_columns(&b_cols)?)?;
            }
            let mut exclusive: Vec<_> = (0..p).map(|i| (i, p + i)).collect();
            exclusive.extend((0..r).map(|j| (2 * p + j, 2 * p + r + j)));
            (system, gamma.to_zvec(), exclusive)
        }
    };
    if let Structure::Numerical { gens, apery, .. } = &monoid.structure {
        let guide = NumericalGuide {
            gens,
            apery,
            target: value_u128(gens, gamma),
        };
        let found = Frontier {
            matrix: &system,
            rhs: Some(rhs.entries()),
            exclusive: &exclusive,
            first_only: false,
            max_nodes: limits.max_nodes,
            guide: Some(&guide),
        }
        .run()?;
        return minimals_filter(
            found
                .accepted
                .iter()
                .chain(&found.inhomogeneous)
                .map(|c| NVec::new(c[..p].iter().map(|&v| v.into()).collect())),
        );
    }
    let solutions = solve_restricted(&system, &rhs, &exclusive, limits)?;
    minimals_filter(solutions.iter().map(|s| NVec::new(s.entries()[..p].to_vec())))
}

/// Whether `[x]σ ∈ [γ]σ + S`.
pub fn e_membership(monoid: &Monoid, gamma: &NVec, x: &NVec, limits: &Limits) -> Result<bool> {
    let p = monoid.arity();
    check_arity(p, gamma.len())?;
    check_arity(p, x.len())?;
    match &monoid.structure {
        Structure::Numerical { .. } => {
            let a = monoid.evaluate(x)?.entries()[0].clone();
            let b = monoid.evaluate(gamma)?.entries()[0].clone();
            Ok(a >= b && monoid.numerical_contains(&(a - b)))
        }
        Structure::Affine { matrix } => {
            let diff = matrix.mul_zvec(&diff(x, gamma))?;
            match diff.to_nvec() {
                None => Ok(false),
                Some(v) => Ok(find_solution(matrix, &v.to_zvec(), &[], limits)?.is_some()),
            }
        }
        Structure::Lattice { basis } => {
            // δ + B z⁺ − B z⁻ = x − γ
            let r = basis.len();
            let mut system = IntMatrix::identity(p);
            if r > 0 {
                let b = IntMatrix::from_columns(basis)?;
                system = system.hstack(&b)?.hstack(&b.neg())?;
            }
            let exclusive: Vec<_> = (0..r).map(|j| (p + j, p + r + j)).collect();
            Ok(find_solution(&system, &diff(x, gamma), &exclusive, limits)?.is_some())
        }
    }
}

/// Cuts for the numerical system `A·x − A·y = A·γ`, unknowns `x | y`.
struct NumericalGuide<'a> {
    gens: &'a [u64],
    apery: &'a [u128],
    target: u128,
}

impl NumericalGuide<'_> {
    fn contains(&self, n: u128) -> bool {
        n >= self.apery[(n % self.gens[0] as u128) as usize]
    }

    fn in_e(&self, value: u128) -> bool {
        value >= self.target && self.contains(value - self.target)
    }
}

impl Guide for NumericalGuide<'_> {
    fn inhomogeneous_only(&self) -> bool {
        true
    }

    fn inspect(&self, counts: &[u32]) -> Verdict {
        let p = self.gens.len();
        let (x, y) = counts.split_at(p);
        let rest = dot(&y[1..], &self.gens[1..]);
        if rest != self.apery[(rest % self.gens[0] as u128) as usize] {
            return Verdict::Prune;
        }
        let value = dot(x, self.gens);
        if !self.in_e(value) {
            return Verdict::Continue;
        }
        let minimal = x
            .iter()
            .zip(self.gens)
            .all(|(&c, &g)| c == 0 || !self.in_e(value - g as u128));
        if minimal {
            Verdict::Accept
        } else {
            Verdict::Prune
        }
    }
}

fn dot(counts: &[u32], gens: &[u64]) -> u128 {
    counts
        .iter()
        .zip(gens)
        .map(|(&c, &g)| c as u128 * g as u128)
        .sum()
}

fn value_u128(gens: &[u64], v: &NVec) -> u128 {
    v.entries()
        .iter()
        .zip(gens)
        .map(|(c, &g)| c.to_u128().expect("coordinate fits the residue table range") * g as u128)
        .sum()
}

fn diff(x: &NVec, y: &NVec) -> ZVec {
    ZVec::new(
        x.entries()
            .iter()
            .zip(y.entries())
            .map(|(a, b)| BigInt::from(a.clone()) - BigInt::from(b.clone()))
            .collect(),
    )
}

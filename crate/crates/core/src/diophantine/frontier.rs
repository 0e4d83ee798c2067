//! Breadth-first frontier search for minimal nonnegative solutions of `M·x = b`.
//!
//! The search starts from the unit vectors and extends a node `y` by `e_j` only
//! when `⟨M·y − b, M·e_j⟩ < 0`. Nodes that dominate an accepted solution are
//! pruned. This is complete and terminates by Dickson's lemma.
//!
//! Inhomogeneous systems are homogenized with an extra column `−b` whose
//! coefficient is pinned to at most one. Homogeneous solutions found along the
//! way are kept for pruning only.
//!
//! Optionally, pairs of columns can be declared exclusive (never both positive).
//! Every node on a search path lies below the solution it leads to, so a
//! restricted search still finds every minimal solution respecting the
//! exclusions.
//!
//! A [`Guide`] may inspect nodes to cut or close branches using knowledge the
//! linear system does not carry (for instance a membership table).

use std::collections::HashMap;
use std::hash::Hash;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::IntMatrix;
use crate::error::{Error, Result};

pub(crate) trait Scalar: Clone + Eq + Hash + Send + Sync + Sized {
    fn from_big(b: &BigInt) -> Option<Self>;
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    fn is_negative(&self) -> bool;
    fn add(&self, other: &Self) -> Option<Self>;
    fn mul(&self, other: &Self) -> Option<Self>;
}

impl Scalar for i64 {
    fn from_big(b: &BigInt) -> Option<Self> {
        b.to_i64()
    }
    fn zero() -> Self {
        0
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn is_negative(&self) -> bool {
        *self < 0
    }
    fn add(&self, other: &Self) -> Option<Self> {
        self.checked_add(*other)
    }
    fn mul(&self, other: &Self) -> Option<Self> {
        self.checked_mul(*other)
    }
}

impl Scalar for BigInt {
    fn from_big(b: &BigInt) -> Option<Self> {
        Some(b.clone())
    }
    fn zero() -> Self {
        Zero::zero()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_negative(&self) -> bool {
        self.sign() == num_bigint::Sign::Minus
    }
    fn add(&self, other: &Self) -> Option<Self> {
        Some(self + other)
    }
    fn mul(&self, other: &Self) -> Option<Self> {
        Some(self * other)
    }
}

/// Outcome of inspecting a node.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Verdict {
    Continue,
    Prune,
    /// Record the node in [`Found::accepted`] and stop extending it.
    Accept,
}

/// Extra per-node knowledge. Any pruning must be downward closed along the
/// search paths that lead to wanted solutions.
pub(crate) trait Guide: Sync {
    /// Skip homogeneous nodes entirely. Only sound when the guide alone keeps
    /// the inhomogeneous search finite.
    fn inhomogeneous_only(&self) -> bool;
    /// `counts` has one entry per column of the system, without the pinned one.
    fn inspect(&self, counts: &[u32]) -> Verdict;
}

/// A search request. Columns of `matrix` are the unknowns.
pub(crate) struct Frontier<'a> {
    pub matrix: &'a IntMatrix,
    /// `None` for the homogeneous system.
    pub rhs: Option<&'a [BigInt]>,
    pub exclusive: &'a [(usize, usize)],
    /// Stop at the first inhomogeneous solution (existence queries).
    pub first_only: bool,
    pub max_nodes: u64,
    pub guide: Option<&'a dyn Guide>,
}

#[derive(Debug, Default)]
pub(crate) struct Found {
    pub homogeneous: Vec<Vec<u32>>,
    pub inhomogeneous: Vec<Vec<u32>>,
    pub accepted: Vec<Vec<u32>>,
    pub explored: u64,
}

/// Counts per column and the current defect `M·y − b`.
type Node<T> = (Box<[u32]>, Box<[T]>);

enum Failure {
    Overflow,
    Limit(u64),
}

impl Frontier<'_> {
    pub fn run(&self) -> Result<Found> {
        match self.run_with::<i64>() {
            Ok(found) => Ok(found),
            Err(Failure::Overflow) => match self.run_with::<BigInt>() {
                Ok(found) => Ok(found),
                Err(Failure::Limit(n)) => Err(Error::resource(n, self.max_nodes)),
                Err(Failure::Overflow) => unreachable!("big integers do not overflow"),
            },
            Err(Failure::Limit(n)) => Err(Error::resource(n, self.max_nodes)),
        }
    }

    fn run_with<T: Scalar>(&self) -> std::result::Result<Found, Failure> {
        let rows = self.matrix.rows();
        let q = self.matrix.cols();
        let mut columns: Vec<Vec<T>> = (0..q)
            .map(|j| {
                (0..rows)
                    .map(|i| T::from_big(self.matrix.get(i, j)).ok_or(Failure::Overflow))
                    .collect()
            })
            .collect::<std::result::Result<_, _>>()?;
        // homogenizing column, index q
        let pinned = match self.rhs {
            Some(b) => {
                let col = b
                    .iter()
                    .map(|x| T::from_big(&-x).ok_or(Failure::Overflow))
                    .collect::<std::result::Result<Vec<_>, _>>()?;
                columns.push(col);
                Some(q)
            }
            None => None,
        };
        let width = columns.len();
        let mut partner = vec![None; width];
        for &(a, b) in self.exclusive {
            partner[a] = Some(b);
            partner[b] = Some(a);
        }

        let guided_only = pinned.is_some() && self.guide.is_some_and(|g| g.inhomogeneous_only());
        let mut index = SolutionIndex::default();
        let mut found = Found::default();

        let mut level: Vec<Node<T>> = Vec::new();
        for j in 0..width {
            if guided_only && Some(j) != pinned {
                continue;
            }
            let mut counts = vec![0u32; width].into_boxed_slice();
            counts[j] = 1;
            if self.keep(&counts, q, &mut found) {
                level.push((counts, columns[j].clone().into_boxed_slice()));
            }
        }

        while !level.is_empty() {
            found.explored += level.len() as u64;
            if found.explored > self.max_nodes {
                return Err(Failure::Limit(found.explored));
            }

            let mut open = Vec::with_capacity(level.len());
            for (counts, defect) in level {
                if defect.iter().all(T::is_zero) {
                    let is_inhom = pinned.is_some_and(|z| counts[z] > 0);
                    index.insert(&counts);
                    if is_inhom {
                        found.inhomogeneous.push(counts[..q].to_vec());
                        if self.first_only {
                            return Ok(found);
                        }
                    } else {
                        found.homogeneous.push(counts.to_vec());
                    }
                } else {
                    open.push((counts, defect));
                }
            }

            let mut next: HashMap<Box<[u32]>, Box<[T]>> = HashMap::new();
            for (counts, defect) in &open {
                for (j, col) in columns.iter().enumerate() {
                    if Some(j) == pinned {
                        continue;
                    }
                    if partner[j].is_some_and(|k| counts[k] > 0) {
                        continue;
                    }
                    if !dot(defect, col)?.is_negative() {
                        continue;
                    }
                    let mut child = counts.clone();
                    child[j] = child[j].checked_add(1).ok_or(Failure::Limit(found.explored))?;
                    if next.contains_key(&child)
                        || index.dominates(&child, j)
                        || !self.keep(&child, q, &mut found)
                    {
                        continue;
                    }
                    let d = defect
                        .iter()
                        .zip(col)
                        .map(|(a, c)| a.add(c).ok_or(Failure::Overflow))
                        .collect::<std::result::Result<Box<[T]>, _>>()?;
                    next.insert(child, d);
                }
            }
            level = next.into_iter().collect();
        }
        Ok(found)
    }

    /// Applies the guide; accepted nodes are recorded and not kept.
    fn keep(&self, counts: &[u32], q: usize, found: &mut Found) -> bool {
        match self.guide.map_or(Verdict::Continue, |g| g.inspect(&counts[..q])) {
            Verdict::Continue => true,
            Verdict::Prune => false,
            Verdict::Accept => {
                found.accepted.push(counts[..q].to_vec());
                false
            }
        }
    }
}

fn dot<T: Scalar>(a: &[T], b: &[T]) -> std::result::Result<T, Failure> {
    let mut acc = T::zero();
    for (x, y) in a.iter().zip(b) {
        let p = x.mul(y).ok_or(Failure::Overflow)?;
        acc = acc.add(&p).ok_or(Failure::Overflow)?;
    }
    Ok(acc)
}

/// Accepted solutions indexed by (column, value) for fast domination checks.
///
/// A child `y + e_j` of an undominated node `y` can only dominate a solution
/// `s` with `s_j = y_j + 1`.
#[derive(Default)]
struct SolutionIndex {
    solutions: Vec<(Box<[u32]>, u64)>,
    by_entry: HashMap<(usize, u32), Vec<usize>>,
}

fn support_mask(v: &[u32]) -> u64 {
    v.iter()
        .take(64)
        .enumerate()
        .filter(|(_, &c)| c > 0)
        .fold(0u64, |m, (i, _)| m | (1 << i))
}

impl SolutionIndex {
    fn insert(&mut self, s: &[u32]) {
        let id = self.solutions.len();
        self.solutions.push((s.into(), support_mask(s)));
        for (j, &c) in s.iter().enumerate() {
            if c > 0 {
                self.by_entry.entry((j, c)).or_default().push(id);
            }
        }
    }

    fn dominates(&self, child: &[u32], j: usize) -> bool {
        let Some(ids) = self.by_entry.get(&(j, child[j])) else {
            return false;
        };
        let mask = support_mask(child);
        ids.iter().any(|&id| {
            let (s, smask) = &self.solutions[id];
            smask & !mask == 0 && s.iter().zip(child).all(|(a, b)| a <= b)
        })
    }
}

//! Minimal nonnegative solutions of linear Diophantine systems, and the
//! minimal elements of preimage ideals `E([γ] + S)` built on top of them.

mod antichain;
mod frontier;
mod ideal;
mod oracle;

use num_bigint::BigInt;
use num_traits::Zero;

pub use antichain::{minimals_filter, Antichain};
pub use ideal::{e_membership, ideal_preimage_minimals};
pub use oracle::{brute_minimals_bounded, qa_search_bound, sound_bound, BoundMetric};

pub(crate) use frontier::Frontier;

use crate::error::{Error, Result};
use crate::vector::{check_arity, NVec, ZVec};

pub const DEFAULT_NODE_LIMIT: u64 = 10_000_000;

/// Caps on the frontier search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Total frontier nodes explored before giving up with `ResourceLimit`.
    pub max_nodes: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_nodes: DEFAULT_NODE_LIMIT,
        }
    }
}

/// A dense integer matrix, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if r == 0 || c == 0 {
            return Err(Error::InvalidSpec(
                "matrix needs at least one row and one column".into(),
            ));
        }
        for row in &rows {
            check_arity(c, row.len())?;
        }
        Ok(IntMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[ZVec]) -> Result<Self> {
        let r = cols.first().map_or(0, ZVec::len);
        let rows = (0..r)
            .map(|i| cols.iter().map(|c| c.entries()[i].clone()).collect())
            .collect();
        Self::from_rows(rows)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> ZVec {
        ZVec::new((0..self.rows).map(|i| self.get(i, j).clone()).collect())
    }

    pub fn mul_nvec(&self, x: &NVec) -> Result<ZVec> {
        check_arity(self.cols, x.len())?;
        Ok(ZVec::new(
            (0..self.rows)
                .map(|i| {
                    self.row(i)
                        .iter()
                        .zip(x.entries())
                        .map(|(a, b)| a * BigInt::from(b.clone()))
                        .sum()
                })
                .collect(),
        ))
    }

    pub fn mul_zvec(&self, x: &ZVec) -> Result<ZVec> {
        check_arity(self.cols, x.len())?;
        Ok(ZVec::new(
            (0..self.rows)
                .map(|i| self.row(i).iter().zip(x.entries()).map(|(a, b)| a * b).sum())
                .collect(),
        ))
    }

    /// `[self | other]`.
    pub fn hstack(&self, other: &IntMatrix) -> Result<IntMatrix> {
        check_arity(self.rows, other.rows)?;
        let rows = (0..self.rows)
            .map(|i| self.row(i).iter().chain(other.row(i)).cloned().collect())
            .collect();
        IntMatrix::from_rows(rows)
    }

    pub fn neg(&self) -> IntMatrix {
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| -x).collect(),
        }
    }

    pub fn identity(n: usize) -> IntMatrix {
        let rows = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { BigInt::from(1) } else { BigInt::zero() })
                    .collect()
            })
            .collect();
        IntMatrix::from_rows(rows).expect("n > 0")
    }
}

fn counts_to_nvec(c: &[u32]) -> NVec {
    NVec::new(c.iter().map(|&x| x.into()).collect())
}

/// All componentwise-minimal nonzero `x ∈ N^cols` with `M·x = 0`.
pub fn min_solutions_homogeneous(m: &IntMatrix, limits: &Limits) -> Result<Antichain> {
    let found = Frontier {
        matrix: m,
        rhs: None,
        exclusive: &[],
        first_only: false,
        max_nodes: limits.max_nodes,
        guide: None,
    }
    .run()?;
    Ok(Antichain::from_minimal_unchecked(
        found.homogeneous.iter().map(|c| counts_to_nvec(c)).collect(),
    ))
}

/// All componentwise-minimal `x ∈ N^cols` with `M·x = b`.
pub fn min_solutions_inhomogeneous(m: &IntMatrix, b: &ZVec, limits: &Limits) -> Result<Antichain> {
    solve_restricted(m, b, &[], limits)
}

/// Minimal solutions of `M·x = b` among those where no exclusive pair of
/// columns is simultaneously positive.
pub(crate) fn solve_restricted(
    m: &IntMatrix,
    b: &ZVec,
    exclusive: &[(usize, usize)],
    limits: &Limits,
) -> Result<Antichain> {
    check_arity(m.rows(), b.len())?;
    let found = Frontier {
        matrix: m,
        rhs: Some(b.entries()),
        exclusive,
        first_only: false,
        max_nodes: limits.max_nodes,
        guide: None,
    }
    .run()?;
    Ok(Antichain::from_minimal_unchecked(
        found.inhomogeneous.iter().map(|c| counts_to_nvec(c)).collect(),
    ))
}

/// Some solution of `M·x = b` in `N^cols` respecting the exclusions, if any exists.
pub(crate) fn find_solution(
    m: &IntMatrix,
    b: &ZVec,
    exclusive: &[(usize, usize)],
    limits: &Limits,
) -> Result<Option<NVec>> {
    check_arity(m.rows(), b.len())?;
    let found = Frontier {
        matrix: m,
        rhs: Some(b.entries()),
        exclusive,
        first_only: true,
        max_nodes: limits.max_nodes,
        guide: None,
    }
    .run()?;
    Ok(found.inhomogeneous.first().map(|c| counts_to_nvec(c)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nv(xs: &[&[u64]]) -> Vec<NVec> {
        xs.iter().map(|x| NVec::from_u64s(x)).collect()
    }

    /// All `x ≤ cap` (componentwise) with `M·x = b`, minimal-filtered.
    fn enumerate_minimal(m: &IntMatrix, b: &[i64], cap: u64, nonzero: bool) -> Vec<NVec> {
        let q = m.cols();
        let mut out = Vec::new();
        let mut x = vec![0u64; q];
        loop {
            let v = NVec::from_u64s(&x);
            if !(nonzero && v.is_zero()) && m.mul_nvec(&v).unwrap() == ZVec::from_i64s(b) {
                out.push(v);
            }
            let mut i = 0;
            while i < q && x[i] == cap {
                x[i] = 0;
                i += 1;
            }
            if i == q {
                break;
            }
            x[i] += 1;
        }
        minimals_filter(out).unwrap().as_slice().to_vec()
    }

    #[test]
    fn homogeneous_small_cases() {
        let lim = Limits::default();
        let m = IntMatrix::from_i64_rows(&[&[1, -1]]).unwrap();
        assert_eq!(
            min_solutions_homogeneous(&m, &lim).unwrap().as_slice(),
            nv(&[&[1, 1]])
        );
        let m = IntMatrix::from_i64_rows(&[&[2, -3]]).unwrap();
        assert_eq!(
            min_solutions_homogeneous(&m, &lim).unwrap().as_slice(),
            nv(&[&[3, 2]])
        );
    }

    #[test]
    fn homogeneous_three_columns_matches_enumeration() {
        let m = IntMatrix::from_i64_rows(&[&[3, 5, -15]]).unwrap();
        let got = min_solutions_homogeneous(&m, &Limits::default()).unwrap();
        let expected = enumerate_minimal(&m, &[0], 15, true);
        assert_eq!(expected, nv(&[&[0, 3, 1], &[5, 0, 1]]));
        assert_eq!(got.as_slice(), expected.as_slice());
    }

    #[test]
    fn homogeneous_two_rows_matches_enumeration() {
        let m = IntMatrix::from_i64_rows(&[&[1, 2, -1, 0], &[0, 1, 1, -2]]).unwrap();
        let got = min_solutions_homogeneous(&m, &Limits::default()).unwrap();
        let expected = enumerate_minimal(&m, &[0, 0], 6, true);
        assert_eq!(got.as_slice(), expected.as_slice());
        for s in got.iter() {
            assert!(m.mul_nvec(s).unwrap().is_zero());
        }
    }

    #[test]
    fn inhomogeneous_small_cases() {
        let lim = Limits::default();
        let m = IntMatrix::from_i64_rows(&[&[3, 5]]).unwrap();
        let got = min_solutions_inhomogeneous(&m, &ZVec::from_i64s(&[15]), &lim).unwrap();
        assert_eq!(got.as_slice(), enumerate_minimal(&m, &[15], 5, false).as_slice());
        assert_eq!(got.as_slice(), nv(&[&[0, 3], &[5, 0]]));

        let id = IntMatrix::identity(2);
        let got = min_solutions_inhomogeneous(&id, &ZVec::from_i64s(&[2, 3]), &lim).unwrap();
        assert_eq!(got.as_slice(), nv(&[&[2, 3]]));

        let one = IntMatrix::from_i64_rows(&[&[1]]).unwrap();
        let got = min_solutions_inhomogeneous(&one, &ZVec::from_i64s(&[0]), &lim).unwrap();
        assert_eq!(got.as_slice(), nv(&[&[0]]));
    }

    #[test]
    fn infeasible_system_terminates_empty() {
        // 2x - 2y = 1 has no solution; the homogeneous solution (1,1) stops the search
        let m = IntMatrix::from_i64_rows(&[&[2, -2]]).unwrap();
        let got = min_solutions_inhomogeneous(&m, &ZVec::from_i64s(&[1]), &Limits::default()).unwrap();
        assert!(got.is_empty());
    }

    #[test]
    fn limit_is_reported() {
        let m = IntMatrix::from_i64_rows(&[&[97, -89]]).unwrap();
        let err = min_solutions_homogeneous(&m, &Limits { max_nodes: 20 }).unwrap_err();
        assert!(matches!(err, Error::ResourceLimit { limit: 20, .. }));
    }

    #[test]
    fn huge_coefficients_fall_back_to_big_integers() {
        let big = BigInt::from(i64::MAX) * BigInt::from(4);
        let m = IntMatrix::from_rows(vec![vec![big.clone(), -big.clone()]]).unwrap();
        let got = min_solutions_homogeneous(&m, &Limits::default()).unwrap();
        assert_eq!(got.as_slice(), nv(&[&[1, 1]]));
        let got = min_solutions_inhomogeneous(&m, &ZVec::new(vec![big * 3]), &Limits::default()).unwrap();
        assert_eq!(got.as_slice(), nv(&[&[3, 0]]));
    }

    #[test]
    fn exclusive_pairs_restrict_support() {
        // x - y = 0 over (x1,x2,y1,y2) with coefficient pattern [1 2 -1 -2]
        let m = IntMatrix::from_i64_rows(&[&[1, 2, -1, -2]]).unwrap();
        let b = ZVec::from_i64s(&[0]);
        let all = min_solutions_homogeneous(&m, &Limits::default()).unwrap();
        assert!(all.contains(&NVec::from_u64s(&[1, 0, 1, 0])));
        let restricted = Frontier {
            matrix: &m,
            rhs: Some(b.entries()),
            exclusive: &[(0, 2), (1, 3)],
            first_only: false,
            max_nodes: 1000,
            guide: None,
        }
        .run()
        .unwrap();
        let hom: Vec<_> = restricted
            .homogeneous
            .iter()
            .map(|c| counts_to_nvec(&c[..4]))
            .collect();
        assert_eq!(
            minimals_filter(hom).unwrap().as_slice(),
            nv(&[&[0, 1, 2, 0], &[2, 0, 0, 1]])
        );
    }
}

//! Integer row reduction: echelon bases of subgroups of `Z^n` and integer kernels.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::diophantine::IntMatrix;
use crate::vector::ZVec;

fn sub_mul(a: &mut [BigInt], b: &[BigInt], q: &BigInt) {
    for (x, y) in a.iter_mut().zip(b) {
        *x -= q * y;
    }
}

/// Row-reduces `rows` in place with unimodular operations, looking only at the
/// first `width` columns. Returns the number of pivot rows; these come first and
/// the remaining rows are zero on the first `width` columns.
fn echelon(rows: &mut [Vec<BigInt>], width: usize) -> usize {
    let mut rank = 0;
    for c in 0..width {
        if rank == rows.len() {
            break;
        }
        // Euclid on column c among rows rank..
        loop {
            let pivot = (rank..rows.len())
                .filter(|&i| !rows[i][c].is_zero())
                .min_by(|&i, &j| rows[i][c].abs().cmp(&rows[j][c].abs()));
            let Some(p) = pivot else { break };
            rows.swap(rank, p);
            let mut done = true;
            for i in rank + 1..rows.len() {
                if !rows[i][c].is_zero() {
                    let q = rows[i][c].div_floor(&rows[rank][c]);
                    let pivot_row = rows[rank].clone();
                    sub_mul(&mut rows[i], &pivot_row, &q);
                    if !rows[i][c].is_zero() {
                        done = false;
                    }
                }
            }
            if done {
                break;
            }
        }
        if rows[rank][c].is_zero() {
            continue;
        }
        if rows[rank][c].is_negative() {
            for x in rows[rank].iter_mut() {
                *x = -&*x;
            }
        }
        // reduce entries above the pivot into [0, pivot)
        let pivot_row = rows[rank].clone();
        for row in rows[..rank].iter_mut() {
            let q = row[c].div_floor(&pivot_row[c]);
            if !q.is_zero() {
                sub_mul(row, &pivot_row, &q);
            }
        }
        rank += 1;
    }
    rank
}

/// A basis (in Hermite echelon form) of the subgroup generated by `vectors`.
pub fn echelon_basis(vectors: &[ZVec]) -> Vec<ZVec> {
    let Some(n) = vectors.first().map(ZVec::len) else {
        return Vec::new();
    };
    let mut rows: Vec<Vec<BigInt>> = vectors.iter().map(|v| v.entries().to_vec()).collect();
    let rank = echelon(&mut rows, n);
    rows.truncate(rank);
    rows.into_iter().map(ZVec::new).collect()
}

/// Rank of the matrix over `Q`.
pub fn rank(m: &IntMatrix) -> usize {
    let mut rows: Vec<Vec<BigInt>> = (0..m.rows()).map(|i| m.row(i).to_vec()).collect();
    echelon(&mut rows, m.cols())
}

/// A basis of `{z ∈ Z^cols : M·z = 0}`.
///
/// Reduces `[Mᵀ | I]`; rows whose `Mᵀ` part vanishes carry the kernel. The
/// transform is unimodular, so these rows span the whole kernel lattice rather
/// than a finite-index sublattice.
pub fn integer_kernel(m: &IntMatrix) -> Vec<ZVec> {
    let (d, p) = (m.rows(), m.cols());
    let mut rows: Vec<Vec<BigInt>> = (0..p)
        .map(|j| {
            let mut row: Vec<BigInt> = (0..d).map(|i| m.get(i, j).clone()).collect();
            row.extend((0..p).map(|k| BigInt::from((k == j) as i32)));
            row
        })
        .collect();
    let rank = echelon(&mut rows, d);
    let kernel: Vec<ZVec> = rows[rank..].iter().map(|r| ZVec::new(r[d..].to_vec())).collect();
    echelon_basis(&kernel)
        .into_iter()
        .map(ZVec::normalize_sign)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernel_of_single_row() {
        let m = IntMatrix::from_i64_rows(&[&[3, 5]]).unwrap();
        assert_eq!(integer_kernel(&m), vec![ZVec::from_i64s(&[5, -3])]);
        let m = IntMatrix::from_i64_rows(&[&[4, 6]]).unwrap();
        assert_eq!(integer_kernel(&m), vec![ZVec::from_i64s(&[3, -2])]);
    }

    #[test]
    fn kernel_of_three_columns_in_the_plane() {
        let m = IntMatrix::from_i64_rows(&[&[1, 1, 1], &[0, 1, 2]]).unwrap();
        assert_eq!(integer_kernel(&m), vec![ZVec::from_i64s(&[1, -2, 1])]);
    }

    #[test]
    fn echelon_drops_dependent_vectors() {
        let b = echelon_basis(&[
            ZVec::from_i64s(&[2, 4]),
            ZVec::from_i64s(&[3, 6]),
            ZVec::from_i64s(&[0, 0]),
        ]);
        assert_eq!(b, vec![ZVec::from_i64s(&[1, 2])]);
    }

    #[test]
    fn rank_counts_pivots() {
        let m = IntMatrix::from_i64_rows(&[&[1, 2, 3], &[2, 4, 6]]).unwrap();
        assert_eq!(rank(&m), 1);
        assert_eq!(rank(&IntMatrix::identity(3)), 3);
    }
}

//! Exact rank computations.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// Rank over ℚ of a list of integer row vectors, by fraction-free
/// (Bareiss) elimination. Rows may have different lengths; missing entries
/// are zero.
pub fn integer_rank(rows: &[Vec<i64>]) -> usize {
    let width = rows.iter().map(Vec::len).max().unwrap_or(0);
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| {
            let mut row: Vec<BigInt> = r.iter().map(|&x| BigInt::from(x)).collect();
            row.resize(width, BigInt::zero());
            row
        })
        .collect();
    let mut rank = 0;
    let mut prev_pivot = BigInt::from(1);
    for col in 0..width {
        let Some(p) = (rank..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank][col].clone();
        for i in rank + 1..m.len() {
            let factor = m[i][col].clone();
            for j in col..width {
                // Exact by Sylvester's identity.
                let v = (&pivot * &m[i][j] - &factor * &m[rank][j]) / &prev_pivot;
                m[i][j] = v;
            }
        }
        prev_pivot = pivot;
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

/// Rank over ℚ of rational row vectors by ordinary Gaussian elimination.
pub fn rational_rank(mut rows: Vec<Vec<BigRational>>) -> usize {
    let width = rows.iter().map(Vec::len).max().unwrap_or(0);
    for row in &mut rows {
        row.resize(width, BigRational::zero());
    }
    let mut rank = 0;
    for col in 0..width {
        let Some(p) = (rank..rows.len())
            .filter(|&i| !rows[i][col].is_zero())
            .max_by_key(|&i| rows[i][col].abs())
        else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank][col].clone();
        for i in rank + 1..rows.len() {
            if rows[i][col].is_zero() {
                continue;
            }
            let factor = &rows[i][col] / &pivot;
            for j in col..width {
                let v = &rows[i][j] - &factor * &rows[rank][j];
                rows[i][j] = v;
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

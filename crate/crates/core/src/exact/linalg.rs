//! Exact Gaussian elimination over the rationals.

use num_traits::Zero;

use super::{ExactError, Rational};

/// Row echelon form in place; returns the rank.
fn eliminate(rows: &mut [Vec<Rational>]) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        for r in rank + 1..rows.len() {
            if rows[r][col].is_zero() {
                continue;
            }
            let factor = &rows[r][col] / &rows[rank][col];
            for c in col..ncols {
                let delta = &factor * &rows[rank][c];
                rows[r][c] -= delta;
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// Rank of the matrix whose rows are `vectors`.
pub fn span_dimension(vectors: &[Vec<Rational>]) -> Result<usize, ExactError> {
    let Some(first) = vectors.first() else {
        return Ok(0);
    };
    let width = first.len();
    if let Some(bad) = vectors.iter().find(|v| v.len() != width) {
        return Err(ExactError::DimensionMismatch {
            expected: width,
            found: bad.len(),
        });
    }
    let mut rows = vectors.to_vec();
    Ok(eliminate(&mut rows))
}

pub fn det2(a: &[Rational], b: &[Rational]) -> Rational {
    &a[0] * &b[1] - &a[1] * &b[0]
}

pub fn det3(m: &[[Rational; 3]; 3]) -> Rational {
    let minor = |r1: usize, r2: usize, c1: usize, c2: usize| {
        &m[r1][c1] * &m[r2][c2] - &m[r1][c2] * &m[r2][c1]
    };
    &m[0][0] * minor(1, 2, 1, 2) - &m[0][1] * minor(1, 2, 0, 2) + &m[0][2] * minor(1, 2, 0, 1)
}

/// Transpose of the cofactor matrix, so that `m * adj(m) = det(m) * I`.
pub fn adjugate3(m: &[[Rational; 3]; 3]) -> [[Rational; 3]; 3] {
    let cof = |r: usize, c: usize| {
        let rows: Vec<usize> = (0..3).filter(|&i| i != r).collect();
        let cols: Vec<usize> = (0..3).filter(|&j| j != c).collect();
        let d = &m[rows[0]][cols[0]] * &m[rows[1]][cols[1]]
            - &m[rows[0]][cols[1]] * &m[rows[1]][cols[0]];
        if (r + c).is_multiple_of(2) {
            d
        } else {
            -d
        }
    };
    std::array::from_fn(|i| std::array::from_fn(|j| cof(j, i)))
}

pub fn cross3(a: &[Rational; 3], b: &[Rational; 3]) -> [Rational; 3] {
    [
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ]
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn mat_vec3(m: &[[Rational; 3]; 3], v: &[Rational; 3]) -> [Rational; 3] {
    std::array::from_fn(|i| dot(&m[i], v))
}

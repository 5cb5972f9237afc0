//! Resultants of polynomials in s whose coefficients lie in Q[t].

use super::UniPoly;

/// A polynomial in s, coefficients (lowest degree first) in Q[t].
pub type BivariatePoly = Vec<UniPoly>;

fn trimmed(p: &[UniPoly]) -> &[UniPoly] {
    let n = p.iter().rposition(|c| !c.is_zero()).map_or(0, |i| i + 1);
    &p[..n]
}

/// Res_s(f, g) as an element of Q[t]. Zero when either input is zero.
pub fn resultant_in_s(f: &[UniPoly], g: &[UniPoly]) -> UniPoly {
    let (f, g) = (trimmed(f), trimmed(g));
    if f.is_empty() || g.is_empty() {
        return UniPoly::zero();
    }
    let (m, n) = (f.len() - 1, g.len() - 1);
    if m == 0 {
        return f[0].pow(n as u32);
    }
    if n == 0 {
        return g[0].pow(m as u32);
    }
    let size = m + n;
    let mut mat = vec![vec![UniPoly::zero(); size]; size];
    // Rows hold coefficients from the leading one down.
    for i in 0..n {
        for (j, c) in f.iter().rev().enumerate() {
            mat[i][i + j] = c.clone();
        }
    }
    for i in 0..m {
        for (j, c) in g.iter().rev().enumerate() {
            mat[n + i][i + j] = c.clone();
        }
    }
    bareiss_det(mat)
}

/// Fraction-free determinant over Q[t].
pub fn bareiss_det(mut mat: Vec<Vec<UniPoly>>) -> UniPoly {
    let size = mat.len();
    if size == 0 {
        return UniPoly::one();
    }
    let mut negate = false;
    let mut prev = UniPoly::one();
    for k in 0..size - 1 {
        if mat[k][k].is_zero() {
            let Some(swap) = (k + 1..size).find(|&r| !mat[r][k].is_zero()) else {
                return UniPoly::zero();
            };
            mat.swap(k, swap);
            negate = !negate;
        }
        for i in k + 1..size {
            for j in k + 1..size {
                let num = &(&mat[i][j] * &mat[k][k]) - &(&mat[i][k] * &mat[k][j]);
                mat[i][j] = num.exact_div(&prev);
            }
        }
        prev = mat[k][k].clone();
    }
    let det = mat[size - 1][size - 1].clone();
    if negate {
        -&det
    } else {
        det
    }
}

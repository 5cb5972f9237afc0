//! Tailed ribbons: local equations at a tail and the arithmetic genus.

use crate::exact::Polynomial;

/// Generators `x_i x_j` and `(x_i - x_j) y` for `i < j`, in variables
/// `x1, ..., xm, y`.
pub fn tailed_ribbon_local_ideal(m: u32) -> Vec<Polynomial> {
    let mut names: Vec<String> = (1..=m).map(|i| format!("x{i}")).collect();
    names.push("y".into());
    let vars: Vec<&str> = names.iter().map(String::as_str).collect();
    let mut products = Vec::new();
    let mut differences = Vec::new();
    for i in 1..=m {
        for j in i + 1..=m {
            let xi = Polynomial::var(&vars, &format!("x{i}"));
            let xj = Polynomial::var(&vars, &format!("x{j}"));
            let y = Polynomial::var(&vars, "y");
            products.push(&xi * &xj);
            differences.push(&(&xi - &xj) * &y);
        }
    }
    products.extend(differences);
    products
}

/// Arithmetic genus of a ribbon with `k` tails of the given multiplicities,
/// from Euler characteristics: the ideal sheaf is O(k-3), and each tail adds
/// `m_i` copies of O_P1 glued along `m_i - 1` points and a length-two scheme.
pub fn ribbon_genus(k: u32, multiplicities: &[u32]) -> i64 {
    let k = k as i64;
    let chi_ideal = (k - 3) + 1;
    let chi_ribbon = chi_ideal + 1;
    let chi_curve = chi_ribbon + multiplicities.iter().map(|&m| m as i64).sum::<i64>()
        - multiplicities
            .iter()
            .map(|&m| m as i64 - 1 + 2)
            .sum::<i64>();
    1 - chi_curve
}

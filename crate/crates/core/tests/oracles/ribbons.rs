// Euler characteristics of the ribbon sequences, kept separate from the library.
pub fn chi_p1(deg: i64) -> i64 {
    deg + 1
}

pub fn oracle_genus(k: u32, ms: &[u32]) -> i64 {
    let k = k as i64;
    let chi_ribbon = chi_p1(k - 3) + chi_p1(0);
    let mut chi_normalisation = chi_ribbon;
    let mut cokernel = 0;
    for &m in ms {
        chi_normalisation += m as i64 * chi_p1(0);
        cokernel += (m as i64 - 1) + 2;
    }
    1 - (chi_normalisation - cokernel)
}

pub fn multiplicity_vectors(k: usize, max: u32) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|v| {
                (1..=max).map(move |m| {
                    let mut w = v.clone();
                    w.push(m);
                    w
                })
            })
            .collect();
    }
    out
}

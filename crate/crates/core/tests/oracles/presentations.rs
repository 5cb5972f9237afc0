use g2maps::exact::{MultiBranchElement, Rational};
use g2maps::singularities::{type_i_presentation, type_ii_presentation, GorensteinPresentation};
use num_traits::{One, Zero};

// Independent evaluation: substitute each branch's generator series into
// every equation with plain truncated convolution.

pub fn truncate(mut v: Vec<Rational>, n: usize) -> Vec<Rational> {
    v.resize(n, Rational::zero());
    v
}

pub fn conv(a: &[Rational], b: &[Rational], n: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); n];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            if i + j < n {
                out[i + j] += x * y;
            }
        }
    }
    out
}

pub fn residue_on_branch(p: &GorensteinPresentation, branch: usize, eq: usize) -> Vec<Rational> {
    let n = p.truncation;
    let gens: Vec<Vec<Rational>> = p
        .generators
        .iter()
        .map(|(_, g)| truncate(g.branch(branch).coeffs().to_vec(), n))
        .collect();
    let mut total = vec![Rational::zero(); n];
    for (exps, c) in p.equations[eq].terms() {
        let mut term = truncate(vec![c.clone()], n);
        for (g, &e) in gens.iter().zip(exps) {
            for _ in 0..e {
                term = conv(&term, g, n);
            }
        }
        for (t, x) in total.iter_mut().zip(term) {
            *t += x;
        }
    }
    total
}

pub fn oracle_verifies(p: &GorensteinPresentation) -> bool {
    let branches = p.generators[0].1.branch_count();
    (0..p.equations.len())
        .all(|e| (0..branches).all(|b| residue_on_branch(p, b, e).iter().all(Zero::is_zero)))
}

pub fn all_presentations(max: u32) -> Vec<GorensteinPresentation> {
    let mut out: Vec<_> = (1..=max).map(|m| type_i_presentation(m).unwrap()).collect();
    out.extend((2..=max).map(|m| type_ii_presentation(m).unwrap()));
    out
}

/// Adds the constant 1 to the first generator.
pub fn shift_first_generator(p: &GorensteinPresentation) -> GorensteinPresentation {
    let mut out = p.clone();
    let g = &out.generators[0].1;
    let one = MultiBranchElement::constant(&Rational::one(), g.branch_count(), g.truncation());
    out.generators[0].1 = g + &one;
    out
}

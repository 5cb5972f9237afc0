//! Explicit generators and local equations of the genus-two Gorenstein
//! singularities of types I and II.

use std::collections::BTreeMap;

use crate::exact::{ExactError, MultiBranchElement, Polynomial};

use super::SingularityType;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PresentationError {
    #[error("type I needs at least one branch, got {0}")]
    TypeIBranches(u32),
    #[error("type II needs at least two branches, got {0}")]
    TypeIIBranches(u32),
    #[error(transparent)]
    Exact(#[from] ExactError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GorensteinPresentation {
    pub kind: SingularityType,
    pub generators: Vec<(String, MultiBranchElement)>,
    pub equations: Vec<Polynomial>,
    pub truncation: usize,
    /// 1-based indices of the special branches.
    pub special_branches: Vec<usize>,
}

impl GorensteinPresentation {
    pub fn variable_names(&self) -> Vec<&str> {
        self.generators.iter().map(|(n, _)| n.as_str()).collect()
    }

    /// Residue of every equation under the generator assignment.
    pub fn residues(&self) -> Result<Vec<MultiBranchElement>, ExactError> {
        let assignment: BTreeMap<String, MultiBranchElement> =
            self.generators.iter().cloned().collect();
        self.equations
            .iter()
            .map(|e| e.evaluate_on_branches(&assignment))
            .collect()
    }
}

fn x(i: u32) -> String {
    format!("x{i}")
}

/// `coeff * t_branch^exp` placed on one branch, zero elsewhere.
fn branch_monomial(m: usize, branch: usize, exp: usize, n: usize) -> MultiBranchElement {
    let mut terms: Vec<&[(i64, usize)]> = vec![&[]; m];
    let mono = [(1, exp)];
    terms[branch] = &mono;
    MultiBranchElement::from_monomials(&terms, n)
}

fn parse(src: &str, vars: &[&str]) -> Polynomial {
    Polynomial::parse(src, vars).expect("built-in equation parses")
}

/// Pairs `x_i(x_j - x_k)` for `i` in `is`, `j < k` in `jk \ {i}`.
fn difference_relations(
    is: std::ops::RangeInclusive<u32>,
    jk: std::ops::RangeInclusive<u32>,
    vars: &[&str],
) -> Vec<Polynomial> {
    let mut out = Vec::new();
    for i in is {
        let rest: Vec<u32> = jk.clone().filter(|&j| j != i).collect();
        for (a, &j) in rest.iter().enumerate() {
            for &k in &rest[a + 1..] {
                out.push(parse(&format!("x{i}*(x{j} - x{k})"), vars));
            }
        }
    }
    out
}

pub fn type_i_presentation(m: u32) -> Result<GorensteinPresentation, PresentationError> {
    if m < 1 {
        return Err(PresentationError::TypeIBranches(m));
    }
    if m == 1 {
        // x^5 = t^10 needs the truncation to reach past degree 10.
        let n = 11;
        let gens = vec![
            ("x".to_string(), branch_monomial(1, 0, 2, n)),
            ("y".to_string(), branch_monomial(1, 0, 5, n)),
        ];
        return Ok(GorensteinPresentation {
            kind: SingularityType::GenusTwoTypeI { branches: 1 },
            generators: gens,
            equations: vec![parse("x^5 - y^2", &["x", "y"])],
            truncation: n,
            special_branches: Vec::new(),
        });
    }
    let n = 4;
    let mu = m as usize;
    let mut gens = Vec::new();
    for i in 1..m {
        let g = &branch_monomial(mu, i as usize - 1, 1, n) + &branch_monomial(mu, mu - 1, 3, n);
        gens.push((x(i), g));
    }
    gens.push((x(m), branch_monomial(mu, mu - 1, 2, n)));
    let names: Vec<String> = (1..=m).map(x).collect();
    let vars: Vec<&str> = names.iter().map(String::as_str).collect();
    let equations = match m {
        2 => vec![parse("x2*(x2^3 - x1^2)", &vars)],
        3 => vec![parse("x3*(x1 - x2)", &vars), parse("x3^3 - x1*x2", &vars)],
        _ => {
            let mut eqs = vec![parse(&format!("x{m}^3 - x1*x2"), &vars)];
            eqs.extend(difference_relations(1..=m, 1..=m - 1, &vars));
            eqs
        }
    };
    Ok(GorensteinPresentation {
        kind: SingularityType::GenusTwoTypeI { branches: m },
        generators: gens,
        equations,
        truncation: n,
        special_branches: vec![mu],
    })
}

pub fn type_ii_presentation(m: u32) -> Result<GorensteinPresentation, PresentationError> {
    if m < 2 {
        return Err(PresentationError::TypeIIBranches(m));
    }
    let mu = m as usize;
    if m == 2 {
        // y = t2^3 and y - x1^3 vanish only past degree 6 on the second branch.
        let n = 7;
        let x1 = &branch_monomial(2, 0, 1, n) + &branch_monomial(2, 1, 1, n);
        let y = branch_monomial(2, 1, 3, n);
        return Ok(GorensteinPresentation {
            kind: SingularityType::GenusTwoTypeII { branches: 2 },
            generators: vec![(x(1), x1), ("y".to_string(), y)],
            equations: vec![parse("y*(y - x1^3)", &["x1", "y"])],
            truncation: n,
            special_branches: Vec::new(),
        });
    }
    let n = 3;
    let mut gens = vec![(
        x(1),
        &branch_monomial(mu, 0, 1, n) + &branch_monomial(mu, mu - 1, 1, n),
    )];
    for i in 2..m {
        let g = &branch_monomial(mu, i as usize - 1, 1, n) + &branch_monomial(mu, mu - 1, 2, n);
        gens.push((x(i), g));
    }
    let names: Vec<String> = (1..m).map(x).collect();
    let vars: Vec<&str> = names.iter().map(String::as_str).collect();
    let equations = if m == 3 {
        vec![parse("x1*x2*(x2 - x1^2)", &vars)]
    } else {
        let mut eqs = vec![parse("x3*(x1^2 - x2)", &vars)];
        eqs.extend(difference_relations(1..=m - 1, 1..=m - 1, &vars));
        eqs
    };
    Ok(GorensteinPresentation {
        kind: SingularityType::GenusTwoTypeII { branches: m },
        generators: gens,
        equations,
        truncation: n,
        special_branches: vec![1, mu],
    })
}

/// True iff every equation vanishes modulo the truncation ideal.
pub fn verify_presentation(p: &GorensteinPresentation) -> bool {
    match p.residues() {
        Ok(rs) => rs.iter().all(MultiBranchElement::is_zero),
        Err(_) => false,
    }
}

/// Replaces the first equation by itself plus the first generator. The first
/// generator has a pure linear or quadratic term on some branch that no
/// equation can cancel, so the mutant never verifies.
pub fn mutate_presentation(p: &GorensteinPresentation) -> GorensteinPresentation {
    let mut out = p.clone();
    let vars = p.variable_names();
    let first = Polynomial::var(&vars, vars[0]);
    out.equations[0] = &p.equations[0] + &first;
    out
}

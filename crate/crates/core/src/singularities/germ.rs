//! Parametrized planar branches, their contact orders, and identification of
//! small planar singularities from branch data.

use std::fmt;

use num_traits::{One, Zero};

use crate::exact::resultant::resultant_in_s;
use crate::exact::{rat, Rational, TruncatedSeries, UniPoly};

use super::SingularityType;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GermError {
    #[error("branch does not pass through the origin")]
    NotThroughOrigin,
    #[error("branch parametrization is identically zero")]
    ZeroBranch,
    #[error("no branches given")]
    Empty,
    #[error("branches {0} and {1} coincide as germs")]
    NonReduced(usize, usize),
    #[error("branch {0} is a multiple cover of its image")]
    NonPrimitive(usize),
    #[error("branch {index} has unsupported type: {detail}")]
    UnsupportedBranch { index: usize, detail: String },
    #[error("unclassified germ with signature {0}")]
    Unclassified(GermSignature),
}

/// A germ `t -> (x(t), y(t))` with `x(0) = y(0) = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PlanarBranch {
    x: UniPoly,
    y: UniPoly,
}

impl PlanarBranch {
    pub fn new(x: UniPoly, y: UniPoly) -> Result<Self, GermError> {
        if x.is_zero() && y.is_zero() {
            return Err(GermError::ZeroBranch);
        }
        if !x.coeff(0).is_zero() || !y.coeff(0).is_zero() {
            return Err(GermError::NotThroughOrigin);
        }
        Ok(PlanarBranch { x, y })
    }

    pub fn from_i64(x: &[i64], y: &[i64]) -> Result<Self, GermError> {
        Self::new(UniPoly::from_i64(x), UniPoly::from_i64(y))
    }

    pub fn x(&self) -> &UniPoly {
        &self.x
    }

    pub fn y(&self) -> &UniPoly {
        &self.y
    }

    /// Image under the linear map `(x, y) -> (a x + b y, c x + d y)`.
    pub fn transform(
        &self,
        a: &Rational,
        b: &Rational,
        c: &Rational,
        d: &Rational,
    ) -> Result<Self, GermError> {
        let x = &self.x.scale(a) + &self.y.scale(b);
        let y = &self.x.scale(c) + &self.y.scale(d);
        Self::new(x, y)
    }
}

impl fmt::Display for PlanarBranch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Contact {
    Finite(u32),
    Infinite,
}

impl fmt::Display for Contact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Contact::Finite(n) => write!(f, "{n}"),
            Contact::Infinite => f.write_str("inf"),
        }
    }
}

/// Order in t of `Res_s(x1(t) - x2(s), y1(t) - y2(s))`.
pub fn intersection_multiplicity(b1: &PlanarBranch, b2: &PlanarBranch) -> Contact {
    let in_s = |p1: &UniPoly, p2: &UniPoly| -> Vec<UniPoly> {
        let mut v: Vec<UniPoly> = p2.coeffs().iter().map(|c| UniPoly::constant(-c)).collect();
        if v.is_empty() {
            v.push(UniPoly::zero());
        }
        v[0] = p1.clone();
        v
    };
    let f = in_s(&b1.x, &b2.x);
    let g = in_s(&b1.y, &b2.y);
    match resultant_in_s(&f, &g).ord() {
        Some(k) => Contact::Finite(k as u32),
        None => Contact::Infinite,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BranchType {
    Smooth,
    /// Semigroup generated by 2 and an odd `beta`.
    Cusp {
        beta: u32,
    },
    /// Semigroup generated by 3 and 4.
    Cusp34,
}

impl BranchType {
    pub fn delta(self) -> u32 {
        match self {
            BranchType::Smooth => 0,
            BranchType::Cusp { beta } => (beta - 1) / 2,
            BranchType::Cusp34 => 3,
        }
    }
}

impl fmt::Display for BranchType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BranchType::Smooth => f.write_str("smooth"),
            BranchType::Cusp { beta } => write!(f, "(2,{beta})"),
            BranchType::Cusp34 => f.write_str("(3,4)"),
        }
    }
}

/// Multiplicity and first characteristic exponent, found by rewriting the
/// branch as `(c s^m, Y(s))` through a linear change and series reversion.
fn branch_type(b: &PlanarBranch, index: usize) -> Result<BranchType, GermError> {
    let ox = b.x.ord().unwrap_or(usize::MAX);
    let oy = b.y.ord().unwrap_or(usize::MAX);
    let (big_x, mut big_y) = if ox <= oy {
        (b.x.clone(), b.y.clone())
    } else {
        (b.y.clone(), b.x.clone())
    };
    let m = ox.min(oy);
    if m == 1 {
        return Ok(BranchType::Smooth);
    }
    let lead = big_x.coeff(m);
    let ratio = big_y.coeff(m) / &lead;
    big_y = &big_y - &big_x.scale(&ratio);
    if big_y.is_zero() {
        return Err(GermError::NonPrimitive(index));
    }
    // The image is a rational curve of degree at most D, so the branch delta
    // (m-1)(beta-1)/2 cannot exceed (D-1)(D-2)/2.
    let d = big_x.degree().unwrap_or(0).max(big_y.degree().unwrap_or(0));
    let bound = 2 + (d - 1) * (d - 2) / (m - 1);
    // X = lead * t^m * u(t) with u(0) = 1; the new parameter is s = t u^(1/m).
    let unit: Vec<Rational> = big_x.coeffs()[m..].iter().map(|c| c / &lead).collect();
    let unit = TruncatedSeries::from_coeffs(unit, bound);
    let root = unit
        .pow_rational(&(Rational::one() / rat(m as i64)))
        .expect("unit series has constant term one");
    let s_of_t = &TruncatedSeries::monomial(Rational::one(), 1, bound) * &root;
    let t_of_s = s_of_t.reversion().expect("parameter change is invertible");
    let y_of_s = TruncatedSeries::from_poly(&big_y, bound).compose(&t_of_s);
    let beta = (0..bound).find(|&e| e % m != 0 && !y_of_s.coeff(e).is_zero());
    let Some(beta) = beta else {
        return Err(GermError::NonPrimitive(index));
    };
    match (m, beta) {
        (2, b) => Ok(BranchType::Cusp { beta: b as u32 }),
        (3, 4) => Ok(BranchType::Cusp34),
        _ => Err(GermError::UnsupportedBranch {
            index,
            detail: format!("multiplicity {m}, first characteristic exponent {beta}"),
        }),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GermSignature {
    pub branch_count: usize,
    pub branch_types: Vec<BranchType>,
    /// Pairwise contact orders `(i, j, I)` with `i < j`, 0-based.
    pub contacts: Vec<(usize, usize, u32)>,
    pub delta: u32,
    pub milnor: i64,
}

impl GermSignature {
    pub fn sorted_contacts(&self) -> Vec<u32> {
        let mut c: Vec<u32> = self.contacts.iter().map(|&(_, _, k)| k).collect();
        c.sort_unstable();
        c
    }
}

impl fmt::Display for GermSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let types: Vec<String> = self.branch_types.iter().map(ToString::to_string).collect();
        let contacts: Vec<String> = self
            .sorted_contacts()
            .iter()
            .map(ToString::to_string)
            .collect();
        write!(
            f,
            "r={} branches=[{}] contacts=[{}] delta={} milnor={}",
            self.branch_count,
            types.join(","),
            contacts.join(","),
            self.delta,
            self.milnor
        )
    }
}

pub fn germ_signature(branches: &[PlanarBranch]) -> Result<GermSignature, GermError> {
    if branches.is_empty() {
        return Err(GermError::Empty);
    }
    let types = branches
        .iter()
        .enumerate()
        .map(|(i, b)| branch_type(b, i))
        .collect::<Result<Vec<_>, _>>()?;
    let mut contacts = Vec::new();
    for i in 0..branches.len() {
        for j in i + 1..branches.len() {
            match intersection_multiplicity(&branches[i], &branches[j]) {
                Contact::Finite(k) => contacts.push((i, j, k)),
                Contact::Infinite => return Err(GermError::NonReduced(i, j)),
            }
        }
    }
    let delta =
        types.iter().map(|t| t.delta()).sum::<u32>() + contacts.iter().map(|c| c.2).sum::<u32>();
    let r = branches.len() as i64;
    Ok(GermSignature {
        branch_count: branches.len(),
        branch_types: types,
        contacts,
        delta,
        milnor: 2 * delta as i64 - r + 1,
    })
}

fn name(sig: &GermSignature) -> Option<SingularityType> {
    use BranchType::*;
    let contacts = sig.sorted_contacts();
    let all_smooth = sig.branch_types.iter().all(|t| *t == Smooth);
    match (sig.branch_count, sig.branch_types.as_slice()) {
        (1, [Cusp { beta }]) => Some(SingularityType::a(beta - 1)),
        (1, [Cusp34]) => Some(SingularityType::e(6)),
        (2, [Smooth, Smooth]) => Some(SingularityType::a(2 * contacts[0] - 1)),
        (2, [Cusp { beta }, Smooth] | [Smooth, Cusp { beta }]) => match (beta, contacts[0]) {
            (3, 3) => Some(SingularityType::e(7)),
            (b, 2) => Some(SingularityType::d(b + 2)),
            _ => None,
        },
        (3, _) if all_smooth && contacts[0] == 1 && contacts[1] == 1 => {
            Some(SingularityType::d(2 * contacts[2] + 2))
        }
        (r, _) if r >= 4 && all_smooth && contacts.iter().all(|&c| c == 1) => {
            Some(SingularityType::OrdinaryPlanarMFold(r as u32))
        }
        _ => None,
    }
}

/// Names the singularity formed by `branches` at the origin.
pub fn classify_germ(branches: &[PlanarBranch]) -> Result<SingularityType, GermError> {
    let sig = germ_signature(branches)?;
    name(&sig).ok_or(GermError::Unclassified(sig))
}

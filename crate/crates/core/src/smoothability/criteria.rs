//! Generic smoothability predicates, independent of the degree and target.

use num_traits::Zero;

use crate::exact::linalg::{det2, span_dimension};
use crate::exact::projective::{cross_ratio, pencil_coordinate, CrossRatio, ProjLine2, ProjPoint};
use crate::exact::{ExactError, Rational};
use crate::hyperelliptic::{CurveError, CurvePoint, HyperellipticCurve};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CriteriaError {
    #[error("empty tangent configuration")]
    Empty,
    #[error("tangent configuration has {found} directions, expected {expected}")]
    CountMismatch { expected: usize, found: usize },
    #[error("hyperelliptic descent needs the line covered by the core")]
    MissingLine,
    #[error("lines are not concurrent")]
    NotConcurrent,
    #[error("lines {0} and {1} coincide")]
    RepeatedLine(usize, usize),
    #[error("attaching points {0} and {1} lie in the same hyperelliptic fiber")]
    DegenerateFiber(usize, usize),
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    Curve(#[from] CurveError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RibbonMode {
    Contracted,
    Hyperelliptic,
}

/// Tangent directions of the tails at the image of a contracted subcurve,
/// as vectors in the two-dimensional quotient of the ambient tangent space
/// by the base point. A zero vector means the tail map ramifies at its node.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TangentConfiguration {
    pub base: ProjPoint,
    pub directions: Vec<Vec<Rational>>,
    pub line: Option<ProjLine2>,
}

impl TangentConfiguration {
    pub fn new(base: ProjPoint, directions: Vec<Vec<Rational>>) -> Self {
        TangentConfiguration {
            base,
            directions,
            line: None,
        }
    }

    pub fn with_line(mut self, line: ProjLine2) -> Self {
        self.line = Some(line);
        self
    }

    fn span(&self) -> Result<usize, CriteriaError> {
        Ok(span_dimension(&self.directions)?)
    }

    fn check_count(&self, k: usize) -> Result<(), CriteriaError> {
        if self.directions.is_empty() {
            return Err(CriteriaError::Empty);
        }
        if self.directions.len() != k {
            return Err(CriteriaError::CountMismatch {
                expected: k,
                found: self.directions.len(),
            });
        }
        Ok(())
    }
}

/// Tails on a contracted elliptic curve: the directions span at most k-1 dimensions.
pub fn genus1_tails_condition(tc: &TangentConfiguration, k: usize) -> Result<bool, CriteriaError> {
    tc.check_count(k)?;
    Ok(tc.span()? < k)
}

/// Degree at least one on every genus-one subcurve and at least three on
/// every genus-two subcurve.
pub fn unobstructed_isolated(genus1_degrees: &[u32], genus2_degrees: &[u32]) -> bool {
    genus1_degrees.iter().all(|&d| d >= 1) && genus2_degrees.iter().all(|&d| d >= 3)
}

pub fn ribbon_descent_condition(
    tc: &TangentConfiguration,
    k: usize,
    mode: RibbonMode,
) -> Result<bool, CriteriaError> {
    tc.check_count(k)?;
    match mode {
        RibbonMode::Contracted => Ok(k >= 2 && tc.span()? + 2 <= k),
        RibbonMode::Hyperelliptic => {
            let line = tc.line.as_ref().ok_or(CriteriaError::MissingLine)?;
            let along = pencil_coordinate(&tc.base, line)?;
            let projected: Vec<Vec<Rational>> = tc
                .directions
                .iter()
                .map(|v| vec![det2(along.coords(), v)])
                .collect();
            Ok(span_dimension(&projected)? < k)
        }
    }
}

/// Codimension, inside the sections vanishing on the contracted core, of the
/// sections pulled back from linear forms through the image point. Row i
/// holds the first-order behaviour of the forms on tail i, and is zero when
/// the tail map vanishes to order two or more at its node.
pub fn section_descent_codim(
    directions: &[Vec<Rational>],
    vanishing_orders: &[u32],
) -> Result<usize, CriteriaError> {
    if directions.len() != vanishing_orders.len() {
        return Err(CriteriaError::CountMismatch {
            expected: directions.len(),
            found: vanishing_orders.len(),
        });
    }
    let rows: Vec<Vec<Rational>> = directions
        .iter()
        .zip(vanishing_orders)
        .map(|(v, &ord)| {
            if ord >= 2 {
                vec![Rational::zero(); v.len()]
            } else {
                v.clone()
            }
        })
        .collect();
    Ok(directions.len() - span_dimension(&rows)?)
}

/// The common point of pairwise distinct concurrent lines.
pub fn concurrency_point(lines: &[ProjLine2]) -> Result<ProjPoint, CriteriaError> {
    for i in 0..lines.len() {
        for j in i + 1..lines.len() {
            if lines[i] == lines[j] {
                return Err(CriteriaError::RepeatedLine(i, j));
            }
        }
    }
    let base = lines[0]
        .meet(&lines[1])
        .ok_or(CriteriaError::NotConcurrent)?;
    if lines.iter().all(|l| l.contains(&base)) {
        Ok(base)
    } else {
        Err(CriteriaError::NotConcurrent)
    }
}

/// Cross-ratio of four concurrent lines in their pencil against that of four
/// points of P¹, both taken in the given order.
pub fn cross_ratio_pair(
    lines: &[ProjLine2; 4],
    points: &[ProjPoint; 4],
) -> Result<(CrossRatio, CrossRatio), CriteriaError> {
    let base = concurrency_point(lines)?;
    for i in 0..4 {
        for j in i + 1..4 {
            if points[i] == points[j] {
                return Err(CriteriaError::DegenerateFiber(i, j));
            }
        }
    }
    let pencil: Vec<ProjPoint> = lines
        .iter()
        .map(|l| pencil_coordinate(&base, l))
        .collect::<Result<_, _>>()?;
    let lhs = cross_ratio(&pencil[0], &pencil[1], &pencil[2], &pencil[3])?;
    let rhs = cross_ratio(&points[0], &points[1], &points[2], &points[3])?;
    Ok((lhs, rhs))
}

pub fn cross_ratio_match(
    lines: &[ProjLine2; 4],
    curve: &HyperellipticCurve,
    attach: &[CurvePoint; 4],
) -> Result<bool, CriteriaError> {
    let images: Vec<ProjPoint> = attach
        .iter()
        .map(|p| curve.hyperelliptic_image(p))
        .collect::<Result<_, _>>()?;
    let images: [ProjPoint; 4] = images.try_into().unwrap();
    let (a, b) = cross_ratio_pair(lines, &images)?;
    Ok(a == b)
}

/// Whether some bijection of lines to points matches the cross-ratios.
pub fn cross_ratio_match_any_bijection(
    lines: &[ProjLine2; 4],
    points: &[ProjPoint; 4],
) -> Result<bool, CriteriaError> {
    let mut perm = [0usize, 1, 2, 3];
    loop {
        let permuted: [ProjPoint; 4] = std::array::from_fn(|i| points[perm[i]].clone());
        let (a, b) = cross_ratio_pair(lines, &permuted)?;
        if a == b {
            return Ok(true);
        }
        if !next_permutation(&mut perm) {
            return Ok(false);
        }
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (0..p.len() - 1).rev().find(|&i| p[i] < p[i + 1]) else {
        return false;
    };
    let j = (i + 1..p.len()).rev().find(|&j| p[j] > p[i]).unwrap();
    p.swap(i, j);
    p[i + 1..].reverse();
    true
}

//! Points, lines and conics in P¹ and P² with exact predicates.

use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::linalg::{adjugate3, cross3, det2, det3, dot, mat_vec3};
use super::rational::{format_rational, Rational};
use super::ExactError;

/// A point of P¹ or P², stored scaled so that its first nonzero coordinate is 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjPoint {
    coords: Vec<Rational>,
}

fn normalize(mut coords: Vec<Rational>) -> Result<Vec<Rational>, ExactError> {
    let lead = coords
        .iter()
        .find(|c| !c.is_zero())
        .cloned()
        .ok_or(ExactError::ZeroVector)?;
    for c in &mut coords {
        *c /= &lead;
    }
    Ok(coords)
}

impl ProjPoint {
    pub fn new(coords: Vec<Rational>) -> Result<Self, ExactError> {
        if !(2..=3).contains(&coords.len()) {
            return Err(ExactError::DimensionMismatch {
                expected: 3,
                found: coords.len(),
            });
        }
        Ok(ProjPoint {
            coords: normalize(coords)?,
        })
    }

    pub fn p1(a: Rational, b: Rational) -> Result<Self, ExactError> {
        Self::new(vec![a, b])
    }

    pub fn p2(x: Rational, y: Rational, z: Rational) -> Result<Self, ExactError> {
        Self::new(vec![x, y, z])
    }

    /// The point at infinity (1:0) of P¹.
    pub fn infinity() -> Self {
        ProjPoint {
            coords: vec![Rational::one(), Rational::zero()],
        }
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len() - 1
    }

    pub(crate) fn xyz(&self) -> [Rational; 3] {
        assert_eq!(self.coords.len(), 3, "expected a point of P²");
        [
            self.coords[0].clone(),
            self.coords[1].clone(),
            self.coords[2].clone(),
        ]
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(format_rational).collect();
        write!(f, "({})", parts.join(":"))
    }
}

/// The line ax + by + cz = 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProjLine2 {
    coeffs: [Rational; 3],
}

impl ProjLine2 {
    pub fn new(a: Rational, b: Rational, c: Rational) -> Result<Self, ExactError> {
        let n = normalize(vec![a, b, c])?;
        let [a, b, c]: [Rational; 3] = n.try_into().unwrap();
        Ok(ProjLine2 { coeffs: [a, b, c] })
    }

    pub fn from_slice(v: &[Rational]) -> Result<Self, ExactError> {
        if v.len() != 3 {
            return Err(ExactError::DimensionMismatch {
                expected: 3,
                found: v.len(),
            });
        }
        Self::new(v[0].clone(), v[1].clone(), v[2].clone())
    }

    pub fn through(p: &ProjPoint, q: &ProjPoint) -> Result<Self, ExactError> {
        let [a, b, c] = cross3(&p.xyz(), &q.xyz());
        Self::new(a, b, c)
            .map_err(|_| ExactError::DegenerateConfiguration("points coincide".into()))
    }

    pub fn coeffs(&self) -> &[Rational; 3] {
        &self.coeffs
    }

    pub fn contains(&self, p: &ProjPoint) -> bool {
        dot(&self.coeffs, &p.xyz()).is_zero()
    }

    pub fn meet(&self, other: &ProjLine2) -> Option<ProjPoint> {
        let [x, y, z] = cross3(&self.coeffs, &other.coeffs);
        ProjPoint::p2(x, y, z).ok()
    }
}

impl fmt::Display for ProjLine2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = &self.coeffs;
        write!(
            f,
            "[{}, {}, {}]",
            format_rational(a),
            format_rational(b),
            format_rational(c)
        )
    }
}

/// A conic given by a symmetric matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Conic2 {
    matrix: [[Rational; 3]; 3],
}

impl Conic2 {
    /// Coefficients of x², xy, y², xz, yz, z² in that order.
    pub fn from_coeffs(c: &[Rational]) -> Result<Self, ExactError> {
        if c.len() != 6 {
            return Err(ExactError::DimensionMismatch {
                expected: 6,
                found: c.len(),
            });
        }
        if c.iter().all(Zero::is_zero) {
            return Err(ExactError::ZeroVector);
        }
        let half = |r: &Rational| r / Rational::from_integer(2.into());
        let matrix = [
            [c[0].clone(), half(&c[1]), half(&c[3])],
            [half(&c[1]), c[2].clone(), half(&c[4])],
            [half(&c[3]), half(&c[4]), c[5].clone()],
        ];
        Ok(Conic2 { matrix })
    }

    pub fn matrix(&self) -> &[[Rational; 3]; 3] {
        &self.matrix
    }

    /// Inverse of `from_coeffs`.
    pub fn coeffs(&self) -> [Rational; 6] {
        let m = &self.matrix;
        let two = |r: &Rational| r + r;
        [
            m[0][0].clone(),
            two(&m[0][1]),
            m[1][1].clone(),
            two(&m[0][2]),
            two(&m[1][2]),
            m[2][2].clone(),
        ]
    }

    pub fn determinant(&self) -> Rational {
        det3(&self.matrix)
    }

    pub fn is_degenerate(&self) -> bool {
        self.determinant().is_zero()
    }

    pub fn contains(&self, p: &ProjPoint) -> bool {
        let v = p.xyz();
        dot(&v, &mat_vec3(&self.matrix, &v)).is_zero()
    }

    /// Polar line of `p`; the tangent line when `p` lies on the conic.
    pub fn polar(&self, p: &ProjPoint) -> Result<ProjLine2, ExactError> {
        let [a, b, c] = mat_vec3(&self.matrix, &p.xyz());
        ProjLine2::new(a, b, c).map_err(|_| ExactError::DegenerateConic)
    }

    /// Whether `line` is tangent to this conic at `p`.
    pub fn tangent_at(&self, line: &ProjLine2, p: &ProjPoint) -> Result<bool, ExactError> {
        Ok(self.contains(p) && self.polar(p)? == *line)
    }
}

/// A value of the cross-ratio: a rational or the point at infinity.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum CrossRatio {
    Finite(Rational),
    Infinite,
}

impl fmt::Display for CrossRatio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CrossRatio::Finite(r) => f.write_str(&format_rational(r)),
            CrossRatio::Infinite => f.write_str("inf"),
        }
    }
}

/// `det(p1,p3) det(p2,p4) / (det(p1,p4) det(p2,p3))`, so that
/// `cross_ratio(0, 1, ∞, λ) = (λ-1)/λ`.
pub fn cross_ratio(
    p1: &ProjPoint,
    p2: &ProjPoint,
    p3: &ProjPoint,
    p4: &ProjPoint,
) -> Result<CrossRatio, ExactError> {
    let pts = [p1, p2, p3, p4];
    if let Some(p) = pts.iter().find(|p| p.coords.len() != 2) {
        return Err(ExactError::DimensionMismatch {
            expected: 2,
            found: p.coords.len(),
        });
    }
    let mut distinct: Vec<&ProjPoint> = Vec::new();
    for p in pts {
        if !distinct.contains(&p) {
            distinct.push(p);
        }
    }
    if distinct.len() < 3 {
        return Err(ExactError::DegenerateConfiguration(
            "cross-ratio needs at least three distinct points".into(),
        ));
    }
    let d = |a: &ProjPoint, b: &ProjPoint| det2(&a.coords, &b.coords);
    let num = d(p1, p3) * d(p2, p4);
    let den = d(p1, p4) * d(p2, p3);
    if den.is_zero() {
        Ok(CrossRatio::Infinite)
    } else {
        Ok(CrossRatio::Finite(num / den))
    }
}

/// Projects a vector of the ambient space onto the plane complementary to
/// `base`, dropping the coordinate where `base` is first nonzero. The result
/// may be zero.
pub fn tangent_class(base: &ProjPoint, v: &[Rational]) -> Vec<Rational> {
    let b = base.coords();
    let i = b.iter().position(|c| !c.is_zero()).expect("nonzero base");
    let s = &v[i] / &b[i];
    (0..b.len())
        .filter(|&j| j != i)
        .map(|j| &v[j] - &s * &b[j])
        .collect()
}

/// The point of the pencil of lines through `base` that `line` represents.
pub fn pencil_coordinate(base: &ProjPoint, line: &ProjLine2) -> Result<ProjPoint, ExactError> {
    if !line.contains(base) {
        return Err(ExactError::Incidence(format!(
            "line {line} does not pass through {base}"
        )));
    }
    let w = cross3(&base.xyz(), line.coeffs());
    ProjPoint::new(tangent_class(base, &w))
}

/// Whether `line` lies on the dual conic, `Lᵀ adj(C) L = 0`.
pub fn line_tangent_to_conic(line: &ProjLine2, conic: &Conic2) -> Result<bool, ExactError> {
    if conic.is_degenerate() {
        return Err(ExactError::DegenerateConic);
    }
    let adj = adjugate3(conic.matrix());
    Ok(dot(line.coeffs(), &mat_vec3(&adj, line.coeffs())).is_zero())
}

/// Serde form of a point: a list of rational strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CoordList(#[serde(with = "super::rational::vec_as_strings")] pub Vec<Rational>);

//! Genus-two curves y² = f(x) with rational points, the hyperelliptic
//! involution and the double cover of P¹.

use std::fmt;

use num_traits::{One, Zero};

use crate::exact::projective::ProjPoint;
use crate::exact::{format_rational, rat, Rational, UniPoly};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CurveError {
    #[error("f must have degree 5 or 6, found {0:?}")]
    Degree(Option<usize>),
    #[error("f is not squarefree")]
    NotSquarefree,
    #[error("point {0} is not on the curve")]
    OffCurve(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperellipticCurve {
    f: UniPoly,
}

/// A rational point. With deg f = 5 there is one point at infinity; with
/// deg f = 6 there are two, told apart by the sign of y/x³.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum CurvePoint {
    Affine { x: Rational, y: Rational },
    Infinity,
    InfinityPlus,
    InfinityMinus,
}

impl CurvePoint {
    pub fn affine(x: Rational, y: Rational) -> Self {
        CurvePoint::Affine { x, y }
    }
}

impl fmt::Display for CurvePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurvePoint::Affine { x, y } => {
                write!(f, "({}, {})", format_rational(x), format_rational(y))
            }
            CurvePoint::Infinity => f.write_str("inf"),
            CurvePoint::InfinityPlus => f.write_str("inf+"),
            CurvePoint::InfinityMinus => f.write_str("inf-"),
        }
    }
}

impl HyperellipticCurve {
    pub fn new(f: UniPoly) -> Result<Self, CurveError> {
        match f.degree() {
            Some(5 | 6) => {}
            other => return Err(CurveError::Degree(other)),
        }
        if !f.is_squarefree() {
            return Err(CurveError::NotSquarefree);
        }
        Ok(HyperellipticCurve { f })
    }

    pub fn f(&self) -> &UniPoly {
        &self.f
    }

    pub fn contains(&self, p: &CurvePoint) -> bool {
        match (p, self.f.degree()) {
            (CurvePoint::Affine { x, y }, _) => y * y == self.f.eval(x),
            (CurvePoint::Infinity, Some(5)) => true,
            (CurvePoint::InfinityPlus | CurvePoint::InfinityMinus, Some(6)) => {
                crate::exact::rational::is_square(self.f.leading().unwrap())
            }
            _ => false,
        }
    }

    fn check(&self, p: &CurvePoint) -> Result<(), CurveError> {
        if self.contains(p) {
            Ok(())
        } else {
            Err(CurveError::OffCurve(p.to_string()))
        }
    }

    /// The rational point(s) over `x`, with y ≥ 0 first.
    pub fn points_over(&self, x: &Rational) -> Vec<CurvePoint> {
        let v = self.f.eval(x);
        match crate::exact::rational::rational_sqrt(&v) {
            Some(y) if y.is_zero() => vec![CurvePoint::affine(x.clone(), y)],
            Some(y) => vec![
                CurvePoint::affine(x.clone(), y.clone()),
                CurvePoint::affine(x.clone(), -y),
            ],
            None => Vec::new(),
        }
    }

    pub fn is_weierstrass(&self, p: &CurvePoint) -> Result<bool, CurveError> {
        Ok(self.involution(p)? == *p)
    }

    pub fn involution(&self, p: &CurvePoint) -> Result<CurvePoint, CurveError> {
        self.check(p)?;
        Ok(match p {
            CurvePoint::Affine { x, y } => CurvePoint::affine(x.clone(), -y),
            CurvePoint::Infinity => CurvePoint::Infinity,
            CurvePoint::InfinityPlus => CurvePoint::InfinityMinus,
            CurvePoint::InfinityMinus => CurvePoint::InfinityPlus,
        })
    }

    /// Distinct points swapped by the involution.
    pub fn are_conjugate(&self, p: &CurvePoint, q: &CurvePoint) -> Result<bool, CurveError> {
        self.check(q)?;
        Ok(p != q && self.involution(p)? == *q)
    }

    pub fn hyperelliptic_image(&self, p: &CurvePoint) -> Result<ProjPoint, CurveError> {
        self.check(p)?;
        Ok(match p {
            CurvePoint::Affine { x, .. } => ProjPoint::p1(x.clone(), Rational::one()).unwrap(),
            _ => ProjPoint::p1(Rational::one(), rat(0)).unwrap(),
        })
    }

    /// Rational Weierstrass points: rational roots of f, plus infinity when deg f = 5.
    pub fn rational_weierstrass_points(&self) -> Vec<CurvePoint> {
        let mut out: Vec<CurvePoint> = rational_roots(&self.f)
            .into_iter()
            .map(|x| CurvePoint::affine(x, rat(0)))
            .collect();
        if self.f.degree() == Some(5) {
            out.push(CurvePoint::Infinity);
        }
        out
    }
}

/// Rational roots by the rational root test on the integer-scaled polynomial.
fn rational_roots(f: &UniPoly) -> Vec<Rational> {
    use num_bigint::BigInt;
    use num_integer::Integer;
    use num_traits::{Signed, ToPrimitive};

    let lcm = f
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = f
        .coeffs()
        .iter()
        .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
        .collect();
    let shift = ints.iter().position(|c| !c.is_zero()).unwrap_or(0);
    let mut roots = Vec::new();
    if shift > 0 {
        roots.push(rat(0));
    }
    let divisors = |n: &BigInt| -> Vec<BigInt> {
        if let Some(small) = n.abs().to_u64() {
            let mut out = Vec::new();
            let mut d = 1u64;
            while d * d <= small {
                if small % d == 0 {
                    out.push(BigInt::from(d));
                    out.push(BigInt::from(small / d));
                }
                d += 1;
            }
            return out;
        }
        let n = n.abs();
        let mut out = Vec::new();
        let mut d = BigInt::one();
        while &d * &d <= n {
            if (&n % &d).is_zero() {
                out.push(d.clone());
                out.push(&n / &d);
            }
            d += 1;
        }
        out
    };
    let (c0, lead) = (&ints[shift], ints.last().unwrap());
    let approx: Vec<f64> = f
        .coeffs()
        .iter()
        .map(|c| c.to_f64().unwrap_or(f64::NAN))
        .collect();
    // Cheap screen in floating point; exact roots always pass it.
    let maybe_root = |x: f64| {
        let (mut val, mut scale) = (0.0f64, 0.0f64);
        for c in approx.iter().rev() {
            val = val * x + c;
            scale = scale * x.abs() + c.abs();
        }
        val.is_nan() || val.abs() <= 1e-6 * scale
    };
    let qs = divisors(lead);
    for p in divisors(c0) {
        for q in &qs {
            for sign in [1, -1] {
                let cand = Rational::new(&p * sign, q.clone());
                if maybe_root(cand.to_f64().unwrap_or(f64::NAN))
                    && f.eval(&cand).is_zero()
                    && !roots.contains(&cand)
                {
                    roots.push(cand);
                }
            }
        }
    }
    roots.sort();
    roots
}

//! Truncated power series and elements of a product of branch rings.
//!
//! A [`MultiBranchElement`] is an element of `k[[t_1]] x ... x k[[t_m]]`
//! modulo `(t_1^N, ..., t_m^N)`. The truncation order is part of every value;
//! combining values of different orders is a programming error and panics,
//! while the checked entry points return [`ExactError::TruncationMismatch`].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::rational::Rational;
use super::{ExactError, UniPoly};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    /// Exactly `order` coefficients, lowest exponent first.
    coeffs: Vec<Rational>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        assert!(order > 0, "truncation order must be positive");
        TruncatedSeries {
            coeffs: vec![Rational::zero(); order],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(Rational::one(), 0, order)
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>, order: usize) -> Self {
        assert!(order > 0, "truncation order must be positive");
        coeffs.resize(order, Rational::zero());
        TruncatedSeries { coeffs }
    }

    pub fn from_poly(p: &UniPoly, order: usize) -> Self {
        Self::from_coeffs(p.coeffs().iter().take(order).cloned().collect(), order)
    }

    /// `c * t^exp`, which is the zero class when `exp >= order`.
    pub fn monomial(c: Rational, exp: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if exp < order {
            s.coeffs[exp] = c;
        }
        s
    }

    pub fn truncation(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Lowest exponent with a nonzero coefficient; `None` for the zero class.
    pub fn order(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        (0..exp).fold(Self::one(self.truncation()), |acc, _| &acc * self)
    }

    fn check(&self, other: &Self) -> Result<(), ExactError> {
        if self.truncation() == other.truncation() {
            Ok(())
        } else {
            Err(ExactError::TruncationMismatch {
                left: self.truncation(),
                right: other.truncation(),
            })
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, ExactError> {
        self.check(other)?;
        Ok(self + other)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, ExactError> {
        self.check(other)?;
        Ok(self * other)
    }

    /// Multiplicative inverse of a unit (nonzero constant term).
    pub fn inverse(&self) -> Option<Self> {
        let n = self.truncation();
        let c0 = self.coeffs[0].clone();
        if c0.is_zero() {
            return None;
        }
        let inv0 = Rational::one() / &c0;
        let mut out = vec![Rational::zero(); n];
        out[0] = inv0.clone();
        for k in 1..n {
            let mut acc = Rational::zero();
            for j in 1..=k {
                acc += &self.coeffs[j] * &out[k - j];
            }
            out[k] = -acc * &inv0;
        }
        Some(TruncatedSeries { coeffs: out })
    }

    /// `(1 + h)^exponent` for a series with constant term one, via the
    /// binomial series.
    pub fn pow_rational(&self, exponent: &Rational) -> Option<Self> {
        let n = self.truncation();
        if !self.coeffs[0].is_one() {
            return None;
        }
        let mut h = self.clone();
        h.coeffs[0] = Rational::zero();
        let mut result = Self::one(n);
        let mut term = Self::one(n);
        let mut binom = Rational::one();
        for j in 1..n {
            binom = binom * (exponent - super::rat(j as i64 - 1)) / super::rat(j as i64);
            term = &term * &h;
            if term.is_zero() {
                break;
            }
            result = &result + &term.scale(&binom);
        }
        Some(result)
    }

    /// `self(inner(t))`; `inner` must have zero constant term.
    pub fn compose(&self, inner: &Self) -> Self {
        assert_eq!(self.truncation(), inner.truncation());
        assert!(inner.coeffs[0].is_zero(), "inner series must vanish at 0");
        let n = self.truncation();
        let mut acc = Self::zero(n);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * inner) + &Self::monomial(c.clone(), 0, n);
        }
        acc
    }

    /// Compositional inverse of a series `a_1 t + a_2 t^2 + ...` with
    /// `a_1 != 0`, by Newton iteration on `self(g(t)) = t`.
    pub fn reversion(&self) -> Option<Self> {
        let n = self.truncation();
        if !self.coeffs[0].is_zero() || self.coeff(1).is_zero() {
            return None;
        }
        let t = Self::monomial(Rational::one(), 1, n);
        let deriv = self.derivative();
        let mut g = t.scale(&(Rational::one() / self.coeff(1)));
        // Each step doubles the number of correct coefficients.
        let mut correct = 2usize;
        while correct < n {
            let residual = &self.compose(&g) - &t;
            let slope = deriv.compose(&g).inverse()?;
            g = &g - &(&residual * &slope);
            correct *= 2;
        }
        Some(g)
    }

    pub fn derivative(&self) -> Self {
        let n = self.truncation();
        let coeffs = (0..n)
            .map(|i| self.coeff(i + 1) * super::rat(i as i64 + 1))
            .collect();
        Self::from_coeffs(coeffs, n)
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = UniPoly::new(self.coeffs.clone());
        write!(f, "{} + O(t^{})", p, self.truncation())
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        assert_eq!(self.truncation(), rhs.truncation(), "truncation mismatch");
        TruncatedSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        assert_eq!(self.truncation(), rhs.truncation(), "truncation mismatch");
        TruncatedSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        assert_eq!(self.truncation(), rhs.truncation(), "truncation mismatch");
        let n = self.truncation();
        let mut out = vec![Rational::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(n - i).enumerate() {
                out[i + j] += a * b;
            }
        }
        TruncatedSeries { coeffs: out }
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        self.scale(&-Rational::one())
    }
}

/// One truncated series per branch, all with the same truncation order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiBranchElement {
    branches: Vec<TruncatedSeries>,
}

impl MultiBranchElement {
    pub fn new(branches: Vec<TruncatedSeries>) -> Result<Self, ExactError> {
        let Some(first) = branches.first() else {
            return Err(ExactError::BranchCountMismatch { left: 0, right: 1 });
        };
        let n = first.truncation();
        if let Some(bad) = branches.iter().find(|b| b.truncation() != n) {
            return Err(ExactError::TruncationMismatch {
                left: n,
                right: bad.truncation(),
            });
        }
        Ok(MultiBranchElement { branches })
    }

    pub fn zero(branch_count: usize, order: usize) -> Self {
        MultiBranchElement {
            branches: vec![TruncatedSeries::zero(order); branch_count],
        }
    }

    pub fn constant(c: &Rational, branch_count: usize, order: usize) -> Self {
        MultiBranchElement {
            branches: vec![TruncatedSeries::monomial(c.clone(), 0, order); branch_count],
        }
    }

    /// Element whose component on branch `i` (0-based) is `terms[i]`,
    /// given as sparse `(coefficient, exponent)` lists.
    pub fn from_monomials(terms: &[&[(i64, usize)]], order: usize) -> Self {
        let branches = terms
            .iter()
            .map(|mons| {
                mons.iter()
                    .fold(TruncatedSeries::zero(order), |acc, &(c, e)| {
                        &acc + &TruncatedSeries::monomial(super::rat(c), e, order)
                    })
            })
            .collect();
        MultiBranchElement { branches }
    }

    pub fn branch_count(&self) -> usize {
        self.branches.len()
    }

    pub fn truncation(&self) -> usize {
        self.branches[0].truncation()
    }

    pub fn branches(&self) -> &[TruncatedSeries] {
        &self.branches
    }

    pub fn branch(&self, i: usize) -> &TruncatedSeries {
        &self.branches[i]
    }

    pub fn is_zero(&self) -> bool {
        self.branches.iter().all(TruncatedSeries::is_zero)
    }

    pub fn compatible_with(&self, other: &Self) -> Result<(), ExactError> {
        if self.branch_count() != other.branch_count() {
            return Err(ExactError::BranchCountMismatch {
                left: self.branch_count(),
                right: other.branch_count(),
            });
        }
        if self.truncation() != other.truncation() {
            return Err(ExactError::TruncationMismatch {
                left: self.truncation(),
                right: other.truncation(),
            });
        }
        Ok(())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        self.map(|s| s.scale(c))
    }

    pub fn pow(&self, exp: u32) -> Self {
        self.map(|s| s.pow(exp))
    }

    fn map(&self, f: impl Fn(&TruncatedSeries) -> TruncatedSeries) -> Self {
        MultiBranchElement {
            branches: self.branches.iter().map(f).collect(),
        }
    }

    fn zip(
        &self,
        other: &Self,
        f: impl Fn(&TruncatedSeries, &TruncatedSeries) -> TruncatedSeries,
    ) -> Self {
        assert_eq!(
            self.branch_count(),
            other.branch_count(),
            "branch count mismatch"
        );
        MultiBranchElement {
            branches: self
                .branches
                .iter()
                .zip(&other.branches)
                .map(|(a, b)| f(a, b))
                .collect(),
        }
    }
}

impl fmt::Display for MultiBranchElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .branches
            .iter()
            .enumerate()
            .map(|(i, s)| UniPoly::new(s.coeffs().to_vec()).fmt_in(&format!("t{}", i + 1)))
            .collect();
        write!(f, "{} mod t^{}", parts.join(" (+) "), self.truncation())
    }
}

impl Add for &MultiBranchElement {
    type Output = MultiBranchElement;
    fn add(self, rhs: &MultiBranchElement) -> MultiBranchElement {
        self.zip(rhs, |a, b| a + b)
    }
}

impl Sub for &MultiBranchElement {
    type Output = MultiBranchElement;
    fn sub(self, rhs: &MultiBranchElement) -> MultiBranchElement {
        self.zip(rhs, |a, b| a - b)
    }
}

impl Mul for &MultiBranchElement {
    type Output = MultiBranchElement;
    fn mul(self, rhs: &MultiBranchElement) -> MultiBranchElement {
        self.zip(rhs, |a, b| a * b)
    }
}

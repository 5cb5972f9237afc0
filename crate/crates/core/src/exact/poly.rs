//! Sparse multivariate polynomials with rational coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::rational::{format_rational, parse_rational, Rational};
use super::{ExactError, MultiBranchElement};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    vars: Vec<String>,
    /// Exponent vector (one entry per variable) to nonzero coefficient.
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl Polynomial {
    pub fn zero(vars: &[&str]) -> Self {
        Polynomial {
            vars: vars.iter().map(|v| v.to_string()).collect(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &[&str], c: Rational) -> Self {
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(vec![0; vars.len()], c);
        }
        p
    }

    /// The polynomial consisting of the single variable `name`.
    pub fn var(vars: &[&str], name: &str) -> Self {
        let idx = vars
            .iter()
            .position(|v| *v == name)
            .unwrap_or_else(|| panic!("unknown variable {name}"));
        let mut exps = vec![0; vars.len()];
        exps[idx] = 1;
        let mut p = Self::zero(vars);
        p.terms.insert(exps, Rational::one());
        p
    }

    pub fn from_terms(
        vars: &[&str],
        terms: impl IntoIterator<Item = (Vec<u32>, Rational)>,
    ) -> Self {
        let mut p = Self::zero(vars);
        for (e, c) in terms {
            assert_eq!(e.len(), vars.len(), "exponent vector length");
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, exps: Vec<u32>, c: Rational) {
        let entry = self.terms.entry(exps).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|e| e.iter().sum::<u32>());
        match degs.next() {
            Some(d) => degs.all(|x| x == d),
            None => true,
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut p = Self {
            vars: self.vars.clone(),
            terms: BTreeMap::new(),
        };
        if !c.is_zero() {
            p.terms = self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect();
        }
        p
    }

    pub fn pow(&self, exp: u32) -> Self {
        let vars: Vec<&str> = self.vars.iter().map(String::as_str).collect();
        (0..exp).fold(Self::constant(&vars, Rational::one()), |acc, _| &acc * self)
    }

    pub fn partial_derivative(&self, var_index: usize) -> Self {
        let mut p = Self {
            vars: self.vars.clone(),
            terms: BTreeMap::new(),
        };
        for (e, c) in &self.terms {
            if e[var_index] == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2[var_index] -= 1;
            p.add_term(e2, c * super::rat(e[var_index] as i64));
        }
        p
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.vars.len(), "point dimension");
        self.terms
            .iter()
            .map(|(e, c)| {
                e.iter()
                    .zip(point)
                    .fold(c.clone(), |acc, (&k, x)| acc * super::rational::pow(x, k))
            })
            .sum()
    }

    /// Substitutes a branch element for every variable, componentwise,
    /// truncating at the shared order.
    pub fn evaluate_on_branches(
        &self,
        assignment: &BTreeMap<String, MultiBranchElement>,
    ) -> Result<MultiBranchElement, ExactError> {
        let values: Vec<&MultiBranchElement> = self
            .vars
            .iter()
            .map(|v| {
                assignment
                    .get(v)
                    .ok_or_else(|| ExactError::MissingBinding(v.clone()))
            })
            .collect::<Result<_, _>>()?;
        let Some(first) = assignment.values().next() else {
            return Err(ExactError::MissingBinding("<no bindings>".into()));
        };
        for v in assignment.values() {
            first.compatible_with(v)?;
        }
        let (m, n) = (first.branch_count(), first.truncation());
        let mut acc = MultiBranchElement::zero(m, n);
        for (exps, c) in &self.terms {
            let mut term = MultiBranchElement::constant(c, m, n);
            for (value, &k) in values.iter().zip(exps) {
                if k > 0 {
                    term = &term * &value.pow(k);
                }
            }
            acc = &acc + &term;
        }
        Ok(acc)
    }

    fn same_vars(&self, other: &Self) {
        assert_eq!(
            self.vars, other.vars,
            "polynomials over different variables"
        );
    }

    /// Parses expressions such as `"x2*(x2^3 - x1^2)"` or `"y^2*z - x^3 + 1/2*x*z^2"`.
    pub fn parse(input: &str, vars: &[&str]) -> Result<Self, ExactError> {
        let mut parser = Parser {
            src: input.as_bytes(),
            pos: 0,
            vars,
        };
        let p = parser.expr()?;
        parser.skip_ws();
        if parser.pos != parser.src.len() {
            return Err(parser.error("unexpected trailing input"));
        }
        Ok(p)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        // Highest total degree first.
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|a, b| {
            let da: u32 = a.0.iter().sum();
            let db: u32 = b.0.iter().sum();
            db.cmp(&da).then_with(|| b.0.cmp(a.0))
        });
        for (e, c) in terms {
            let mono: Vec<String> = e
                .iter()
                .zip(&self.vars)
                .filter(|(k, _)| **k > 0)
                .map(|(k, v)| {
                    if *k == 1 {
                        v.clone()
                    } else {
                        format!("{v}^{k}")
                    }
                })
                .collect();
            let neg = c < &Rational::zero();
            let abs = if neg { -c } else { c.clone() };
            let body = match (mono.is_empty(), abs.is_one()) {
                (true, _) => format_rational(&abs),
                (false, true) => mono.join("*"),
                (false, false) => format!("{}*{}", format_rational(&abs), mono.join("*")),
            };
            match (first, neg) {
                (true, true) => write!(f, "-{body}")?,
                (true, false) => write!(f, "{body}")?,
                (false, true) => write!(f, " - {body}")?,
                (false, false) => write!(f, " + {body}")?,
            }
            first = false;
        }
        Ok(())
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.same_vars(rhs);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-Rational::one())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.same_vars(rhs);
        let mut out = Polynomial {
            vars: self.vars.clone(),
            terms: BTreeMap::new(),
        };
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    vars: &'a [&'a str],
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> ExactError {
        ExactError::Parse(format!("{msg} at position {}", self.pos))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Polynomial, ExactError> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -&self.term()?
            }
            Some(b'+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        while let Some(op @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let t = self.term()?;
            acc = if op == b'+' { &acc + &t } else { &acc - &t };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial, ExactError> {
        let mut acc = self.power()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            acc = &acc * &self.power()?;
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<Polynomial, ExactError> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            let digits = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
            let exp: u32 = digits
                .parse()
                .map_err(|_| self.error("expected exponent"))?;
            return Ok(base.pow(exp));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial, ExactError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_digit() || self.src[self.pos] == b'/')
                {
                    self.pos += 1;
                }
                let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                let c = parse_rational(text)?;
                Ok(Polynomial::constant(self.vars, c))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                if !self.vars.contains(&name) {
                    self.pos = start;
                    return Err(self.error(&format!("unknown variable {name:?}")));
                }
                Ok(Polynomial::var(self.vars, name))
            }
            _ => Err(self.error("expected a number, variable or '('")),
        }
    }
}

//! Irreducible-component families of the space of genus-two stable maps of
//! degree d to P^r, their generic dual graphs and dimensions.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ComponentError {
    #[error("degree {0} is at most 2g-2 = 2; only d > 2 is supported")]
    OutOfRegime(u32),
    #[error("family {family} has degree {actual}, expected {expected}")]
    DegreeMismatch {
        family: String,
        expected: u32,
        actual: u32,
    },
    #[error("invalid family: {0}")]
    Invalid(String),
    #[error("at column {column}: {message}")]
    Parse { column: usize, message: String },
}

/// Parts sorted non-increasingly, all positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self, ComponentError> {
        if parts.contains(&0) {
            return Err(ComponentError::Invalid(
                "partition parts must be positive".into(),
            ));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn sum(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Multiset union.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        Partition::new(parts).expect("parts stay positive")
    }

    /// Every partition of `n`, largest parts first: (4), (3,1), (2,2), ...
    pub fn all(n: u32) -> Vec<Partition> {
        fn go(n: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition(prefix.clone()));
                return;
            }
            for p in (1..=max.min(n)).rev() {
                prefix.push(p);
                go(n - p, p, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }

    fn key(&self) -> (u32, &[u32]) {
        (self.sum(), &self.0)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ComponentFamily {
    Main {
        degree: u32,
    },
    /// Contracted genus-two core with rational tails.
    D(Partition),
    /// Core mapping two-to-one onto a line, with tails of total degree d-2.
    HypD(Partition),
    /// Contracted elliptic curve carrying the tails, joined to an elliptic
    /// curve of degree `d0`.
    E {
        d0: u32,
        tails: Partition,
    },
    /// Two contracted elliptic curves joined by a rational bridge of degree `d0`.
    EE {
        left: Partition,
        d0: u32,
        right: Partition,
    },
    /// Contracted elliptic curve with a non-separating rational bridge.
    BrE {
        d0: u32,
        tails: Partition,
    },
}

impl ComponentFamily {
    pub fn ee(left: Partition, d0: u32, right: Partition) -> Self {
        if right.key() < left.key() {
            ComponentFamily::EE {
                left: right,
                d0,
                right: left,
            }
        } else {
            ComponentFamily::EE { left, d0, right }
        }
    }

    pub fn degree(&self) -> u32 {
        match self {
            ComponentFamily::Main { degree } => *degree,
            ComponentFamily::D(mu) => mu.sum(),
            ComponentFamily::HypD(mu) => mu.sum() + 2,
            ComponentFamily::E { d0, tails } | ComponentFamily::BrE { d0, tails } => {
                d0 + tails.sum()
            }
            ComponentFamily::EE { left, d0, right } => left.sum() + d0 + right.sum(),
        }
    }

    pub fn tail_count(&self) -> usize {
        match self {
            ComponentFamily::Main { .. } => 0,
            ComponentFamily::D(mu) | ComponentFamily::HypD(mu) => mu.len(),
            ComponentFamily::E { tails, .. } | ComponentFamily::BrE { tails, .. } => tails.len(),
            ComponentFamily::EE { left, right, .. } => left.len() + right.len(),
        }
    }

    pub fn is_main(&self) -> bool {
        matches!(self, ComponentFamily::Main { .. })
    }

    /// Families with a degree-one bridge meet main where a D family does.
    pub fn reduces_to(&self) -> Option<ComponentFamily> {
        let one = Partition(vec![1]);
        match self {
            ComponentFamily::EE { left, d0: 1, right } => {
                Some(ComponentFamily::D(left.union(&one).union(right)))
            }
            ComponentFamily::BrE { d0: 1, tails } => Some(ComponentFamily::D(one.union(tails))),
            _ => None,
        }
    }

    fn validate(&self) -> Result<(), ComponentError> {
        let bad = |m: &str| Err(ComponentError::Invalid(format!("{self}: {m}")));
        match self {
            ComponentFamily::D(mu) if mu.is_empty() => bad("needs at least one tail"),
            ComponentFamily::E { d0, .. } if *d0 < 2 => {
                bad("the elliptic component needs degree at least 2")
            }
            ComponentFamily::EE { d0: 0, .. } | ComponentFamily::BrE { d0: 0, .. } => {
                bad("the bridge needs positive degree")
            }
            _ => Ok(()),
        }
    }

    pub fn dimension(&self, r: u32) -> i64 {
        let (d, r) = (self.degree() as i64, r as i64);
        let k = self.tail_count() as i64;
        match self {
            ComponentFamily::Main { .. } => virtual_dimension(r as u32, d as u32),
            ComponentFamily::D(_) => d * (r + 1) + r - k + 3,
            ComponentFamily::HypD(_) | ComponentFamily::E { .. } => d * (r + 1) - k + 2,
            ComponentFamily::EE { .. } => d * (r + 1) + r - k + 1,
            ComponentFamily::BrE { .. } => d * (r + 1) - k + 1,
        }
    }

    fn kind_rank(&self) -> u8 {
        match self {
            ComponentFamily::Main { .. } => 0,
            ComponentFamily::D(_) => 1,
            ComponentFamily::E { .. } => 2,
            ComponentFamily::EE { .. } => 3,
            ComponentFamily::BrE { .. } => 4,
            ComponentFamily::HypD(_) => 5,
        }
    }
}

/// Reverse-lexicographic order of partitions of the same size.
fn cmp_partition(a: &Partition, b: &Partition) -> Ordering {
    b.0.cmp(&a.0)
}

impl Ord for ComponentFamily {
    fn cmp(&self, other: &Self) -> Ordering {
        use ComponentFamily::*;
        self.kind_rank()
            .cmp(&other.kind_rank())
            .then_with(|| match (self, other) {
                (Main { degree: a }, Main { degree: b }) => a.cmp(b),
                (D(a), D(b)) | (HypD(a), HypD(b)) => {
                    a.sum().cmp(&b.sum()).then_with(|| cmp_partition(a, b))
                }
                (E { d0: a, tails: ta }, E { d0: b, tails: tb })
                | (BrE { d0: a, tails: ta }, BrE { d0: b, tails: tb }) => {
                    b.cmp(a).then_with(|| cmp_partition(ta, tb))
                }
                (
                    EE {
                        left: la,
                        d0: a,
                        right: ra,
                    },
                    EE {
                        left: lb,
                        d0: b,
                        right: rb,
                    },
                ) => b
                    .cmp(a)
                    .then_with(|| la.sum().cmp(&lb.sum()))
                    .then_with(|| cmp_partition(la, lb))
                    .then_with(|| cmp_partition(ra, rb)),
                _ => Ordering::Equal,
            })
    }
}

impl PartialOrd for ComponentFamily {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub fn virtual_dimension(r: u32, d: u32) -> i64 {
    (3 - r as i64) + d as i64 * (r as i64 + 1)
}

/// Dimension of the space of maps from a genus-two curve covering a line two
/// to one, with `k` marked points.
pub fn hyperelliptic_cover_dimension(r: u32, k: u32) -> i64 {
    2 * r as i64 + 4 + k as i64
}

pub fn dimension(family: &ComponentFamily, r: u32, d: u32) -> Result<i64, ComponentError> {
    if family.degree() != d {
        return Err(ComponentError::DegreeMismatch {
            family: family.to_string(),
            expected: d,
            actual: family.degree(),
        });
    }
    Ok(family.dimension(r))
}

/// Main first, then D, E, EE, brE and hypD families.
pub fn enumerate_families(_r: u32, d: u32) -> Result<Vec<ComponentFamily>, ComponentError> {
    if d <= 2 {
        return Err(ComponentError::OutOfRegime(d));
    }
    let mut out = vec![ComponentFamily::Main { degree: d }];
    out.extend(Partition::all(d).into_iter().map(ComponentFamily::D));
    for d0 in (2..=d).rev() {
        for tails in Partition::all(d - d0) {
            out.push(ComponentFamily::E { d0, tails });
        }
    }
    for d0 in (1..=d).rev() {
        let rest = d - d0;
        for s1 in 0..=rest / 2 {
            for left in Partition::all(s1) {
                for right in Partition::all(rest - s1) {
                    if s1 * 2 == rest && right.key() < left.key() {
                        continue;
                    }
                    out.push(ComponentFamily::EE {
                        left: left.clone(),
                        d0,
                        right,
                    });
                }
            }
        }
    }
    for d0 in (1..=d).rev() {
        for tails in Partition::all(d - d0) {
            out.push(ComponentFamily::BrE { d0, tails });
        }
    }
    out.extend(Partition::all(d - 2).into_iter().map(ComponentFamily::HypD));
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum VertexRole {
    Smooth,
    CoreContracted,
    HyperellipticCover,
    Tail,
    EllipticContracted,
    Elliptic,
    Bridge,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Vertex {
    pub genus: u32,
    pub weight: u32,
    pub role: VertexRole,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DualGraph {
    pub vertices: Vec<Vertex>,
    /// Parallel edges are allowed.
    pub edges: Vec<(usize, usize)>,
}

impl DualGraph {
    pub fn total_weight(&self) -> u32 {
        self.vertices.iter().map(|v| v.weight).sum()
    }

    /// Sum of vertex genera plus the first Betti number (graphs are connected).
    pub fn total_genus(&self) -> i64 {
        let g: i64 = self.vertices.iter().map(|v| v.genus as i64).sum();
        g + self.edges.len() as i64 - self.vertices.len() as i64 + 1
    }

    fn add(&mut self, genus: u32, weight: u32, role: VertexRole) -> usize {
        self.vertices.push(Vertex {
            genus,
            weight,
            role,
        });
        self.vertices.len() - 1
    }

    fn add_tails(&mut self, at: usize, tails: &Partition) {
        for &w in tails.parts() {
            let t = self.add(0, w, VertexRole::Tail);
            self.edges.push((at, t));
        }
    }
}

pub fn generic_dual_graph(family: &ComponentFamily) -> DualGraph {
    let mut g = DualGraph {
        vertices: Vec::new(),
        edges: Vec::new(),
    };
    match family {
        ComponentFamily::Main { degree } => {
            g.add(2, *degree, VertexRole::Smooth);
        }
        ComponentFamily::D(mu) => {
            let core = g.add(2, 0, VertexRole::CoreContracted);
            g.add_tails(core, mu);
        }
        ComponentFamily::HypD(mu) => {
            let core = g.add(2, 2, VertexRole::HyperellipticCover);
            g.add_tails(core, mu);
        }
        ComponentFamily::E { d0, tails } => {
            let contracted = g.add(1, 0, VertexRole::EllipticContracted);
            let elliptic = g.add(1, *d0, VertexRole::Elliptic);
            g.edges.push((contracted, elliptic));
            g.add_tails(contracted, tails);
        }
        ComponentFamily::EE { left, d0, right } => {
            let e1 = g.add(1, 0, VertexRole::EllipticContracted);
            let bridge = g.add(0, *d0, VertexRole::Bridge);
            let e2 = g.add(1, 0, VertexRole::EllipticContracted);
            g.edges.push((e1, bridge));
            g.edges.push((bridge, e2));
            g.add_tails(e1, left);
            g.add_tails(e2, right);
        }
        ComponentFamily::BrE { d0, tails } => {
            let e = g.add(1, 0, VertexRole::EllipticContracted);
            let bridge = g.add(0, *d0, VertexRole::Bridge);
            g.edges.push((e, bridge));
            g.edges.push((e, bridge));
            g.add_tails(e, tails);
        }
    }
    g
}

impl fmt::Display for ComponentFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let with_tails = |f: &mut fmt::Formatter<'_>, head: &str, d0: u32, tails: &Partition| {
            if tails.is_empty() {
                write!(f, "{head}({d0})")
            } else {
                write!(f, "{head}({d0};{tails})")
            }
        };
        match self {
            ComponentFamily::Main { .. } => f.write_str("main"),
            ComponentFamily::D(mu) => write!(f, "D({mu})"),
            ComponentFamily::HypD(mu) => write!(f, "hypD({mu})"),
            ComponentFamily::E { d0, tails } => with_tails(f, "E", *d0, tails),
            ComponentFamily::BrE { d0, tails } => with_tails(f, "brE", *d0, tails),
            ComponentFamily::EE { left, d0, right } => write!(f, "EE({left}|{d0}|{right})"),
        }
    }
}

/// Parses the textual form. `main` carries no degree, so `degree` supplies it.
pub fn parse_family(input: &str, degree: u32) -> Result<ComponentFamily, ComponentError> {
    let mut p = SpecParser {
        src: input.as_bytes(),
        pos: 0,
    };
    let fam = p.family(degree)?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("unexpected trailing input"));
    }
    fam.validate()?;
    Ok(fam)
}

impl FromStr for ComponentFamily {
    type Err = ComponentError;

    /// `main` parses as degree 4, the degree of the smoothability catalog.
    fn from_str(s: &str) -> Result<Self, ComponentError> {
        parse_family(s, 4)
    }
}

impl Serialize for ComponentFamily {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for ComponentFamily {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

struct SpecParser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl SpecParser<'_> {
    fn err(&self, message: &str) -> ComponentError {
        ComponentError::Parse {
            column: self.pos + 1,
            message: message.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<(), ComponentError> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(&format!("expected '{}'", c as char)))
        }
    }

    fn ident(&mut self) -> String {
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_alphabetic) {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    fn number(&mut self) -> Result<u32, ComponentError> {
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a positive integer"));
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        match text.parse::<u32>() {
            Ok(0) => {
                self.pos = start;
                Err(self.err("parts must be positive"))
            }
            Ok(n) => Ok(n),
            Err(_) => {
                self.pos = start;
                Err(self.err("integer too large"))
            }
        }
    }

    /// A possibly empty comma-separated list, stopping before `)` or `|`.
    fn parts(&mut self) -> Result<Partition, ComponentError> {
        let mut parts = Vec::new();
        if matches!(self.peek(), Some(b')' | b'|')) {
            return Ok(Partition::empty());
        }
        loop {
            parts.push(self.number()?);
            if self.peek() == Some(b',') {
                self.pos += 1;
            } else {
                break;
            }
        }
        Partition::new(parts)
    }

    fn d0_and_tails(&mut self) -> Result<(u32, Partition), ComponentError> {
        let d0 = self.number()?;
        let tails = if self.peek() == Some(b';') {
            self.pos += 1;
            self.parts()?
        } else {
            Partition::empty()
        };
        Ok((d0, tails))
    }

    fn family(&mut self, degree: u32) -> Result<ComponentFamily, ComponentError> {
        let start = self.pos;
        let head = self.ident();
        if head == "main" {
            return Ok(ComponentFamily::Main { degree });
        }
        self.expect(b'(')?;
        let fam = match head.as_str() {
            "D" => ComponentFamily::D(self.parts()?),
            "hypD" => ComponentFamily::HypD(self.parts()?),
            "E" => {
                let (d0, tails) = self.d0_and_tails()?;
                ComponentFamily::E { d0, tails }
            }
            "brE" => {
                let (d0, tails) = self.d0_and_tails()?;
                ComponentFamily::BrE { d0, tails }
            }
            "EE" => {
                let left = self.parts()?;
                self.expect(b'|')?;
                let d0 = self.number()?;
                self.expect(b'|')?;
                let right = self.parts()?;
                ComponentFamily::ee(left, d0, right)
            }
            _ => {
                self.pos = start;
                self.skip_ws();
                return Err(self.err(&format!(
                    "unknown family {head:?}; expected main, D, hypD, E, EE or brE"
                )));
            }
        };
        self.expect(b')')?;
        Ok(fam)
    }
}

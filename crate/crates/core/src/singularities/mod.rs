//! Catalog of curve singularities: genus-two Gorenstein types, elliptic and
//! rational m-fold points, tailed ribbons and planar ADE germs.

mod germ;
mod gorenstein;
mod ribbon;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub use germ::{
    classify_germ, germ_signature, intersection_multiplicity, BranchType, Contact, GermError,
    GermSignature, PlanarBranch,
};
pub use gorenstein::{
    mutate_presentation, type_i_presentation, type_ii_presentation, verify_presentation,
    GorensteinPresentation, PresentationError,
};
pub use ribbon::{ribbon_genus, tailed_ribbon_local_ideal};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AdeKind {
    A,
    D,
    E,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SingularityType {
    Ade { kind: AdeKind, index: u32 },
    GenusTwoTypeI { branches: u32 },
    GenusTwoTypeII { branches: u32 },
    EllipticMFold(u32),
    RationalMFold(u32),
    OrdinaryPlanarMFold(u32),
    TailedRibbon { tails: Vec<u32> },
}

impl SingularityType {
    pub fn a(index: u32) -> Self {
        SingularityType::Ade {
            kind: AdeKind::A,
            index,
        }
    }

    pub fn d(index: u32) -> Self {
        SingularityType::Ade {
            kind: AdeKind::D,
            index,
        }
    }

    pub fn e(index: u32) -> Self {
        SingularityType::Ade {
            kind: AdeKind::E,
            index,
        }
    }

    pub fn is_ade(&self) -> bool {
        matches!(self, SingularityType::Ade { .. })
    }

    /// Milnor number; `None` for non-planar or non-reduced singularities.
    pub fn milnor_number(&self) -> Option<u32> {
        match self {
            SingularityType::Ade { index, .. } => Some(*index),
            SingularityType::GenusTwoTypeI { branches: m }
            | SingularityType::GenusTwoTypeII { branches: m }
                if *m <= 3 =>
            {
                Some(m + 3)
            }
            SingularityType::EllipticMFold(m) if *m <= 3 => Some(m + 1),
            SingularityType::RationalMFold(2) => Some(1),
            SingularityType::OrdinaryPlanarMFold(m) => Some((m - 1) * (m - 1)),
            _ => None,
        }
    }

    fn validate(&self) -> Result<(), String> {
        let ok = match self {
            SingularityType::Ade {
                kind: AdeKind::A,
                index,
            } => *index >= 1,
            SingularityType::Ade {
                kind: AdeKind::D,
                index,
            } => *index >= 4,
            SingularityType::Ade {
                kind: AdeKind::E,
                index,
            } => (6..=8).contains(index),
            SingularityType::GenusTwoTypeI { branches } => *branches >= 1,
            SingularityType::GenusTwoTypeII { branches } => *branches >= 2,
            SingularityType::EllipticMFold(m) => *m >= 1,
            SingularityType::RationalMFold(m) => *m >= 2,
            SingularityType::OrdinaryPlanarMFold(m) => *m >= 3,
            SingularityType::TailedRibbon { tails } => {
                !tails.is_empty() && tails.iter().all(|&t| t >= 1)
            }
        };
        if ok {
            Ok(())
        } else {
            Err(format!("index out of range in {self}"))
        }
    }
}

impl fmt::Display for SingularityType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SingularityType::Ade { kind, index } => write!(f, "{kind:?}{index}"),
            SingularityType::GenusTwoTypeI { branches } => write!(f, "I_{branches}"),
            SingularityType::GenusTwoTypeII { branches } => write!(f, "II_{branches}"),
            SingularityType::EllipticMFold(m) => write!(f, "elliptic {m}-fold point"),
            SingularityType::RationalMFold(m) => write!(f, "rational {m}-fold point"),
            SingularityType::OrdinaryPlanarMFold(m) => write!(f, "planar {m}-fold point"),
            SingularityType::TailedRibbon { tails } => {
                let parts: Vec<String> = tails.iter().map(u32::to_string).collect();
                write!(f, "tailed ribbon ({})", parts.join(","))
            }
        }
    }
}

impl FromStr for SingularityType {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let s = s.trim();
        let bad = || format!("unknown singularity type {s:?}");
        let num = |t: &str| t.trim().parse::<u32>().map_err(|_| bad());
        let parsed = if let Some(rest) = s.strip_prefix("II_") {
            SingularityType::GenusTwoTypeII {
                branches: num(rest)?,
            }
        } else if let Some(rest) = s.strip_prefix("I_") {
            SingularityType::GenusTwoTypeI {
                branches: num(rest)?,
            }
        } else if let Some(rest) = s.strip_prefix("tailed ribbon") {
            let inner = rest
                .trim()
                .strip_prefix('(')
                .and_then(|r| r.strip_suffix(')'))
                .ok_or_else(bad)?;
            let tails = inner.split(',').map(num).collect::<Result<_, _>>()?;
            SingularityType::TailedRibbon { tails }
        } else if let Some((kind, m)) = mfold(s) {
            let m = num(m)?;
            match kind {
                "elliptic" => SingularityType::EllipticMFold(m),
                "rational" => SingularityType::RationalMFold(m),
                "planar" => SingularityType::OrdinaryPlanarMFold(m),
                _ => return Err(bad()),
            }
        } else {
            let (head, tail) = s.split_at(s.chars().next().map_or(0, char::len_utf8));
            let kind = match head {
                "A" => AdeKind::A,
                "D" => AdeKind::D,
                "E" => AdeKind::E,
                _ => return Err(bad()),
            };
            SingularityType::Ade {
                kind,
                index: num(tail)?,
            }
        };
        parsed.validate()?;
        Ok(parsed)
    }
}

/// Splits `"elliptic 3-fold point"` or `"planar-4-fold"` into kind and m.
fn mfold(s: &str) -> Option<(&str, &str)> {
    let s = s.strip_suffix(" point").unwrap_or(s);
    let s = s.strip_suffix("-fold")?;
    let (kind, m) = s.split_once([' ', '-'])?;
    Some((kind, m))
}

impl Serialize for SingularityType {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for SingularityType {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_parse_round_trip() {
        let all = [
            SingularityType::a(4),
            SingularityType::d(5),
            SingularityType::e(7),
            SingularityType::GenusTwoTypeI { branches: 3 },
            SingularityType::GenusTwoTypeII { branches: 4 },
            SingularityType::EllipticMFold(2),
            SingularityType::RationalMFold(3),
            SingularityType::OrdinaryPlanarMFold(4),
            SingularityType::TailedRibbon {
                tails: vec![1, 1, 1, 1],
            },
        ];
        for s in all {
            assert_eq!(s.to_string().parse::<SingularityType>().unwrap(), s);
        }
        assert_eq!(
            "planar-4-fold".parse::<SingularityType>().unwrap(),
            SingularityType::OrdinaryPlanarMFold(4)
        );
        assert!("D3".parse::<SingularityType>().is_err());
        assert!("E9".parse::<SingularityType>().is_err());
        assert!("X1".parse::<SingularityType>().is_err());
    }

    #[test]
    fn milnor_numbers_of_low_branch_types() {
        assert_eq!(
            SingularityType::GenusTwoTypeI { branches: 1 }.milnor_number(),
            Some(4)
        );
        assert_eq!(
            SingularityType::GenusTwoTypeI { branches: 2 }.milnor_number(),
            Some(5)
        );
        assert_eq!(
            SingularityType::GenusTwoTypeII { branches: 2 }.milnor_number(),
            Some(5)
        );
        assert_eq!(
            SingularityType::GenusTwoTypeII { branches: 3 }.milnor_number(),
            Some(6)
        );
        assert_eq!(SingularityType::EllipticMFold(3).milnor_number(), Some(4));
        assert_eq!(
            SingularityType::TailedRibbon { tails: vec![1] }.milnor_number(),
            None
        );
    }
}

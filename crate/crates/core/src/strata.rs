//! Singularity strata of plane quartics, loaded from a checked-in table.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::singularities::SingularityType;

const TABLE: &str = include_str!("../data/quartic_strata.tsv");

/// Dimension of the linear system of plane quartics.
pub const QUARTIC_SYSTEM_DIM: i64 = 14;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Reducibility {
    Irreducible,
    #[serde(rename = "cubic+line")]
    CubicLine,
    TwoConics,
    #[serde(rename = "conic+two-lines")]
    ConicTwoLines,
    FourLines,
    NonReduced,
}

impl Reducibility {
    pub const ALL: [Reducibility; 6] = [
        Reducibility::Irreducible,
        Reducibility::CubicLine,
        Reducibility::TwoConics,
        Reducibility::ConicTwoLines,
        Reducibility::FourLines,
        Reducibility::NonReduced,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Reducibility::Irreducible => "irreducible",
            Reducibility::CubicLine => "cubic+line",
            Reducibility::TwoConics => "two-conics",
            Reducibility::ConicTwoLines => "conic+two-lines",
            Reducibility::FourLines => "four-lines",
            Reducibility::NonReduced => "non-reduced",
        }
    }
}

impl fmt::Display for Reducibility {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Reducibility {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Reducibility::ALL
            .into_iter()
            .find(|r| r.as_str() == s)
            .ok_or_else(|| format!("unknown reducibility {s:?}"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StratumRecord {
    pub reducibility: Reducibility,
    /// Geometric genera of the components; empty for non-reduced rows.
    pub genera: Vec<u32>,
    pub singular_points: Option<u32>,
    /// Sorted multiset of singularities; empty for non-reduced rows.
    pub configuration: Vec<SingularityType>,
    pub description: Option<String>,
    pub dim: u32,
    pub note: Option<String>,
}

impl StratumRecord {
    pub fn configuration_string(&self) -> String {
        if let Some(d) = &self.description {
            return d.clone();
        }
        format_configuration(&self.configuration)
    }
}

/// `A1^2 A3` style: equal entries grouped with an exponent.
pub fn format_configuration(config: &[SingularityType]) -> String {
    let mut out: Vec<String> = Vec::new();
    let mut i = 0;
    while i < config.len() {
        let n = config[i..].iter().take_while(|s| **s == config[i]).count();
        let name = match &config[i] {
            SingularityType::OrdinaryPlanarMFold(m) => format!("planar-{m}-fold"),
            other => other.to_string(),
        };
        out.push(if n == 1 { name } else { format!("{name}^{n}") });
        i += n;
    }
    out.join(" ")
}

pub fn parse_configuration(s: &str) -> Result<Vec<SingularityType>, String> {
    let mut out = Vec::new();
    for token in s.split_whitespace() {
        let (name, count) = match token.split_once('^') {
            Some((n, c)) => (
                n,
                c.parse::<usize>()
                    .map_err(|_| format!("bad exponent in {token:?}"))?,
            ),
            None => (token, 1),
        };
        let sing: SingularityType = name.parse()?;
        out.extend(std::iter::repeat_n(sing, count));
    }
    out.sort();
    Ok(out)
}

fn parse_row(line: &str) -> Result<StratumRecord, String> {
    let cols: Vec<&str> = line.split('\t').collect();
    if cols.len() != 6 {
        return Err(format!("expected 6 columns: {line:?}"));
    }
    let reducibility: Reducibility = cols[0].parse()?;
    let dim = cols[4]
        .parse()
        .map_err(|_| format!("bad dimension in {line:?}"))?;
    let note = (!cols[5].is_empty()).then(|| cols[5].to_string());
    if reducibility == Reducibility::NonReduced {
        return Ok(StratumRecord {
            reducibility,
            genera: Vec::new(),
            singular_points: None,
            configuration: Vec::new(),
            description: Some(cols[3].to_string()),
            dim,
            note,
        });
    }
    let genera = cols[1]
        .split('+')
        .map(|g| g.parse().map_err(|_| format!("bad genus in {line:?}")))
        .collect::<Result<_, _>>()?;
    Ok(StratumRecord {
        reducibility,
        genera,
        singular_points: Some(
            cols[2]
                .parse()
                .map_err(|_| format!("bad count in {line:?}"))?,
        ),
        configuration: parse_configuration(cols[3])?,
        description: None,
        dim,
        note,
    })
}

/// All rows in table order, including the non-reduced ones.
pub fn strata_table() -> &'static [StratumRecord] {
    static ROWS: OnceLock<Vec<StratumRecord>> = OnceLock::new();
    ROWS.get_or_init(|| {
        TABLE
            .lines()
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(|l| parse_row(l).expect("bundled strata table is well formed"))
            .collect()
    })
}

pub fn lookup(
    config: &[SingularityType],
    filter: Option<Reducibility>,
) -> Vec<&'static StratumRecord> {
    let mut want = config.to_vec();
    want.sort();
    strata_table()
        .iter()
        .filter(|r| r.description.is_none() && r.configuration == want)
        .filter(|r| filter.is_none_or(|f| r.reducibility == f))
        .collect()
}

/// For a non-reduced row, the reduced class with the same component degrees,
/// of which it is a limit: the double conic degenerates from two conics, the
/// rows with a conic from a conic and two lines, the rest from four lines.
pub fn degeneration_class(record: &StratumRecord) -> Option<Reducibility> {
    let d = record.description.as_deref()?;
    Some(if d == "double conic" {
        Reducibility::TwoConics
    } else if d.contains("conic") {
        Reducibility::ConicTwoLines
    } else {
        Reducibility::FourLines
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CodimDiagnostic {
    pub expected: i64,
    pub actual: i64,
    pub deviation: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("codimension diagnostic needs an all-ADE configuration, found {0}")]
pub struct UnsupportedConfiguration(pub String);

/// Compares the table dimension with 14 minus the total Milnor number.
pub fn codim_diagnostic(
    record: &StratumRecord,
) -> Result<CodimDiagnostic, UnsupportedConfiguration> {
    if record.configuration.is_empty() || !record.configuration.iter().all(SingularityType::is_ade)
    {
        return Err(UnsupportedConfiguration(record.configuration_string()));
    }
    let milnor: i64 = record
        .configuration
        .iter()
        .filter_map(|s| s.milnor_number())
        .map(i64::from)
        .sum();
    let expected = QUARTIC_SYSTEM_DIM - milnor;
    let actual = record.dim as i64;
    Ok(CodimDiagnostic {
        expected,
        actual,
        deviation: expected - actual,
    })
}

//! Where each degree-four boundary family meets the main component.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::decide::{rule, Rule};
use crate::components::{enumerate_families, ComponentFamily};
use crate::singularities::SingularityType;
use crate::strata::{strata_table, Reducibility};

/// Marked genus-two moduli: all of M(2,k), or its divisors where a marking
/// is Weierstrass (W) or two markings are conjugate (K).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "space", content = "markings")]
pub enum MarkedModuli {
    M(u32),
    W(u32),
    K(u32),
}

impl MarkedModuli {
    pub fn dim(self) -> i64 {
        match self {
            MarkedModuli::M(k) => 3 + k as i64,
            MarkedModuli::W(k) | MarkedModuli::K(k) => 2 + k as i64,
        }
    }
}

impl fmt::Display for MarkedModuli {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (s, k) = match self {
            MarkedModuli::M(k) => ("M", k),
            MarkedModuli::W(k) => ("W", k),
            MarkedModuli::K(k) => ("K", k),
        };
        write!(f, "{s}(2,{k})")
    }
}

pub fn intersection_dimension_from_strata(stratum_dim: i64, moduli: MarkedModuli) -> i64 {
    stratum_dim + moduli.dim()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StratumRef {
    pub reducibility: Reducibility,
    pub configuration: String,
}

impl StratumRef {
    /// Dimension recorded in the quartic strata table.
    pub fn table_dim(&self) -> Option<i64> {
        strata_table()
            .iter()
            .find(|r| {
                r.reducibility == self.reducibility
                    && r.configuration_string() == self.configuration
            })
            .map(|r| r.dim as i64)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AccountingTerm {
    pub label: String,
    pub value: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub stratum: Option<StratumRef>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntersectionComponent {
    pub description: String,
    pub dim: i64,
    pub witness: Option<SingularityType>,
    pub clause: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub accounting: Vec<AccountingTerm>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "relation", rename_all = "snake_case")]
pub enum Relation {
    Main,
    Contained,
    ReducesTo {
        target: ComponentFamily,
    },
    Meets {
        components: Vec<IntersectionComponent>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogRecord {
    pub family: ComponentFamily,
    pub family_dim: i64,
    #[serde(flatten)]
    pub relation: Relation,
}

impl CatalogRecord {
    /// Dimensions of the intersection with main, one per component.
    pub fn intersection_dims(&self) -> Vec<i64> {
        match &self.relation {
            Relation::Main | Relation::Contained => vec![self.family_dim],
            Relation::ReducesTo { .. } => Vec::new(),
            Relation::Meets { components } => components.iter().map(|c| c.dim).collect(),
        }
    }
}

fn stratum(reducibility: Reducibility, configuration: &str, value: i64) -> AccountingTerm {
    AccountingTerm {
        label: format!("{configuration} stratum"),
        value,
        stratum: Some(StratumRef {
            reducibility,
            configuration: configuration.into(),
        }),
    }
}

fn moduli(m: MarkedModuli) -> AccountingTerm {
    AccountingTerm {
        label: m.to_string(),
        value: m.dim(),
        stratum: None,
    }
}

fn extra(label: &str, value: i64) -> AccountingTerm {
    AccountingTerm {
        label: label.into(),
        value,
        stratum: None,
    }
}

struct Comp {
    description: &'static str,
    dim: Option<i64>,
    accounting: Vec<AccountingTerm>,
}

fn counted(description: &'static str, accounting: Vec<AccountingTerm>) -> Comp {
    Comp {
        description,
        dim: None,
        accounting,
    }
}

fn plain(description: &'static str, dim: i64) -> Comp {
    Comp {
        description,
        dim: Some(dim),
        accounting: Vec::new(),
    }
}

fn components(family: &ComponentFamily) -> Vec<Comp> {
    use MarkedModuli::{K, M, W};
    use Reducibility::*;
    let label = family.to_string();
    match label.as_str() {
        "D(4)" => vec![
            counted(
                "E6 quartic, general attaching point",
                vec![stratum(Irreducible, "E6", 8), moduli(M(1))],
            ),
            counted(
                "A1-A4 quartic, Weierstrass attaching point",
                vec![stratum(Irreducible, "A1 A4", 9), moduli(W(1))],
            ),
        ],
        "D(3,1)" => vec![
            counted(
                "cuspidal cubic with its tangent line, E7",
                vec![stratum(CubicLine, "E7", 7), moduli(M(2))],
            ),
            counted(
                "cuspidal cubic with a line through the cusp, D5",
                vec![stratum(CubicLine, "A1 D5", 8), moduli(W(2))],
            ),
            counted(
                "nodal cubic with a flex line, A1-A5",
                vec![stratum(CubicLine, "A1 A5", 8), moduli(K(2))],
            ),
        ],
        "D(2,2)" => vec![
            counted(
                "conics meeting with multiplicities one and three",
                vec![stratum(TwoConics, "A1 A5", 8), moduli(K(2))],
            ),
            counted(
                "double line with a conic tangent at a branch point",
                vec![extra("double line with a tangent conic", 7), moduli(M(2))],
            ),
        ],
        "D(2,1,1)" => vec![
            counted(
                "line tangent to the conic at the concurrency point",
                vec![stratum(ConicTwoLines, "A1 D6", 7), moduli(K(3))],
            ),
            counted(
                "three concurrent lines, one double and ramified over the point",
                vec![
                    stratum(NonReduced, "three concurrent lines, one double", 5),
                    extra("ramification point", 1),
                    moduli(M(3)),
                ],
            ),
            counted(
                "conic with a tangent line carrying both degree-one tails",
                vec![
                    stratum(NonReduced, "conic and tangent double line", 6),
                    moduli(M(3)),
                ],
            ),
        ],
        "D(1,1,1,1)" => vec![counted(
            "four concurrent lines with matching cross-ratio",
            vec![
                stratum(FourLines, "planar-4-fold", 6),
                moduli(M(4)),
                extra("cross-ratio condition", -1),
            ],
        )],
        "E(4)" => vec![plain("image of type A1-A2", 12)],
        "E(3;1)" => vec![plain("line tangent to the cubic", 12)],
        "E(2;2)" => vec![
            plain("line tangent to the conic", 12),
            plain("conic through a branch point of the double cover", 12),
        ],
        "EE(|4|)" => vec![plain("image of type A1-A2^2", 11)],
        "EE(|3|1)" => vec![plain("cuspidal cubic with a tangent line, A1-A2-A3", 11)],
        "EE(|2|2)" => vec![
            plain("bridge ramified at E1, conic tangent to the line", 11),
            plain(
                "bridge ramified at E1, conic through the second ramification point",
                11,
            ),
        ],
        "EE(|2|1,1)" => vec![plain(
            "E1 attached at a ramification point of the bridge",
            11,
        )],
        "EE(1|2|1)" => vec![
            plain("both lines equal to the doubly covered line", 10),
            plain("one line equal, the other through a branch point", 10),
            plain("both lines through branch points", 10),
        ],
        "brE(4)" => vec![plain("image contains a tacnode, A1-A3", 12)],
        "hypD(2)" => vec![plain(
            "tail doubly covers a line, ramified at the attaching point",
            11,
        )],
        _ => Vec::new(),
    }
}

/// Clause names of the decider, grouped by catalog component.
fn component_clauses(family: &ComponentFamily, clauses: &[&'static str]) -> Vec<Vec<&'static str>> {
    if family.to_string() == "EE(1|2|1)" {
        return vec![
            vec!["equal_equal"],
            vec!["equal_branch", "branch_equal"],
            vec!["branch_branch"],
        ];
    }
    clauses.iter().map(|c| vec![*c]).collect()
}

pub fn catalog_record(family: &ComponentFamily) -> Option<CatalogRecord> {
    let family_dim = family.dimension(2);
    let relation = match rule(family)? {
        Rule::Main => Relation::Main,
        Rule::Contained => Relation::Contained,
        Rule::Reduces(target) => Relation::ReducesTo { target },
        Rule::Clauses(specs) => {
            let names: Vec<&'static str> = specs.iter().map(|s| s.name).collect();
            let groups = component_clauses(family, &names);
            let comps = components(family);
            assert_eq!(
                groups.len(),
                comps.len(),
                "catalog and rule disagree for {family}"
            );
            let components = comps
                .into_iter()
                .zip(groups)
                .map(|(c, group)| {
                    let spec = specs.iter().find(|s| s.name == group[0]).unwrap();
                    let dim = c
                        .dim
                        .unwrap_or_else(|| c.accounting.iter().map(|t| t.value).sum());
                    IntersectionComponent {
                        description: c.description.into(),
                        dim,
                        witness: Some(spec.witness.clone()),
                        clause: Some(group.join("|")),
                        accounting: c.accounting,
                    }
                })
                .collect();
            Relation::Meets { components }
        }
    };
    Some(CatalogRecord {
        family: family.clone(),
        family_dim,
        relation,
    })
}

/// One record per degree-four family, in enumeration order.
pub fn intersection_catalog() -> Vec<CatalogRecord> {
    enumerate_families(2, 4)
        .expect("degree four is in range")
        .iter()
        .map(|f| catalog_record(f).expect("every enumerated family has a rule"))
        .collect()
}

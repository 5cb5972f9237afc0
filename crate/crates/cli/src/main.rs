//! `g2maps`: enumeration, singularity verification, quartic strata and
//! smoothability checks for genus-two stable maps.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use g2maps::components::{dimension, enumerate_families, parse_family, ComponentFamily};
use g2maps::singularities::{
    mutate_presentation, ribbon_genus, type_i_presentation, type_ii_presentation,
    verify_presentation, GorensteinPresentation, SingularityType,
};
use g2maps::smoothability::{
    decide, intersection_catalog, CatalogRecord, Outcome, Relation, SmoothabilityInstance,
};
use g2maps::strata::{
    degeneration_class, parse_configuration, strata_table, Reducibility, StratumRecord,
};

const SCHEMA: &str = include_str!("../schema/instance.v1.schema.json");

const EXIT_VERIFY: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_NOT_SMOOTHABLE: u8 = 3;
const EXIT_REDUCES: u8 = 4;

#[derive(Parser)]
#[command(
    name = "g2maps",
    version,
    about = "Genus-two stable maps: components, singularities, smoothability"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Tsv,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// List the irreducible-component families in degree d and their dimensions.
    Enumerate {
        #[arg(long)]
        r: u32,
        #[arg(long)]
        d: u32,
        #[arg(long, value_enum, default_value = "tsv")]
        format: Format,
    },
    /// Dimension of one family in P^r.
    Dim {
        #[arg(long)]
        family: String,
        #[arg(long)]
        r: u32,
        /// Needed only for `main`.
        #[arg(long)]
        d: Option<u32>,
    },
    /// Check the Gorenstein presentations and tailed-ribbon genera.
    VerifySingularities {
        #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u32).range(2..))]
        max_branches: u32,
        /// Corrupt the first presentation before checking it.
        #[arg(long, hide = true)]
        inject_mutant: bool,
    },
    /// Decide smoothability of the map described by an instance document.
    Check {
        instance: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: ReportFormat,
    },
    /// Where a degree-four family meets the main component.
    Intersect {
        /// All families when omitted.
        #[arg(long)]
        family: Option<String>,
        #[arg(long, value_enum, default_value = "tsv")]
        format: Format,
    },
    /// The singularity strata of plane quartics.
    Strata {
        /// `key=value` with key reducibility, configuration or dim; repeatable.
        #[arg(long)]
        filter: Vec<String>,
        #[arg(long, value_enum, default_value = "tsv")]
        format: Format,
    },
}

struct Failure {
    code: u8,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

type CmdResult = Result<(String, u8), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Enumerate { r, d, format } => cmd_enumerate(r, d, format),
        Command::Dim { family, r, d } => cmd_dim(&family, r, d),
        Command::VerifySingularities {
            max_branches,
            inject_mutant,
        } => cmd_verify(max_branches, inject_mutant),
        Command::Check { instance, format } => cmd_check(&instance, format),
        Command::Intersect { family, format } => cmd_intersect(family.as_deref(), format),
        Command::Strata { filter, format } => cmd_strata(&filter, format),
    };
    match result {
        Ok((out, code)) => {
            print!("{out}");
            ExitCode::from(code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn json_text<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    s
}

#[derive(Serialize, Deserialize)]
struct FamilyRow {
    family: String,
    dimension: i64,
}

fn cmd_enumerate(r: u32, d: u32, format: Format) -> CmdResult {
    let fams = enumerate_families(r, d).map_err(|e| usage(e.to_string()))?;
    let rows: Vec<FamilyRow> = fams
        .iter()
        .map(|f| FamilyRow {
            family: f.to_string(),
            dimension: f.dimension(r),
        })
        .collect();
    let out = match format {
        Format::Json => json_text(&rows),
        Format::Tsv => {
            let mut s = String::from("family\tdimension\n");
            for row in &rows {
                writeln!(s, "{}\t{}", row.family, row.dimension).unwrap();
            }
            s
        }
    };
    Ok((out, 0))
}

fn cmd_dim(spec: &str, r: u32, d: Option<u32>) -> CmdResult {
    let probe = parse_family(spec, d.unwrap_or(4)).map_err(|e| usage(format!("{spec}: {e}")))?;
    if probe.is_main() && d.is_none() {
        return Err(usage("main needs --d"));
    }
    let degree = d.unwrap_or(probe.degree());
    if degree <= 2 {
        return Err(usage(format!(
            "degree {degree} is out of range; need d > 2"
        )));
    }
    let dim = dimension(&probe, r, degree).map_err(|e| usage(e.to_string()))?;
    Ok((format!("{probe}\t{dim}\n"), 0))
}

fn planar_name(kind: &SingularityType) -> Option<&'static str> {
    match kind {
        SingularityType::GenusTwoTypeI { branches: 1 } => Some("A4"),
        SingularityType::GenusTwoTypeI { branches: 2 } => Some("D5"),
        SingularityType::GenusTwoTypeII { branches: 2 } => Some("A5"),
        _ => None,
    }
}

fn cmd_verify(max: u32, inject_mutant: bool) -> CmdResult {
    let mut presentations: Vec<GorensteinPresentation> = Vec::new();
    for m in 1..=max {
        presentations.push(type_i_presentation(m).map_err(|e| usage(e.to_string()))?);
    }
    for m in 2..=max {
        presentations.push(type_ii_presentation(m).map_err(|e| usage(e.to_string()))?);
    }
    if inject_mutant {
        presentations[0] = mutate_presentation(&presentations[0]);
    }
    let mut out = String::new();
    let mut failed: Vec<String> = Vec::new();
    for p in &presentations {
        let name = match planar_name(&p.kind) {
            Some(alias) => format!("{} ({alias})", p.kind),
            None => p.kind.to_string(),
        };
        let ok = verify_presentation(p);
        writeln!(
            out,
            "{name}\t{} equations\t{}",
            p.equations.len(),
            if ok { "ok" } else { "FAIL" }
        )
        .unwrap();
        if !ok {
            failed.push(name);
        }
    }
    let cap = max.min(4);
    for k in 1..=4u32 {
        let mut count = 0;
        let mut bad = Vec::new();
        let mut ms = vec![1u32; k as usize];
        loop {
            count += 1;
            if ribbon_genus(k, &ms) != 2 {
                bad.push(format!("{ms:?}"));
            }
            let Some(i) = ms.iter().position(|&m| m < cap) else {
                break;
            };
            ms[i] += 1;
            ms[..i].iter_mut().for_each(|m| *m = 1);
        }
        let status = if bad.is_empty() {
            "ok".to_string()
        } else {
            format!("FAIL {}", bad.join(" "))
        };
        writeln!(
            out,
            "tailed ribbons k={k} m<={cap}\t{count} configurations\t{status}"
        )
        .unwrap();
        if !bad.is_empty() {
            failed.push(format!("tailed ribbon k={k}"));
        }
    }
    if failed.is_empty() {
        Ok((out, 0))
    } else {
        print!("{out}");
        Err(Failure {
            code: EXIT_VERIFY,
            message: format!("verification failed: {}", failed.join(", ")),
        })
    }
}

fn schema_errors(doc: &Value) -> Vec<String> {
    let schema: Value = serde_json::from_str(SCHEMA).expect("bundled schema is JSON");
    let validator = jsonschema::validator_for(&schema).expect("bundled schema compiles");
    validator
        .iter_errors(doc)
        .map(|e| {
            let path = e.instance_path().to_string();
            format!("{}: {e}", if path.is_empty() { "/" } else { &path })
        })
        .collect()
}

fn load_instance(path: &PathBuf) -> Result<SmoothabilityInstance, Failure> {
    let text =
        std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    let doc: Value = serde_json::from_str(&text)
        .map_err(|e| usage(format!("{}: invalid JSON: {e}", path.display())))?;
    let errors = schema_errors(&doc);
    if !errors.is_empty() {
        return Err(usage(format!(
            "{}: schema violation\n  {}",
            path.display(),
            errors.join("\n  ")
        )));
    }
    SmoothabilityInstance::from_value(&doc).map_err(|e| {
        let ptr = if e.pointer.is_empty() {
            "/"
        } else {
            &e.pointer
        };
        usage(format!("{}: {ptr}: {}", path.display(), e.message))
    })
}

fn exit_code(outcome: &Outcome) -> u8 {
    match outcome {
        Outcome::Smoothable { .. } | Outcome::ContainedInMain => 0,
        Outcome::NotSmoothable { .. } => EXIT_NOT_SMOOTHABLE,
        Outcome::ReducesTo { .. } => EXIT_REDUCES,
    }
}

fn cmd_check(path: &PathBuf, format: ReportFormat) -> CmdResult {
    let inst = load_instance(path)?;
    let verdict = decide(&inst).map_err(|e| usage(e.to_string()))?;
    let code = exit_code(&verdict.outcome);
    let out = match format {
        ReportFormat::Json => json_text(&verdict),
        ReportFormat::Text => {
            let mut s = String::new();
            writeln!(s, "family: {}", verdict.family).unwrap();
            writeln!(s, "outcome: {}", verdict.outcome).unwrap();
            writeln!(s, "trace:").unwrap();
            for e in &verdict.trace {
                write!(s, "  [{}] {}: {}", e.clause, e.predicate, e.holds).unwrap();
                if !e.detail.is_empty() {
                    write!(s, "  ({})", e.detail).unwrap();
                }
                s.push('\n');
            }
            s
        }
    };
    Ok((out, code))
}

fn intersect_rows(rec: &CatalogRecord) -> Vec<[String; 7]> {
    let head = |relation: &str, desc: String, dim: String, witness: String, clause: String| {
        [
            rec.family.to_string(),
            rec.family_dim.to_string(),
            relation.to_string(),
            desc,
            dim,
            witness,
            clause,
        ]
    };
    let dash = || "-".to_string();
    match &rec.relation {
        Relation::Main => vec![head(
            "main",
            "main itself".into(),
            rec.family_dim.to_string(),
            dash(),
            dash(),
        )],
        Relation::Contained => {
            vec![head(
                "contained",
                "contained in main".into(),
                rec.family_dim.to_string(),
                dash(),
                dash(),
            )]
        }
        Relation::ReducesTo { target } => vec![head(
            "reduces_to",
            target.to_string(),
            dash(),
            dash(),
            dash(),
        )],
        Relation::Meets { components } => components
            .iter()
            .map(|c| {
                head(
                    "meets",
                    c.description.clone(),
                    c.dim.to_string(),
                    c.witness.as_ref().map_or_else(dash, ToString::to_string),
                    c.clause.clone().unwrap_or_else(dash),
                )
            })
            .collect(),
    }
}

fn cmd_intersect(spec: Option<&str>, format: Format) -> CmdResult {
    let catalog = intersection_catalog();
    let records: Vec<CatalogRecord> = match spec {
        None => catalog,
        Some(s) => {
            let fam: ComponentFamily =
                parse_family(s, 4).map_err(|e| usage(format!("{s}: {e}")))?;
            let rec = catalog.into_iter().find(|r| r.family == fam);
            vec![rec.ok_or_else(|| usage(format!("{fam} is not a degree-four family")))?]
        }
    };
    let out = match format {
        Format::Json => json_text(&records),
        Format::Tsv => {
            let mut s =
                String::from("family\tfamily_dim\trelation\tcomponent\tdim\twitness\tclause\n");
            for row in records.iter().flat_map(intersect_rows) {
                s.push_str(&row.join("\t"));
                s.push('\n');
            }
            s
        }
    };
    Ok((out, 0))
}

enum StrataFilter {
    Reducibility(Reducibility),
    Configuration(String),
    Dim(u32),
}

impl StrataFilter {
    fn parse(s: &str) -> Result<Self, Failure> {
        let (k, v) = s
            .split_once('=')
            .ok_or_else(|| usage(format!("filter {s:?} is not key=value")))?;
        match k.trim() {
            "reducibility" => Ok(StrataFilter::Reducibility(v.trim().parse().map_err(usage)?)),
            "configuration" => {
                let v = v.trim();
                // Normalise ADE configurations; descriptions match verbatim.
                let normal = parse_configuration(v)
                    .map(|c| g2maps::strata::format_configuration(&c))
                    .unwrap_or_else(|_| v.to_string());
                Ok(StrataFilter::Configuration(normal))
            }
            "dim" => Ok(StrataFilter::Dim(
                v.trim()
                    .parse()
                    .map_err(|_| usage(format!("bad dimension {v:?}")))?,
            )),
            other => Err(usage(format!(
                "unknown filter key {other:?}; use reducibility, configuration or dim"
            ))),
        }
    }

    /// Reducibility filters also keep the non-reduced limits of that class.
    fn keeps(&self, r: &StratumRecord) -> bool {
        match self {
            StrataFilter::Reducibility(c) => {
                r.reducibility == *c || degeneration_class(r) == Some(*c)
            }
            StrataFilter::Configuration(c) => r.configuration_string() == *c,
            StrataFilter::Dim(d) => r.dim == *d,
        }
    }
}

fn cmd_strata(filters: &[String], format: Format) -> CmdResult {
    let filters: Vec<StrataFilter> = filters
        .iter()
        .map(|f| StrataFilter::parse(f))
        .collect::<Result<_, _>>()?;
    let rows: Vec<&StratumRecord> = strata_table()
        .iter()
        .filter(|r| filters.iter().all(|f| f.keeps(r)))
        .collect();
    let out = match format {
        Format::Json => json_text(&rows),
        Format::Tsv => {
            let mut s = String::from("reducibility\tgenera\tpoints\tconfiguration\tdim\tnote\n");
            for r in rows {
                let genera = if r.genera.is_empty() {
                    "-".to_string()
                } else {
                    r.genera
                        .iter()
                        .map(u32::to_string)
                        .collect::<Vec<_>>()
                        .join("+")
                };
                let points = r
                    .singular_points
                    .map_or_else(|| "-".to_string(), |p| p.to_string());
                let note = r.note.clone().unwrap_or_default();
                writeln!(
                    s,
                    "{}\t{genera}\t{points}\t{}\t{}\t{note}",
                    r.reducibility,
                    r.configuration_string(),
                    r.dim
                )
                .unwrap();
            }
            s
        }
    };
    Ok((out, 0))
}

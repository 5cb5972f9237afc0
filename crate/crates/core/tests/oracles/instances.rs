use std::fs;
use std::path::PathBuf;

use g2maps::smoothability::{Outcome, SmoothabilityInstance, Verdict};
use serde_json::{json, Value};

pub fn fixture_dir() -> PathBuf {
    // Both crates sit side by side under crates/.
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/tests/fixtures/instances")
}

pub struct Expected {
    pub name: String,
    pub outcome: String,
    pub extra: String,
    pub clause: String,
}

pub fn manifest() -> Vec<Expected> {
    let text = fs::read_to_string(fixture_dir().join("expected.tsv")).unwrap();
    text.lines()
        .filter(|l| !l.starts_with('#') && !l.is_empty())
        .map(|l| {
            let cols: Vec<&str> = l.split('\t').collect();
            Expected {
                name: cols[0].into(),
                outcome: cols[1].into(),
                extra: cols[2].into(),
                clause: cols[3].into(),
            }
        })
        .collect()
}

pub fn load(name: &str) -> SmoothabilityInstance {
    let text = fs::read_to_string(fixture_dir().join(format!("{name}.json"))).unwrap();
    SmoothabilityInstance::from_json_str(&text).unwrap_or_else(|e| panic!("{name}: {e}"))
}

pub fn matches(v: &Verdict, e: &Expected) -> bool {
    match (&v.outcome, e.outcome.as_str()) {
        (Outcome::Smoothable { witness, clause }, "smoothable") => {
            witness.to_string() == e.extra && *clause == e.clause
        }
        (Outcome::NotSmoothable { first_failed }, "not_smoothable") => *first_failed == e.extra,
        (Outcome::ContainedInMain, "contained_in_main") => true,
        (Outcome::ReducesTo { family }, "reduces_to") => family.to_string() == e.extra,
        _ => false,
    }
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Relabels tails so that tail i takes the data of tail perm[i].
pub fn relabel(doc: &Value, perm: &[usize]) -> Value {
    let mut doc = doc.clone();
    let attach = doc["attach"].as_array().unwrap().clone();
    let lines = doc["image"]["lines"].as_array().unwrap().clone();
    for (i, &j) in perm.iter().enumerate() {
        let label = format!("T{}", i + 1);
        let mut a = attach[j].clone();
        a["tail"] = json!(label);
        doc["attach"][i] = a;
        let mut l = lines[j].clone();
        l["tail"] = json!(label);
        doc["image"]["lines"][i] = l;
    }
    doc
}

pub fn load_doc(name: &str) -> Value {
    serde_json::from_str(&fs::read_to_string(fixture_dir().join(format!("{name}.json"))).unwrap())
        .unwrap()
}

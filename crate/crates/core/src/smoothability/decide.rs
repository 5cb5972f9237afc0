//! Per-family smoothability rules for plane quartics of genus two.

use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::criteria::{
    cross_ratio_pair, genus1_tails_condition, ribbon_descent_condition, section_descent_codim,
    RibbonMode, TangentConfiguration,
};
use super::instance::{tail_label, ImagePayload, SmoothabilityInstance};
use crate::components::{enumerate_families, ComponentFamily, Partition};
use crate::exact::linalg::det2;
use crate::exact::projective::{pencil_coordinate, ProjLine2, ProjPoint};
use crate::exact::Rational;
use crate::singularities::{classify_germ, GermError, SingularityType};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum Outcome {
    Smoothable {
        witness: SingularityType,
        clause: String,
    },
    NotSmoothable {
        first_failed: String,
    },
    ContainedInMain,
    ReducesTo {
        family: ComponentFamily,
    },
}

impl Outcome {
    pub fn witness(&self) -> Option<&SingularityType> {
        match self {
            Outcome::Smoothable { witness, .. } => Some(witness),
            _ => None,
        }
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Outcome::Smoothable { witness, clause } => {
                write!(f, "smoothable via {clause}, witness {witness}")
            }
            Outcome::NotSmoothable { first_failed } => {
                write!(f, "not smoothable, {first_failed} fails")
            }
            Outcome::ContainedInMain => f.write_str("contained in main"),
            Outcome::ReducesTo { family } => write!(f, "reduces to {family}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceEntry {
    pub clause: String,
    pub predicate: String,
    pub holds: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub family: ComponentFamily,
    pub outcome: Outcome,
    pub trace: Vec<TraceEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DecideError {
    #[error("{0} is not a degree-four family of genus-two maps to the plane")]
    UnsupportedFamily(ComponentFamily),
    #[error("trace does not match the rule for {0}")]
    MalformedTrace(ComponentFamily),
}

/// One disjunct of a family rule, with the singularity maps factor through.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClauseSpec {
    pub name: &'static str,
    pub witness: SingularityType,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Rule {
    Main,
    Contained,
    Reduces(ComponentFamily),
    Clauses(Vec<ClauseSpec>),
}

const CONTAINED: &str = "contained_in_main";
const REDUCES: &str = "reduces_to";

fn clause(name: &'static str, witness: SingularityType) -> ClauseSpec {
    ClauseSpec { name, witness }
}

fn ribbon(tails: &[u32]) -> SingularityType {
    SingularityType::TailedRibbon {
        tails: tails.to_vec(),
    }
}

fn ii(m: u32) -> SingularityType {
    SingularityType::GenusTwoTypeII { branches: m }
}

fn emf(m: u32) -> SingularityType {
    SingularityType::EllipticMFold(m)
}

/// The rule for a degree-four family, or `None` outside that catalog.
pub fn rule(family: &ComponentFamily) -> Option<Rule> {
    if !enumerate_families(2, 4).ok()?.contains(family) {
        return None;
    }
    if let Some(target) = family.reduces_to() {
        return Some(Rule::Reduces(target));
    }
    use ComponentFamily as F;
    let parts = |p: &Partition| p.parts().to_vec();
    let clauses = match family {
        F::Main { .. } => return Some(Rule::Main),
        F::D(mu) => match parts(mu).as_slice() {
            [4] => vec![
                clause("e6_image", SingularityType::a(5)),
                clause("weierstrass_a4", SingularityType::a(4)),
            ],
            [3, 1] => vec![
                clause("e7_image", ii(3)),
                clause("weierstrass_d5", SingularityType::d(5)),
                clause("conjugate_a5", SingularityType::a(5)),
            ],
            [2, 2] => vec![
                clause("conjugate_a5", SingularityType::a(5)),
                clause("tangent_at_branch_point", ii(3)),
            ],
            [2, 1, 1] => vec![
                clause("conjugate_tangent_line", ii(3)),
                clause("ramified_over_core", ii(4)),
                clause("contracted_ribbon", ribbon(&[1, 1, 1])),
            ],
            _ => vec![clause("contracted_ribbon", ribbon(&[1, 1, 1, 1]))],
        },
        F::HypD(mu) if mu.len() == 1 => vec![clause("hyperelliptic_ribbon", ribbon(&[1]))],
        F::E { d0: 4, .. } => vec![clause("cusp", emf(1))],
        F::E { d0: 3, .. } => vec![clause("tangent_line", emf(2))],
        F::E { d0: 2, tails } if tails.len() == 1 => {
            vec![
                clause("tacnode", emf(2)),
                clause("through_branch_point", emf(1)),
            ]
        }
        F::EE { d0: 4, .. } => vec![clause("two_cusps", emf(1))],
        F::EE { d0: 3, .. } => vec![clause("cusp_and_tacnode", emf(2))],
        F::EE { left, d0: 2, right } => match (left.len(), parts(right).as_slice()) {
            (0, [2]) => vec![
                clause("tacnode", emf(2)),
                clause("second_ramification", emf(1)),
            ],
            (0, _) => vec![clause("ramified_at_e1", emf(1))],
            _ => vec![
                clause("equal_equal", emf(2)),
                clause("equal_branch", emf(2)),
                clause("branch_equal", emf(2)),
                clause("branch_branch", emf(1)),
            ],
        },
        F::BrE { d0: 4, .. } => vec![clause("tacnode", emf(2))],
        _ => return Some(Rule::Contained),
    };
    Some(Rule::Clauses(clauses))
}

type Check = (bool, String);

struct Ctx<'a> {
    inst: &'a SmoothabilityInstance,
}

fn is_zero_vec(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

fn show(v: &[Rational]) -> String {
    let parts: Vec<String> = v.iter().map(crate::exact::format_rational).collect();
    format!("({})", parts.join(", "))
}

impl<'a> Ctx<'a> {
    fn img(&self) -> &'a ImagePayload {
        &self.inst.image
    }

    fn point(&self, name: &str) -> Result<&'a ProjPoint, String> {
        self.img()
            .points
            .get(name)
            .ok_or_else(|| format!("point \"{name}\" not given"))
    }

    fn germ_is(&self, at: &str, expected: &SingularityType) -> Check {
        let Some(branches) = self.img().germs.get(at) else {
            return (false, format!("no germ given at \"{at}\""));
        };
        match classify_germ(branches) {
            Ok(t) => (t == *expected, format!("{at}: {t}")),
            Err(GermError::Unclassified(sig)) => (false, format!("{at}: unclassified germ {sig}")),
            Err(e) => (false, format!("{at}: {e}")),
        }
    }

    fn attachment(&self, tail: usize) -> Result<&'a super::instance::Attachment, String> {
        self.inst
            .attach
            .get(tail)
            .ok_or_else(|| format!("{} not attached", tail_label(tail)))
    }

    fn weierstrass(&self, tail: usize) -> Check {
        let label = tail_label(tail);
        let res = self
            .attachment(tail)
            .and_then(|a| match (&a.point, &self.inst.curve) {
                (Some(p), Some(c)) => c
                    .is_weierstrass(p)
                    .map(|w| (w, format!("{label} at {p}")))
                    .map_err(|e| e.to_string()),
                _ => Ok((false, format!("{label} at a generic point"))),
            });
        res.unwrap_or_else(|e| (false, e))
    }

    fn conjugate(&self, a: usize, b: usize) -> Check {
        let (la, lb) = (tail_label(a), tail_label(b));
        let res = self.attachment(a).and_then(|pa| {
            let pb = self.attachment(b)?;
            match (&pa.point, &pb.point, &self.inst.curve) {
                (Some(p), Some(q), Some(c)) => c
                    .are_conjugate(p, q)
                    .map(|w| (w, format!("{la} at {p}, {lb} at {q}")))
                    .map_err(|e| e.to_string()),
                _ => Ok((false, format!("{la} or {lb} at a generic point"))),
            }
        });
        res.unwrap_or_else(|e| (false, e))
    }

    fn ramified(&self, label: &str, at: &str) -> Check {
        let Some(cover) = self.img().double_cover(label) else {
            return (false, format!("{label} is not a double cover"));
        };
        match self.point(at) {
            Ok(p) => (cover.branch_points.contains(p), format!("{at} = {p}")),
            Err(e) => (false, e),
        }
    }

    fn image_direction(&self, label: &str, p: &ProjPoint) -> Result<Vec<Rational>, String> {
        let img = self.img();
        let on_line = |l: &ProjLine2| {
            pencil_coordinate(p, l)
                .map(|q| q.coords().to_vec())
                .map_err(|e| e.to_string())
        };
        if let Some(c) = img.double_cover(label) {
            return on_line(&c.line);
        }
        if let Some(l) = img.line(label) {
            return on_line(l);
        }
        if let Some(c) = img.conic(label) {
            if !c.contains(p) {
                return Err(format!("conic of {label} misses {p}"));
            }
            return on_line(&c.polar(p).map_err(|e| e.to_string())?);
        }
        if let Some(f) = img.cubic(label) {
            if !f.eval(p.coords()).is_zero() {
                return Err(format!("cubic of {label} misses {p}"));
            }
            let grad: Vec<Rational> = (0..3)
                .map(|i| f.partial_derivative(i).eval(p.coords()))
                .collect();
            let tangent = ProjLine2::from_slice(&grad)
                .map_err(|_| format!("cubic of {label} is singular at {p}"))?;
            return on_line(&tangent);
        }
        Err(format!("no image given for {label}"))
    }

    /// Image of the tangent vector at the node; zero where a double cover ramifies.
    fn differential(&self, label: &str, p: &ProjPoint) -> Result<Vec<Rational>, String> {
        if let Some(c) = self.img().double_cover(label) {
            if c.branch_points.contains(p) {
                return Ok(vec![Rational::zero(), Rational::zero()]);
            }
        }
        self.image_direction(label, p)
    }

    fn tangent(&self, a: &str, b: &str, at: &str) -> Check {
        let res = self.point(at).and_then(|p| {
            let u = self.image_direction(a, p)?;
            let v = self.image_direction(b, p)?;
            let holds = !is_zero_vec(&u) && !is_zero_vec(&v) && det2(&u, &v).is_zero();
            Ok((
                holds,
                format!("{a} along {}, {b} along {}", show(&u), show(&v)),
            ))
        });
        res.unwrap_or_else(|e| (false, e))
    }

    fn tangent_configuration(
        &self,
        labels: &[String],
        at: &str,
    ) -> Result<TangentConfiguration, String> {
        let p = self.point(at)?;
        let dirs = labels
            .iter()
            .map(|l| self.differential(l, p))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(TangentConfiguration::new(p.clone(), dirs))
    }

    fn genus1(&self, labels: &[String], at: &str) -> Check {
        let res = self.tangent_configuration(labels, at).and_then(|tc| {
            let holds = genus1_tails_condition(&tc, labels.len()).map_err(|e| e.to_string())?;
            Ok((holds, directions_detail(labels, &tc)))
        });
        res.unwrap_or_else(|e| (false, e))
    }

    fn ribbon(&self, labels: &[String], at: &str, mode: RibbonMode) -> Check {
        let res = self.tangent_configuration(labels, at).and_then(|mut tc| {
            if mode == RibbonMode::Hyperelliptic {
                let core = self
                    .img()
                    .double_cover("core")
                    .ok_or("line covered by the core not given")?;
                tc = tc.with_line(core.line.clone());
            }
            let holds =
                ribbon_descent_condition(&tc, labels.len(), mode).map_err(|e| e.to_string())?;
            Ok((holds, directions_detail(labels, &tc)))
        });
        res.unwrap_or_else(|e| (false, e))
    }

    fn section_codim(&self, labels: &[String], at: &str) -> Check {
        let res = self.point(at).and_then(|p| {
            let mut dirs = Vec::new();
            let mut orders = Vec::new();
            for l in labels {
                let d = self.differential(l, p)?;
                orders.push(if is_zero_vec(&d) { 2 } else { 1 });
                dirs.push(d);
            }
            let codim = section_descent_codim(&dirs, &orders).map_err(|e| e.to_string())?;
            Ok((codim == 2, format!("codimension {codim}")))
        });
        res.unwrap_or_else(|e| (false, e))
    }

    fn cross_ratio(&self) -> Check {
        let lines: Option<Vec<ProjLine2>> = (0..4)
            .map(|i| self.img().line(&tail_label(i)).cloned())
            .collect();
        let Some(lines) = lines else {
            return (false, "four tail lines not given".into());
        };
        if self.inst.attach.len() != 4 {
            return (false, "four attachments not given".into());
        }
        let lines: [ProjLine2; 4] = lines.try_into().unwrap();
        let images: [ProjPoint; 4] = std::array::from_fn(|i| self.inst.attach[i].image());
        match cross_ratio_pair(&lines, &images) {
            Ok((a, b)) => (a == b, format!("lines {a}, attachments {b}")),
            Err(e) => (false, e.to_string()),
        }
    }

    fn lines_equal(&self, a: &str, b: &str) -> Check {
        let img = self.img();
        let line_of = |l: &str| img.double_cover(l).map(|c| &c.line).or_else(|| img.line(l));
        match (line_of(a), line_of(b)) {
            (Some(x), Some(y)) => (x == y, format!("{a} = {x}, {b} = {y}")),
            _ => (false, format!("lines of {a} and {b} not given")),
        }
    }

    /// A line meets the doubly covered line of `cover` in one of its branch points.
    fn meets_at_branch_point(&self, line: &str, cover: &str) -> Check {
        let (Some(l), Some(c)) = (self.img().line(line), self.img().double_cover(cover)) else {
            return (
                false,
                format!("line of {line} or double cover {cover} not given"),
            );
        };
        match l.meet(&c.line) {
            Some(p) => (c.branch_points.contains(&p), format!("meet at {p}")),
            None => (false, "the lines coincide".into()),
        }
    }
}

fn directions_detail(labels: &[String], tc: &TangentConfiguration) -> String {
    let parts: Vec<String> = labels
        .iter()
        .zip(&tc.directions)
        .map(|(l, d)| format!("{l} {}", show(d)))
        .collect();
    parts.join(", ")
}

struct Recorder {
    trace: Vec<TraceEntry>,
}

impl Recorder {
    /// Evaluates a conjunction lazily, stopping at the first failure.
    fn clause(
        &mut self,
        name: &str,
        preds: Vec<(String, Box<dyn FnOnce() -> Check + '_>)>,
    ) -> bool {
        for (pred, eval) in preds {
            let (holds, detail) = eval();
            self.trace.push(TraceEntry {
                clause: name.into(),
                predicate: pred,
                holds,
                detail,
            });
            if !holds {
                return false;
            }
        }
        true
    }
}

type Preds<'b> = Vec<(String, Box<dyn FnOnce() -> Check + 'b>)>;

fn labels(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

fn predicates<'b>(ctx: &'b Ctx<'b>, family: &ComponentFamily, name: &str) -> Preds<'b> {
    use ComponentFamily as F;
    let mut p: Preds<'b> = Vec::new();
    macro_rules! push {
        ($pred:expr, $eval:expr) => {
            p.push(($pred.to_string(), Box::new(move || $eval)))
        };
    }
    let a = SingularityType::a;
    match (family, name) {
        (F::D(_), "e6_image") => push!(
            "germ(core) = E6",
            ctx.germ_is("core", &SingularityType::e(6))
        ),
        (F::D(_), "weierstrass_a4") => {
            push!("weierstrass(T1)", ctx.weierstrass(0));
            push!("germ(core) = A4", ctx.germ_is("core", &a(4)));
            push!("germ(node) = A1", ctx.germ_is("node", &a(1)));
        }
        (F::D(_), "e7_image") => push!(
            "germ(core) = E7",
            ctx.germ_is("core", &SingularityType::e(7))
        ),
        (F::D(_), "weierstrass_d5") => {
            push!("weierstrass(T1)", ctx.weierstrass(0));
            push!(
                "germ(core) = D5",
                ctx.germ_is("core", &SingularityType::d(5))
            );
            push!("germ(node) = A1", ctx.germ_is("node", &a(1)));
        }
        (F::D(_), "conjugate_a5") => {
            push!("conjugate(T1, T2)", ctx.conjugate(0, 1));
            push!("germ(core) = A5", ctx.germ_is("core", &a(5)));
            push!("germ(node) = A1", ctx.germ_is("node", &a(1)));
        }
        (F::D(_), "tangent_at_branch_point") => {
            // either conic may be the doubly covered one
            push!("double cover ramified over core, other tail tangent", {
                let first = (ctx.ramified("T1", "core"), ctx.tangent("T2", "T1", "core"));
                let second = (ctx.ramified("T2", "core"), ctx.tangent("T1", "T2", "core"));
                if first.0 .0 && first.1 .0 {
                    (
                        true,
                        format!("T1 ramified at {}; {}", first.0 .1, first.1 .1),
                    )
                } else if second.0 .0 && second.1 .0 {
                    (
                        true,
                        format!("T2 ramified at {}; {}", second.0 .1, second.1 .1),
                    )
                } else {
                    (false, format!("T1: {}; T2: {}", first.0 .1, second.0 .1))
                }
            });
        }
        (F::D(_), "conjugate_tangent_line") => {
            push!("conjugate(T1, T2 or T3) with tangent line", {
                let mut detail = Vec::new();
                let mut found = None;
                for j in [1, 2] {
                    let c = ctx.conjugate(0, j);
                    detail.push(c.1.clone());
                    if c.0 {
                        let t = ctx.tangent(&tail_label(j), "T1", "core");
                        detail.push(t.1.clone());
                        if t.0 {
                            found = Some(j);
                            break;
                        }
                    }
                }
                (found.is_some(), detail.join("; "))
            });
        }
        (F::D(_), "ramified_over_core") => push!("ramified(T1 @ core)", ctx.ramified("T1", "core")),
        (F::D(mu), "contracted_ribbon") => {
            let tails: Vec<String> = (0..mu.len()).map(tail_label).collect();
            let t2 = tails.clone();
            push!(
                "ribbon_descent(contracted)",
                ctx.ribbon(&tails, "core", RibbonMode::Contracted)
            );
            if mu.len() == 4 {
                push!("section_descent_codim = 2", ctx.section_codim(&t2, "core"));
                push!("cross_ratio_match", ctx.cross_ratio());
            }
        }
        (F::HypD(_), _) => {
            push!("ramified(T1 @ attach)", ctx.ramified("T1", "attach"));
            push!(
                "ribbon_descent(hyperelliptic)",
                ctx.ribbon(&labels(&["T1"]), "attach", RibbonMode::Hyperelliptic)
            );
        }
        (F::E { .. }, "cusp") => {
            push!("germ(e2) = A2", ctx.germ_is("e2", &a(2)));
            push!("germ(node) = A1", ctx.germ_is("node", &a(1)));
        }
        (F::E { .. }, "tangent_line") => {
            push!(
                "genus1_tails(E1, T1 @ e2)",
                ctx.genus1(&labels(&["E1", "T1"]), "e2")
            )
        }
        (F::E { .. }, "tacnode") => push!("tangent(T1, E1 @ e2)", ctx.tangent("T1", "E1", "e2")),
        (F::E { .. }, "through_branch_point") => {
            push!("ramified(E1 @ e2)", ctx.ramified("E1", "e2"))
        }
        (F::EE { .. }, "two_cusps") => {
            push!("germ(e1) = A2", ctx.germ_is("e1", &a(2)));
            push!("germ(e2) = A2", ctx.germ_is("e2", &a(2)));
            push!("germ(node) = A1", ctx.germ_is("node", &a(1)));
        }
        (F::EE { .. }, "cusp_and_tacnode") => {
            push!("germ(e1) = A2", ctx.germ_is("e1", &a(2)));
            push!("germ(e2) = A3", ctx.germ_is("e2", &a(3)));
            push!("germ(node) = A1", ctx.germ_is("node", &a(1)));
        }
        (F::EE { .. }, "tacnode") => {
            push!("ramified(bridge @ e1)", ctx.ramified("bridge", "e1"));
            push!(
                "tangent(T1, bridge @ e2)",
                ctx.tangent("T1", "bridge", "e2")
            );
        }
        (F::EE { .. }, "second_ramification") => {
            push!("ramified(bridge @ e1)", ctx.ramified("bridge", "e1"));
            push!("ramified(bridge @ e2), e2 != e1", {
                let (holds, detail) = ctx.ramified("bridge", "e2");
                let distinct = ctx.point("e1").ok() != ctx.point("e2").ok();
                (holds && distinct, detail)
            });
        }
        (F::EE { .. }, "ramified_at_e1") => {
            push!("ramified(bridge @ e1)", ctx.ramified("bridge", "e1"))
        }
        (F::EE { .. }, side) => {
            let (l, r) = side.split_once('_').unwrap();
            for (tail, kind) in [("T1", l), ("T2", r)] {
                if kind == "equal" {
                    push!(
                        format!("equal({tail}, bridge)"),
                        ctx.lines_equal(tail, "bridge")
                    );
                } else {
                    push!(
                        format!("meets_at_branch_point({tail}, bridge)"),
                        ctx.meets_at_branch_point(tail, "bridge")
                    );
                }
            }
        }
        (F::BrE { .. }, _) => {
            push!("germ(e) = A3", ctx.germ_is("e", &a(3)));
            push!("germ(node) = A1", ctx.germ_is("node", &a(1)));
        }
        _ => unreachable!("no clause {name} for {family}"),
    }
    p
}

pub fn decide(inst: &SmoothabilityInstance) -> Result<Verdict, DecideError> {
    let family = inst.family.clone();
    let rule = rule(&family).ok_or_else(|| DecideError::UnsupportedFamily(family.clone()))?;
    let single = |predicate: &str, detail: String, outcome: Outcome| Verdict {
        family: family.clone(),
        outcome,
        trace: vec![TraceEntry {
            clause: predicate.into(),
            predicate: predicate.into(),
            holds: true,
            detail,
        }],
    };
    let clauses = match rule {
        Rule::Main => {
            return Ok(single(
                CONTAINED,
                "main itself".into(),
                Outcome::ContainedInMain,
            ))
        }
        Rule::Contained => {
            return Ok(single(
                CONTAINED,
                "the image determines the factorisation".into(),
                Outcome::ContainedInMain,
            ))
        }
        Rule::Reduces(target) => {
            return Ok(single(
                REDUCES,
                target.to_string(),
                Outcome::ReducesTo { family: target },
            ));
        }
        Rule::Clauses(c) => c,
    };
    let ctx = Ctx { inst };
    let mut rec = Recorder { trace: Vec::new() };
    for spec in &clauses {
        if rec.clause(spec.name, predicates(&ctx, &family, spec.name)) {
            let outcome = Outcome::Smoothable {
                witness: spec.witness.clone(),
                clause: spec.name.into(),
            };
            return Ok(Verdict {
                family,
                outcome,
                trace: rec.trace,
            });
        }
    }
    let first = rec
        .trace
        .iter()
        .find(|e| !e.holds)
        .expect("a failed clause records its failure");
    let first_failed = format!("{}: {}", first.clause, first.predicate);
    Ok(Verdict {
        family,
        outcome: Outcome::NotSmoothable { first_failed },
        trace: rec.trace,
    })
}

/// Recomputes the outcome from the trace and the family rule alone.
pub fn replay(family: &ComponentFamily, trace: &[TraceEntry]) -> Result<Outcome, DecideError> {
    let bad = || DecideError::MalformedTrace(family.clone());
    let rule = rule(family).ok_or_else(|| DecideError::UnsupportedFamily(family.clone()))?;
    match rule {
        Rule::Main | Rule::Contained => match trace {
            [e] if e.predicate == CONTAINED && e.holds => Ok(Outcome::ContainedInMain),
            _ => Err(bad()),
        },
        Rule::Reduces(target) => match trace {
            [e] if e.predicate == REDUCES && e.detail == target.to_string() => {
                Ok(Outcome::ReducesTo { family: target })
            }
            _ => Err(bad()),
        },
        Rule::Clauses(clauses) => {
            let mut first_failed = None;
            let mut rest = trace;
            for spec in &clauses {
                let n = rest.iter().take_while(|e| e.clause == spec.name).count();
                if n == 0 {
                    return Err(bad());
                }
                let (mine, tail) = rest.split_at(n);
                rest = tail;
                match mine.iter().position(|e| !e.holds) {
                    None => {
                        return if rest.is_empty() {
                            Ok(Outcome::Smoothable {
                                witness: spec.witness.clone(),
                                clause: spec.name.into(),
                            })
                        } else {
                            Err(bad())
                        };
                    }
                    Some(i) if i + 1 == n => {
                        first_failed
                            .get_or_insert_with(|| format!("{}: {}", spec.name, mine[i].predicate));
                    }
                    Some(_) => return Err(bad()),
                }
            }
            Ok(Outcome::NotSmoothable {
                first_failed: first_failed.ok_or_else(bad)?,
            })
        }
    }
}

impl Verdict {
    pub fn replay(&self) -> Result<Outcome, DecideError> {
        replay(&self.family, &self.trace)
    }
}

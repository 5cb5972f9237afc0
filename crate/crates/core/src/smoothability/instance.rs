//! Instance documents: a boundary family together with the local geometry of
//! one of its maps, read from JSON with pointer-annotated validation errors.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use serde_json::{json, Map, Value};

use crate::components::{enumerate_families, parse_family, ComponentFamily};
use crate::exact::projective::{Conic2, ProjLine2, ProjPoint};
use crate::exact::{format_rational, parse_rational, Polynomial, Rational, UniPoly};
use crate::hyperelliptic::{CurvePoint, HyperellipticCurve};
use crate::singularities::PlanarBranch;

pub const SCHEMA_VERSION: u64 = 1;

/// A validation failure located by a JSON pointer into the document.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{pointer}: {message}")]
pub struct InstanceError {
    pub pointer: String,
    pub message: String,
}

fn err<T>(pointer: impl Into<String>, message: impl fmt::Display) -> Result<T, InstanceError> {
    Err(InstanceError {
        pointer: pointer.into(),
        message: message.to_string(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AttachY {
    Value(Rational),
    Weierstrass,
    Generic,
}

/// Where a tail meets the genus-two core. `x = None` is the point over infinity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Attachment {
    pub tail: String,
    pub x: Option<Rational>,
    pub y: AttachY,
    pub point: Option<CurvePoint>,
}

impl Attachment {
    /// Image under the hyperelliptic map.
    pub fn image(&self) -> ProjPoint {
        match &self.x {
            Some(x) => ProjPoint::p1(x.clone(), Rational::from_integer(1.into())).unwrap(),
            None => ProjPoint::infinity(),
        }
    }
}

/// A map of degree two from a tail (or bridge, or elliptic curve) onto a line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleCover {
    pub tail: String,
    pub line: ProjLine2,
    pub branch_points: Vec<ProjPoint>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ImagePayload {
    pub points: BTreeMap<String, ProjPoint>,
    pub germs: BTreeMap<String, Vec<PlanarBranch>>,
    pub lines: Vec<(String, ProjLine2)>,
    pub conics: Vec<(String, Conic2)>,
    pub cubics: Vec<(String, Polynomial)>,
    pub double_covers: Vec<DoubleCover>,
}

impl ImagePayload {
    pub fn line(&self, tail: &str) -> Option<&ProjLine2> {
        self.lines.iter().find(|(t, _)| t == tail).map(|(_, l)| l)
    }

    pub fn conic(&self, tail: &str) -> Option<&Conic2> {
        self.conics.iter().find(|(t, _)| t == tail).map(|(_, c)| c)
    }

    pub fn cubic(&self, tail: &str) -> Option<&Polynomial> {
        self.cubics.iter().find(|(t, _)| t == tail).map(|(_, c)| c)
    }

    pub fn double_cover(&self, tail: &str) -> Option<&DoubleCover> {
        self.double_covers.iter().find(|c| c.tail == tail)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmoothabilityInstance {
    pub family: ComponentFamily,
    pub curve: Option<HyperellipticCurve>,
    pub attach: Vec<Attachment>,
    pub image: ImagePayload,
}

pub const PLANE_VARS: [&str; 3] = ["x", "y", "z"];

pub fn tail_label(i: usize) -> String {
    format!("T{}", i + 1)
}

/// Labels of the components whose image may be described, with the number
/// of branch points their double covers have.
fn curve_labels(family: &ComponentFamily) -> Vec<(String, usize)> {
    let mut out: Vec<(String, usize)> = (0..family.tail_count())
        .map(|i| (tail_label(i), 2))
        .collect();
    match family {
        ComponentFamily::HypD(_) => out.push(("core".into(), 6)),
        ComponentFamily::E { .. } => out.push(("E1".into(), 4)),
        ComponentFamily::EE { .. } | ComponentFamily::BrE { .. } => out.push(("bridge".into(), 2)),
        _ => {}
    }
    out
}

/// Named points of the image, with the labels of the curves through each.
fn point_names(family: &ComponentFamily) -> Vec<(&'static str, Vec<String>)> {
    let tails: Vec<String> = (0..family.tail_count()).map(tail_label).collect();
    let mut out = match family {
        ComponentFamily::Main { .. } => vec![],
        ComponentFamily::D(_) => vec![("core", tails)],
        ComponentFamily::HypD(_) => {
            let mut through = tails;
            through.push("core".into());
            vec![("attach", through)]
        }
        ComponentFamily::E { .. } => {
            let mut through = tails;
            through.push("E1".into());
            vec![("e2", through)]
        }
        ComponentFamily::EE { left, .. } => {
            let (l, r) = tails.split_at(left.len());
            let mut l = l.to_vec();
            let mut r = r.to_vec();
            l.push("bridge".into());
            r.push("bridge".into());
            vec![("e1", l), ("e2", r)]
        }
        ComponentFamily::BrE { .. } => {
            let mut through = tails;
            through.push("bridge".into());
            vec![("e", through)]
        }
    };
    if !family.is_main() {
        out.push(("node", Vec::new()));
    }
    out
}

fn has_core(family: &ComponentFamily) -> bool {
    matches!(family, ComponentFamily::D(_) | ComponentFamily::HypD(_))
}

struct Reader;

impl Reader {
    fn object<'a>(v: &'a Value, ptr: &str) -> Result<&'a Map<String, Value>, InstanceError> {
        v.as_object()
            .map_or_else(|| err(ptr, "expected an object"), Ok)
    }

    fn array<'a>(v: &'a Value, ptr: &str) -> Result<&'a Vec<Value>, InstanceError> {
        v.as_array()
            .map_or_else(|| err(ptr, "expected an array"), Ok)
    }

    fn string<'a>(v: &'a Value, ptr: &str) -> Result<&'a str, InstanceError> {
        v.as_str().map_or_else(|| err(ptr, "expected a string"), Ok)
    }

    fn rational(v: &Value, ptr: &str) -> Result<Rational, InstanceError> {
        let s = Self::string(v, ptr).map_err(|_| InstanceError {
            pointer: ptr.into(),
            message: "expected a rational written as a \"p/q\" string".into(),
        })?;
        parse_rational(s).or_else(|e| err(ptr, e))
    }

    fn rationals(v: &Value, ptr: &str) -> Result<Vec<Rational>, InstanceError> {
        Self::array(v, ptr)?
            .iter()
            .enumerate()
            .map(|(i, c)| Self::rational(c, &format!("{ptr}/{i}")))
            .collect()
    }

    fn fixed(v: &Value, ptr: &str, n: usize) -> Result<Vec<Rational>, InstanceError> {
        let r = Self::rationals(v, ptr)?;
        if r.len() != n {
            return err(ptr, format!("expected {n} entries, found {}", r.len()));
        }
        Ok(r)
    }

    fn point(v: &Value, ptr: &str) -> Result<ProjPoint, InstanceError> {
        ProjPoint::new(Self::fixed(v, ptr, 3)?).or_else(|e| err(ptr, e))
    }

    fn line(v: &Value, ptr: &str) -> Result<ProjLine2, InstanceError> {
        ProjLine2::from_slice(&Self::fixed(v, ptr, 3)?).or_else(|e| err(ptr, e))
    }

    fn keys(
        obj: &Map<String, Value>,
        ptr: &str,
        allowed: &[&str],
        required: &[&str],
    ) -> Result<(), InstanceError> {
        for k in obj.keys() {
            if !allowed.contains(&k.as_str()) {
                return err(format!("{ptr}/{}", escape(k)), "unknown field");
            }
        }
        for k in required {
            if !obj.contains_key(*k) {
                return err(ptr, format!("missing field \"{k}\""));
            }
        }
        Ok(())
    }
}

fn escape(key: &str) -> String {
    key.replace('~', "~0").replace('/', "~1")
}

fn catalog_family(s: &str) -> Result<ComponentFamily, InstanceError> {
    let family = parse_family(s, 4).or_else(|e| err("/family", e))?;
    let catalog = enumerate_families(2, 4).expect("degree four is in range");
    if !catalog.contains(&family) {
        return err("/family", format!("{family} is not a degree-four family"));
    }
    Ok(family)
}

impl SmoothabilityInstance {
    pub fn from_json_str(text: &str) -> Result<Self, InstanceError> {
        let value: Value =
            serde_json::from_str(text).or_else(|e| err("", format!("invalid JSON: {e}")))?;
        Self::from_value(&value)
    }

    pub fn from_value(doc: &Value) -> Result<Self, InstanceError> {
        let top = Reader::object(doc, "")?;
        Reader::keys(
            top,
            "",
            &["version", "family", "curve", "attach", "image"],
            &["family"],
        )?;
        if let Some(v) = top.get("version") {
            if v.as_u64() != Some(SCHEMA_VERSION) {
                return err(
                    "/version",
                    format!("unsupported version, expected {SCHEMA_VERSION}"),
                );
            }
        }
        let family = catalog_family(Reader::string(&top["family"], "/family")?)?;

        let curve = match top.get("curve") {
            None if matches!(family, ComponentFamily::D(_)) => {
                return err("", "missing field \"curve\"")
            }
            None => None,
            Some(_) if !has_core(&family) => {
                return err("/curve", format!("{family} has no genus-two core"))
            }
            Some(c) => {
                let obj = Reader::object(c, "/curve")?;
                Reader::keys(obj, "/curve", &["f"], &["f"])?;
                let f = UniPoly::new(Reader::rationals(&obj["f"], "/curve/f")?);
                Some(HyperellipticCurve::new(f).or_else(|e| err("/curve/f", e))?)
            }
        };

        let attach = match top.get("attach") {
            None if has_core(&family) => return err("", "missing field \"attach\""),
            None => Vec::new(),
            Some(_) if !has_core(&family) => {
                return err("/attach", format!("{family} has no genus-two core"))
            }
            Some(a) => read_attachments(a, &family, curve.as_ref())?,
        };

        let image = match top.get("image") {
            None => ImagePayload::default(),
            Some(v) => read_image(v, &family)?,
        };
        Ok(SmoothabilityInstance {
            family,
            curve,
            attach,
            image,
        })
    }

    pub fn to_value(&self) -> Value {
        let mut top = Map::new();
        top.insert("version".into(), json!(SCHEMA_VERSION));
        top.insert("family".into(), json!(self.family.to_string()));
        if let Some(c) = &self.curve {
            top.insert("curve".into(), json!({ "f": strings(c.f().coeffs()) }));
        }
        if has_core(&self.family) {
            let attach: Vec<Value> = self
                .attach
                .iter()
                .map(|a| {
                    let x =
                        a.x.as_ref()
                            .map_or_else(|| "inf".to_string(), format_rational);
                    let y = match &a.y {
                        AttachY::Value(y) => format_rational(y),
                        AttachY::Weierstrass => "weierstrass".into(),
                        AttachY::Generic => "generic".into(),
                    };
                    json!({ "tail": a.tail, "x": x, "y": y })
                })
                .collect();
            top.insert("attach".into(), Value::Array(attach));
        }
        let img = &self.image;
        let mut image = Map::new();
        if !img.points.is_empty() {
            let pts: Map<String, Value> = img
                .points
                .iter()
                .map(|(k, p)| (k.clone(), json!(strings(p.coords()))))
                .collect();
            image.insert("points".into(), Value::Object(pts));
        }
        if !img.germs.is_empty() {
            let germs: Map<String, Value> = img
                .germs
                .iter()
                .map(|(k, bs)| {
                    let bs: Vec<Value> =
                        bs.iter().map(|b| json!({ "x": strings(b.x().coeffs()), "y": strings(b.y().coeffs()) })).collect();
                    (k.clone(), Value::Array(bs))
                })
                .collect();
            image.insert("germs".into(), Value::Object(germs));
        }
        if !img.lines.is_empty() {
            let v: Vec<Value> = img
                .lines
                .iter()
                .map(|(t, l)| json!({ "tail": t, "coeffs": strings(l.coeffs()) }))
                .collect();
            image.insert("lines".into(), Value::Array(v));
        }
        if !img.conics.is_empty() {
            let v: Vec<Value> = img
                .conics
                .iter()
                .map(|(t, c)| json!({ "tail": t, "coeffs": strings(&c.coeffs()) }))
                .collect();
            image.insert("conics".into(), Value::Array(v));
        }
        if !img.cubics.is_empty() {
            let v: Vec<Value> = img
                .cubics
                .iter()
                .map(|(t, c)| json!({ "tail": t, "equation": c.to_string() }))
                .collect();
            image.insert("cubics".into(), Value::Array(v));
        }
        if !img.double_covers.is_empty() {
            let v: Vec<Value> = img
                .double_covers
                .iter()
                .map(|c| {
                    let bps: Vec<Value> = c.branch_points.iter().map(|p| json!(strings(p.coords()))).collect();
                    json!({ "tail": c.tail, "line": strings(c.line.coeffs()), "branch_points": bps })
                })
                .collect();
            image.insert("double_covers".into(), Value::Array(v));
        }
        top.insert("image".into(), Value::Object(image));
        Value::Object(top)
    }
}

fn strings(rs: &[Rational]) -> Vec<String> {
    rs.iter().map(format_rational).collect()
}

fn read_attachments(
    v: &Value,
    family: &ComponentFamily,
    curve: Option<&HyperellipticCurve>,
) -> Result<Vec<Attachment>, InstanceError> {
    let items = Reader::array(v, "/attach")?;
    let k = family.tail_count();
    if items.len() != k {
        return err(
            "/attach",
            format!("{family} has {k} tails, found {} attachments", items.len()),
        );
    }
    let mut slots: Vec<Option<Attachment>> = vec![None; k];
    for (i, item) in items.iter().enumerate() {
        let ptr = format!("/attach/{i}");
        let obj = Reader::object(item, &ptr)?;
        Reader::keys(obj, &ptr, &["tail", "x", "y"], &["tail", "x", "y"])?;
        let tail = Reader::string(&obj["tail"], &format!("{ptr}/tail"))?;
        let Some(idx) = (0..k).find(|&j| tail_label(j) == tail) else {
            return err(
                format!("{ptr}/tail"),
                format!("unknown tail label \"{tail}\""),
            );
        };
        if slots[idx].is_some() {
            return err(
                format!("{ptr}/tail"),
                format!("tail \"{tail}\" attached twice"),
            );
        }
        let x = match Reader::string(&obj["x"], &format!("{ptr}/x"))? {
            "inf" => None,
            _ => Some(Reader::rational(&obj["x"], &format!("{ptr}/x"))?),
        };
        let y = match Reader::string(&obj["y"], &format!("{ptr}/y"))? {
            "weierstrass" => AttachY::Weierstrass,
            "generic" => AttachY::Generic,
            _ => AttachY::Value(Reader::rational(&obj["y"], &format!("{ptr}/y"))?),
        };
        let point = resolve_point(&x, &y, curve).or_else(|m| err(&ptr, m))?;
        slots[idx] = Some(Attachment {
            tail: tail.to_string(),
            x,
            y,
            point,
        });
    }
    let attach: Vec<Attachment> = slots.into_iter().map(Option::unwrap).collect();
    for i in 0..k {
        for j in 0..k {
            if i != j && attach[i].y == AttachY::Generic && attach[i].x == attach[j].x {
                return err(
                    format!("/attach/{i}"),
                    format!(
                        "generic attachment shares its fiber with tail {}",
                        attach[j].tail
                    ),
                );
            }
        }
    }
    Ok(attach)
}

fn resolve_point(
    x: &Option<Rational>,
    y: &AttachY,
    curve: Option<&HyperellipticCurve>,
) -> Result<Option<CurvePoint>, String> {
    let Some(curve) = curve else {
        return match y {
            AttachY::Value(_) => Err("explicit coordinates need a curve".into()),
            _ => Ok(None),
        };
    };
    let quintic = curve.f().degree() == Some(5);
    match (x, y) {
        (Some(x), AttachY::Value(y)) => {
            let p = CurvePoint::affine(x.clone(), y.clone());
            if curve.contains(&p) {
                Ok(Some(p))
            } else {
                Err(format!("point {p} is not on the curve"))
            }
        }
        (None, AttachY::Value(_)) => {
            Err("points over infinity are given as \"weierstrass\" or \"generic\"".into())
        }
        (Some(x), AttachY::Weierstrass) => {
            if curve.f().eval(x).is_zero() {
                Ok(Some(CurvePoint::affine(x.clone(), Rational::zero())))
            } else {
                Err(format!(
                    "x = {} is not a root of f, so no Weierstrass point lies over it",
                    format_rational(x)
                ))
            }
        }
        (None, AttachY::Weierstrass) if quintic => Ok(Some(CurvePoint::Infinity)),
        (None, AttachY::Weierstrass) => {
            Err("f has degree six, so infinity is not a branch point".into())
        }
        (Some(x), AttachY::Generic) if curve.f().eval(x).is_zero() => Err(format!(
            "x = {} is a root of f, so a point over it is a Weierstrass point",
            format_rational(x)
        )),
        (None, AttachY::Generic) if quintic => {
            Err("f has degree five, so the point at infinity is a Weierstrass point".into())
        }
        (_, AttachY::Generic) => Ok(None),
    }
}

fn read_image(v: &Value, family: &ComponentFamily) -> Result<ImagePayload, InstanceError> {
    let obj = Reader::object(v, "/image")?;
    Reader::keys(
        obj,
        "/image",
        &[
            "points",
            "germs",
            "lines",
            "conics",
            "cubics",
            "double_covers",
        ],
        &[],
    )?;
    let labels = curve_labels(family);
    let names = point_names(family);
    let mut img = ImagePayload::default();

    let check_label = |t: &str, ptr: &str, seen: &mut Vec<String>| -> Result<(), InstanceError> {
        if !labels.iter().any(|(l, _)| l == t) {
            return err(ptr, format!("\"{t}\" is not a component of {family}"));
        }
        if seen.iter().any(|s| s == t) {
            return err(ptr, format!("image of \"{t}\" given twice"));
        }
        seen.push(t.to_string());
        Ok(())
    };
    let check_name = |n: &str, ptr: &str| -> Result<(), InstanceError> {
        if names.iter().any(|(m, _)| *m == n) {
            Ok(())
        } else {
            err(ptr, format!("\"{n}\" is not a named point of {family}"))
        }
    };

    if let Some(p) = obj.get("points") {
        for (name, coords) in Reader::object(p, "/image/points")? {
            let ptr = format!("/image/points/{}", escape(name));
            check_name(name, &ptr)?;
            img.points
                .insert(name.clone(), Reader::point(coords, &ptr)?);
        }
    }
    if let Some(g) = obj.get("germs") {
        for (name, branches) in Reader::object(g, "/image/germs")? {
            let ptr = format!("/image/germs/{}", escape(name));
            check_name(name, &ptr)?;
            let mut out = Vec::new();
            for (i, b) in Reader::array(branches, &ptr)?.iter().enumerate() {
                let bptr = format!("{ptr}/{i}");
                let bobj = Reader::object(b, &bptr)?;
                Reader::keys(bobj, &bptr, &["x", "y"], &["x", "y"])?;
                let x = UniPoly::new(Reader::rationals(&bobj["x"], &format!("{bptr}/x"))?);
                let y = UniPoly::new(Reader::rationals(&bobj["y"], &format!("{bptr}/y"))?);
                out.push(PlanarBranch::new(x, y).or_else(|e| err(&bptr, e))?);
            }
            if out.is_empty() {
                return err(ptr, "a germ needs at least one branch");
            }
            img.germs.insert(name.clone(), out);
        }
    }

    let mut seen = Vec::new();
    let mut entries = |key: &str,
                       fields: &[&str]|
     -> Result<Vec<(String, String, &Map<String, Value>)>, InstanceError> {
        let Some(list) = obj.get(key) else {
            return Ok(Vec::new());
        };
        let base = format!("/image/{key}");
        let mut out = Vec::new();
        for (i, item) in Reader::array(list, &base)?.iter().enumerate() {
            let ptr = format!("{base}/{i}");
            let o = Reader::object(item, &ptr)?;
            let mut allowed = vec!["tail"];
            allowed.extend_from_slice(fields);
            Reader::keys(o, &ptr, &allowed, &allowed)?;
            let t = Reader::string(&o["tail"], &format!("{ptr}/tail"))?;
            check_label(t, &format!("{ptr}/tail"), &mut seen)?;
            out.push((ptr, t.to_string(), o));
        }
        Ok(out)
    };

    for (ptr, t, o) in entries("lines", &["coeffs"])? {
        img.lines
            .push((t, Reader::line(&o["coeffs"], &format!("{ptr}/coeffs"))?));
    }
    for (ptr, t, o) in entries("conics", &["coeffs"])? {
        let cptr = format!("{ptr}/coeffs");
        let conic = Conic2::from_coeffs(&Reader::fixed(&o["coeffs"], &cptr, 6)?)
            .or_else(|e| err(&cptr, e))?;
        if conic.is_degenerate() {
            return err(cptr, "conic is degenerate");
        }
        img.conics.push((t, conic));
    }
    for (ptr, t, o) in entries("cubics", &["equation"])? {
        let eptr = format!("{ptr}/equation");
        let poly = Polynomial::parse(Reader::string(&o["equation"], &eptr)?, &PLANE_VARS)
            .or_else(|e| err(&eptr, e))?;
        if !poly.is_homogeneous() || poly.total_degree() != Some(3) {
            return err(eptr, "expected a homogeneous cubic in x, y, z");
        }
        img.cubics.push((t, poly));
    }
    for (ptr, t, o) in entries("double_covers", &["line", "branch_points"])? {
        let line = Reader::line(&o["line"], &format!("{ptr}/line"))?;
        let bptr = format!("{ptr}/branch_points");
        let mut bps: Vec<ProjPoint> = Vec::new();
        for (i, b) in Reader::array(&o["branch_points"], &bptr)?
            .iter()
            .enumerate()
        {
            let p = Reader::point(b, &format!("{bptr}/{i}"))?;
            if !line.contains(&p) {
                return err(format!("{bptr}/{i}"), "branch point is not on the line");
            }
            if bps.contains(&p) {
                return err(format!("{bptr}/{i}"), "repeated branch point");
            }
            bps.push(p);
        }
        let max = labels
            .iter()
            .find(|(l, _)| *l == t)
            .map(|(_, n)| *n)
            .unwrap();
        if bps.len() > max {
            return err(
                bptr,
                format!("a double cover of \"{t}\" has {max} branch points"),
            );
        }
        img.double_covers.push(DoubleCover {
            tail: t,
            line,
            branch_points: bps,
        });
    }

    for (name, through) in &names {
        let Some(p) = img.points.get(*name) else {
            continue;
        };
        for label in through {
            if let Some(false) = image_contains(&img, label, p) {
                return err(
                    "/image",
                    format!("the image of \"{label}\" does not pass through \"{name}\""),
                );
            }
        }
    }
    Ok(img)
}

/// Whether the recorded image of `label` passes through `p`, if recorded.
pub fn image_contains(img: &ImagePayload, label: &str, p: &ProjPoint) -> Option<bool> {
    if let Some(c) = img.double_cover(label) {
        return Some(c.line.contains(p));
    }
    if let Some(l) = img.line(label) {
        return Some(l.contains(p));
    }
    if let Some(c) = img.conic(label) {
        return Some(c.contains(p));
    }
    img.cubic(label).map(|f| f.eval(p.coords()).is_zero())
}

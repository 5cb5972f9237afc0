//! Python bindings. Structured results cross the boundary as JSON and are
//! decoded with the standard `json` module, so they arrive as plain dicts.

use g2maps::components::{self, parse_family};
use g2maps::exact::projective::{cross_ratio as cr, CrossRatio, ProjPoint};
use g2maps::exact::{parse_rational, Rational, UniPoly};
use g2maps::singularities::{
    self, type_i_presentation, type_ii_presentation, verify_presentation, PlanarBranch,
};
use g2maps::smoothability::{self, SmoothabilityInstance};
use g2maps::strata;
use num_traits::One;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use serde::Serialize;

fn value_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn to_py<'py>(py: Python<'py>, value: &impl Serialize) -> PyResult<Bound<'py, PyAny>> {
    let text = serde_json::to_string(value).map_err(value_err)?;
    py.import("json")?.call_method1("loads", (text,))
}

fn rational(s: &str) -> PyResult<Rational> {
    parse_rational(s).map_err(value_err)
}

/// Families of degree `d` maps to P^r with their dimensions, in canonical order.
#[pyfunction]
fn enumerate_families(r: u32, d: u32) -> PyResult<Vec<(String, i64)>> {
    let fams = components::enumerate_families(r, d).map_err(value_err)?;
    Ok(fams
        .iter()
        .map(|f| (f.to_string(), f.dimension(r)))
        .collect())
}

/// Dimension of one family; `d` defaults to the degree read off the label.
#[pyfunction]
#[pyo3(signature = (family, r, d=None))]
fn dimension(family: &str, r: u32, d: Option<u32>) -> PyResult<i64> {
    let fam = parse_family(family, d.unwrap_or(4)).map_err(value_err)?;
    if fam.is_main() && d.is_none() {
        return Err(PyValueError::new_err("main needs an explicit degree"));
    }
    components::dimension(&fam, r, d.unwrap_or(fam.degree())).map_err(value_err)
}

#[pyfunction]
fn virtual_dimension(r: u32, d: u32) -> i64 {
    components::virtual_dimension(r, d)
}

/// Decides smoothability of an instance document given as a JSON string.
#[pyfunction]
fn decide<'py>(py: Python<'py>, instance: &str) -> PyResult<Bound<'py, PyAny>> {
    let inst = SmoothabilityInstance::from_json_str(instance).map_err(value_err)?;
    let verdict = smoothability::decide(&inst).map_err(value_err)?;
    to_py(py, &verdict)
}

#[pyfunction]
fn intersection_catalog(py: Python<'_>) -> PyResult<Bound<'_, PyAny>> {
    to_py(py, &smoothability::intersection_catalog())
}

#[pyfunction]
fn strata_table(py: Python<'_>) -> PyResult<Bound<'_, PyAny>> {
    to_py(py, &strata::strata_table())
}

/// Checks every Gorenstein presentation up to `max_branches` branches.
#[pyfunction]
#[pyo3(signature = (max_branches=8))]
fn verify_singularities(max_branches: u32) -> PyResult<Vec<(String, bool)>> {
    let mut out = Vec::new();
    for m in 1..=max_branches {
        let p = type_i_presentation(m).map_err(value_err)?;
        out.push((p.kind.to_string(), verify_presentation(&p)));
    }
    for m in 2..=max_branches {
        let p = type_ii_presentation(m).map_err(value_err)?;
        out.push((p.kind.to_string(), verify_presentation(&p)));
    }
    Ok(out)
}

#[pyfunction]
fn ribbon_genus(k: u32, multiplicities: Vec<u32>) -> i64 {
    singularities::ribbon_genus(k, &multiplicities)
}

/// Classifies a planar germ given as branches (x(t), y(t)), coefficients
/// lowest degree first, as rational strings.
#[pyfunction]
fn classify_germ(branches: Vec<(Vec<String>, Vec<String>)>) -> PyResult<String> {
    let poly = |cs: &[String]| -> PyResult<UniPoly> {
        Ok(UniPoly::new(
            cs.iter().map(|c| rational(c)).collect::<PyResult<_>>()?,
        ))
    };
    let parsed: Vec<PlanarBranch> = branches
        .iter()
        .map(|(x, y)| PlanarBranch::new(poly(x)?, poly(y)?).map_err(value_err))
        .collect::<PyResult<_>>()?;
    Ok(singularities::classify_germ(&parsed)
        .map_err(value_err)?
        .to_string())
}

/// Cross-ratio of four points of the affine line, or "inf".
#[pyfunction]
fn cross_ratio(a: &str, b: &str, c: &str, d: &str) -> PyResult<String> {
    let pts: Vec<ProjPoint> = [a, b, c, d]
        .iter()
        .map(|s| match *s {
            "inf" => Ok(ProjPoint::infinity()),
            s => ProjPoint::p1(rational(s)?, Rational::one()).map_err(value_err),
        })
        .collect::<PyResult<_>>()?;
    match cr(&pts[0], &pts[1], &pts[2], &pts[3]).map_err(value_err)? {
        CrossRatio::Finite(v) => Ok(v.to_string()),
        CrossRatio::Infinite => Ok("inf".into()),
    }
}

#[pymodule(name = "g2maps")]
fn g2maps_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(enumerate_families, m)?)?;
    m.add_function(wrap_pyfunction!(dimension, m)?)?;
    m.add_function(wrap_pyfunction!(virtual_dimension, m)?)?;
    m.add_function(wrap_pyfunction!(decide, m)?)?;
    m.add_function(wrap_pyfunction!(intersection_catalog, m)?)?;
    m.add_function(wrap_pyfunction!(strata_table, m)?)?;
    m.add_function(wrap_pyfunction!(verify_singularities, m)?)?;
    m.add_function(wrap_pyfunction!(ribbon_genus, m)?)?;
    m.add_function(wrap_pyfunction!(classify_germ, m)?)?;
    m.add_function(wrap_pyfunction!(cross_ratio, m)?)?;
    Ok(())
}

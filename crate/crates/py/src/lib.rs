//! Python module `appell`. Polynomials and multivectors are wrapped; labels,
//! reports and Gram matrices come back as plain Python containers with exact
//! rationals encoded as strings (`"p"` or `"p/q"`).

use std::collections::BTreeSet;

use appell_core::ball::{gram_matrix, l2_inner_product};
use appell_core::basis::{harmonic_basis as core_harmonic, BasisBuilder, BasisLabel};
use appell_core::clifford::{Blade, Multivector as CoreMultivector};
use appell_core::json::{multivector_to_json, poly_from_json, poly_to_json, GramJson, PolyJson, ScalarJson};
use appell_core::taylor::{taylor_coefficients_with, taylor_reconstruct_with};
use appell_core::verify::{dimension_table, run_suite, Suite, SuiteParams};
use appell_core::{Field, MVPoly, Scalar};
use pyo3::exceptions::{PyTypeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyModule;
use serde::Serialize;

fn err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn field(name: &str) -> PyResult<Field> {
    name.parse().map_err(err)
}

fn to_py<'py>(py: Python<'py>, value: &impl Serialize) -> PyResult<Bound<'py, PyAny>> {
    let text = serde_json::to_string(value).map_err(err)?;
    PyModule::import(py, "json")?.call_method1("loads", (text,))
}

fn scalar_arg(obj: &Bound<'_, PyAny>) -> PyResult<Scalar> {
    if let Ok((re, im)) = obj.extract::<(String, String)>() {
        return ScalarJson { re, im }.parse().map_err(err);
    }
    if let Ok(n) = obj.extract::<i64>() {
        return Ok(Scalar::int(n));
    }
    if let Ok(s) = obj.extract::<String>() {
        return ScalarJson { re: s, im: "0".into() }.parse().map_err(err);
    }
    Err(PyTypeError::new_err("expected an int, a rational string or an (re, im) pair of strings"))
}

fn scalar_out(s: &Scalar) -> (String, String) {
    let j = ScalarJson::from(s);
    (j.re, j.im)
}

/// Element of the Clifford algebra over the reals or the complex numbers.
#[pyclass(name = "Multivector", module = "appell", frozen, eq, from_py_object)]
#[derive(Clone, PartialEq)]
struct PyMultivector(CoreMultivector);

#[pymethods]
impl PyMultivector {
    /// `terms` maps tuples of basis indices to scalars.
    #[new]
    #[pyo3(signature = (m, terms, field = "real"))]
    fn new(m: usize, terms: Vec<(Vec<usize>, Bound<'_, PyAny>)>, field: &str) -> PyResult<Self> {
        let f = self::field(field)?;
        let mut out = Vec::new();
        for (idx, c) in &terms {
            out.push((Blade::from_indices(idx).map_err(err)?, scalar_arg(c)?));
        }
        CoreMultivector::from_terms(m, f, out).map(Self).map_err(err)
    }

    #[staticmethod]
    #[pyo3(signature = (m, i, field = "real"))]
    fn basis_vector(m: usize, i: usize, field: &str) -> PyResult<Self> {
        if !(1..=m).contains(&i) {
            return Err(err(format!("index {i} outside 1..={m}")));
        }
        Ok(Self(CoreMultivector::basis_vector(m, self::field(field)?, i)))
    }

    #[getter]
    fn m(&self) -> usize {
        self.0.dim()
    }

    #[getter]
    fn field(&self) -> &'static str {
        self.0.field().name()
    }

    fn grades(&self) -> Vec<usize> {
        self.0.grades()
    }

    fn grade_project(&self, s: usize) -> PyResult<Self> {
        self.0.grade_project(s).map(Self).map_err(err)
    }

    fn conjugate(&self) -> Self {
        Self(self.0.clifford_conjugate())
    }

    fn terms<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &multivector_to_json(&self.0))
    }

    fn __add__(&self, other: &Self) -> PyResult<Self> {
        self.0.try_add(&other.0).map(Self).map_err(err)
    }

    fn __sub__(&self, other: &Self) -> PyResult<Self> {
        self.0.try_add(&-&other.0).map(Self).map_err(err)
    }

    fn __mul__(&self, other: &Self) -> PyResult<Self> {
        self.0.geometric_product(&other.0).map(Self).map_err(err)
    }

    fn __neg__(&self) -> Self {
        Self(-&self.0)
    }

    fn __repr__(&self) -> String {
        format!("Multivector({:?})", self.0)
    }
}

/// Polynomial in `x_1..x_m` with Clifford coefficients.
#[pyclass(name = "Poly", module = "appell", frozen, eq, from_py_object)]
#[derive(Clone, PartialEq)]
struct PyPoly(MVPoly);

#[pymethods]
impl PyPoly {
    #[staticmethod]
    #[pyo3(signature = (m, i, field = "real"))]
    fn coordinate(m: usize, i: usize, field: &str) -> PyResult<Self> {
        if !(1..=m).contains(&i) {
            return Err(err(format!("index {i} outside 1..={m}")));
        }
        Ok(Self(MVPoly::coordinate(m, self::field(field)?, i)))
    }

    #[staticmethod]
    fn constant(value: &PyMultivector) -> Self {
        Self(MVPoly::constant(value.0.clone()))
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let j: PolyJson = serde_json::from_str(text).map_err(err)?;
        poly_from_json(&j).map(Self).map_err(err)
    }

    fn to_json(&self) -> PyResult<String> {
        serde_json::to_string(&poly_to_json(&self.0)).map_err(err)
    }

    #[getter]
    fn m(&self) -> usize {
        self.0.dim()
    }

    #[getter]
    fn field(&self) -> &'static str {
        self.0.field().name()
    }

    fn degree(&self) -> Option<u32> {
        self.0.degree()
    }

    fn grades(&self) -> Vec<usize> {
        self.0.grades()
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn dirac(&self) -> Self {
        Self(self.0.dirac())
    }

    fn dirac_plus(&self) -> Self {
        Self(self.0.dirac_plus())
    }

    fn dirac_minus(&self) -> Self {
        Self(self.0.dirac_minus())
    }

    fn laplacian(&self) -> Self {
        Self(self.0.laplacian())
    }

    fn x_wedge(&self) -> Self {
        Self(self.0.x_wedge())
    }

    fn x_dot(&self) -> Self {
        Self(self.0.x_dot())
    }

    fn grade_project(&self, s: usize) -> PyResult<Self> {
        self.0.grade_project(s).map(Self).map_err(err)
    }

    /// Ball inner product divided by `π^⌊m/2⌋`, as an `(re, im)` pair.
    fn inner(&self, other: &Self) -> PyResult<(String, String)> {
        l2_inner_product(&self.0, &other.0).map(|v| scalar_out(&v.value)).map_err(err)
    }

    fn evaluate(&self, point: Vec<Bound<'_, PyAny>>) -> PyResult<PyMultivector> {
        let p: Vec<Scalar> = point.iter().map(scalar_arg).collect::<PyResult<_>>()?;
        self.0.evaluate(&p).map(PyMultivector).map_err(err)
    }

    fn __add__(&self, other: &Self) -> PyResult<Self> {
        self.0.try_add(&other.0).map(Self).map_err(err)
    }

    fn __sub__(&self, other: &Self) -> PyResult<Self> {
        self.0.try_add(&-&other.0).map(Self).map_err(err)
    }

    fn __mul__(&self, other: &Self) -> PyResult<Self> {
        self.0.try_mul(&other.0).map(Self).map_err(err)
    }

    fn __neg__(&self) -> Self {
        Self(-&self.0)
    }

    fn __repr__(&self) -> String {
        format!("Poly({:?})", self.0)
    }
}

/// `[(label, poly)]` for the Hodge-de Rham basis of `H^s_k(R^m)`.
#[pyfunction]
#[pyo3(signature = (s, m, k, field = "real"))]
fn hdr_basis<'py>(py: Python<'py>, s: usize, m: usize, k: u32, field: &str) -> PyResult<Vec<(Bound<'py, PyAny>, PyPoly)>> {
    let elements = BasisBuilder::new(self::field(field)?).hdr_basis(s, m, k).map_err(err)?;
    elements.into_iter().map(|e| Ok((to_py(py, &e.label)?, PyPoly(e.poly)))).collect()
}

/// `[(kind, label, poly)]` for the basis of `Cl^S`-valued monogenics of degree `k`.
#[pyfunction]
#[pyo3(signature = (grades, m, k, field = "real"))]
fn gmt_basis<'py>(
    py: Python<'py>,
    grades: Vec<usize>,
    m: usize,
    k: u32,
    field: &str,
) -> PyResult<Vec<(Bound<'py, PyAny>, Bound<'py, PyAny>, PyPoly)>> {
    let set: BTreeSet<usize> = grades.into_iter().collect();
    let elements = BasisBuilder::new(self::field(field)?).gmt_basis(&set, m, k).map_err(err)?;
    elements
        .into_iter()
        .map(|e| Ok((to_py(py, &e.kind)?, to_py(py, &e.label)?, PyPoly(e.poly))))
        .collect()
}

/// `[(label, poly)]` for the complex harmonic basis of degree `k`.
#[pyfunction]
fn harmonic_basis<'py>(py: Python<'py>, m: usize, k: u32) -> PyResult<Vec<(Bound<'py, PyAny>, PyPoly)>> {
    let basis = core_harmonic(m, k, Field::Complex).map_err(err)?;
    basis.into_iter().map(|(l, p)| Ok((to_py(py, &l)?, PyPoly(p)))).collect()
}

/// Normalized Gram matrix of a list of polynomials.
#[pyfunction]
fn gram<'py>(py: Python<'py>, polys: Vec<PyPoly>) -> PyResult<Bound<'py, PyAny>> {
    let Some(first) = polys.first() else { return Err(err("empty list")) };
    let f = first.0.field();
    let polys: Vec<MVPoly> = polys.into_iter().map(|p| p.0).collect();
    let g = gram_matrix(&polys).map_err(err)?;
    to_py(py, &GramJson::new(&g, f))
}

/// `[(label, (re, im))]` expansion coefficients of `g` in the basis up to degree `kmax`.
#[pyfunction]
fn taylor<'py>(py: Python<'py>, g: &PyPoly, s: usize, kmax: u32) -> PyResult<Vec<(Bound<'py, PyAny>, (String, String))>> {
    let mut b = BasisBuilder::new(g.0.field());
    let coeffs = taylor_coefficients_with(&mut b, &g.0, s, g.0.dim(), kmax).map_err(err)?;
    coeffs.iter().map(|c| Ok((to_py(py, &c.label)?, scalar_out(&c.value)))).collect()
}

/// Inverse of `taylor`: `Σ c_λ f_λ`.
#[pyfunction]
fn reconstruct(coefficients: Vec<(Bound<'_, PyAny>, Bound<'_, PyAny>)>, m: usize, field: &str) -> PyResult<PyPoly> {
    let json = PyModule::import(coefficients.first().map(|c| c.0.py()).ok_or_else(|| err("empty list"))?, "json")?;
    let mut labels = Vec::new();
    let mut values = Vec::new();
    for (label, value) in &coefficients {
        let text: String = json.call_method1("dumps", (label,))?.extract()?;
        labels.push(serde_json::from_str::<BasisLabel>(&text).map_err(err)?);
        values.push(scalar_arg(value)?);
    }
    let mut b = BasisBuilder::new(self::field(field)?);
    taylor_reconstruct_with(&mut b, &values, &labels, m).map(PyPoly).map_err(err)
}

/// Run one verification suite (or `"all"`) and return its reports.
#[pyfunction]
#[pyo3(signature = (suite, m = 3, kmax = 2, field = "real", s = None, seed = 0, trials = 20))]
fn verify<'py>(
    py: Python<'py>,
    suite: &str,
    m: usize,
    kmax: u32,
    field: &str,
    s: Option<usize>,
    seed: u64,
    trials: usize,
) -> PyResult<Bound<'py, PyAny>> {
    let suites: Vec<Suite> = if suite == "all" { Suite::ALL.to_vec() } else { vec![suite.parse().map_err(err)?] };
    let mut params = SuiteParams::new(m, kmax, self::field(field)?);
    params.s = s;
    params.seed = seed;
    params.trials = trials;
    let mut reports = Vec::new();
    for suite in suites {
        let p = if suite == Suite::Harmonic { SuiteParams { field: Field::Complex, ..params.clone() } } else { params.clone() };
        reports.push(run_suite(suite, &p).map_err(err)?);
    }
    to_py(py, &reports)
}

/// Rows `(s, k, |I^{s,m}_k|, oracle rank)` for all grades and `k <= kmax`.
#[pyfunction]
fn dims<'py>(py: Python<'py>, m: usize, kmax: u32) -> PyResult<Bound<'py, PyAny>> {
    to_py(py, &dimension_table(m, kmax).map_err(err)?)
}

#[pymodule]
fn appell(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyMultivector>()?;
    m.add_class::<PyPoly>()?;
    m.add_function(wrap_pyfunction!(hdr_basis, m)?)?;
    m.add_function(wrap_pyfunction!(gmt_basis, m)?)?;
    m.add_function(wrap_pyfunction!(harmonic_basis, m)?)?;
    m.add_function(wrap_pyfunction!(gram, m)?)?;
    m.add_function(wrap_pyfunction!(taylor, m)?)?;
    m.add_function(wrap_pyfunction!(reconstruct, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(dims, m)?)?;
    Ok(())
}

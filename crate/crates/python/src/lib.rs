//! Python bindings: intersection arrays, their potentials and resistances,
//! explicit graphs and the feasibility scan. Exact values are returned as
//! `fractions.Fraction`.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use drg_resistance::exact::{fraction_string, to_f64, Q};
use drg_resistance::graph::{
    effective_resistance_oracle, laplacian_spectral_gap, verify_distance_regular,
};
use drg_resistance::{
    analyze, biggs_ratio, classify_biggs, compute_distance_distribution, construct_named_graph,
    potentials_closed_form, potentials_recursive, resistance_profile, scan, simulate_hitting_time,
    validate_basic, ExplicitGraph, IntersectionArray, ScanQuery,
};

fn value_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn fraction<'py>(py: Python<'py>, x: &Q) -> PyResult<Bound<'py, PyAny>> {
    py.import("fractions")?.getattr("Fraction")?.call1((fraction_string(x),))
}

fn fractions<'py>(py: Python<'py>, xs: &[Q]) -> PyResult<Vec<Bound<'py, PyAny>>> {
    xs.iter().map(|x| fraction(py, x)).collect()
}

#[pyclass(name = "IntersectionArray", frozen, eq, hash, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyIntersectionArray {
    inner: IntersectionArray,
}

#[pymethods]
impl PyIntersectionArray {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        IntersectionArray::parse(text).map(|inner| Self { inner }).map_err(value_err)
    }

    #[getter]
    fn diameter(&self) -> usize {
        self.inner.diameter()
    }

    #[getter]
    fn valency(&self) -> u64 {
        self.inner.valency()
    }

    #[getter]
    fn b(&self) -> Vec<u64> {
        self.inner.b_seq().to_vec()
    }

    #[getter]
    fn c(&self) -> Vec<u64> {
        self.inner.c_seq().to_vec()
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("IntersectionArray('{}')", self.inner)
    }

    /// List of `(check, passed, detail)` tuples, in pipeline order.
    fn validate(&self) -> Vec<(String, bool, String)> {
        validate_basic(&self.inner).checks.into_iter().map(|c| (c.name.to_string(), c.pass, c.detail)).collect()
    }

    fn shell_sizes<'py>(&self, py: Python<'py>) -> PyResult<Vec<Bound<'py, PyAny>>> {
        fractions(py, &compute_distance_distribution(&self.inner).k_sizes)
    }

    fn vertex_count<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        fraction(py, &compute_distance_distribution(&self.inner).n)
    }

    /// `φ_0 … φ_{D-1}` by the recursion, or by the closed form when `closed_form` is set.
    #[pyo3(signature = (closed_form = false))]
    fn potentials<'py>(&self, py: Python<'py>, closed_form: bool) -> PyResult<Vec<Bound<'py, PyAny>>> {
        let p = if closed_form {
            potentials_closed_form(&self.inner, &compute_distance_distribution(&self.inner))
        } else {
            potentials_recursive(&self.inner)
        };
        fractions(py, p.values())
    }

    /// `d_1 … d_D`.
    fn resistances<'py>(&self, py: Python<'py>) -> PyResult<Vec<Bound<'py, PyAny>>> {
        let profile = resistance_profile(&self.inner).map_err(value_err)?;
        fractions(py, &profile.d)
    }

    fn biggs_ratio<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        fraction(py, &biggs_ratio(&self.inner).map_err(value_err)?)
    }

    /// Dict with `class`, `ratio` and `matched_extremal`.
    fn classify<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let v = classify_biggs(&self.inner).map_err(value_err)?;
        let d = PyDict::new(py);
        d.set_item("class", v.class.as_str())?;
        d.set_item("ratio", fraction(py, &v.ratio)?)?;
        d.set_item("matched_extremal", v.matched_extremal)?;
        Ok(d)
    }

    /// The full analysis report as JSON text.
    fn analyze_json(&self) -> PyResult<String> {
        let report = analyze(&self.inner).map_err(value_err)?;
        serde_json::to_string(&report).map_err(value_err)
    }
}

#[pyclass(name = "Graph", frozen)]
struct PyGraph {
    inner: ExplicitGraph,
}

#[pymethods]
impl PyGraph {
    #[staticmethod]
    #[pyo3(signature = (family, params = Vec::new()))]
    fn named(family: &str, params: Vec<usize>) -> PyResult<Self> {
        construct_named_graph(family, &params).map(|inner| Self { inner }).map_err(value_err)
    }

    #[staticmethod]
    fn from_edge_list(text: &str) -> PyResult<Self> {
        ExplicitGraph::from_edge_list(text).map(|inner| Self { inner }).map_err(value_err)
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges().to_vec()
    }

    fn distances_from(&self, v: usize) -> PyResult<Vec<usize>> {
        self.inner.check_vertex(v).map_err(value_err)?;
        Ok(self.inner.distances_from(v))
    }

    fn intersection_array(&self) -> PyResult<PyIntersectionArray> {
        verify_distance_regular(&self.inner).map(|inner| PyIntersectionArray { inner }).map_err(value_err)
    }

    fn effective_resistance<'py>(&self, py: Python<'py>, u: usize, v: usize) -> PyResult<Bound<'py, PyAny>> {
        self.inner.check_vertex(u).map_err(value_err)?;
        self.inner.check_vertex(v).map_err(value_err)?;
        if u == v || !self.inner.is_connected() {
            return Err(PyValueError::new_err("need two distinct vertices of a connected graph"));
        }
        fraction(py, &effective_resistance_oracle(&self.inner, u, v))
    }

    fn spectral_gap(&self) -> f64 {
        laplacian_spectral_gap(&self.inner)
    }

    /// `(mean, stderr)` of the hitting time from `u` to `v`.
    #[pyo3(signature = (u, v, trials = 100_000, seed = 1))]
    fn hitting_time(&self, u: usize, v: usize, trials: u64, seed: u64) -> PyResult<(f64, f64)> {
        let e = simulate_hitting_time(&self.inner, u, v, trials, seed).map_err(value_err)?;
        Ok((e.mean, e.stderr))
    }
}

/// Catalog rows as dicts.
#[pyfunction]
fn catalog<'py>(py: Python<'py>) -> PyResult<Vec<Bound<'py, PyDict>>> {
    drg_resistance::catalog()
        .into_iter()
        .map(|e| {
            let d = PyDict::new(py);
            d.set_item("name", &e.name)?;
            d.set_item("aliases", &e.aliases)?;
            d.set_item("tables", &e.tables)?;
            d.set_item("vertices", e.vertices)?;
            d.set_item("array", e.array.to_string())?;
            d.set_item("printed_ratio", &e.printed_ratio)?;
            d.set_item("has_explicit_construction", e.has_explicit_construction())?;
            Ok(d)
        })
        .collect()
}

/// `(name, array, ratio)` for the four extremal arrays.
#[pyfunction]
fn extremal_set<'py>(py: Python<'py>) -> PyResult<Vec<(String, String, Bound<'py, PyAny>)>> {
    drg_resistance::extremal_set()
        .into_iter()
        .map(|e| Ok((e.name.to_string(), e.array.to_string(), fraction(py, &e.ratio)?)))
        .collect()
}

/// The scan report as JSON text.
#[pyfunction]
#[pyo3(signature = (k_min, k_max, d_min, d_max, n_max = None))]
fn scan_json(py: Python<'_>, k_min: u64, k_max: u64, d_min: usize, d_max: usize, n_max: Option<u64>) -> PyResult<String> {
    let query = ScanQuery::new(k_min..=k_max, d_min..=d_max).map_err(value_err)?.with_n_max(n_max);
    let report = py.detach(|| scan(&query)).map_err(value_err)?;
    serde_json::to_string(&report).map_err(value_err)
}

/// Float rendering of an exact ratio, for quick comparisons.
#[pyfunction]
fn ratio_float(text: &str) -> PyResult<f64> {
    let arr = IntersectionArray::parse(text).map_err(value_err)?;
    Ok(to_f64(&biggs_ratio(&arr).map_err(value_err)?))
}

#[pymodule(name = "drg_resistance")]
fn drg_resistance_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyIntersectionArray>()?;
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(catalog, m)?)?;
    m.add_function(wrap_pyfunction!(extremal_set, m)?)?;
    m.add_function(wrap_pyfunction!(scan_json, m)?)?;
    m.add_function(wrap_pyfunction!(ratio_float, m)?)?;
    Ok(())
}

//! Python bindings. Structured results come back as plain dicts and lists.

use leglab::corpus::{self, corpus_check as run_corpus_check};
use leglab::front::StabilizationSign;
use leglab::skein::SkeinConfig;
use leglab::{Error, FrontDiagram, KnotMetadata, OrientedFront, PDCode};
use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

create_exception!(leglab, LeglabError, PyValueError, "Raised with `code` and `message` attributes.");

fn err(e: impl Into<Error>) -> PyErr {
    let e = e.into();
    let py_err = LeglabError::new_err(format!("{}: {}", e.code(), e));
    Python::with_gil(|py| {
        let value = py_err.value(py);
        let _ = value.setattr("code", e.code());
        let _ = value.setattr("message", e.to_string());
    });
    py_err
}

fn to_py(py: Python<'_>, value: &impl serde::Serialize) -> PyResult<PyObject> {
    let text = serde_json::to_string(value).map_err(|e| PyValueError::new_err(e.to_string()))?;
    Ok(py.import("json")?.call_method1("loads", (text,))?.unbind())
}

fn from_py<T: serde::de::DeserializeOwned>(py: Python<'_>, obj: &Bound<'_, PyAny>) -> PyResult<T> {
    let text: String = py.import("json")?.call_method1("dumps", (obj,))?.extract()?;
    serde_json::from_str(&text).map_err(|e| PyValueError::new_err(e.to_string()))
}

fn config(crossing_cap: Option<usize>) -> SkeinConfig {
    let mut c = SkeinConfig::default();
    if let Some(cap) = crossing_cap {
        c.crossing_cap = cap;
    }
    c
}

/// An oriented front.
#[pyclass(name = "Front", module = "leglab", frozen)]
#[derive(Clone)]
struct PyFront {
    inner: OrientedFront,
}

#[pymethods]
impl PyFront {
    /// `Front("L1 X1 R1")` or `Front("L1 R1", name="eye", reversed=True)`.
    #[new]
    #[pyo3(signature = (word, name = "knot", reversed = false))]
    fn new(word: &str, name: &str, reversed: bool) -> PyResult<Self> {
        let d = FrontDiagram::from_word(name, word).map_err(err)?;
        let inner = OrientedFront::new(d, reversed).map_err(err)?;
        Ok(PyFront { inner })
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let d = FrontDiagram::from_json(text).map_err(err)?;
        Ok(PyFront { inner: leglab::orient(&d).map_err(err)? })
    }

    #[staticmethod]
    fn eye() -> Self {
        PyFront { inner: leglab::orient(&FrontDiagram::eye()).expect("eye is valid") }
    }

    #[staticmethod]
    #[pyo3(signature = (strands, word, name = "braid"))]
    fn positive_braid_closure(strands: usize, word: Vec<usize>, name: &str) -> PyResult<Self> {
        let d = FrontDiagram::positive_braid_closure(name, strands, &word);
        Ok(PyFront { inner: leglab::orient(&d).map_err(err)? })
    }

    #[getter]
    fn name(&self) -> &str {
        self.inner.name()
    }

    #[getter]
    fn word(&self) -> String {
        self.inner.diagram().word()
    }

    #[getter]
    fn tb(&self) -> i64 {
        self.inner.invariants().tb
    }

    #[getter]
    fn r(&self) -> i64 {
        self.inner.invariants().r
    }

    fn invariants(&self, py: Python<'_>) -> PyResult<PyObject> {
        to_py(py, &self.inner.invariants())
    }

    fn reversed(&self) -> Self {
        PyFront { inner: self.inner.reversed() }
    }

    /// `sign` is `"+"` or `"-"`.
    fn stabilize(&self, sign: &str) -> PyResult<Self> {
        let s = match sign {
            "+" => StabilizationSign::Positive,
            "-" => StabilizationSign::Negative,
            _ => return Err(PyValueError::new_err("sign must be '+' or '-'")),
        };
        Ok(PyFront { inner: leglab::stabilize(&self.inner, s) })
    }

    fn connect_sum(&self, other: &PyFront) -> Self {
        PyFront { inner: leglab::connect_sum(&self.inner, &other.inner) }
    }

    fn pd(&self) -> PyPd {
        PyPd { inner: leglab::front_to_pd(&self.inner) }
    }

    fn to_json(&self) -> String {
        self.inner.diagram().to_json()
    }

    /// Bound table; `metadata` is a dict in the corpus metadata format,
    /// computed from the diagram when omitted.
    #[pyo3(signature = (metadata = None, crossing_cap = None))]
    fn bounds(
        &self,
        py: Python<'_>,
        metadata: Option<&Bound<'_, PyAny>>,
        crossing_cap: Option<usize>,
    ) -> PyResult<PyObject> {
        let pd = leglab::front_to_pd(&self.inner);
        let meta: KnotMetadata = match metadata {
            Some(m) => from_py(py, m)?,
            None => KnotMetadata::from_pd(self.inner.name(), &pd),
        };
        let inv = self.inner.invariants();
        let tau = leglab::bounds::estimate_tau(&inv, &meta).map_err(err)?;
        let cfg = config(crossing_cap);
        let h = leglab::skein::homfly_with(&pd, &cfg).map_err(err)?.poly;
        let k = leglab::skein::kauffman_with(&pd, &cfg).map_err(err)?.poly;
        let polys = leglab::bounds::Polys { homfly: &h, kauffman: &k };
        let report = leglab::bound_table(&inv, &meta, tau.as_ref(), Some(polys)).map_err(err)?;
        to_py(py, &report)
    }

    fn __repr__(&self) -> String {
        format!("Front({:?}, name={:?})", self.word(), self.name())
    }
}

/// A planar diagram code.
#[pyclass(name = "PD", module = "leglab", frozen)]
#[derive(Clone)]
struct PyPd {
    inner: PDCode,
}

#[pymethods]
impl PyPd {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        Ok(PyPd { inner: text.parse().map_err(err)? })
    }

    #[getter]
    fn crossings(&self) -> Vec<[u32; 4]> {
        self.inner.crossings.clone()
    }

    #[getter]
    fn writhe(&self) -> i64 {
        self.inner.writhe()
    }

    fn signature(&self) -> i64 {
        leglab::signature(&self.inner)
    }

    fn determinant(&self) -> i64 {
        leglab::determinant(&self.inner)
    }

    fn seifert_genus_upper(&self) -> i64 {
        leglab::seifert_genus_upper(&self.inner)
    }

    fn mirror(&self) -> Self {
        PyPd { inner: leglab::mirror(&self.inner) }
    }

    fn switch(&self, crossings: Vec<usize>) -> PyResult<Self> {
        Ok(PyPd { inner: self.inner.switch_crossings(&crossings).map_err(err)? })
    }

    #[pyo3(signature = (crossing_cap = None))]
    fn homfly(&self, crossing_cap: Option<usize>) -> PyResult<String> {
        Ok(leglab::skein::homfly_with(&self.inner, &config(crossing_cap)).map_err(err)?.poly.to_string())
    }

    #[pyo3(signature = (crossing_cap = None))]
    fn kauffman(&self, crossing_cap: Option<usize>) -> PyResult<String> {
        Ok(leglab::skein::kauffman_with(&self.inner, &config(crossing_cap)).map_err(err)?.poly.to_string())
    }

    #[pyo3(signature = (crossing_cap = None))]
    fn homfly_bound(&self, crossing_cap: Option<usize>) -> PyResult<i64> {
        let p = leglab::skein::homfly_with(&self.inner, &config(crossing_cap)).map_err(err)?.poly;
        leglab::homfly_bound(&p).map_err(err)
    }

    #[pyo3(signature = (crossing_cap = None))]
    fn kauffman_bound(&self, crossing_cap: Option<usize>) -> PyResult<i64> {
        let p = leglab::skein::kauffman_with(&self.inner, &config(crossing_cap)).map_err(err)?.poly;
        leglab::kauffman_bound(&p).map_err(err)
    }

    #[pyo3(signature = (switches = Vec::new(), crossing_cap = None))]
    fn verify_unknotting(
        &self,
        py: Python<'_>,
        switches: Vec<usize>,
        crossing_cap: Option<usize>,
    ) -> PyResult<PyObject> {
        let c = corpus::verify_unknotting(&self.inner, &switches, &config(crossing_cap)).map_err(err)?;
        to_py(py, &c)
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("PD({:?})", self.inner.to_string())
    }

    fn __eq__(&self, other: &PyPd) -> bool {
        self.inner == other.inner
    }
}

#[pyfunction]
fn tau_torus(p: i64, q: i64) -> PyResult<i64> {
    leglab::tau_torus(p, q).map_err(err)
}

#[pyfunction]
fn tau_alternating(signature: i64) -> PyResult<i64> {
    leglab::tau_alternating(signature).map_err(err)
}

#[pyfunction]
fn tau_mirror(tau: i64) -> i64 {
    leglab::tau_mirror(tau)
}

#[pyfunction]
fn tau_connected_sum(t1: i64, t2: i64) -> i64 {
    leglab::tau_connected_sum(t1, t2)
}

#[pyfunction]
fn sandwich(py: Python<'_>, tb: i64, r: i64, unknotting_upper: i64) -> PyResult<PyObject> {
    to_py(py, &leglab::sandwich(tb, r, unknotting_upper).map_err(err)?)
}

#[pyfunction]
fn whitehead_double_tau(py: Python<'_>, has_positive_tb_rep: bool) -> PyResult<PyObject> {
    to_py(py, &leglab::whitehead_double_tau(has_positive_tb_rep).map_err(err)?)
}

/// Checks a corpus directory, or the shipped corpus when `path` is None.
#[pyfunction]
#[pyo3(signature = (path = None, crossing_cap = None))]
fn corpus_check(py: Python<'_>, path: Option<&str>, crossing_cap: Option<usize>) -> PyResult<PyObject> {
    let entries = match path {
        Some(p) => corpus::load_dir(std::path::Path::new(p)).map_err(err)?,
        None => corpus::shipped(),
    };
    let report = py.allow_threads(|| run_corpus_check(&entries, &config(crossing_cap)));
    to_py(py, &report)
}

/// A shipped corpus entry as a dict.
#[pyfunction]
fn corpus_entry(py: Python<'_>, name: &str) -> PyResult<PyObject> {
    let e = corpus::shipped_entry(name).ok_or_else(|| PyValueError::new_err(format!("no shipped entry {name}")))?;
    to_py(py, &e)
}

#[pymodule]
#[pyo3(name = "leglab")]
fn leglab_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("LeglabError", m.py().get_type::<LeglabError>())?;
    m.add_class::<PyFront>()?;
    m.add_class::<PyPd>()?;
    m.add_function(wrap_pyfunction!(tau_torus, m)?)?;
    m.add_function(wrap_pyfunction!(tau_alternating, m)?)?;
    m.add_function(wrap_pyfunction!(tau_mirror, m)?)?;
    m.add_function(wrap_pyfunction!(tau_connected_sum, m)?)?;
    m.add_function(wrap_pyfunction!(sandwich, m)?)?;
    m.add_function(wrap_pyfunction!(whitehead_double_tau, m)?)?;
    m.add_function(wrap_pyfunction!(corpus_check, m)?)?;
    m.add_function(wrap_pyfunction!(corpus_entry, m)?)?;
    Ok(())
}

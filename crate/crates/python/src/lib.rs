//! Python bindings. Exact values cross the boundary as `fractions.Fraction`;
//! grades are accepted as strings (`"0.3"`), ints, or floats (read via `repr`,
//! so `0.3` means exactly 0.3).

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList, PyString};

use fuzzy_wiener as fw;
use fw::falsifier::{Instance, VerdictDetail};
use fw::{IndexValue, Membership, SaturatedCycleSpec, SizeRange};

pyo3::create_exception!(fuzzy_wiener_py, FuzzyWienerError, PyValueError);

fn err(e: fw::Error) -> PyErr {
    FuzzyWienerError::new_err(e.to_string())
}

fn fraction<'py>(py: Python<'py>, v: &IndexValue) -> PyResult<Bound<'py, PyAny>> {
    py.import("fractions")?.getattr("Fraction")?.call1((v.to_string(),))
}

/// Decimal text for a grade given as str, int or float.
fn grade_text(obj: &Bound<'_, PyAny>) -> PyResult<String> {
    if let Ok(s) = obj.cast::<PyString>() {
        return Ok(s.to_str()?.trim().to_string());
    }
    if obj.is_instance_of::<pyo3::types::PyBool>() {
        return Err(FuzzyWienerError::new_err("a grade cannot be a bool"));
    }
    if obj.is_instance_of::<pyo3::types::PyInt>() || obj.is_instance_of::<pyo3::types::PyFloat>() {
        return Ok(obj.repr()?.to_str()?.to_string());
    }
    Err(FuzzyWienerError::new_err(format!(
        "grade must be str, int or float, not {}",
        obj.get_type().name()?
    )))
}

fn grade(obj: &Bound<'_, PyAny>) -> PyResult<Membership> {
    grade_text(obj)?.parse().map_err(err)
}

fn cycle_spec(n: usize, kappa: &Bound<'_, PyAny>, eta: &Bound<'_, PyAny>) -> PyResult<SaturatedCycleSpec> {
    SaturatedCycleSpec::new(n, grade(kappa)?, grade(eta)?).map_err(err)
}

/// A validated fuzzy graph.
#[pyclass(name = "FuzzyGraph", module = "fuzzy_wiener_py", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
pub struct PyFuzzyGraph {
    inner: fw::FuzzyGraph,
}

impl From<fw::FuzzyGraph> for PyFuzzyGraph {
    fn from(inner: fw::FuzzyGraph) -> Self {
        PyFuzzyGraph { inner }
    }
}

#[pymethods]
impl PyFuzzyGraph {
    /// `FuzzyGraph([(name, sigma), ...], [(u, v, mu), ...])`
    #[new]
    #[pyo3(signature = (vertices, edges=Vec::new()))]
    fn new(
        vertices: Vec<(String, Bound<'_, PyAny>)>,
        edges: Vec<(String, String, Bound<'_, PyAny>)>,
    ) -> PyResult<Self> {
        let vs: Vec<(String, String)> = vertices
            .iter()
            .map(|(v, s)| Ok((v.clone(), grade_text(s)?)))
            .collect::<PyResult<_>>()?;
        let es: Vec<(String, String, String)> = edges
            .iter()
            .map(|(u, v, m)| Ok((u.clone(), v.clone(), grade_text(m)?)))
            .collect::<PyResult<_>>()?;
        let vs: Vec<(&str, &str)> = vs.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
        let es: Vec<(&str, &str, &str)> = es.iter().map(|(a, b, c)| (a.as_str(), b.as_str(), c.as_str())).collect();
        fw::FuzzyGraph::from_records(&vs, &es).map(Self::from).map_err(err)
    }

    /// Parse `.fzg` text.
    #[staticmethod]
    fn from_fzg(text: &str) -> PyResult<Self> {
        fw::parse_graph(text).map(Self::from).map_err(err)
    }

    fn to_fzg(&self) -> String {
        fw::to_fzg(&self.inner)
    }

    #[getter]
    fn vertex_count(&self) -> usize {
        self.inner.vertex_count()
    }

    #[getter]
    fn edge_count(&self) -> usize {
        self.inner.edge_count()
    }

    fn vertices(&self) -> Vec<String> {
        self.inner.vertices().map(|(v, _)| v.to_string()).collect()
    }

    /// `[(u, v, mu), ...]` with `mu` as a Fraction.
    fn edges<'py>(&self, py: Python<'py>) -> PyResult<Vec<(String, String, Bound<'py, PyAny>)>> {
        self.inner
            .edges()
            .map(|e| Ok((e.u.to_string(), e.v.to_string(), fraction(py, &e.mu.to_value())?)))
            .collect()
    }

    /// Strength of connectedness between `u` and `v`.
    fn strength<'py>(&self, py: Python<'py>, u: &str, v: &str) -> PyResult<Bound<'py, PyAny>> {
        let s = fw::strength_of_connectedness(&self.inner)
            .get(u, v)
            .ok_or_else(|| FuzzyWienerError::new_err(format!("unknown vertex in ({u}, {v})")))?;
        fraction(py, &s.to_value())
    }

    /// Geodesic distance over strong edges.
    fn distance<'py>(&self, py: Python<'py>, u: &str, v: &str) -> PyResult<Bound<'py, PyAny>> {
        let ds = fw::geodesic_distance(&self.inner).map_err(err)?;
        let d = ds
            .get(u, v)
            .ok_or_else(|| FuzzyWienerError::new_err(format!("unknown vertex in ({u}, {v})")))?;
        fraction(py, &d)
    }

    fn wiener_index<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        fraction(py, &fw::wiener_index(&self.inner).map_err(err)?)
    }

    fn connectivity_index<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        fraction(py, &fw::connectivity_index(&self.inner))
    }

    /// `[(u, v, mu, "alpha" | "beta" | "delta", conn_without_edge), ...]`
    fn classify_edges<'py>(
        &self,
        py: Python<'py>,
    ) -> PyResult<Vec<(String, String, Bound<'py, PyAny>, &'static str, Bound<'py, PyAny>)>> {
        fw::classify_edges(&self.inner)
            .into_iter()
            .map(|c| {
                Ok((
                    c.u.to_string(),
                    c.v.to_string(),
                    fraction(py, &c.mu.to_value())?,
                    c.class.name(),
                    fraction(py, &c.residual.to_value())?,
                ))
            })
            .collect()
    }

    fn strong_subgraph(&self) -> Self {
        fw::strong_subgraph(&self.inner).into()
    }

    /// Maximum spanning tree as a graph.
    fn mst(&self) -> PyResult<Self> {
        let tree = fw::maximum_spanning_tree(&self.inner).map_err(err)?;
        Ok(tree.into_graph().into())
    }

    /// Connectivity and tree/cycle flags.
    fn kind<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let k = fw::graph_kind(&self.inner);
        let d = PyDict::new(py);
        d.set_item("connected", k.is_connected)?;
        d.set_item("fuzzy_tree", k.is_fuzzy_tree)?;
        d.set_item("fuzzy_cycle", k.is_fuzzy_cycle)?;
        d.set_item("saturated_fuzzy_cycle", k.is_saturated_fuzzy_cycle)?;
        Ok(d)
    }

    fn __repr__(&self) -> String {
        format!(
            "FuzzyGraph(vertices={}, edges={})",
            self.inner.vertex_count(),
            self.inner.edge_count()
        )
    }
}

fn verdict_dict<'py>(py: Python<'py>, v: &fw::ClaimVerdict) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("claim", v.claim.name())?;
    d.set_item("holds", v.holds)?;
    d.set_item("lhs", fraction(py, &v.lhs)?)?;
    d.set_item("rhs", fraction(py, &v.rhs)?)?;
    let detail = PyDict::new(py);
    match &v.detail {
        VerdictDetail::Corollary { wi_g, wi_f, ci_f } => {
            detail.set_item("WI(G)", fraction(py, wi_g)?)?;
            detail.set_item("WI(F)", fraction(py, wi_f)?)?;
            detail.set_item("CI(F)", fraction(py, ci_f)?)?;
        }
        VerdictDetail::Theorem { direct, formula } => {
            detail.set_item("direct", fraction(py, direct)?)?;
            detail.set_item("formula", fraction(py, formula)?)?;
        }
    }
    d.set_item("detail", detail)?;
    d.set_item("n", v.instance.size())?;
    if let Instance::Cycle(spec) = &v.instance {
        d.set_item("kappa", fraction(py, &spec.kappa().to_value())?)?;
        d.set_item("eta", fraction(py, &spec.eta().to_value())?)?;
    }
    d.set_item("graph", PyFuzzyGraph::from(v.instance.graph()))?;
    Ok(d)
}

/// Closed-form value claimed for the Wiener index of an alternating cycle.
#[pyfunction]
fn theorem_star_formula<'py>(
    py: Python<'py>,
    n: usize,
    kappa: &Bound<'py, PyAny>,
    eta: &Bound<'py, PyAny>,
) -> PyResult<Bound<'py, PyAny>> {
    fraction(py, &fw::theorem_star_formula(&cycle_spec(n, kappa, eta)?))
}

/// Even cycle `v0..v(n-1)` alternating κ and η, all σ = 1.
#[pyfunction]
fn make_saturated_cycle(n: usize, kappa: &Bound<'_, PyAny>, eta: &Bound<'_, PyAny>) -> PyResult<PyFuzzyGraph> {
    Ok(fw::make_saturated_cycle(&cycle_spec(n, kappa, eta)?).into())
}

#[pyfunction]
#[pyo3(signature = (seed, n, extra_edges=0))]
fn random_fuzzy_tree(seed: u64, n: usize, extra_edges: usize) -> PyResult<PyFuzzyGraph> {
    fw::random_fuzzy_tree(seed, n, extra_edges).map(Into::into).map_err(err)
}

#[pyfunction]
fn random_connected_graph(seed: u64, n: usize) -> PyResult<PyFuzzyGraph> {
    fw::structure::random_connected_graph(seed, n).map(Into::into).map_err(err)
}

#[pyfunction]
fn check_corollary_star<'py>(py: Python<'py>, graph: &PyFuzzyGraph) -> PyResult<Bound<'py, PyDict>> {
    verdict_dict(py, &fw::check_corollary_star(&graph.inner).map_err(err)?)
}

#[pyfunction]
fn check_theorem_star<'py>(
    py: Python<'py>,
    n: usize,
    kappa: &Bound<'py, PyAny>,
    eta: &Bound<'py, PyAny>,
) -> PyResult<Bound<'py, PyDict>> {
    verdict_dict(py, &fw::check_theorem_star(&cycle_spec(n, kappa, eta)?))
}

/// Run the counterexample search; `claim` is "corollary-star" or "theorem-star",
/// `sizes` a range such as "3..8".
#[pyfunction]
#[pyo3(signature = (claim, trials, seed=0, sizes="3..8"))]
fn search_counterexamples<'py>(
    py: Python<'py>,
    claim: &str,
    trials: usize,
    seed: u64,
    sizes: &str,
) -> PyResult<Bound<'py, PyDict>> {
    let claim: fw::ClaimId = claim.parse().map_err(err)?;
    let sizes: SizeRange = sizes.parse().map_err(err)?;
    let outcome = py
        .detach(|| fw::search_counterexamples(claim, trials, seed, sizes))
        .map_err(err)?;
    let d = PyDict::new(py);
    d.set_item("evaluated", outcome.evaluated)?;
    let list = PyList::empty(py);
    for v in &outcome.violations {
        list.append(verdict_dict(py, v)?)?;
    }
    d.set_item("violations", list)?;
    Ok(d)
}

/// Recompute the built-in worked examples: `[(label, expected, actual, passed), ...]`.
#[pyfunction]
fn repro() -> PyResult<Vec<(String, String, String, bool)>> {
    Ok(fw::replication::replicate()
        .map_err(err)?
        .into_iter()
        .map(|c| (c.label, c.expected, c.actual, c.passed))
        .collect())
}

#[pymodule]
pub fn fuzzy_wiener_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("FuzzyWienerError", m.py().get_type::<FuzzyWienerError>())?;
    m.add_class::<PyFuzzyGraph>()?;
    m.add_function(wrap_pyfunction!(theorem_star_formula, m)?)?;
    m.add_function(wrap_pyfunction!(make_saturated_cycle, m)?)?;
    m.add_function(wrap_pyfunction!(random_fuzzy_tree, m)?)?;
    m.add_function(wrap_pyfunction!(random_connected_graph, m)?)?;
    m.add_function(wrap_pyfunction!(check_corollary_star, m)?)?;
    m.add_function(wrap_pyfunction!(check_theorem_star, m)?)?;
    m.add_function(wrap_pyfunction!(search_counterexamples, m)?)?;
    m.add_function(wrap_pyfunction!(repro, m)?)?;
    Ok(())
}

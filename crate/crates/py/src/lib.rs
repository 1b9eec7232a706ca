//! Python bindings: graphs, instances, the solvers and the helper tools.

use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use hcolor::classes::{parse_classes, recognize_all, sample_in_class, SampleOptions};
use hcolor::hardness::{reduce_3col_to_cobipartite, reduce_3col_to_split};
use hcolor::induced::clique_number;
use hcolor::io::{graph_to_json, instance_to_json, parse_graph, parse_instance};
use hcolor::modular::modular_decomposition;
use hcolor::monitor::{find_monitor_base, find_monitor_base_padded};
use hcolor::named::{make_named, NamedKind};
use hcolor::oracle::oracle_solve;

create_exception!(hcolor_py, ClassViolationError, PyValueError);
create_exception!(hcolor_py, CapExceededError, PyValueError);

fn to_py(e: hcolor::Error) -> PyErr {
    let msg = e.to_string();
    if e.is_class_violation() || matches!(e, hcolor::Error::NotCograph(_) | hcolor::Error::StructureViolation { .. }) {
        ClassViolationError::new_err(msg)
    } else if e.is_cap_exceeded() {
        CapExceededError::new_err(msg)
    } else {
        PyValueError::new_err(msg)
    }
}

/// A simple graph; loops are allowed only in patterns.
#[pyclass(name = "Graph", module = "hcolor_py", skip_from_py_object)]
#[derive(Clone)]
pub struct PyGraph {
    pub inner: hcolor::Graph,
}

#[pymethods]
impl PyGraph {
    #[new]
    #[pyo3(signature = (n, edges = Vec::new(), loops = Vec::new()))]
    pub fn new(n: usize, edges: Vec<(usize, usize)>, loops: Vec<usize>) -> PyResult<Self> {
        let mut g = hcolor::Graph::from_edges(n, &edges).map_err(to_py)?;
        for v in loops {
            if v >= n {
                return Err(to_py(hcolor::Error::VertexOutOfRange { vertex: v, n }));
            }
            g.add_loop(v);
        }
        Ok(PyGraph { inner: g })
    }

    #[staticmethod]
    pub fn from_json(text: &str) -> PyResult<Self> {
        Ok(PyGraph { inner: parse_graph(text).map_err(to_py)? })
    }

    /// Named graph, e.g. `("path", 5)`, `("qk", 4)`, `("bull", 0)`.
    #[staticmethod]
    #[pyo3(signature = (kind, param = 0))]
    pub fn named(kind: &str, param: usize) -> PyResult<Self> {
        let kind: NamedKind = kind.parse().map_err(to_py)?;
        Ok(PyGraph { inner: make_named(kind, param).map_err(to_py)? })
    }

    /// Random member of a class intersection such as `"p5-free,bull-free"`.
    #[staticmethod]
    #[pyo3(signature = (classes, n, density = 0.5, seed = 0, connected = false))]
    pub fn sample(classes: &str, n: usize, density: f64, seed: u64, connected: bool) -> PyResult<Self> {
        let classes = parse_classes(classes).map_err(to_py)?;
        let opts = SampleOptions { connected, ..Default::default() };
        Ok(PyGraph { inner: sample_in_class(&classes, n, density, seed, opts).map_err(to_py)? })
    }

    pub fn to_json(&self) -> String {
        graph_to_json(&self.inner)
    }

    #[getter]
    pub fn n(&self) -> usize {
        self.inner.n()
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.inner.n() && v < self.inner.n() && self.inner.has_edge(u, v)
    }

    pub fn neighbors(&self, u: usize) -> PyResult<Vec<usize>> {
        if u >= self.inner.n() {
            return Err(to_py(hcolor::Error::VertexOutOfRange { vertex: u, n: self.inner.n() }));
        }
        Ok(self.inner.neighbors(u).to_vec())
    }

    pub fn is_connected(&self) -> bool {
        self.inner.is_connected()
    }

    pub fn clique_number(&self) -> usize {
        clique_number(&self.inner)
    }

    pub fn complement(&self) -> Self {
        PyGraph { inner: self.inner.complement() }
    }

    /// Membership in every class of a comma-separated list.
    pub fn recognize(&self, classes: &str) -> PyResult<bool> {
        let classes = parse_classes(classes).map_err(to_py)?;
        Ok(recognize_all(&self.inner, &classes))
    }

    /// Smallest monitor base, optionally anchored and padded to three vertices.
    #[pyo3(signature = (anchor = None, padded = false))]
    pub fn monitor_base(&self, anchor: Option<usize>, padded: bool) -> PyResult<Vec<usize>> {
        let base = if padded {
            find_monitor_base_padded(&self.inner, anchor)
        } else {
            find_monitor_base(&self.inner, anchor)
        };
        Ok(base.map_err(to_py)?.x)
    }

    /// Modular decomposition tree as JSON (`null` for the empty graph).
    pub fn modular_decomposition(&self) -> String {
        serde_json::to_string(&modular_decomposition(&self.inner)).expect("tree serializes")
    }

    fn __len__(&self) -> usize {
        self.inner.n()
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, m={})", self.inner.n(), self.inner.edge_count())
    }
}

/// Host graph, pattern graph and revenue table.
#[pyclass(name = "Instance", module = "hcolor_py", skip_from_py_object)]
#[derive(Clone)]
pub struct PyInstance {
    pub inner: hcolor::Instance,
}

#[pymethods]
impl PyInstance {
    #[new]
    pub fn new(host: &PyGraph, pattern: &PyGraph, revenue: Vec<Vec<f64>>) -> PyResult<Self> {
        let k = pattern.inner.n();
        let rev = hcolor::RevenueTable::from_rows(&revenue, k).map_err(to_py)?;
        let inst = hcolor::Instance::new(host.inner.clone(), hcolor::PatternGraph::new(pattern.inner.clone()), rev)
            .map_err(to_py)?;
        Ok(PyInstance { inner: inst })
    }

    #[staticmethod]
    pub fn from_json(text: &str) -> PyResult<Self> {
        Ok(PyInstance { inner: parse_instance(text).map_err(to_py)? })
    }

    pub fn to_json(&self) -> String {
        instance_to_json(&self.inner)
    }

    #[getter]
    pub fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    pub fn k(&self) -> usize {
        self.inner.k()
    }

    /// Total revenue of an assignment, or an error if it is not a partial homomorphism.
    pub fn revenue(&self, assignment: Vec<(usize, usize)>) -> PyResult<f64> {
        let phi: hcolor::PartialColoring = assignment.into_iter().collect();
        hcolor::model::revenue(&self.inner, &phi).map_err(to_py)
    }

    fn __repr__(&self) -> String {
        format!("Instance(n={}, k={})", self.inner.n(), self.inner.k())
    }
}

/// Optimum, an optimal assignment and solver counters.
#[pyclass(name = "SolveReport", module = "hcolor_py", skip_from_py_object)]
#[derive(Clone)]
pub struct PySolveReport {
    pub inner: hcolor::SolveReport,
}

#[pymethods]
impl PySolveReport {
    #[getter]
    pub fn opt(&self) -> f64 {
        self.inner.opt
    }

    #[getter]
    pub fn assignment(&self) -> Vec<(usize, usize)> {
        self.inner.solution.iter().collect()
    }

    #[getter]
    pub fn depth(&self) -> usize {
        self.inner.stats.depth
    }

    #[getter]
    pub fn branch_nodes(&self) -> usize {
        self.inner.stats.branch_nodes
    }

    #[getter]
    pub fn prime_calls(&self) -> usize {
        self.inner.stats.prime_calls
    }

    pub fn to_json(&self) -> String {
        hcolor::io::report_to_json(&self.inner)
    }

    fn __repr__(&self) -> String {
        format!("SolveReport(opt={}, assigned={})", self.inner.opt, self.inner.solution.len())
    }
}

/// Solves with one strategy: oracle, recursive, subexp, threshold, cograph or bullfree.
#[pyfunction]
#[pyo3(signature = (instance, strategy = "recursive", s = 3, t = 2, alpha = 1, k = 2, check_class = false))]
pub fn solve(
    instance: &PyInstance,
    strategy: &str,
    s: usize,
    t: usize,
    alpha: u32,
    k: usize,
    check_class: bool,
) -> PyResult<PySolveReport> {
    let strategy: hcolor::Strategy = strategy.parse().map_err(to_py)?;
    let cfg = hcolor::SolverConfig { check_class, check_invariants: check_class, ..hcolor::SolverConfig::with_st(s, t) };
    let params = hcolor::StrategyParams { alpha, k };
    let inner = hcolor::solve_with(strategy, &instance.inner, &cfg, params).map_err(to_py)?;
    Ok(PySolveReport { inner })
}

/// Brute-force optimum; accepts looped patterns.
#[pyfunction]
pub fn oracle_opt(instance: &PyInstance) -> PyResult<f64> {
    Ok(oracle_solve(&instance.inner).map_err(to_py)?.value)
}

/// 3-Coloring reduction; returns the host and the `H0` color lists.
#[pyfunction]
#[pyo3(signature = (graph, target = "split"))]
pub fn reduce_3col(graph: &PyGraph, target: &str) -> PyResult<(PyGraph, Vec<Vec<usize>>)> {
    let (li, _) = match target {
        "split" => reduce_3col_to_split(&graph.inner),
        "cobipartite" => reduce_3col_to_cobipartite(&graph.inner),
        other => return Err(PyValueError::new_err(format!("unknown target {other:?}"))),
    }
    .map_err(to_py)?;
    Ok((PyGraph { inner: li.graph }, li.lists))
}

#[pymodule]
fn hcolor_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_class::<PyInstance>()?;
    m.add_class::<PySolveReport>()?;
    m.add_function(wrap_pyfunction!(solve, m)?)?;
    m.add_function(wrap_pyfunction!(oracle_opt, m)?)?;
    m.add_function(wrap_pyfunction!(reduce_3col, m)?)?;
    m.add("ClassViolationError", m.py().get_type::<ClassViolationError>())?;
    m.add("CapExceededError", m.py().get_type::<CapExceededError>())?;
    Ok(())
}

//! Python bindings: graphs, the solver, certificate checking, suns and the
//! exhaustive oracles. Certificates cross the boundary as JSON strings.

use longcycles::cycles::{oracle_max_packing, oracle_min_hitting, DetectorBudget};
use longcycles::graph::{parse_graph, write_graph, MultiGraph};
use longcycles::solver::{self, AssertLevel, Certificate, SolverConfig};
use longcycles::Error;
use pyo3::create_exception;
use pyo3::exceptions::{PyException, PyValueError};
use pyo3::prelude::*;

create_exception!(longcycles_py, BudgetExceeded, PyException);
create_exception!(longcycles_py, ClaimViolated, PyException);

fn py_err(e: Error) -> PyErr {
    match e {
        Error::Parse { .. } | Error::InvalidInput(_) => PyValueError::new_err(e.to_string()),
        Error::BudgetExceeded(_) => BudgetExceeded::new_err(e.to_string()),
        Error::ClaimViolated { .. } => ClaimViolated::new_err(e.to_string()),
    }
}

/// An undirected multigraph; edge ids follow insertion order.
#[pyclass(name = "Graph", frozen)]
struct PyGraph {
    g: MultiGraph,
}

#[pymethods]
impl PyGraph {
    #[new]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        Ok(PyGraph { g: MultiGraph::from_edges(n, edges).map_err(py_err)? })
    }

    /// Parses the `n m` header plus one `u v` line per edge format.
    #[staticmethod]
    fn from_edge_list(text: &str) -> PyResult<Self> {
        Ok(PyGraph { g: parse_graph(text).map_err(py_err)? })
    }

    fn to_edge_list(&self) -> String {
        write_graph(&self.g, &[])
    }

    #[getter]
    fn n(&self) -> usize {
        self.g.vertex_count()
    }

    #[getter]
    fn m(&self) -> usize {
        self.g.edge_count()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.g.edges().map(|e| self.g.endpoints(e)).map(|(a, b)| (a.0, b.0)).collect()
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, m={})", self.g.vertex_count(), self.g.edge_count())
    }
}

fn budget(budget_ms: u64, budget_nodes: Option<u64>) -> DetectorBudget {
    let nodes = budget_nodes.unwrap_or(DetectorBudget::default().max_nodes_expanded);
    DetectorBudget::new(nodes, budget_ms).start_clock()
}

/// Returns the certificate as JSON: `k` edge-disjoint cycles of length at
/// least `ell`, or a hitting set of at most `f_bound(k, ell)` edges.
#[pyfunction]
#[pyo3(signature = (graph, k, ell, budget_ms = 0, budget_nodes = None, assert_level = "auto"))]
fn solve(
    py: Python<'_>,
    graph: &PyGraph,
    k: usize,
    ell: usize,
    budget_ms: u64,
    budget_nodes: Option<u64>,
    assert_level: &str,
) -> PyResult<String> {
    let assert_level = match assert_level {
        "low" => AssertLevel::Low,
        "high" => AssertLevel::High,
        "auto" => AssertLevel::Auto,
        other => return Err(PyValueError::new_err(format!("unknown assert level {other:?}"))),
    };
    let cfg = SolverConfig { budget: budget(budget_ms, budget_nodes), assert_level, seed: 0 };
    let g = &graph.g;
    py.detach(|| solver::solve(g, k, ell, &cfg)).map(|c| c.to_json()).map_err(py_err)
}

/// Checks a JSON certificate; returns `(valid, diagnostics)`.
#[pyfunction]
#[pyo3(signature = (graph, certificate, budget_ms = 0))]
fn verify(graph: &PyGraph, certificate: &str, budget_ms: u64) -> PyResult<(bool, Vec<String>)> {
    let cert = Certificate::from_json(certificate).map_err(py_err)?;
    let v = solver::verify(&graph.g, &cert, &budget(budget_ms, None)).map_err(py_err)?;
    Ok((v.valid, v.diagnostics))
}

#[pyfunction]
fn f_bound(k: usize, ell: usize) -> PyResult<usize> {
    if k == 0 || ell == 0 {
        return Err(PyValueError::new_err("k and ell must be at least 1"));
    }
    Ok(solver::f_bound(k, ell))
}

#[pyfunction]
fn make_sun(ell: usize) -> PyResult<PyGraph> {
    Ok(PyGraph { g: longcycles::suns::make_sun(ell).map_err(py_err)? })
}

/// Maximum number of edge-disjoint long cycles and one optimal packing.
#[pyfunction]
fn max_packing(graph: &PyGraph, ell: usize) -> PyResult<(usize, Vec<Vec<usize>>)> {
    let (n, cycles) = oracle_max_packing(&graph.g.full(), ell, &DetectorBudget::default()).map_err(py_err)?;
    Ok((n, cycles.iter().map(|c| c.edges().iter().map(|e| e.0).collect()).collect()))
}

/// Minimum hitting-set size and one optimal hitting set.
#[pyfunction]
fn min_hitting(graph: &PyGraph, ell: usize) -> PyResult<(usize, Vec<usize>)> {
    let (n, x) = oracle_min_hitting(&graph.g.full(), ell, &DetectorBudget::default()).map_err(py_err)?;
    Ok((n, x.iter().map(|e| e.0).collect()))
}

#[pymodule]
fn longcycles_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(solve, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(f_bound, m)?)?;
    m.add_function(wrap_pyfunction!(make_sun, m)?)?;
    m.add_function(wrap_pyfunction!(max_packing, m)?)?;
    m.add_function(wrap_pyfunction!(min_hitting, m)?)?;
    m.add("BudgetExceeded", m.py().get_type::<BudgetExceeded>())?;
    m.add("ClaimViolated", m.py().get_type::<ClaimViolated>())?;
    Ok(())
}

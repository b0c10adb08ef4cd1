//! Python bindings. Everything is 0-indexed here, matching Python habits;
//! the 1-based conventions live only in the text file formats.
//!
//! Orientations cross the boundary as `(a, b, sign)` triples with sign `+1`
//! for an edge directed A to B and `-1` for B to A.

use num_bigint::BigInt;
use pfaffian::apps::{self, EvennessVerdict};
use pfaffian::graph::{BipartiteGraph, Digraph, Orientation, SignMatrix, ZeroOneMatrix};
use pfaffian::matching;
use pfaffian::oracle::{self, Limits};
use pfaffian::orient::{self, PfaffianVerdict};
use pfaffian::Error;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use std::collections::BTreeMap;

fn to_py(e: Error) -> PyErr {
    match e {
        Error::Internal(_) => PyRuntimeError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn orientation_triples(d: &Orientation) -> Vec<(usize, usize, i8)> {
    d.iter().map(|((a, b), dir)| (a, b, dir.sign())).collect()
}

fn orientation_of_triples(triples: Vec<(usize, usize, i8)>) -> PyResult<Orientation> {
    let mut dirs = BTreeMap::new();
    for (a, b, s) in triples {
        if s != 1 && s != -1 {
            return Err(PyValueError::new_err(format!("sign must be +-1, got {s}")));
        }
        if dirs.insert((a, b), pfaffian::graph::Dir::from_sign(s)).is_some() {
            return Err(PyValueError::new_err(format!("duplicate edge ({a}, {b})")));
        }
    }
    Ok(Orientation::new(dirs))
}

/// An unweighted bipartite graph with vertex sides `0..n_a` and `0..n_b`.
#[pyclass(frozen, name = "BipartiteGraph", module = "pfaffian_py")]
struct PyBipartiteGraph {
    inner: BipartiteGraph,
}

#[pymethods]
impl PyBipartiteGraph {
    #[new]
    fn new(n_a: usize, n_b: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        Ok(PyBipartiteGraph { inner: BipartiteGraph::new(n_a, n_b, &edges).map_err(to_py)? })
    }

    #[getter]
    fn n_a(&self) -> usize {
        self.inner.n_a()
    }

    #[getter]
    fn n_b(&self) -> usize {
        self.inner.n_b()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges().to_vec()
    }

    fn has_perfect_matching(&self) -> bool {
        matching::has_perfect_matching(&self.inner)
    }

    fn is_brace(&self) -> PyResult<bool> {
        matching::is_brace(&self.inner).map_err(to_py)
    }

    /// A Pfaffian orientation as `(a, b, sign)` triples, or `None` when the
    /// graph has none.
    fn pfaffian_orientation(&self) -> PyResult<Option<Vec<(usize, usize, i8)>>> {
        match orient::pfaffian_orientation(&self.inner).map_err(to_py)? {
            PfaffianVerdict::Yes { orientation, .. } => Ok(Some(orientation_triples(&orientation))),
            PfaffianVerdict::No { .. } => Ok(None),
        }
    }

    /// Why no Pfaffian orientation exists, or `None` when one does.
    fn pfaffian_failure(&self) -> PyResult<Option<String>> {
        match orient::pfaffian_orientation(&self.inner).map_err(to_py)? {
            PfaffianVerdict::Yes { .. } => Ok(None),
            PfaffianVerdict::No { reason, .. } => Ok(Some(reason.to_string())),
        }
    }

    /// The decomposition tree behind the verdict, as a JSON string.
    fn decomposition_json(&self) -> PyResult<String> {
        let verdict = orient::pfaffian_orientation(&self.inner).map_err(to_py)?;
        let tree = match &verdict {
            PfaffianVerdict::Yes { tree, .. } | PfaffianVerdict::No { tree, .. } => tree,
        };
        Ok(tree.to_json().to_string())
    }

    /// Exact oracle check of an orientation given as `(a, b, sign)` triples.
    fn is_pfaffian_orientation(&self, orientation: Vec<(usize, usize, i8)>) -> PyResult<bool> {
        let d = orientation_of_triples(orientation)?;
        let limits = Limits::default();
        let checked = if self.inner.n_a() == self.inner.n_b() {
            oracle::is_pfaffian_orientation(&self.inner, &d, &limits)
        } else {
            oracle::is_pfaffian_by_definition(&self.inner, &d, &limits)
        };
        checked.map_err(to_py)
    }

    fn __repr__(&self) -> String {
        format!(
            "BipartiteGraph(n_a={}, n_b={}, edges={})",
            self.inner.n_a(),
            self.inner.n_b(),
            self.inner.n_edges()
        )
    }
}

/// The bipartite incidence graph of the Fano plane.
#[pyfunction]
fn heawood_graph() -> PyBipartiteGraph {
    PyBipartiteGraph { inner: pfaffian::graph::heawood_graph() }
}

/// Exact permanent of a square 0-1 matrix.
#[pyfunction]
fn permanent(rows: Vec<Vec<u8>>) -> PyResult<BigInt> {
    let m = ZeroOneMatrix::new(rows).map_err(to_py)?;
    oracle::permanent(&m, &Limits::default()).map_err(to_py)
}

/// Exact determinant of a square matrix over {-1, 0, 1}.
#[pyfunction]
fn determinant(rows: Vec<Vec<i8>>) -> PyResult<BigInt> {
    let m = SignMatrix::new(rows).map_err(to_py)?;
    Ok(oracle::determinant(&m))
}

/// A signing of the 0-1 matrix whose determinant equals its permanent, or
/// `None` when no signing exists.
#[pyfunction]
fn polya_matrix(rows: Vec<Vec<u8>>) -> PyResult<Option<Vec<Vec<i8>>>> {
    let a = ZeroOneMatrix::new(rows).map_err(to_py)?;
    match apps::polya_matrix(&a, &Limits::default()).map_err(to_py)? {
        Some(b) => Ok(Some(b.rows().to_vec())),
        None => Ok(None),
    }
}

/// Whether every real matrix with this sign pattern is nonsingular.
#[pyfunction]
fn sign_nonsingular(rows: Vec<Vec<i8>>) -> PyResult<bool> {
    let m = SignMatrix::new(rows).map_err(to_py)?;
    apps::sign_nonsingular(&m, &Limits::default()).map_err(to_py)
}

/// Evenness of the digraph on `0..n` with the given arcs. Returns
/// `(is_even, witness)`: the witness is `None` for even digraphs and
/// otherwise lists `(u, v, weight)` with every directed circuit odd.
#[pyfunction]
fn is_even_digraph(
    n: usize,
    arcs: Vec<(usize, usize)>,
) -> PyResult<(bool, Option<Vec<(usize, usize, u8)>>)> {
    let d = Digraph::new(n, &arcs).map_err(to_py)?;
    match apps::is_even_digraph(&d).map_err(to_py)? {
        EvennessVerdict::Even => Ok((true, None)),
        EvennessVerdict::NotEven(w) => {
            Ok((false, Some(w.iter().map(|((u, v), x)| (u, v, x)).collect())))
        }
    }
}

#[pymodule]
fn pfaffian_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyBipartiteGraph>()?;
    m.add_function(wrap_pyfunction!(heawood_graph, m)?)?;
    m.add_function(wrap_pyfunction!(permanent, m)?)?;
    m.add_function(wrap_pyfunction!(determinant, m)?)?;
    m.add_function(wrap_pyfunction!(polya_matrix, m)?)?;
    m.add_function(wrap_pyfunction!(sign_nonsingular, m)?)?;
    m.add_function(wrap_pyfunction!(is_even_digraph, m)?)?;
    Ok(())
}

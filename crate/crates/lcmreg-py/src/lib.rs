//! Python bindings for the lcmreg toolkit.
//!
//! Exposes the graph type with its structural predicates, Betti/regularity
//! computation, and the named verification checks. Reports cross the
//! boundary as JSON strings; decode them with `json.loads`.

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use lcmreg::betti;
use lcmreg::error::{Budgets, Error};
use lcmreg::field::FieldSpec;
use lcmreg::graph::{self, GraphFamily, NamedFamily};
use lcmreg::monomial::MonomialIdeal;
use lcmreg::report::compute_report;
use lcmreg::verify::{run_check, CheckConfig};

fn to_py_err(e: Error) -> PyErr {
    if e.is_budget() {
        PyRuntimeError::new_err(e.to_string())
    } else {
        PyValueError::new_err(e.to_string())
    }
}

fn parse_fields(names: &[String]) -> PyResult<Vec<FieldSpec>> {
    names
        .iter()
        .map(|s| FieldSpec::parse(s).map_err(to_py_err))
        .collect()
}

fn budgets(element_budget: usize, face_budget: u64) -> Budgets {
    Budgets {
        max_lattice_elements: element_budget,
        max_faces: face_budget,
    }
}

/// A simple undirected graph on up to 16 labeled vertices.
#[pyclass(name = "Graph", frozen, eq, from_py_object)]
#[derive(Clone, PartialEq)]
struct PyGraph {
    inner: graph::Graph,
}

#[pymethods]
impl PyGraph {
    /// Graph(n, edges): edges is a list of (u, v) pairs.
    #[new]
    #[pyo3(signature = (n, edges=Vec::new()))]
    fn new(n: usize, edges: Vec<(u8, u8)>) -> PyResult<Self> {
        Ok(PyGraph {
            inner: graph::Graph::from_edges(n, &edges).map_err(to_py_err)?,
        })
    }

    /// Standard representative of a family: "cycle", "path", "complete" or
    /// "cycle-complement".
    #[staticmethod]
    fn named(family: &str, n: usize) -> PyResult<Self> {
        let fam = NamedFamily::parse(family).map_err(to_py_err)?;
        Ok(PyGraph {
            inner: fam.build(n).map_err(to_py_err)?,
        })
    }

    /// Parses the graph text format (`n <count>` then `u v` lines).
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        Ok(PyGraph {
            inner: graph::parse_graph(text).map_err(to_py_err)?,
        })
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.vertex_count()
    }

    fn edges(&self) -> Vec<(u8, u8)> {
        self.inner.edges()
    }

    fn complement(&self) -> PyGraph {
        PyGraph {
            inner: self.inner.complement(),
        }
    }

    fn induced_subgraph(&self, vertices: Vec<usize>) -> PyResult<PyGraph> {
        let mut mask = 0u16;
        for v in vertices {
            if v >= self.inner.vertex_count() {
                return Err(PyValueError::new_err(format!("vertex {v} out of range")));
            }
            mask |= 1 << v;
        }
        Ok(PyGraph {
            inner: self.inner.induced_subgraph(mask).map_err(to_py_err)?,
        })
    }

    fn is_chordal(&self) -> bool {
        self.inner.is_chordal()
    }

    fn has_induced_c4(&self) -> bool {
        self.inner.has_induced_c4()
    }

    fn is_claw_free(&self) -> bool {
        self.inner.is_claw_free()
    }

    fn in_cf_family(&self) -> bool {
        self.inner.in_cf_family()
    }

    fn is_connected(&self) -> bool {
        self.inner.is_connected()
    }

    /// A Dirac order of the vertices; raises ValueError when the complement
    /// is not chordal.
    fn dirac_order(&self) -> PyResult<Vec<u8>> {
        Ok(self.inner.dirac_order().map_err(to_py_err)?.order)
    }

    /// Renders the graph text format.
    fn render(&self) -> String {
        graph::render_graph(&self.inner)
    }

    fn __repr__(&self) -> String {
        format!(
            "Graph(n={}, edges={:?})",
            self.inner.vertex_count(),
            self.inner.edges()
        )
    }
}

/// Castelnuovo-Mumford regularity of I(G)^power over one field.
#[pyfunction]
#[pyo3(signature = (graph, power=1, field="f2", element_budget=2_000_000, face_budget=50_000_000))]
fn regularity(
    graph: &PyGraph,
    power: u32,
    field: &str,
    element_budget: usize,
    face_budget: u64,
) -> PyResult<u32> {
    let field = FieldSpec::parse(field).map_err(to_py_err)?;
    let ideal = MonomialIdeal::edge_ideal(&graph.inner)
        .and_then(|i| i.power(power))
        .map_err(to_py_err)?;
    betti::regularity(&ideal, field, &budgets(element_budget, face_budget)).map_err(to_py_err)
}

/// Multigraded Betti table of I(G)^power as (i, multidegree, rank) triples,
/// sorted by (total degree, i, multidegree).
#[pyfunction]
#[pyo3(signature = (graph, power=1, field="f2", element_budget=2_000_000, face_budget=50_000_000))]
fn betti_table(
    graph: &PyGraph,
    power: u32,
    field: &str,
    element_budget: usize,
    face_budget: u64,
) -> PyResult<Vec<(u32, Vec<u32>, u64)>> {
    let field = FieldSpec::parse(field).map_err(to_py_err)?;
    let ideal = MonomialIdeal::edge_ideal(&graph.inner)
        .and_then(|i| i.power(power))
        .map_err(to_py_err)?;
    let table =
        betti::betti_gpw(&ideal, field, &budgets(element_budget, face_budget)).map_err(to_py_err)?;
    Ok(table
        .sorted_entries()
        .into_iter()
        .map(|e| {
            let exps = e.multidegree.iter().map(|&x| x as u32).collect();
            (e.i, exps, e.rank)
        })
        .collect())
}

/// Full compute report (lattice shape, Betti tables, regularity) as JSON.
#[pyfunction]
#[pyo3(signature = (graph, power=1, fields=vec!["f2".into(), "q".into()], element_budget=2_000_000, face_budget=50_000_000))]
fn compute_json(
    graph: &PyGraph,
    power: u32,
    fields: Vec<String>,
    element_budget: usize,
    face_budget: u64,
) -> PyResult<String> {
    let fields = parse_fields(&fields)?;
    let report = compute_report(
        &graph.inner,
        power,
        &fields,
        &budgets(element_budget, face_budget),
    )
    .map_err(to_py_err)?;
    Ok(serde_json::to_string(&report).expect("report serialization cannot fail"))
}

/// Runs a named verification check and returns its report as JSON.
///
/// Check ids: purity, chordal, froberg, cycle-sphere, lcm-hochster, cf-reg,
/// square-power, genphan, li-bound, cf-lemmas.
#[pyfunction]
#[pyo3(signature = (check, n=vec![5], samples=None, seed=0, k=1, i_max=4, fields=None,
                    extras=Vec::new(), element_budget=2_000_000, face_budget=50_000_000))]
#[allow(clippy::too_many_arguments)]
fn run_check_json(
    check: &str,
    n: Vec<u32>,
    samples: Option<u32>,
    seed: u64,
    k: u32,
    i_max: u32,
    fields: Option<Vec<String>>,
    extras: Vec<String>,
    element_budget: usize,
    face_budget: u64,
) -> PyResult<String> {
    let fields = fields.map(|f| parse_fields(&f)).transpose()?;
    let extras = extras
        .iter()
        .map(|s| -> PyResult<(NamedFamily, u32)> {
            let (fam, size) = s
                .split_once(':')
                .ok_or_else(|| PyValueError::new_err(format!("expected FAMILY:N, got {s:?}")))?;
            let family = NamedFamily::parse(fam).map_err(to_py_err)?;
            let size: u32 = size
                .parse()
                .map_err(|_| PyValueError::new_err(format!("bad size {size:?}")))?;
            Ok((family, size))
        })
        .collect::<PyResult<Vec<_>>>()?;
    let cfg = CheckConfig {
        n_list: n,
        samples,
        seed,
        k,
        i_max,
        fields,
        extras,
        budgets: budgets(element_budget, face_budget),
    };
    let report = run_check(check, &cfg).map_err(to_py_err)?;
    Ok(serde_json::to_string(&report).expect("report serialization cannot fail"))
}

/// Members of a family on n vertices: "cf", "chordal-complement",
/// "cycle-complement" or "all".
#[pyfunction]
fn enumerate_family(family: &str, n: usize) -> PyResult<Vec<PyGraph>> {
    let fam = GraphFamily::parse(family).map_err(to_py_err)?;
    Ok(fam
        .members(n)
        .map_err(to_py_err)?
        .into_iter()
        .map(|inner| PyGraph { inner })
        .collect())
}

#[pymodule]
fn lcmreg_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(regularity, m)?)?;
    m.add_function(wrap_pyfunction!(betti_table, m)?)?;
    m.add_function(wrap_pyfunction!(compute_json, m)?)?;
    m.add_function(wrap_pyfunction!(run_check_json, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_family, m)?)?;
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    Ok(())
}

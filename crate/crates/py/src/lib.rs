use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use vmtk_core::delta::{self, count_delta, enumerate_delta_members};
use vmtk_core::io::{from_graph6, read_edge_list, to_graph6, write_edge_list};
use vmtk_core::rank::{cutrank, linear_rankwidth_exact, lrw_at_most};
use vmtk_core::split::{self, BagKind};
use vmtk_core::{bits, isomorphic};

fn value_err(e: vmtk_core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// Simple undirected graph with string labels.
#[pyclass(name = "Graph", module = "vmtk", frozen)]
struct PyGraph {
    inner: vmtk_core::Graph,
}

impl PyGraph {
    fn wrap(inner: vmtk_core::Graph) -> Self {
        PyGraph { inner }
    }

    fn check(&self, v: usize) -> PyResult<()> {
        self.inner.check_vertex(v).map_err(value_err)
    }
}

#[pymethods]
impl PyGraph {
    #[new]
    #[pyo3(signature = (n, edges = Vec::new()))]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        let mut g = vmtk_core::Graph::empty(n);
        for (u, v) in edges {
            g.check_vertex(u).map_err(value_err)?;
            g.check_vertex(v).map_err(value_err)?;
            if u == v {
                return Err(PyValueError::new_err(format!("self-loop at {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(Self::wrap(g))
    }

    #[staticmethod]
    fn from_edge_list(text: &str) -> PyResult<Self> {
        read_edge_list(text).map(Self::wrap).map_err(value_err)
    }

    #[staticmethod]
    fn from_graph6(line: &str) -> PyResult<Self> {
        from_graph6(line.trim()).map(Self::wrap).map_err(value_err)
    }

    #[staticmethod]
    fn net() -> Self {
        Self::wrap(vmtk_core::Graph::net())
    }

    #[staticmethod]
    fn cycle(n: usize) -> Self {
        Self::wrap(vmtk_core::Graph::cycle(n))
    }

    #[staticmethod]
    fn path(n: usize) -> Self {
        Self::wrap(vmtk_core::Graph::path(n))
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    fn labels(&self) -> Vec<String> {
        self.inner.labels().to_vec()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges().collect()
    }

    fn has_edge(&self, u: usize, v: usize) -> PyResult<bool> {
        self.check(u)?;
        self.check(v)?;
        Ok(self.inner.has_edge(u, v))
    }

    fn to_edge_list(&self) -> String {
        write_edge_list(&self.inner)
    }

    fn to_graph6(&self) -> String {
        to_graph6(&self.inner)
    }

    fn local_complement(&self, v: usize) -> PyResult<Self> {
        vmtk_core::local_complement(&self.inner, v).map(Self::wrap).map_err(value_err)
    }

    fn pivot(&self, u: usize, v: usize) -> PyResult<Self> {
        vmtk_core::pivot(&self.inner, u, v).map(Self::wrap).map_err(value_err)
    }

    fn delete(&self, v: usize) -> PyResult<Self> {
        vmtk_core::delete(&self.inner, v).map(Self::wrap).map_err(value_err)
    }

    fn isomorphic(&self, other: &PyGraph) -> bool {
        isomorphic(&self.inner, &other.inner)
    }

    fn cutrank(&self, side: Vec<usize>) -> PyResult<usize> {
        let mut s = 0;
        for v in side {
            self.check(v)?;
            s |= bits::bit(v);
        }
        cutrank(&self.inner, s).map_err(value_err)
    }

    /// Exact linear rank-width and an optimal layout, as vertex indices.
    fn lrw(&self) -> PyResult<(usize, Vec<usize>)> {
        let (w, layout) = linear_rankwidth_exact(&self.inner).map_err(value_err)?;
        Ok((w, layout.order))
    }

    /// Layout of width at most `t`, or None.
    #[pyo3(signature = (t, budget = 50_000_000))]
    fn lrw_at_most(&self, t: usize, budget: u64) -> PyResult<Option<Vec<usize>>> {
        Ok(lrw_at_most(&self.inner, t, budget).map_err(value_err)?.map(|l| l.order))
    }

    /// Level of the family containing this graph, or None.
    fn delta_level(&self) -> Option<usize> {
        delta::recognize_delta(&self.inner).map(|c| c.k)
    }

    fn is_distance_hereditary(&self) -> PyResult<bool> {
        split::is_distance_hereditary(&self.inner).map_err(value_err)
    }

    /// Canonical split decomposition as (text, bags), each bag a (kind, labels) pair.
    fn split_decomposition(&self) -> PyResult<(String, Vec<(String, Vec<String>)>)> {
        let d = split::canonical_decomposition(&self.inner).map_err(value_err)?;
        let bags = d
            .classify_bags()
            .map_err(value_err)?
            .into_iter()
            .map(|(bag, kind)| {
                let kind = match kind {
                    BagKind::Prime => "prime".to_string(),
                    BagKind::Complete => "complete".to_string(),
                    BagKind::Star(c) => format!("star:{}", d.graph.label(c)),
                };
                (kind, bits::iter(bag).map(|v| d.graph.label(v).to_string()).collect())
            })
            .collect();
        Ok((d.to_text(), bags))
    }

    fn __len__(&self) -> usize {
        self.inner.n()
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, m={})", self.inner.n(), self.inner.edge_count())
    }
}

/// All members of the family at level `k` (k <= 2), one per isomorphism class.
#[pyfunction]
fn delta_members(k: usize) -> PyResult<Vec<PyGraph>> {
    Ok(enumerate_delta_members(k)
        .map_err(value_err)?
        .into_iter()
        .map(|m| PyGraph::wrap(m.graph))
        .collect())
}

/// Class counts at level `k` as a dict.
#[pyfunction]
fn delta_count(py: Python<'_>, k: usize) -> PyResult<Py<pyo3::types::PyDict>> {
    let t = count_delta(k).map_err(value_err)?;
    let d = pyo3::types::PyDict::new(py);
    d.set_item("k", t.k)?;
    d.set_item("p_prev", t.p_prev)?;
    d.set_item("p", t.p)?;
    d.set_item("a", t.a)?;
    d.set_item("b", t.b)?;
    d.set_item("c", t.c)?;
    d.set_item("total", t.total())?;
    Ok(d.unbind())
}

#[pymodule]
fn vmtk(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(delta_members, m)?)?;
    m.add_function(wrap_pyfunction!(delta_count, m)?)?;
    Ok(())
}

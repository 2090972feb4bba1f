//! Simple undirected graphs on labeled vertices.
//!
//! Vertices are dense indices `0..n`. Every vertex carries an external
//! label that survives local complementation and pivoting; deleting a
//! vertex compacts the indices but keeps the remaining labels.

use std::fmt;

use crate::bits::{self, VSet};
use crate::error::{Error, Result};

/// Largest vertex count a [`Graph`] can hold.
pub const MAX_VERTICES: usize = 128;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    labels: Vec<String>,
    adj: Vec<VSet>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self
            .edges()
            .map(|(u, v)| format!("{}-{}", self.labels[u], self.labels[v]))
            .collect();
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &edges)
            .finish()
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices labeled `"0"`, `"1"`, ...
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "at most {MAX_VERTICES} vertices");
        Graph {
            labels: (0..n).map(|i| i.to_string()).collect(),
            adj: vec![0; n],
        }
    }

    pub fn with_labels<S: Into<String>>(labels: impl IntoIterator<Item = S>) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() > MAX_VERTICES {
            return Err(Error::TooLarge {
                n: labels.len(),
                limit: MAX_VERTICES,
            });
        }
        let mut seen = std::collections::HashSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::Precondition(format!("duplicate label {l:?}")));
            }
        }
        let n = labels.len();
        Ok(Graph {
            labels,
            adj: vec![0; n],
        })
    }

    /// Builds a graph from an edge list; panics on loops or out-of-range ends.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn vertex_set(&self) -> VSet {
        bits::full(self.n())
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn set_label(&mut self, v: usize, label: impl Into<String>) {
        self.labels[v] = label.into();
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::UnknownVertex(v))
        }
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        bits::contains(self.adj[u], v)
    }

    pub fn neighbors(&self, v: usize) -> VSet {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        bits::len(self.adj[v])
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|&a| bits::len(a)).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| {
            bits::iter(self.adj[u] & !bits::full(u + 1)).map(move |v| (u, v))
        })
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "loops are not allowed");
        self.adj[u] |= bits::bit(v);
        self.adj[v] |= bits::bit(u);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u] &= !bits::bit(v);
        self.adj[v] &= !bits::bit(u);
    }

    pub fn toggle_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "loops are not allowed");
        self.adj[u] ^= bits::bit(v);
        self.adj[v] ^= bits::bit(u);
    }

    /// Appends a vertex adjacent to `nbrs` and returns its index.
    pub fn add_vertex(&mut self, label: impl Into<String>, nbrs: VSet) -> usize {
        assert!(self.n() < MAX_VERTICES, "at most {MAX_VERTICES} vertices");
        let v = self.n();
        assert!(nbrs & !bits::full(v) == 0, "neighbor out of range");
        self.labels.push(label.into());
        self.adj.push(nbrs);
        for u in bits::iter(nbrs) {
            self.adj[u] |= bits::bit(v);
        }
        v
    }

    /// A label not used by any vertex, derived from `base`.
    pub fn fresh_label(&self, base: &str) -> String {
        if self.index_of(base).is_none() {
            return base.to_string();
        }
        (1..)
            .map(|i| format!("{base}'{i}"))
            .find(|l| self.index_of(l).is_none())
            .unwrap()
    }

    /// Induced subgraph on `keep`; surviving vertices keep their relative
    /// order and labels.
    pub fn induced(&self, keep: VSet) -> Graph {
        let old: Vec<usize> = bits::iter(keep & self.vertex_set()).collect();
        let mut pos = vec![usize::MAX; self.n()];
        for (i, &v) in old.iter().enumerate() {
            pos[v] = i;
        }
        let adj = old
            .iter()
            .map(|&v| bits::iter(self.adj[v] & keep).fold(0, |acc, u| acc | bits::bit(pos[u])))
            .collect();
        Graph {
            labels: old.iter().map(|&v| self.labels[v].clone()).collect(),
            adj,
        }
    }

    pub fn without(&self, v: usize) -> Graph {
        self.induced(self.vertex_set() & !bits::bit(v))
    }

    /// The graph with vertex `i` of the result being vertex `order[i]` here.
    pub fn permuted(&self, order: &[usize]) -> Graph {
        let mut pos = vec![0; self.n()];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let adj = order
            .iter()
            .map(|&v| bits::iter(self.adj[v]).fold(0, |acc, u| acc | bits::bit(pos[u])))
            .collect();
        Graph {
            labels: order.iter().map(|&v| self.labels[v].clone()).collect(),
            adj,
        }
    }

    /// Disjoint union; labels of `other` are prefixed if they collide.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut g = self.clone();
        let shift = self.n();
        for v in 0..other.n() {
            let label = g.fresh_label(other.label(v));
            let nbrs = (other.adj[v] & bits::full(v)) << shift;
            g.add_vertex(label, nbrs);
        }
        g
    }

    pub fn raw_adjacency(&self) -> &[VSet] {
        &self.adj
    }

    pub(crate) fn adj_mut(&mut self) -> &mut [VSet] {
        &mut self.adj
    }

    pub(crate) fn swap_labels(&mut self, u: usize, v: usize) {
        self.labels.swap(u, v);
    }

    // ---- connectivity -------------------------------------------------

    /// Vertices reachable from `start` inside `within`.
    pub fn reach(&self, start: usize, within: VSet) -> VSet {
        let mut seen = bits::bit(start);
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in bits::iter(frontier) {
                next |= self.adj[v] & within;
            }
            frontier = next & !seen;
            seen |= frontier;
        }
        seen
    }

    pub fn components(&self) -> Vec<VSet> {
        let mut left = self.vertex_set();
        let mut out = Vec::new();
        while left != 0 {
            let v = left.trailing_zeros() as usize;
            let c = self.reach(v, left);
            out.push(c);
            left &= !c;
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n() == 0 || self.reach(0, self.vertex_set()) == self.vertex_set()
    }

    pub fn is_clique(&self, s: VSet) -> bool {
        bits::iter(s).all(|v| s & !bits::bit(v) & !self.adj[v] == 0)
    }

    pub fn is_tree(&self) -> bool {
        self.n() > 0 && self.is_connected() && self.edge_count() == self.n() - 1
    }

    /// Breadth-first distances from `s`; `None` for unreachable vertices.
    pub fn distances_from(&self, s: usize, within: VSet) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        dist[s] = Some(0);
        let mut frontier = bits::bit(s);
        let mut seen = frontier;
        let mut d = 0;
        while frontier != 0 {
            d += 1;
            let mut next = 0;
            for v in bits::iter(frontier) {
                next |= self.adj[v] & within;
            }
            frontier = next & !seen;
            seen |= frontier;
            for v in bits::iter(frontier) {
                dist[v] = Some(d);
            }
        }
        dist
    }

    // ---- named graphs -------------------------------------------------

    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges)
    }

    pub fn cycle(n: usize) -> Graph {
        let mut g = Graph::path(n);
        if n >= 3 {
            g.add_edge(0, n - 1);
        }
        g
    }

    /// `K_{1,leaves}` with center 0.
    pub fn star(leaves: usize) -> Graph {
        let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        Graph::from_edges(leaves + 1, &edges)
    }

    /// Triangle `0,1,2` with pendant vertices `3,4,5` attached to `0,1,2`.
    pub fn net() -> Graph {
        Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)])
    }

    /// `K_4` minus the edge `2-3`.
    pub fn diamond() -> Graph {
        Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
    }
}

/// A graph together with a distinguished root vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RootedGraph {
    pub graph: Graph,
    pub root: usize,
}

impl RootedGraph {
    pub fn new(graph: Graph, root: usize) -> Result<Self> {
        graph.check_vertex(root)?;
        Ok(RootedGraph { graph, root })
    }
}

// ---- structural predicates ----------------------------------------------

/// Vertex sets of the blocks (maximal 2-connected pieces, bridges and
/// isolated vertices) of `g`.
pub fn blocks(g: &Graph) -> Vec<VSet> {
    struct State<'a> {
        g: &'a Graph,
        disc: Vec<usize>,
        low: Vec<usize>,
        time: usize,
        stack: Vec<(usize, usize)>,
        out: Vec<VSet>,
    }

    fn dfs(st: &mut State<'_>, u: usize, parent: Option<usize>) {
        st.time += 1;
        st.disc[u] = st.time;
        st.low[u] = st.time;
        for v in bits::iter(st.g.neighbors(u)) {
            if st.disc[v] == 0 {
                st.stack.push((u, v));
                dfs(st, v, Some(u));
                st.low[u] = st.low[u].min(st.low[v]);
                if st.low[v] >= st.disc[u] {
                    let mut block = 0;
                    while let Some((a, b)) = st.stack.pop() {
                        block |= bits::bit(a) | bits::bit(b);
                        if (a, b) == (u, v) {
                            break;
                        }
                    }
                    st.out.push(block);
                }
            } else if Some(v) != parent && st.disc[v] < st.disc[u] {
                st.stack.push((u, v));
                st.low[u] = st.low[u].min(st.disc[v]);
            }
        }
    }

    let n = g.n();
    let mut st = State {
        g,
        disc: vec![0; n],
        low: vec![0; n],
        time: 0,
        stack: Vec::new(),
        out: Vec::new(),
    };
    for v in 0..n {
        if st.disc[v] == 0 {
            if g.degree(v) == 0 {
                st.disc[v] = usize::MAX;
                st.out.push(bits::bit(v));
            } else {
                dfs(&mut st, v, None);
            }
        }
    }
    st.out
}

pub fn is_block_graph(g: &Graph) -> bool {
    blocks(g).into_iter().all(|b| g.is_clique(b))
}

/// Vertices whose neighborhood is a clique (degree 0 and 1 included).
pub fn simplicial_vertices(g: &Graph) -> VSet {
    (0..g.n())
        .filter(|&v| g.is_clique(g.neighbors(v)))
        .fold(0, |acc, v| acc | bits::bit(v))
}

pub fn has_simplicial_of_degree_at_least_two(g: &Graph) -> bool {
    bits::iter(simplicial_vertices(g)).any(|v| g.degree(v) >= 2)
}

/// `N(v) - {w} == N(w) - {v}`.
pub fn is_twin(g: &Graph, v: usize, w: usize) -> bool {
    let mask = !(bits::bit(v) | bits::bit(w));
    v != w && g.neighbors(v) & mask == g.neighbors(w) & mask
}

/// `Some(center)` if `g` is `K_{1,n}` with `n >= 2`.
pub fn star_center(g: &Graph) -> Option<usize> {
    let n = g.n();
    if n < 3 || g.edge_count() != n - 1 {
        return None;
    }
    (0..n).find(|&c| g.degree(c) == n - 1)
}

pub fn is_complete(g: &Graph) -> bool {
    g.is_clique(g.vertex_set())
}

//! Split decompositions.
//!
//! A decomposition is a graph together with a matching of marked edges
//! between marker vertices. Deleting the marked edges leaves the bags.
//! Original vertices keep the labels they had in the decomposed graph.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rand::seq::SliceRandom;

use crate::bits::{self, VSet};
use crate::corpus;
use crate::delta::DeltaCertificate;
use crate::error::{parse_err, Error, Result};
use crate::graph::{self, Graph};
use crate::iso::{find_isomorphism, Structure};
use crate::report::Report;

/// Largest bag on which splits are searched for (the search is exhaustive).
pub const SPLIT_SEARCH_LIMIT: usize = 24;

/// A bipartition `(A, B)` with `|A|, |B| >= 2` and `cutrk(A) <= 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Split {
    pub a: VSet,
    pub b: VSet,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BagKind {
    Prime,
    Star(usize),
    Complete,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MarkedGraph {
    /// All edges, marked ones included.
    pub graph: Graph,
    /// Partner across the marked edge; `None` exactly for original vertices.
    pub mate: Vec<Option<usize>>,
}

fn rank_at_most_one(rows: impl Iterator<Item = VSet>) -> bool {
    let mut seen = 0;
    for r in rows.filter(|&r| r != 0) {
        if seen == 0 {
            seen = r;
        } else if r != seen {
            return false;
        }
    }
    true
}

/// Lexicographically least split side (as a sorted list of positions in
/// `order`) containing `order[0]`, by preorder search.
fn least_split(g: &Graph, order: &[usize]) -> Option<Split> {
    let n = order.len();
    if n < 4 {
        return None;
    }
    let all = g.vertex_set();
    let check = |a: VSet| {
        let b = all & !a;
        bits::len(a) >= 2 && bits::len(b) >= 2 && rank_at_most_one(bits::iter(a).map(|v| g.neighbors(v) & b))
    };
    fn walk(order: &[usize], last: usize, a: VSet, check: &dyn Fn(VSet) -> bool) -> Option<VSet> {
        if check(a) {
            return Some(a);
        }
        if bits::len(a) + 2 > order.len() {
            return None;
        }
        for p in last + 1..order.len() {
            if let Some(s) = walk(order, p, a | bits::bit(order[p]), check) {
                return Some(s);
            }
        }
        None
    }
    walk(order, 0, bits::bit(order[0]), &check).map(|a| Split { a, b: all & !a })
}

fn check_split_input(g: &Graph) -> Result<()> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.n() > SPLIT_SEARCH_LIMIT {
        return Err(Error::TooLarge {
            n: g.n(),
            limit: SPLIT_SEARCH_LIMIT,
        });
    }
    Ok(())
}

/// The split whose side `A` containing vertex 0 is lexicographically least,
/// or `None` when `g` is prime.
pub fn find_split(g: &Graph) -> Result<Option<Split>> {
    check_split_input(g)?;
    let order: Vec<usize> = (0..g.n()).collect();
    Ok(least_split(g, &order))
}

/// As [`find_split`], but over a seeded random vertex order.
pub fn find_split_seeded(g: &Graph, seed: u64) -> Result<Option<Split>> {
    check_split_input(g)?;
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.shuffle(&mut corpus::rng(seed));
    Ok(least_split(g, &order))
}

pub fn is_split(g: &Graph, s: &Split) -> bool {
    s.a & s.b == 0
        && s.a | s.b == g.vertex_set()
        && bits::len(s.a) >= 2
        && bits::len(s.b) >= 2
        && rank_at_most_one(bits::iter(s.a).map(|v| g.neighbors(v) & s.b))
}

impl MarkedGraph {
    /// The trivial decomposition: one bag, no marks.
    pub fn from_graph(g: &Graph) -> MarkedGraph {
        MarkedGraph {
            graph: g.clone(),
            mate: vec![None; g.n()],
        }
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn is_marker(&self, v: usize) -> bool {
        self.mate[v].is_some()
    }

    pub fn originals(&self) -> VSet {
        bits::from_iter((0..self.n()).filter(|&v| !self.is_marker(v)))
    }

    pub fn markers(&self) -> VSet {
        self.graph.vertex_set() & !self.originals()
    }

    pub fn marked_edges(&self) -> Vec<(usize, usize)> {
        (0..self.n())
            .filter_map(|v| self.mate[v].filter(|&w| v < w).map(|w| (v, w)))
            .collect()
    }

    fn mate_bit(&self, v: usize) -> VSet {
        self.mate[v].map_or(0, bits::bit)
    }

    pub fn unmarked_neighbors(&self, v: usize) -> VSet {
        self.graph.neighbors(v) & !self.mate_bit(v)
    }

    /// `D` with the marked edges removed.
    pub fn unmarked_graph(&self) -> Graph {
        let mut h = self.graph.clone();
        for (u, v) in self.marked_edges() {
            h.remove_edge(u, v);
        }
        h
    }

    /// Bags in order of their smallest vertex.
    pub fn bags(&self) -> Vec<VSet> {
        self.unmarked_graph().components()
    }

    pub fn bag_of(&self, v: usize) -> VSet {
        self.unmarked_graph().reach(v, self.graph.vertex_set())
    }

    pub fn bag_graph(&self, bag: VSet) -> Graph {
        self.unmarked_graph().induced(bag)
    }

    fn check_original(&self, v: usize) -> Result<()> {
        self.graph.check_vertex(v)?;
        if self.is_marker(v) {
            return Err(Error::MarkerVertex(v));
        }
        Ok(())
    }

    /// Structural invariants: marks form a matching of edges between marker
    /// vertices, and bags joined by marked edges form a tree.
    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::Precondition(format!("invalid decomposition: {m}")));
        if self.mate.len() != self.n() {
            return bad("mate table has wrong length".into());
        }
        for v in 0..self.n() {
            if let Some(w) = self.mate[v] {
                if w >= self.n() || self.mate[w] != Some(v) || w == v {
                    return bad(format!("mate of {v} is not symmetric"));
                }
                if !self.graph.has_edge(v, w) {
                    return bad(format!("marked pair {v}-{w} is not an edge"));
                }
            }
        }
        let bags = self.bags();
        if self.n() > 0 && bags.len() != self.marked_edges().len() + 1 {
            return bad("bags do not form a tree".into());
        }
        if !self.graph.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(())
    }

    fn fresh_marker_label(&self) -> String {
        (1..)
            .map(|i| format!("m{i}"))
            .find(|l| self.graph.index_of(l).is_none())
            .unwrap()
    }

    fn push_vertex(&mut self, label: String, nbrs: VSet) -> usize {
        let v = self.graph.add_vertex(label, nbrs);
        self.mate.push(None);
        v
    }

    fn link(&mut self, a: usize, b: usize) {
        self.graph.add_edge(a, b);
        self.mate[a] = Some(b);
        self.mate[b] = Some(a);
    }

    /// Replaces the bag containing the split `s` by two bags joined by a
    /// new marked edge `ab`. Returns `(a, b)`.
    pub fn split_bag(&mut self, s: &Split) -> Result<(usize, usize)> {
        let bag = self.bag_of(bits::iter(s.a).next().ok_or_else(|| Error::InvalidSplit("empty side".into()))?);
        let h = self.unmarked_graph();
        let valid = s.a & s.b == 0
            && s.a | s.b == bag
            && bits::len(s.a) >= 2
            && bits::len(s.b) >= 2
            && rank_at_most_one(bits::iter(s.a).map(|v| h.neighbors(v) & s.b));
        if !valid {
            return Err(Error::InvalidSplit("not a split of a bag".into()));
        }
        let fa = bits::iter(s.a).filter(|&v| h.neighbors(v) & s.b != 0).fold(0, |x, v| x | bits::bit(v));
        let fb = bits::iter(s.b).filter(|&v| h.neighbors(v) & s.a != 0).fold(0, |x, v| x | bits::bit(v));
        for u in bits::iter(fa) {
            for v in bits::iter(fb) {
                self.graph.remove_edge(u, v);
            }
        }
        let la = self.fresh_marker_label();
        let a = self.push_vertex(la, fa);
        let lb = self.fresh_marker_label();
        let b = self.push_vertex(lb, fb);
        self.link(a, b);
        Ok((a, b))
    }

    /// Deletes the vertices in `s`; indices compact as in [`Graph::induced`].
    fn remove(&mut self, s: VSet) {
        let keep = self.graph.vertex_set() & !s;
        let old: Vec<usize> = bits::iter(keep).collect();
        let mut pos = vec![usize::MAX; self.n()];
        for (i, &v) in old.iter().enumerate() {
            pos[v] = i;
        }
        self.mate = old
            .iter()
            .map(|&v| self.mate[v].map(|w| pos[w]))
            .collect();
        self.graph = self.graph.induced(keep);
    }

    /// Recomposes the marked edge `ab`: pivot on `ab`, then delete `a`, `b`.
    pub fn recompose(&self, a: usize, b: usize) -> Result<MarkedGraph> {
        self.graph.check_vertex(a)?;
        self.graph.check_vertex(b)?;
        if self.mate[a] != Some(b) {
            return Err(Error::NotMarked(a, b));
        }
        let mut d = self.clone();
        let na = d.unmarked_neighbors(a);
        let nb = d.unmarked_neighbors(b);
        for x in bits::iter(na) {
            for y in bits::iter(nb) {
                d.graph.toggle_edge(x, y);
            }
        }
        d.remove(bits::bit(a) | bits::bit(b));
        Ok(d)
    }

    /// Recomposes every marked edge; the result is the decomposed graph.
    pub fn recompose_all(&self) -> Graph {
        let mut d = self.clone();
        while let Some(&(a, b)) = d.marked_edges().first() {
            d = d.recompose(a, b).expect("listed edge is marked");
        }
        d.graph
    }

    /// Vertices reached from `v` by alternating paths of even length
    /// (unmarked edge, then marked edge), `v` included.
    pub fn representatives_of(&self, v: usize) -> Result<VSet> {
        self.check_original(v)?;
        let mut reps = bits::bit(v);
        let mut frontier = reps;
        while frontier != 0 {
            let mut next = 0;
            for r in bits::iter(frontier) {
                for u in bits::iter(self.unmarked_neighbors(r)) {
                    next |= self.mate_bit(u);
                }
            }
            frontier = next & !reps;
            reps |= frontier;
        }
        Ok(reps)
    }

    /// Whether an alternating path joins the original vertices `x` and `y`.
    pub fn linked(&self, x: usize, y: usize) -> Result<bool> {
        self.check_original(y)?;
        let reps = self.representatives_of(x)?;
        Ok(bits::iter(reps).any(|r| bits::contains(self.unmarked_neighbors(r), y)))
    }

    /// `D*v`: every bag holding a representative `w` of `v` is locally
    /// complemented at `w`.
    pub fn local_complement(&self, v: usize) -> Result<MarkedGraph> {
        let reps = self.representatives_of(v)?;
        let mut d = self.clone();
        for w in bits::iter(reps) {
            let nbrs = bits::to_vec(self.unmarked_neighbors(w));
            for (i, &x) in nbrs.iter().enumerate() {
                for &y in &nbrs[i + 1..] {
                    d.graph.toggle_edge(x, y);
                }
            }
        }
        Ok(d)
    }

    fn marked_adjacency(&self) -> Vec<VSet> {
        (0..self.n()).map(|v| self.mate_bit(v)).collect()
    }

    fn marker_colors(&self) -> Vec<u32> {
        (0..self.n()).map(|v| self.is_marker(v) as u32).collect()
    }

    /// Isomorphism respecting marked edges and the marker/original split.
    pub fn isomorphic_to(&self, other: &MarkedGraph) -> bool {
        if self.n() != other.n() || self.graph.edge_count() != other.graph.edge_count() {
            return false;
        }
        let (ea, eb) = (self.marked_adjacency(), other.marked_adjacency());
        let a = Structure {
            adj: self.graph.raw_adjacency(),
            extra: &ea,
            colors: self.marker_colors(),
        };
        let b = Structure {
            adj: other.graph.raw_adjacency(),
            extra: &eb,
            colors: other.marker_colors(),
        };
        find_isomorphism(&a, &b).is_some()
    }

    /// As [`MarkedGraph::isomorphic_to`], additionally mapping each original
    /// vertex to the original vertex with the same label.
    pub fn isomorphic_fixing_labels(&self, other: &MarkedGraph) -> bool {
        if self.n() != other.n() {
            return false;
        }
        let mut names: BTreeMap<&str, u32> = BTreeMap::new();
        for v in bits::iter(self.originals()) {
            let next = names.len() as u32 + 2;
            names.insert(self.graph.label(v), next);
        }
        let colors = |d: &MarkedGraph| -> Option<Vec<u32>> {
            (0..d.n())
                .map(|v| {
                    if d.is_marker(v) {
                        Some(1)
                    } else {
                        names.get(d.graph.label(v)).copied()
                    }
                })
                .collect()
        };
        let (Some(ca), Some(cb)) = (colors(self), colors(other)) else {
            return false;
        };
        let (ea, eb) = (self.marked_adjacency(), other.marked_adjacency());
        let a = Structure {
            adj: self.graph.raw_adjacency(),
            extra: &ea,
            colors: ca,
        };
        let b = Structure {
            adj: other.graph.raw_adjacency(),
            extra: &eb,
            colors: cb,
        };
        find_isomorphism(&a, &b).is_some()
    }

    /// Kind of every bag; a bag that is none of prime, star or complete is
    /// an error.
    pub fn classify_bags(&self) -> Result<Vec<(VSet, BagKind)>> {
        self.bags()
            .into_iter()
            .map(|bag| {
                let h = self.bag_graph(bag);
                let kind = bag_kind(&h)?.ok_or_else(|| {
                    Error::InvalidSplit(format!(
                        "bag {:?} is neither prime, star nor complete",
                        h.labels()
                    ))
                })?;
                let kind = match kind {
                    BagKind::Star(c) => BagKind::Star(bits::iter(bag).nth(c).unwrap()),
                    k => k,
                };
                Ok((bag, kind))
            })
            .collect()
    }

    /// Text form: header `n_total n_original`, then `v <idx> <label|->`
    /// lines (`-` for markers), then `e <u> <v> <M|U>` lines with `u < v`.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.n(), bits::len(self.originals()));
        for v in 0..self.n() {
            let label = if self.is_marker(v) { "-" } else { self.graph.label(v) };
            writeln!(out, "v {v} {label}").unwrap();
        }
        for (u, v) in self.graph.edges() {
            let kind = if self.mate[u] == Some(v) { "M" } else { "U" };
            writeln!(out, "e {u} {v} {kind}").unwrap();
        }
        out
    }

    pub fn from_text(text: &str) -> Result<MarkedGraph> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (hl, header) = lines.next().ok_or_else(|| parse_err(1, "missing header"))?;
        let nums: Vec<usize> = header
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| parse_err(hl, "header must be two integers")))
            .collect::<Result<_>>()?;
        let [total, originals] = nums[..] else {
            return Err(parse_err(hl, "header must be two integers"));
        };
        if total > crate::graph::MAX_VERTICES {
            return Err(parse_err(hl, "too many vertices"));
        }
        let mut labels: Vec<Option<String>> = vec![None; total];
        let mut marker = vec![false; total];
        let mut edges = Vec::new();
        for (ln, line) in lines {
            let t: Vec<&str> = line.split_whitespace().collect();
            let idx = |s: &str| -> Result<usize> {
                let v: usize = s.parse().map_err(|_| parse_err(ln, "bad vertex index"))?;
                if v >= total {
                    return Err(parse_err(ln, "vertex index out of range"));
                }
                Ok(v)
            };
            match t[..] {
                ["v", i, label] => {
                    let i = idx(i)?;
                    if labels[i].is_some() || marker[i] {
                        return Err(parse_err(ln, "vertex declared twice"));
                    }
                    if label == "-" || label == "\u{2013}" {
                        marker[i] = true;
                    } else {
                        labels[i] = Some(label.to_string());
                    }
                }
                ["e", u, v, kind] => {
                    let (u, v) = (idx(u)?, idx(v)?);
                    if u >= v {
                        return Err(parse_err(ln, "edge endpoints must satisfy u < v"));
                    }
                    let marked = match kind {
                        "M" => true,
                        "U" => false,
                        _ => return Err(parse_err(ln, "edge kind must be M or U")),
                    };
                    edges.push((ln, u, v, marked));
                }
                _ => return Err(parse_err(ln, "expected a v or e line")),
            }
        }
        let declared = labels.iter().filter(|l| l.is_some()).count();
        if declared != originals || declared + marker.iter().filter(|&&m| m).count() != total {
            return Err(parse_err(hl, "vertex declarations do not match the header"));
        }
        let mut graph = Graph::with_labels(
            labels.iter().enumerate().map(|(i, l)| l.clone().unwrap_or_else(|| format!("#m{i}"))),
        )
        .map_err(|_| parse_err(hl, "duplicate labels"))?;
        let mut mate = vec![None; total];
        for (ln, u, v, marked) in edges {
            if graph.has_edge(u, v) {
                return Err(parse_err(ln, "duplicate edge"));
            }
            graph.add_edge(u, v);
            if marked {
                if !marker[u] || !marker[v] || mate[u].is_some() || mate[v].is_some() {
                    return Err(parse_err(ln, "marked edges must match marker vertices"));
                }
                mate[u] = Some(v);
                mate[v] = Some(u);
            }
        }
        let mut d = MarkedGraph { graph, mate };
        for v in 0..total {
            if marker[v] {
                if d.mate[v].is_none() {
                    return Err(parse_err(hl, format!("marker {v} has no marked edge")));
                }
                let l = d.fresh_marker_label();
                d.graph.set_label(v, l);
            }
        }
        Ok(d)
    }

    /// Graphviz rendering with one cluster per bag; marked edges dashed.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph D {\n  node [shape=circle];\n");
        let h = self.unmarked_graph();
        for (i, bag) in self.bags().into_iter().enumerate() {
            writeln!(out, "  subgraph cluster_{i} {{").unwrap();
            for v in bits::iter(bag) {
                let shape = if self.is_marker(v) { ", shape=point" } else { "" };
                writeln!(out, "    v{v} [label=\"{}\"{shape}];", self.graph.label(v)).unwrap();
            }
            for (u, v) in h.edges().filter(|&(u, _)| bits::contains(bag, u)) {
                writeln!(out, "    v{u} -- v{v};").unwrap();
            }
            out.push_str("  }\n");
        }
        for (u, v) in self.marked_edges() {
            writeln!(out, "  v{u} -- v{v} [style=dashed];").unwrap();
        }
        out.push_str("}\n");
        out
    }
}

/// Kind of a connected bag graph, or `None` if it has a split and is
/// neither a star nor complete.
pub fn bag_kind(h: &Graph) -> Result<Option<BagKind>> {
    if graph::is_complete(h) {
        return Ok(Some(BagKind::Complete));
    }
    if h.n() >= 3 {
        if let Some(c) = graph::star_center(h) {
            return Ok(Some(BagKind::Star(c)));
        }
    }
    Ok(match find_split(h)? {
        None => Some(BagKind::Prime),
        Some(_) => None,
    })
}

/// Two-bag decomposition of `g` along `s`.
pub fn simple_decomposition(g: &Graph, s: &Split) -> Result<MarkedGraph> {
    if !is_split(g, s) {
        return Err(Error::InvalidSplit("not a split of the graph".into()));
    }
    let mut d = MarkedGraph::from_graph(g);
    d.split_bag(s)?;
    Ok(d)
}

fn is_star_or_complete(h: &Graph) -> bool {
    graph::is_complete(h) || (h.n() >= 3 && graph::star_center(h).is_some())
}

/// The canonical split decomposition. Bags that are neither stars nor
/// complete are split until prime; then neighboring complete bags and
/// stars joined center-to-leaf are recomposed until none remain.
pub fn canonical_decomposition(g: &Graph) -> Result<MarkedGraph> {
    decompose(g, None)
}

/// As [`canonical_decomposition`], with split choices driven by `seed`.
pub fn canonical_decomposition_seeded(g: &Graph, seed: u64) -> Result<MarkedGraph> {
    decompose(g, Some(seed))
}

fn decompose(g: &Graph, seed: Option<u64>) -> Result<MarkedGraph> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut rng = corpus::rng(seed.unwrap_or(0));
    let mut d = MarkedGraph::from_graph(g);
    let mut pending = d.bags();
    while let Some(bag) = pending.pop() {
        let h = d.bag_graph(bag);
        if h.n() < 4 || is_star_or_complete(&h) {
            continue;
        }
        let found = match seed {
            None => find_split(&h)?,
            Some(_) => {
                let mut order: Vec<usize> = (0..h.n()).collect();
                order.shuffle(&mut rng);
                check_split_input(&h)?;
                least_split(&h, &order)
            }
        };
        let Some(s) = found else { continue };
        let old: Vec<usize> = bits::iter(bag).collect();
        let lift = |x: VSet| bits::iter(x).fold(0, |acc, i| acc | bits::bit(old[i]));
        let (a, b) = d.split_bag(&Split {
            a: lift(s.a),
            b: lift(s.b),
        })?;
        pending.push(d.bag_of(a));
        pending.push(d.bag_of(b));
    }
    merge_to_fixpoint(&mut d);
    Ok(d)
}

fn merge_to_fixpoint(d: &mut MarkedGraph) {
    loop {
        let kinds: BTreeMap<usize, Option<BagKind>> = d
            .bags()
            .into_iter()
            .flat_map(|bag| {
                let h = d.bag_graph(bag);
                let kind = if graph::is_complete(&h) {
                    Some(BagKind::Complete)
                } else if h.n() >= 3 {
                    graph::star_center(&h).map(|c| BagKind::Star(bits::iter(bag).nth(c).unwrap()))
                } else {
                    None
                };
                bits::iter(bag).map(move |v| (v, kind)).collect::<Vec<_>>()
            })
            .collect();
        let mergeable = d.marked_edges().into_iter().find(|&(a, b)| match (kinds[&a], kinds[&b]) {
            (Some(BagKind::Complete), Some(BagKind::Complete)) => true,
            (Some(BagKind::Star(ca)), Some(BagKind::Star(cb))) => (ca == a) != (cb == b),
            _ => false,
        });
        match mergeable {
            Some((a, b)) => *d = d.recompose(a, b).expect("marked edge"),
            None => return,
        }
    }
}

/// Whether every bag of the canonical decomposition is a star or complete.
pub fn is_distance_hereditary(g: &Graph) -> Result<bool> {
    let d = canonical_decomposition(g)?;
    Ok(d.bags().into_iter().all(|b| is_star_or_complete(&d.bag_graph(b))))
}

/// Block-graph characterizations, evaluated against graph-side predicates
/// computed without decompositions. The simplicial-vertex check is only
/// recorded for block graphs.
pub fn check_block_characterizations(g: &Graph) -> Result<Report> {
    let d = canonical_decomposition(g)?;
    let kinds = d.classify_bags()?;
    let mut r = Report::new();
    let no_prime = kinds.iter().all(|(_, k)| *k != BagKind::Prime);
    let centers_unmarked = kinds.iter().all(|(_, k)| match k {
        BagKind::Star(c) => !d.is_marker(*c),
        _ => true,
    });
    r.equal(
        "block_iff_star_centers_unmarked",
        graph::is_block_graph(g),
        no_prime && centers_unmarked,
    );
    // the second characterization is stated for block graphs only
    if graph::is_block_graph(g) {
        let big_complete_with_original = kinds.iter().any(|(bag, k)| {
            *k == BagKind::Complete && bits::len(*bag) > 2 && *bag & d.originals() != 0
        });
        r.equal(
            "simplicial_iff_complete_bag_with_original",
            graph::has_simplicial_of_degree_at_least_two(g),
            big_complete_with_original,
        );
    }
    Ok(r)
}

/// The decomposition of a member of `Δ_k`, `k >= 1`, read off its
/// certificate: a star bag for every non-leaf vertex, a triangle of
/// markers for every main triangle.
pub fn build_appendix_decomposition(g: &Graph, cert: &DeltaCertificate) -> Result<MarkedGraph> {
    if cert.k == 0 {
        return Err(Error::LevelOutOfRange {
            k: 0,
            reason: "the construction needs k >= 1",
        });
    }
    if cert.vertices != g.vertex_set() {
        return Err(Error::Precondition("certificate must cover the whole graph".into()));
    }
    cert.validate(g)?;
    let leaf = |v: usize| g.degree(v) == 1;
    let mut d = MarkedGraph::from_graph(&Graph::with_labels(g.labels().iter().cloned())?);
    let marker = |d: &mut MarkedGraph, name: String| d.push_vertex(name, 0);
    // star bags: the center is the vertex itself
    let mut toward: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for (u, v) in cert.thick_edges() {
        for (x, y) in [(u, v), (v, u)] {
            if leaf(x) {
                continue;
            }
            let m = if leaf(y) {
                y
            } else {
                let name = format!("m({},{})", g.label(x), g.label(y));
                marker(&mut d, name)
            };
            d.graph.add_edge(x, m);
            toward.insert((x, y), m);
        }
        if !leaf(u) && !leaf(v) {
            d.link(toward[&(u, v)], toward[&(v, u)]);
        }
    }
    for (t, tri) in cert.triangles().into_iter().enumerate() {
        let inner: Vec<usize> = tri
            .iter()
            .map(|&v| marker(&mut d, format!("m(C{t},{})", g.label(v))))
            .collect();
        d.graph.add_edge(inner[0], inner[1]);
        d.graph.add_edge(inner[1], inner[2]);
        d.graph.add_edge(inner[0], inner[2]);
        for (&v, &c) in tri.iter().zip(&inner) {
            let outer = marker(&mut d, format!("m({},C{t})", g.label(v)));
            d.graph.add_edge(v, outer);
            d.link(outer, c);
        }
    }
    d.validate()?;
    Ok(d)
}

/// Code of the bag tree of the canonical decomposition with each bag
/// labeled by its size and number of original vertices. Locally
/// equivalent graphs get equal codes.
pub fn local_equivalence_invariant(g: &Graph) -> Result<String> {
    let d = canonical_decomposition(g)?;
    let bags = d.bags();
    let index_of = |v: usize| bags.iter().position(|&b| bits::contains(b, v)).unwrap();
    let labels: Vec<String> = bags
        .iter()
        .map(|&b| format!("{}:{}", bits::len(b), bits::len(b & d.originals())))
        .collect();
    let mut tree = vec![Vec::new(); bags.len()];
    for (a, b) in d.marked_edges() {
        let (x, y) = (index_of(a), index_of(b));
        tree[x].push(y);
        tree[y].push(x);
    }
    fn code(t: &[Vec<usize>], labels: &[String], v: usize, parent: usize) -> String {
        let mut kids: Vec<String> = t[v]
            .iter()
            .filter(|&&w| w != parent)
            .map(|&w| code(t, labels, w, v))
            .collect();
        kids.sort();
        format!("({}{})", labels[v], kids.concat())
    }
    Ok((0..bags.len())
        .map(|r| code(&tree, &labels, r, usize::MAX))
        .min()
        .unwrap_or_default())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kinds(d: &MarkedGraph) -> Vec<BagKind> {
        d.classify_bags().unwrap().into_iter().map(|(_, k)| k).collect()
    }

    #[test]
    fn splits_of_small_graphs() {
        assert_eq!(find_split(&Graph::cycle(5)).unwrap(), None);
        let p4 = find_split(&Graph::path(4)).unwrap().unwrap();
        assert_eq!((p4.a, p4.b), (0b0011, 0b1100));
        let k4 = find_split(&Graph::complete(4)).unwrap().unwrap();
        assert_eq!(k4.a, 0b0011);
        assert_eq!(find_split(&Graph::empty(4)), Err(Error::Disconnected));
    }

    #[test]
    fn simple_decomposition_round_trip() {
        let g = Graph::path(4);
        let s = find_split(&g).unwrap().unwrap();
        let d = simple_decomposition(&g, &s).unwrap();
        d.validate().unwrap();
        assert_eq!(d.bags().len(), 2);
        assert!(kinds(&d).iter().all(|k| matches!(k, BagKind::Star(_))));
        assert_eq!(d.recompose_all(), g);
        let bad = Split { a: 0b0001, b: 0b1110 };
        assert!(simple_decomposition(&g, &bad).is_err());
    }

    #[test]
    fn canonical_examples() {
        let c5 = canonical_decomposition(&Graph::cycle(5)).unwrap();
        assert_eq!(kinds(&c5), vec![BagKind::Prime]);
        let star = canonical_decomposition(&Graph::star(5)).unwrap();
        assert_eq!(kinds(&star), vec![BagKind::Star(0)]);
        let net = canonical_decomposition(&Graph::net()).unwrap();
        let mut ks = kinds(&net);
        ks.sort_by_key(|k| matches!(k, BagKind::Star(_)));
        assert_eq!(ks.len(), 4);
        assert_eq!(ks[0], BagKind::Complete);
        for k in &ks[1..] {
            let BagKind::Star(c) = *k else { panic!() };
            assert!(!net.is_marker(c));
        }
        assert_eq!(net.recompose_all(), Graph::net());
    }

    #[test]
    fn linked_on_net() {
        let d = canonical_decomposition(&Graph::net()).unwrap();
        assert!(!d.linked(3, 4).unwrap());
        assert!(d.linked(3, 0).unwrap());
        assert!(d.linked(0, 1).unwrap());
        let m = bits::iter(d.markers()).next().unwrap();
        assert_eq!(d.linked(m, 0), Err(Error::MarkerVertex(m)));
    }

    #[test]
    fn text_round_trip() {
        let d = canonical_decomposition(&Graph::net()).unwrap();
        let t = d.to_text();
        let back = MarkedGraph::from_text(&t).unwrap();
        assert_eq!(back.to_text(), t);
        assert!(back.isomorphic_fixing_labels(&d));
        assert!(MarkedGraph::from_text("2 2\nv 0 a\nv 1 b\ne 0 1 X\n").is_err());
    }

    #[test]
    fn appendix_on_net() {
        let g = Graph::net();
        let cert = crate::delta::recognize_delta(&g).unwrap();
        let d = build_appendix_decomposition(&g, &cert).unwrap();
        assert_eq!(d.bags().len(), 4);
        assert!(d.isomorphic_to(&canonical_decomposition(&g).unwrap()));
        let k2 = crate::delta::recognize_delta(&Graph::complete(2)).unwrap();
        assert!(build_appendix_decomposition(&Graph::complete(2), &k2).is_err());
    }

    #[test]
    fn invariant_examples() {
        let a = local_equivalence_invariant(&Graph::complete(3)).unwrap();
        let b = local_equivalence_invariant(&Graph::path(3)).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, local_equivalence_invariant(&Graph::path(4)).unwrap());
    }

    #[test]
    fn block_characterizations_small() {
        for g in [Graph::net(), Graph::cycle(4), Graph::complete(4), Graph::diamond()] {
            let r = check_block_characterizations(&g).unwrap();
            assert!(r.passed(), "{r}");
        }
    }
}

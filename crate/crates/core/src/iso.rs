//! Isomorphism, automorphism orbits and canonical forms.
//!
//! Everything here is color refinement followed by individualization
//! backtracking. Structures may carry a second edge relation (used for the
//! marked edges of a split decomposition) and an initial vertex coloring.

use std::collections::BTreeMap;

use crate::bits::{self, VSet};
use crate::graph::{Graph, RootedGraph};

/// A graph view with an optional second edge relation and vertex colors.
#[derive(Clone, Debug)]
pub struct Structure<'a> {
    pub adj: &'a [VSet],
    /// Second relation; empty slice means "none".
    pub extra: &'a [VSet],
    pub colors: Vec<u32>,
}

impl<'a> Structure<'a> {
    pub fn plain(g: &'a Graph) -> Self {
        Structure {
            adj: g.raw_adjacency(),
            extra: &[],
            colors: vec![0; g.n()],
        }
    }

    pub fn colored(g: &'a Graph, colors: Vec<u32>) -> Self {
        assert_eq!(colors.len(), g.n());
        Structure {
            adj: g.raw_adjacency(),
            extra: &[],
            colors,
        }
    }

    fn n(&self) -> usize {
        self.adj.len()
    }

    fn extra(&self, v: usize) -> VSet {
        self.extra.get(v).copied().unwrap_or(0)
    }

    fn twins(&self, x: usize, y: usize) -> bool {
        let mask = !(bits::bit(x) | bits::bit(y));
        self.adj[x] & mask == self.adj[y] & mask && self.extra(x) & mask == self.extra(y) & mask
    }
}

fn signature(s: &Structure<'_>, colors: &[u32], v: usize) -> Vec<u32> {
    let mut a: Vec<u32> = bits::iter(s.adj[v]).map(|u| colors[u]).collect();
    a.sort_unstable();
    let mut sig = Vec::with_capacity(a.len() + 4);
    sig.push(colors[v]);
    sig.extend(a);
    if !s.extra.is_empty() {
        let mut b: Vec<u32> = bits::iter(s.extra(v)).map(|u| colors[u]).collect();
        b.sort_unstable();
        sig.push(u32::MAX);
        sig.extend(b);
    }
    sig
}

/// Refines the colorings of several structures jointly so that color ids
/// are comparable across them. Returns the number of distinct colors.
fn refine(structs: &[&Structure<'_>], colors: &mut [Vec<u32>]) -> usize {
    let mut classes = usize::MAX;
    loop {
        let sigs: Vec<Vec<Vec<u32>>> = structs
            .iter()
            .zip(colors.iter())
            .map(|(s, c)| (0..s.n()).map(|v| signature(s, c, v)).collect())
            .collect();
        let mut ids: BTreeMap<&[u32], u32> = BTreeMap::new();
        for sig in sigs.iter().flatten() {
            ids.insert(sig.as_slice(), 0);
        }
        for (i, id) in ids.values_mut().enumerate() {
            *id = i as u32;
        }
        let count = ids.len();
        for (c, sig) in colors.iter_mut().zip(&sigs) {
            for (v, s) in sig.iter().enumerate() {
                c[v] = ids[s.as_slice()];
            }
        }
        if count == classes {
            return count;
        }
        classes = count;
    }
}

fn individualize(colors: &mut [u32], x: usize) {
    for (v, c) in colors.iter_mut().enumerate() {
        *c = 2 * *c + u32::from(v != x);
    }
}

fn histogram(colors: &[u32]) -> BTreeMap<u32, usize> {
    let mut h = BTreeMap::new();
    for &c in colors {
        *h.entry(c).or_insert(0) += 1;
    }
    h
}

/// First color (smallest id) whose class has more than one member.
fn target_cell(colors: &[u32]) -> Option<u32> {
    histogram(colors)
        .into_iter()
        .find(|&(_, k)| k > 1)
        .map(|(c, _)| c)
}

fn is_iso_map(a: &Structure<'_>, b: &Structure<'_>, map: &[usize]) -> bool {
    (0..a.n()).all(|v| {
        let img = |s: VSet| bits::iter(s).fold(0, |acc, u| acc | bits::bit(map[u]));
        img(a.adj[v]) == b.adj[map[v]] && img(a.extra(v)) == b.extra(map[v])
    })
}

fn search(a: &Structure<'_>, b: &Structure<'_>, ca: Vec<u32>, cb: Vec<u32>) -> Option<Vec<usize>> {
    let mut cs = [ca, cb];
    refine(&[a, b], &mut cs);
    let [ca, cb] = cs;
    if histogram(&ca) != histogram(&cb) {
        return None;
    }
    match target_cell(&ca) {
        None => {
            let mut pos = BTreeMap::new();
            for (v, &c) in cb.iter().enumerate() {
                pos.insert(c, v);
            }
            let map: Vec<usize> = ca.iter().map(|c| pos[c]).collect();
            is_iso_map(a, b, &map).then_some(map)
        }
        Some(cell) => {
            let x = ca.iter().position(|&c| c == cell).unwrap();
            let mut tried: Vec<usize> = Vec::new();
            for y in (0..b.n()).filter(|&y| cb[y] == cell) {
                if tried.iter().any(|&t| b.twins(t, y)) {
                    continue;
                }
                tried.push(y);
                let mut na = ca.clone();
                let mut nb = cb.clone();
                individualize(&mut na, x);
                individualize(&mut nb, y);
                if let Some(m) = search(a, b, na, nb) {
                    return Some(m);
                }
            }
            None
        }
    }
}

/// An isomorphism `a -> b` respecting colors and both relations, as a
/// vertex map.
pub fn find_isomorphism(a: &Structure<'_>, b: &Structure<'_>) -> Option<Vec<usize>> {
    if a.n() != b.n() || a.extra.is_empty() != b.extra.is_empty() {
        return None;
    }
    search(a, b, a.colors.clone(), b.colors.clone())
}

pub fn isomorphic(g1: &Graph, g2: &Graph) -> bool {
    g1.n() == g2.n()
        && g1.edge_count() == g2.edge_count()
        && find_isomorphism(&Structure::plain(g1), &Structure::plain(g2)).is_some()
}

fn pinned(n: usize, pins: &[usize]) -> Vec<u32> {
    let mut c = vec![0; n];
    for (i, &p) in pins.iter().enumerate() {
        c[p] = i as u32 + 1;
    }
    c
}

pub fn rooted_isomorphic(r1: &RootedGraph, r2: &RootedGraph) -> bool {
    let (g1, g2) = (&r1.graph, &r2.graph);
    g1.n() == g2.n()
        && g1.edge_count() == g2.edge_count()
        && find_isomorphism(
            &Structure::colored(g1, pinned(g1.n(), &[r1.root])),
            &Structure::colored(g2, pinned(g2.n(), &[r2.root])),
        )
        .is_some()
}

/// Partition of the vertices into automorphism orbits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitPartition {
    /// Classes sorted by smallest member; members ascending.
    pub classes: Vec<Vec<usize>>,
}

impl OrbitPartition {
    pub fn count(&self) -> usize {
        self.classes.len()
    }

    pub fn class_of(&self, v: usize) -> usize {
        self.classes.iter().position(|c| c.contains(&v)).unwrap()
    }
}

/// Orbits of `Aut(g)`, or of the stabilizer of `fixed` when given.
///
/// Two vertices share an orbit iff some automorphism (fixing `fixed`) maps
/// one to the other; this is decided by pinned isomorphism search.
pub fn automorphism_orbits(g: &Graph, fixed: Option<usize>) -> OrbitPartition {
    let n = g.n();
    let base: Vec<usize> = fixed.into_iter().collect();
    let s = Structure::colored(g, pinned(n, &base));
    let mut cs = [s.colors.clone()];
    refine(&[&s], &mut cs);
    let cell = &cs[0];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for v in 0..n {
        let home = classes.iter().position(|c| {
            let r = c[0];
            if cell[r] != cell[v] {
                return false;
            }
            let mut pa = base.clone();
            pa.push(r);
            let mut pb = base.clone();
            pb.push(v);
            find_isomorphism(
                &Structure::colored(g, pinned(n, &pa)),
                &Structure::colored(g, pinned(n, &pb)),
            )
            .is_some()
        });
        match home {
            Some(i) => classes[i].push(v),
            None => classes.push(vec![v]),
        }
    }
    OrbitPartition { classes }
}

/// Canonical form: the lexicographically least permuted adjacency over the
/// leaves of the refinement search tree. Two graphs are isomorphic iff their
/// canonical forms are equal. Intended for small graphs (about ten vertices).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    rows: Vec<VSet>,
}

impl CanonicalForm {
    pub fn n(&self) -> usize {
        self.rows.len()
    }

    /// The canonical representative graph (labels `0..n`).
    pub fn to_graph(&self) -> Graph {
        let mut g = Graph::empty(self.rows.len());
        for (u, &row) in self.rows.iter().enumerate() {
            for v in bits::iter(row) {
                if u < v {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }
}

fn permuted_rows(adj: &[VSet], colors: &[u32]) -> Vec<VSet> {
    let mut order: Vec<usize> = (0..adj.len()).collect();
    order.sort_by_key(|&v| colors[v]);
    let mut pos = vec![0; adj.len()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    order
        .iter()
        .map(|&v| bits::iter(adj[v]).fold(0, |acc, u| acc | bits::bit(pos[u])))
        .collect()
}

fn canon_search(s: &Structure<'_>, colors: Vec<u32>, best: &mut Option<Vec<VSet>>) {
    let mut cs = [colors];
    refine(&[s], &mut cs);
    let [colors] = cs;
    match target_cell(&colors) {
        None => {
            let rows = permuted_rows(s.adj, &colors);
            if best.as_ref().is_none_or(|b| rows < *b) {
                *best = Some(rows);
            }
        }
        Some(cell) => {
            let mut tried: Vec<usize> = Vec::new();
            for x in (0..s.n()).filter(|&x| colors[x] == cell) {
                if tried.iter().any(|&t| s.twins(t, x)) {
                    continue;
                }
                tried.push(x);
                let mut c = colors.clone();
                individualize(&mut c, x);
                canon_search(s, c, best);
            }
        }
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let s = Structure::plain(g);
    let mut best = None;
    canon_search(&s, s.colors.clone(), &mut best);
    CanonicalForm {
        rows: best.unwrap_or_default(),
    }
}

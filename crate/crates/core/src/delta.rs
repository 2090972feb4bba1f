//! The delta-composition family: `Δ_0 = {K2}`, and `Δ_k` consists of all
//! graphs obtained from three members of `Δ_{k-1}` by adding a triangle on
//! one vertex of each. Members have `2·3^k` vertices and linear rank-width
//! exactly `k + 1`, and every elementary vertex-minor drops to `k`.
//!
//! Construction labels are part paths: the vertex `y` of the K2 reached by
//! descending into parts 2 then 1 of a `Δ_2` member is labeled `2.1.y`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rayon::prelude::*;

use crate::bits::{self, VSet};
use crate::corpus;
use crate::error::{Error, Result};
use crate::graph::{Graph, RootedGraph};
use crate::iso::{automorphism_orbits, isomorphic, rooted_isomorphic};
use crate::rank::{linear_rankwidth_exact, Layout, EXACT_LIMIT};
use crate::report::Report;
use crate::vm::{add_twin, elementary_representatives};

/// Largest level for which explicit enumeration is offered.
pub const ENUMERATION_LIMIT: usize = 2;
/// Largest level for which [`count_delta`] knows `p_{k-1}`.
pub const COUNT_LIMIT: usize = 4;

pub fn vertex_count(k: usize) -> usize {
    2 * 3usize.pow(k as u32)
}

/// Recursive witness that a vertex set induces a member of `Δ_k`.
/// Vertex indices refer to the host graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaCertificate {
    pub k: usize,
    pub vertices: VSet,
    pub node: CertNode,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CertNode {
    /// `Δ_0`: the single edge.
    Edge(usize, usize),
    /// Main triangle `roots`, with `parts[i]` containing `roots[i]`.
    Triangle {
        roots: [usize; 3],
        parts: Box<[DeltaCertificate; 3]>,
    },
}

impl DeltaCertificate {
    pub fn main_triangle(&self) -> Option<[usize; 3]> {
        match &self.node {
            CertNode::Edge(..) => None,
            CertNode::Triangle { roots, .. } => Some(*roots),
        }
    }

    pub fn parts(&self) -> Option<&[DeltaCertificate; 3]> {
        match &self.node {
            CertNode::Edge(..) => None,
            CertNode::Triangle { parts, .. } => Some(parts),
        }
    }

    /// The same certificate with every vertex index passed through `f`.
    pub fn remap(&self, f: &impl Fn(usize) -> usize) -> DeltaCertificate {
        let vertices = bits::iter(self.vertices).fold(0, |acc, v| acc | bits::bit(f(v)));
        let node = match &self.node {
            CertNode::Edge(x, y) => CertNode::Edge(f(*x), f(*y)),
            CertNode::Triangle { roots, parts } => CertNode::Triangle {
                roots: roots.map(f),
                parts: Box::new([parts[0].remap(f), parts[1].remap(f), parts[2].remap(f)]),
            },
        };
        DeltaCertificate {
            k: self.k,
            vertices,
            node,
        }
    }

    /// The edges the certificate accounts for: thick edges at level 0 plus
    /// every main triangle.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        self.collect_edges(&mut out);
        out
    }

    fn collect_edges(&self, out: &mut Vec<(usize, usize)>) {
        match &self.node {
            CertNode::Edge(x, y) => out.push(((*x).min(*y), (*x).max(*y))),
            CertNode::Triangle { roots, parts } => {
                for (i, j) in [(0, 1), (1, 2), (0, 2)] {
                    out.push((roots[i].min(roots[j]), roots[i].max(roots[j])));
                }
                parts.iter().for_each(|p| p.collect_edges(out));
            }
        }
    }

    /// Thick edges (those inherited from `Δ_0`), a perfect matching.
    pub fn thick_edges(&self) -> Vec<(usize, usize)> {
        match &self.node {
            CertNode::Edge(x, y) => vec![((*x).min(*y), (*x).max(*y))],
            CertNode::Triangle { parts, .. } => parts.iter().flat_map(|p| p.thick_edges()).collect(),
        }
    }

    /// All main triangles at every level.
    pub fn triangles(&self) -> Vec<[usize; 3]> {
        match &self.node {
            CertNode::Edge(..) => Vec::new(),
            CertNode::Triangle { roots, parts } => {
                let mut out = vec![*roots];
                for p in parts.iter() {
                    out.extend(p.triangles());
                }
                out
            }
        }
    }

    /// Checks the certificate against `g` (structure, sizes, and that the
    /// certified edges are exactly the edges of `g` on `vertices`).
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let bad = |m: &str| Err(Error::Precondition(format!("invalid certificate: {m}")));
        if self.vertices & !g.vertex_set() != 0 {
            return bad("vertex out of range");
        }
        self.validate_shape().map_err(|m| Error::Precondition(format!("invalid certificate: {m}")))?;
        let mut certified: Vec<(usize, usize)> = self.edges();
        certified.sort_unstable();
        let actual: Vec<(usize, usize)> = g
            .induced_edges(self.vertices)
            .collect();
        if certified != actual {
            return bad("edge set differs from the graph");
        }
        Ok(())
    }

    fn validate_shape(&self) -> std::result::Result<(), String> {
        if bits::len(self.vertices) != vertex_count(self.k) {
            return Err(format!("level {} part has {} vertices", self.k, bits::len(self.vertices)));
        }
        match &self.node {
            CertNode::Edge(x, y) => {
                if self.k != 0 || x == y || self.vertices != bits::bit(*x) | bits::bit(*y) {
                    return Err("malformed edge node".into());
                }
            }
            CertNode::Triangle { roots, parts } => {
                let mut union = 0;
                for (r, p) in roots.iter().zip(parts.iter()) {
                    if p.k + 1 != self.k || !bits::contains(p.vertices, *r) || union & p.vertices != 0 {
                        return Err("malformed triangle node".into());
                    }
                    union |= p.vertices;
                    p.validate_shape()?;
                }
                if union != self.vertices {
                    return Err("parts do not cover the vertex set".into());
                }
            }
        }
        Ok(())
    }
}

impl Graph {
    /// Edges `(u, v)`, `u < v`, with both ends in `s`.
    pub fn induced_edges(&self, s: VSet) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges()
            .filter(move |&(u, v)| bits::contains(s, u) && bits::contains(s, v))
    }
}

/// A member of `Δ_k` with its certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaMember {
    pub graph: Graph,
    pub cert: DeltaCertificate,
}

impl DeltaMember {
    pub fn k(&self) -> usize {
        self.cert.k
    }

    pub fn k2() -> DeltaMember {
        let mut graph = Graph::with_labels(["x", "y"]).unwrap();
        graph.add_edge(0, 1);
        DeltaMember {
            graph,
            cert: DeltaCertificate {
                k: 0,
                vertices: 0b11,
                node: CertNode::Edge(0, 1),
            },
        }
    }

    /// Delta composition of three rooted members of the same level.
    pub fn compose(parts: [(&DeltaMember, usize); 3]) -> Result<DeltaMember> {
        let k = parts[0].0.k();
        if parts.iter().any(|(m, _)| m.k() != k) {
            return Err(Error::Precondition("parts of different levels".into()));
        }
        let rooted: Vec<RootedGraph> = parts
            .iter()
            .map(|(m, r)| RootedGraph::new(m.graph.clone(), *r))
            .collect::<Result<_>>()?;
        let graph = delta_compose(&rooted[0], &rooted[1], &rooted[2]);
        let mut offset = 0;
        let mut certs = Vec::new();
        let mut roots = [0; 3];
        for (i, (m, r)) in parts.iter().enumerate() {
            certs.push(m.cert.remap(&|v| v + offset));
            roots[i] = r + offset;
            offset += m.graph.n();
        }
        let certs: [DeltaCertificate; 3] = certs.try_into().unwrap();
        Ok(DeltaMember {
            graph,
            cert: DeltaCertificate {
                k: k + 1,
                vertices: bits::full(offset),
                node: CertNode::Triangle {
                    roots,
                    parts: Box::new(certs),
                },
            },
        })
    }
}

/// Disjoint union of the three graphs plus a triangle on their roots.
/// Part `i` (1-based) contributes its vertices in order, labeled `i.<label>`.
pub fn delta_compose(g1: &RootedGraph, g2: &RootedGraph, g3: &RootedGraph) -> Graph {
    let total: usize = [g1, g2, g3].iter().map(|r| r.graph.n()).sum();
    let labels: Vec<String> = [g1, g2, g3]
        .iter()
        .enumerate()
        .flat_map(|(i, r)| r.graph.labels().iter().map(move |l| format!("{}.{l}", i + 1)))
        .collect();
    let mut g = Graph::with_labels(labels).expect("prefixed labels are distinct");
    let mut offset = 0;
    let mut roots = [0; 3];
    for (i, r) in [g1, g2, g3].into_iter().enumerate() {
        for (u, v) in r.graph.edges() {
            g.add_edge(u + offset, v + offset);
        }
        roots[i] = r.root + offset;
        offset += r.graph.n();
    }
    debug_assert_eq!(offset, total);
    for (i, j) in [(0, 1), (1, 2), (0, 2)] {
        g.add_edge(roots[i], roots[j]);
    }
    g
}

// ---- enumeration ----------------------------------------------------------

/// Rooted representatives of `Δ_k`, pairwise non-isomorphic as rooted graphs.
#[derive(Clone, Debug)]
pub struct RootedMember {
    pub member: DeltaMember,
    pub root: usize,
}

impl RootedMember {
    pub fn rooted_graph(&self) -> RootedGraph {
        RootedGraph {
            graph: self.member.graph.clone(),
            root: self.root,
        }
    }
}

fn check_enum_level(k: usize) -> Result<()> {
    if k > ENUMERATION_LIMIT {
        Err(Error::LevelOutOfRange {
            k,
            reason: "explicit enumeration supports k <= 2",
        })
    } else {
        Ok(())
    }
}

/// Multisets `i <= j <= l` of indices below `p`.
fn multisets(p: usize) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for i in 0..p {
        for j in i..p {
            for l in j..p {
                out.push([i, j, l]);
            }
        }
    }
    out
}

/// Unrooted members built from every multiset of three rooted
/// representatives of the previous level, deduplicated by isomorphism.
pub fn enumerate_delta_members(k: usize) -> Result<Vec<DeltaMember>> {
    check_enum_level(k)?;
    if k == 0 {
        return Ok(vec![DeltaMember::k2()]);
    }
    let prev = enumerate_rooted_members(k - 1)?;
    let candidates: Vec<DeltaMember> = multisets(prev.len())
        .into_par_iter()
        .map(|[i, j, l]| {
            DeltaMember::compose([
                (&prev[i].member, prev[i].root),
                (&prev[j].member, prev[j].root),
                (&prev[l].member, prev[l].root),
            ])
            .expect("same-level parts")
        })
        .collect();
    let mut classes: Vec<DeltaMember> = Vec::new();
    for c in candidates {
        if !classes.iter().any(|m| isomorphic(&m.graph, &c.graph)) {
            classes.push(c);
        }
    }
    Ok(classes)
}

pub fn enumerate_delta(k: usize) -> Result<Vec<Graph>> {
    Ok(enumerate_delta_members(k)?.into_iter().map(|m| m.graph).collect())
}

/// One rooted member per automorphism orbit of each unrooted class.
pub fn enumerate_rooted_members(k: usize) -> Result<Vec<RootedMember>> {
    check_enum_level(k)?;
    let members = enumerate_delta_members(k)?;
    let per_member: Vec<Vec<RootedMember>> = members
        .into_par_iter()
        .map(|m| {
            automorphism_orbits(&m.graph, None)
                .classes
                .into_iter()
                .map(|c| RootedMember {
                    member: m.clone(),
                    root: c[0],
                })
                .collect()
        })
        .collect();
    Ok(per_member.into_iter().flatten().collect())
}

pub fn enumerate_rooted_delta(k: usize) -> Result<Vec<RootedGraph>> {
    Ok(enumerate_rooted_members(k)?
        .into_iter()
        .map(|r| r.rooted_graph())
        .collect())
}

// ---- canonical codes --------------------------------------------------------

/// Canonical code of a certified member with tagged vertices. Two tagged
/// members get equal codes iff some isomorphism maps tags onto equal tags.
/// The main triangle is unique, so the code recurses on parts and sorts.
fn tagged_code(cert: &DeltaCertificate, tags: &BTreeMap<usize, Vec<u32>>) -> String {
    let tag_str = |v: usize| -> String {
        tags.get(&v)
            .map(|t| {
                let mut t = t.clone();
                t.sort_unstable();
                t.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
            })
            .unwrap_or_default()
    };
    match &cert.node {
        CertNode::Edge(x, y) => {
            let mut ends = [tag_str(*x), tag_str(*y)];
            ends.sort();
            format!("E[{}|{}]", ends[0], ends[1])
        }
        CertNode::Triangle { roots, parts } => {
            let mut children: Vec<String> = parts
                .iter()
                .zip(roots)
                .map(|(p, &r)| {
                    let mut sub: BTreeMap<usize, Vec<u32>> = tags
                        .iter()
                        .filter(|(v, _)| bits::contains(p.vertices, **v))
                        .map(|(v, t)| (*v, t.clone()))
                        .collect();
                    sub.entry(r).or_default().push(100 + cert.k as u32);
                    tagged_code(p, &sub)
                })
                .collect();
            children.sort();
            format!("T({})", children.join(";"))
        }
    }
}

/// Isomorphism-class code of a certified member.
pub fn member_code(cert: &DeltaCertificate) -> String {
    tagged_code(cert, &BTreeMap::new())
}

/// Rooted isomorphism-class code of `(member, root)`.
pub fn rooted_code(cert: &DeltaCertificate, root: usize) -> String {
    tagged_code(cert, &BTreeMap::from([(root, vec![1])]))
}

// ---- counting --------------------------------------------------------------

/// Class counts for level `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountTable {
    pub k: usize,
    /// Rooted classes of the previous level.
    pub p_prev: u128,
    /// Rooted classes of this level, when known.
    pub p: Option<u128>,
    pub a: u128,
    pub b: u128,
    pub c: u128,
}

impl CountTable {
    pub fn total(&self) -> u128 {
        self.a + self.b + self.c
    }

    fn from_prev(k: usize, p_prev: u128, p: Option<u128>) -> Self {
        let binom3 = if p_prev >= 3 {
            p_prev * (p_prev - 1) * (p_prev - 2) / 6
        } else {
            0
        };
        CountTable {
            k,
            p_prev,
            p,
            a: p_prev,
            b: p_prev * p_prev.saturating_sub(1),
            c: binom3,
        }
    }
}

impl fmt::Display for CountTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "k = {}", self.k)?;
        writeln!(f, "p_{} = {}", self.k.saturating_sub(1), self.p_prev)?;
        if let Some(p) = self.p {
            writeln!(f, "p_{} = {}", self.k, p)?;
        }
        writeln!(f, "a_{} = {}", self.k, self.a)?;
        writeln!(f, "b_{} = {}", self.k, self.b)?;
        writeln!(f, "c_{} = {}", self.k, self.c)?;
        writeln!(f, "total_{} = {}", self.k, self.total())
    }
}

/// Orbit counts `norb(G, root)` of the rooted representatives at `k <= 2`.
pub fn rooted_orbit_counts(k: usize) -> Result<Vec<usize>> {
    Ok(enumerate_rooted_members(k)?
        .par_iter()
        .map(|r| automorphism_orbits(&r.member.graph, Some(r.root)).count())
        .collect())
}

/// `p_3` as the sum of `norb(G)` over the classes of `Δ_3`, each `norb(G)`
/// obtained from the automorphism factorization over its three rooted parts.
pub fn p3_by_orbit_sum() -> Result<u128> {
    let n = rooted_orbit_counts(2)?;
    let mut total: u128 = 0;
    for [i, j, l] in multisets(n.len()) {
        let orbits = if i == j && j == l {
            n[i]
        } else if i == j {
            n[i] + n[l]
        } else if j == l {
            n[i] + n[j]
        } else {
            n[i] + n[j] + n[l]
        };
        total += orbits as u128;
    }
    Ok(total)
}

/// Rooted class count for `k <= 3` (enumeration below 3, orbit sum at 3).
pub fn rooted_class_count(k: usize) -> Result<u128> {
    match k {
        0..=2 => Ok(enumerate_rooted_members(k)?.len() as u128),
        3 => p3_by_orbit_sum(),
        _ => Err(Error::LevelOutOfRange {
            k,
            reason: "rooted class counts are computed for k <= 3",
        }),
    }
}

pub fn count_delta(k: usize) -> Result<CountTable> {
    if k == 0 {
        return Ok(CountTable {
            k: 0,
            p_prev: 0,
            p: Some(1),
            a: 0,
            b: 0,
            c: 0,
        });
    }
    if k > COUNT_LIMIT {
        return Err(Error::LevelOutOfRange {
            k,
            reason: "counting needs p_{k-1}, known for k <= 4",
        });
    }
    let p_prev = rooted_class_count(k - 1)?;
    let p = if k <= 3 { Some(rooted_class_count(k)?) } else { None };
    Ok(CountTable::from_prev(k, p_prev, p))
}

/// Classes of `Δ_3` counted by construction: every multiset of three rooted
/// `Δ_2` representatives is composed and its canonical code recorded.
/// Returns `(unrooted classes, rooted classes)`.
pub fn construct_level3_counts() -> Result<(usize, usize)> {
    let prev = enumerate_rooted_members(2)?;
    let results: Vec<(String, Vec<String>)> = multisets(prev.len())
        .into_par_iter()
        .map(|[i, j, l]| {
            let m = DeltaMember::compose([
                (&prev[i].member, prev[i].root),
                (&prev[j].member, prev[j].root),
                (&prev[l].member, prev[l].root),
            ])
            .expect("same-level parts");
            let rooted: BTreeSet<String> =
                (0..m.graph.n()).map(|v| rooted_code(&m.cert, v)).collect();
            (member_code(&m.cert), rooted.into_iter().collect())
        })
        .collect();
    let unrooted: BTreeSet<&String> = results.iter().map(|(c, _)| c).collect();
    let rooted: BTreeSet<&String> = results.iter().flat_map(|(_, r)| r).collect();
    Ok((unrooted.len(), rooted.len()))
}

// ---- recognition ------------------------------------------------------------

fn level_of(n: usize) -> Option<usize> {
    (0..=4).find(|&k| vertex_count(k) == n)
}

/// Triangles of `g[s]` whose edge removal splits `s` into three parts that
/// each certify `Δ_{k-1}`.
fn certifying_triangles_in(g: &Graph, s: VSet, k: usize) -> Vec<DeltaCertificate> {
    let part_size = vertex_count(k - 1);
    let mut out = Vec::new();
    for a in bits::iter(s) {
        for b in bits::iter(g.neighbors(a) & s & !bits::full(a + 1)) {
            for c in bits::iter(g.neighbors(a) & g.neighbors(b) & s & !bits::full(b + 1)) {
                let tri = [a, b, c];
                let mut h = g.induced_as_host(s);
                for (x, y) in [(a, b), (b, c), (a, c)] {
                    h.remove_edge(x, y);
                }
                let comps: Vec<VSet> = tri.iter().map(|&r| h.reach(r, s)).collect();
                if comps.iter().any(|&c| bits::len(c) != part_size)
                    || comps[0] & comps[1] != 0
                    || comps[1] & comps[2] != 0
                    || comps[0] & comps[2] != 0
                    || comps[0] | comps[1] | comps[2] != s
                {
                    continue;
                }
                let parts: Option<Vec<DeltaCertificate>> =
                    comps.iter().map(|&c| recognize_in(g, c, k - 1)).collect();
                if let Some(parts) = parts {
                    out.push(DeltaCertificate {
                        k,
                        vertices: s,
                        node: CertNode::Triangle {
                            roots: tri,
                            parts: Box::new(parts.try_into().unwrap()),
                        },
                    });
                }
            }
        }
    }
    out
}

impl Graph {
    /// Copy of the graph keeping only edges inside `s` (indices unchanged).
    fn induced_as_host(&self, s: VSet) -> Graph {
        let mut h = self.clone();
        for (v, row) in h.adj_mut().iter_mut().enumerate() {
            *row = if bits::contains(s, v) { *row & s } else { 0 };
        }
        h
    }
}

fn recognize_in(g: &Graph, s: VSet, k: usize) -> Option<DeltaCertificate> {
    if k == 0 {
        let vs = bits::to_vec(s);
        return (vs.len() == 2 && g.has_edge(vs[0], vs[1])).then(|| DeltaCertificate {
            k: 0,
            vertices: s,
            node: CertNode::Edge(vs[0], vs[1]),
        });
    }
    // members have |E| = |V|/2 + 3(|V|/2 - 1)/... ; cheap necessary check first
    let edges = g.induced_edges(s).count();
    if edges != delta_edge_count(k) {
        return None;
    }
    certifying_triangles_in(g, s, k).into_iter().next()
}

/// `|E|` of any member of `Δ_k`: `3^k` thick edges plus three per triangle.
pub fn delta_edge_count(k: usize) -> usize {
    let thick = 3usize.pow(k as u32);
    let triangles = (thick - 1) / 2;
    thick + 3 * triangles
}

/// A certificate if `g` is a member of `Δ_k` for the `k` with `|V| = 2·3^k`.
pub fn recognize_delta(g: &Graph) -> Option<DeltaCertificate> {
    let k = level_of(g.n())?;
    recognize_in(g, g.vertex_set(), k)
}

/// Every main triangle that certifies membership (at most one for members).
pub fn certifying_triangles(g: &Graph) -> Vec<[usize; 3]> {
    match level_of(g.n()) {
        Some(k) if k >= 1 => certifying_triangles_in(g, g.vertex_set(), k)
            .into_iter()
            .filter_map(|c| c.main_triangle())
            .collect(),
        _ => Vec::new(),
    }
}

// ---- symmetry type ------------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DeltaTag {
    A,
    B,
    C,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DeltaType {
    pub tag: DeltaTag,
    /// Order of the permutation group induced on the main triangle.
    pub symmetry_order: usize,
}

fn part_rooted(g: &Graph, cert: &DeltaCertificate, i: usize) -> RootedGraph {
    let parts = cert.parts().expect("k >= 1");
    let roots = cert.main_triangle().unwrap();
    let s = parts[i].vertices;
    let root = bits::iter(s).position(|v| v == roots[i]).unwrap();
    RootedGraph {
        graph: g.induced(s),
        root,
    }
}

/// Type-A/B/C by pairwise rooted isomorphism of the three parts.
pub fn classify_type(g: &Graph, cert: &DeltaCertificate) -> Result<DeltaType> {
    if cert.k == 0 {
        return Err(Error::Precondition("level 0 has no symmetry type".into()));
    }
    let parts: Vec<RootedGraph> = (0..3).map(|i| part_rooted(g, cert, i)).collect();
    let same = [(0, 1), (1, 2), (0, 2)]
        .iter()
        .filter(|&&(i, j)| rooted_isomorphic(&parts[i], &parts[j]))
        .count();
    Ok(match same {
        3 => DeltaType {
            tag: DeltaTag::A,
            symmetry_order: 6,
        },
        0 => DeltaType {
            tag: DeltaTag::C,
            symmetry_order: 1,
        },
        _ => DeltaType {
            tag: DeltaTag::B,
            symmetry_order: 2,
        },
    })
}

/// Reorders the parts of a Type-B certificate so that the isomorphic pair
/// sits in the first and last slots; other certificates are returned as is.
pub fn normalize_parts(g: &Graph, cert: &DeltaCertificate) -> Result<DeltaCertificate> {
    if classify_type(g, cert)?.tag != DeltaTag::B {
        return Ok(cert.clone());
    }
    let parts: Vec<RootedGraph> = (0..3).map(|i| part_rooted(g, cert, i)).collect();
    let order = if rooted_isomorphic(&parts[0], &parts[2]) {
        [0, 1, 2]
    } else if rooted_isomorphic(&parts[0], &parts[1]) {
        [0, 2, 1]
    } else {
        [1, 0, 2]
    };
    let (roots, ps) = match &cert.node {
        CertNode::Triangle { roots, parts } => (roots, parts),
        CertNode::Edge(..) => unreachable!(),
    };
    Ok(DeltaCertificate {
        k: cert.k,
        vertices: cert.vertices,
        node: CertNode::Triangle {
            roots: order.map(|i| roots[i]),
            parts: Box::new(order.map(|i| ps[i].clone())),
        },
    })
}

// ---- orbit bounds -------------------------------------------------------

/// Largest member accepted by [`orbit_lower_bound_check`].
pub const ORBIT_CHECK_LIMIT: usize = 18;

/// Orbit-count lower bounds for a member and, at `k >= 1`, the equalities
/// relating `norb(G)` to the rooted orbit counts of its parts.
pub fn orbit_lower_bound_check(g: &Graph, cert: &DeltaCertificate) -> Result<Report> {
    if g.n() > ORBIT_CHECK_LIMIT {
        return Err(Error::TooLarge {
            n: g.n(),
            limit: ORBIT_CHECK_LIMIT,
        });
    }
    cert.validate(g)?;
    let k = cert.k;
    let mut r = Report::new();
    let rooted_bound = 1usize << (k + 1);
    for v in 0..g.n() {
        let c = automorphism_orbits(g, Some(v)).count();
        r.at_least(format!("norb_rooted.{}", g.label(v)), rooted_bound, c);
    }
    if k == 0 {
        return Ok(r);
    }
    let norb = automorphism_orbits(g, None).count();
    let ty = classify_type(g, cert)?;
    let factor = match ty.tag {
        DeltaTag::A => 1,
        DeltaTag::B => 2,
        DeltaTag::C => 3,
    };
    r.at_least(format!("norb.type{:?}", ty.tag), factor << k, norb);
    let cert = normalize_parts(g, cert)?;
    let part_norb: Vec<usize> = (0..3)
        .map(|i| {
            let p = part_rooted(g, &cert, i);
            automorphism_orbits(&p.graph, Some(p.root)).count()
        })
        .collect();
    let expected = match ty.tag {
        DeltaTag::A => part_norb[0],
        DeltaTag::B => part_norb[0] + part_norb[1],
        DeltaTag::C => part_norb.iter().sum(),
    };
    r.equal("norb.factorization", expected, norb);
    Ok(r)
}

// ---- constructive layouts -------------------------------------------------

/// Ordering of the certified vertex set starting at `v` such that putting a
/// twin of `v` last gives width `k + 1`.
fn twin_order(cert: &DeltaCertificate, v: usize) -> Vec<usize> {
    match &cert.node {
        CertNode::Edge(x, y) => {
            if v == *x {
                vec![*x, *y]
            } else {
                vec![*y, *x]
            }
        }
        CertNode::Triangle { roots, parts } => {
            let home = parts
                .iter()
                .position(|p| bits::contains(p.vertices, v))
                .expect("start vertex inside certificate");
            let others: Vec<usize> = (0..3).filter(|&i| i != home).collect();
            let (first, last) = (others[0], others[1]);
            let mut order = vec![v];
            // first part ends at its root, last part starts at its root
            let mut lead = twin_order(&parts[first], roots[first]);
            lead.reverse();
            order.extend(lead);
            order.extend(twin_order(&parts[home], v).into_iter().skip(1));
            order.extend(twin_order(&parts[last], roots[last]));
            order
        }
    }
}

/// Layout of `g` starting at `v` and ending at its twin `w`, of width
/// `k + 1`, where `cert` certifies `g - w` (indices of `g`).
pub fn build_twin_layout(g: &Graph, cert: &DeltaCertificate, v: usize, w: usize) -> Result<Layout> {
    g.check_vertex(v)?;
    g.check_vertex(w)?;
    if !crate::graph::is_twin(g, v, w) {
        return Err(Error::Precondition(format!("{w} is not a twin of {v}")));
    }
    if cert.vertices != g.vertex_set() & !bits::bit(w) {
        return Err(Error::Precondition("certificate must cover every vertex except the twin".into()));
    }
    cert.validate(g)?;
    let mut order = twin_order(cert, v);
    order.push(w);
    Ok(Layout::new(order))
}

/// Layout of a member starting at `start` with width `k + 1`: add a twin
/// of `start`, build the twin layout, then drop the twin.
pub fn build_delta_layout(g: &Graph, cert: &DeltaCertificate, start: usize) -> Result<Layout> {
    g.check_vertex(start)?;
    let (with_twin, w) = add_twin(g, start, false)?;
    let layout = build_twin_layout(&with_twin, cert, start, w)?;
    Ok(Layout::new(layout.order.into_iter().filter(|&x| x != w).collect()))
}

// ---- verification ----------------------------------------------------

/// The three graphs excluded for linear rank-width at most 1: the 5-cycle,
/// the net, and the 4-cycle with pendants at two opposite vertices.
pub fn o1_graphs() -> Vec<(&'static str, Graph)> {
    let mut c4 = Graph::cycle(4);
    c4.add_vertex("4", bits::bit(0));
    c4.add_vertex("5", bits::bit(2));
    vec![("c5", Graph::cycle(5)), ("net", Graph::net()), ("c4_pendants", c4)]
}

/// Exact width `k + 1` and every elementary representative at most `k`.
pub fn verify_obstruction(g: &Graph, k: usize) -> Result<Report> {
    if g.n() > EXACT_LIMIT {
        return Err(Error::TooLarge {
            n: g.n(),
            limit: EXACT_LIMIT,
        });
    }
    let mut r = Report::new();
    let (w, _) = linear_rankwidth_exact(g)?;
    r.equal("lrw", k + 1, w);
    let minors: Vec<(usize, usize, usize)> = (0..g.n())
        .into_par_iter()
        .flat_map_iter(|v| {
            elementary_representatives(g, v)
                .expect("vertex in range")
                .into_iter()
                .enumerate()
                .map(move |(j, h)| (v, j, linear_rankwidth_exact(&h).expect("smaller graph").0))
                .collect::<Vec<_>>()
        })
        .collect();
    const KINDS: [&str; 3] = ["delete", "local", "pivot"];
    for (v, j, w) in minors {
        r.at_most(format!("minor.{}.{}", g.label(v), KINDS[j]), k, w);
    }
    Ok(r)
}

/// [`verify_obstruction`] for a recognized member of `Δ_k`.
pub fn verify_excluded(g: &Graph, k: usize) -> Result<Report> {
    if g.n() > EXACT_LIMIT {
        return Err(Error::LevelOutOfRange {
            k,
            reason: "exact linear rank-width needs at most 20 vertices",
        });
    }
    recognize_delta(g)
        .filter(|c| c.k == k)
        .ok_or_else(|| Error::Precondition(format!("graph is not a member of level {k}")))?;
    verify_obstruction(g, k)
}

/// Bridge joins and delta compositions with one low-width part keep the
/// width at exactly `k`.
pub fn verify_composition_lemmas(k: usize) -> Result<Report> {
    if !(1..=2).contains(&k) {
        return Err(Error::LevelOutOfRange {
            k,
            reason: "composition checks support k in {1, 2}",
        });
    }
    let prev = enumerate_rooted_members(k - 1)?;
    let mut r = Report::new();
    for i in 0..prev.len() {
        for j in i..prev.len() {
            let (g1, g2) = (&prev[i].member.graph, &prev[j].member.graph);
            let mut g = g1.disjoint_union(g2);
            g.add_edge(prev[i].root, g1.n() + prev[j].root);
            let (w, _) = linear_rankwidth_exact(&g)?;
            r.equal(format!("bridge.{i}.{j}"), k, w);
        }
    }
    // third parts: every graph on at most six vertices of width <= k-1,
    // rooted once per orbit
    let thirds: Vec<RootedGraph> = (1..=6)
        .flat_map(corpus::all_graphs)
        .filter(|h| linear_rankwidth_exact(h).map(|(w, _)| w + 1 <= k).unwrap_or(false))
        .flat_map(|h| {
            automorphism_orbits(&h, None)
                .classes
                .into_iter()
                .map(move |c| RootedGraph {
                    graph: h.clone(),
                    root: c[0],
                })
        })
        .collect();
    let mut jobs = Vec::new();
    for i in 0..prev.len() {
        for j in i..prev.len() {
            for (t, third) in thirds.iter().enumerate() {
                jobs.push((i, j, t, third));
            }
        }
    }
    let results: Vec<(usize, usize, usize, usize)> = jobs
        .into_par_iter()
        .map(|(i, j, t, third)| {
            let g = delta_compose(&prev[i].rooted_graph(), &prev[j].rooted_graph(), third);
            (i, j, t, linear_rankwidth_exact(&g).expect("at most 18 vertices").0)
        })
        .collect();
    let mut bad = 0;
    for &(i, j, t, w) in &results {
        if w != k {
            bad += 1;
            r.equal(format!("compose.{i}.{j}.third{t}"), k, w);
        }
    }
    r.equal("compose.failures", 0, bad);
    r.equal("compose.cases", results.len(), results.len());
    Ok(r)
}

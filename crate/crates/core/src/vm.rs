//! Local complementation, pivoting and vertex-minors.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::bits;
use crate::error::{parse_err, Error, Result};
use crate::graph::Graph;
use crate::iso::{canonical_form, CanonicalForm};

/// Default cap on the number of states explored by [`local_orbit`].
pub const DEFAULT_ORBIT_CAP: usize = 1_000_000;
/// Largest graph accepted by the orbit search.
pub const ORBIT_MAX_VERTICES: usize = 10;

/// `G*v`: complement the subgraph induced on `N(v)`.
pub fn local_complement(g: &Graph, v: usize) -> Result<Graph> {
    g.check_vertex(v)?;
    let mut h = g.clone();
    let nv = g.neighbors(v);
    let adj = h.adj_mut();
    for x in bits::iter(nv) {
        adj[x] ^= nv & !bits::bit(x);
    }
    Ok(h)
}

/// `G∧uv = G*u*v*u`.
pub fn pivot(g: &Graph, u: usize, v: usize) -> Result<Graph> {
    check_edge(g, u, v)?;
    let h = local_complement(g, u)?;
    let h = local_complement(&h, v)?;
    local_complement(&h, u)
}

/// Pivot by its three-set description: complement adjacency between
/// `N(u)∩N(v)`, `N(u)-N(v)-v` and `N(v)-N(u)-u`, then exchange the
/// neighborhoods of `u` and `v`.
pub fn pivot_direct(g: &Graph, u: usize, v: usize) -> Result<Graph> {
    check_edge(g, u, v)?;
    let (nu, nv) = (g.neighbors(u), g.neighbors(v));
    let both = nu & nv;
    let only_u = nu & !nv & !bits::bit(v);
    let only_v = nv & !nu & !bits::bit(u);
    let mut h = g.clone();
    for (a, b) in [(both, only_u), (both, only_v), (only_u, only_v)] {
        for x in bits::iter(a) {
            for y in bits::iter(b) {
                h.toggle_edge(x, y);
            }
        }
    }
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.swap(u, v);
    let mut swapped = h.permuted(&order);
    swapped.swap_labels(u, v);
    Ok(swapped)
}

fn check_edge(g: &Graph, u: usize, v: usize) -> Result<()> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if g.has_edge(u, v) {
        Ok(())
    } else {
        Err(Error::NotAnEdge(u, v))
    }
}

pub fn delete(g: &Graph, v: usize) -> Result<Graph> {
    g.check_vertex(v)?;
    Ok(g.without(v))
}

/// Representatives of the elementary vertex-minors obtained by removing
/// `v`: `G-v`, `G*v-v` and, when `v` has a neighbor, `G∧vw-v` for its
/// lowest-index neighbor `w`. Every elementary vertex-minor deleting `v`
/// is locally equivalent to one of these.
pub fn elementary_representatives(g: &Graph, v: usize) -> Result<Vec<Graph>> {
    g.check_vertex(v)?;
    let mut out = vec![g.without(v), local_complement(g, v)?.without(v)];
    if let Some(w) = bits::iter(g.neighbors(v)).next() {
        out.push(pivot(g, v, w)?.without(v));
    }
    Ok(out)
}

/// Adds a twin `w` of `v` (adjacent to `v` iff `adjacent`); returns the
/// new graph and the index of `w`.
pub fn add_twin(g: &Graph, v: usize, adjacent: bool) -> Result<(Graph, usize)> {
    g.check_vertex(v)?;
    let mut h = g.clone();
    let mut nbrs = g.neighbors(v);
    if adjacent {
        nbrs |= bits::bit(v);
    }
    let label = h.fresh_label(&format!("{}~", g.label(v)));
    let w = h.add_vertex(label, nbrs);
    Ok((h, w))
}

/// Closure of `g` under local complementation, as unlabeled graphs.
pub fn local_orbit(g: &Graph, max_size: usize) -> Result<BTreeSet<CanonicalForm>> {
    if g.n() > ORBIT_MAX_VERTICES {
        return Err(Error::TooLarge {
            n: g.n(),
            limit: ORBIT_MAX_VERTICES,
        });
    }
    let start = canonical_form(g);
    let mut seen = BTreeSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(cf) = queue.pop_front() {
        let h = cf.to_graph();
        for v in 0..h.n() {
            let next = canonical_form(&local_complement(&h, v)?);
            if !seen.contains(&next) {
                if seen.len() >= max_size {
                    return Err(Error::OrbitOverflow(max_size));
                }
                seen.insert(next.clone());
                queue.push_back(next);
            }
        }
    }
    Ok(seen)
}

/// Whether `g2` is (as an unlabeled graph) reachable from `g1` by local
/// complementations.
pub fn locally_equivalent_small(g1: &Graph, g2: &Graph) -> Result<bool> {
    if g1.n() != g2.n() {
        return Err(Error::Precondition(format!(
            "vertex counts differ: {} vs {}",
            g1.n(),
            g2.n()
        )));
    }
    if g2.n() > ORBIT_MAX_VERTICES {
        return Err(Error::TooLarge {
            n: g2.n(),
            limit: ORBIT_MAX_VERTICES,
        });
    }
    Ok(local_orbit(g1, DEFAULT_ORBIT_CAP)?.contains(&canonical_form(g2)))
}

/// One vertex-minor operation; text form `L v`, `P u v` or `D v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VertexMinorStep {
    LocalComplement(usize),
    Pivot(usize, usize),
    Delete(usize),
}

impl VertexMinorStep {
    pub fn apply(&self, g: &Graph) -> Result<Graph> {
        match *self {
            VertexMinorStep::LocalComplement(v) => local_complement(g, v),
            VertexMinorStep::Pivot(u, v) => pivot(g, u, v),
            VertexMinorStep::Delete(v) => delete(g, v),
        }
    }
}

pub fn apply_steps(g: &Graph, steps: &[VertexMinorStep]) -> Result<Graph> {
    steps.iter().try_fold(g.clone(), |h, s| s.apply(&h))
}

impl fmt::Display for VertexMinorStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexMinorStep::LocalComplement(v) => write!(f, "L {v}"),
            VertexMinorStep::Pivot(u, v) => write!(f, "P {u} {v}"),
            VertexMinorStep::Delete(v) => write!(f, "D {v}"),
        }
    }
}

impl FromStr for VertexMinorStep {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let toks: Vec<&str> = s.split_whitespace().collect();
        let num = |t: &str| {
            t.parse::<usize>()
                .map_err(|_| parse_err(1, format!("bad vertex {t:?}")))
        };
        match toks.as_slice() {
            ["L", v] => Ok(VertexMinorStep::LocalComplement(num(v)?)),
            ["P", u, v] => Ok(VertexMinorStep::Pivot(num(u)?, num(v)?)),
            ["D", v] => Ok(VertexMinorStep::Delete(num(v)?)),
            _ => Err(parse_err(1, format!("bad step {s:?}"))),
        }
    }
}

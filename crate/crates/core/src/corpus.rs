//! Test corpora: exhaustive small-graph classes and seeded random families.
//!
//! All randomness flows from a single `u64` seed through ChaCha8, so a
//! corpus is reproducible from its seed alone.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bits;
use crate::graph::Graph;
use crate::iso::canonical_form;

/// Seed used when none is given.
pub const DEFAULT_SEED: u64 = 20_240_611;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// One representative per isomorphism class of graphs on `n` vertices.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    let mut level: BTreeSet<_> = BTreeSet::from([canonical_form(&Graph::empty(0))]);
    for m in 0..n {
        let mut next = BTreeSet::new();
        for cf in &level {
            let g = cf.to_graph();
            for nbrs in 0..(1u128 << m) {
                let mut h = g.clone();
                h.add_vertex(m.to_string(), nbrs);
                next.insert(canonical_form(&h));
            }
        }
        level = next;
    }
    level.into_iter().map(|cf| cf.to_graph()).collect()
}

/// One representative per isomorphism class of trees on `n >= 1` vertices.
pub fn trees(n: usize) -> Vec<Graph> {
    assert!(n >= 1);
    let mut level: BTreeSet<_> = BTreeSet::from([canonical_form(&Graph::empty(1))]);
    for m in 1..n {
        let mut next = BTreeSet::new();
        for cf in &level {
            let g = cf.to_graph();
            for v in 0..m {
                let mut h = g.clone();
                h.add_vertex(m.to_string(), bits::bit(v));
                next.insert(canonical_form(&h));
            }
        }
        level = next;
    }
    level.into_iter().map(|cf| cf.to_graph()).collect()
}

/// Connected graph: random spanning tree plus each other pair with
/// probability `p`.
pub fn random_connected_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut g = Graph::empty(n);
    for v in 1..n {
        let u = rng.gen_range(0..v);
        g.add_edge(u, v);
    }
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u, v) && rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    shuffle_vertices(rng, &g)
}

pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Connected distance-hereditary graph grown from one vertex by pendant,
/// false-twin and true-twin extensions.
pub fn random_dh_graph<R: Rng>(rng: &mut R, n: usize) -> Graph {
    let mut g = Graph::empty(1);
    while g.n() < n {
        let x = rng.gen_range(0..g.n());
        let label = g.n().to_string();
        let op = if g.degree(x) == 0 {
            rng.gen_range(0..2) * 2
        } else {
            rng.gen_range(0..3)
        };
        let nbrs = match op {
            0 => bits::bit(x),
            1 => g.neighbors(x),
            _ => g.neighbors(x) | bits::bit(x),
        };
        g.add_vertex(label, nbrs);
    }
    shuffle_vertices(rng, &g)
}

/// Connected block graph built by gluing new cliques at existing vertices
/// and enlarging existing blocks.
pub fn random_block_graph<R: Rng>(rng: &mut R, n: usize) -> Graph {
    let mut g = Graph::empty(1);
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    while g.n() < n {
        if !blocks.is_empty() && rng.gen_bool(0.3) {
            let b = rng.gen_range(0..blocks.len());
            let nbrs = bits::from_iter(blocks[b].iter().copied());
            let v = g.add_vertex(g.n().to_string(), nbrs);
            blocks[b].push(v);
        } else {
            let x = rng.gen_range(0..g.n());
            let size = rng.gen_range(1..=3).min(n - g.n());
            let mut block = vec![x];
            for _ in 0..size {
                let nbrs = bits::from_iter(block.iter().copied());
                let v = g.add_vertex(g.n().to_string(), nbrs);
                block.push(v);
            }
            blocks.push(block);
        }
    }
    shuffle_vertices(rng, &g)
}

/// The same graph with vertex indices permuted at random; labels follow
/// their vertices.
pub fn shuffle_vertices<R: Rng>(rng: &mut R, g: &Graph) -> Graph {
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.shuffle(rng);
    g.permuted(&order)
}

pub fn random_subset<R: Rng>(rng: &mut R, n: usize) -> bits::VSet {
    (0..n).filter(|_| rng.gen_bool(0.5)).fold(0, |acc, v| acc | bits::bit(v))
}

//! Independent oracles shared by the integration tests. Nothing here calls
//! into the rank, split or delta modules.

#![allow(dead_code)]

use vmtk_core::Graph;

pub fn adjacency_rows(g: &Graph) -> Vec<u128> {
    (0..g.n())
        .map(|u| (0..g.n()).filter(|&v| g.has_edge(u, v)).fold(0, |acc, v| acc | 1u128 << v))
        .collect()
}

/// Rank over GF(2) by Gaussian elimination on a copy of the rows.
pub fn rank2(mut rows: Vec<u128>) -> usize {
    let mut rank = 0;
    for col in 0..128 {
        let Some(p) = (rank..rows.len()).find(|&i| rows[i] >> col & 1 == 1) else {
            continue;
        };
        rows.swap(rank, p);
        for i in 0..rows.len() {
            if i != rank && rows[i] >> col & 1 == 1 {
                rows[i] ^= rows[rank];
            }
        }
        rank += 1;
    }
    rank
}

pub fn cut_rank(rows: &[u128], x: u128) -> usize {
    let rest = !x & ((1u128 << rows.len()) - 1);
    rank2((0..rows.len()).filter(|&v| x >> v & 1 == 1).map(|v| rows[v] & rest).collect())
}

pub fn width_of(g: &Graph, order: &[usize]) -> usize {
    let rows = adjacency_rows(g);
    let mut x = 0u128;
    let mut w = 0;
    for &v in order {
        x |= 1 << v;
        w = w.max(cut_rank(&rows, x));
    }
    w
}

/// Minimum width over all `n!` orders.
pub fn brute_force_lrw(g: &Graph) -> usize {
    fn go(rows: &[u128], placed: u128, width: usize, best: &mut usize) {
        let n = rows.len();
        if width >= *best {
            return;
        }
        if placed.count_ones() as usize == n {
            *best = width;
            return;
        }
        for v in 0..n {
            if placed >> v & 1 == 0 {
                let s = placed | 1 << v;
                go(rows, s, width.max(cut_rank(rows, s)), best);
            }
        }
    }
    let rows = adjacency_rows(g);
    let mut best = usize::MAX;
    go(&rows, 0, 0, &mut best);
    if g.n() == 0 {
        0
    } else {
        best
    }
}

fn bfs(rows: &[u128], within: u128, s: usize) -> Vec<Option<usize>> {
    let mut d = vec![None; rows.len()];
    d[s] = Some(0);
    let mut queue = std::collections::VecDeque::from([s]);
    while let Some(u) = queue.pop_front() {
        for v in 0..rows.len() {
            if within >> v & 1 == 1 && rows[u] >> v & 1 == 1 && d[v].is_none() {
                d[v] = Some(d[u].unwrap() + 1);
                queue.push_back(v);
            }
        }
    }
    d
}

/// Every connected induced subgraph preserves distances.
pub fn is_distance_hereditary_oracle(g: &Graph) -> bool {
    let n = g.n();
    let rows = adjacency_rows(g);
    let all = (1u128 << n) - 1;
    let full: Vec<Vec<Option<usize>>> = (0..n).map(|s| bfs(&rows, all, s)).collect();
    for h in 1..=all {
        let members: Vec<usize> = (0..n).filter(|&v| h >> v & 1 == 1).collect();
        let d0 = bfs(&rows, h, members[0]);
        if members.iter().any(|&v| d0[v].is_none()) {
            continue;
        }
        for &s in &members {
            let d = bfs(&rows, h, s);
            if members.iter().any(|&t| d[t] != full[s][t]) {
                return false;
            }
        }
    }
    true
}

fn is_clique(rows: &[u128], vs: &[usize]) -> bool {
    vs.iter().enumerate().all(|(i, &u)| vs[i + 1..].iter().all(|&v| rows[u] >> v & 1 == 1))
}

/// Block graphs are exactly the chordal graphs without an induced diamond.
pub fn is_block_graph_oracle(g: &Graph) -> bool {
    let n = g.n();
    let rows = adjacency_rows(g);
    let mut left: Vec<usize> = (0..n).collect();
    while !left.is_empty() {
        let pos = left.iter().position(|&v| {
            let nb: Vec<usize> = left.iter().copied().filter(|&u| rows[v] >> u & 1 == 1).collect();
            is_clique(&rows, &nb)
        });
        match pos {
            Some(p) => {
                left.remove(p);
            }
            None => return false,
        }
    }
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    let q = [a, b, c, d];
                    let edges: usize = (0..4)
                        .flat_map(|i| (i + 1..4).map(move |j| (i, j)))
                        .filter(|&(i, j)| rows[q[i]] >> q[j] & 1 == 1)
                        .count();
                    if edges == 5 {
                        return false;
                    }
                }
            }
        }
    }
    true
}

pub fn has_big_simplicial_oracle(g: &Graph) -> bool {
    let rows = adjacency_rows(g);
    (0..g.n()).any(|v| {
        let nb: Vec<usize> = (0..g.n()).filter(|&u| rows[v] >> u & 1 == 1).collect();
        nb.len() >= 2 && is_clique(&rows, &nb)
    })
}

/// Local complementation written directly from the definition.
pub fn lc_oracle(g: &Graph, v: usize) -> Graph {
    let mut h = g.clone();
    let nb: Vec<usize> = (0..g.n()).filter(|&u| g.has_edge(v, u)).collect();
    for (i, &a) in nb.iter().enumerate() {
        for &b in &nb[i + 1..] {
            if h.has_edge(a, b) {
                h.remove_edge(a, b);
            } else {
                h.add_edge(a, b);
            }
        }
    }
    h
}

pub fn binom(n: u128, k: u128) -> u128 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

//! Cut-rank over GF(2), layout widths and linear rank-width.

use std::collections::HashSet;

use crate::bits::{self, VSet};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest graph handled by [`linear_rankwidth_exact`].
pub const EXACT_LIMIT: usize = 20;
/// Default number of search states for [`lrw_at_most`].
pub const DEFAULT_BUDGET: u64 = 5_000_000;

/// `A(G)[X, V-X]`, one bit-packed row per member of `X`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutMatrix {
    pub rows: Vec<VSet>,
}

impl CutMatrix {
    pub fn of(g: &Graph, x: VSet) -> Self {
        let rest = g.vertex_set() & !x;
        CutMatrix {
            rows: bits::iter(x).map(|v| g.neighbors(v) & rest).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        gf2_rank(&self.rows)
    }
}

/// Rank over GF(2) of bit-packed rows.
pub fn gf2_rank(rows: &[VSet]) -> usize {
    let mut basis = [0u128; 128];
    let mut rank = 0;
    for &row in rows {
        let mut r = row;
        while r != 0 {
            let h = 127 - r.leading_zeros() as usize;
            if basis[h] == 0 {
                basis[h] = r;
                rank += 1;
                break;
            }
            r ^= basis[h];
        }
    }
    rank
}

fn gf2_rank_u32(rows: impl Iterator<Item = u32>) -> u8 {
    let mut basis = [0u32; 32];
    let mut rank = 0;
    for row in rows {
        let mut r = row;
        while r != 0 {
            let h = 31 - r.leading_zeros() as usize;
            if basis[h] == 0 {
                basis[h] = r;
                rank += 1;
                break;
            }
            r ^= basis[h];
        }
    }
    rank
}

fn check_subset(g: &Graph, x: VSet) -> Result<()> {
    if x & !g.vertex_set() != 0 {
        Err(Error::InvalidSet(format!(
            "contains vertices outside 0..{}",
            g.n()
        )))
    } else {
        Ok(())
    }
}

pub(crate) fn cutrank_unchecked(g: &Graph, x: VSet) -> usize {
    let rest = g.vertex_set() & !x;
    let (small, other) = if bits::len(x) <= bits::len(rest) {
        (x, rest)
    } else {
        (rest, x)
    };
    let rows: Vec<VSet> = bits::iter(small).map(|v| g.neighbors(v) & other).collect();
    gf2_rank(&rows)
}

/// `cutrk_G(X)`.
pub fn cutrank(g: &Graph, x: VSet) -> Result<usize> {
    check_subset(g, x)?;
    Ok(cutrank_unchecked(g, x))
}

/// A linear ordering of all vertices of a graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Layout {
    pub order: Vec<usize>,
}

impl Layout {
    pub fn new(order: Vec<usize>) -> Self {
        Layout { order }
    }

    pub fn validate(&self, g: &Graph) -> Result<()> {
        if self.order.len() != g.n() {
            return Err(Error::InvalidLayout(format!(
                "{} entries for {} vertices",
                self.order.len(),
                g.n()
            )));
        }
        let mut seen: VSet = 0;
        for &v in &self.order {
            if v >= g.n() || bits::contains(seen, v) {
                return Err(Error::InvalidLayout(format!("vertex {v} repeated or unknown")));
            }
            seen |= bits::bit(v);
        }
        Ok(())
    }

    /// `self ⊕ other`.
    pub fn concat(&self, other: &Layout) -> Layout {
        let mut order = self.order.clone();
        order.extend_from_slice(&other.order);
        Layout { order }
    }

    pub fn reversed(&self) -> Layout {
        Layout {
            order: self.order.iter().rev().copied().collect(),
        }
    }

    pub fn labels<'g>(&self, g: &'g Graph) -> Vec<&'g str> {
        self.order.iter().map(|&v| g.label(v)).collect()
    }
}

/// Prefix cut-ranks of a layout, one per position.
pub fn prefix_cutranks(g: &Graph, l: &Layout) -> Result<Vec<usize>> {
    l.validate(g)?;
    let mut prefix = 0;
    Ok(l.order
        .iter()
        .map(|&v| {
            prefix |= bits::bit(v);
            cutrank_unchecked(g, prefix)
        })
        .collect())
}

pub fn layout_width(g: &Graph, l: &Layout) -> Result<usize> {
    Ok(prefix_cutranks(g, l)?.into_iter().max().unwrap_or(0))
}

/// Exact linear rank-width by dynamic programming over vertex subsets,
/// with a witness layout of that width.
///
/// `f(S) = max(cutrk(S), min_{v in S} f(S - v))`, ties broken towards the
/// lowest vertex index.
pub fn linear_rankwidth_exact(g: &Graph) -> Result<(usize, Layout)> {
    let n = g.n();
    if n > EXACT_LIMIT {
        return Err(Error::TooLarge {
            n,
            limit: EXACT_LIMIT,
        });
    }
    if n == 0 {
        return Ok((0, Layout::new(Vec::new())));
    }
    let adj: Vec<u32> = g.raw_adjacency().iter().map(|&a| a as u32).collect();
    let full: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let size = 1usize << n;
    let mut best = vec![0u8; size];
    let mut last = vec![0u8; size];
    for s in 1..size {
        let s32 = s as u32;
        let rest = full & !s32;
        let cut = gf2_rank_u32(bits_u32(s32).map(|v| adj[v] & rest));
        let mut choice = 0;
        let mut inner = u8::MAX;
        for v in bits_u32(s32) {
            let f = best[s & !(1 << v)];
            if f < inner {
                inner = f;
                choice = v;
            }
        }
        best[s] = inner.max(cut);
        last[s] = choice as u8;
    }
    let mut order = Vec::with_capacity(n);
    let mut s = size - 1;
    while s != 0 {
        let v = last[s] as usize;
        order.push(v);
        s &= !(1 << v);
    }
    order.reverse();
    Ok((best[size - 1] as usize, Layout::new(order)))
}

fn bits_u32(mut s: u32) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if s == 0 {
            None
        } else {
            let v = s.trailing_zeros() as usize;
            s &= s - 1;
            Some(v)
        }
    })
}

/// Decides `lrw(g) <= t` by depth-first search over layout prefixes.
///
/// Returns a witness layout when the answer is yes. Exhausting `budget`
/// search states is an error, not a "no".
pub fn lrw_at_most(g: &Graph, t: usize, budget: u64) -> Result<Option<Layout>> {
    struct Search<'a> {
        g: &'a Graph,
        t: usize,
        budget: u64,
        spent: u64,
        failed: HashSet<VSet>,
        order: Vec<usize>,
    }

    impl Search<'_> {
        fn run(&mut self, mut s: VSet) -> Result<bool> {
            let all = self.g.vertex_set();
            let mark = self.order.len();
            // vertices whose neighbors are all placed never raise the cut-rank
            loop {
                let free = bits::iter(all & !s).find(|&v| self.g.neighbors(v) & !s == 0);
                match free {
                    Some(v) => {
                        s |= bits::bit(v);
                        self.order.push(v);
                    }
                    None => break,
                }
            }
            if s == all {
                return Ok(true);
            }
            if self.failed.contains(&s) {
                self.order.truncate(mark);
                return Ok(false);
            }
            self.spent += 1;
            if self.spent > self.budget {
                return Err(Error::BudgetExhausted(self.budget));
            }
            let mut options: Vec<(usize, usize)> = bits::iter(all & !s)
                .map(|v| (cutrank_unchecked(self.g, s | bits::bit(v)), v))
                .filter(|&(c, _)| c <= self.t)
                .collect();
            options.sort_unstable();
            for (_, v) in options {
                self.order.push(v);
                if self.run(s | bits::bit(v))? {
                    return Ok(true);
                }
                self.order.pop();
            }
            self.failed.insert(s);
            self.order.truncate(mark);
            Ok(false)
        }
    }

    let mut search = Search {
        g,
        t,
        budget,
        spent: 0,
        failed: HashSet::new(),
        order: Vec::with_capacity(g.n()),
    };
    if search.run(0)? {
        Ok(Some(Layout::new(search.order)))
    } else {
        Ok(None)
    }
}

/// `cutrk(X) + cutrk(Y) >= cutrk(X ∩ Y) + cutrk(X ∪ Y)`.
pub fn check_submodularity(g: &Graph, x: VSet, y: VSet) -> Result<bool> {
    check_subset(g, x)?;
    check_subset(g, y)?;
    let c = |s| cutrank_unchecked(g, s);
    Ok(c(x) + c(y) >= c(x & y) + c(x | y))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_examples() {
        assert_eq!(gf2_rank(&[0, 0, 0]), 0);
        assert_eq!(gf2_rank(&[0b100, 0b010, 0b001]), 3);
        assert_eq!(gf2_rank(&[0b110, 0b011, 0b101]), 2);
        assert_eq!(gf2_rank(&[]), 0);
    }

    #[test]
    fn cutrank_examples() {
        let k5 = Graph::complete(5);
        assert_eq!(cutrank(&k5, 0b00110).unwrap(), 1);
        assert_eq!(cutrank(&Graph::cycle(5), 0b00011).unwrap(), 2);
        assert_eq!(cutrank(&Graph::cycle(5), 0).unwrap(), 0);
        assert_eq!(cutrank(&Graph::cycle(5), 0b11111).unwrap(), 0);
        assert!(cutrank(&Graph::cycle(5), 0b100000).is_err());
        assert_eq!(CutMatrix::of(&Graph::cycle(5), 0b11).rows.len(), 2);
    }

    #[test]
    fn width_examples() {
        let k2 = Graph::complete(2);
        assert_eq!(layout_width(&k2, &Layout::new(vec![1, 0])).unwrap(), 1);
        assert_eq!(layout_width(&Graph::empty(4), &Layout::new(vec![3, 1, 0, 2])).unwrap(), 0);
        assert_eq!(layout_width(&Graph::empty(0), &Layout::new(vec![])).unwrap(), 0);
        // leaf1, v1, leaf2, v2, leaf3, v3
        let net_layout = Layout::new(vec![3, 0, 4, 1, 5, 2]);
        assert_eq!(layout_width(&Graph::net(), &net_layout).unwrap(), 2);
        assert!(layout_width(&k2, &Layout::new(vec![0, 0])).is_err());
        assert!(layout_width(&k2, &Layout::new(vec![0])).is_err());
    }

    #[test]
    fn exact_examples() {
        assert_eq!(linear_rankwidth_exact(&Graph::complete(2)).unwrap().0, 1);
        let (w, l) = linear_rankwidth_exact(&Graph::net()).unwrap();
        assert_eq!(w, 2);
        assert_eq!(layout_width(&Graph::net(), &l).unwrap(), 2);
        assert_eq!(linear_rankwidth_exact(&Graph::cycle(5)).unwrap().0, 2);
        assert_eq!(linear_rankwidth_exact(&Graph::empty(0)).unwrap().0, 0);
        assert_eq!(linear_rankwidth_exact(&Graph::empty(1)).unwrap().0, 0);
        assert_eq!(
            linear_rankwidth_exact(&Graph::path(21)),
            Err(Error::TooLarge { n: 21, limit: 20 })
        );
    }

    #[test]
    fn decision_examples() {
        assert_eq!(lrw_at_most(&Graph::net(), 1, DEFAULT_BUDGET).unwrap(), None);
        let l = lrw_at_most(&Graph::net(), 2, DEFAULT_BUDGET).unwrap().unwrap();
        assert!(layout_width(&Graph::net(), &l).unwrap() <= 2);
        assert!(lrw_at_most(&Graph::empty(7), 0, DEFAULT_BUDGET).unwrap().is_some());
        assert_eq!(
            lrw_at_most(&Graph::cycle(12), 1, 1),
            Err(Error::BudgetExhausted(1))
        );
    }

    #[test]
    fn submodular_trivial_cases() {
        let g = Graph::net();
        assert!(check_submodularity(&g, 0b101, 0b101).unwrap());
        assert!(check_submodularity(&g, 0, 0b11).unwrap());
    }
}

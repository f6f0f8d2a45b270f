//! Path decompositions from vertex orderings and exact treewidth for small
//! graphs.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::ConstraintGraph;

/// Largest graph accepted by [`treewidth_exact`].
pub const EXACT_TREEWIDTH_LIMIT: usize = 16;

fn positions(g: &ConstraintGraph, order: &[usize]) -> Result<Vec<usize>> {
    let n = g.vertex_count();
    if order.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: order.len(),
        });
    }
    let mut pos = vec![usize::MAX; n];
    for (p, &v) in order.iter().enumerate() {
        if v >= n || pos[v] != usize::MAX {
            return Err(Error::invalid(format!("order is not a permutation of 0..{n}")));
        }
        pos[v] = p;
    }
    Ok(pos)
}

/// Bag `p` holds `order[p]` and every earlier vertex with a neighbour at
/// position `p` or later.
pub fn path_decomposition(g: &ConstraintGraph, order: &[usize]) -> Result<Vec<Vec<usize>>> {
    let pos = positions(g, order)?;
    // last position among a vertex and its neighbours
    let reach: Vec<usize> = (0..g.vertex_count())
        .map(|v| g.neighbors(v).iter().map(|&u| pos[u]).max().unwrap_or(0).max(pos[v]))
        .collect();
    Ok((0..order.len())
        .map(|p| {
            let mut bag: Vec<usize> = order[..p].iter().copied().filter(|&u| reach[u] >= p).collect();
            bag.push(order[p]);
            bag
        })
        .collect())
}

/// Width of [`path_decomposition`]: an upper bound on pathwidth and hence
/// on treewidth.
pub fn pathwidth_upper_bound(g: &ConstraintGraph, order: &[usize]) -> Result<usize> {
    let bags = path_decomposition(g, order)?;
    Ok(bags.iter().map(Vec::len).max().unwrap_or(1).saturating_sub(1))
}

/// Identity order, which for the Boolean counting encoding lists `x_{a,i}`
/// before `x_{b,j}` when `i < j` or `i = j, a < b`.
pub fn lexicographic_order(n: usize) -> Vec<usize> {
    (0..n).collect()
}

/// Whether `bags` (in path order) cover every edge and each vertex occupies
/// a contiguous run of bags.
pub fn is_path_decomposition(g: &ConstraintGraph, bags: &[Vec<usize>]) -> bool {
    let n = g.vertex_count();
    let mut first = vec![usize::MAX; n];
    let mut last = vec![0usize; n];
    for (p, bag) in bags.iter().enumerate() {
        for &v in bag {
            if v >= n {
                return false;
            }
            first[v] = first[v].min(p);
            last[v] = p;
        }
    }
    for v in 0..n {
        if first[v] == usize::MAX {
            return false;
        }
        if (first[v]..=last[v]).any(|p| !bags[p].contains(&v)) {
            return false;
        }
    }
    g.edges().all(|(u, v)| bags.iter().any(|b| b.contains(&u) && b.contains(&v)))
}

/// Exact treewidth by dynamic programming over vertex subsets:
/// `TW(S) = min_{v in S} max(TW(S - v), |Q(S - v, v)|)` where `Q(S, v)` is
/// the set of vertices outside `S + v` reachable from `v` through `S`.
pub fn treewidth_exact(g: &ConstraintGraph) -> Result<usize> {
    let n = g.vertex_count();
    if n > EXACT_TREEWIDTH_LIMIT {
        return Err(Error::Capacity {
            states: 1u128 << n,
            limit: 1u128 << EXACT_TREEWIDTH_LIMIT,
        });
    }
    if n == 0 {
        return Ok(0);
    }
    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &u| m | 1 << u))
        .collect();
    let q = |s: u32, v: usize| -> u32 {
        let mut seen = 1u32 << v;
        let mut frontier = 1u32 << v;
        let mut outside = 0u32;
        while frontier != 0 {
            let u = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let nb = adj[u] & !seen;
            seen |= nb;
            outside |= nb & !s;
            frontier |= nb & s;
        }
        outside.count_ones()
    };
    let full = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let mut tw = vec![i64::MAX; 1usize << n];
    tw[0] = -1;
    for s in 1..=full {
        let mut best = i64::MAX;
        let mut rest = s;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let without = s & !(1 << v);
            let cand = tw[without as usize].max(q(without, v) as i64);
            best = best.min(cand);
        }
        tw[s as usize] = best;
    }
    Ok(tw[full as usize].max(0) as usize)
}

/// Vertex sets of the bags, for display.
pub fn bag_sets(bags: &[Vec<usize>]) -> Vec<BTreeSet<usize>> {
    bags.iter().map(|b| b.iter().copied().collect()).collect()
}

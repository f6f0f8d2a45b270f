use std::collections::BTreeSet;

use crate::error::{Error, Result};

/// Simple undirected graph on `0..n`: no loops, no parallel edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstraintGraph {
    adjacency: Vec<BTreeSet<usize>>,
}

impl ConstraintGraph {
    pub fn new(n: usize) -> Self {
        ConstraintGraph {
            adjacency: vec![BTreeSet::new(); n],
        }
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = ConstraintGraph::new(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Adds `{u, v}`; self-loops are ignored.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.adjacency.len();
        if u >= n || v >= n {
            return Err(Error::invalid(format!("edge ({u}, {v}) outside 0..{n}")));
        }
        if u != v {
            self.adjacency[u].insert(v);
            self.adjacency[v].insert(u);
        }
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(BTreeSet::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &BTreeSet<usize> {
        &self.adjacency[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency.get(u).is_some_and(|s| s.contains(&v))
    }

    /// `d_G(v)`: number of distinct variables co-occurring with `v`.
    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(BTreeSet::len).collect()
    }

    /// Total degree of a vertex set.
    pub fn set_degree(&self, set: &[usize]) -> usize {
        set.iter().map(|&v| self.degree(v)).sum()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, nb)| nb.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Connected components as sorted vertex lists, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                i += 1;
                for &v in &self.adjacency[u] {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Size of a maximum clique by exhaustive search (small graphs only).
    pub fn max_clique_size(&self) -> usize {
        fn grow(g: &ConstraintGraph, clique: usize, cand: Vec<usize>, best: &mut usize) {
            if clique + cand.len() <= *best {
                return;
            }
            if cand.is_empty() {
                *best = (*best).max(clique);
                return;
            }
            for (i, &v) in cand.iter().enumerate() {
                let next: Vec<usize> = cand[i + 1..].iter().copied().filter(|&u| g.has_edge(u, v)).collect();
                grow(g, clique + 1, next, best);
            }
        }
        let mut best = 0;
        grow(self, 0, (0..self.vertex_count()).collect(), &mut best);
        best
    }
}

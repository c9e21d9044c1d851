//! Instance generators for the hardness constructions, their witness builders,
//! brute-force deciders for the source problems, and seeded random instances.

use std::collections::BTreeSet;

use crate::error::Result;
use crate::graph::{build_temporal_graph, TemporalGraph, Time, Vertex};

pub mod binpacking;
pub mod deciders;
pub mod gadget;
pub mod mcc_paths;
pub mod mcc_walks;
pub mod random;

pub use binpacking::{gen_binpacking_star, normalize_binpacking, witness_binpacking, BinPackingInstance};
pub use deciders::{decide_binpacking, decide_mcc, find_clique, find_packing};
pub use gadget::{gadget_instance, gen_gadget_h, ExitRule, Gadget};
pub use mcc_paths::{gen_mcc_paths, gen_mcc_paths_unchecked, witness_mcc_paths, McPathsLayout};
pub use mcc_walks::{gen_mcc_walks_star, witness_mcc_walks, McWalksLayout};

/// Collects vertices and time edges; repeated time edges collapse into one.
#[derive(Debug, Clone, Default)]
pub struct Builder {
    n: usize,
    edges: BTreeSet<(Vertex, Vertex, Time)>,
}

impl Builder {
    pub fn new() -> Self {
        Builder::default()
    }

    pub fn vertex(&mut self) -> Vertex {
        self.n += 1;
        self.n - 1
    }

    pub fn vertices(&mut self, count: usize) -> Vec<Vertex> {
        (0..count).map(|_| self.vertex()).collect()
    }

    pub fn edge(&mut self, a: Vertex, b: Vertex, t: Time) {
        self.edges.insert((a.min(b), a.max(b), t));
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn max_label(&self) -> Time {
        self.edges.iter().map(|e| e.2).max().unwrap_or(0)
    }

    /// Largest label other than `t`.
    pub fn max_label_except(&self, t: Time) -> Time {
        self.edges.iter().map(|e| e.2).filter(|&x| x != t).max().unwrap_or(0)
    }

    pub fn build(&self, lifetime: Time) -> Result<TemporalGraph> {
        let edges: Vec<_> = self.edges.iter().copied().collect();
        build_temporal_graph(self.n, lifetime, &edges)
    }
}

/// A properly colored graph with `k` parts of `n` vertices each.
///
/// Vertices are `(color, index)` with both coordinates 0-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredGraph {
    pub k: usize,
    pub n: usize,
    edges: BTreeSet<((usize, usize), (usize, usize))>,
}

impl ColoredGraph {
    pub fn new(k: usize, n: usize, edges: &[((usize, usize), (usize, usize))]) -> Result<Self> {
        let mut set = BTreeSet::new();
        for &(a, b) in edges {
            for (c, i) in [a, b] {
                if c >= k || i >= n {
                    return Err(crate::Error::PreconditionViolated(format!("vertex ({c},{i}) outside {k} colors of size {n}")));
                }
            }
            if a.0 == b.0 {
                return Err(crate::Error::PreconditionViolated(format!("edge inside color {}", a.0)));
            }
            set.insert((a.min(b), a.max(b)));
        }
        Ok(ColoredGraph { k, n, edges: set })
    }

    /// Every edge between the parts.
    pub fn complete(k: usize, n: usize) -> Self {
        let mut edges = BTreeSet::new();
        for i in 0..k {
            for j in i + 1..k {
                for a in 0..n {
                    for b in 0..n {
                        edges.insert(((i, a), (j, b)));
                    }
                }
            }
        }
        ColoredGraph { k, n, edges }
    }

    pub fn edges(&self) -> impl Iterator<Item = ((usize, usize), (usize, usize))> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, a: (usize, usize), b: (usize, usize)) -> bool {
        self.edges.contains(&(a.min(b), a.max(b)))
    }

    /// Edges between colors `i < j` as `(index in i, index in j)`, sorted.
    pub fn between(&self, i: usize, j: usize) -> Vec<(usize, usize)> {
        self.edges.iter().filter(|(a, b)| a.0 == i && b.0 == j).map(|(a, b)| (a.1, b.1)).collect()
    }
}

pub(crate) fn color_pairs(k: usize) -> Vec<(usize, usize)> {
    (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j))).collect()
}

use std::collections::BTreeSet;

use crate::error::{Error, Result};

pub type Vertex = usize;
pub type Time = u32;

/// An undirected time edge, stored with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TimeEdge {
    pub u: Vertex,
    pub v: Vertex,
    pub t: Time,
}

impl TimeEdge {
    pub fn new(a: Vertex, b: Vertex, t: Time) -> Self {
        TimeEdge { u: a.min(b), v: a.max(b), t }
    }

    pub fn touches(&self, x: Vertex) -> bool {
        self.u == x || self.v == x
    }

    pub fn other(&self, x: Vertex) -> Vertex {
        if self.u == x {
            self.v
        } else {
            self.u
        }
    }
}

/// Vertices `0..n`, lifetime `T` and a set of time edges with labels in `[1, T]`.
///
/// Edges are kept sorted by `(u, v, t)`; adjacency lists are sorted by `(t, neighbor)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TemporalGraph {
    n: usize,
    lifetime: Time,
    edges: Vec<TimeEdge>,
    adj: Vec<Vec<(Time, Vertex)>>,
}

pub fn build_temporal_graph(
    n: usize,
    lifetime: Time,
    edges: &[(Vertex, Vertex, Time)],
) -> Result<TemporalGraph> {
    let mut seen = BTreeSet::new();
    for &(a, b, t) in edges {
        for x in [a, b] {
            if x >= n {
                return Err(Error::VertexOutOfRange { vertex: x, n });
            }
        }
        if a == b {
            return Err(Error::SelfLoop { vertex: a, t });
        }
        if t == 0 || t > lifetime {
            return Err(Error::TimeOutOfRange { t, lifetime });
        }
        let e = TimeEdge::new(a, b, t);
        if !seen.insert(e) {
            return Err(Error::DuplicateTimeEdge { u: e.u, v: e.v, t });
        }
    }
    Ok(TemporalGraph::from_sorted(n, lifetime, seen.into_iter().collect()))
}

impl TemporalGraph {
    fn from_sorted(n: usize, lifetime: Time, edges: Vec<TimeEdge>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for e in &edges {
            adj[e.u].push((e.t, e.v));
            adj[e.v].push((e.t, e.u));
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        TemporalGraph { n, lifetime, edges, adj }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn lifetime(&self) -> Time {
        self.lifetime
    }

    pub fn time_edges(&self) -> &[TimeEdge] {
        &self.edges
    }

    pub fn num_time_edges(&self) -> usize {
        self.edges.len()
    }

    /// Time edges at `v` as `(label, neighbor)`, sorted.
    pub fn incident(&self, v: Vertex) -> &[(Time, Vertex)] {
        &self.adj[v]
    }

    pub fn has_time_edge(&self, a: Vertex, b: Vertex, t: Time) -> bool {
        a < self.n && b < self.n && self.edges.binary_search(&TimeEdge::new(a, b, t)).is_ok()
    }

    /// Sorted labels of the static edge `{a, b}`.
    pub fn labels(&self, a: Vertex, b: Vertex) -> Vec<Time> {
        if a >= self.n || b >= self.n {
            return Vec::new();
        }
        self.adj[a].iter().filter(|&&(_, w)| w == b).map(|&(t, _)| t).collect()
    }

    pub fn adjacent(&self, a: Vertex, b: Vertex) -> bool {
        a < self.n && self.adj[a].iter().any(|&(_, w)| w == b)
    }

    /// Smallest label on `{a, b}` strictly greater than `after`.
    pub fn next_label(&self, a: Vertex, b: Vertex, after: Time) -> Option<Time> {
        self.adj[a]
            .iter()
            .find(|&&(t, w)| w == b && t > after)
            .map(|&(t, _)| t)
    }

    /// Keeps only the time edges accepted by `keep`.
    pub fn retain(&mut self, mut keep: impl FnMut(&TimeEdge) -> bool) {
        let before = self.edges.len();
        self.edges.retain(|e| keep(e));
        if self.edges.len() != before {
            *self = TemporalGraph::from_sorted(self.n, self.lifetime, std::mem::take(&mut self.edges));
        }
    }

    /// In-place form of removing every edge at `a` or `b` with label `<= cutoff`.
    pub(crate) fn drop_dominated_pair(&mut self, a: Vertex, b: Vertex, cutoff: Time) {
        self.retain(|e| !(e.t <= cutoff && (e.touches(a) || e.touches(b))));
    }
}

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::error::{Error, Result};
use crate::graph::{TemporalGraph, Vertex};
use crate::walk::TemporalWalk;

pub type Edge = (Vertex, Vertex);

fn edge(a: Vertex, b: Vertex) -> Edge {
    (a.min(b), a.max(b))
}

/// A static simple graph on `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StaticGraph {
    pub n: usize,
    pub edges: BTreeSet<Edge>,
}

impl StaticGraph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = Edge>) -> Self {
        let edges = edges.into_iter().filter(|&(a, b)| a != b).map(|(a, b)| edge(a, b)).collect();
        StaticGraph { n, edges }
    }

    pub fn neighbors(&self) -> Vec<BTreeSet<Vertex>> {
        let mut nb = vec![BTreeSet::new(); self.n];
        for &(a, b) in &self.edges {
            nb[a].insert(b);
            nb[b].insert(a);
        }
        nb
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for &(a, b) in &self.edges {
            d[a] += 1;
            d[b] += 1;
        }
        d
    }

    pub fn has_edge(&self, a: Vertex, b: Vertex) -> bool {
        self.edges.contains(&edge(a, b))
    }

    pub fn components(&self) -> usize {
        let nb = self.neighbors();
        let mut seen = vec![false; self.n];
        let mut c = 0;
        for r in 0..self.n {
            if seen[r] {
                continue;
            }
            c += 1;
            seen[r] = true;
            let mut stack = vec![r];
            while let Some(v) = stack.pop() {
                for &w in &nb[v] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        c
    }

    pub fn without(&self, drop: &BTreeSet<Edge>) -> StaticGraph {
        StaticGraph { n: self.n, edges: self.edges.difference(drop).copied().collect() }
    }

    pub fn is_forest(&self) -> bool {
        self.edges.len() + self.components() == self.n
    }
}

pub fn underlying_graph(g: &TemporalGraph) -> StaticGraph {
    StaticGraph::new(g.n(), g.time_edges().iter().map(|e| (e.u, e.v)))
}

/// Complement of a breadth-first spanning forest grown from the smallest ids.
pub fn min_feedback_edge_set(g: &StaticGraph) -> BTreeSet<Edge> {
    let nb = g.neighbors();
    let mut seen = vec![false; g.n];
    let mut tree = BTreeSet::new();
    for r in 0..g.n {
        if seen[r] {
            continue;
        }
        seen[r] = true;
        let mut queue = VecDeque::from([r]);
        while let Some(v) = queue.pop_front() {
            for &w in &nb[v] {
                if !seen[w] {
                    seen[w] = true;
                    tree.insert(edge(v, w));
                    queue.push_back(w);
                }
            }
        }
    }
    g.edges.difference(&tree).copied().collect()
}

/// Repeatedly strips edges from vertices of degree one that are not in `keep`.
pub fn prune_degree_one(g: &StaticGraph, keep: &BTreeSet<Vertex>) -> StaticGraph {
    let mut nb = g.neighbors();
    let mut stack: Vec<Vertex> = (0..g.n).filter(|v| nb[*v].len() == 1 && !keep.contains(v)).collect();
    while let Some(v) = stack.pop() {
        if nb[v].len() != 1 {
            continue;
        }
        let w = *nb[v].iter().next().unwrap();
        nb[v].clear();
        nb[w].remove(&v);
        if nb[w].len() == 1 && !keep.contains(&w) {
            stack.push(w);
        }
    }
    let edges = g.edges.iter().copied().filter(|&(a, b)| nb[a].contains(&b)).collect();
    StaticGraph { n: g.n, edges }
}

pub fn interesting_vertices(
    g: &StaticGraph,
    terminals: &BTreeSet<Vertex>,
    feedback: &BTreeSet<Edge>,
) -> BTreeSet<Vertex> {
    let deg = g.degrees();
    let mut d: BTreeSet<Vertex> = terminals.clone();
    d.extend(feedback.iter().flat_map(|&(a, b)| [a, b]));
    d.extend((0..g.n).filter(|&v| deg[v] >= 3));
    d
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Segment {
    pub vertices: Vec<Vertex>,
    pub is_feedback: bool,
}

impl Segment {
    pub fn first(&self) -> Vertex {
        self.vertices[0]
    }

    pub fn last(&self) -> Vertex {
        *self.vertices.last().unwrap()
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.vertices.windows(2).map(|w| edge(w[0], w[1]))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SegmentDecomposition {
    pub feedback_edges: BTreeSet<Edge>,
    pub interesting: BTreeSet<Vertex>,
    pub segments: Vec<Segment>,
}

/// Splits `g - feedback` into maximal paths between interesting vertices; each
/// feedback edge is appended as its own one-edge segment.
pub fn decompose_segments(
    g: &StaticGraph,
    interesting: &BTreeSet<Vertex>,
    feedback: &BTreeSet<Edge>,
) -> Result<SegmentDecomposition> {
    let deg = g.degrees();
    if let Some(v) = (0..g.n).find(|v| deg[*v] >= 3 && !interesting.contains(v)) {
        return Err(Error::PreconditionViolated(format!("vertex {v} has degree {} but is not interesting", deg[v])));
    }
    if let Some(&(a, b)) = feedback.iter().find(|(a, b)| !interesting.contains(a) || !interesting.contains(b)) {
        return Err(Error::PreconditionViolated(format!("feedback edge {{{a},{b}}} has an uninteresting endpoint")));
    }
    let h = g.without(feedback);
    let nb = h.neighbors();
    let stop = |v: Vertex| interesting.contains(&v) || nb[v].len() != 2;
    let mut used: BTreeSet<Edge> = BTreeSet::new();
    let mut segments = Vec::new();
    let trace = |x: Vertex, y: Vertex, used: &mut BTreeSet<Edge>| -> Vec<Vertex> {
        let mut path = vec![x, y];
        used.insert(edge(x, y));
        let (mut prev, mut cur) = (x, y);
        while !stop(cur) && cur != x {
            let next = *nb[cur].iter().find(|&&w| w != prev).unwrap();
            used.insert(edge(cur, next));
            path.push(next);
            prev = cur;
            cur = next;
        }
        path
    };
    for x in (0..g.n).filter(|&v| stop(v)) {
        for &y in &nb[x] {
            if !used.contains(&edge(x, y)) {
                segments.push(Segment { vertices: trace(x, y, &mut used), is_feedback: false });
            }
        }
    }
    // Cycles without any stopping vertex are emitted as closed segments.
    for &(a, b) in &h.edges {
        if !used.contains(&(a, b)) {
            segments.push(Segment { vertices: trace(a, b, &mut used), is_feedback: false });
        }
    }
    for &(a, b) in feedback {
        segments.push(Segment { vertices: vec![a, b], is_feedback: true });
    }
    Ok(SegmentDecomposition { feedback_edges: feedback.clone(), interesting: interesting.clone(), segments })
}

/// The vertices of `g` end to end if its non-isolated part is a simple path.
pub fn line_order(g: &StaticGraph) -> Option<Vec<Vertex>> {
    let nb = g.neighbors();
    let present: Vec<Vertex> = (0..g.n).filter(|&v| !nb[v].is_empty()).collect();
    if present.is_empty() || g.edges.len() + 1 != present.len() {
        return None;
    }
    if present.iter().any(|&v| nb[v].len() > 2) {
        return None;
    }
    let start = *present.iter().find(|&&v| nb[v].len() == 1)?;
    let mut order = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    while let Some(&next) = nb[cur].iter().find(|&&w| w != prev) {
        order.push(next);
        prev = cur;
        cur = next;
    }
    (order.len() == present.len()).then_some(order)
}

/// Position of every line vertex.
pub fn line_positions(order: &[Vertex]) -> BTreeMap<Vertex, usize> {
    order.iter().enumerate().map(|(i, &v)| (v, i)).collect()
}

/// Vertices at which the walk reverses its direction along the line, in walk order.
pub fn turn_vertices(w: &TemporalWalk, order: &[Vertex]) -> Result<Vec<Vertex>> {
    let pos = line_positions(order);
    let at = |v: Vertex| pos.get(&v).copied().ok_or(Error::VertexNotOnLine(v));
    at(w.start)?;
    let mut turns = Vec::new();
    let mut last_dir: Option<bool> = None;
    for tr in &w.transitions {
        let (a, b) = (at(tr.from)?, at(tr.to)?);
        let up = b > a;
        if last_dir.is_some_and(|d| d != up) {
            turns.push(tr.from);
        }
        last_dir = Some(up);
    }
    Ok(turns)
}

pub fn direction_changes(w: &TemporalWalk, order: &[Vertex]) -> Result<usize> {
    turn_vertices(w, order).map(|t| t.len())
}

use crate::error::{Error, Result};
use crate::graph::{TemporalGraph, Time, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Transition {
    pub from: Vertex,
    pub to: Vertex,
    pub t: Time,
}

/// A start vertex plus a chain of transitions.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TemporalWalk {
    pub start: Vertex,
    pub transitions: Vec<Transition>,
}

/// Vertex `vertex` is held during the closed interval `[from, to]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct OccupancyInterval {
    pub vertex: Vertex,
    pub from: Time,
    pub to: Time,
}

impl TemporalWalk {
    pub fn empty(start: Vertex) -> Self {
        TemporalWalk { start, transitions: Vec::new() }
    }

    /// Builds a walk from `start` and `(label, next vertex)` hops.
    pub fn from_hops(start: Vertex, hops: &[(Time, Vertex)]) -> Self {
        let mut cur = start;
        let transitions = hops
            .iter()
            .map(|&(t, to)| {
                let tr = Transition { from: cur, to, t };
                cur = to;
                tr
            })
            .collect();
        TemporalWalk { start, transitions }
    }

    pub fn len(&self) -> usize {
        self.transitions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.transitions.is_empty()
    }

    pub fn end(&self) -> Vertex {
        self.transitions.last().map_or(self.start, |tr| tr.to)
    }

    pub fn arrival(&self) -> Option<Time> {
        self.transitions.last().map(|tr| tr.t)
    }

    pub fn departure(&self) -> Option<Time> {
        self.transitions.first().map(|tr| tr.t)
    }

    /// Visited vertices in order, including the start.
    pub fn vertices(&self) -> Vec<Vertex> {
        std::iter::once(self.start).chain(self.transitions.iter().map(|tr| tr.to)).collect()
    }

    pub fn is_chained(&self) -> bool {
        let mut cur = self.start;
        for tr in &self.transitions {
            if tr.from != cur {
                return false;
            }
            cur = tr.to;
        }
        true
    }

    pub fn push(&mut self, to: Vertex, t: Time) {
        let from = self.end();
        self.transitions.push(Transition { from, to, t });
    }

    /// Appends `other`, which must start where `self` ends.
    pub fn extend(&mut self, other: &TemporalWalk) {
        debug_assert_eq!(self.end(), other.start);
        self.transitions.extend_from_slice(&other.transitions);
    }
}

pub fn is_temporal_walk(g: &TemporalGraph, w: &TemporalWalk) -> bool {
    if w.start >= g.n() || !w.is_chained() {
        return false;
    }
    let mut last = 0;
    for tr in &w.transitions {
        if tr.t <= last || !g.has_time_edge(tr.from, tr.to, tr.t) {
            return false;
        }
        last = tr.t;
    }
    true
}

pub fn is_temporal_path(w: &TemporalWalk) -> bool {
    let mut vs = w.vertices();
    vs.sort_unstable();
    vs.windows(2).all(|p| p[0] != p[1])
}

/// Occupancy of a walk with at least one transition.
pub fn occupancy_intervals(w: &TemporalWalk) -> Result<Vec<OccupancyInterval>> {
    if w.is_empty() {
        return Err(Error::EmptyWalk);
    }
    Ok(occupancy_or_empty(w))
}

/// Occupancy under the zero-length convention: an empty walk holds nothing.
pub fn occupancy_or_empty(w: &TemporalWalk) -> Vec<OccupancyInterval> {
    let trs = &w.transitions;
    let Some(first) = trs.first() else {
        return Vec::new();
    };
    let mut out = Vec::with_capacity(trs.len() + 1);
    out.push(OccupancyInterval { vertex: w.start, from: first.t, to: first.t });
    for i in 0..trs.len() {
        let to = trs.get(i + 1).map_or(trs[i].t, |next| next.t);
        out.push(OccupancyInterval { vertex: trs[i].to, from: trs[i].t, to });
    }
    out
}

pub fn intervals_overlap(a: &OccupancyInterval, b: &OccupancyInterval) -> bool {
    a.vertex == b.vertex && a.from <= b.to && b.from <= a.to
}

pub fn temporally_intersect(w1: &TemporalWalk, w2: &TemporalWalk) -> bool {
    first_overlap(w1, w2).is_some()
}

/// First pair of overlapping intervals, scanning `w1` in visit order.
pub fn first_overlap(
    w1: &TemporalWalk,
    w2: &TemporalWalk,
) -> Option<(OccupancyInterval, OccupancyInterval)> {
    let o2 = occupancy_or_empty(w2);
    occupancy_or_empty(w1)
        .into_iter()
        .find_map(|a| o2.iter().find(|b| intervals_overlap(&a, b)).map(|&b| (a, b)))
}

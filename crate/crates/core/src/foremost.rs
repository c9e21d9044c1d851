use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{TemporalGraph, Time, Vertex};
use crate::walk::TemporalWalk;

/// Earliest arrival at every vertex from `s`, with the predecessor hop that achieves it.
///
/// The first transition must carry a label `>= not_before`. Among hops reaching a
/// vertex at its earliest time the smallest predecessor id wins.
pub fn foremost_tree(
    g: &TemporalGraph,
    s: Vertex,
    not_before: Time,
) -> Vec<Option<(Time, Option<Vertex>)>> {
    let mut best: Vec<Option<(Time, Option<Vertex>)>> = vec![None; g.n()];
    // The source counts as reached just before `not_before`.
    let ready = |best: &Vec<Option<(Time, Option<Vertex>)>>, u: Vertex, t: Time| -> bool {
        if u == s {
            t >= not_before
        } else {
            best[u].is_some_and(|(a, _)| a < t)
        }
    };
    let mut edges: Vec<_> = g.time_edges().to_vec();
    edges.sort_by_key(|e| (e.t, e.u, e.v));
    let mut i = 0;
    while i < edges.len() {
        let t = edges[i].t;
        let mut j = i;
        let mut found: Vec<(Vertex, Vertex)> = Vec::new();
        while j < edges.len() && edges[j].t == t {
            let e = edges[j];
            for (a, b) in [(e.u, e.v), (e.v, e.u)] {
                if b != s && best[b].is_none() && ready(&best, a, t) {
                    found.push((b, a));
                }
            }
            j += 1;
        }
        found.sort_unstable();
        for (b, a) in found {
            if best[b].is_none() {
                best[b] = Some((t, Some(a)));
            }
        }
        i = j;
    }
    best[s] = Some((not_before.saturating_sub(1), None));
    best
}

/// A temporal `(s, z)`-path whose arrival at every visited vertex is the earliest possible.
pub fn prefix_foremost_path(
    g: &TemporalGraph,
    s: Vertex,
    z: Vertex,
    not_before: Time,
) -> Option<TemporalWalk> {
    if s == z {
        return Some(TemporalWalk::empty(s));
    }
    let tree = foremost_tree(g, s, not_before);
    tree[z]?;
    let mut hops = Vec::new();
    let mut cur = z;
    while cur != s {
        let (t, pred) = tree[cur]?;
        hops.push((t, cur));
        cur = pred?;
    }
    hops.reverse();
    Some(TemporalWalk::from_hops(s, &hops))
}

/// Greedy earliest traversal of a fixed route.
///
/// The first hop uses the smallest label `>= not_before`, every later hop the smallest
/// label above the previous one. `Ok(None)` means some hop has no usable label.
pub fn prefix_foremost_along(
    g: &TemporalGraph,
    route: &[Vertex],
    not_before: Time,
) -> Result<Option<TemporalWalk>> {
    let Some(&start) = route.first() else {
        return Err(Error::PreconditionViolated("empty route".into()));
    };
    if let Some(&v) = route.iter().find(|&&v| v >= g.n()) {
        return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
    }
    for w in route.windows(2) {
        if !g.adjacent(w[0], w[1]) {
            return Err(Error::RouteNotInUnderlyingGraph { from: w[0], to: w[1] });
        }
    }
    let mut walk = TemporalWalk::empty(start);
    let mut last = not_before.saturating_sub(1);
    for w in route.windows(2) {
        match g.next_label(w[0], w[1], last) {
            Some(t) => {
                walk.push(w[1], t);
                last = t;
            }
            None => return Ok(None),
        }
    }
    Ok(Some(walk))
}

/// Copy of `g` without the time edges at `around` whose label is `<= cutoff`.
pub fn remove_dominated_time_edges(
    g: &TemporalGraph,
    around: &BTreeSet<Vertex>,
    cutoff: Time,
) -> TemporalGraph {
    let mut h = g.clone();
    h.retain(|e| !(e.t <= cutoff && (around.contains(&e.u) || around.contains(&e.v))));
    h
}

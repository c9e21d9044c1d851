//! Temporally disjoint paths, parameterized by the number of pairs plus the
//! feedback edge number of the underlying graph.
//!
//! Every pair is routed along a simple path of segments (a configuration). The
//! pairs visiting an interesting vertex are put in a total order, and events
//! `(vertex, pair)` are then processed in one linear order. Each event extends
//! the pair's path greedily up to the second-to-last vertex of its next
//! segment, deleting time edges that the committed transitions dominate.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::foremost::prefix_foremost_along;
use crate::graph::{Time, Vertex};
use crate::instance::{Instance, Mode, Solution};
use crate::structure::{
    decompose_segments, interesting_vertices, min_feedback_edge_set, prune_degree_one, underlying_graph,
    SegmentDecomposition,
};
use crate::walk::TemporalWalk;

pub const DEFAULT_CANDIDATE_CAP: u64 = 1_000_000;

/// The segment route of one pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Route {
    /// `(segment index, traversed first-to-last)`.
    pub segments: Vec<(usize, bool)>,
    pub vertices: Vec<Vertex>,
    /// Indices into `vertices` of the segment junctions, source and sink included.
    pub events: Vec<usize>,
}

impl Route {
    fn trivial(s: Vertex) -> Self {
        Route { segments: Vec::new(), vertices: vec![s], events: Vec::new() }
    }

    pub fn event_vertex(&self, k: usize) -> Vertex {
        self.vertices[self.events[k]]
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Configuration {
    pub routes: Vec<Route>,
}

/// Per-vertex pair orders together with one linear event order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EventOrdering {
    pub per_vertex: BTreeMap<Vertex, Vec<usize>>,
    /// `(pair, event index)` in processing order.
    pub linear: Vec<(usize, usize)>,
}

/// Pruned underlying graph, feedback set and segments for `inst`.
pub fn decompose_instance(inst: &Instance) -> Result<SegmentDecomposition> {
    let terminals = inst.terminals();
    let pruned = prune_degree_one(&underlying_graph(&inst.graph), &terminals);
    let feedback = min_feedback_edge_set(&pruned);
    let d = interesting_vertices(&pruned, &terminals, &feedback);
    decompose_segments(&pruned, &d, &feedback)
}

/// All simple segment routes from `s` to `z`, in lexicographic segment order.
pub fn pair_routes(dec: &SegmentDecomposition, s: Vertex, z: Vertex) -> Vec<Route> {
    if s == z {
        return vec![Route::trivial(s)];
    }
    let mut out = Vec::new();
    let mut used_vertices = BTreeSet::from([s]);
    let mut stack = Vec::new();
    route_dfs(dec, s, z, &mut used_vertices, &mut stack, &mut out);
    out
}

fn route_dfs(
    dec: &SegmentDecomposition,
    at: Vertex,
    z: Vertex,
    used: &mut BTreeSet<Vertex>,
    stack: &mut Vec<(usize, bool)>,
    out: &mut Vec<Route>,
) {
    for (i, seg) in dec.segments.iter().enumerate() {
        if seg.first() == seg.last() {
            continue;
        }
        let forward = if seg.first() == at {
            true
        } else if seg.last() == at {
            false
        } else {
            continue;
        };
        let mut vs = seg.vertices.clone();
        if !forward {
            vs.reverse();
        }
        if vs[1..].iter().any(|v| used.contains(v)) {
            continue;
        }
        let end = *vs.last().unwrap();
        stack.push((i, forward));
        if end == z {
            out.push(build_route(dec, stack));
        } else {
            used.extend(vs[1..].iter().copied());
            route_dfs(dec, end, z, used, stack, out);
            for v in &vs[1..] {
                used.remove(v);
            }
        }
        stack.pop();
    }
}

fn build_route(dec: &SegmentDecomposition, segments: &[(usize, bool)]) -> Route {
    let mut vertices = Vec::new();
    let mut events = vec![0];
    for &(i, forward) in segments {
        let mut vs = dec.segments[i].vertices.clone();
        if !forward {
            vs.reverse();
        }
        if vertices.is_empty() {
            vertices.push(vs[0]);
        }
        vertices.extend_from_slice(&vs[1..]);
        events.push(vertices.len() - 1);
    }
    Route { segments: segments.to_vec(), vertices, events }
}

/// Cartesian product of the per-pair routes.
pub fn enumerate_configurations(dec: &SegmentDecomposition, inst: &Instance) -> Result<Vec<Configuration>> {
    let mut per_pair = Vec::new();
    for (p, &(s, z)) in inst.pairs.iter().enumerate() {
        let routes = pair_routes(dec, s, z);
        if routes.is_empty() {
            return Err(Error::NoRoute { pair: p });
        }
        per_pair.push(routes);
    }
    Ok(product(&per_pair).into_iter().map(|routes| Configuration { routes }).collect())
}

fn product<T: Clone>(lists: &[Vec<T>]) -> Vec<Vec<T>> {
    let mut out = vec![Vec::new()];
    for list in lists {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                list.iter().map(move |x| {
                    let mut v = prefix.clone();
                    v.push(x.clone());
                    v
                })
            })
            .collect();
    }
    out
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, head);
            out.push(tail);
        }
    }
    out
}

/// Pairs visiting each interesting vertex, with the event index of the visit.
fn visits(cfg: &Configuration) -> BTreeMap<Vertex, Vec<(usize, usize)>> {
    let mut map: BTreeMap<Vertex, Vec<(usize, usize)>> = BTreeMap::new();
    for (p, r) in cfg.routes.iter().enumerate() {
        for k in 0..r.events.len() {
            map.entry(r.event_vertex(k)).or_default().push((p, k));
        }
    }
    map
}

fn rank(order: &[usize], p: usize) -> usize {
    order.iter().position(|&x| x == p).unwrap()
}

/// Whether pairs sharing a segment appear in the same relative order at both of its ends.
fn same_relative_order(cfg: &Configuration, per_vertex: &BTreeMap<Vertex, Vec<usize>>, dec_ends: &[(Vertex, Vertex)]) -> bool {
    let mut users: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (p, r) in cfg.routes.iter().enumerate() {
        for &(i, _) in &r.segments {
            users.entry(i).or_default().push(p);
        }
    }
    for (seg, ps) in users {
        let (a, b) = dec_ends[seg];
        for x in 0..ps.len() {
            for y in x + 1..ps.len() {
                let (p, q) = (ps[x], ps[y]);
                let at_a = rank(&per_vertex[&a], p) < rank(&per_vertex[&a], q);
                let at_b = rank(&per_vertex[&b], p) < rank(&per_vertex[&b], q);
                if at_a != at_b {
                    return false;
                }
            }
        }
    }
    true
}

/// Topological order of the event graph, smallest `(pair, event)` first; `None` if cyclic.
fn linearize(cfg: &Configuration, before: &BTreeSet<((usize, usize), (usize, usize))>) -> Option<Vec<(usize, usize)>> {
    let mut nodes: Vec<(usize, usize)> = Vec::new();
    for (p, r) in cfg.routes.iter().enumerate() {
        nodes.extend((0..r.events.len()).map(|k| (p, k)));
    }
    let mut indeg: BTreeMap<(usize, usize), usize> = nodes.iter().map(|&x| (x, 0)).collect();
    let mut succ: BTreeMap<(usize, usize), Vec<(usize, usize)>> = BTreeMap::new();
    for &(x, y) in before {
        *indeg.get_mut(&y).unwrap() += 1;
        succ.entry(x).or_default().push(y);
    }
    let mut ready: BTreeSet<(usize, usize)> = indeg.iter().filter(|(_, &d)| d == 0).map(|(&x, _)| x).collect();
    let mut out = Vec::with_capacity(nodes.len());
    while let Some(x) = ready.pop_first() {
        out.push(x);
        for &y in succ.get(&x).map(Vec::as_slice).unwrap_or(&[]) {
            let d = indeg.get_mut(&y).unwrap();
            *d -= 1;
            if *d == 0 {
                ready.insert(y);
            }
        }
    }
    (out.len() == nodes.len()).then_some(out)
}

/// Precedences implied by the per-vertex orders, each pair's own visit order, and
/// the waits the greedy leaves behind at second-to-last segment vertices.
fn precedences(cfg: &Configuration, per_vertex: &BTreeMap<Vertex, Vec<usize>>) -> BTreeSet<((usize, usize), (usize, usize))> {
    let event_at = |p: usize, v: Vertex| -> usize {
        let r = &cfg.routes[p];
        (0..r.events.len()).find(|&k| r.event_vertex(k) == v).unwrap()
    };
    let mut rel = BTreeSet::new();
    for (p, r) in cfg.routes.iter().enumerate() {
        for k in 1..r.events.len() {
            rel.insert(((p, k - 1), (p, k)));
        }
    }
    for (&v, order) in per_vertex {
        for w in order.windows(2) {
            rel.insert(((w[0], event_at(w[0], v)), (w[1], event_at(w[1], v))));
        }
    }
    // After its event at a segment's first vertex, a pair waits next to the far end
    // until its following event; nobody who comes later may pass through there.
    for (p, r) in cfg.routes.iter().enumerate() {
        for k in 0..r.events.len().saturating_sub(1) {
            let (seg, _) = r.segments[k];
            let v = r.event_vertex(k);
            for (q, rq) in cfg.routes.iter().enumerate() {
                if q == p || rank(&per_vertex[&v], p) > rank_or_max(per_vertex, v, q) {
                    continue;
                }
                if let Some(kq) = rq.segments.iter().position(|&(s, _)| s == seg) {
                    rel.insert(((p, k + 1), (q, kq)));
                }
                let seg_len = r.events[k + 1] - r.events[k];
                if seg_len == 1 {
                    // Waiting at `v` itself, or not yet left the source.
                    if let Some(kq) = (0..rq.events.len()).find(|&j| rq.event_vertex(j) == v) {
                        rel.insert(((p, k + 1), (q, kq)));
                    }
                }
            }
        }
    }
    rel
}

fn rank_or_max(per_vertex: &BTreeMap<Vertex, Vec<usize>>, v: Vertex, q: usize) -> usize {
    per_vertex[&v].iter().position(|&x| x == q).unwrap_or(usize::MAX)
}

/// Every ordering satisfying the shared-segment rule whose event graph is acyclic.
pub fn enumerate_valid_orderings(dec: &SegmentDecomposition, cfg: &Configuration) -> Vec<EventOrdering> {
    let ends: Vec<(Vertex, Vertex)> = dec.segments.iter().map(|s| (s.first(), s.last())).collect();
    let visits = visits(cfg);
    let keys: Vec<Vertex> = visits.keys().copied().collect();
    let choices: Vec<Vec<Vec<usize>>> = keys
        .iter()
        .map(|v| permutations(&visits[v].iter().map(|&(p, _)| p).collect::<Vec<_>>()))
        .collect();
    let mut out = Vec::new();
    for pick in product(&choices) {
        let per_vertex: BTreeMap<Vertex, Vec<usize>> = keys.iter().copied().zip(pick).collect();
        if !same_relative_order(cfg, &per_vertex, &ends) {
            continue;
        }
        if let Some(linear) = linearize(cfg, &precedences(cfg, &per_vertex)) {
            out.push(EventOrdering { per_vertex, linear });
        }
    }
    out
}

/// Greedy realization of `(cfg, ord)`; `None` discards the candidate.
pub fn realize(inst: &Instance, cfg: &Configuration, ord: &EventOrdering) -> Option<Solution> {
    realize_traced(inst, cfg, ord, &mut Vec::new())
}

/// As [`realize`], recording the working graph's time-edge count after every event.
pub fn realize_traced(
    inst: &Instance,
    cfg: &Configuration,
    ord: &EventOrdering,
    trace: &mut Vec<usize>,
) -> Option<Solution> {
    let mut g = inst.graph.clone();
    let mut walks: Vec<TemporalWalk> = cfg.routes.iter().map(|r| TemporalWalk::empty(r.vertices[0])).collect();
    // Index into the route of each pair's current vertex.
    let mut at: Vec<usize> = vec![0; cfg.routes.len()];
    trace.push(g.num_time_edges());
    for &(p, k) in &ord.linear {
        let r = &cfg.routes[p];
        let target = if k + 1 == r.events.len() { r.events[k] } else { r.events[k + 1] - 1 };
        if target <= at[p] {
            continue;
        }
        let slice = &r.vertices[at[p]..=target];
        let not_before: Time = walks[p].arrival().map_or(1, |t| t + 1);
        let chunk = prefix_foremost_along(&g, slice, not_before).ok()??;
        for tr in &chunk.transitions {
            for (q, w) in walks.iter().enumerate() {
                if q != p && !w.is_empty() && at[q] + 1 < cfg.routes[q].vertices.len() {
                    let held = cfg.routes[q].vertices[at[q]];
                    if tr.from == held || tr.to == held {
                        return None;
                    }
                }
            }
            g.drop_dominated_pair(tr.from, tr.to, tr.t);
        }
        walks[p].extend(&chunk);
        at[p] = target;
        trace.push(g.num_time_edges());
    }
    let done = cfg.routes.iter().zip(&at).all(|(r, &i)| i + 1 == r.vertices.len());
    done.then_some(Solution { walks })
}

/// Statistics of one solver run.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct FesStats {
    pub candidates: u64,
}

pub fn solve_tdp_fes(inst: &Instance) -> Result<Option<Solution>> {
    solve_tdp_fes_with(inst, crate::budget_from_env(DEFAULT_CANDIDATE_CAP)).map(|(s, _)| s)
}

pub fn solve_tdp_fes_with(inst: &Instance, cap: u64) -> Result<(Option<Solution>, FesStats)> {
    if inst.mode != Mode::Paths {
        return Err(Error::PreconditionViolated("the feedback-edge solver handles paths mode only".into()));
    }
    let mut stats = FesStats::default();
    let dec = decompose_instance(inst)?;
    let mut per_pair = Vec::new();
    for &(s, z) in &inst.pairs {
        let routes = pair_routes(&dec, s, z);
        if routes.is_empty() {
            return Ok((None, stats));
        }
        // A route that cannot be traversed even alone is useless.
        let alive: Vec<Route> = routes
            .into_iter()
            .filter(|r| r.vertices.len() == 1 || matches!(prefix_foremost_along(&inst.graph, &r.vertices, 1), Ok(Some(_))))
            .collect();
        if alive.is_empty() {
            return Ok((None, stats));
        }
        per_pair.push(alive);
    }
    for routes in product(&per_pair) {
        let cfg = Configuration { routes };
        for ord in enumerate_valid_orderings(&dec, &cfg) {
            stats.candidates += 1;
            if stats.candidates > cap {
                return Err(Error::ResourceLimit { what: "fes candidates", limit: cap });
            }
            if let Some(sol) = realize(inst, &cfg, &ord) {
                return Ok((Some(sol), stats));
            }
        }
    }
    Ok((None, stats))
}

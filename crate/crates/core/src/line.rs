//! Temporally disjoint walks on temporal lines, parameterized by the number of pairs.
//!
//! A walk on a line is a sequence of monotone runs separated by turns. Each pair
//! gets a turn plan with turns only near terminals, the runs of all pairs are
//! put in a valid total order, and every run is realized greedily in that order.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::foremost::prefix_foremost_along;
use crate::graph::{TemporalGraph, Time, Vertex};
use crate::instance::{Instance, Solution};
use crate::structure::{line_order, underlying_graph};
use crate::walk::TemporalWalk;

pub const DEFAULT_CANDIDATE_CAP: u64 = 1_000_000;

/// Turn vertices per pair, in walk order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TurnPlan {
    pub turns: Vec<Vec<Vertex>>,
}

/// `(pair, run index)` in processing order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SegmentOrder {
    pub order: Vec<(usize, usize)>,
}

/// A line instance with positions resolved.
#[derive(Debug, Clone)]
pub struct LineView {
    pub order: Vec<Vertex>,
    pub pos: BTreeMap<Vertex, usize>,
}

impl LineView {
    pub fn of(g: &TemporalGraph) -> Result<Self> {
        let order = line_order(&underlying_graph(g)).ok_or(Error::NotALine)?;
        let pos = order.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        Ok(LineView { order, pos })
    }

    /// Vertices from `a` to `b` inclusive, in travel order.
    pub fn run(&self, a: Vertex, b: Vertex) -> Vec<Vertex> {
        let (i, j) = (self.pos[&a], self.pos[&b]);
        if i <= j {
            self.order[i..=j].to_vec()
        } else {
            self.order[j..=i].iter().rev().copied().collect()
        }
    }

    fn contains(&self, a: Vertex, b: Vertex, v: Vertex) -> bool {
        let (i, j) = (self.pos[&a], self.pos[&b]);
        let k = self.pos[&v];
        i.min(j) <= k && k <= i.max(j)
    }
}

/// Vertices within line distance `|S|` of some terminal.
pub fn turn_region(inst: &Instance) -> Result<BTreeSet<Vertex>> {
    let view = LineView::of(&inst.graph)?;
    Ok(region_of(inst, &view))
}

fn region_of(inst: &Instance, view: &LineView) -> BTreeSet<Vertex> {
    let r = inst.pairs.len();
    let mut d = BTreeSet::new();
    for v in inst.terminals() {
        if let Some(&i) = view.pos.get(&v) {
            let lo = i.saturating_sub(r);
            let hi = (i + r).min(view.order.len() - 1);
            d.extend(view.order[lo..=hi].iter().copied());
        }
    }
    d
}

/// Runs of one pair's plan as `(from, to)` endpoints.
pub fn runs(s: Vertex, z: Vertex, turns: &[Vertex]) -> Vec<(Vertex, Vertex)> {
    if s == z && turns.is_empty() {
        return Vec::new();
    }
    let mut pts = vec![s];
    pts.extend_from_slice(turns);
    pts.push(z);
    pts.windows(2).map(|w| (w[0], w[1])).collect()
}

fn pair_plans(view: &LineView, region: &BTreeSet<Vertex>, s: Vertex, z: Vertex, max_turns: usize) -> Vec<Vec<Vertex>> {
    if s == z {
        return vec![Vec::new()];
    }
    let cands: Vec<Vertex> = region.iter().copied().filter(|v| view.pos.contains_key(v)).collect();
    let mut out = Vec::new();
    let mut cur = Vec::new();
    plan_dfs(view, &cands, s, z, None, max_turns, &mut cur, &mut out);
    out
}

// `dir` is the direction of the run that ends at `at`.
#[allow(clippy::too_many_arguments)]
fn plan_dfs(
    view: &LineView,
    cands: &[Vertex],
    at: Vertex,
    z: Vertex,
    dir: Option<bool>,
    left: usize,
    cur: &mut Vec<Vertex>,
    out: &mut Vec<Vec<Vertex>>,
) {
    let here = view.pos[&at];
    let up_to_z = view.pos[&z] > here;
    if at != z && dir.is_none_or(|d| d != up_to_z) {
        out.push(cur.clone());
    }
    if left == 0 {
        return;
    }
    for &t in cands {
        let there = view.pos[&t];
        if there == here {
            continue;
        }
        let up = there > here;
        if dir == Some(up) {
            continue;
        }
        cur.push(t);
        plan_dfs(view, cands, t, z, Some(up), left - 1, cur, out);
        cur.pop();
    }
}

/// All per-pair turn sequences with at most `2|S|` turns inside `region`.
pub fn enumerate_turn_plans(inst: &Instance, region: &BTreeSet<Vertex>) -> Result<Vec<TurnPlan>> {
    let view = LineView::of(&inst.graph)?;
    let per_pair = per_pair_plans(inst, &view, region)?;
    Ok(product(&per_pair).into_iter().map(|turns| TurnPlan { turns }).collect())
}

fn per_pair_plans(inst: &Instance, view: &LineView, region: &BTreeSet<Vertex>) -> Result<Vec<Vec<Vec<Vertex>>>> {
    let max_turns = 2 * inst.pairs.len();
    let mut out = Vec::new();
    for &(s, z) in &inst.pairs {
        if s != z && (!view.pos.contains_key(&s) || !view.pos.contains_key(&z)) {
            out.push(Vec::new());
            continue;
        }
        out.push(pair_plans(view, region, s, z, max_turns));
    }
    Ok(out)
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

fn plan_runs(inst: &Instance, plan: &TurnPlan) -> Vec<Vec<(Vertex, Vertex)>> {
    inst.pairs.iter().zip(&plan.turns).map(|(&(s, z), t)| runs(s, z, t)).collect()
}

/// Whether placing run `(q, j)` next keeps every pending turn untouched.
fn fits(view: &LineView, runs: &[Vec<(Vertex, Vertex)>], placed: &[usize], q: usize, j: usize) -> bool {
    let (a, b) = runs[q][j];
    for (p, &k) in placed.iter().enumerate() {
        if p == q || k == 0 || k == runs[p].len() {
            continue;
        }
        let turn = runs[p][k - 1].1;
        if view.contains(a, b, turn) {
            return false;
        }
    }
    true
}

/// Every total order of the runs that keeps each pair's runs in sequence and never
/// puts a run through a turn vertex between the two runs meeting there.
pub fn enumerate_valid_segment_orders(inst: &Instance, plan: &TurnPlan) -> Result<Vec<SegmentOrder>> {
    let view = LineView::of(&inst.graph)?;
    let runs = plan_runs(inst, plan);
    let mut out = Vec::new();
    let mut placed = vec![0; runs.len()];
    let mut order = Vec::new();
    orders_dfs(&view, &runs, &mut placed, &mut order, &mut out);
    Ok(out)
}

fn orders_dfs(
    view: &LineView,
    runs: &[Vec<(Vertex, Vertex)>],
    placed: &mut Vec<usize>,
    order: &mut Vec<(usize, usize)>,
    out: &mut Vec<SegmentOrder>,
) {
    if placed.iter().zip(runs).all(|(&k, r)| k == r.len()) {
        out.push(SegmentOrder { order: order.clone() });
        return;
    }
    for q in 0..runs.len() {
        let j = placed[q];
        if j == runs[q].len() || !fits(view, runs, placed, q, j) {
            continue;
        }
        placed[q] += 1;
        order.push((q, j));
        orders_dfs(view, runs, placed, order, out);
        order.pop();
        placed[q] -= 1;
    }
}

fn commit(g: &mut TemporalGraph, w: &TemporalWalk) {
    for tr in &w.transitions {
        g.drop_dominated_pair(tr.from, tr.to, tr.t);
    }
}

fn realize_run(g: &TemporalGraph, view: &LineView, walk: &TemporalWalk, to: Vertex) -> Option<TemporalWalk> {
    let not_before: Time = walk.arrival().map_or(1, |t| t + 1);
    prefix_foremost_along(g, &view.run(walk.end(), to), not_before).ok().flatten()
}

/// Realizes the runs in `order` one after another on a shrinking copy of the graph.
pub fn realize_line(inst: &Instance, plan: &TurnPlan, order: &SegmentOrder) -> Result<Option<Solution>> {
    let view = LineView::of(&inst.graph)?;
    let runs = plan_runs(inst, plan);
    let mut g = inst.graph.clone();
    let mut walks: Vec<TemporalWalk> = inst.pairs.iter().map(|&(s, _)| TemporalWalk::empty(s)).collect();
    for &(p, j) in &order.order {
        let Some(chunk) = realize_run(&g, &view, &walks[p], runs[p][j].1) else {
            return Ok(None);
        };
        commit(&mut g, &chunk);
        walks[p].extend(&chunk);
    }
    let complete = walks.iter().zip(&inst.pairs).all(|(w, &(_, z))| w.end() == z);
    Ok(complete.then_some(Solution { walks }))
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct LineStats {
    pub candidates: u64,
}

pub fn solve_tdw_line(inst: &Instance) -> Result<Option<Solution>> {
    solve_tdw_line_with(inst, crate::budget_from_env(DEFAULT_CANDIDATE_CAP)).map(|(s, _)| s)
}

struct Ctx<'a> {
    view: &'a LineView,
    runs: Vec<Vec<(Vertex, Vertex)>>,
    stats: LineStats,
    cap: u64,
}

impl Ctx<'_> {
    // Walks the valid orders depth first, realizing each run as soon as it is placed.
    fn dfs(&mut self, g: &TemporalGraph, placed: &mut Vec<usize>, walks: &mut Vec<TemporalWalk>) -> Result<bool> {
        self.stats.candidates += 1;
        if self.stats.candidates > self.cap {
            return Err(Error::ResourceLimit { what: "line candidates", limit: self.cap });
        }
        if placed.iter().zip(&self.runs).all(|(&k, r)| k == r.len()) {
            return Ok(true);
        }
        for q in 0..self.runs.len() {
            let j = placed[q];
            if j == self.runs[q].len() || !fits(self.view, &self.runs, placed, q, j) {
                continue;
            }
            let Some(chunk) = realize_run(g, self.view, &walks[q], self.runs[q][j].1) else {
                continue;
            };
            let mut h = g.clone();
            commit(&mut h, &chunk);
            let keep = walks[q].transitions.len();
            walks[q].extend(&chunk);
            placed[q] += 1;
            if self.dfs(&h, placed, walks)? {
                return Ok(true);
            }
            placed[q] -= 1;
            walks[q].transitions.truncate(keep);
        }
        Ok(false)
    }
}

pub fn solve_tdw_line_with(inst: &Instance, cap: u64) -> Result<(Option<Solution>, LineStats)> {
    let view = LineView::of(&inst.graph)?;
    let region = region_of(inst, &view);
    let mut per_pair = per_pair_plans(inst, &view, &region)?;
    // Keep only plans a pair could follow with the whole graph to itself, shortest first.
    for (list, &(s, z)) in per_pair.iter_mut().zip(&inst.pairs) {
        let mut scored: Vec<(usize, Vec<Vertex>)> = Vec::new();
        for turns in list.drain(..) {
            if let Some(w) = realize_alone(&inst.graph, &view, s, z, &turns) {
                if w.len() <= inst.graph.lifetime() as usize {
                    scored.push((w.len(), turns));
                }
            }
        }
        scored.sort();
        *list = scored.into_iter().map(|(_, t)| t).collect();
    }
    let mut stats = LineStats::default();
    if per_pair.iter().any(Vec::is_empty) {
        return Ok((None, stats));
    }
    for turns in product(&per_pair) {
        let plan = TurnPlan { turns };
        let mut ctx = Ctx { view: &view, runs: plan_runs(inst, &plan), stats, cap };
        let mut placed = vec![0; inst.pairs.len()];
        let mut walks: Vec<TemporalWalk> = inst.pairs.iter().map(|&(s, _)| TemporalWalk::empty(s)).collect();
        let found = ctx.dfs(&inst.graph, &mut placed, &mut walks)?;
        stats = ctx.stats;
        if found {
            return Ok((Some(Solution { walks }), stats));
        }
    }
    Ok((None, stats))
}

fn realize_alone(g: &TemporalGraph, view: &LineView, s: Vertex, z: Vertex, turns: &[Vertex]) -> Option<TemporalWalk> {
    let mut w = TemporalWalk::empty(s);
    for (_, to) in runs(s, z, turns) {
        let c = realize_run(g, view, &w, to)?;
        w.extend(&c);
    }
    Some(w)
}

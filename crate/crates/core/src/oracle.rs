//! Exhaustive ground truth for small instances.
//!
//! [`solve_exhaustive`] is a time-expanded joint search over the distinct labels of
//! the graph. [`solve_naive`] enumerates every candidate walk per pair and
//! backtracks over tuples; it shares nothing with the search beyond the walk type.

use std::collections::{BTreeMap, HashSet};

use crate::error::{Error, Result};
use crate::graph::{Time, Vertex};
use crate::instance::{Instance, Mode, Solution};
use crate::walk::{temporally_intersect, TemporalWalk};

pub const DEFAULT_NODE_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum Pos {
    NotStarted,
    At(Vertex),
    Done,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
struct WalkState {
    pos: Pos,
    visited: Vec<u64>,
}

impl WalkState {
    fn seen(&self, v: Vertex) -> bool {
        self.visited.get(v / 64).is_some_and(|w| w >> (v % 64) & 1 == 1)
    }

    fn mark(&mut self, v: Vertex) {
        if let Some(w) = self.visited.get_mut(v / 64) {
            *w |= 1 << (v % 64);
        }
    }
}

#[derive(Debug, Clone, Copy)]
enum Step {
    Keep,
    Move { to: Vertex, finish: bool },
}

/// Statistics of the last search.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub nodes: u64,
}

struct Search<'a> {
    inst: &'a Instance,
    labels: Vec<Time>,
    moves: Vec<Vec<(Vertex, Vertex)>>,
    // reach[p][i][v]: pair p can still get from v to its sink using labels[i..].
    reach: Vec<Vec<Vec<bool>>>,
    dist: Vec<Vec<usize>>,
    cap: Option<usize>,
    failed: HashSet<(usize, Vec<WalkState>, usize)>,
    nodes: u64,
    budget: u64,
}

impl<'a> Search<'a> {
    fn new(inst: &'a Instance, cap: Option<usize>, budget: u64) -> Self {
        let g = &inst.graph;
        let mut by_label: BTreeMap<Time, Vec<(Vertex, Vertex)>> = BTreeMap::new();
        for e in g.time_edges() {
            by_label.entry(e.t).or_default().push((e.u, e.v));
        }
        let labels: Vec<Time> = by_label.keys().copied().collect();
        let moves: Vec<_> = by_label.into_values().collect();
        let n = g.n();
        let mut reach = Vec::new();
        let mut dist = Vec::new();
        for &(_, z) in &inst.pairs {
            let mut table = vec![vec![false; n]; labels.len() + 1];
            table[labels.len()][z] = true;
            for i in (0..labels.len()).rev() {
                let mut row = table[i + 1].clone();
                for &(a, b) in &moves[i] {
                    row[a] |= table[i + 1][b];
                    row[b] |= table[i + 1][a];
                }
                table[i] = row;
            }
            reach.push(table);
            dist.push(static_distances(inst, z));
        }
        Search { inst, labels, moves, reach, dist, cap, failed: HashSet::new(), nodes: 0, budget }
    }

    fn initial(&self) -> Vec<WalkState> {
        let words = match self.inst.mode {
            Mode::Paths => self.inst.graph.n().div_ceil(64),
            Mode::Walks => 0,
        };
        self.inst
            .pairs
            .iter()
            .map(|&(s, z)| {
                let mut st = WalkState { pos: if s == z { Pos::Done } else { Pos::NotStarted }, visited: vec![0; words] };
                st.mark(s);
                st
            })
            .collect()
    }

    fn current(&self, p: usize, st: &WalkState) -> Option<Vertex> {
        match st.pos {
            Pos::NotStarted => Some(self.inst.pairs[p].0),
            Pos::At(v) => Some(v),
            Pos::Done => None,
        }
    }

    fn lower_bound(&self, states: &[WalkState]) -> usize {
        states
            .iter()
            .enumerate()
            .filter_map(|(p, st)| self.current(p, st).map(|v| self.dist[p][v]))
            .sum()
    }

    fn options(&self, li: usize, p: usize, st: &WalkState) -> Vec<Step> {
        let Some(v) = self.current(p, st) else {
            return vec![Step::Keep];
        };
        let z = self.inst.pairs[p].1;
        let next = &self.reach[p][li + 1];
        let mut out = Vec::new();
        let mut targets: Vec<Vertex> = self.moves[li]
            .iter()
            .filter_map(|&(a, b)| if a == v { Some(b) } else if b == v { Some(a) } else { None })
            .collect();
        targets.sort_unstable();
        for w in targets {
            if self.inst.mode == Mode::Paths && st.seen(w) {
                continue;
            }
            if w == z {
                out.push(Step::Move { to: w, finish: true });
            }
            if next[w] && !(w == z && self.inst.mode == Mode::Paths) {
                out.push(Step::Move { to: w, finish: false });
            }
        }
        if next[v] {
            out.push(Step::Keep);
        }
        out
    }

    fn run(&mut self, li: usize, states: Vec<WalkState>, used: usize, trail: &mut Vec<(usize, Vertex, Vertex, Time)>) -> Result<bool> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::ResourceLimit { what: "oracle nodes", limit: self.budget });
        }
        if li == self.labels.len() {
            return Ok(states.iter().all(|s| s.pos == Pos::Done));
        }
        if states.iter().all(|s| s.pos == Pos::Done) {
            return Ok(true);
        }
        if let Some(cap) = self.cap {
            if used + self.lower_bound(&states) > cap {
                return Ok(false);
            }
        }
        let key = (li, states, if self.cap.is_some() { used } else { 0 });
        if self.failed.contains(&key) {
            return Ok(false);
        }
        let (_, states, memo_used) = key;
        let opts: Vec<Vec<Step>> = states.iter().enumerate().map(|(p, st)| self.options(li, p, st)).collect();
        if opts.iter().any(Vec::is_empty) {
            self.failed.insert((li, states, memo_used));
            return Ok(false);
        }
        let mut choice = vec![0usize; states.len()];
        let mut held: Vec<Vertex> = Vec::new();
        let found = self.combine(li, &states, &opts, 0, &mut choice, &mut held, used, trail)?;
        if !found {
            self.failed.insert((li, states, memo_used));
        }
        Ok(found)
    }

    #[allow(clippy::too_many_arguments)]
    fn combine(
        &mut self,
        li: usize,
        states: &[WalkState],
        opts: &[Vec<Step>],
        p: usize,
        choice: &mut Vec<usize>,
        held: &mut Vec<Vertex>,
        used: usize,
        trail: &mut Vec<(usize, Vertex, Vertex, Time)>,
    ) -> Result<bool> {
        if p == states.len() {
            return self.descend(li, states, opts, choice, used, trail);
        }
        for (k, step) in opts[p].iter().enumerate() {
            let mark = held.len();
            let claim: Vec<Vertex> = match (*step, states[p].pos) {
                (Step::Keep, Pos::At(v)) => vec![v],
                (Step::Keep, _) => vec![],
                (Step::Move { to, .. }, _) => vec![self.current(p, &states[p]).unwrap(), to],
            };
            if claim.iter().any(|v| held.contains(v)) {
                continue;
            }
            held.extend(claim);
            choice[p] = k;
            let ok = self.combine(li, states, opts, p + 1, choice, held, used, trail)?;
            held.truncate(mark);
            if ok {
                return Ok(true);
            }
        }
        Ok(false)
    }

    fn descend(
        &mut self,
        li: usize,
        states: &[WalkState],
        opts: &[Vec<Step>],
        choice: &[usize],
        used: usize,
        trail: &mut Vec<(usize, Vertex, Vertex, Time)>,
    ) -> Result<bool> {
        let t = self.labels[li];
        let mut next = states.to_vec();
        let mut used = used;
        let mark = trail.len();
        for (p, st) in next.iter_mut().enumerate() {
            if let Step::Move { to, finish } = opts[p][choice[p]] {
                let from = self.current(p, st).unwrap();
                trail.push((p, from, to, t));
                used += 1;
                st.mark(to);
                st.pos = if finish { Pos::Done } else { Pos::At(to) };
            }
        }
        if self.cap.is_some_and(|c| used > c) {
            trail.truncate(mark);
            return Ok(false);
        }
        let ok = self.run(li + 1, next, used, trail)?;
        if !ok {
            trail.truncate(mark);
        }
        Ok(ok)
    }
}

fn static_distances(inst: &Instance, z: Vertex) -> Vec<usize> {
    let n = inst.graph.n();
    let mut dist = vec![usize::MAX / 4; n];
    dist[z] = 0;
    let mut queue = std::collections::VecDeque::from([z]);
    while let Some(v) = queue.pop_front() {
        for &(_, w) in inst.graph.incident(v) {
            if dist[w] > dist[v] + 1 {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

fn search(inst: &Instance, cap: Option<usize>, budget: u64) -> Result<(Option<Solution>, SearchStats)> {
    let mut s = Search::new(inst, cap, budget);
    let start = s.initial();
    let mut trail = Vec::new();
    let found = s.run(0, start, 0, &mut trail)?;
    let stats = SearchStats { nodes: s.nodes };
    if !found {
        return Ok((None, stats));
    }
    let mut walks: Vec<TemporalWalk> = inst.pairs.iter().map(|&(s, _)| TemporalWalk::empty(s)).collect();
    for (p, _, to, t) in trail {
        walks[p].push(to, t);
    }
    Ok((Some(Solution { walks }), stats))
}

/// Complete search; `None` means the instance has no solution.
pub fn solve_exhaustive(inst: &Instance) -> Result<Option<Solution>> {
    solve_exhaustive_with(inst, crate::budget_from_env(DEFAULT_NODE_BUDGET)).map(|(s, _)| s)
}

pub fn solve_exhaustive_with(inst: &Instance, budget: u64) -> Result<(Option<Solution>, SearchStats)> {
    search(inst, None, budget)
}

/// Complete search restricted to solutions of total length at most `cap`.
pub fn solve_with_length_cap(inst: &Instance, cap: usize) -> Result<Option<Solution>> {
    search(inst, Some(cap), crate::budget_from_env(DEFAULT_NODE_BUDGET)).map(|(s, _)| s)
}

/// A solution of minimum total length, found by iterative deepening on the cap.
pub fn solve_min_total_length(inst: &Instance) -> Result<Option<Solution>> {
    let budget = crate::budget_from_env(DEFAULT_NODE_BUDGET);
    let (first, _) = search(inst, None, budget)?;
    let Some(first) = first else {
        return Ok(None);
    };
    let mut best = first;
    for cap in 0..best.total_length() {
        if let (Some(sol), _) = search(inst, Some(cap), budget)? {
            best = sol;
            break;
        }
    }
    Ok(Some(best))
}

/// Every temporal walk (or path) from `s` to `z`, in lexicographic order of labels.
pub fn enumerate_walks(inst: &Instance, s: Vertex, z: Vertex, limit: u64) -> Result<Vec<TemporalWalk>> {
    let mut out = Vec::new();
    if s == z {
        out.push(TemporalWalk::empty(s));
        return Ok(out);
    }
    let mut cur = TemporalWalk::empty(s);
    extend_walks(inst, z, &mut cur, 0, &mut out, limit)?;
    Ok(out)
}

fn extend_walks(
    inst: &Instance,
    z: Vertex,
    cur: &mut TemporalWalk,
    last: Time,
    out: &mut Vec<TemporalWalk>,
    limit: u64,
) -> Result<()> {
    let v = cur.end();
    for &(t, w) in inst.graph.incident(v) {
        if t <= last {
            continue;
        }
        if inst.mode == Mode::Paths && cur.vertices().contains(&w) {
            continue;
        }
        cur.push(w, t);
        if w == z {
            if out.len() as u64 >= limit {
                return Err(Error::ResourceLimit { what: "enumerated walks", limit });
            }
            out.push(cur.clone());
        }
        if inst.mode == Mode::Walks || w != z {
            extend_walks(inst, z, cur, t, out, limit)?;
        }
        cur.transitions.pop();
    }
    Ok(())
}

/// Independent oracle: enumerate candidate walks per pair, then backtrack over tuples.
pub fn solve_naive(inst: &Instance) -> Result<Option<Solution>> {
    let budget = crate::budget_from_env(DEFAULT_NODE_BUDGET);
    let mut candidates = Vec::new();
    for &(s, z) in &inst.pairs {
        let ws = enumerate_walks(inst, s, z, budget)?;
        if ws.is_empty() {
            return Ok(None);
        }
        candidates.push(ws);
    }
    let mut chosen: Vec<TemporalWalk> = Vec::new();
    let mut steps = 0u64;
    if pick(&candidates, &mut chosen, &mut steps, budget)? {
        Ok(Some(Solution { walks: chosen }))
    } else {
        Ok(None)
    }
}

fn pick(cands: &[Vec<TemporalWalk>], chosen: &mut Vec<TemporalWalk>, steps: &mut u64, budget: u64) -> Result<bool> {
    let i = chosen.len();
    if i == cands.len() {
        return Ok(true);
    }
    for w in &cands[i] {
        *steps += 1;
        if *steps > budget {
            return Err(Error::ResourceLimit { what: "naive tuples", limit: budget });
        }
        if chosen.iter().any(|c| temporally_intersect(c, w)) {
            continue;
        }
        chosen.push(w.clone());
        if pick(cands, chosen, steps, budget)? {
            return Ok(true);
        }
        chosen.pop();
    }
    Ok(false)
}

#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use temporal_disjoint::generators::random::{random_instance, random_line_instance, random_sparse_instance, RandomParams};
use temporal_disjoint::generators::{BinPackingInstance, ColoredGraph};
use temporal_disjoint::walk::temporally_intersect;
use temporal_disjoint::{Instance, Mode, TemporalGraph, TemporalWalk, Time, Vertex};

pub fn general(rng: &mut ChaCha8Rng, mode: Mode) -> Instance {
    let p = RandomParams {
        n: rng.gen_range(2..=6),
        lifetime: rng.gen_range(1..=8),
        pairs: rng.gen_range(1..=3),
        mode,
    };
    random_instance(rng, p).unwrap()
}

pub fn sparse(rng: &mut ChaCha8Rng) -> Instance {
    let p = RandomParams {
        n: rng.gen_range(2..=6),
        lifetime: rng.gen_range(1..=8),
        pairs: rng.gen_range(1..=3),
        mode: Mode::Paths,
    };
    random_sparse_instance(rng, p, 2).unwrap()
}

pub fn line(rng: &mut ChaCha8Rng) -> Instance {
    let p = RandomParams {
        n: rng.gen_range(2..=7),
        lifetime: rng.gen_range(1..=8),
        pairs: rng.gen_range(1..=2),
        mode: Mode::Walks,
    };
    random_line_instance(rng, p).unwrap()
}

/// Every temporal path leaving `s`, including the empty one, by plain recursion.
pub fn all_paths_from(g: &TemporalGraph, s: Vertex) -> Vec<TemporalWalk> {
    fn go(g: &TemporalGraph, cur: &mut TemporalWalk, last: Time, out: &mut Vec<TemporalWalk>) {
        out.push(cur.clone());
        let here = cur.end();
        for e in g.time_edges() {
            if e.t <= last || !e.touches(here) {
                continue;
            }
            let next = e.other(here);
            if cur.vertices().contains(&next) {
                continue;
            }
            cur.push(next, e.t);
            go(g, cur, e.t, out);
            cur.transitions.pop();
        }
    }
    let mut out = Vec::new();
    go(g, &mut TemporalWalk::empty(s), 0, &mut out);
    out
}

pub fn paths_between(g: &TemporalGraph, s: Vertex, z: Vertex) -> Vec<TemporalWalk> {
    all_paths_from(g, s).into_iter().filter(|w| w.end() == z && (s == z || !w.is_empty())).collect()
}

/// Size of the largest pairwise disjoint subfamily, by brute force over subsets.
pub fn max_disjoint(ws: &[TemporalWalk]) -> (usize, Vec<usize>) {
    let mut best = (0, Vec::new());
    let m = ws.len();
    assert!(m <= 20, "too many candidates for subset search");
    for mask in 0u32..(1 << m) {
        let idx: Vec<usize> = (0..m).filter(|i| mask >> i & 1 == 1).collect();
        if idx.len() <= best.0 {
            continue;
        }
        let ok = idx.iter().enumerate().all(|(a, &i)| idx[a + 1..].iter().all(|&j| !temporally_intersect(&ws[i], &ws[j])));
        if ok {
            best = (idx.len(), idx);
        }
    }
    best
}

/// Ordered item tuples of length at most `max_items` summing to `bins * size`.
pub fn normalized_binpacking(max_items: usize, bins: u64, size: u64) -> Vec<BinPackingInstance> {
    fn go(left: u64, max_items: usize, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        if cur.len() == max_items {
            return;
        }
        for x in 1..=left {
            cur.push(x);
            go(left - x, max_items, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(bins * size, max_items, &mut Vec::new(), &mut out);
    out.into_iter().map(|items| BinPackingInstance { items, bins, bin_size: size }).collect()
}

/// Every colored graph with `k` parts of size `n`.
pub fn all_colored_graphs(k: usize, n: usize) -> Vec<ColoredGraph> {
    let full: Vec<_> = ColoredGraph::complete(k, n).edges().collect();
    assert!(full.len() <= 16);
    (0u32..(1 << full.len()))
        .map(|mask| {
            let es: Vec<_> = (0..full.len()).filter(|i| mask >> i & 1 == 1).map(|i| full[i]).collect();
            ColoredGraph::new(k, n, &es).unwrap()
        })
        .collect()
}

/// Independent clique check: every choice of one vertex per color.
pub fn cliques(g: &ColoredGraph) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let total = g.n.pow(g.k as u32);
    for code in 0..total {
        let mut pick = Vec::new();
        let mut c = code;
        for _ in 0..g.k {
            pick.push(c % g.n);
            c /= g.n;
        }
        let ok = (0..g.k).all(|i| (i + 1..g.k).all(|j| g.has_edge((i, pick[i]), (j, pick[j]))));
        if ok {
            out.push(pick);
        }
    }
    out
}

/// Positions of line vertices, found by walking from an end of the underlying path.
pub fn line_positions_independent(g: &TemporalGraph) -> Vec<usize> {
    let n = g.n();
    let mut nb: Vec<BTreeSet<Vertex>> = vec![BTreeSet::new(); n];
    for e in g.time_edges() {
        nb[e.u].insert(e.v);
        nb[e.v].insert(e.u);
    }
    let start = (0..n).find(|&v| nb[v].len() <= 1).unwrap();
    let mut pos = vec![usize::MAX; n];
    let (mut prev, mut cur, mut i) = (usize::MAX, start, 0);
    loop {
        pos[cur] = i;
        i += 1;
        match nb[cur].iter().find(|&&x| x != prev) {
            Some(&next) => {
                prev = cur;
                cur = next;
            }
            None => break,
        }
    }
    pos
}

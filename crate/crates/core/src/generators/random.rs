//! Seeded random instances for the cross-checks.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::graph::{build_temporal_graph, TemporalGraph, Time, Vertex};
use crate::instance::{Instance, Mode};

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Size knobs shared by the random families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RandomParams {
    pub n: usize,
    pub lifetime: Time,
    pub pairs: usize,
    pub mode: Mode,
}

fn pick_pairs(rng: &mut ChaCha8Rng, n: usize, k: usize) -> Vec<(Vertex, Vertex)> {
    (0..k)
        .map(|_| {
            let s = rng.gen_range(0..n);
            if n > 1 && rng.gen_bool(0.9) {
                let z = (s + rng.gen_range(1..n)) % n;
                (s, z)
            } else {
                (s, s)
            }
        })
        .collect()
}

fn labels_for(rng: &mut ChaCha8Rng, lifetime: Time, max_count: usize) -> Vec<Time> {
    let mut all: Vec<Time> = (1..=lifetime).collect();
    all.shuffle(rng);
    let count = rng.gen_range(1..=max_count.min(all.len()));
    all.truncate(count);
    all.sort_unstable();
    all
}

/// Arbitrary temporal graph: each vertex pair is an edge with probability one half,
/// carrying one to three random labels.
pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, lifetime: Time) -> Result<TemporalGraph> {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(0.5) {
                edges.extend(labels_for(rng, lifetime, 3).into_iter().map(|t| (u, v, t)));
            }
        }
    }
    build_temporal_graph(n, lifetime, &edges)
}

pub fn random_instance(rng: &mut ChaCha8Rng, p: RandomParams) -> Result<Instance> {
    let graph = random_graph(rng, p.n, p.lifetime)?;
    let pairs = pick_pairs(rng, p.n, p.pairs);
    Instance::new(graph, pairs, p.mode)
}

/// A random tree plus at most `extra` further edges, one or two labels per edge.
pub fn random_sparse_instance(rng: &mut ChaCha8Rng, p: RandomParams, extra: usize) -> Result<Instance> {
    let mut statics = Vec::new();
    for v in 1..p.n {
        statics.push((rng.gen_range(0..v), v));
    }
    let mut others: Vec<(Vertex, Vertex)> =
        (0..p.n).flat_map(|u| (u + 1..p.n).map(move |v| (u, v))).filter(|e| !statics.contains(e)).collect();
    others.shuffle(rng);
    let count = rng.gen_range(0..=extra.min(others.len()));
    statics.extend(others.into_iter().take(count));
    let mut edges = Vec::new();
    for (u, v) in statics {
        edges.extend(labels_for(rng, p.lifetime, 2).into_iter().map(|t| (u, v, t)));
    }
    let graph = build_temporal_graph(p.n, p.lifetime, &edges)?;
    let pairs = pick_pairs(rng, p.n, p.pairs);
    Instance::new(graph, pairs, p.mode)
}

/// A temporal line over a shuffled vertex order, each edge carrying one to three labels.
pub fn random_line_instance(rng: &mut ChaCha8Rng, p: RandomParams) -> Result<Instance> {
    let mut order: Vec<Vertex> = (0..p.n).collect();
    order.shuffle(rng);
    let mut edges = Vec::new();
    for w in order.windows(2) {
        edges.extend(labels_for(rng, p.lifetime, 3).into_iter().map(|t| (w[0], w[1], t)));
    }
    let graph = build_temporal_graph(p.n, p.lifetime, &edges)?;
    let pairs = pick_pairs(rng, p.n, p.pairs);
    Instance::new(graph, pairs, p.mode)
}

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{Time, Vertex};
use crate::instance::{Instance, Mode, Solution};
use crate::walk::TemporalWalk;

use super::mcc_paths::check_clique;
use super::{color_pairs, Builder, ColoredGraph};

/// Per-color vertices of the walks star. Indices into the `Vec`s are 0-based `l - 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColorBlock {
    pub s: Vertex,
    pub s_tilde: Vertex,
    pub z: Vertex,
    pub z_tilde: Vertex,
    pub w: Vec<Vertex>,
    pub w_tilde: Vec<Vertex>,
    pub x: Vec<Vertex>,
    pub x_tilde: Vec<Vertex>,
    pub y: Vec<Vertex>,
    pub y_tilde: Vec<Vertex>,
}

/// Vertex ids and time offsets of the walks star built from a colored graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct McWalksLayout {
    pub c: Vertex,
    pub blocks: Vec<ColorBlock>,
    pub s: BTreeMap<(usize, usize), Vertex>,
    pub z: BTreeMap<(usize, usize), Vertex>,
    /// `alpha[(j, (i, a))]`: vertex `a` of color `i` heading for color `j > i`.
    pub alpha: BTreeMap<(usize, (usize, usize)), Vertex>,
    pub beta: BTreeMap<((usize, usize), (usize, usize)), Vertex>,
    /// `gamma[(i, (j, b))]`: vertex `b` of color `j` reached from color `i < j`.
    pub gamma: BTreeMap<(usize, (usize, usize)), Vertex>,
    pub k: usize,
    pub n: usize,
}

impl McWalksLayout {
    fn pair_count(&self) -> Time {
        (self.k * (self.k - 1) / 2) as Time
    }

    fn block_len(&self) -> Time {
        (4 * self.k * self.n + 7) as Time
    }

    /// Absolute label of layer `r` in the block of color `i`.
    pub fn block_time(&self, i: usize, r: Time) -> Time {
        2 * self.pair_count() + i as Time * self.block_len() + r + 1
    }

    /// Absolute labels of the two opening layers of pair index `p`.
    pub fn prefix_times(&self, p: usize) -> (Time, Time) {
        (2 * p as Time + 1, 2 * p as Time + 2)
    }

    /// Absolute labels of the two closing layers of pair index `p`.
    pub fn suffix_times(&self, p: usize) -> (Time, Time) {
        let base = 2 * self.pair_count() + self.k as Time * self.block_len();
        (base + 2 * p as Time + 1, base + 2 * p as Time + 2)
    }

    pub fn lifetime(&self) -> Time {
        4 * self.pair_count() + self.k as Time * self.block_len()
    }
}

/// The walks-mode star for a multicolored clique input.
///
/// Pairs: `(s_i, z_i)` and `(s~_i, z~_i)` per color, then `(s_ij, z_ij)` per color pair.
pub fn gen_mcc_walks_star(g: &ColoredGraph) -> Result<(Instance, McWalksLayout)> {
    if g.k < 2 || g.n == 0 {
        return Err(Error::PreconditionViolated("need at least two colors and nonempty parts".into()));
    }
    let (k, n) = (g.k, g.n);
    let kn = k * n;
    let mut b = Builder::new();
    let c = b.vertex();
    let blocks: Vec<ColorBlock> = (0..k)
        .map(|_| ColorBlock {
            s: b.vertex(),
            s_tilde: b.vertex(),
            z: b.vertex(),
            z_tilde: b.vertex(),
            w: b.vertices(kn),
            w_tilde: b.vertices(kn),
            x: b.vertices(kn),
            x_tilde: b.vertices(kn),
            y: b.vertices(n),
            y_tilde: b.vertices(n),
        })
        .collect();
    let mut lay = McWalksLayout {
        c,
        blocks,
        s: BTreeMap::new(),
        z: BTreeMap::new(),
        alpha: BTreeMap::new(),
        beta: BTreeMap::new(),
        gamma: BTreeMap::new(),
        k,
        n,
    };
    let pairs_ij = color_pairs(k);
    for &(i, j) in &pairs_ij {
        lay.s.insert((i, j), b.vertex());
        lay.z.insert((i, j), b.vertex());
        for (a, bb) in g.between(i, j) {
            lay.alpha.entry((j, (i, a))).or_insert_with(|| b.vertex());
            let v = b.vertex();
            lay.beta.insert(((i, a), (j, bb)), v);
            lay.gamma.entry((i, (j, bb))).or_insert_with(|| b.vertex());
        }
    }

    let knt = kn as Time;
    let kt = k as Time;
    for (i, blk) in lay.blocks.iter().enumerate() {
        let at = |r: Time| lay.block_time(i, r);
        b.edge(blk.s, c, at(0));
        b.edge(blk.s_tilde, c, at(2));
        b.edge(blk.z, c, at(4 * knt + 2));
        b.edge(blk.z_tilde, c, at(4 * knt + 6));
        for l in 1..=knt {
            let idx = l as usize - 1;
            b.edge(blk.w[idx], c, at(4 * l - 3));
            b.edge(blk.w[idx], c, at(4 * l));
            b.edge(blk.w_tilde[idx], c, at(4 * l - 1));
            b.edge(blk.w_tilde[idx], c, at(4 * l + 2));
            b.edge(blk.x[idx], c, at(4 * l - 2));
            b.edge(blk.x[idx], c, at(4 * l + 1));
            b.edge(blk.x_tilde[idx], c, at(4 * l));
            b.edge(blk.x_tilde[idx], c, at(4 * l + 3));
        }
        for l in 1..=n as Time {
            let idx = l as usize - 1;
            b.edge(blk.y[idx], c, at(4 * kt * (l - 1) + 1));
            b.edge(blk.y[idx], c, at(4 * kt * l + 1));
            b.edge(blk.y_tilde[idx], c, at(4 * kt * (l - 1) + 3));
            b.edge(blk.y_tilde[idx], c, at(4 * kt * l + 3));
        }
    }
    for (p, &(i, j)) in pairs_ij.iter().enumerate() {
        let (t1, t2) = lay.prefix_times(p);
        let (tf1, tf) = lay.suffix_times(p);
        b.edge(lay.s[&(i, j)], c, t1);
        b.edge(lay.z[&(i, j)], c, tf);
        for (a, bb) in g.between(i, j) {
            let alpha = lay.alpha[&(j, (i, a))];
            let beta = lay.beta[&((i, a), (j, bb))];
            let gamma = lay.gamma[&(i, (j, bb))];
            let out_i = 4 * kt * a as Time + 4 * j as Time;
            let in_j = 4 * kt * bb as Time + 4 * (i as Time + 1);
            b.edge(c, alpha, t2);
            b.edge(alpha, c, lay.block_time(i, out_i));
            b.edge(c, beta, lay.block_time(i, out_i + 2));
            b.edge(beta, c, lay.block_time(j, in_j));
            b.edge(c, gamma, lay.block_time(j, in_j + 2));
            b.edge(gamma, c, tf1);
        }
    }
    let graph = b.build(lay.lifetime())?;
    let mut pairs = Vec::new();
    for blk in &lay.blocks {
        pairs.push((blk.s, blk.z));
        pairs.push((blk.s_tilde, blk.z_tilde));
    }
    pairs.extend(pairs_ij.iter().map(|ij| (lay.s[ij], lay.z[ij])));
    Ok((Instance::new(graph, pairs, Mode::Walks)?, lay))
}

/// The explicit solution for a multicolored clique given by one index per color.
pub fn witness_mcc_walks(g: &ColoredGraph, clique: &[usize]) -> Result<Solution> {
    check_clique(g, clique)?;
    let (_, lay) = gen_mcc_walks_star(g)?;
    let c = lay.c;
    let kt = lay.k as Time;
    let knt = (lay.k * lay.n) as Time;
    let mut walks = Vec::new();
    for (i, blk) in lay.blocks.iter().enumerate() {
        let at = |r: Time| lay.block_time(i, r);
        let a = clique[i] as Time + 1;
        let mut hops = vec![(at(0), c)];
        for l in 1..=kt * (a - 1) {
            hops.push((at(4 * l - 3), blk.w[l as usize - 1]));
            hops.push((at(4 * l), c));
        }
        hops.push((at(4 * kt * (a - 1) + 1), blk.y[clique[i]]));
        hops.push((at(4 * kt * a + 1), c));
        for l in kt * a + 1..=knt {
            hops.push((at(4 * l - 2), blk.x[l as usize - 1]));
            hops.push((at(4 * l + 1), c));
        }
        hops.push((at(4 * knt + 2), blk.z));
        walks.push(TemporalWalk::from_hops(blk.s, &hops));

        let mut hops = vec![(at(2), c)];
        for l in 1..=kt * (a - 1) {
            hops.push((at(4 * l - 1), blk.w_tilde[l as usize - 1]));
            hops.push((at(4 * l + 2), c));
        }
        hops.push((at(4 * kt * (a - 1) + 3), blk.y_tilde[clique[i]]));
        hops.push((at(4 * kt * a + 3), c));
        for l in kt * a + 1..=knt {
            hops.push((at(4 * l), blk.x_tilde[l as usize - 1]));
            hops.push((at(4 * l + 3), c));
        }
        hops.push((at(4 * knt + 6), blk.z_tilde));
        walks.push(TemporalWalk::from_hops(blk.s_tilde, &hops));
    }
    for (p, (i, j)) in color_pairs(lay.k).into_iter().enumerate() {
        let (a, bb) = (clique[i], clique[j]);
        let (t1, t2) = lay.prefix_times(p);
        let (tf1, tf) = lay.suffix_times(p);
        let out_i = 4 * kt * a as Time + 4 * j as Time;
        let in_j = 4 * kt * bb as Time + 4 * (i as Time + 1);
        let hops = [
            (t1, c),
            (t2, lay.alpha[&(j, (i, a))]),
            (lay.block_time(i, out_i), c),
            (lay.block_time(i, out_i + 2), lay.beta[&((i, a), (j, bb))]),
            (lay.block_time(j, in_j), c),
            (lay.block_time(j, in_j + 2), lay.gamma[&(i, (j, bb))]),
            (tf1, c),
            (tf, lay.z[&(i, j)]),
        ];
        walks.push(TemporalWalk::from_hops(lay.s[&(i, j)], &hops));
    }
    Ok(Solution { walks })
}

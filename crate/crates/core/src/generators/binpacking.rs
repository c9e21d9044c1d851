use crate::error::{Error, Result};
use crate::graph::{Time, Vertex};
use crate::instance::{Instance, Mode, Solution};
use crate::walk::TemporalWalk;

use super::Builder;

/// Unary bin packing: `items` must go into `bins` bins of capacity `bin_size`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinPackingInstance {
    pub items: Vec<u64>,
    pub bins: u64,
    pub bin_size: u64,
}

impl BinPackingInstance {
    pub fn total(&self) -> u64 {
        self.items.iter().sum()
    }

    pub fn capacity(&self) -> u64 {
        self.bins * self.bin_size
    }
}

/// Pads with unit items up to `b * B`; `None` when the items already exceed it.
pub fn normalize_binpacking(bp: &BinPackingInstance) -> Option<BinPackingInstance> {
    let (sum, cap) = (bp.total(), bp.capacity());
    if sum > cap {
        return None;
    }
    let mut out = bp.clone();
    out.items.extend(std::iter::repeat_n(1, (cap - sum) as usize));
    Some(out)
}

/// Vertex ids of the star built from a bin-packing instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarLayout {
    pub c: Vertex,
    pub s_dummy: Vertex,
    pub z_dummy: Vertex,
    pub s: Vec<Vertex>,
    pub z: Vec<Vertex>,
    /// First label of each item's block, minus one.
    pub offsets: Vec<Time>,
}

fn check(bp: &BinPackingInstance) -> Result<()> {
    if bp.bins == 0 || bp.bin_size == 0 || bp.items.contains(&0) {
        return Err(Error::PreconditionViolated("bins, bin size and item sizes must be positive".into()));
    }
    if bp.total() != bp.capacity() {
        return Err(Error::NotNormalized { sum: bp.total(), capacity: bp.capacity() });
    }
    Ok(())
}

fn layout(bp: &BinPackingInstance) -> (Builder, StarLayout) {
    let b = bp.bins as usize;
    let mut g = Builder::new();
    let c = g.vertex();
    let s_dummy = g.vertex();
    let z_dummy = g.vertex();
    let s = g.vertices(b);
    let z = g.vertices(b);
    let mut offsets = Vec::new();
    let mut off: Time = 0;
    for &x in &bp.items {
        offsets.push(off);
        off += (2 * bp.bins * x + 2 * bp.bins) as Time;
    }
    (g, StarLayout { c, s_dummy, z_dummy, s, z, offsets })
}

/// The temporal star for a normalized instance; pairs are the bins' copies in bin
/// order followed by the dummy copies.
pub fn gen_binpacking_star(bp: &BinPackingInstance) -> Result<(Instance, StarLayout)> {
    check(bp)?;
    let (mut g, lay) = layout(bp);
    let b = bp.bins as Time;
    for (i, &x) in bp.items.iter().enumerate() {
        let x = x as Time;
        let at = |r: Time| lay.offsets[i] + r;
        for j in 1..=b {
            let (sj, zj) = (lay.s[j as usize - 1], lay.z[j as usize - 1]);
            g.edge(lay.s_dummy, lay.c, at(2 * j - 1));
            g.edge(lay.c, lay.z_dummy, at(2 * j));
            g.edge(sj, lay.c, at(2 * j));
            for jp in 1..x {
                g.edge(lay.c, zj, at(2 * b * jp + 2 * j - 1));
                g.edge(sj, lay.c, at(2 * b * jp + 2 * j));
            }
            g.edge(lay.c, zj, at(2 * b * x + 2 * j - 1));
            g.edge(lay.s_dummy, lay.c, at(2 * b * x + 2 * j - 1));
            g.edge(lay.c, lay.z_dummy, at(2 * b * x + 2 * j));
        }
    }
    let lifetime: Time = bp.items.iter().map(|&x| (2 * bp.bins * x + 2 * bp.bins) as Time).sum();
    let graph = g.build(lifetime)?;
    let mut pairs = Vec::new();
    for j in 0..bp.bins as usize {
        pairs.extend(std::iter::repeat_n((lay.s[j], lay.z[j]), bp.bin_size as usize));
    }
    let dummies = bp.items.len() * (bp.bins as usize - 1);
    pairs.extend(std::iter::repeat_n((lay.s_dummy, lay.z_dummy), dummies));
    Ok((Instance::new(graph, pairs, Mode::Walks)?, lay))
}

/// The schedule from a packing `assign` (0-based bin per item) into a solution.
pub fn witness_binpacking(bp: &BinPackingInstance, assign: &[usize]) -> Result<Solution> {
    check(bp)?;
    if assign.len() != bp.items.len() {
        return Err(Error::BadAssignment(format!("{} items but {} bins assigned", bp.items.len(), assign.len())));
    }
    let b = bp.bins as usize;
    let mut load = vec![0u64; b];
    for (i, &f) in assign.iter().enumerate() {
        if f >= b {
            return Err(Error::BadAssignment(format!("item {i} sent to bin {f} of {b}")));
        }
        load[f] += bp.items[i];
    }
    if let Some(j) = (0..b).find(|&j| load[j] != bp.bin_size) {
        return Err(Error::BadAssignment(format!("bin {j} holds {} instead of {}", load[j], bp.bin_size)));
    }
    let (_, lay) = layout(bp);
    let bt = bp.bins as Time;
    let mut per_bin: Vec<Vec<TemporalWalk>> = vec![Vec::new(); b];
    let mut dummies = Vec::new();
    for (i, &f) in assign.iter().enumerate() {
        let x = bp.items[i] as Time;
        let at = |r: Time| lay.offsets[i] + r;
        let ff = f as Time + 1;
        for jj in 1..=x {
            per_bin[f].push(TemporalWalk::from_hops(
                lay.s[f],
                &[(at(2 * bt * (jj - 1) + 2 * ff), lay.c), (at(2 * bt * jj + 2 * ff - 1), lay.z[f])],
            ));
        }
        for r in (1..ff).chain(ff + 1..=bt) {
            let base = if r < ff { 0 } else { 2 * bt * x };
            dummies.push(TemporalWalk::from_hops(
                lay.s_dummy,
                &[(at(base + 2 * r - 1), lay.c), (at(base + 2 * r), lay.z_dummy)],
            ));
        }
    }
    let mut walks: Vec<TemporalWalk> = per_bin.into_iter().flatten().collect();
    walks.extend(dummies);
    Ok(Solution { walks })
}

use super::binpacking::BinPackingInstance;
use super::{color_pairs, ColoredGraph};

/// A bin per item (0-based) filling every bin exactly, if one exists.
pub fn find_packing(bp: &BinPackingInstance) -> Option<Vec<usize>> {
    if bp.total() != bp.capacity() || bp.bins == 0 {
        return None;
    }
    let mut load = vec![0u64; bp.bins as usize];
    let mut assign = Vec::with_capacity(bp.items.len());
    fn go(bp: &BinPackingInstance, load: &mut [u64], assign: &mut Vec<usize>) -> bool {
        let i = assign.len();
        if i == bp.items.len() {
            return load.iter().all(|&l| l == bp.bin_size);
        }
        for j in 0..load.len() {
            if load[j] + bp.items[i] <= bp.bin_size {
                load[j] += bp.items[i];
                assign.push(j);
                if go(bp, load, assign) {
                    return true;
                }
                assign.pop();
                load[j] -= bp.items[i];
            }
        }
        false
    }
    go(bp, &mut load, &mut assign).then_some(assign)
}

/// Whether the items fit exactly into the bins. Unnormalized inputs are padded first.
pub fn decide_binpacking(bp: &BinPackingInstance) -> bool {
    match super::normalize_binpacking(bp) {
        Some(norm) => find_packing(&norm).is_some(),
        None => false,
    }
}

/// One vertex index per color forming a clique, smallest in lexicographic order.
pub fn find_clique(g: &ColoredGraph) -> Option<Vec<usize>> {
    let mut pick = vec![0usize; g.k];
    loop {
        if color_pairs(g.k).iter().all(|&(i, j)| g.has_edge((i, pick[i]), (j, pick[j]))) {
            return Some(pick);
        }
        let mut pos = g.k;
        loop {
            if pos == 0 {
                return None;
            }
            pos -= 1;
            pick[pos] += 1;
            if pick[pos] < g.n {
                break;
            }
            pick[pos] = 0;
        }
    }
}

pub fn decide_mcc(g: &ColoredGraph) -> bool {
    g.n > 0 && find_clique(g).is_some()
}

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::foremost::prefix_foremost_along;
use crate::graph::{Time, Vertex};
use crate::instance::{Instance, Mode, Solution};
use crate::walk::TemporalWalk;

use super::gadget::{gen_gadget_h, horizon, ExitRule, Gadget};
use super::{color_pairs, Builder, ColoredGraph};

/// Vertex ids of the paths instance built from a colored graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct McPathsLayout {
    pub colors: Vec<Gadget>,
    pub combos: BTreeMap<(usize, usize), Gadget>,
    pub s: BTreeMap<(usize, usize), Vertex>,
    pub z: BTreeMap<(usize, usize), Vertex>,
    /// `u[(i,j)][a]` stands for vertex `a` of color `i`.
    pub u: BTreeMap<(usize, usize), Vec<Vertex>>,
    /// `v[(i,j)][b]` stands for vertex `b` of color `j`.
    pub v: BTreeMap<(usize, usize), Vec<Vertex>>,
    /// Per color pair, one vertex before and one after the pair gadget for every edge.
    pub ve: BTreeMap<(usize, usize), Vec<Vertex>>,
    pub ve_out: BTreeMap<(usize, usize), Vec<Vertex>>,
    /// Edges of each color pair in gadget order.
    pub edge_order: BTreeMap<(usize, usize), Vec<(usize, usize)>>,
    /// Label scale, `max(n, k)`.
    pub scale: usize,
    pub m: usize,
}

fn check(g: &ColoredGraph) -> Result<()> {
    if g.k < 2 || g.n == 0 {
        return Err(Error::PreconditionViolated("need at least two colors and nonempty parts".into()));
    }
    for c in 0..g.k {
        for a in 0..g.n {
            for d in (0..g.k).filter(|&d| d != c) {
                if !(0..g.n).any(|b| g.has_edge((c, a), (d, b))) {
                    return Err(Error::PreconditionViolated(format!(
                        "vertex {a} of color {c} has no neighbor of color {d}"
                    )));
                }
            }
        }
    }
    let sizes: Vec<usize> = color_pairs(g.k).iter().map(|&(i, j)| g.between(i, j).len()).collect();
    if sizes.windows(2).any(|w| w[0] != w[1]) {
        return Err(Error::PreconditionViolated(format!("color pairs have different edge counts {sizes:?}")));
    }
    Ok(())
}

/// The paths instance for a multicolored clique input.
///
/// Pairs: one per color gadget, one per color-pair gadget, then one `(s_ij, z_ij)`
/// per color pair.
pub fn gen_mcc_paths(g: &ColoredGraph) -> Result<(Instance, McPathsLayout)> {
    check(g)?;
    gen_mcc_paths_unchecked(g)
}

/// As [`gen_mcc_paths`] without the neighbor and edge-count preconditions.
pub fn gen_mcc_paths_unchecked(g: &ColoredGraph) -> Result<(Instance, McPathsLayout)> {
    let k = g.k;
    let big_n = g.n.max(k);
    let pairs_ij = color_pairs(k);
    let m = pairs_ij.iter().map(|&(i, j)| g.between(i, j).len()).max().unwrap_or(0);
    let (kn, mt) = ((k * big_n) as Time, m as Time);
    let kt = k as Time;
    let base = |i: usize| 2 * i as Time * (kn + mt);
    let color_t = |i: usize| base(i) + 2 * kt;
    let combo_t = |i: usize| base(i) + 2 * kn;

    let mut b = Builder::new();
    let colors: Vec<Gadget> =
        (0..k).map(|i| gen_gadget_h(&mut b, g.n, k - 1, color_t(i), big_n, ExitRule::Separated)).collect();
    let mut lay = McPathsLayout {
        colors,
        combos: BTreeMap::new(),
        s: BTreeMap::new(),
        z: BTreeMap::new(),
        u: BTreeMap::new(),
        v: BTreeMap::new(),
        ve: BTreeMap::new(),
        ve_out: BTreeMap::new(),
        edge_order: BTreeMap::new(),
        scale: big_n,
        m,
    };
    for &(i, j) in &pairs_ij {
        let edges = g.between(i, j);
        let gad = gen_gadget_h(&mut b, edges.len(), 1, combo_t(i), big_n, ExitRule::Separated);
        lay.combos.insert((i, j), gad);
        lay.s.insert((i, j), b.vertex());
        lay.z.insert((i, j), b.vertex());
        lay.ve.insert((i, j), b.vertices(edges.len()));
        lay.ve_out.insert((i, j), b.vertices(edges.len()));
        lay.u.insert((i, j), b.vertices(g.n));
        lay.v.insert((i, j), b.vertices(g.n));
        lay.edge_order.insert((i, j), edges);
    }
    let top = horizon(big_n);
    for &(i, j) in &pairs_ij {
        let (ci, cj) = (&lay.colors[i], &lay.colors[j]);
        let combo = &lay.combos[&(i, j)];
        let (it, jt) = (i as Time + 1, j as Time + 1);
        for (l, &(a, bb)) in lay.edge_order[&(i, j)].iter().enumerate() {
            let (a1, b1, l1) = (a as Time + 1, bb as Time + 1, l as Time + 1);
            let at_i = color_t(i) + (2 * a1 - 1) * (kt - 1);
            let at_j = color_t(j) + (2 * b1 - 1) * (kt - 1);
            let u = lay.u[&(i, j)][a];
            let v = lay.v[&(i, j)][bb];
            let (ve, ve_out) = (lay.ve[&(i, j)][l], lay.ve_out[&(i, j)][l]);
            b.edge(lay.s[&(i, j)], u, 1);
            b.edge(u, ci.c, at_i + 2 * (jt - 1) - 2);
            b.edge(ve, ci.c_exit, at_i + 2 * (jt - 1) + 1);
            b.edge(ve, combo.c, combo_t(i) + 2 * l1 - 1);
            b.edge(ve_out, combo.c_exit, combo_t(i) + 2 * l1 + 2);
            b.edge(ve_out, cj.c, at_j + 2 * it - 2);
            b.edge(lay.z[&(i, j)], v, top);
            b.edge(v, cj.c_exit, at_j + 2 * it + 1);
        }
    }
    let highest_inner = b.max_label_except(top);
    if highest_inner >= top {
        return Err(Error::PreconditionViolated(format!("labels reach {highest_inner}, horizon is {top}")));
    }
    let graph = b.build(top)?;
    let mut pairs: Vec<(Vertex, Vertex)> = lay.colors.iter().map(|g| (g.s, g.z)).collect();
    pairs.extend(lay.combos.values().map(|g| (g.s, g.z)));
    pairs.extend(pairs_ij.iter().map(|ij| (lay.s[ij], lay.z[ij])));
    Ok((Instance::new(graph, pairs, Mode::Paths)?, lay))
}

pub(crate) fn check_clique(g: &ColoredGraph, clique: &[usize]) -> Result<()> {
    if clique.len() != g.k {
        return Err(Error::NotAClique(format!("{} vertices for {} colors", clique.len(), g.k)));
    }
    if let Some(i) = (0..g.k).find(|&i| clique[i] >= g.n) {
        return Err(Error::NotAClique(format!("color {i} has no vertex {}", clique[i])));
    }
    for (i, j) in color_pairs(g.k) {
        if !g.has_edge((i, clique[i]), (j, clique[j])) {
            return Err(Error::NotAClique(format!("({i},{}) and ({j},{}) are not adjacent", clique[i], clique[j])));
        }
    }
    Ok(())
}

fn follow(inst: &Instance, route: &[Vertex]) -> Result<TemporalWalk> {
    prefix_foremost_along(&inst.graph, route, 1)?
        .ok_or_else(|| Error::PreconditionViolated(format!("route {route:?} has no increasing labels")))
}

/// The explicit solution for a multicolored clique given by one index per color.
pub fn witness_mcc_paths(g: &ColoredGraph, clique: &[usize]) -> Result<Solution> {
    check_clique(g, clique)?;
    let (inst, lay) = gen_mcc_paths(g)?;
    let mut walks = Vec::new();
    for (i, gad) in lay.colors.iter().enumerate() {
        walks.push(follow(&inst, &[gad.s, gad.c, gad.w[clique[i]][0], gad.c_exit, gad.z])?);
    }
    let edge_index = |i: usize, j: usize| -> usize {
        lay.edge_order[&(i, j)].iter().position(|&e| e == (clique[i], clique[j])).unwrap()
    };
    for (&(i, j), gad) in &lay.combos {
        let l = edge_index(i, j);
        walks.push(follow(&inst, &[gad.s, gad.c, gad.w[l][0], gad.c_exit, gad.z])?);
    }
    for (i, j) in color_pairs(g.k) {
        let l = edge_index(i, j);
        let (ci, cj, combo) = (&lay.colors[i], &lay.colors[j], &lay.combos[&(i, j)]);
        let route = [
            lay.s[&(i, j)],
            lay.u[&(i, j)][clique[i]],
            ci.c,
            ci.w[clique[i]][j],
            ci.c_exit,
            lay.ve[&(i, j)][l],
            combo.c,
            combo.w[l][1],
            combo.c_exit,
            lay.ve_out[&(i, j)][l],
            cj.c,
            cj.w[clique[j]][i + 1],
            cj.c_exit,
            lay.v[&(i, j)][clique[j]],
            lay.z[&(i, j)],
        ];
        walks.push(follow(&inst, &route)?);
    }
    Ok(Solution { walks })
}

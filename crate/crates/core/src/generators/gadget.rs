use crate::error::Result;
use crate::graph::{Time, Vertex};
use crate::instance::{Instance, Mode};

use super::Builder;

/// Label of the edge from `w_0` of tuple `l` to the exit vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ExitRule {
    /// `t + 2lq + 2`.
    Tight,
    /// `t + (2l+1)q + 2`, one step after the last `w_q -> c'` label of the tuple.
    #[default]
    Separated,
}

/// Vertex ids of one selection gadget.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gadget {
    pub s: Vertex,
    pub c: Vertex,
    pub c_exit: Vertex,
    pub z: Vertex,
    /// `w[l][r]` for tuple `l` (0-based) and `r` in `0..=q`.
    pub w: Vec<Vec<Vertex>>,
    pub p: usize,
    pub q: usize,
    pub t: Time,
}

impl Gadget {
    pub fn entry_label(&self, l: usize, r: usize) -> Time {
        let (q, l) = (self.q as Time, l as Time + 1);
        if r == 0 {
            self.t + (2 * l - 1) * q - 1
        } else {
            self.t + (2 * l - 1) * q + 2 * r as Time - 1
        }
    }

    pub fn exit_label(&self, l: usize, r: usize, rule: ExitRule) -> Time {
        let (q, lt) = (self.q as Time, l as Time + 1);
        match (r, rule) {
            (0, ExitRule::Tight) => self.t + 2 * lt * q + 2,
            (0, ExitRule::Separated) => self.t + (2 * lt + 1) * q + 2,
            _ => self.entry_label(l, r) + 1,
        }
    }
}

/// Adds `H(p, q, t)` to `b`; the sink edge carries `4 n^3`.
pub fn gen_gadget_h(b: &mut Builder, p: usize, q: usize, t: Time, n_for_labels: usize, rule: ExitRule) -> Gadget {
    let s = b.vertex();
    let c = b.vertex();
    let c_exit = b.vertex();
    let z = b.vertex();
    let w: Vec<Vec<Vertex>> = (0..p).map(|_| b.vertices(q + 1)).collect();
    let g = Gadget { s, c, c_exit, z, w, p, q, t };
    b.edge(s, c, 1);
    b.edge(c_exit, z, horizon(n_for_labels));
    for l in 0..p {
        for r in 0..=q {
            b.edge(c, g.w[l][r], g.entry_label(l, r));
            b.edge(g.w[l][r], c_exit, g.exit_label(l, r, rule));
        }
    }
    g
}

pub(crate) fn horizon(n: usize) -> Time {
    4 * (n as Time).pow(3)
}

/// A standalone paths instance holding only the gadget and its own pair.
pub fn gadget_instance(p: usize, q: usize, t: Time, n_for_labels: usize, rule: ExitRule) -> Result<(Instance, Gadget)> {
    let mut b = Builder::new();
    let g = gen_gadget_h(&mut b, p, q, t, n_for_labels, rule);
    let graph = b.build(horizon(n_for_labels))?;
    Ok((Instance::new(graph, vec![(g.s, g.z)], Mode::Paths)?, g))
}

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Time, Vertex};
use crate::instance::{Instance, Mode, Solution};
use crate::walk::{first_overlap, is_temporal_path, is_temporal_walk};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ViolationKind {
    NotAWalk { pair: usize },
    NotAPath { pair: usize },
    WrongEndpoints { pair: usize },
    Intersection { pair_i: usize, pair_j: usize, vertex: Vertex, overlap: (Time, Time) },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub kind: ViolationKind,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.kind {
            ViolationKind::NotAWalk { .. } => "NotAWalk",
            ViolationKind::NotAPath { .. } => "NotAPath",
            ViolationKind::WrongEndpoints { .. } => "WrongEndpoints",
            ViolationKind::Intersection { .. } => "Intersection",
        };
        write!(f, "{tag}: {}", self.detail)
    }
}

/// Checks every walk and every pair of walks; returns all violations found.
pub fn verify_solution(inst: &Instance, sol: &Solution) -> Result<Vec<Violation>> {
    if sol.walks.len() != inst.pairs.len() {
        return Err(Error::ArityMismatch { expected: inst.pairs.len(), got: sol.walks.len() });
    }
    let mut out = Vec::new();
    for (i, (w, &(s, z))) in sol.walks.iter().zip(&inst.pairs).enumerate() {
        if !is_temporal_walk(&inst.graph, w) {
            out.push(Violation {
                kind: ViolationKind::NotAWalk { pair: i },
                detail: format!("walk {i} is not a temporal walk of the graph"),
            });
        }
        if w.start != s || w.end() != z {
            out.push(Violation {
                kind: ViolationKind::WrongEndpoints { pair: i },
                detail: format!("walk {i} runs {}->{}, pair is {s}->{z}", w.start, w.end()),
            });
        }
        if inst.mode == Mode::Paths && !is_temporal_path(w) {
            out.push(Violation {
                kind: ViolationKind::NotAPath { pair: i },
                detail: format!("walk {i} revisits a vertex"),
            });
        }
    }
    for i in 0..sol.walks.len() {
        for j in i + 1..sol.walks.len() {
            if let Some((a, b)) = first_overlap(&sol.walks[i], &sol.walks[j]) {
                let overlap = (a.from.max(b.from), a.to.min(b.to));
                out.push(Violation {
                    kind: ViolationKind::Intersection { pair_i: i, pair_j: j, vertex: a.vertex, overlap },
                    detail: format!(
                        "walks {i} and {j} both hold vertex {} during [{},{}] ([{},{}] vs [{},{}])",
                        a.vertex, overlap.0, overlap.1, a.from, a.to, b.from, b.to
                    ),
                });
            }
        }
    }
    Ok(out)
}

pub fn is_valid_solution(inst: &Instance, sol: &Solution) -> bool {
    matches!(verify_solution(inst, sol), Ok(v) if v.is_empty())
}

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{TemporalGraph, Vertex};
use crate::walk::TemporalWalk;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    Paths,
    Walks,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Paths => "paths",
            Mode::Walks => "walks",
        })
    }
}

impl FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "paths" => Ok(Mode::Paths),
            "walks" => Ok(Mode::Walks),
            other => Err(format!("unknown mode `{other}`")),
        }
    }
}

/// A temporal graph with an ordered multiset of source-sink pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub graph: TemporalGraph,
    pub pairs: Vec<(Vertex, Vertex)>,
    pub mode: Mode,
}

impl Instance {
    pub fn new(graph: TemporalGraph, pairs: Vec<(Vertex, Vertex)>, mode: Mode) -> Result<Self> {
        let n = graph.n();
        for &(s, z) in &pairs {
            for v in [s, z] {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
            }
        }
        Ok(Instance { graph, pairs, mode })
    }

    /// The set of vertices that appear as a source or a sink.
    pub fn terminals(&self) -> BTreeSet<Vertex> {
        self.pairs.iter().flat_map(|&(s, z)| [s, z]).collect()
    }

    pub fn with_mode(&self, mode: Mode) -> Instance {
        Instance { mode, ..self.clone() }
    }
}

/// One walk per pair, in pair order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Solution {
    pub walks: Vec<TemporalWalk>,
}

impl Solution {
    pub fn total_length(&self) -> usize {
        self.walks.iter().map(TemporalWalk::len).sum()
    }
}

//! Plain-text instance and solution files.
//!
//! ```text
//! tgf 1
//! n 3
//! T 2
//! m 2
//! e 0 1 1
//! e 1 2 2
//! k 1
//! p 0 2
//! ```
//!
//! A solution lists one `w <len> <v0> <t1> <v1> ...` line per pair after `sol 1` and `k`.

use std::fmt::Write;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{build_temporal_graph, Time, Vertex};
use crate::instance::{Instance, Mode, Solution};
use crate::walk::TemporalWalk;

pub fn emit_instance(inst: &Instance) -> String {
    let g = &inst.graph;
    let mut out = String::new();
    let _ = writeln!(out, "tgf 1\nn {}\nT {}\nm {}", g.n(), g.lifetime(), g.num_time_edges());
    for e in g.time_edges() {
        let _ = writeln!(out, "e {} {} {}", e.u, e.v, e.t);
    }
    let _ = writeln!(out, "k {}", inst.pairs.len());
    for (s, z) in &inst.pairs {
        let _ = writeln!(out, "p {s} {z}");
    }
    out
}

pub fn emit_solution(sol: &Solution) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "sol 1\nk {}", sol.walks.len());
    for w in &sol.walks {
        let _ = write!(out, "w {} {}", w.len(), w.start);
        for tr in &w.transitions {
            let _ = write!(out, " {} {}", tr.t, tr.to);
        }
        out.push('\n');
    }
    out
}

struct Lines<'a> {
    inner: std::iter::Enumerate<std::str::Lines<'a>>,
    last: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        Lines { inner: text.lines().enumerate(), last: 0 }
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse { line: self.last, msg: msg.into() }
    }

    /// Next non-blank line with comments stripped, split on whitespace.
    fn next_tokens(&mut self) -> Result<Vec<&'a str>> {
        for (i, raw) in self.inner.by_ref() {
            self.last = i + 1;
            let body = raw.split('#').next().unwrap_or("");
            let toks: Vec<&str> = body.split_whitespace().collect();
            if !toks.is_empty() {
                return Ok(toks);
            }
        }
        self.last += 1;
        Err(self.err("unexpected end of file"))
    }

    fn directive(&mut self, key: &str, arity: usize) -> Result<Vec<&'a str>> {
        let toks = self.next_tokens()?;
        if toks[0] != key {
            return Err(self.err(format!("expected `{key}`, found `{}`", toks[0])));
        }
        if toks.len() != arity + 1 {
            return Err(self.err(format!("`{key}` takes {arity} values, got {}", toks.len() - 1)));
        }
        Ok(toks[1..].to_vec())
    }

    fn num<T: FromStr>(&self, tok: &str) -> Result<T> {
        tok.parse().map_err(|_| self.err(format!("`{tok}` is not a valid number")))
    }

    fn scalar<T: FromStr>(&mut self, key: &str) -> Result<T> {
        let tok = self.directive(key, 1)?[0];
        self.num(tok)
    }

    fn expect_end(&mut self) -> Result<()> {
        match self.next_tokens() {
            Ok(toks) => Err(self.err(format!("trailing content `{}`", toks.join(" ")))),
            Err(_) => Ok(()),
        }
    }
}

pub fn parse_instance(text: &str, mode: Mode) -> Result<Instance> {
    let mut ls = Lines::new(text);
    let header = ls.directive("tgf", 1)?;
    if header[0] != "1" {
        return Err(ls.err(format!("unsupported version {}", header[0])));
    }
    let n: usize = ls.scalar("n")?;
    let lifetime: Time = ls.scalar("T")?;
    let m: usize = ls.scalar("m")?;
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let e = ls.directive("e", 3)?;
        let edge = (ls.num::<Vertex>(e[0])?, ls.num::<Vertex>(e[1])?, ls.num::<Time>(e[2])?);
        edges.push(edge);
    }
    let graph = build_temporal_graph(n, lifetime, &edges).map_err(|e| ls.err(e.to_string()))?;
    let k: usize = ls.scalar("k")?;
    let mut pairs = Vec::with_capacity(k);
    for _ in 0..k {
        let p = ls.directive("p", 2)?;
        let pair: (Vertex, Vertex) = (ls.num(p[0])?, ls.num(p[1])?);
        if pair.0 >= n || pair.1 >= n {
            return Err(ls.err(format!("pair ({}, {}) outside [0, {n})", pair.0, pair.1)));
        }
        pairs.push(pair);
    }
    ls.expect_end()?;
    Instance::new(graph, pairs, mode).map_err(|e| ls.err(e.to_string()))
}

pub fn parse_solution(text: &str) -> Result<Solution> {
    let mut ls = Lines::new(text);
    let header = ls.directive("sol", 1)?;
    if header[0] != "1" {
        return Err(ls.err(format!("unsupported version {}", header[0])));
    }
    let k: usize = ls.scalar("k")?;
    let mut walks = Vec::with_capacity(k);
    for _ in 0..k {
        let toks = ls.next_tokens()?;
        if toks[0] != "w" || toks.len() < 3 {
            return Err(ls.err("expected `w <len> <v0> ...`"));
        }
        let len: usize = ls.num(toks[1])?;
        if toks.len() != 3 + 2 * len {
            return Err(ls.err(format!("walk of length {len} needs {} values", 2 + 2 * len)));
        }
        let start: Vertex = ls.num(toks[2])?;
        let mut hops = Vec::with_capacity(len);
        for pair in toks[3..].chunks(2) {
            hops.push((ls.num::<Time>(pair[0])?, ls.num::<Vertex>(pair[1])?));
        }
        walks.push(TemporalWalk::from_hops(start, &hops));
    }
    ls.expect_end()?;
    Ok(Solution { walks })
}

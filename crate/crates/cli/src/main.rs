//! `tdp`: generate, solve, verify and benchmark temporally disjoint path instances.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use temporal_disjoint::format::{emit_instance, emit_solution, parse_instance, parse_solution};
use temporal_disjoint::generators::random::{
    random_instance, random_line_instance, random_sparse_instance, rng_from_seed, RandomParams,
};
use temporal_disjoint::generators::{
    decide_binpacking, gadget_instance, gen_binpacking_star, gen_mcc_paths, gen_mcc_walks_star, normalize_binpacking,
    witness_mcc_paths, witness_mcc_walks, BinPackingInstance, ColoredGraph, ExitRule,
};
use temporal_disjoint::structure::{line_order, underlying_graph};
use temporal_disjoint::verifier::{is_valid_solution, verify_solution};
use temporal_disjoint::{budget_from_env, fes, line, oracle, Error, Instance, Mode, Solution};

#[derive(Parser)]
#[command(name = "tdp", version, about = "Temporally disjoint paths and walks")]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a generated instance file.
    Generate {
        #[command(subcommand)]
        kind: GenKind,
    },
    /// Decide an instance; prints YES or NO.
    Solve {
        instance: PathBuf,
        #[arg(long, value_enum, default_value_t = ModeArg::Paths)]
        mode: ModeArg,
        #[arg(long, value_enum, default_value_t = Algo::Auto)]
        algo: Algo,
        /// Where to write the solution on YES; printed to stdout otherwise.
        #[arg(long)]
        solution: Option<PathBuf>,
    },
    /// Check a solution file against an instance; prints OK or FAIL.
    Verify {
        instance: PathBuf,
        solution: PathBuf,
        #[arg(long, value_enum, default_value_t = ModeArg::Paths)]
        mode: ModeArg,
    },
    /// Run a cross-check suite.
    Bench {
        #[arg(value_enum)]
        suite: Suite,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 300)]
        count: usize,
        #[arg(long)]
        csv: Option<PathBuf>,
    },
}

#[derive(Args)]
struct Out {
    /// Output instance file.
    #[arg(short, long)]
    out: PathBuf,
}

#[derive(Args)]
struct ColoredArgs {
    /// Number of colors.
    #[arg(long)]
    k: usize,
    /// Vertices per color.
    #[arg(long)]
    n: usize,
    /// Edges as `c:i-d:j`, comma separated; every edge between colors when omitted.
    #[arg(long)]
    edges: Option<String>,
}

#[derive(Subcommand)]
enum GenKind {
    /// Star from a bin-packing instance.
    Binpacking {
        /// Item sizes, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        items: Vec<u64>,
        #[arg(long)]
        bins: u64,
        #[arg(long)]
        binsize: u64,
        /// Pad with unit items first.
        #[arg(long)]
        normalize: bool,
        #[command(flatten)]
        out: Out,
    },
    /// Paths instance from a multicolored clique input (needs k < n).
    MccPaths {
        #[command(flatten)]
        graph: ColoredArgs,
        #[command(flatten)]
        out: Out,
    },
    /// Walks-mode star from a multicolored clique input.
    MccWalks {
        #[command(flatten)]
        graph: ColoredArgs,
        #[command(flatten)]
        out: Out,
    },
    /// A standalone selection gadget.
    Gadget {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
        #[arg(long, default_value_t = 2)]
        t: u32,
        /// Size parameter of the sink label.
        #[arg(long, default_value_t = 3)]
        n_labels: usize,
        #[arg(long, value_enum, default_value_t = RuleArg::Separated)]
        rule: RuleArg,
        #[command(flatten)]
        out: Out,
    },
    /// Seeded random instance.
    Random {
        #[arg(long)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Family::General)]
        family: Family,
        #[arg(long, default_value_t = 6)]
        n: usize,
        #[arg(long = "lifetime", short = 'T', default_value_t = 8)]
        lifetime: u32,
        #[arg(long, default_value_t = 2)]
        pairs: usize,
        /// Chords beyond the spanning tree, for the sparse family.
        #[arg(long, default_value_t = 2)]
        extra: usize,
        #[command(flatten)]
        out: Out,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Paths,
    Walks,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Paths => Mode::Paths,
            ModeArg::Walks => Mode::Walks,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Algo {
    Oracle,
    Fes,
    Line,
    Auto,
}

#[derive(Clone, Copy, ValueEnum)]
enum RuleArg {
    Tight,
    Separated,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    General,
    Sparse,
    Line,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    OracleVsFes,
    OracleVsLine,
    Reductions,
}

/// A finished command: stdout lines and the exit status.
struct Report {
    lines: Vec<String>,
    code: u8,
}

impl Report {
    fn ok(lines: Vec<String>) -> Self {
        Report { lines, code: 0 }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.cmd {
        Command::Generate { kind } => generate(kind),
        Command::Solve { instance, mode, algo, solution } => solve(&instance, mode.into(), algo, solution.as_deref()),
        Command::Verify { instance, solution, mode } => verify(&instance, &solution, mode.into()),
        Command::Bench { suite, seed, count, csv } => bench(suite, seed, count, csv.as_deref()),
    };
    match result {
        Ok(r) => {
            for l in r.lines {
                println!("{l}");
            }
            ExitCode::from(r.code)
        }
        Err(e) => {
            println!("FAIL");
            eprintln!("error: {e:#}");
            let limit = e.chain().any(|c| matches!(c.downcast_ref::<Error>(), Some(Error::ResourceLimit { .. })));
            ExitCode::from(if limit { 3 } else { 2 })
        }
    }
}

fn read(path: &Path) -> anyhow::Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn load_instance(path: &Path, mode: Mode) -> anyhow::Result<Instance> {
    parse_instance(&read(path)?, mode).with_context(|| format!("parsing {}", path.display()))
}

fn parse_colored(a: &ColoredArgs) -> anyhow::Result<ColoredGraph> {
    let Some(list) = &a.edges else {
        return Ok(ColoredGraph::complete(a.k, a.n));
    };
    let vertex = |s: &str| -> anyhow::Result<(usize, usize)> {
        let (c, i) = s.trim().split_once(':').ok_or_else(|| anyhow!("bad vertex `{s}`, expected color:index"))?;
        Ok((c.parse()?, i.parse()?))
    };
    let mut edges = Vec::new();
    for e in list.split(',').filter(|e| !e.trim().is_empty()) {
        let (a, b) = e.split_once('-').ok_or_else(|| anyhow!("bad edge `{e}`, expected c:i-d:j"))?;
        edges.push((vertex(a)?, vertex(b)?));
    }
    Ok(ColoredGraph::new(a.k, a.n, &edges)?)
}

fn write_instance(inst: &Instance, out: &Out) -> anyhow::Result<Report> {
    fs::write(&out.out, emit_instance(inst)).with_context(|| format!("writing {}", out.out.display()))?;
    let g = &inst.graph;
    Ok(Report::ok(vec![format!("generated n={} T={} |S|={}", g.n(), g.lifetime(), inst.pairs.len())]))
}

fn generate(kind: GenKind) -> anyhow::Result<Report> {
    match kind {
        GenKind::Binpacking { items, bins, binsize, normalize, out } => {
            let mut bp = BinPackingInstance { items, bins, bin_size: binsize };
            if normalize {
                bp = normalize_binpacking(&bp).ok_or_else(|| anyhow!("items exceed bins * binsize"))?;
            }
            write_instance(&gen_binpacking_star(&bp)?.0, &out)
        }
        GenKind::MccPaths { graph, out } => {
            if graph.k >= graph.n {
                bail!("this construction needs k < n, got k={} n={}", graph.k, graph.n);
            }
            write_instance(&gen_mcc_paths(&parse_colored(&graph)?)?.0, &out)
        }
        GenKind::MccWalks { graph, out } => write_instance(&gen_mcc_walks_star(&parse_colored(&graph)?)?.0, &out),
        GenKind::Gadget { p, q, t, n_labels, rule, out } => {
            let rule = match rule {
                RuleArg::Tight => ExitRule::Tight,
                RuleArg::Separated => ExitRule::Separated,
            };
            write_instance(&gadget_instance(p, q, t, n_labels, rule)?.0, &out)
        }
        GenKind::Random { seed, family, n, lifetime, pairs, extra, out } => {
            if n == 0 {
                bail!("need at least one vertex");
            }
            let mut rng = rng_from_seed(seed);
            let p = RandomParams { n, lifetime, pairs, mode: Mode::Walks };
            let inst = match family {
                Family::General => random_instance(&mut rng, p)?,
                Family::Sparse => random_sparse_instance(&mut rng, p, extra)?,
                Family::Line => random_line_instance(&mut rng, p)?,
            };
            write_instance(&inst, &out)
        }
    }
}

fn is_line(inst: &Instance) -> bool {
    line_order(&underlying_graph(&inst.graph)).is_some()
}

fn pick(inst: &Instance, algo: Algo) -> Algo {
    match (algo, inst.mode) {
        (Algo::Auto, Mode::Paths) => Algo::Fes,
        (Algo::Auto, Mode::Walks) if is_line(inst) => Algo::Line,
        (Algo::Auto, _) => Algo::Oracle,
        (a, _) => a,
    }
}

fn algo_name(a: Algo) -> &'static str {
    match a {
        Algo::Oracle => "oracle",
        Algo::Fes => "fes",
        Algo::Line => "line",
        Algo::Auto => "auto",
    }
}

/// Decision plus the node or candidate count.
fn run(inst: &Instance, algo: Algo) -> temporal_disjoint::Result<(Option<Solution>, u64)> {
    match pick(inst, algo) {
        Algo::Fes => fes::solve_tdp_fes_with(inst, budget_from_env(fes::DEFAULT_CANDIDATE_CAP))
            .map(|(s, st)| (s, st.candidates)),
        Algo::Line => line::solve_tdw_line_with(inst, budget_from_env(line::DEFAULT_CANDIDATE_CAP))
            .map(|(s, st)| (s, st.candidates)),
        _ => oracle::solve_exhaustive_with(inst, budget_from_env(oracle::DEFAULT_NODE_BUDGET))
            .map(|(s, st)| (s, st.nodes)),
    }
}

fn solve(path: &Path, mode: Mode, algo: Algo, out: Option<&Path>) -> anyhow::Result<Report> {
    let inst = load_instance(path, mode)?;
    let chosen = pick(&inst, algo);
    let start = Instant::now();
    let (sol, work) = run(&inst, chosen)?;
    eprintln!("algo={} work={work} millis={:.3}", algo_name(chosen), start.elapsed().as_secs_f64() * 1e3);
    let Some(sol) = sol else {
        return Ok(Report::ok(vec!["NO".into()]));
    };
    if !is_valid_solution(&inst, &sol) {
        bail!("solver returned a solution the verifier rejects");
    }
    let text = emit_solution(&sol);
    let mut lines = vec!["YES".to_string()];
    match out {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display()))?,
        None => lines.extend(text.lines().map(String::from)),
    }
    Ok(Report::ok(lines))
}

fn verify(inst_path: &Path, sol_path: &Path, mode: Mode) -> anyhow::Result<Report> {
    let inst = load_instance(inst_path, mode)?;
    let sol = parse_solution(&read(sol_path)?).with_context(|| format!("parsing {}", sol_path.display()))?;
    let violations = verify_solution(&inst, &sol)?;
    if violations.is_empty() {
        return Ok(Report::ok(vec!["OK".into()]));
    }
    let mut lines = vec!["FAIL".to_string()];
    lines.extend(violations.iter().map(|v| v.to_string()));
    Ok(Report { lines, code: 1 })
}

struct Row {
    id: usize,
    n: usize,
    lifetime: u32,
    pairs: usize,
    algo: &'static str,
    yes: bool,
    work: u64,
    millis: f64,
}

fn timed(inst: &Instance, algo: Algo) -> temporal_disjoint::Result<(Option<Solution>, u64, f64)> {
    let start = Instant::now();
    let (s, w) = run(inst, algo)?;
    Ok((s, w, start.elapsed().as_secs_f64() * 1e3))
}

fn row(id: usize, inst: &Instance, algo: &'static str, yes: bool, work: u64, millis: f64) -> Row {
    Row { id, n: inst.graph.n(), lifetime: inst.graph.lifetime(), pairs: inst.pairs.len(), algo, yes, work, millis }
}

fn sparse_draw(rng: &mut ChaCha8Rng) -> temporal_disjoint::Result<Instance> {
    let p = RandomParams {
        n: rng.gen_range(2..=6),
        lifetime: rng.gen_range(1..=8),
        pairs: rng.gen_range(1..=3),
        mode: Mode::Paths,
    };
    random_sparse_instance(rng, p, 2)
}

fn line_draw(rng: &mut ChaCha8Rng) -> temporal_disjoint::Result<Instance> {
    let p = RandomParams {
        n: rng.gen_range(2..=7),
        lifetime: rng.gen_range(1..=8),
        pairs: rng.gen_range(1..=2),
        mode: Mode::Walks,
    };
    random_line_instance(rng, p)
}

/// Bin-packing inputs with two bins, at most three items and bin size one or two.
fn binpacking_inputs() -> Vec<BinPackingInstance> {
    fn go(left: u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if left == 0 {
            out.push(cur.clone());
        } else if cur.len() < 3 {
            for x in 1..=left {
                cur.push(x);
                go(left - x, cur, out);
                cur.pop();
            }
        }
    }
    let mut all = Vec::new();
    for size in 1..=2 {
        let mut items = Vec::new();
        go(2 * size, &mut Vec::new(), &mut items);
        all.extend(items.into_iter().map(|items| BinPackingInstance { items, bins: 2, bin_size: size }));
    }
    all
}

fn disagreement(id: usize, what: String, inst: &Instance) -> Report {
    let mut lines = vec!["FAIL".to_string(), format!("instance {id}: {what}")];
    lines.extend(emit_instance(inst).lines().map(String::from));
    Report { lines, code: 1 }
}

fn versus(rng: &mut ChaCha8Rng, count: usize, draw: fn(&mut ChaCha8Rng) -> temporal_disjoint::Result<Instance>, algo: Algo, rows: &mut Vec<Row>) -> anyhow::Result<Option<Report>> {
    let name = algo_name(algo);
    for id in 0..count {
        let inst = draw(rng)?;
        let (o, ow, om) = timed(&inst, Algo::Oracle)?;
        let (s, sw, sm) = timed(&inst, algo)?;
        rows.push(row(id, &inst, "oracle", o.is_some(), ow, om));
        rows.push(row(id, &inst, name, s.is_some(), sw, sm));
        if o.is_some() != s.is_some() {
            return Ok(Some(disagreement(id, format!("oracle {} vs {name} {}", o.is_some(), s.is_some()), &inst)));
        }
        if let Some(sol) = &s {
            if !is_valid_solution(&inst, sol) {
                return Ok(Some(disagreement(id, format!("{name} solution fails verification"), &inst)));
            }
        }
    }
    Ok(None)
}

fn reductions(rows: &mut Vec<Row>) -> anyhow::Result<Option<Report>> {
    let mut id = 0;
    for bp in binpacking_inputs() {
        let (inst, _) = gen_binpacking_star(&bp)?;
        let start = Instant::now();
        let want = decide_binpacking(&bp);
        rows.push(row(id, &inst, "decider", want, 0, start.elapsed().as_secs_f64() * 1e3));
        let (o, ow, om) = timed(&inst, Algo::Oracle)?;
        rows.push(row(id, &inst, "oracle", o.is_some(), ow, om));
        if o.is_some() != want {
            return Ok(Some(disagreement(id, format!("items {:?}: packing {want} vs oracle {}", bp.items, o.is_some()), &inst)));
        }
        id += 1;
    }
    for (k, n) in [(2, 1), (2, 2), (3, 1)] {
        let g = ColoredGraph::complete(k, n);
        let x = vec![0; k];
        for (inst, sol) in [
            (gen_mcc_paths(&g)?.0, witness_mcc_paths(&g, &x)?),
            (gen_mcc_walks_star(&g)?.0, witness_mcc_walks(&g, &x)?),
        ] {
            let start = Instant::now();
            let ok = is_valid_solution(&inst, &sol);
            rows.push(row(id, &inst, "witness", ok, 0, start.elapsed().as_secs_f64() * 1e3));
            if !ok {
                return Ok(Some(disagreement(id, format!("clique witness k={k} n={n} fails verification"), &inst)));
            }
            id += 1;
        }
    }
    Ok(None)
}

fn write_csv(path: &Path, rows: &[Row]) -> anyhow::Result<()> {
    let mut w = csv::Writer::from_path(path).with_context(|| format!("writing {}", path.display()))?;
    w.write_record(["instance_id", "n", "T", "pairs", "algo", "decision", "nodes_or_candidates", "millis"])?;
    for r in rows {
        w.write_record([
            r.id.to_string(),
            r.n.to_string(),
            r.lifetime.to_string(),
            r.pairs.to_string(),
            r.algo.to_string(),
            if r.yes { "yes" } else { "no" }.to_string(),
            r.work.to_string(),
            format!("{:.3}", r.millis),
        ])?;
    }
    w.flush()?;
    Ok(())
}

fn bench(suite: Suite, seed: u64, count: usize, csv: Option<&Path>) -> anyhow::Result<Report> {
    let mut rng = rng_from_seed(seed);
    let mut rows = Vec::new();
    let failure = match suite {
        Suite::OracleVsFes => versus(&mut rng, count, sparse_draw, Algo::Fes, &mut rows)?,
        Suite::OracleVsLine => versus(&mut rng, count, line_draw, Algo::Line, &mut rows)?,
        Suite::Reductions => reductions(&mut rows)?,
    };
    if let Some(path) = csv {
        write_csv(path, &rows)?;
    }
    if let Some(report) = failure {
        return Ok(report);
    }
    let instances = rows.iter().map(|r| r.id).max().map_or(0, |m| m + 1);
    let yes = rows.iter().filter(|r| r.algo == "oracle" || r.algo == "witness").filter(|r| r.yes).count();
    Ok(Report::ok(vec!["OK".into(), format!("{instances} instances agree, {yes} yes")]))
}

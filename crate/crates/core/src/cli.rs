//! The `bfcover` command line.
//!
//! Exit codes: 0 on success, 1 when a verification or optimality check
//! fails, 2 on usage errors and unreadable input.

use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};

use crate::butterfly::{to_dot, ButterflyGraph, Topology, MAX_DIMENSION};
use crate::construct::{construct_cover, MIN_DIMENSION};
use crate::cover::{Cover, CoverFile};
use crate::graph::io::write_edge_list;
use crate::graph::{coverage_report, CoverMode, CoverageReport, Graph, Target};
use crate::partition::{edge_cycle_partition, split_to_diametrals, IsometryCheck, PartitionFile};
use crate::solve::io::{load_graph_text, InstanceFile, ResultFile};
use crate::solve::{
    bf_lower_bounds, exact_cover, greedy_cover, CoverInstance, SolveResult, SolveStatus,
    DEFAULT_BUDGET,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// How many missing targets `verify` prints before summarizing.
const MISSING_SHOWN: usize = 20;

#[derive(Debug, Parser)]
#[command(
    name = "bfcover",
    version,
    about = "Geodesic covers of butterfly networks"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Emit the topology of BF(r).
    Gen(GenArgs),
    /// Build a geodesic cover of BF(r) and report it against the lower bound.
    Cover(CoverArgs),
    /// Partition the edges of BF(r) into isometric cycles and diametrals.
    EdgePartition(EdgePartitionArgs),
    /// Check a graph, cover or partition file.
    Verify(VerifyArgs),
    /// Vertex, edge and degree counts.
    Stats(StatsArgs),
    /// Time construction and verification over a range of dimensions.
    Bench(BenchArgs),
    /// Solve a cover instance given as JSON.
    Solve(SolveArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Dot,
    Json,
    Edgelist,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Construct,
    Exact,
    Greedy,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Vertex,
    Edge,
}

impl From<Mode> for CoverMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Vertex => CoverMode::Vertex,
            Mode::Edge => CoverMode::Edge,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PartitionPart {
    Cycles,
    Diametrals,
    Both,
}

fn dimension(s: &str) -> Result<u32, String> {
    let r: u32 = s.parse().map_err(|_| format!("`{s}` is not a number"))?;
    if (1..=MAX_DIMENSION).contains(&r) {
        Ok(r)
    } else {
        Err(format!("dimension must be in 1..={MAX_DIMENSION}"))
    }
}

#[derive(Debug, clap::Args)]
pub struct GenArgs {
    #[arg(short, long, value_parser = dimension)]
    pub r: u32,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write here instead of standard output.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, clap::Args)]
pub struct CoverArgs {
    #[arg(short, long, value_parser = dimension)]
    pub r: u32,
    #[arg(long, value_enum, default_value_t = Method::Construct)]
    pub method: Method,
    #[arg(long, value_enum, default_value_t = Mode::Vertex)]
    pub mode: Mode,
    /// Node limit for `--method exact`.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
    /// Exit with 1 unless the size is certified optimal.
    #[arg(long)]
    pub require_optimal: bool,
    /// Cover JSON destination.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, clap::Args)]
pub struct EdgePartitionArgs {
    #[arg(short, long, value_parser = dimension)]
    pub r: u32,
    #[arg(long = "as", value_enum, default_value_t = PartitionPart::Both)]
    pub part: PartitionPart,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, clap::Args)]
pub struct VerifyArgs {
    /// Topology JSON or edge list. Defaults to BF(r) from `-r` or the file.
    #[arg(long)]
    pub graph: Option<PathBuf>,
    #[arg(short, long, value_parser = dimension)]
    pub r: Option<u32>,
    #[arg(long)]
    pub cover: Option<PathBuf>,
    #[arg(long)]
    pub partition: Option<PathBuf>,
}

#[derive(Debug, clap::Args)]
pub struct StatsArgs {
    #[arg(short, long, value_parser = dimension, required_unless_present = "graph")]
    pub r: Option<u32>,
    #[arg(long, conflicts_with = "r")]
    pub graph: Option<PathBuf>,
}

#[derive(Debug, clap::Args)]
pub struct BenchArgs {
    #[arg(long, value_parser = dimension, default_value_t = 5)]
    pub from: u32,
    #[arg(long, value_parser = dimension, default_value_t = 10)]
    pub to: u32,
}

#[derive(Debug, clap::Args)]
pub struct SolveArgs {
    #[arg(long)]
    pub instance: PathBuf,
    #[arg(long, value_enum, default_value_t = Method::Exact)]
    pub method: Method,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
    /// Result JSON destination.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

/// Parses `args` (program name first) and runs the command.
pub fn main_with_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli, out, err),
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            if code == 0 {
                let _ = out.write_all(text.as_bytes());
                EXIT_OK
            } else {
                let _ = err.write_all(text.as_bytes());
                EXIT_USAGE
            }
        }
    }
}

pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result = match &cli.command {
        Command::Gen(a) => gen(a, out),
        Command::Cover(a) => cover(a, out),
        Command::EdgePartition(a) => edge_partition(a, out),
        Command::Verify(a) => verify(a, out),
        Command::Stats(a) => stats(a, out),
        Command::Bench(a) => bench(a, out),
        Command::Solve(a) => solve(a, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            EXIT_USAGE
        }
    }
}

type CmdResult = anyhow::Result<i32>;

fn write_artifact(path: &Path, text: &str) -> anyhow::Result<()> {
    std::fs::write(path, text).with_context(|| format!("cannot write {}", path.display()))
}

fn read_file(path: &Path) -> anyhow::Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn gen(a: &GenArgs, out: &mut dyn Write) -> CmdResult {
    let bf = ButterflyGraph::new(a.r)?;
    let text = match a.format {
        Format::Dot => to_dot(&bf),
        Format::Json => Topology::of_butterfly(&bf).to_json(),
        Format::Edgelist => write_edge_list(bf.graph()),
    };
    match &a.output {
        Some(p) => {
            write_artifact(p, &text)?;
            writeln!(out, "wrote BF({}) to {}", a.r, p.display())?;
        }
        None => out.write_all(text.as_bytes())?,
    }
    Ok(EXIT_OK)
}

fn cover(a: &CoverArgs, out: &mut dyn Write) -> CmdResult {
    let mode = CoverMode::from(a.mode);
    match (a.method, mode) {
        (Method::Construct, CoverMode::Vertex) if a.r < MIN_DIMENSION => bail!(
            "the construction needs r >= {MIN_DIMENSION}; use --method exact or greedy for BF({})",
            a.r
        ),
        (Method::Construct, CoverMode::Edge) if a.r < 3 => {
            bail!("the edge partition needs r >= 3; use --method exact or greedy")
        }
        (Method::Exact | Method::Greedy, _) if a.r > 4 => bail!(
            "--method {} enumerates every maximal geodesic and is limited to r <= 4",
            if a.method == Method::Exact {
                "exact"
            } else {
                "greedy"
            }
        ),
        _ => {}
    }
    let bf = ButterflyGraph::new(a.r)?;
    let (vertex_lb, edge_lb) = bf_lower_bounds(a.r);
    let bound = match mode {
        CoverMode::Vertex => vertex_lb,
        CoverMode::Edge => edge_lb,
    } as usize;

    let (cover, solved): (Cover, Option<SolveResult>) = match a.method {
        Method::Construct => match mode {
            CoverMode::Vertex => (construct_cover(&bf)?, None),
            CoverMode::Edge => {
                let part = edge_cycle_partition(a.r)?;
                (split_to_diametrals(&part, &bf)?, None)
            }
        },
        Method::Exact | Method::Greedy => {
            let inst = CoverInstance::new(bf.graph(), mode)?;
            let res = if a.method == Method::Exact {
                exact_cover(&inst, a.budget)
            } else {
                greedy_cover(&inst)
            };
            (res.cover.clone(), Some(res))
        }
    };

    let report = cover.report(bf.graph());
    let certified = report.is_valid()
        && (cover.len() == bound || solved.as_ref().is_some_and(|s| s.is_optimal()));
    let mut t = String::new();
    writeln!(t, "BF({}) {} cover", a.r, mode)?;
    writeln!(t, "method       {}", method_name(a.method))?;
    writeln!(t, "size         {}", cover.len())?;
    writeln!(t, "lower bound  {bound}")?;
    if let Some(s) = &solved {
        writeln!(t, "status       {}", s.status)?;
        writeln!(t, "solver bound {}", s.lower_bound)?;
        writeln!(t, "nodes        {}", s.nodes_explored)?;
    }
    writeln!(t, "verified     {}", report.is_valid())?;
    writeln!(t, "certificate  {certified}")?;
    out.write_all(t.as_bytes())?;

    if let Some(p) = &a.output {
        write_artifact(p, &CoverFile::from_cover(&bf, &cover).to_json())?;
    }
    if !report.is_valid() || (a.require_optimal && !certified) {
        return Ok(EXIT_FAILED);
    }
    Ok(EXIT_OK)
}

fn method_name(m: Method) -> &'static str {
    match m {
        Method::Construct => "construct",
        Method::Exact => "exact",
        Method::Greedy => "greedy",
    }
}

fn edge_partition(a: &EdgePartitionArgs, out: &mut dyn Write) -> CmdResult {
    if a.r < 3 {
        bail!("the edge partition needs r >= 3");
    }
    let bf = ButterflyGraph::new(a.r)?;
    let part = edge_cycle_partition(a.r)?;
    let check = IsometryCheck::auto(a.r);
    let cycles_ok = part.verify(&bf, check).is_ok();
    let want_cycles = a.part != PartitionPart::Diametrals;
    let want_paths = a.part != PartitionPart::Cycles;
    let diametrals = if want_paths {
        Some(split_to_diametrals(&part, &bf)?)
    } else {
        None
    };

    let mut ok = cycles_ok;
    writeln!(
        out,
        "BF({}) edge partition, {} edges",
        a.r,
        bf.graph().edge_count()
    )?;
    if want_cycles {
        writeln!(
            out,
            "cycles       {} of length {}",
            part.cycles.len(),
            4 * a.r
        )?;
        writeln!(out, "isometry     {}", check_name(check))?;
        writeln!(out, "verified     {cycles_ok}")?;
    }
    if let Some(d) = &diametrals {
        let report = d.report(bf.graph());
        let lengths_ok = d.paths.iter().all(|p| p.len() == 2 * a.r as usize);
        ok &= report.is_partition() && lengths_ok;
        writeln!(out, "diametrals   {}", d.len())?;
        writeln!(out, "lower bound  {}", bf_lower_bounds(a.r).1)?;
        writeln!(out, "partition    {}", report.is_partition() && lengths_ok)?;
    }
    if let Some(p) = &a.output {
        let file = PartitionFile::new(&bf, want_cycles.then_some(&part), diametrals.as_ref());
        write_artifact(p, &file.to_json())?;
    }
    Ok(if ok { EXIT_OK } else { EXIT_FAILED })
}

fn check_name(c: IsometryCheck) -> String {
    match c {
        IsometryCheck::Full => "full".into(),
        IsometryCheck::Every(k) => format!("every {k}th cycle"),
        IsometryCheck::Skip => "skipped".into(),
    }
}

/// Loads `--graph`, checking that re-serializing gives back the same bytes.
fn load_graph(path: &Path) -> anyhow::Result<(Graph, bool)> {
    let text = read_file(path)?;
    let g =
        load_graph_text(&text).with_context(|| format!("malformed graph {}", path.display()))?;
    let again = if text.trim_start().starts_with('{') {
        let mut t = Topology::of_graph(&g);
        t.r = Topology::from_json(&text)?.r;
        t.to_json()
    } else {
        write_edge_list(&g)
    };
    Ok((g, again == text))
}

fn verify(a: &VerifyArgs, out: &mut dyn Write) -> CmdResult {
    if a.graph.is_none() && a.cover.is_none() && a.partition.is_none() {
        bail!("nothing to verify: pass --graph, --cover or --partition");
    }
    let cover_file = match &a.cover {
        Some(p) => Some(
            CoverFile::from_json(&read_file(p)?)
                .with_context(|| format!("malformed cover {}", p.display()))?,
        ),
        None => None,
    };
    let partition_file = match &a.partition {
        Some(p) => Some(
            PartitionFile::from_json(&read_file(p)?)
                .with_context(|| format!("malformed partition {}", p.display()))?,
        ),
        None => None,
    };

    let mut ok = true;
    let graph = match &a.graph {
        Some(p) => {
            let (g, stable) = load_graph(p)?;
            writeln!(
                out,
                "graph        {} vertices, {} edges",
                g.n(),
                g.edge_count()
            )?;
            writeln!(out, "connected    {}", g.is_connected())?;
            writeln!(
                out,
                "round-trip   {}",
                if stable { "identical" } else { "differs" }
            )?;
            ok &= stable;
            g
        }
        None => {
            let r =
                a.r.or(cover_file.as_ref().map(|c| c.r))
                    .or(partition_file.as_ref().map(|p| p.r))
                    .context("no graph given")?;
            ButterflyGraph::new(r)?.graph().clone()
        }
    };

    if let Some(cf) = &cover_file {
        let raw = cf
            .raw_paths_in(&graph)
            .context("cover does not fit the graph")?;
        let report = coverage_report(&graph, &raw, cf.mode, None);
        write_report(out, "cover", &report, &graph)?;
        ok &= report.is_valid();
    }

    if let Some(pf) = &partition_file {
        let bf = ButterflyGraph::new(pf.r)?;
        if &graph != bf.graph() {
            bail!("partition is for BF({}) but the graph differs", pf.r);
        }
        if let Some(part) = pf.cycle_partition(&bf)? {
            let check = IsometryCheck::auto(pf.r);
            match part.verify(&bf, check) {
                Ok(()) => writeln!(
                    out,
                    "cycles       {} ok ({} isometry)",
                    part.cycles.len(),
                    check_name(check)
                )?,
                Err(e) => {
                    writeln!(out, "cycles       FAILED: {e}")?;
                    ok = false;
                }
            }
        }
        if let Some(paths) = pf.diametral_paths(&bf)? {
            let report = coverage_report(&graph, &paths, CoverMode::Edge, None);
            write_report(out, "diametrals", &report, &graph)?;
            let lengths_ok = paths.iter().all(|p| p.len() == 2 * pf.r as usize + 1);
            writeln!(out, "disjoint     {}", report.edge_disjoint)?;
            writeln!(out, "length 2r    {lengths_ok}")?;
            ok &= report.is_partition() && lengths_ok;
        }
    }

    writeln!(out, "result       {}", if ok { "ok" } else { "FAILED" })?;
    Ok(if ok { EXIT_OK } else { EXIT_FAILED })
}

fn target_name(g: &Graph, t: Target) -> String {
    let name = |v: usize| {
        g.label(v)
            .map(str::to_string)
            .unwrap_or_else(|| v.to_string())
    };
    match t {
        Target::Vertex(v) => name(v),
        Target::Edge(u, v) => format!("{}-{}", name(u), name(v)),
    }
}

fn write_report(
    out: &mut dyn Write,
    what: &str,
    r: &CoverageReport,
    g: &Graph,
) -> anyhow::Result<()> {
    writeln!(out, "{what:<12} {} paths, {} mode", r.path_count, r.mode)?;
    writeln!(out, "covered      {} / {}", r.covered, r.total)?;
    if !r.invalid_paths.is_empty() {
        let list: Vec<String> = r.invalid_paths.iter().map(|i| format!("#{i}")).collect();
        writeln!(out, "invalid      {}", list.join(", "))?;
    }
    if !r.missing.is_empty() {
        let shown: Vec<String> = r
            .missing
            .iter()
            .take(MISSING_SHOWN)
            .map(|&t| target_name(g, t))
            .collect();
        let more = r.missing.len().saturating_sub(MISSING_SHOWN);
        let tail = if more > 0 {
            format!(" and {more} more")
        } else {
            String::new()
        };
        writeln!(out, "missing      {}{tail}", shown.join(" "))?;
    }
    Ok(())
}

fn stats(a: &StatsArgs, out: &mut dyn Write) -> CmdResult {
    let (g, bf) = match (&a.graph, a.r) {
        (Some(p), _) => (load_graph(p)?.0, None),
        (None, Some(r)) => {
            let bf = ButterflyGraph::new(r)?;
            (bf.graph().clone(), Some(bf))
        }
        (None, None) => bail!("pass -r or --graph"),
    };
    let e24 = g
        .edges()
        .filter(|&(u, v)| {
            let (a, b) = (g.degree(u), g.degree(v));
            a.min(b) == 2 && a.max(b) == 4
        })
        .count();
    if let Some(bf) = &bf {
        writeln!(out, "graph        BF({})", bf.r())?;
    }
    writeln!(out, "vertices     {}", g.n())?;
    writeln!(out, "edges        {}", g.edge_count())?;
    writeln!(out, "(2,4)-edges  {e24}")?;
    let hist: Vec<String> = g
        .degree_histogram()
        .into_iter()
        .map(|(d, n)| format!("{d}:{n}"))
        .collect();
    writeln!(out, "degrees      {}", hist.join(" "))?;
    if let Some(bf) = &bf {
        let (v, e) = bf_lower_bounds(bf.r());
        writeln!(out, "cover bound  vertex {v}, edge {e}")?;
    }
    Ok(EXIT_OK)
}

fn bench(a: &BenchArgs, out: &mut dyn Write) -> CmdResult {
    if a.from > a.to {
        bail!("--from must not exceed --to");
    }
    if a.to > 14 {
        bail!("bench is limited to r <= 14");
    }
    writeln!(
        out,
        "{:>3} {:>9} {:>6} {:>12} {:>10} {:>10} {:>14}",
        "r", "vertices", "cover", "construct ms", "verify ms", "cycles", "partition ms"
    )?;
    let mut ok = true;
    for r in a.from..=a.to {
        let bf = ButterflyGraph::new(r)?;
        let (size, build_ms, check_ms) = if r >= MIN_DIMENSION {
            let t0 = Instant::now();
            let c = construct_cover(&bf)?;
            let build = t0.elapsed();
            let t1 = Instant::now();
            ok &= c.report(bf.graph()).is_valid();
            (c.len().to_string(), ms(build), ms(t1.elapsed()))
        } else {
            ("-".into(), "-".into(), "-".into())
        };
        let (cycles, part_ms) = if r >= 3 {
            let t0 = Instant::now();
            let part = edge_cycle_partition(r)?;
            (part.cycles.len().to_string(), ms(t0.elapsed()))
        } else {
            ("-".into(), "-".into())
        };
        writeln!(
            out,
            "{:>3} {:>9} {:>6} {:>12} {:>10} {:>10} {:>14}",
            r,
            bf.graph().n(),
            size,
            build_ms,
            check_ms,
            cycles,
            part_ms
        )?;
    }
    Ok(if ok { EXIT_OK } else { EXIT_FAILED })
}

fn ms(d: std::time::Duration) -> String {
    format!("{:.1}", d.as_secs_f64() * 1000.0)
}

fn solve(a: &SolveArgs, out: &mut dyn Write) -> CmdResult {
    if a.method == Method::Construct {
        bail!("solve takes --method exact or greedy");
    }
    let text = read_file(&a.instance)?;
    let file = InstanceFile::from_json(&text)
        .with_context(|| format!("malformed instance {}", a.instance.display()))?;
    let g = file.graph.load(a.instance.parent())?;
    let inst = CoverInstance::with(&g, file.mode, file.candidates.clone(), file.target_list())?;
    let res = match a.method {
        Method::Exact => exact_cover(&inst, a.budget),
        _ => greedy_cover(&inst),
    };
    writeln!(
        out,
        "instance     {} vertices, {} candidates, {} targets",
        g.n(),
        inst.candidates().len(),
        inst.targets().len()
    )?;
    writeln!(out, "status       {}", res.status)?;
    writeln!(out, "size         {}", res.cover.len())?;
    writeln!(out, "lower bound  {}", res.lower_bound)?;
    writeln!(out, "nodes        {}", res.nodes_explored)?;
    if let Some(p) = &a.output {
        write_artifact(p, &ResultFile::from_result(&res).to_json())?;
    }
    Ok(if res.status == SolveStatus::Infeasible {
        EXIT_FAILED
    } else {
        EXIT_OK
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("bfcover").chain(args.iter().copied());
        let code = main_with_args(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn construct_r5_is_certified() {
        let (code, out, _) = call(&["cover", "-r", "5", "--method", "construct"]);
        assert_eq!(code, 0);
        assert!(out.contains("size         22\n"));
        assert!(out.contains("lower bound  22\n"));
        assert!(out.contains("certificate  true\n"));
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(call(&["cover", "-r", "4"]).0, 2);
        assert_eq!(call(&["cover", "-r", "0"]).0, 2);
        assert_eq!(call(&["gen"]).0, 2);
        assert_eq!(call(&["frobnicate"]).0, 2);
        assert_eq!(call(&["gen", "-r", "3", "--bogus"]).0, 2);
        assert_eq!(call(&["verify"]).0, 2);
        let (code, _, err) = call(&["verify", "--cover", "/nonexistent/cover.json"]);
        assert_eq!(code, 2);
        assert!(err.contains("cannot read"));
    }

    #[test]
    fn help_exits_0() {
        let (code, out, _) = call(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("edge-partition"));
    }

    #[test]
    fn small_exact_cover() {
        let (code, out, _) = call(&["cover", "-r", "3", "--method", "exact", "--mode", "edge"]);
        assert_eq!(code, 0);
        assert!(out.contains("size         8\n"));
        assert!(out.contains("status       optimal\n"));
        assert!(out.contains("certificate  true\n"));
    }

    #[test]
    fn stats_counts() {
        let (code, out, _) = call(&["stats", "-r", "3"]);
        assert_eq!(code, 0);
        assert!(out.contains("vertices     32\n"));
        assert!(out.contains("edges        48\n"));
        assert!(out.contains("(2,4)-edges  32\n"));
        assert!(out.contains("degrees      2:16 4:16\n"));
    }
}

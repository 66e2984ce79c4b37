//! Command-line surface. Exit codes: 0 feasible or ok, 1 infeasible or
//! violation, 2 usage or input errors.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::candidates::candidate_edges;
use crate::generate::{generate, Generator, InstanceSpec};
use crate::graph::Graph;
use crate::io::{
    mask_from_pairs, mask_pairs, pairs_value, parse_graph, parse_pairs, parse_rational,
    write_graph, Format, ResultDoc,
};
use crate::solver::{oracle, solve, solve_max_k, Mode, SolveOptions, SolveResult, Verdict};
use crate::thresholds::thresholds;
use crate::verify::{verify, SpannerParams};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "additive-spanner",
    version,
    about = "Remove k edges while bounding the stretch"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide whether k edges can be removed, or find the largest such k.
    Solve(SolveArgs),
    /// Check a given removal set.
    Verify(VerifyArgs),
    /// Brute force over all k-subsets of edges.
    Oracle(OracleArgs),
    /// List edges lying on a cycle of length at most t + 2.
    Candidates(CandidateArgs),
    /// Write a generated instance.
    Gen(GenArgs),
    /// Print the size thresholds for t and k.
    Thresholds(ThresholdArgs),
}

#[derive(Debug, Args)]
struct InputArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long, value_enum, default_value_t = Format::Edgelist)]
    format: Format,
}

#[derive(Debug, Args)]
struct StretchArgs {
    /// Additive stretch.
    #[arg(long, conflicts_with_all = ["alpha", "beta"], required_unless_present = "alpha")]
    t: Option<u32>,
    /// Multiplicative part, e.g. 3/2 or 1.5.
    #[arg(long, requires = "beta")]
    alpha: Option<String>,
    /// Additive part of an (alpha, beta) bound.
    #[arg(long, requires = "alpha")]
    beta: Option<String>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ModeArg {
    Exact,
    Constructive,
}

#[derive(Debug, Args)]
struct SolveArgs {
    #[command(flatten)]
    input: InputArgs,
    #[command(flatten)]
    stretch: StretchArgs,
    #[arg(long, required_unless_present = "max_k")]
    k: Option<usize>,
    #[arg(long, value_enum, default_value_t = ModeArg::Exact)]
    mode: ModeArg,
    /// Report the largest removable k instead of deciding one.
    #[arg(long, conflicts_with = "k")]
    max_k: bool,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[command(flatten)]
    input: InputArgs,
    #[command(flatten)]
    stretch: StretchArgs,
    /// Edges to remove, "u,v;u,v".
    #[arg(long, default_value = "")]
    remove: String,
}

#[derive(Debug, Args)]
struct OracleArgs {
    #[command(flatten)]
    input: InputArgs,
    #[command(flatten)]
    stretch: StretchArgs,
    #[arg(long)]
    k: usize,
    /// Most subsets the brute force may visit.
    #[arg(long, default_value_t = 10_000_000)]
    budget: u64,
}

#[derive(Debug, Args)]
struct CandidateArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long)]
    t: u32,
}

#[derive(Debug, Args)]
struct GenArgs {
    #[command(subcommand)]
    family: Family,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Edgelist)]
    format: Format,
    /// Write here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Family {
    Cycle {
        #[arg(long)]
        n: usize,
    },
    Complete {
        #[arg(long)]
        n: usize,
    },
    Grid {
        #[arg(long)]
        rows: usize,
        #[arg(long)]
        cols: usize,
    },
    ErdosRenyi {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
    },
    Book {
        #[arg(long)]
        width: usize,
        #[arg(long, default_value_t = 1)]
        depth: usize,
    },
    CaterpillarTriangles {
        #[arg(long)]
        count: usize,
        #[arg(long)]
        gap: usize,
    },
    SpacedTriangles {
        #[arg(long)]
        count: usize,
        #[arg(long)]
        gap: usize,
    },
}

impl Family {
    fn generator(&self) -> Generator {
        match *self {
            Family::Cycle { n } => Generator::Cycle { n },
            Family::Complete { n } => Generator::Complete { n },
            Family::Grid { rows, cols } => Generator::Grid { rows, cols },
            Family::ErdosRenyi { n, p } => Generator::ErdosRenyi { n, p },
            Family::Book { width, depth } => Generator::Book { width, depth },
            Family::CaterpillarTriangles { count, gap } => {
                Generator::CaterpillarTriangles { count, gap }
            }
            Family::SpacedTriangles { count, gap } => Generator::SpacedTriangles { count, gap },
        }
    }
}

#[derive(Debug, Args)]
struct ThresholdArgs {
    #[arg(long)]
    t: u32,
    #[arg(long)]
    k: u32,
}

/// Runs one command line (program name first) and returns the exit code.
pub fn run_cli<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    let outcome = match cli.command {
        Command::Solve(a) => cmd_solve(a, out),
        Command::Verify(a) => cmd_verify(a, out),
        Command::Oracle(a) => cmd_oracle(a, out),
        Command::Candidates(a) => cmd_candidates(a, out),
        Command::Gen(a) => cmd_gen(a, out),
        Command::Thresholds(a) => cmd_thresholds(a, out),
    };
    match outcome {
        Ok(code) => code,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

type CmdResult = Result<i32, String>;

fn load(input: &InputArgs) -> Result<Graph, String> {
    parse_graph(&input.input, input.format).map_err(|e| format!("{}: {e}", input.input.display()))
}

fn params(s: &StretchArgs) -> Result<SpannerParams, String> {
    match (&s.t, &s.alpha, &s.beta) {
        (Some(t), None, None) => Ok(SpannerParams::Additive(*t)),
        (None, Some(a), Some(b)) => {
            let alpha = parse_rational(a).map_err(|e| e.to_string())?;
            let beta = parse_rational(b).map_err(|e| e.to_string())?;
            SpannerParams::alpha_beta(alpha, beta).map_err(|e| e.to_string())
        }
        _ => Err("give either --t or both --alpha and --beta".into()),
    }
}

fn params_value(p: SpannerParams) -> Value {
    match p {
        SpannerParams::Additive(t) => json!({ "t": t }),
        SpannerParams::AlphaBeta { alpha, beta } => json!({
            "alpha": alpha.to_string(),
            "beta": beta.to_string(),
            "derived_t": p.derived_t(),
        }),
    }
}

fn emit(out: &mut dyn Write, doc: &ResultDoc) -> Result<(), String> {
    out.write_all(doc.render().as_bytes())
        .map_err(|e| e.to_string())
}

fn result_doc(command: &str, g: &Graph, p: SpannerParams, k: usize, r: &SolveResult) -> ResultDoc {
    let removed = r
        .verdict
        .mask()
        .map(|m| mask_pairs(g, m))
        .unwrap_or_default();
    // feasible masks must verify; infeasible verdicts carry nothing to check
    let recheck = match &r.verdict {
        Verdict::Feasible(m) => m.len() == k && verify(g, m, p).is_ok(),
        Verdict::Infeasible => true,
    };
    ResultDoc::new(command)
        .with(
            "verdict",
            if r.is_feasible() {
                "feasible"
            } else {
                "infeasible"
            },
        )
        .with("params", params_value(p))
        .with("k", k)
        .with("removed", pairs_value(&removed))
        .with("branch", r.branch.as_str())
        .with(
            "stats",
            json!({
                "candidates": r.stats.candidates,
                "cycles_found": r.stats.cycles_found,
                "subsets_examined": r.stats.subsets_examined,
            }),
        )
        .with("recheck", recheck)
}

fn cmd_solve(a: SolveArgs, out: &mut dyn Write) -> CmdResult {
    let g = load(&a.input)?;
    let p = params(&a.stretch)?;
    let opts = SolveOptions::with_mode(match a.mode {
        ModeArg::Exact => Mode::Exact,
        ModeArg::Constructive => Mode::ConstructivePreferred,
    });
    if a.max_k {
        let mut removed = g.empty_mask();
        let mut count = 0;
        let mut stats = json!({});
        for comp in g.components() {
            let (sub, edge_map) = g.induced(&comp);
            let best = solve_max_k(&sub, p, &opts);
            count += best.count;
            for e in best.removed.iter() {
                removed.insert(edge_map[e]);
            }
            stats = json!({
                "candidates": stats["candidates"].as_u64().unwrap_or(0) + best.stats.candidates as u64,
                "subsets_examined": stats["subsets_examined"].as_u64().unwrap_or(0) + best.stats.subsets_examined,
            });
        }
        let doc = ResultDoc::new("solve")
            .with("max_k", count)
            .with("params", params_value(p))
            .with("removed", pairs_value(&mask_pairs(&g, &removed)))
            .with("stats", stats)
            .with("recheck", verify(&g, &removed, p).is_ok());
        emit(out, &doc)?;
        return Ok(EXIT_OK);
    }
    let k = a.k.expect("clap requires --k without --max-k");
    let r = solve(&g, p, k, &opts);
    emit(out, &result_doc("solve", &g, p, k, &r))?;
    Ok(if r.is_feasible() { EXIT_OK } else { EXIT_NO })
}

fn cmd_verify(a: VerifyArgs, out: &mut dyn Write) -> CmdResult {
    let g = load(&a.input)?;
    let p = params(&a.stretch)?;
    let pairs = parse_pairs(&a.remove).map_err(|e| e.to_string())?;
    let mask = mask_from_pairs(&g, &pairs).map_err(|e| e.to_string())?;
    let verdict = verify(&g, &mask, p);
    let mut doc = ResultDoc::new("verify")
        .with("verdict", if verdict.is_ok() { "ok" } else { "violation" })
        .with("params", params_value(p))
        .with("removed", pairs_value(&mask_pairs(&g, &mask)));
    if let Err(v) = verdict {
        let dist_in_h = (v.dist_in_h != crate::graph::INF).then_some(v.dist_in_h);
        doc.set(
            "violation",
            json!({ "pair": [v.pair.0, v.pair.1], "dist_in_g": v.dist_in_g, "dist_in_h": dist_in_h }),
        );
    }
    emit(out, &doc)?;
    Ok(if verdict.is_ok() { EXIT_OK } else { EXIT_NO })
}

fn cmd_oracle(a: OracleArgs, out: &mut dyn Write) -> CmdResult {
    let g = load(&a.input)?;
    let p = params(&a.stretch)?;
    let r = oracle(&g, p, a.k, a.budget).map_err(|e| e.to_string())?;
    emit(out, &result_doc("oracle", &g, p, a.k, &r))?;
    Ok(if r.is_feasible() { EXIT_OK } else { EXIT_NO })
}

fn cmd_candidates(a: CandidateArgs, out: &mut dyn Write) -> CmdResult {
    let g = load(&a.input)?;
    let cand = candidate_edges(&g, a.t);
    let doc = ResultDoc::new("candidates")
        .with("params", json!({ "t": a.t }))
        .with("count", cand.len())
        .with("candidates", pairs_value(&mask_pairs(&g, &cand.edges)));
    emit(out, &doc)?;
    Ok(EXIT_OK)
}

fn cmd_gen(a: GenArgs, out: &mut dyn Write) -> CmdResult {
    let spec = InstanceSpec::seeded(a.family.generator(), a.seed);
    let g = generate(&spec).map_err(|e| e.to_string())?;
    let text = write_graph(&g, a.format);
    match a.output {
        Some(path) => {
            std::fs::write(&path, text).map_err(|e| format!("{}: {e}", path.display()))?
        }
        None => out.write_all(text.as_bytes()).map_err(|e| e.to_string())?,
    }
    Ok(EXIT_OK)
}

fn cmd_thresholds(a: ThresholdArgs, out: &mut dyn Write) -> CmdResult {
    if a.t == 0 || a.k == 0 {
        return Err("thresholds need --t >= 1 and --k >= 1".into());
    }
    for line in thresholds(u64::from(a.t), u64::from(a.k)).lines() {
        writeln!(out, "{line}").map_err(|e| e.to_string())?;
    }
    Ok(EXIT_OK)
}

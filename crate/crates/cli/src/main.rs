use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use dso_core::constructors::{
    c_star, circulant, claim1_case22_graph, extremal_graph, mobius_ladder, quadrangle_linked_cycles,
    CirculantSpec,
};
use dso_core::enumerator::{enumerate_with_limits, DegreeCap, InstanceParams, Limits};
use dso_core::indices::{evaluate_index, h_weight, Weight};
use dso_core::verifier::{scan_h_positivity, scan_lemma_cases, verify_theorem1_with_limits, LemmaCase};
use dso_core::{graph6, Error, Graph};
use serde::Serialize;

mod exit {
    pub const IO: u8 = 1;
    pub const PARSE: u8 = 2;
    pub const CONSTRAINT: u8 = 3;
    pub const COUNTEREXAMPLE: u8 = 4;
}

#[derive(Debug, Parser)]
#[command(name = "dso", version, about = "Diminished Sombor index: evaluate, construct, enumerate, verify")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate an index on every graph of a graph6 file
    Index(IndexArgs),
    /// Enumerate connected graphs with given order and cyclomatic number
    Enumerate(EnumerateArgs),
    /// Compare the brute-force DSO minimum with the closed-form bounds
    Verify(VerifyArgs),
    /// Build a named graph family
    Construct(ConstructArgs),
    /// Run a finite check suite
    Check(CheckArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum InputFormat {
    Graph6,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum IndexKind {
    Dso,
    Sombor,
}

#[derive(Debug, Args)]
struct IndexArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long, value_enum, default_value = "graph6")]
    format: InputFormat,
    #[arg(long, value_enum, default_value = "dso")]
    index: IndexKind,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct InstanceArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    ell: usize,
    #[arg(long, default_value_t = 4, conflicts_with = "unbounded")]
    max_degree: usize,
    /// Lift the degree cap
    #[arg(long)]
    unbounded: bool,
}

impl InstanceArgs {
    fn params(&self) -> InstanceParams {
        let cap = if self.unbounded {
            DegreeCap::Unbounded
        } else {
            DegreeCap::AtMost(self.max_degree)
        };
        InstanceParams::new(self.n, self.ell, cap)
    }
}

#[derive(Debug, Args)]
struct EnumerateArgs {
    #[command(flatten)]
    instance: InstanceArgs,
    /// Write graph6 lines here; the summary then goes to stdout
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[command(flatten)]
    instance: InstanceArgs,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Family {
    Extremal,
    Circulant,
    Cstar,
    Mobius,
    Claim1,
    Quadrangle,
}

#[derive(Debug, Args)]
struct ConstructArgs {
    #[arg(long, value_enum)]
    family: Family,
    /// Comma-separated: extremal n,ell | circulant r,a1,..,ak | cstar ell |
    /// mobius k | claim1 n,ell | quadrangle a,b
    #[arg(long, value_delimiter = ',', num_args = 1..)]
    params: Vec<usize>,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Suite {
    Lemma,
    H,
    Table1,
}

#[derive(Debug, Args)]
struct CheckArgs {
    #[arg(long, value_enum)]
    suite: Suite,
    /// Largest degree scanned by the h suite
    #[arg(long, default_value_t = 100)]
    limit: usize,
    #[arg(long)]
    output: Option<PathBuf>,
}

/// Failure carrying its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Graph6(_) => exit::PARSE,
            _ => exit::CONSTRAINT,
        };
        Failure::new(code, e.to_string())
    }
}

type CmdResult = Result<u8, Failure>;

fn emit(output: Option<&Path>, text: &str) -> Result<(), Failure> {
    match output {
        Some(path) => fs::write(path, text)
            .map_err(|e| Failure::new(exit::IO, format!("cannot write {}: {e}", path.display()))),
        None => io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| Failure::new(exit::IO, format!("stdout: {e}"))),
    }
}

fn cmd_index(args: &IndexArgs) -> CmdResult {
    let InputFormat::Graph6 = args.format;
    let text = fs::read_to_string(&args.input)
        .map_err(|e| Failure::new(exit::IO, format!("cannot read {}: {e}", args.input.display())))?;
    let weight = match args.index {
        IndexKind::Dso => Weight::Dso,
        IndexKind::Sombor => Weight::Sombor,
    };
    let mut out = String::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line == ">>graph6<<" {
            continue;
        }
        let g = graph6::decode(line)
            .map_err(|e| Failure::new(exit::PARSE, format!("line {}: {e}", lineno + 1)))?;
        let g6 = line.strip_prefix(">>graph6<<").unwrap_or(line);
        out.push_str(&format!("{g6} {:.9}\n", evaluate_index(&g, &weight)));
    }
    emit(args.output.as_deref(), &out)?;
    Ok(0)
}

#[derive(Serialize)]
struct EnumerationSummary {
    params: InstanceParams,
    count: usize,
    infeasible: bool,
    runtime_ms: f64,
}

fn cmd_enumerate(args: &EnumerateArgs) -> CmdResult {
    let params = args.instance.params();
    let start = Instant::now();
    let result = enumerate_with_limits(params, Limits::from_env())?;
    let summary = EnumerationSummary {
        params,
        count: result.graph_count(),
        infeasible: result.infeasible,
        runtime_ms: start.elapsed().as_secs_f64() * 1e3,
    };
    let mut lines = String::new();
    for g in &result.graphs {
        lines.push_str(g.graph6());
        lines.push('\n');
    }
    let summary = serde_json::to_string(&summary).expect("summary serializes");
    match &args.output {
        Some(path) => {
            emit(Some(path), &lines)?;
            emit(None, &format!("{summary}\n"))?;
        }
        None => {
            emit(None, &lines)?;
            eprintln!("{summary}");
        }
    }
    Ok(0)
}

fn cmd_verify(args: &VerifyArgs) -> CmdResult {
    let report = verify_theorem1_with_limits(args.instance.params(), Limits::from_env())?;
    let json = serde_json::to_string_pretty(&report).expect("report serializes");
    emit(args.output.as_deref(), &format!("{json}\n"))?;
    Ok(0)
}

fn expect_params(p: &[usize], family: &str, shape: &str, ok: bool) -> Result<(), Failure> {
    if ok {
        Ok(())
    } else {
        Err(Failure::new(
            exit::CONSTRAINT,
            format!("family {family} expects --params {shape}, got {p:?}"),
        ))
    }
}

fn construct(args: &ConstructArgs) -> Result<Graph, Failure> {
    let p = &args.params;
    let g = match args.family {
        Family::Extremal => {
            expect_params(p, "extremal", "n,ell", p.len() == 2)?;
            extremal_graph(p[0], p[1])?
        }
        Family::Circulant => {
            expect_params(p, "circulant", "r,a1,...,ak", p.len() >= 2)?;
            circulant(&CirculantSpec::new(p[0], p[1..].to_vec())?)
        }
        Family::Cstar => {
            expect_params(p, "cstar", "ell", p.len() == 1)?;
            c_star(p[0])?
        }
        Family::Mobius => {
            expect_params(p, "mobius", "k", p.len() == 1)?;
            mobius_ladder(p[0])?
        }
        Family::Claim1 => {
            expect_params(p, "claim1", "n,ell", p.len() == 2)?;
            claim1_case22_graph(p[0], p[1])?
        }
        Family::Quadrangle => {
            expect_params(p, "quadrangle", "a,b", p.len() == 2)?;
            quadrangle_linked_cycles(p[0], p[1])?
        }
    };
    Ok(g)
}

fn cmd_construct(args: &ConstructArgs) -> CmdResult {
    let g = construct(args)?;
    let text = format!(
        "{}\n{}\n{}\norder={} size={} cyclomatic={} connected={} dso={:.9}\n",
        graph6::encode(&g),
        g.edge_type_counts(),
        g.degree_profile().sequence_string(),
        g.order(),
        g.size(),
        g.cyclomatic_number(),
        g.is_connected(),
        evaluate_index(&g, &Weight::Dso),
    );
    emit(args.output.as_deref(), &text)?;
    Ok(0)
}

fn cmd_check(args: &CheckArgs) -> CmdResult {
    let mut out = String::new();
    let mut code = 0;
    match args.suite {
        Suite::Table1 => {
            for (i, j) in [(1, 3), (1, 4), (2, 4), (3, 4), (4, 4)] {
                let h = h_weight(i, j)?;
                if h <= 0.0 {
                    code = exit::COUNTEREXAMPLE;
                }
                out.push_str(&format!("h({i},{j}) {h:.4}\n"));
            }
        }
        Suite::Lemma => {
            let scan = scan_lemma_cases();
            let bad = scan.counterexamples();
            for case in LemmaCase::ALL {
                let results: Vec<_> = scan.for_case(case).collect();
                let min = results.iter().map(|r| r.delta).fold(f64::INFINITY, f64::min);
                out.push_str(&format!("case {case}: {} tuples, min delta {min:.7}\n", results.len()));
            }
            if bad.is_empty() {
                out.push_str(&format!("all {} case tuples positive\n", scan.results.len()));
            } else {
                code = exit::COUNTEREXAMPLE;
                for r in bad {
                    out.push_str(&format!("counterexample: case {} params {:?} delta {:.9}\n", r.case, r.params, r.delta));
                }
            }
        }
        Suite::H => {
            let scan = scan_h_positivity(args.limit)?;
            if scan.non_positive.is_empty() {
                out.push_str(&format!("all {} pairs positive up to {}\n", scan.checked, scan.limit));
            } else {
                code = exit::COUNTEREXAMPLE;
                for ((i, j), v) in &scan.non_positive {
                    out.push_str(&format!("counterexample: h({i},{j}) = {v:.9}\n"));
                }
            }
            out.push_str(&format!(
                "min h = {:.7} at (i,j)=({},{})\n",
                scan.minimum, scan.argmin.0, scan.argmin.1
            ));
        }
    }
    emit(args.output.as_deref(), &out)?;
    Ok(code)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Index(a) => cmd_index(a),
        Command::Enumerate(a) => cmd_enumerate(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Construct(a) => cmd_construct(a),
        Command::Check(a) => cmd_check(a),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

use std::collections::BTreeMap;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use cactus_wiener::constructors::{
    bundle, chain_cactus, clipped_cycle, cycle, path, saw, star, triangle_chain, CactusClassParams,
};
use cactus_wiener::enumeration::{Enumerator, DEFAULT_MAX_N};
use cactus_wiener::graph::{cactus_cycle_count, emit_edge_list, emit_graph6, parse_graph};
use cactus_wiener::invariants::{edge_wiener, wiener};
use cactus_wiener::transforms::run_all_suites;
use cactus_wiener::verify::{verify_bounds, BoundsReport, KnownDiscrepancies, CSV_COLUMNS};
use cactus_wiener::Graph;
use clap::{Parser, ValueEnum};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Command {
    Compute,
    Construct,
    Enumerate,
    VerifyBounds,
    VerifyLemmas,
    Report,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
    Graph6,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Path,
    Cycle,
    Star,
    Bundle,
    TriangleChain,
    Saw,
    ClippedCycle,
    Chain,
}

/// Edge-Wiener index of cacti: compute, construct, enumerate and verify.
///
/// Exit status: 0 success, 1 verification failure, 2 usage or input error.
/// The environment variable CACTUS_MAX_N overrides the enumeration cap (default 11).
#[derive(Debug, Parser)]
#[command(name = "cactus-wiener", version)]
struct RunConfig {
    #[arg(value_enum, conflicts_with = "command")]
    subcommand: Option<Command>,
    #[arg(long, value_enum)]
    command: Option<Command>,
    /// Graph file (graph6 or edge list) for compute; JSON report for report.
    #[arg(long)]
    input: Option<PathBuf>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    t: Option<usize>,
    #[arg(long, value_enum)]
    family: Option<Family>,
    /// Family parameters: `i=1,j=1` for saw, `i=2` for triangle-chain,
    /// block sizes `3,2,4` for chain.
    #[arg(long)]
    params: Option<String>,
    #[arg(long, value_enum)]
    format: Option<Format>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Largest n swept by verify-bounds.
    #[arg(long)]
    max_n: Option<usize>,
    /// Output file, or output directory for verify-bounds.
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Failures that map to exit status 2.
#[derive(Debug)]
struct UsageError(anyhow::Error);

impl<E: Into<anyhow::Error>> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.into())
    }
}

type Outcome = Result<bool, UsageError>;

fn main() -> ExitCode {
    let config = RunConfig::parse();
    match run(&config) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(UsageError(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(config: &RunConfig) -> Outcome {
    let command = config
        .subcommand
        .or(config.command)
        .ok_or_else(|| anyhow!("no command given"))?;
    match command {
        Command::Compute => cmd_compute(config),
        Command::Construct => cmd_construct(config),
        Command::Enumerate => cmd_enumerate(config),
        Command::VerifyBounds => cmd_verify_bounds(config),
        Command::VerifyLemmas => cmd_verify_lemmas(config),
        Command::Report => cmd_report(config),
    }
}

fn cap() -> Result<usize, UsageError> {
    match std::env::var("CACTUS_MAX_N") {
        Ok(v) => Ok(v
            .trim()
            .parse()
            .with_context(|| format!("CACTUS_MAX_N={v:?} is not a number"))?),
        Err(_) => Ok(DEFAULT_MAX_N),
    }
}

fn require<T: Copy>(value: Option<T>, flag: &str) -> Result<T, UsageError> {
    value.ok_or_else(|| UsageError(anyhow!("--{flag} is required")))
}

fn write_output(out: Option<&Path>, text: &str) -> Result<(), UsageError> {
    match out {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display()))?,
        None => io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

#[derive(Serialize)]
struct ComputeJson {
    n: usize,
    m: usize,
    t: Option<usize>,
    wiener: u64,
    edge_wiener: u64,
}

fn cmd_compute(config: &RunConfig) -> Outcome {
    let input = config
        .input
        .as_deref()
        .ok_or_else(|| anyhow!("--input is required"))?;
    let text = fs::read_to_string(input).with_context(|| format!("reading {}", input.display()))?;
    let g = parse_graph(&text)?;
    let w = wiener(&g)?;
    let we = edge_wiener(&g)?;
    let t = cactus_cycle_count(&g).ok();
    let text = match config.format.unwrap_or(Format::Text) {
        Format::Json => {
            let record = ComputeJson {
                n: g.vertex_count(),
                m: g.edge_count(),
                t,
                wiener: w,
                edge_wiener: we,
            };
            serde_json::to_string_pretty(&record)? + "\n"
        }
        Format::Text => {
            let t = t.map_or_else(|| "not a cactus".to_owned(), |t| t.to_string());
            format!(
                "n={} m={} t={t} W={w} We={we}\n",
                g.vertex_count(),
                g.edge_count()
            )
        }
        other => bail_usage(format!("compute does not support --format {other:?}"))?,
    };
    write_output(config.out.as_deref(), &text)?;
    Ok(true)
}

fn bail_usage<T>(msg: String) -> Result<T, UsageError> {
    Err(UsageError(anyhow!(msg)))
}

/// `key=value` pairs and bare integers, comma separated.
#[derive(Debug, Default)]
struct FamilyParams {
    named: BTreeMap<String, usize>,
    positional: Vec<usize>,
}

impl FamilyParams {
    fn parse(text: Option<&str>) -> Result<Self, UsageError> {
        let mut params = FamilyParams::default();
        for item in text
            .unwrap_or("")
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
        {
            let number = |s: &str| {
                s.trim()
                    .parse::<usize>()
                    .with_context(|| format!("bad parameter {item:?}"))
            };
            match item.split_once('=') {
                Some((key, value)) => {
                    params.named.insert(key.trim().to_owned(), number(value)?);
                }
                None => params.positional.push(number(item)?),
            }
        }
        Ok(params)
    }

    fn get(&self, key: &str) -> Result<usize, UsageError> {
        self.named
            .get(key)
            .copied()
            .ok_or_else(|| UsageError(anyhow!("--params needs {key}=<value>")))
    }
}

fn build_family(config: &RunConfig) -> Result<Graph, UsageError> {
    let family = require(config.family, "family")?;
    let params = FamilyParams::parse(config.params.as_deref())?;
    let g = match family {
        Family::Path => path(require(config.n, "n")?)?,
        Family::Cycle => cycle(require(config.n, "n")?)?,
        Family::Star => star(require(config.n, "n")?)?,
        Family::Bundle => bundle(CactusClassParams::new(
            require(config.n, "n")?,
            require(config.t, "t")?,
        )?)?,
        Family::TriangleChain => triangle_chain(params.get("i")?).0,
        Family::Saw => saw(params.get("i")?, params.get("j")?, require(config.n, "n")?)?,
        Family::ClippedCycle => clipped_cycle(require(config.n, "n")?)?,
        Family::Chain => chain_cactus(&params.positional)?,
    };
    Ok(g)
}

#[derive(Serialize)]
struct GraphJson {
    n: usize,
    m: usize,
    graph6: String,
    edges: Vec<(usize, usize)>,
}

fn render_graph(g: &Graph, format: Format) -> Result<String, UsageError> {
    Ok(match format {
        Format::Graph6 => emit_graph6(g) + "\n",
        Format::Text => emit_edge_list(g),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["u", "v"])?;
            for &(u, v) in g.edges() {
                w.serialize((u, v))?;
            }
            String::from_utf8(w.into_inner().map_err(|e| anyhow!("{e}"))?)?
        }
        Format::Json => {
            let record = GraphJson {
                n: g.vertex_count(),
                m: g.edge_count(),
                graph6: emit_graph6(g),
                edges: g.edges().to_vec(),
            };
            serde_json::to_string_pretty(&record)? + "\n"
        }
    })
}

fn cmd_construct(config: &RunConfig) -> Outcome {
    let g = build_family(config)?;
    let text = render_graph(&g, config.format.unwrap_or(Format::Graph6))?;
    write_output(config.out.as_deref(), &text)?;
    Ok(true)
}

#[derive(Serialize)]
struct CellJson<'a> {
    n: usize,
    t: usize,
    count: usize,
    graphs: Vec<&'a str>,
}

fn cmd_enumerate(config: &RunConfig) -> Outcome {
    let params = CactusClassParams::new(require(config.n, "n")?, require(config.t, "t")?)?;
    let cell = Enumerator::new(cap()?).cell(params)?;
    let text = match config.format.unwrap_or(Format::Graph6) {
        Format::Graph6 | Format::Text => cell
            .forms
            .iter()
            .map(|f| format!("{f}\n"))
            .collect::<String>(),
        Format::Json => {
            let record = CellJson {
                n: params.n,
                t: params.t,
                count: cell.count(),
                graphs: cell.forms.iter().map(|f| f.as_str()).collect(),
            };
            serde_json::to_string_pretty(&record)? + "\n"
        }
        Format::Csv => bail_usage("enumerate does not support --format csv".into())?,
    };
    write_output(config.out.as_deref(), &text)?;
    eprintln!("count: {}", cell.count());
    Ok(true)
}

fn bounds_csv(report: &BoundsReport) -> Result<String, UsageError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(CSV_COLUMNS)?;
    for cell in &report.cells {
        w.write_record(cell.csv_record())?;
    }
    Ok(String::from_utf8(
        w.into_inner().map_err(|e| anyhow!("{e}"))?,
    )?)
}

fn cmd_verify_bounds(config: &RunConfig) -> Outcome {
    let cap = cap()?;
    let max_n = config.max_n.unwrap_or(9);
    if max_n > cap {
        bail_usage(format!("--max-n {max_n} exceeds the enumeration cap {cap}"))?;
    }
    let report = verify_bounds(max_n, cap, &KnownDiscrepancies::shipped())?;
    let dir = config.out.clone().unwrap_or_else(|| PathBuf::from("."));
    fs::create_dir_all(&dir).with_context(|| format!("creating {}", dir.display()))?;
    let csv_path = dir.join("verify_bounds.csv");
    let json_path = dir.join("verify_bounds.json");
    fs::write(&csv_path, bounds_csv(&report)?)
        .with_context(|| format!("writing {}", csv_path.display()))?;
    fs::write(&json_path, serde_json::to_string_pretty(&report)? + "\n")
        .with_context(|| format!("writing {}", json_path.display()))?;
    print!("{}", report.summary());
    println!("wrote {} and {}", csv_path.display(), json_path.display());
    Ok(report.passed())
}

fn cmd_verify_lemmas(config: &RunConfig) -> Outcome {
    let reports = run_all_suites(config.seed);
    let passed = reports.iter().all(|r| r.passed());
    let text = match config.format.unwrap_or(Format::Text) {
        Format::Json => serde_json::to_string_pretty(&reports)? + "\n",
        Format::Text => {
            let mut out = format!("seed {}\n", config.seed);
            for r in &reports {
                out += &format!(
                    "{:<5} valid {:>4}  held {:>4}  equal {:>4}  closed-form {:>4}  outside {:>5}  {}\n",
                    r.lemma.name(),
                    r.valid,
                    r.held,
                    r.equal,
                    r.closed_form_checked,
                    r.outside_hypothesis,
                    if r.passed() { "PASS" } else { "FAIL" },
                );
                for f in &r.failures {
                    out += &format!(
                        "      failure {} -> {} ({} -> {})\n",
                        f.before, f.after, f.we_before, f.we_after
                    );
                }
            }
            out
        }
        other => bail_usage(format!("verify-lemmas does not support --format {other:?}"))?,
    };
    write_output(config.out.as_deref(), &text)?;
    Ok(passed)
}

fn cmd_report(config: &RunConfig) -> Outcome {
    let input = config
        .input
        .as_deref()
        .ok_or_else(|| anyhow!("--input is required"))?;
    let text = fs::read_to_string(input).with_context(|| format!("reading {}", input.display()))?;
    let report: BoundsReport =
        serde_json::from_str(&text).with_context(|| format!("parsing {}", input.display()))?;
    write_output(config.out.as_deref(), &report.summary())?;
    Ok(true)
}

//! `hcp`: solve, cross-check, sweep, and inspect Hamiltonian-cycle
//! instances. Exit codes: 0 ok, 1 usage, 2 parse error, 3 golden or
//! soundness failure.

use std::fs;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};

use hcp_core::oracle;
use hcp_core::solver::{solve_cycle_with, solve_path, SolveOptions, TieBreak, Transcript};
use hcp_core::{Graph, Hologram, VertexId};
use hcp_harness::golden::{self, GoldenExample, ALL_EXAMPLES};
use hcp_harness::probe::{loglog_slope, scaling_probe};
use hcp_harness::report;
use hcp_harness::sweep::{sweep, SweepOptions};

#[derive(Parser)]
#[command(
    name = "hcp",
    about = "Hamiltonian cycle decider with brute-force cross-checking",
    version
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Default)]
enum Mode {
    #[default]
    Cycle,
    Path,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Default)]
enum TieArg {
    #[default]
    Asc,
    Desc,
}

impl From<TieArg> for TieBreak {
    fn from(t: TieArg) -> Self {
        match t {
            TieArg::Asc => TieBreak::Ascending,
            TieArg::Desc => TieBreak::Descending,
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Decide Hamiltonicity of an edge-list or graph6 file
    Solve {
        file: PathBuf,
        /// Start vertex for cycle mode
        #[arg(long, default_value_t = 1)]
        start: u32,
        #[arg(long, value_enum, default_value_t)]
        mode: Mode,
        /// Print the full deterministic solve transcript
        #[arg(long)]
        trace: bool,
        /// Parent choice during backward search
        #[arg(long = "tie-break", value_enum, default_value_t)]
        tie_break: TieArg,
    },
    /// Brute-force ground truth for a graph file
    Oracle {
        file: PathBuf,
        /// Count directed Hamiltonian circuits from the start instead
        #[arg(long)]
        count: bool,
        #[arg(long, default_value_t = 1)]
        start: u32,
    },
    /// Exhaustive decider-vs-oracle sweep over connected labeled graphs
    Sweep {
        /// Order range A..B (inclusive)
        #[arg(long = "n")]
        range: String,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Output path for the JSON-lines report ("-" for stdout)
        #[arg(long)]
        out: PathBuf,
        /// Include wall-clock fields (makes reports non-reproducible)
        #[arg(long)]
        timings: bool,
        /// Allow orders beyond the default n <= 6 guard
        #[arg(long)]
        allow_large: bool,
    },
    /// Replay a worked example and compare all pinned values
    Golden {
        /// ex1, ex2, ex3-cm, ex4, ex5e, or all
        example: String,
    },
    /// Write the layered expansion of a graph as DOT
    Hologram {
        file: PathBuf,
        #[arg(long)]
        dot: PathBuf,
        #[arg(long, default_value_t = 1)]
        start: u32,
    },
    /// Time the decider on complete graphs and fit a log-log slope
    Probe {
        /// Comma-separated orders, e.g. 5,10,15
        #[arg(long)]
        complete: String,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn load_graph(path: &PathBuf) -> Result<Graph, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    // An edge-list header is "<K> <n> <m>"; a graph6 code is a single
    // token, so whitespace on the first payload line tells them apart.
    let header = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'));
    let looks_like_edge_list = matches!(header, Some(h) if h.starts_with(['U', 'D', 'M']) && h.contains(char::is_whitespace));
    let parsed = if looks_like_edge_list {
        Graph::parse_edge_list(&text)
    } else {
        Graph::from_graph6(&text)
    };
    parsed.map_err(|e| format!("{}: {e}", path.display()))
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.cmd {
        Cmd::Solve {
            file,
            start,
            mode,
            trace,
            tie_break,
        } => {
            let g = load_graph(&file)?;
            let opts = SolveOptions {
                tie_break: tie_break.into(),
            };
            match mode {
                Mode::Cycle => {
                    let mut transcript = Transcript::new();
                    let out = solve_cycle_with(
                        &g,
                        VertexId::new(start),
                        opts,
                        trace.then_some(&mut transcript),
                    )
                    .map_err(|e| e.to_string())?;
                    if trace {
                        for ev in &transcript {
                            println!("{}", ev.render());
                        }
                    }
                    println!("verdict: {}", out.verdict);
                    if let Some(c) = &out.cycle {
                        println!("cycle: {}", join_seq(c));
                    }
                }
                Mode::Path => {
                    let out = solve_path(&g, opts).map_err(|e| e.to_string())?;
                    match &out.path {
                        Some(p) => println!("path: {}", join_seq(p)),
                        None => println!("verdict: non-traceable"),
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Oracle { file, count, start } => {
            let g = load_graph(&file)?;
            let start = VertexId::new(start);
            if count {
                println!("cycles from {start}: {}", oracle::count_cycles(&g, start));
            } else {
                match oracle::hamiltonian_cycle(&g, start) {
                    Some(c) => {
                        println!("oracle: hamiltonian");
                        println!("cycle: {}", join_seq(&c));
                    }
                    None => println!("oracle: non_hamiltonian"),
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Sweep {
            range,
            jobs,
            out,
            timings,
            allow_large,
        } => {
            let (n_from, n_to) = parse_range(&range)?;
            let opts = SweepOptions {
                jobs,
                timings,
                allow_large,
            };
            let outcome = sweep(n_from, n_to, &opts).map_err(|e| e.to_string())?;
            let text = report::jsonl_string(&outcome.records, &outcome.report);
            if out.as_os_str() == "-" {
                print!("{text}");
            } else {
                fs::write(&out, text).map_err(|e| format!("{}: {e}", out.display()))?;
                println!(
                    "{}",
                    serde_json::to_string(&outcome.report).expect("report serializes")
                );
            }
            if outcome.report.invalid_cycles > 0 {
                eprintln!(
                    "soundness failure: {} invalid cycles",
                    outcome.report.invalid_cycles
                );
                return Ok(ExitCode::from(3));
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Golden { example } => {
            let targets: Vec<GoldenExample> = if example == "all" {
                ALL_EXAMPLES.to_vec()
            } else {
                vec![GoldenExample::from_str(&example)?]
            };
            let mut failed = false;
            for t in targets {
                let rep = golden::run(t);
                if rep.passed() {
                    println!(
                        "ok {} ({} checks, {:?})",
                        rep.example, rep.checks, rep.elapsed
                    );
                } else {
                    failed = true;
                    println!(
                        "FAIL {} ({} checks, {} divergences)",
                        rep.example,
                        rep.checks,
                        rep.failures.len()
                    );
                    println!("first divergence: {}", rep.first_divergence().unwrap());
                }
            }
            Ok(if failed {
                ExitCode::from(3)
            } else {
                ExitCode::SUCCESS
            })
        }
        Cmd::Hologram { file, dot, start } => {
            let g = load_graph(&file)?;
            let h = Hologram::build(&g, VertexId::new(start)).map_err(|e| e.to_string())?;
            let text = h.to_dot();
            if dot.as_os_str() == "-" {
                print!("{text}");
            } else {
                fs::write(&dot, text).map_err(|e| format!("{}: {e}", dot.display()))?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Probe { complete } => {
            let orders: Vec<u32> = complete
                .split(',')
                .map(|s| {
                    s.trim()
                        .parse::<u32>()
                        .map_err(|_| format!("bad order '{s}'"))
                })
                .collect::<Result<_, _>>()?;
            let points = scaling_probe(&orders, 2);
            let mut out = std::io::stdout().lock();
            let _ = writeln!(
                out,
                "{:>4} {:>12} {:>18} {:>14}",
                "n", "seconds", "max sweep passes", "verdict"
            );
            for p in &points {
                let _ = writeln!(
                    out,
                    "{:>4} {:>12.6} {:>18} {:>14}",
                    p.n, p.seconds, p.max_singleton_passes, p.verdict
                );
            }
            let _ = writeln!(out, "log-log slope: {:.3}", loglog_slope(&points));
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn join_seq(seq: &[VertexId]) -> String {
    seq.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join("-")
}

fn parse_range(s: &str) -> Result<(u32, u32), String> {
    let (a, b) = s
        .split_once("..")
        .ok_or_else(|| format!("range must be A..B, got '{s}'"))?;
    let from = a
        .trim()
        .parse()
        .map_err(|_| format!("bad range start '{a}'"))?;
    let to = b
        .trim()
        .parse()
        .map_err(|_| format!("bad range end '{b}'"))?;
    Ok((from, to))
}

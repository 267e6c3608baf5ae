//! The `escrit` command line.
//!
//! Every subcommand parses its input, calls one library function and
//! serializes the result. Exit codes: 0 success, 1 a flagged expectation
//! failed, 2 usage or input error.

use std::ffi::OsString;
use std::io::Read;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use escrit_core::criticality::{criticality_report_with, CriticalityReport, ReportOptions};
use escrit_core::cycles::{DEFAULT_CYCLE_LIMIT, DEFAULT_ODD_CYCLE_CAP};
use escrit_core::families::{construct, recognize_family, FamilySpec, FamilyTag};
use escrit_core::scan::{ScanOptions, ScanReport};
use escrit_core::{
    ear_decomposition, edge_stability_number, to_graph6, Ear, Edge, Graph, Subgraph,
};
use serde::Serialize;

use crate::input::{graph6_lines, read_graph, read_to_string, GraphSource};
use crate::parallel::{scan_lines_parallel, scan_range_parallel};
use crate::summary::summary_table;

pub const MAX_CYCLES_ENV: &str = "ESCRIT_MAX_CYCLES";

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CommandOutcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CommandOutcome {
    fn json<T: Serialize>(value: &T) -> Self {
        let mut stdout = serde_json::to_string_pretty(value).expect("serializable");
        stdout.push('\n');
        CommandOutcome {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }

    fn usage(message: impl std::fmt::Display) -> Self {
        CommandOutcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        }
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "escrit",
    version,
    about = "Chromatic edge-stability and (3,2)-critical graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct GraphArgs {
    /// Graph as a graph6 string.
    #[arg(long, conflicts_with = "edges")]
    g6: Option<String>,
    /// Edge-list file (`n m`, then `u v` per line). Without either flag the
    /// graph is read from stdin.
    #[arg(long)]
    edges: Option<PathBuf>,
}

impl GraphArgs {
    fn source(&self) -> GraphSource {
        match (&self.g6, &self.edges) {
            (Some(s), _) => GraphSource::Graph6(s.clone()),
            (None, Some(p)) => GraphSource::EdgeFile(p.clone()),
            (None, None) => GraphSource::Stdin,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Criticality report of a graph.
    Analyze {
        #[command(flatten)]
        graph: GraphArgs,
        /// Odd-cycle census cap.
        #[arg(long, default_value_t = DEFAULT_ODD_CYCLE_CAP)]
        cap: usize,
        /// Exit 1 unless the graph is edge-stability critical.
        #[arg(long)]
        expect_critical: bool,
    },
    /// Chromatic number, es and a minimum deletion set.
    Es {
        #[command(flatten)]
        graph: GraphArgs,
    },
    /// Build a family member from a compact spec such as `E:4,1;4,1;4,1`.
    Build {
        spec: String,
        /// Emit JSON instead of the bare graph6 line.
        #[arg(long)]
        json: bool,
    },
    /// Structural family of a graph, if any.
    Classify {
        #[command(flatten)]
        graph: GraphArgs,
    },
    /// Exhaustive scan of all labelled graphs up to `--n` vertices, or of a
    /// graph6 stream.
    Scan {
        #[arg(long, required_unless_present = "stream", conflicts_with = "stream")]
        n: Option<usize>,
        /// Smallest vertex count of a range scan.
        #[arg(long, default_value_t = 1, requires = "n")]
        min_n: usize,
        /// graph6 file, one graph per line; `-` reads stdin.
        #[arg(long)]
        stream: Option<PathBuf>,
        /// Odd-cycle census cap.
        #[arg(long, default_value_t = DEFAULT_ODD_CYCLE_CAP)]
        cap: usize,
        /// Also write a summary table to stderr.
        #[arg(long)]
        summary: bool,
        /// Exit 1 unless the scan confirms the characterization.
        #[arg(long)]
        expect_clean: bool,
    },
    /// Open-ear decomposition starting from a seed subgraph.
    Ear {
        #[command(flatten)]
        graph: GraphArgs,
        /// Seed edges, e.g. `0-1,1-2,2-0`.
        #[arg(long)]
        seed: String,
    },
}

/// Runs one command with the process environment.
pub fn run<I, T>(argv: I, stdin: &mut dyn Read) -> CommandOutcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let max_cycles = std::env::var(MAX_CYCLES_ENV).ok();
    run_with(argv, stdin, max_cycles.as_deref())
}

/// As [`run`], with the `ESCRIT_MAX_CYCLES` value passed explicitly.
pub fn run_with<I, T>(argv: I, stdin: &mut dyn Read, max_cycles: Option<&str>) -> CommandOutcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                CommandOutcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                CommandOutcome {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    let cycle_limit = match max_cycles {
        None => DEFAULT_CYCLE_LIMIT,
        Some(v) => match v.trim().parse::<usize>() {
            Ok(l) if l > 0 => l,
            _ => {
                return CommandOutcome::usage(format!(
                    "{MAX_CYCLES_ENV} must be a positive integer, found `{v}`"
                ))
            }
        },
    };
    match dispatch(cli.command, stdin, cycle_limit) {
        Ok(outcome) => outcome,
        Err(message) => CommandOutcome::usage(message),
    }
}

#[derive(Serialize)]
struct AnalyzeOutput {
    graph6: String,
    #[serde(flatten)]
    report: CriticalityReport,
    family: Option<FamilySpec>,
}

#[derive(Serialize)]
struct ClassifyOutput {
    family: Option<FamilyTag>,
    spec: Option<FamilySpec>,
    compact: Option<String>,
}

#[derive(Serialize)]
struct BuildOutput {
    spec: FamilySpec,
    compact: String,
    graph6: String,
    n: usize,
    m: usize,
}

#[derive(Serialize)]
struct EarOutput {
    seed: Subgraph,
    ears: Vec<Ear>,
}

fn dispatch(
    command: Command,
    stdin: &mut dyn Read,
    cycle_limit: usize,
) -> Result<CommandOutcome, String> {
    let load = |args: &GraphArgs, stdin: &mut dyn Read| -> Result<Graph, String> {
        read_graph(&args.source(), stdin).map_err(|e| e.to_string())
    };
    match command {
        Command::Analyze {
            graph,
            cap,
            expect_critical,
        } => {
            let g = load(&graph, stdin)?;
            let opts = ReportOptions {
                cap,
                cycle_limit,
                ..ReportOptions::default()
            };
            let report = criticality_report_with(&g, &opts).map_err(|e| e.to_string())?;
            let critical = report.is_edge_stability_critical;
            let mut out = CommandOutcome::json(&AnalyzeOutput {
                graph6: to_graph6(&g),
                report,
                family: recognize_family(&g),
            });
            if expect_critical && !critical {
                out.code = 1;
                out.stderr = "graph is not edge-stability critical\n".into();
            }
            Ok(out)
        }
        Command::Es { graph } => {
            let g = load(&graph, stdin)?;
            let report = edge_stability_number(&g).map_err(|e| e.to_string())?;
            Ok(CommandOutcome::json(&report))
        }
        Command::Build { spec, json } => {
            let spec: FamilySpec = spec
                .parse()
                .map_err(|e: escrit_core::families::SpecParseError| e.to_string())?;
            let built = construct(&spec).map_err(|e| e.to_string())?;
            let graph6 = to_graph6(&built.graph);
            if json {
                Ok(CommandOutcome::json(&BuildOutput {
                    compact: spec.to_string(),
                    n: built.graph.n(),
                    m: built.graph.m(),
                    spec,
                    graph6,
                }))
            } else {
                Ok(CommandOutcome {
                    code: 0,
                    stdout: format!("{graph6}\n"),
                    stderr: String::new(),
                })
            }
        }
        Command::Classify { graph } => {
            let g = load(&graph, stdin)?;
            let spec = recognize_family(&g);
            Ok(CommandOutcome::json(&ClassifyOutput {
                family: spec.as_ref().map(FamilySpec::tag),
                compact: spec.as_ref().map(ToString::to_string),
                spec,
            }))
        }
        Command::Scan {
            n,
            min_n,
            stream,
            cap,
            summary,
            expect_clean,
        } => {
            let options = ScanOptions {
                cap,
                cycle_limit,
                ..ScanOptions::default()
            };
            let report: ScanReport = match (n, stream) {
                (Some(n), _) => {
                    if min_n > n {
                        return Err(format!("--min-n {min_n} exceeds --n {n}"));
                    }
                    scan_range_parallel(min_n, n, &options).map_err(|e| e.to_string())?
                }
                (None, Some(path)) => {
                    let (text, name) = if path.as_os_str() == "-" {
                        let mut text = String::new();
                        stdin
                            .read_to_string(&mut text)
                            .map_err(|e| format!("cannot read stdin: {e}"))?;
                        (text, "stdin".to_string())
                    } else {
                        (
                            read_to_string(&path).map_err(|e| e.to_string())?,
                            path.display().to_string(),
                        )
                    };
                    scan_lines_parallel(&graph6_lines(&text), &name, &options)
                }
                (None, None) => unreachable!("clap requires --n or --stream"),
            };
            let mut out = CommandOutcome::json(&report);
            if summary {
                out.stderr = summary_table(&report);
            }
            if expect_clean && !report.confirmed {
                out.code = 1;
            }
            Ok(out)
        }
        Command::Ear { graph, seed } => {
            let g = load(&graph, stdin)?;
            let edges = parse_seed(&seed)?;
            let seed = Subgraph::from_edges(edges);
            let ears = ear_decomposition(&g, &seed).map_err(|e| e.to_string())?;
            Ok(CommandOutcome::json(&EarOutput { seed, ears }))
        }
    }
}

/// `0-1,1-2,2-0` into edges.
fn parse_seed(text: &str) -> Result<Vec<Edge>, String> {
    text.split(',')
        .map(|item| {
            let item = item.trim();
            let (a, b) = item
                .split_once('-')
                .ok_or_else(|| format!("seed edge `{item}` is not of the form u-v"))?;
            let a: usize = a
                .trim()
                .parse()
                .map_err(|_| format!("bad vertex in seed edge `{item}`"))?;
            let b: usize = b
                .trim()
                .parse()
                .map_err(|_| format!("bad vertex in seed edge `{item}`"))?;
            if a == b {
                return Err(format!("seed edge `{item}` is a loop"));
            }
            Ok(Edge::new(a, b))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> CommandOutcome {
        let mut empty: &[u8] = b"";
        run_with(
            std::iter::once("escrit").chain(args.iter().copied()),
            &mut empty,
            None,
        )
    }

    #[test]
    fn seed_parsing() {
        assert_eq!(
            parse_seed("0-1, 2-1").unwrap(),
            vec![Edge::new(0, 1), Edge::new(1, 2)]
        );
        assert!(parse_seed("0-0").is_err());
        assert!(parse_seed("01").is_err());
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(run_args(&[]).code, 2);
        assert_eq!(run_args(&["scan"]).code, 2);
        assert_eq!(run_args(&["scan", "--n", "3", "--stream", "x"]).code, 2);
        assert_eq!(run_args(&["build", "C:1,1,2,2"]).code, 2);
        assert_eq!(run_args(&["--help"]).code, 0);
    }

    #[test]
    fn bad_cycle_limit() {
        let mut empty: &[u8] = b"";
        let out = run_with(
            ["escrit", "analyze", "--g6", "Bw"],
            &mut empty,
            Some("many"),
        );
        assert_eq!(out.code, 2);
        assert!(out.stderr.contains(MAX_CYCLES_ENV));
    }
}

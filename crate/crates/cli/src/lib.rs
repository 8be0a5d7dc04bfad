//! Command-line front end: analyze and recognize graphs, generate family
//! members, and run the verification harness.

pub mod certificate;
pub mod generate;
pub mod report;

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use excellence::graph::io::{self, Format};
use excellence::harness::{run_all, HarnessConfig};
use excellence::oracle::DEFAULT_BUDGET;
use excellence::Graph;

/// Outcome classes mapped to process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    pub const DISAGREEMENT: i32 = 1;
    pub const PARSE: i32 = 2;
    pub const BUDGET: i32 = 3;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Edgelist,
    Dimacs,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Edgelist => Format::EdgeList,
            FormatArg::Dimacs => Format::Dimacs,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputArg {
    Json,
    Table,
}

#[derive(Debug, Parser)]
#[command(name = "excellence", version, about = "Decide whether every vertex of a graph lies in a maximum independent set")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Graph file format, for input and for `generate` output.
    #[arg(long, global = true, value_enum, default_value = "edgelist")]
    pub format: FormatArg,
    /// Node cap for each exact search.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET, value_parser = clap::value_parser!(u64).range(1..))]
    pub budget: u64,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true, value_enum, default_value = "json")]
    pub output: OutputArg,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Exact independence parameters: i, alpha_c, alpha, critical vertices.
    Analyze {
        /// Input file; standard input when absent or `-`.
        input: Option<PathBuf>,
    },
    /// Structural verdict with a certificate.
    Recognize { input: Option<PathBuf> },
    /// Print a member of a graph family.
    Generate {
        family: String,
        args: Vec<String>,
    },
    /// Cross-check recognizers and invariants against the exact oracle.
    Verify {
        /// Cases per suite instead of the defaults.
        #[arg(long)]
        count: Option<usize>,
        #[arg(long)]
        sequential: bool,
        #[arg(long, hide = true)]
        inject_bug: bool,
    },
}

/// Parses `args` and runs the command, returning the exit code.
pub fn run(args: impl IntoIterator<Item = OsString>, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let _ = if e.use_stderr() { write!(err, "{}", e.render()) } else { write!(out, "{}", e.render()) };
            return code;
        }
    };
    match execute(&cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit::PARSE
        }
    }
}

fn read_graph(input: &Option<PathBuf>, format: Format) -> Result<Graph, String> {
    let text = match input {
        Some(path) if path.as_os_str() != "-" => {
            std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?
        }
        _ => {
            let mut text = String::new();
            std::io::stdin().read_to_string(&mut text).map_err(|e| format!("standard input: {e}"))?;
            text
        }
    };
    io::parse(&text, format).map_err(|e| format!("parse error at {e}"))
}

fn execute(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, String> {
    let json = cli.output == OutputArg::Json;
    let write_out = |out: &mut dyn Write, text: String| -> Result<(), String> {
        out.write_all(text.as_bytes()).map_err(|e| e.to_string())
    };
    match &cli.command {
        Command::Analyze { input } => {
            let g = read_graph(input, cli.format.into())?;
            let (report, code) = report::analyze(&g, cli.budget);
            write_out(out, if json { report::to_json(&report) } else { report::analyze_table(&report) })?;
            Ok(code)
        }
        Command::Recognize { input } => {
            let g = read_graph(input, cli.format.into())?;
            let (report, code) = report::recognize(&g, cli.budget);
            write_out(out, if json { report::to_json(&report) } else { report::recognize_table(&report) })?;
            Ok(code)
        }
        Command::Generate { family, args } => {
            let g = generate::generate(family, args, cli.seed).map_err(|e| e.to_string())?;
            write_out(out, io::write(&g, cli.format.into()))?;
            Ok(exit::OK)
        }
        Command::Verify { count, sequential, inject_bug } => {
            let config = HarnessConfig {
                seed: cli.seed,
                budget: cli.budget,
                count: *count,
                inject_bug: *inject_bug,
                parallel: !sequential,
            };
            let started = std::time::Instant::now();
            let harness = run_all(&config);
            for s in harness.suites.iter().filter(|s| s.vacuous()) {
                let _ = writeln!(err, "warning: suite {} ({}) ran no cases; vacuous pass", s.id, s.name);
            }
            if harness.budget_exhausted() && !harness.disagreement() {
                let _ = writeln!(err, "warning: some cases exhausted the search budget and were not decided");
            }
            let (report, code) = report::verify(&harness, started.elapsed());
            write_out(out, if json { report::to_json(&report) } else { report::verify_table(&harness) })?;
            Ok(code)
        }
    }
}

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use edgebound::bounds::{max_edges_general, max_edges_outerplanar, max_edges_planar};
use edgebound::constructions::{extremal_general, pivotal_planar, ClassParams};
use edgebound::graph::{DegreeSequence, Graph};
use edgebound::io::{
    certify, coloring_report, dot_export, graph6_decode, graph6_encode, realize_report,
    table_report, GraphReport,
};
use edgebound::oracle::{
    component_table_with, realize_degree_sequence_planar, verdict_from_table, RunOptions,
};

#[derive(Parser)]
#[command(
    name = "edgebound",
    version,
    about = "Edge bounds for planar graphs with bounded degree and matching number"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum BoundClass {
    Planar,
    General,
    Outerplanar,
}

#[derive(Clone, Copy, ValueEnum)]
enum ConstructClass {
    Planar,
    General,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    G6,
    Dot,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Print the maximum edge count for Δ < d and ν < nu.
    Bound {
        d: usize,
        nu: usize,
        #[arg(long, value_enum, default_value = "planar")]
        class: BoundClass,
    },
    /// Emit the extremal graph for the class.
    Construct {
        d: usize,
        nu: usize,
        #[arg(long, value_enum, default_value = "planar")]
        class: ConstructClass,
        #[arg(long, value_enum, default_value = "g6")]
        format: Format,
    },
    /// Certify a graph6 graph against the class and its bound.
    Check {
        graph6: String,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        nu: usize,
    },
    /// Emit the best component per matching number.
    Table {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        n_max: usize,
        #[arg(long, default_value_t = 1)]
        workers: usize,
    },
    /// Compare the enumeration oracle with the closed-form bound.
    Verify {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        nu: usize,
        #[arg(long)]
        n_max: usize,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        #[arg(long)]
        checkpoint: Option<PathBuf>,
    },
    /// Emit a proper edge coloring of a graph6 graph.
    Color { graph6: String },
    /// Search for a planar realization of a degree sequence such as "5^10 4".
    Realize {
        sequence: String,
        /// Time budget in seconds.
        #[arg(long, default_value_t = 60)]
        timeout: u64,
    },
}

type Failure = Box<dyn std::error::Error>;

fn print_json<T: Serialize>(value: &T) -> Result<(), Failure> {
    let mut out = std::io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, value)?;
    writeln!(out)?;
    Ok(())
}

fn decode(text: &str) -> Result<Graph, Failure> {
    graph6_decode(text).map_err(|e| format!("invalid graph6 {text:?}: {e}").into())
}

#[derive(Serialize)]
struct ConstructReport {
    params: ClassParams,
    class: &'static str,
    #[serde(flatten)]
    graph: GraphReport,
}

fn run(command: Command) -> Result<ExitCode, Failure> {
    match command {
        Command::Bound { d, nu, class } => {
            let value = match class {
                BoundClass::Planar => max_edges_planar(d, nu),
                BoundClass::General => max_edges_general(d, nu),
                BoundClass::Outerplanar => max_edges_outerplanar(d, nu),
            };
            println!("{value}");
        }
        Command::Construct {
            d,
            nu,
            class,
            format,
        } => {
            let params = ClassParams::new(d, nu);
            let (g, name) = match class {
                ConstructClass::Planar => (pivotal_planar(params), "planar"),
                ConstructClass::General => (extremal_general(params), "general"),
            };
            match format {
                Format::G6 => println!("{}", graph6_encode(&g)?),
                Format::Dot => print!("{}", dot_export(&g, None)),
                Format::Json => print_json(&ConstructReport {
                    params,
                    class: name,
                    graph: GraphReport::new(&g)?,
                })?,
            }
        }
        Command::Check { graph6, d, nu } => {
            let g = decode(&graph6)?;
            print_json(&certify(&g, ClassParams::new(d, nu))?)?;
        }
        Command::Table { d, n_max, workers } => {
            let options = RunOptions {
                workers,
                checkpoint: None,
            };
            let table = component_table_with(d, n_max, &options)?;
            print_json(&table_report(&table)?)?;
        }
        Command::Verify {
            d,
            nu,
            n_max,
            workers,
            checkpoint,
        } => {
            let table = component_table_with(
                d,
                n_max,
                &RunOptions {
                    workers,
                    checkpoint,
                },
            )?;
            let verdict = verdict_from_table(&table, nu);
            print_json(&verdict)?;
            if verdict.is_violation() {
                eprintln!("error: the oracle contradicts the closed-form bound");
                return Ok(ExitCode::from(2));
            }
        }
        Command::Color { graph6 } => {
            let g = decode(&graph6)?;
            print_json(&coloring_report(&g)?)?;
        }
        Command::Realize { sequence, timeout } => {
            let seq: DegreeSequence = sequence.parse()?;
            let result = realize_degree_sequence_planar(&seq, Duration::from_secs(timeout));
            print_json(&realize_report(&seq, &result)?)?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

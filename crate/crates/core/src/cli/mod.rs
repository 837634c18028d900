//! Command-line front end. Exit codes: 0 on success or a yes answer, 1 on a
//! no answer, 2 on any error.

pub mod batch;
pub mod memtrack;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::{ArgAction, Parser, Subcommand};

use crate::engine::{compute, decide, read_ordering, verify_ordering, write_ordering};
use crate::error::{Error, Result};
use crate::graph::{generate, load_edge_list_file, stats, write_edge_list, Family, Graph};
use batch::{run_batch, RunConfig};

pub const EXIT_YES: u8 = 0;
pub const EXIT_NO: u8 = 1;
pub const EXIT_ERROR: u8 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "adm2",
    version,
    about = "Exact 2-admissibility of sparse graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide whether the 2-admissibility is at most P
    Decide {
        graph: PathBuf,
        #[arg(short, long)]
        p: usize,
        /// Write the witness ordering here on a yes answer
        #[arg(short, long)]
        order_out: Option<PathBuf>,
    },
    /// Compute the exact 2-admissibility
    Compute {
        graph: PathBuf,
        /// Write an optimal ordering here
        #[arg(short, long)]
        order_out: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Print the 2-admissibility of a graph under a given ordering
    Verify { graph: PathBuf, order: PathBuf },
    /// Print sparseness measures of a graph
    Stats {
        graph: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Generate a synthetic graph
    Gen {
        /// clique, cycle, path, star, grid or gnm
        family: Family,
        #[arg(required = true)]
        params: Vec<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output file (stdout when absent)
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Measure every edge-list file in a directory into a CSV
    Batch {
        dir: PathBuf,
        #[arg(short, long)]
        out: PathBuf,
        /// Per-network time limit in seconds
        #[arg(long)]
        timeout: Option<f64>,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Keep rows in file-name order
        #[arg(long, default_value_t = true, action = ArgAction::Set)]
        deterministic: bool,
        /// Record peak heap usage per network (single worker)
        #[arg(long)]
        track_memory: bool,
    },
}

pub fn main_with<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_ERROR } else { EXIT_YES });
        }
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_ERROR)
        }
    }
}

pub fn run(command: Command) -> Result<u8> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match command {
        Command::Decide {
            graph,
            p,
            order_out,
        } => {
            let g = load(&graph)?;
            let result = decide(&g, p);
            match &result.witness {
                Some(witness) => {
                    writeln!(out, "YES")?;
                    if let Some(path) = order_out {
                        let value = verify_ordering(&g, witness)?;
                        write_ordering(&g, witness, value, p, create(&path)?)?;
                    }
                    Ok(EXIT_YES)
                }
                None => {
                    writeln!(out, "NO")?;
                    Ok(EXIT_NO)
                }
            }
        }
        Command::Compute {
            graph,
            order_out,
            json,
        } => {
            let g = load(&graph)?;
            let start = Instant::now();
            let result = compute(&g);
            let time_ms = start.elapsed().as_secs_f64() * 1000.0;
            if json {
                let record = serde_json::json!({
                    "n": g.n(),
                    "m": g.m(),
                    "adm2": result.value,
                    "probes": result.probes,
                    "time_ms": time_ms,
                });
                writeln!(out, "{record}")?;
            } else {
                writeln!(out, "adm2 {}", result.value)?;
                writeln!(out, "probes {}", result.probes)?;
                writeln!(out, "time_ms {time_ms:.3}")?;
            }
            if let Some(path) = order_out {
                write_ordering(
                    &g,
                    &result.witness,
                    result.value,
                    result.value,
                    create(&path)?,
                )?;
            }
            Ok(EXIT_YES)
        }
        Command::Verify { graph, order } => {
            let g = load(&graph)?;
            let ordering = read_ordering(&g, File::open(&order)?)?;
            writeln!(out, "{}", verify_ordering(&g, &ordering)?)?;
            Ok(EXIT_YES)
        }
        Command::Stats { graph, json } => {
            let s = stats(&load(&graph)?);
            if json {
                writeln!(out, "{}", serde_json::to_string(&s).expect("plain struct"))?;
            } else {
                writeln!(out, "n {}", s.n)?;
                writeln!(out, "m {}", s.m)?;
                writeln!(out, "avg_degree {:.4}", s.avg_degree)?;
                writeln!(out, "max_degree {}", s.max_degree)?;
                writeln!(out, "degeneracy {}", s.degeneracy)?;
                writeln!(
                    out,
                    "clustering_coefficient {:.6}",
                    s.clustering_coefficient
                )?;
            }
            Ok(EXIT_YES)
        }
        Command::Gen {
            family,
            params,
            seed,
            out: path,
        } => {
            let g = generate(family, &params, seed)?;
            match path {
                Some(path) => write_edge_list(&g, create(&path)?)?,
                None => write_edge_list(&g, &mut out)?,
            }
            Ok(EXIT_YES)
        }
        Command::Batch {
            dir,
            out: csv_path,
            timeout,
            threads,
            seed,
            deterministic,
            track_memory,
        } => {
            let timeout = match timeout {
                Some(s) if s.is_finite() && s >= 0.0 => Some(Duration::from_secs_f64(s)),
                Some(s) => return Err(Error::InvalidParams(format!("timeout {s} is not valid"))),
                None => None,
            };
            if threads == 0 {
                return Err(Error::InvalidParams("threads must be at least 1".into()));
            }
            let config = RunConfig {
                timeout,
                threads,
                seed,
                deterministic,
                track_memory,
            };
            if track_memory && threads > 1 {
                eprintln!("note: memory tracking runs a single worker");
            }
            if !track_memory || !memtrack::is_installed() {
                eprintln!("note: memory tracking disabled, memory columns report 0");
            }
            let rows = run_batch(&dir, &csv_path, &config)?;
            writeln!(
                out,
                "{} networks written to {}",
                rows.len(),
                csv_path.display()
            )?;
            Ok(EXIT_YES)
        }
    }
}

fn load(path: &Path) -> Result<Graph> {
    let loaded = load_edge_list_file(path).map_err(|e| match e {
        Error::Io(io) => Error::Io(io::Error::new(
            io.kind(),
            format!("{}: {io}", path.display()),
        )),
        other => other,
    })?;
    let dropped = loaded.dropped;
    if dropped.self_loops + dropped.duplicates > 0 {
        eprintln!(
            "note: dropped {} self-loops and {} duplicate edges",
            dropped.self_loops, dropped.duplicates
        );
    }
    Ok(loaded.graph)
}

fn create(path: &Path) -> Result<BufWriter<File>> {
    Ok(BufWriter::new(File::create(path)?))
}

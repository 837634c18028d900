//! Corpus runs: one CSV row of measurements per edge-list file.

use std::collections::BTreeMap;
use std::fs::{self, File};
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicUsize, Ordering as AtomicOrdering};
use std::sync::mpsc;
use std::thread;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::memtrack::MemoryProbe;
use crate::engine::compute_until;
use crate::error::{Error, Result};
use crate::graph::{load_edge_list_file, stats};

pub const CSV_HEADER: [&str; 10] = [
    "name",
    "n",
    "m",
    "avg_degree",
    "max_degree",
    "degeneracy",
    "adm2",
    "time_ms",
    "peak_mem_kb",
    "graph_mem_kb",
];

#[derive(Debug, Clone)]
pub struct RunConfig {
    /// Per-network limit on the 2-admissibility computation.
    pub timeout: Option<Duration>,
    pub threads: usize,
    /// Shuffles the work order when `deterministic` is off.
    pub seed: u64,
    /// Process and write rows in file-name order.
    pub deterministic: bool,
    /// Record peak heap usage per network; forces a single worker.
    pub track_memory: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            timeout: None,
            threads: 1,
            seed: 0,
            deterministic: true,
            track_memory: false,
        }
    }
}

impl RunConfig {
    pub fn effective_threads(&self) -> usize {
        if self.track_memory {
            1
        } else {
            self.threads.max(1)
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Outcome {
    Value(usize),
    Timeout,
    Failed(String),
}

#[derive(Debug, Clone, PartialEq)]
pub struct StatsRow {
    pub name: String,
    pub n: usize,
    pub m: usize,
    pub avg_degree: f64,
    pub max_degree: usize,
    pub degeneracy: usize,
    pub adm2: Outcome,
    pub time_ms: f64,
    pub peak_mem_kb: f64,
    pub graph_mem_kb: f64,
}

impl StatsRow {
    fn failed(name: String, message: String) -> StatsRow {
        StatsRow {
            name,
            n: 0,
            m: 0,
            avg_degree: 0.0,
            max_degree: 0,
            degeneracy: 0,
            adm2: Outcome::Failed(message),
            time_ms: 0.0,
            peak_mem_kb: 0.0,
            graph_mem_kb: 0.0,
        }
    }

    /// CSV fields in [`CSV_HEADER`] order. Failed rows leave the numeric
    /// columns empty and put `error` in the adm2 column.
    pub fn record(&self) -> Vec<String> {
        if let Outcome::Failed(_) = self.adm2 {
            let mut fields = vec![String::new(); CSV_HEADER.len()];
            fields[0] = self.name.clone();
            fields[6] = "error".into();
            return fields;
        }
        let adm2 = match &self.adm2 {
            Outcome::Value(v) => v.to_string(),
            _ => "timeout".into(),
        };
        vec![
            self.name.clone(),
            self.n.to_string(),
            self.m.to_string(),
            format!("{:.4}", self.avg_degree),
            self.max_degree.to_string(),
            self.degeneracy.to_string(),
            adm2,
            format!("{:.3}", self.time_ms),
            format!("{:.2}", self.peak_mem_kb),
            format!("{:.2}", self.graph_mem_kb),
        ]
    }
}

/// Loads one network and measures it.
pub fn measure_file(path: &Path, config: &RunConfig) -> StatsRow {
    let name = path
        .file_name()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    let probe = MemoryProbe::start(config.track_memory);
    let graph = match load_edge_list_file(path) {
        Ok(loaded) => loaded.graph,
        Err(e) => return StatsRow::failed(name, e.to_string()),
    };
    let graph_mem_kb = probe.peak_kb();
    let summary = stats(&graph);

    let start = Instant::now();
    let deadline = config.timeout.map(|t| start + t);
    let adm2 = match compute_until(&graph, deadline) {
        Ok(result) => Outcome::Value(result.value),
        Err(Error::TimedOut) => Outcome::Timeout,
        Err(e) => Outcome::Failed(e.to_string()),
    };
    let time_ms = start.elapsed().as_secs_f64() * 1000.0;
    StatsRow {
        name,
        n: summary.n,
        m: summary.m,
        avg_degree: summary.avg_degree,
        max_degree: summary.max_degree,
        degeneracy: summary.degeneracy,
        adm2,
        time_ms,
        peak_mem_kb: probe.peak_kb(),
        graph_mem_kb,
    }
}

/// Regular, non-hidden files directly inside `dir`, sorted by name.
pub fn corpus_files(dir: &Path) -> Result<Vec<PathBuf>> {
    let mut files = Vec::new();
    for entry in fs::read_dir(dir)? {
        let entry = entry?;
        let hidden = entry.file_name().to_string_lossy().starts_with('.');
        if !hidden && entry.file_type()?.is_file() {
            files.push(entry.path());
        }
    }
    files.sort();
    Ok(files)
}

/// Measures every file in `dir` and writes one row per file to `out_csv`,
/// flushing after each row. Per-file failures become rows; only I/O errors
/// on the directory or the output abort the run.
pub fn run_batch(dir: &Path, out_csv: &Path, config: &RunConfig) -> Result<Vec<StatsRow>> {
    let mut files = corpus_files(dir)?;
    if !config.deterministic {
        files.shuffle(&mut ChaCha8Rng::seed_from_u64(config.seed));
    }
    let mut writer = csv::Writer::from_writer(File::create(out_csv)?);
    writer.write_record(CSV_HEADER)?;
    writer.flush()?;

    let threads = config.effective_threads().min(files.len().max(1));
    let next = AtomicUsize::new(0);
    let (tx, rx) = mpsc::channel::<(usize, StatsRow)>();
    let mut rows: Vec<Option<StatsRow>> = vec![None; files.len()];

    thread::scope(|scope| -> Result<()> {
        for _ in 0..threads {
            let tx = tx.clone();
            let files = &files;
            let next = &next;
            scope.spawn(move || loop {
                let i = next.fetch_add(1, AtomicOrdering::Relaxed);
                let Some(path) = files.get(i) else { break };
                let row = measure_file(path, config);
                if tx.send((i, row)).is_err() {
                    break;
                }
            });
        }
        drop(tx);

        // in deterministic mode rows are held back until all earlier files
        // are written
        let mut pending: BTreeMap<usize, StatsRow> = BTreeMap::new();
        let mut next_to_write = 0;
        for (i, row) in rx {
            if let Outcome::Failed(message) = &row.adm2 {
                eprintln!("{}: {message}", row.name);
            }
            if config.deterministic {
                pending.insert(i, row);
                while let Some(row) = pending.remove(&next_to_write) {
                    write_row(&mut writer, &row)?;
                    rows[next_to_write] = Some(row);
                    next_to_write += 1;
                }
            } else {
                write_row(&mut writer, &row)?;
                rows[i] = Some(row);
            }
        }
        Ok(())
    })?;

    Ok(rows.into_iter().flatten().collect())
}

fn write_row<W: Write>(writer: &mut csv::Writer<W>, row: &StatsRow) -> Result<()> {
    writer.write_record(row.record())?;
    writer.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, write_edge_list, Family};

    fn fixture_dir() -> tempfile::TempDir {
        let dir = tempfile::tempdir().unwrap();
        for (name, family, params) in [
            ("a_k5.txt", Family::Clique, vec![5]),
            ("b_c6.txt", Family::Cycle, vec![6]),
            ("c_p10.txt", Family::Path, vec![10]),
        ] {
            let g = generate(family, &params, 0).unwrap();
            write_edge_list(&g, File::create(dir.path().join(name)).unwrap()).unwrap();
        }
        fs::write(dir.path().join("d_bad.txt"), "1 2 3\n").unwrap();
        dir
    }

    #[test]
    fn rows_in_name_order_with_failures_recorded() {
        let dir = fixture_dir();
        let out = dir.path().join("..").join(format!(
            "{}.csv",
            dir.path().file_name().unwrap().to_string_lossy()
        ));
        let config = RunConfig {
            threads: 3,
            ..RunConfig::default()
        };
        let rows = run_batch(dir.path(), &out, &config).unwrap();
        let names: Vec<_> = rows.iter().map(|r| r.name.as_str()).collect();
        assert_eq!(names, ["a_k5.txt", "b_c6.txt", "c_p10.txt", "d_bad.txt"]);
        assert_eq!(rows[0].adm2, Outcome::Value(4));
        assert_eq!(rows[1].adm2, Outcome::Value(2));
        assert_eq!(rows[2].adm2, Outcome::Value(1));
        assert!(matches!(rows[3].adm2, Outcome::Failed(_)));

        let text = fs::read_to_string(&out).unwrap();
        let lines: Vec<_> = text.lines().collect();
        assert_eq!(lines[0], CSV_HEADER.join(","));
        assert_eq!(lines.len(), 5);
        assert!(lines[4].starts_with("d_bad.txt,,,,,,error"));
        fs::remove_file(out).unwrap();
    }

    #[test]
    fn zero_timeout_marks_rows() {
        let dir = tempfile::tempdir().unwrap();
        let g = generate(Family::Grid, &[40], 0).unwrap();
        write_edge_list(&g, File::create(dir.path().join("grid.txt")).unwrap()).unwrap();
        let config = RunConfig {
            timeout: Some(Duration::ZERO),
            ..RunConfig::default()
        };
        let row = measure_file(&dir.path().join("grid.txt"), &config);
        assert_eq!(row.adm2, Outcome::Timeout);
        assert_eq!(row.n, 1600);
        assert_eq!(row.record()[6], "timeout");
    }

    #[test]
    fn memory_tracking_forces_one_worker() {
        let config = RunConfig {
            threads: 8,
            track_memory: true,
            ..RunConfig::default()
        };
        assert_eq!(config.effective_threads(), 1);
    }
}

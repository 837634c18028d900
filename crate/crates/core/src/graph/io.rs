//! Whitespace-separated edge-list text format.
//!
//! Each data line holds two vertex labels. Lines starting with `#` or `%` are
//! comments. Labels are opaque tokens and are remapped to dense ids in order
//! of first appearance.
//!
//! Files produced by [`write_edge_list`] start with a header comment
//! `# adm2-edge-list n=<n> m=<m>`. When the loader sees that header it reads
//! the data tokens as dense ids instead of remapping them, and restores labels
//! from `# label <id> <text>` comment lines. That keeps isolated vertices and
//! the id assignment intact across a write/load round trip.

use std::collections::HashMap;
use std::fs::File;
use std::io::{BufRead, BufReader, Read, Write};
use std::path::Path;

use super::{Dropped, Graph, Vertex};
use crate::error::{Error, Result};

const DENSE_HEADER: &str = "adm2-edge-list";

#[derive(Debug, Clone)]
pub struct Loaded {
    pub graph: Graph,
    pub dropped: Dropped,
}

pub fn load_edge_list_file(path: impl AsRef<Path>) -> Result<Loaded> {
    load_edge_list(File::open(path)?)
}

pub fn load_edge_list<R: Read>(source: R) -> Result<Loaded> {
    let reader = BufReader::new(source);
    let mut ids: HashMap<String, Vertex> = HashMap::new();
    let mut labels: Vec<String> = Vec::new();
    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
    let mut dense: Option<usize> = None;
    let mut dense_labels: Vec<Option<String>> = Vec::new();

    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let line_no = idx + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        if let Some(comment) = trimmed.strip_prefix('#') {
            parse_header_comment(comment.trim(), line_no, &mut dense, &mut dense_labels)?;
            continue;
        }
        if trimmed.starts_with('%') {
            continue;
        }

        let mut tokens = trimmed.split_whitespace();
        let (a, b) = match (tokens.next(), tokens.next(), tokens.next()) {
            (Some(a), Some(b), None) => (a, b),
            _ => {
                return Err(Error::Parse {
                    line: line_no,
                    message: format!(
                        "expected two vertex labels, found {}",
                        trimmed.split_whitespace().count()
                    ),
                })
            }
        };
        let edge = match dense {
            Some(n) => (parse_dense(a, n, line_no)?, parse_dense(b, n, line_no)?),
            None => (
                intern(a, &mut ids, &mut labels),
                intern(b, &mut ids, &mut labels),
            ),
        };
        edges.push(edge);
    }

    let (n, labels) = match dense {
        Some(n) => {
            let labels = if dense_labels.iter().any(Option::is_some) {
                Some(
                    dense_labels
                        .into_iter()
                        .enumerate()
                        .map(|(i, l)| l.unwrap_or_else(|| i.to_string()))
                        .collect(),
                )
            } else {
                None
            };
            (n, labels)
        }
        None => (labels.len(), Some(labels)),
    };
    if n == 0 {
        return Err(Error::EmptyInput);
    }

    let (graph, dropped) = Graph::from_edges(n, edges);
    let graph = match labels {
        Some(labels) => graph.with_labels(labels)?,
        None => graph,
    };
    Ok(Loaded { graph, dropped })
}

fn parse_header_comment(
    comment: &str,
    line_no: usize,
    dense: &mut Option<usize>,
    dense_labels: &mut Vec<Option<String>>,
) -> Result<()> {
    let mut tokens = comment.split_whitespace();
    match tokens.next() {
        Some(DENSE_HEADER) if dense.is_none() => {
            let n = tokens
                .find_map(|t| t.strip_prefix("n="))
                .and_then(|t| t.parse::<usize>().ok())
                .ok_or_else(|| Error::Parse {
                    line: line_no,
                    message: "edge-list header without n=<count>".into(),
                })?;
            *dense = Some(n);
            *dense_labels = vec![None; n];
        }
        Some("label") => {
            let Some(n) = *dense else {
                return Ok(());
            };
            let id = tokens
                .next()
                .map(|t| parse_dense(t, n, line_no))
                .transpose()?;
            let text = tokens.next();
            if let (Some(id), Some(text)) = (id, text) {
                dense_labels[id] = Some(text.to_string());
            }
        }
        _ => {}
    }
    Ok(())
}

fn parse_dense(token: &str, n: usize, line_no: usize) -> Result<Vertex> {
    match token.parse::<Vertex>() {
        Ok(v) if v < n => Ok(v),
        _ => Err(Error::Parse {
            line: line_no,
            message: format!("`{token}` is not a vertex id below {n}"),
        }),
    }
}

fn intern(token: &str, ids: &mut HashMap<String, Vertex>, labels: &mut Vec<String>) -> Vertex {
    if let Some(&id) = ids.get(token) {
        return id;
    }
    let id = labels.len();
    ids.insert(token.to_string(), id);
    labels.push(token.to_string());
    id
}

/// Writes `g` as one `u v` line per edge (`u < v`, dense ids) after the
/// header and, when the graph carries labels, one `# label` line per vertex.
pub fn write_edge_list<W: Write>(g: &Graph, mut out: W) -> Result<()> {
    writeln!(out, "# {DENSE_HEADER} n={} m={}", g.n(), g.m())?;
    if let Some(labels) = g.labels() {
        for (id, label) in labels.iter().enumerate() {
            writeln!(out, "# label {id} {label}")?;
        }
    }
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}")?;
    }
    out.flush()?;
    Ok(())
}

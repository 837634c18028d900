//! Ordering files: a `# adm2=<value> p=<p>` header, then one vertex label per
//! line from left to right.

use std::collections::HashMap;
use std::io::{BufRead, BufReader, Read, Write};

use crate::error::{Error, Result};
use crate::graph::{Graph, Ordering, Vertex};

pub fn write_ordering<W: Write>(
    g: &Graph,
    order: &Ordering,
    value: usize,
    p: usize,
    mut out: W,
) -> Result<()> {
    writeln!(out, "# adm2={value} p={p}")?;
    for &v in order.sequence() {
        writeln!(out, "{}", g.label(v))?;
    }
    out.flush()?;
    Ok(())
}

/// Reads an ordering of `g`'s vertices. Blank lines and lines starting with
/// `#` or `%` are skipped; every vertex must appear exactly once.
pub fn read_ordering<R: Read>(g: &Graph, source: R) -> Result<Ordering> {
    let ids: HashMap<String, Vertex> = g.vertices().map(|v| (g.label(v).into_owned(), v)).collect();
    let mut sequence = Vec::with_capacity(g.n());
    let mut seen = vec![false; g.n()];
    for (idx, line) in BufReader::new(source).lines().enumerate() {
        let line = line?;
        let label = line.trim();
        if label.is_empty() || label.starts_with('#') || label.starts_with('%') {
            continue;
        }
        let &v = ids.get(label).ok_or_else(|| {
            Error::InvalidOrdering(format!("line {}: unknown vertex `{label}`", idx + 1))
        })?;
        if std::mem::replace(&mut seen[v], true) {
            return Err(Error::InvalidOrdering(format!(
                "line {}: vertex `{label}` listed twice",
                idx + 1
            )));
        }
        sequence.push(v);
    }
    if sequence.len() != g.n() {
        return Err(Error::InvalidOrdering(format!(
            "{} of {} vertices listed",
            sequence.len(),
            g.n()
        )));
    }
    Ordering::new(sequence)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::load_edge_list;

    #[test]
    fn labels_round_trip() {
        let g = load_edge_list("a b\nb c\nc d\n".as_bytes()).unwrap().graph;
        let order = Ordering::new(vec![3, 1, 0, 2]).unwrap();
        let mut buf = Vec::new();
        write_ordering(&g, &order, 1, 1, &mut buf).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        assert_eq!(text, "# adm2=1 p=1\nd\nb\na\nc\n");
        assert_eq!(read_ordering(&g, buf.as_slice()).unwrap(), order);
    }

    #[test]
    fn rejects_bad_coverage() {
        let g = load_edge_list("a b\nb c\n".as_bytes()).unwrap().graph;
        assert!(read_ordering(&g, "a\nb\n".as_bytes()).is_err());
        assert!(read_ordering(&g, "a\nb\nb\n".as_bytes()).is_err());
        assert!(read_ordering(&g, "a\nb\nz\n".as_bytes()).is_err());
        assert!(read_ordering(&g, "# header\nc\n\na\nb\n".as_bytes()).is_ok());
    }
}

//! Simple undirected graphs with dense vertex ids, plus vertex orderings.

mod generate;
mod io;
mod measures;

use std::borrow::Cow;

use crate::error::{Error, Result};

pub use generate::{generate, Family};
pub use io::{load_edge_list, load_edge_list_file, write_edge_list, Loaded};
pub use measures::{degeneracy, stats, subdivide_once, GraphStats};

pub type Vertex = usize;

/// Counts of input edges discarded while normalising to a simple graph.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Dropped {
    pub self_loops: usize,
    pub duplicates: usize,
}

/// An immutable simple undirected graph.
///
/// Adjacency lists are sorted by id, contain no self-loops and no repeated
/// entries, and are symmetric.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<Vertex>>,
    m: usize,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Builds a graph on `n` vertices, dropping loops and repeated edges.
    ///
    /// Panics if an endpoint is `>= n`.
    pub fn from_edges<I>(n: usize, edges: I) -> (Graph, Dropped)
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut adjacency: Vec<Vec<Vertex>> = vec![Vec::new(); n];
        let mut dropped = Dropped::default();
        for (u, v) in edges {
            assert!(u < n && v < n, "edge ({u}, {v}) out of range for n = {n}");
            if u == v {
                dropped.self_loops += 1;
                continue;
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        let mut twice_m = 0;
        for list in &mut adjacency {
            let before = list.len();
            list.sort_unstable();
            list.dedup();
            list.shrink_to_fit();
            // each duplicate shows up once in each endpoint's list
            dropped.duplicates += before - list.len();
            twice_m += list.len();
        }
        dropped.duplicates /= 2;
        let graph = Graph {
            adjacency,
            m: twice_m / 2,
            labels: None,
        };
        (graph, dropped)
    }

    /// Like [`Graph::from_edges`] but discards the normalisation report.
    pub fn from_edge_list<I>(n: usize, edges: I) -> Graph
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        Self::from_edges(n, edges).0
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Graph> {
        if labels.len() != self.n() {
            return Err(Error::InvalidGraph(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.n()
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n()
    }

    pub fn neighbours(&self, v: Vertex) -> &[Vertex] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adjacency[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        let (a, b) = if self.degree(u) <= self.degree(v) {
            (u, v)
        } else {
            (v, u)
        };
        self.adjacency[a].binary_search(&b).is_ok()
    }

    /// Every edge once, as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adjacency.iter().enumerate().flat_map(|(u, list)| {
            list.iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// The original label of `v`, or its id when the graph is unlabelled.
    pub fn label(&self, v: Vertex) -> Cow<'_, str> {
        match &self.labels {
            Some(labels) => Cow::Borrowed(labels[v].as_str()),
            None => Cow::Owned(v.to_string()),
        }
    }

    /// Re-checks the structural invariants from scratch.
    pub fn validate(&self) -> Result<()> {
        let mut twice_m = 0;
        for (v, list) in self.adjacency.iter().enumerate() {
            twice_m += list.len();
            for pair in list.windows(2) {
                if pair[0] >= pair[1] {
                    return Err(Error::InvalidGraph(format!(
                        "adjacency of {v} is not strictly increasing"
                    )));
                }
            }
            for &u in list {
                if u >= self.n() {
                    return Err(Error::InvalidGraph(format!("{v} lists unknown vertex {u}")));
                }
                if u == v {
                    return Err(Error::InvalidGraph(format!("self-loop at {v}")));
                }
                if self.adjacency[u].binary_search(&v).is_err() {
                    return Err(Error::InvalidGraph(format!(
                        "edge {v}-{u} is not symmetric"
                    )));
                }
            }
        }
        if twice_m != 2 * self.m {
            return Err(Error::InvalidGraph(format!(
                "m = {} but adjacency lists hold {} entries",
                self.m, twice_m
            )));
        }
        if let Some(labels) = &self.labels {
            if labels.len() != self.n() {
                return Err(Error::InvalidGraph("label count differs from n".into()));
            }
        }
        Ok(())
    }

    /// Approximate heap footprint of the adjacency structure in bytes.
    pub fn heap_bytes(&self) -> usize {
        let lists: usize = self
            .adjacency
            .iter()
            .map(|l| l.capacity() * std::mem::size_of::<Vertex>())
            .sum();
        let labels: usize = self
            .labels
            .as_ref()
            .map(|ls| {
                ls.iter()
                    .map(|s| s.capacity() + std::mem::size_of::<String>())
                    .sum()
            })
            .unwrap_or(0);
        lists + self.adjacency.capacity() * std::mem::size_of::<Vec<Vertex>>() + labels
    }
}

/// A permutation of the vertices, read left to right.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ordering {
    sequence: Vec<Vertex>,
    position: Vec<usize>,
}

impl Ordering {
    pub fn new(sequence: Vec<Vertex>) -> Result<Ordering> {
        let n = sequence.len();
        let mut position = vec![usize::MAX; n];
        for (i, &v) in sequence.iter().enumerate() {
            if v >= n {
                return Err(Error::InvalidOrdering(format!(
                    "vertex {v} out of range for {n} vertices"
                )));
            }
            if position[v] != usize::MAX {
                return Err(Error::InvalidOrdering(format!("vertex {v} appears twice")));
            }
            position[v] = i;
        }
        Ok(Ordering { sequence, position })
    }

    pub fn identity(n: usize) -> Ordering {
        Ordering {
            sequence: (0..n).collect(),
            position: (0..n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.sequence.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sequence.is_empty()
    }

    pub fn sequence(&self) -> &[Vertex] {
        &self.sequence
    }

    pub fn position(&self, v: Vertex) -> usize {
        self.position[v]
    }

    pub fn reversed(&self) -> Ordering {
        let mut sequence = self.sequence.clone();
        sequence.reverse();
        Ordering::new(sequence).expect("reversal of a permutation is a permutation")
    }

    /// Neighbours of `v` that come before it.
    pub fn left_neighbours<'g>(
        &'g self,
        g: &'g Graph,
        v: Vertex,
    ) -> impl Iterator<Item = Vertex> + 'g {
        let pos = self.position[v];
        g.neighbours(v)
            .iter()
            .copied()
            .filter(move |&u| self.position[u] < pos)
    }

    /// `max_v |N⁻(v)|`, the left-degree of the ordering.
    pub fn max_left_degree(&self, g: &Graph) -> usize {
        g.vertices()
            .map(|v| self.left_neighbours(g, v).count())
            .max()
            .unwrap_or(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_edges_normalises() {
        let (g, dropped) = Graph::from_edges(3, [(0, 1), (1, 0), (2, 2), (1, 2), (1, 2)]);
        assert_eq!(g.m(), 2);
        assert_eq!(
            dropped,
            Dropped {
                self_loops: 1,
                duplicates: 2
            }
        );
        assert_eq!(g.neighbours(1), &[0, 2]);
        g.validate().unwrap();
    }

    #[test]
    fn edges_are_listed_once() {
        let g = Graph::from_edge_list(4, [(3, 0), (0, 1), (2, 1)]);
        let edges: Vec<_> = g.edges().collect();
        assert_eq!(edges, vec![(0, 1), (0, 3), (1, 2)]);
        assert!(g.has_edge(3, 0));
        assert!(!g.has_edge(3, 2));
    }

    #[test]
    fn ordering_rejects_non_permutations() {
        assert!(Ordering::new(vec![0, 0, 1]).is_err());
        assert!(Ordering::new(vec![0, 3, 1]).is_err());
        let o = Ordering::new(vec![2, 0, 1]).unwrap();
        assert_eq!(o.position(2), 0);
        assert_eq!(o.position(1), 2);
        assert_eq!(o.reversed().sequence(), &[1, 0, 2]);
    }

    #[test]
    fn labels_must_cover_every_vertex() {
        let g = Graph::from_edge_list(2, [(0, 1)]);
        assert!(g.clone().with_labels(vec!["a".into()]).is_err());
        let g = g.with_labels(vec!["a".into(), "b".into()]).unwrap();
        assert_eq!(g.label(1), "b");
    }
}

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rustc_hash::FxHashSet;

use super::{Graph, Vertex};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// `clique n`
    Clique,
    /// `cycle n`, n >= 3
    Cycle,
    /// `path n`
    Path,
    /// `star k`: one centre (vertex 0) joined to k leaves
    Star,
    /// `grid k` or `grid rows cols`
    Grid,
    /// `gnm n m`: uniform random graph with exactly m edges
    Gnm,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::Clique,
        Family::Cycle,
        Family::Path,
        Family::Star,
        Family::Grid,
        Family::Gnm,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Clique => "clique",
            Family::Cycle => "cycle",
            Family::Path => "path",
            Family::Star => "star",
            Family::Grid => "grid",
            Family::Gnm => "gnm",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Family> {
        Family::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidParams(format!("unknown graph family `{s}`")))
    }
}

/// Builds a member of `family`. Only `gnm` uses `seed`; the output is a pure
/// function of the arguments.
pub fn generate(family: Family, params: &[usize], seed: u64) -> Result<Graph> {
    let arity = |expected: &[usize]| -> Result<()> {
        if expected.contains(&params.len()) {
            Ok(())
        } else {
            Err(Error::InvalidParams(format!(
                "{family} takes {expected:?} parameters, got {}",
                params.len()
            )))
        }
    };
    match family {
        Family::Clique => {
            arity(&[1])?;
            let n = at_least(params[0], 1, "clique size")?;
            Ok(clique(n))
        }
        Family::Cycle => {
            arity(&[1])?;
            let n = at_least(params[0], 3, "cycle length")?;
            Ok(Graph::from_edge_list(n, (0..n).map(|i| (i, (i + 1) % n))))
        }
        Family::Path => {
            arity(&[1])?;
            let n = at_least(params[0], 1, "path length")?;
            Ok(Graph::from_edge_list(n, (1..n).map(|i| (i - 1, i))))
        }
        Family::Star => {
            arity(&[1])?;
            let leaves = at_least(params[0], 1, "leaf count")?;
            Ok(Graph::from_edge_list(
                leaves + 1,
                (1..=leaves).map(|i| (0, i)),
            ))
        }
        Family::Grid => {
            arity(&[1, 2])?;
            let rows = at_least(params[0], 1, "grid rows")?;
            let cols = at_least(*params.get(1).unwrap_or(&rows), 1, "grid columns")?;
            Ok(grid(rows, cols))
        }
        Family::Gnm => {
            arity(&[2])?;
            gnm(params[0], params[1], seed)
        }
    }
}

fn at_least(value: usize, min: usize, what: &str) -> Result<usize> {
    if value < min {
        Err(Error::InvalidParams(format!(
            "{what} must be at least {min}, got {value}"
        )))
    } else {
        Ok(value)
    }
}

fn clique(n: usize) -> Graph {
    Graph::from_edge_list(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

fn grid(rows: usize, cols: usize) -> Graph {
    let id = |r: usize, c: usize| r * cols + c;
    let mut edges = Vec::with_capacity(2 * rows * cols);
    for r in 0..rows {
        for c in 0..cols {
            if c + 1 < cols {
                edges.push((id(r, c), id(r, c + 1)));
            }
            if r + 1 < rows {
                edges.push((id(r, c), id(r + 1, c)));
            }
        }
    }
    Graph::from_edge_list(rows * cols, edges)
}

fn gnm(n: usize, m: usize, seed: u64) -> Result<Graph> {
    let max_edges = n.saturating_mul(n.saturating_sub(1)) / 2;
    if m > max_edges {
        return Err(Error::InvalidParams(format!(
            "gnm: {m} edges exceed the {max_edges} possible on {n} vertices"
        )));
    }
    if n == 0 {
        return Err(Error::InvalidParams("gnm needs at least one vertex".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    // sample the smaller of the edge set and its complement
    let complement = m > max_edges / 2;
    let target = if complement { max_edges - m } else { m };
    let mut chosen: FxHashSet<(Vertex, Vertex)> = FxHashSet::default();
    let mut picked = Vec::with_capacity(target);
    while picked.len() < target {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u == v {
            continue;
        }
        let e = (u.min(v), u.max(v));
        if chosen.insert(e) {
            picked.push(e);
        }
    }
    let edges: Vec<(Vertex, Vertex)> = if complement {
        (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|e| !chosen.contains(e))
            .collect()
    } else {
        picked
    };
    Ok(Graph::from_edge_list(n, edges))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_counts() {
        let g = generate(Family::Grid, &[3, 3], 0).unwrap();
        assert_eq!((g.n(), g.m()), (9, 12));
        let g = generate(Family::Grid, &[2, 5], 0).unwrap();
        assert_eq!((g.n(), g.m()), (10, 13));
    }

    #[test]
    fn cycle_is_two_regular() {
        let g = generate(Family::Cycle, &[5], 0).unwrap();
        assert!(g.vertices().all(|v| g.degree(v) == 2));
        assert_eq!(g.m(), 5);
    }

    #[test]
    fn gnm_is_deterministic_per_seed() {
        let a = generate(Family::Gnm, &[100, 300], 7).unwrap();
        let b = generate(Family::Gnm, &[100, 300], 7).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.m(), 300);
        let c = generate(Family::Gnm, &[100, 300], 8).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn dense_gnm_uses_complement() {
        let g = generate(Family::Gnm, &[10, 44], 1).unwrap();
        assert_eq!(g.m(), 44);
        let full = generate(Family::Gnm, &[10, 45], 1).unwrap();
        assert_eq!(full, generate(Family::Clique, &[10], 0).unwrap());
    }

    #[test]
    fn invalid_params_rejected() {
        assert!(generate(Family::Gnm, &[4, 7], 0).is_err());
        assert!(generate(Family::Cycle, &[2], 0).is_err());
        assert!(generate(Family::Clique, &[3, 3], 0).is_err());
        assert!(generate(Family::Grid, &[], 0).is_err());
        assert!("lattice".parse::<Family>().is_err());
        assert_eq!("Star".parse::<Family>().unwrap(), Family::Star);
    }

    #[test]
    fn star_and_path_shapes() {
        let star = generate(Family::Star, &[9], 0).unwrap();
        assert_eq!(star.degree(0), 9);
        assert_eq!(star.n(), 10);
        let path = generate(Family::Path, &[1], 0).unwrap();
        assert_eq!((path.n(), path.m()), (1, 0));
    }
}

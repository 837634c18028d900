//! 2-path packing numbers computed from scratch.
//!
//! `in_left` marks the set `L`; every other vertex is in `R`. A (2,L)-path
//! packing rooted at `v` is a family of paths of length at most two from `v`
//! to vertices of `L`, with no interior vertex in `L`, pairwise disjoint
//! except at `v`.

use rustc_hash::FxHashMap;

use super::bipartite::maximum_matching_size;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// Largest degree [`brute_force_pp2`] accepts.
pub const BRUTE_FORCE_DEGREE_CAP: usize = 12;

/// `T²_L(v)`: vertices of `L` other than `v`, not adjacent to `v`, reachable
/// from `v` through a neighbour in `R`. Sorted.
pub fn two_hop_left(g: &Graph, in_left: &[bool], v: Vertex) -> Vec<Vertex> {
    let nbrs = g.neighbours(v);
    let mut out: Vec<Vertex> = nbrs
        .iter()
        .filter(|&&r| !in_left[r])
        .flat_map(|&r| g.neighbours(r).iter().copied())
        .filter(|&x| in_left[x] && x != v && nbrs.binary_search(&x).is_err())
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// `pp²_L(v)` as `|N_L(v)|` plus a maximum matching between `N_R(v)` and
/// `T²_L(v)`.
pub fn exact_pp2(g: &Graph, in_left: &[bool], v: Vertex) -> Result<usize> {
    if !in_left[v] {
        return Err(Error::NotInLeftSet(v));
    }
    let nbrs = g.neighbours(v);
    let left_count = nbrs.iter().filter(|&&u| in_left[u]).count();
    let targets = two_hop_left(g, in_left, v);
    if targets.is_empty() {
        return Ok(left_count);
    }
    let index: FxHashMap<Vertex, usize> =
        targets.iter().enumerate().map(|(i, &x)| (x, i)).collect();
    let adjacency: Vec<Vec<usize>> = nbrs
        .iter()
        .filter(|&&r| !in_left[r])
        .map(|&r| {
            g.neighbours(r)
                .iter()
                .filter_map(|x| index.get(x).copied())
                .collect()
        })
        .collect();
    Ok(left_count + maximum_matching_size(&adjacency, targets.len()))
}

/// `pp²_L(v)` by exhaustive search over path families, straight from the
/// definition. Exponential; refuses vertices of degree above
/// [`BRUTE_FORCE_DEGREE_CAP`].
pub fn brute_force_pp2(g: &Graph, in_left: &[bool], v: Vertex) -> Result<usize> {
    if !in_left[v] {
        return Err(Error::NotInLeftSet(v));
    }
    let degree = g.degree(v);
    if degree > BRUTE_FORCE_DEGREE_CAP {
        return Err(Error::DegreeTooLarge {
            vertex: v,
            degree,
            cap: BRUTE_FORCE_DEGREE_CAP,
        });
    }
    let mut used = vec![false; g.n()];
    used[v] = true;
    Ok(pack_from(g, in_left, g.neighbours(v), &mut used))
}

// Each neighbour x of the root starts at most one path: either the edge to x
// (x in L) or x followed by some unused y in L (x in R).
fn pack_from(g: &Graph, in_left: &[bool], rest: &[Vertex], used: &mut [bool]) -> usize {
    let Some((&x, tail)) = rest.split_first() else {
        return 0;
    };
    let mut best = pack_from(g, in_left, tail, used);
    if in_left[x] {
        if !used[x] {
            used[x] = true;
            best = best.max(1 + pack_from(g, in_left, tail, used));
            used[x] = false;
        }
    } else {
        for &y in g.neighbours(x) {
            if in_left[y] && !used[y] {
                used[y] = true;
                best = best.max(1 + pack_from(g, in_left, tail, used));
                used[y] = false;
            }
        }
    }
    best
}

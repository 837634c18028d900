use serde::Serialize;

use super::{Graph, Ordering, Vertex};

/// Degeneracy by bucket-queue peeling, with an ordering in which every vertex
/// has at most that many earlier neighbours.
///
/// Vertices are peeled in order of (current) minimum degree; each peeled
/// vertex is placed at the rightmost free position, so its remaining
/// neighbours end up to its left.
pub fn degeneracy(g: &Graph) -> (usize, Ordering) {
    let n = g.n();
    let mut deg: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let max_deg = g.max_degree();

    // bin[d] = start of the block of vertices with current degree d in `vert`
    let mut bin = vec![0usize; max_deg + 2];
    for &d in &deg {
        bin[d] += 1;
    }
    let mut start = 0;
    for slot in bin.iter_mut() {
        let count = *slot;
        *slot = start;
        start += count;
    }
    let mut pos = vec![0usize; n];
    let mut vert = vec![0usize; n];
    for v in 0..n {
        pos[v] = bin[deg[v]];
        vert[pos[v]] = v;
        bin[deg[v]] += 1;
    }
    for d in (1..bin.len()).rev() {
        bin[d] = bin[d - 1];
    }
    bin[0] = 0;

    for i in 0..n {
        let v = vert[i];
        for &u in g.neighbours(v) {
            if deg[u] > deg[v] {
                let du = deg[u];
                let pu = pos[u];
                let pw = bin[du];
                let w = vert[pw];
                if u != w {
                    pos[u] = pw;
                    vert[pu] = w;
                    pos[w] = pu;
                    vert[pw] = u;
                }
                bin[du] += 1;
                deg[u] -= 1;
            }
        }
    }

    let value = deg.iter().copied().max().unwrap_or(0);
    vert.reverse();
    let order = Ordering::new(vert).expect("peeling visits every vertex once");
    (value, order)
}

/// Replaces every edge `uv` by a path `u x v` through a fresh vertex `x`.
///
/// The i-th edge of [`Graph::edges`] gets the new vertex `n + i`.
pub fn subdivide_once(g: &Graph) -> Graph {
    let n = g.n();
    let mut edges = Vec::with_capacity(2 * g.m());
    for (i, (u, v)) in g.edges().enumerate() {
        edges.push((u, n + i));
        edges.push((n + i, v));
    }
    Graph::from_edge_list(n + g.m(), edges)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GraphStats {
    pub n: usize,
    pub m: usize,
    pub avg_degree: f64,
    pub max_degree: usize,
    pub degeneracy: usize,
    pub clustering_coefficient: f64,
}

pub fn stats(g: &Graph) -> GraphStats {
    let n = g.n();
    let avg_degree = if n == 0 {
        0.0
    } else {
        2.0 * g.m() as f64 / n as f64
    };
    GraphStats {
        n,
        m: g.m(),
        avg_degree,
        max_degree: g.max_degree(),
        degeneracy: degeneracy(g).0,
        clustering_coefficient: clustering_coefficient(g),
    }
}

/// Mean local clustering coefficient; vertices of degree < 2 count as 0.
fn clustering_coefficient(g: &Graph) -> f64 {
    let n = g.n();
    if n == 0 {
        return 0.0;
    }
    let triangles = triangles_per_vertex(g);
    let total: f64 = g
        .vertices()
        .map(|v| {
            let d = g.degree(v);
            if d < 2 {
                0.0
            } else {
                let pairs = (d * (d - 1) / 2) as f64;
                triangles[v] as f64 / pairs
            }
        })
        .sum();
    total / n as f64
}

/// Triangle count at every vertex. Edges are oriented from lower to higher
/// (degree, id) rank so each triangle is found exactly once.
fn triangles_per_vertex(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let rank_key = |v: Vertex| (g.degree(v), v);
    let forward: Vec<Vec<Vertex>> = g
        .vertices()
        .map(|v| {
            g.neighbours(v)
                .iter()
                .copied()
                .filter(|&u| rank_key(u) > rank_key(v))
                .collect()
        })
        .collect();
    let mut count = vec![0usize; n];
    let mut mark = vec![usize::MAX; n];
    for v in 0..n {
        for &u in &forward[v] {
            mark[u] = v;
        }
        for &u in &forward[v] {
            for &w in &forward[u] {
                if mark[w] == v {
                    count[v] += 1;
                    count[u] += 1;
                    count[w] += 1;
                }
            }
        }
    }
    count
}

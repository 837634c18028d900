use super::pp::exact_pp2;
use super::AdmValue;
use crate::error::{Error, Result};
use crate::graph::{Graph, Ordering, Vertex};

/// `pp²` of every vertex into its prefix under `order`, indexed by vertex.
pub fn packing_profile(g: &Graph, order: &Ordering) -> Result<Vec<usize>> {
    if order.len() != g.n() {
        return Err(Error::InvalidOrdering(format!(
            "ordering has {} vertices, graph has {}",
            order.len(),
            g.n()
        )));
    }
    // the prefix of v plus v itself; v as the root does not change pp²
    let mut in_left = vec![false; g.n()];
    let mut profile = vec![0; g.n()];
    for &v in order.sequence() {
        in_left[v] = true;
        profile[v] = exact_pp2(g, &in_left, v)?;
    }
    Ok(profile)
}

/// The 2-admissibility of the ordered graph: the largest `pp²` of a vertex
/// into the set of vertices before it. Shares nothing with the oracle.
pub fn verify_ordering(g: &Graph, order: &Ordering) -> Result<usize> {
    Ok(packing_profile(g, order)?.into_iter().max().unwrap_or(0))
}

/// Exact 2-admissibility by repeatedly placing, at the rightmost free slot,
/// the unplaced vertex with the smallest `pp²` into the unplaced set.
///
/// Quadratic in `n` with a matching per evaluation; meant for cross-checks.
pub fn greedy_exact(g: &Graph) -> AdmValue {
    let n = g.n();
    let mut in_left = vec![true; n];
    let mut sequence: Vec<Vertex> = vec![0; n];
    let mut value = 0;
    for slot in (0..n).rev() {
        let (best, pp) = g
            .vertices()
            .filter(|&v| in_left[v])
            .map(|v| (v, exact_pp2(g, &in_left, v).expect("v is in L")))
            .min_by_key(|&(v, pp)| (pp, v))
            .expect("L is non-empty");
        value = value.max(pp);
        in_left[best] = false;
        sequence[slot] = best;
    }
    AdmValue {
        value,
        witness: Ordering::new(sequence).expect("each vertex placed once"),
        probes: 0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{degeneracy, generate, Family};

    #[test]
    fn identity_on_a_path() {
        let p5 = generate(Family::Path, &[5], 0).unwrap();
        assert_eq!(verify_ordering(&p5, &Ordering::identity(5)).unwrap(), 1);
    }

    #[test]
    fn any_order_of_a_clique() {
        let k5 = generate(Family::Clique, &[5], 0).unwrap();
        let order = degeneracy(&k5).1.reversed();
        assert_eq!(verify_ordering(&k5, &order).unwrap(), 4);
    }

    #[test]
    fn path_with_bad_order() {
        // 0-1-2-3-4 ordered 0, 4, 2, 1, 3: vertex 2 reaches 0 and 4 through
        // 1 and 3, both of which come later
        let p5 = generate(Family::Path, &[5], 0).unwrap();
        let order = Ordering::new(vec![0, 4, 2, 1, 3]).unwrap();
        assert_eq!(packing_profile(&p5, &order).unwrap()[2], 2);
    }

    #[test]
    fn size_mismatch_rejected() {
        let g = generate(Family::Path, &[4], 0).unwrap();
        assert!(verify_ordering(&g, &Ordering::identity(3)).is_err());
    }

    #[test]
    fn greedy_closed_families() {
        for n in 2..7 {
            let k = generate(Family::Clique, &[n], 0).unwrap();
            assert_eq!(greedy_exact(&k).value, n - 1);
        }
        let g = generate(Family::Grid, &[3], 0).unwrap();
        let r = greedy_exact(&g);
        assert_eq!(verify_ordering(&g, &r.witness).unwrap(), r.value);
    }
}

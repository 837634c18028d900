//! Incremental candidate oracle for the greedy 2-admissibility ordering.
//!
//! The state tracks a partition of the vertices into `L` (not yet placed) and
//! `R` (placed, i.e. to the right in the final ordering). For every vertex it
//! keeps `N_L`, `N_R`, and a maximal matching between `N_R(v)` and the set
//! `T²_L(v)` of unplaced vertices that are two hops away through `R`. A vertex
//! whose `|N_L| + |M|` cannot be pushed above `p` by an augmenting path is a
//! candidate: its 2-path packing number into `L` is at most `p`.
//!
//! After [`OracleState::init`] and after every [`OracleState::pop_candidate`]
//! / [`OracleState::update`] pair the following hold (see [`check`]):
//!
//! 1. every `u ∈ L` with `pp²_L(u) <= p` is a candidate,
//! 2. `N_L`/`N_R` are exact for every vertex,
//! 3. every matching of a vertex in `L` is maximal, and non-candidates have
//!    `|N_L| + |M| >= p + 1`.

mod augment;
pub mod check;
mod matching;

use std::collections::BTreeSet;

use rustc_hash::FxHashSet;

use crate::graph::{Graph, Vertex};

pub use check::{check_conditions, Violation};
pub use matching::Matching;

/// Work counters, mostly for diagnostics and benchmarks.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct OracleCounters {
    pub updates: u64,
    pub augment_calls: u64,
    pub augment_successes: u64,
}

#[derive(Debug, Clone)]
pub struct OracleState<'g> {
    graph: &'g Graph,
    p: usize,
    in_left: Vec<bool>,
    left_count: usize,
    nl: Vec<FxHashSet<Vertex>>,
    nr: Vec<FxHashSet<Vertex>>,
    matchings: Vec<Matching>,
    cand: BTreeSet<Vertex>,
    in_cand: Vec<bool>,
    // vertex popped but not yet passed to `update`
    pending: Option<Vertex>,
    counters: OracleCounters,
}

impl<'g> OracleState<'g> {
    /// Everything starts in `L`; the candidates are the vertices of degree
    /// at most `p`.
    pub fn init(graph: &'g Graph, p: usize) -> Self {
        let n = graph.n();
        let nl = graph
            .vertices()
            .map(|v| graph.neighbours(v).iter().copied().collect())
            .collect();
        let mut in_cand = vec![false; n];
        let mut cand = BTreeSet::new();
        for v in graph.vertices().filter(|&v| graph.degree(v) <= p) {
            in_cand[v] = true;
            cand.insert(v);
        }
        OracleState {
            graph,
            p,
            in_left: vec![true; n],
            left_count: n,
            nl,
            nr: vec![FxHashSet::default(); n],
            matchings: vec![Matching::default(); n],
            cand,
            in_cand,
            pending: None,
            counters: OracleCounters::default(),
        }
    }

    /// Builds a state for an arbitrary left set with exact `N_L`/`N_R`, empty
    /// matchings and no candidates. Used to set up instrumentation scenarios;
    /// the conditions generally do not hold until the caller fills in
    /// matchings and candidates.
    pub fn from_left_set(graph: &'g Graph, p: usize, in_left: &[bool]) -> Self {
        assert_eq!(in_left.len(), graph.n());
        let mut nl = Vec::with_capacity(graph.n());
        let mut nr = Vec::with_capacity(graph.n());
        for v in graph.vertices() {
            let (left, right): (Vec<Vertex>, Vec<Vertex>) =
                graph.neighbours(v).iter().partition(|&&u| in_left[u]);
            nl.push(left.into_iter().collect());
            nr.push(right.into_iter().collect());
        }
        OracleState {
            graph,
            p,
            in_left: in_left.to_vec(),
            left_count: in_left.iter().filter(|&&b| b).count(),
            nl,
            nr,
            matchings: vec![Matching::default(); graph.n()],
            cand: BTreeSet::new(),
            in_cand: vec![false; graph.n()],
            pending: None,
            counters: OracleCounters::default(),
        }
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn is_left(&self, v: Vertex) -> bool {
        self.in_left[v]
    }

    pub fn left_mask(&self) -> &[bool] {
        &self.in_left
    }

    pub fn left_count(&self) -> usize {
        self.left_count
    }

    pub fn left_neighbours(&self, v: Vertex) -> &FxHashSet<Vertex> {
        &self.nl[v]
    }

    pub fn right_neighbours(&self, v: Vertex) -> &FxHashSet<Vertex> {
        &self.nr[v]
    }

    pub fn matching(&self, v: Vertex) -> &Matching {
        &self.matchings[v]
    }

    /// Direct access to a local matching, for instrumentation and fault
    /// injection. Mutating it can break the oracle conditions.
    pub fn matching_mut(&mut self, v: Vertex) -> &mut Matching {
        &mut self.matchings[v]
    }

    pub fn is_candidate(&self, v: Vertex) -> bool {
        self.in_cand[v]
    }

    pub fn candidates(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.cand.iter().copied()
    }

    /// Marks `v` as a candidate without any checks.
    pub fn insert_candidate(&mut self, v: Vertex) {
        if !self.in_cand[v] {
            self.in_cand[v] = true;
            self.cand.insert(v);
        }
    }

    pub fn counters(&self) -> OracleCounters {
        self.counters
    }

    /// `|N_L(v)| + |M_v|`, the packing lower bound the oracle currently holds.
    pub fn packing_bound(&self, v: Vertex) -> usize {
        self.nl[v].len() + self.matchings[v].len()
    }

    /// Removes the smallest candidate from `Cand` and from `L`.
    ///
    /// The caller must pass the returned vertex to [`OracleState::update`]
    /// before popping again.
    pub fn pop_candidate(&mut self) -> Option<Vertex> {
        debug_assert!(
            self.pending.is_none(),
            "pop_candidate called twice without update (pending {:?})",
            self.pending
        );
        let v = self.cand.pop_first()?;
        self.in_cand[v] = false;
        self.in_left[v] = false;
        self.left_count -= 1;
        self.pending = Some(v);
        Some(v)
    }

    /// Restores the oracle conditions after `v` moved from `L` to `R`.
    pub fn update(&mut self, v: Vertex) {
        debug_assert_eq!(self.pending, Some(v), "update must follow pop_candidate");
        debug_assert!(!self.in_left[v]);
        self.pending = None;
        self.counters.updates += 1;

        let p = self.p;
        let graph = self.graph;
        let mut check: Vec<Vertex> = Vec::new();

        // Loop 1: v changes sides in every neighbour's partition.
        for &u in graph.neighbours(v) {
            self.nl[u].remove(&v);
            self.nr[u].insert(v);
        }

        // Loop 2: v is a new right vertex for each left neighbour u; match it
        // to an unmatched vertex two hops from u if one exists.
        let mut left_nbrs: Vec<Vertex> = self.nl[v].iter().copied().collect();
        left_nbrs.sort_unstable();
        for &u in &left_nbrs {
            let nl_u = &self.nl[u];
            let m_u = &self.matchings[u];
            let partner = left_nbrs
                .iter()
                .copied()
                .find(|&w| w != u && !nl_u.contains(&w) && !m_u.contains_left(w));
            if let Some(w) = partner {
                self.matchings[u].insert(v, w);
            }
            check.push(u);
        }

        // Loop 3: v left T²_L(u) for every u that had it matched; drop that
        // edge and try to rematch its right endpoint.
        let rights: Vec<Vertex> = self.matchings[v].rights().collect();
        for x in rights {
            for &u in &self.nl[x] {
                if u == v {
                    continue;
                }
                let m_u = &mut self.matchings[u];
                let Some(z) = m_u.remove_left(v) else {
                    continue;
                };
                let nl_u = &self.nl[u];
                let replacement = self.nl[z]
                    .iter()
                    .copied()
                    .filter(|&y| y != u && !nl_u.contains(&y) && !m_u.contains_left(y))
                    .min();
                if let Some(y) = replacement {
                    m_u.insert(z, y);
                }
                check.push(u);
            }
        }

        // Loop 4: vertices whose bound dropped to exactly p become candidates
        // unless an augmenting path lifts them back to p + 1.
        check.sort_unstable();
        check.dedup();
        for u in check {
            if self.packing_bound(u) == p && !self.in_cand[u] && !self.augment(u) {
                self.insert_candidate(u);
            }
        }

        self.matchings[v].clear();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Family};

    fn gen(f: Family, p: &[usize]) -> Graph {
        generate(f, p, 0).unwrap()
    }

    #[test]
    fn init_candidates_by_degree() {
        let k4 = gen(Family::Clique, &[4]);
        assert_eq!(OracleState::init(&k4, 3).candidates().count(), 4);
        assert_eq!(OracleState::init(&k4, 2).candidates().count(), 0);
        let star = gen(Family::Star, &[5]);
        let s = OracleState::init(&star, 1);
        assert_eq!(s.candidates().collect::<Vec<_>>(), vec![1, 2, 3, 4, 5]);
        assert!(s.right_neighbours(0).is_empty());
        assert_eq!(s.left_neighbours(0).len(), 5);
    }

    #[test]
    fn pop_takes_smallest_candidate_and_leaves_l() {
        let path = gen(Family::Path, &[3]);
        let mut s = OracleState::init(&path, 1);
        assert_eq!(s.pop_candidate(), Some(0));
        assert!(!s.is_left(0));
        assert_eq!(s.left_count(), 2);
        s.update(0);

        let k4 = gen(Family::Clique, &[4]);
        let mut s = OracleState::init(&k4, 2);
        assert_eq!(s.pop_candidate(), None);
    }

    #[test]
    #[cfg(debug_assertions)]
    #[should_panic(expected = "pop_candidate called twice")]
    fn double_pop_is_a_contract_violation() {
        let path = gen(Family::Path, &[4]);
        let mut s = OracleState::init(&path, 2);
        s.pop_candidate();
        s.pop_candidate();
    }

    #[test]
    fn update_on_four_cycle() {
        let c4 = gen(Family::Cycle, &[4]);
        let mut s = OracleState::init(&c4, 2);
        assert_eq!(s.candidates().count(), 4);
        let v = s.pop_candidate().unwrap();
        assert_eq!(v, 0);
        s.update(v);
        for u in [1, 3] {
            assert!(s.right_neighbours(u).contains(&0));
            assert!(!s.left_neighbours(u).contains(&0));
        }
        // 0's other left neighbour is two hops from 1 and from 3
        assert_eq!(s.matching(1).partner_of_right(0), Some(3));
        assert_eq!(s.matching(3).partner_of_right(0), Some(1));
        assert!(s.matching(0).is_empty());
        assert!(check_conditions(&s).is_empty());
    }

    #[test]
    fn removing_a_star_centre_matches_leaves() {
        let star = gen(Family::Star, &[3]);
        let mut s = OracleState::init(&star, 3);
        let c = s.pop_candidate().unwrap();
        assert_eq!(c, 0);
        s.update(c);
        for leaf in 1..=3 {
            assert_eq!(
                s.right_neighbours(leaf).iter().copied().collect::<Vec<_>>(),
                vec![0]
            );
            let partner = s.matching(leaf).partner_of_right(0).unwrap();
            assert_ne!(partner, leaf);
            assert!((1..=3).contains(&partner));
        }
        assert!(check_conditions(&s).is_empty());
    }

    #[test]
    fn isolated_vertex_update_is_noop() {
        let g = Graph::from_edge_list(3, [(0, 1)]);
        let mut s = OracleState::init(&g, 0);
        assert_eq!(s.candidates().collect::<Vec<_>>(), vec![2]);
        let v = s.pop_candidate().unwrap();
        s.update(v);
        assert!(s.matching(2).is_empty());
        assert_eq!(s.left_neighbours(0).len(), 1);
        assert_eq!(s.candidates().count(), 0);
        assert!(check_conditions(&s).is_empty());
    }
}

//! From-scratch verification of the oracle conditions.

use std::fmt;

use rustc_hash::FxHashSet;

use super::OracleState;
use crate::engine::{exact_pp2, two_hop_left};
use crate::graph::Vertex;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// `N_L(w)` or `N_R(w)` disagrees with the partition.
    NeighbourSets { vertex: Vertex },
    /// `M_w` has an edge that is not between `N_R(w)` and `T²_L(w)`, or its
    /// two indexes disagree.
    InvalidMatching { vertex: Vertex, reason: String },
    /// The edge `right–left` could be added to `M_w`.
    NotMaximal {
        vertex: Vertex,
        right: Vertex,
        left: Vertex,
    },
    /// `w` is not a candidate but `|N_L(w)| + |M_w| <= p`.
    LowBound { vertex: Vertex, bound: usize },
    /// `pp²_L(w) <= p` but `w` is not a candidate.
    MissingCandidate { vertex: Vertex, pp: usize },
    /// A placed vertex is still a candidate.
    CandidateNotLeft { vertex: Vertex },
    /// A placed vertex still holds matching edges.
    StaleMatching { vertex: Vertex },
}

impl Violation {
    pub fn vertex(&self) -> Vertex {
        match *self {
            Violation::NeighbourSets { vertex }
            | Violation::InvalidMatching { vertex, .. }
            | Violation::NotMaximal { vertex, .. }
            | Violation::LowBound { vertex, .. }
            | Violation::MissingCandidate { vertex, .. }
            | Violation::CandidateNotLeft { vertex }
            | Violation::StaleMatching { vertex } => vertex,
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NeighbourSets { vertex } => {
                write!(f, "vertex {vertex}: N_L/N_R out of date")
            }
            Violation::InvalidMatching { vertex, reason } => {
                write!(f, "vertex {vertex}: invalid matching ({reason})")
            }
            Violation::NotMaximal {
                vertex,
                right,
                left,
            } => {
                write!(
                    f,
                    "vertex {vertex}: matching not maximal, {right}-{left} can be added"
                )
            }
            Violation::LowBound { vertex, bound } => {
                write!(
                    f,
                    "vertex {vertex}: non-candidate with |N_L| + |M| = {bound}"
                )
            }
            Violation::MissingCandidate { vertex, pp } => {
                write!(f, "vertex {vertex}: pp = {pp} but not a candidate")
            }
            Violation::CandidateNotLeft { vertex } => {
                write!(f, "vertex {vertex}: candidate outside L")
            }
            Violation::StaleMatching { vertex } => {
                write!(f, "vertex {vertex}: placed vertex keeps a matching")
            }
        }
    }
}

/// Recomputes every oracle condition from the graph and the current `L`.
/// An empty result means the state is healthy.
///
/// Only meaningful between operations, not between a pop and its update.
pub fn check_conditions(state: &OracleState<'_>) -> Vec<Violation> {
    let g = state.graph();
    let in_left = state.left_mask();
    let p = state.p();
    let mut report = Vec::new();

    for w in g.vertices() {
        let nl = state.left_neighbours(w);
        let nr = state.right_neighbours(w);
        let sets_ok = nl.len() + nr.len() == g.degree(w)
            && g.neighbours(w).iter().all(|&u| {
                if in_left[u] {
                    nl.contains(&u)
                } else {
                    nr.contains(&u)
                }
            });
        if !sets_ok {
            report.push(Violation::NeighbourSets { vertex: w });
        }

        let matching = state.matching(w);
        if !in_left[w] {
            if !matching.is_empty() {
                report.push(Violation::StaleMatching { vertex: w });
            }
            if state.is_candidate(w) {
                report.push(Violation::CandidateNotLeft { vertex: w });
            }
            continue;
        }

        let targets: FxHashSet<Vertex> = two_hop_left(g, in_left, w).into_iter().collect();
        if !matching.is_consistent() {
            report.push(Violation::InvalidMatching {
                vertex: w,
                reason: "partner maps disagree".into(),
            });
        }
        for (right, left) in matching.edges() {
            let reason = if !g.has_edge(w, right) || in_left[right] {
                Some(format!("{right} is not in N_R({w})"))
            } else if !targets.contains(&left) {
                Some(format!("{left} is not in T²_L({w})"))
            } else if !g.has_edge(right, left) {
                Some(format!("{right}-{left} is not an edge"))
            } else {
                None
            };
            if let Some(reason) = reason {
                report.push(Violation::InvalidMatching { vertex: w, reason });
            }
        }

        'maximal: for &right in g.neighbours(w) {
            if in_left[right] || matching.contains_right(right) {
                continue;
            }
            for &left in g.neighbours(right) {
                if targets.contains(&left) && !matching.contains_left(left) {
                    report.push(Violation::NotMaximal {
                        vertex: w,
                        right,
                        left,
                    });
                    break 'maximal;
                }
            }
        }

        let candidate = state.is_candidate(w);
        let bound = g.neighbours(w).iter().filter(|&&u| in_left[u]).count() + matching.len();
        if !candidate && bound <= p {
            report.push(Violation::LowBound { vertex: w, bound });
        }
        let pp = exact_pp2(g, in_left, w).expect("w is in L");
        if !candidate && pp <= p {
            report.push(Violation::MissingCandidate { vertex: w, pp });
        }
    }
    report
}

/// Whether `Cand` is exactly `{u ∈ L : pp²_L(u) <= p}`, a strengthening of
/// the containment the oracle guarantees.
pub fn candidates_are_exact(state: &OracleState<'_>) -> bool {
    let g = state.graph();
    let in_left = state.left_mask();
    g.vertices().filter(|&u| in_left[u]).all(|u| {
        let pp = exact_pp2(g, in_left, u).expect("u is in L");
        state.is_candidate(u) == (pp <= state.p())
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Family, Graph};

    #[test]
    fn fresh_state_is_healthy() {
        for (f, params) in [
            (Family::Clique, vec![6]),
            (Family::Grid, vec![4]),
            (Family::Gnm, vec![20, 50]),
        ] {
            let g = generate(f, &params, 3).unwrap();
            for p in 0..5 {
                let s = OracleState::init(&g, p);
                assert!(check_conditions(&s).is_empty());
                assert!(candidates_are_exact(&s));
            }
        }
    }

    #[test]
    fn corrupted_matching_is_reported() {
        let g = generate(Family::Cycle, &[6], 0).unwrap();
        let mut s = OracleState::init(&g, 2);
        let v = s.pop_candidate().unwrap();
        s.update(v);
        assert!(check_conditions(&s).is_empty());
        // vertex 1 has 0 on its right side and 2 on its left; matching 0 to
        // a neighbour of 1 is illegal
        let m = s.matching_mut(1);
        if let Some(left) = m.partner_of_right(0) {
            m.remove_left(left);
        }
        m.insert(0, 2);
        let report = check_conditions(&s);
        assert!(!report.is_empty());
        assert!(report.iter().any(|v| v.vertex() == 1), "{report:?}");
    }

    #[test]
    fn dropped_matching_edge_breaks_maximality() {
        let g = generate(Family::Cycle, &[4], 0).unwrap();
        let mut s = OracleState::init(&g, 2);
        let v = s.pop_candidate().unwrap();
        s.update(v);
        s.matching_mut(1).remove_right(0);
        let report = check_conditions(&s);
        assert!(report.contains(&Violation::NotMaximal {
            vertex: 1,
            right: 0,
            left: 3
        }));
    }

    #[test]
    fn missing_candidate_is_reported() {
        let g = Graph::from_edge_list(3, [(0, 1), (1, 2)]);
        let in_left = [true, true, true];
        let s = OracleState::from_left_set(&g, 1, &in_left);
        let report = check_conditions(&s);
        assert!(report.contains(&Violation::MissingCandidate { vertex: 0, pp: 1 }));
        assert!(report.contains(&Violation::LowBound {
            vertex: 2,
            bound: 1
        }));
    }
}

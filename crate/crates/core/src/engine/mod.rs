//! Deciding and computing 2-admissibility, plus the slow reference paths used
//! to certify results.

mod bipartite;
mod order_file;
mod pp;
mod verify;

use std::time::Instant;

use crate::error::{Error, Result};
use crate::graph::{degeneracy, Graph, Ordering, Vertex};
use crate::oracle::{OracleCounters, OracleState};

pub use bipartite::{maximum_matching, maximum_matching_size};
pub use order_file::{read_ordering, write_ordering};
pub use pp::{brute_force_pp2, exact_pp2, two_hop_left, BRUTE_FORCE_DEGREE_CAP};
pub use verify::{greedy_exact, packing_profile, verify_ordering};

/// Outcome of [`decide`]: a witness ordering iff the answer is yes.
#[derive(Debug, Clone)]
pub struct DecideResult {
    pub p: usize,
    pub witness: Option<Ordering>,
    pub counters: OracleCounters,
}

impl DecideResult {
    pub fn answer(&self) -> bool {
        self.witness.is_some()
    }
}

/// The exact 2-admissibility and an ordering attaining it.
#[derive(Debug, Clone)]
pub struct AdmValue {
    pub value: usize,
    pub witness: Ordering,
    /// Number of decision runs spent (0 for [`greedy_exact`]).
    pub probes: usize,
}

/// Whether `adm₂(g) <= p`, with an ordering of 2-admissibility at most `p`
/// when it is.
pub fn decide(g: &Graph, p: usize) -> DecideResult {
    run(g, p, None, |_| {}).expect("no deadline set")
}

/// [`decide`] that gives up with [`Error::TimedOut`] once `deadline` passes.
pub fn decide_until(g: &Graph, p: usize, deadline: Option<Instant>) -> Result<DecideResult> {
    run(g, p, deadline, |_| {})
}

/// [`decide`] that hands the oracle state to `observe` after initialisation
/// and after every update.
pub fn decide_observed<F>(g: &Graph, p: usize, observe: F) -> DecideResult
where
    F: FnMut(&OracleState<'_>),
{
    run(g, p, None, observe).expect("no deadline set")
}

fn run<F>(g: &Graph, p: usize, deadline: Option<Instant>, mut observe: F) -> Result<DecideResult>
where
    F: FnMut(&OracleState<'_>),
{
    let n = g.n();
    // more than p·n edges force some prefix vertex above p
    if g.m() > p.saturating_mul(n) {
        return Ok(DecideResult {
            p,
            witness: None,
            counters: OracleCounters::default(),
        });
    }

    let mut state = OracleState::init(g, p);
    observe(&state);
    let mut sequence: Vec<Vertex> = vec![0; n];
    let mut slot = n;
    while slot > 0 {
        if (n - slot).is_multiple_of(1024) && deadline.is_some_and(|d| Instant::now() >= d) {
            return Err(Error::TimedOut);
        }
        let Some(v) = state.pop_candidate() else {
            return Ok(DecideResult {
                p,
                witness: None,
                counters: state.counters(),
            });
        };
        slot -= 1;
        sequence[slot] = v;
        state.update(v);
        observe(&state);
    }
    let witness = Ordering::new(sequence).expect("every vertex popped exactly once");
    Ok(DecideResult {
        p,
        witness: Some(witness),
        counters: state.counters(),
    })
}

/// Exact 2-admissibility by searching over `p` with [`decide`].
///
/// The degeneracy is a lower bound (a maximum packing contains an edge to
/// every left neighbour); the maximum degree is an upper bound. The search
/// probes the lower bound first, then doubles, then bisects.
pub fn compute(g: &Graph) -> AdmValue {
    compute_until(g, None).expect("no deadline set")
}

pub fn compute_until(g: &Graph, deadline: Option<Instant>) -> Result<AdmValue> {
    let (lower, _) = degeneracy(g);
    let upper = g.max_degree().max(lower);
    let mut probes = 0;
    let mut probe = |p: usize| -> Result<Option<Ordering>> {
        probes += 1;
        Ok(decide_until(g, p, deadline)?.witness)
    };

    if let Some(witness) = probe(lower)? {
        return Ok(AdmValue {
            value: lower,
            witness,
            probes: 1,
        });
    }
    // invariant: every p < low is a no, `hi` is a yes
    let mut low = lower + 1;
    let mut hi = lower.max(1);
    let mut best;
    loop {
        hi = (hi * 2).min(upper).max(low);
        if let Some(w) = probe(hi)? {
            best = w;
            break;
        }
        low = hi + 1;
    }
    while low < hi {
        let mid = low + (hi - low) / 2;
        match probe(mid)? {
            Some(w) => {
                hi = mid;
                best = w;
            }
            None => low = mid + 1,
        }
    }
    Ok(AdmValue {
        value: hi,
        witness: best,
        probes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, subdivide_once, Family};

    fn gen(f: Family, p: &[usize]) -> Graph {
        generate(f, p, 0).unwrap()
    }

    #[test]
    fn clique_threshold() {
        let k5 = gen(Family::Clique, &[5]);
        assert!(!decide(&k5, 3).answer());
        let yes = decide(&k5, 4);
        assert!(yes.answer());
        assert!(verify_ordering(&k5, yes.witness.as_ref().unwrap()).unwrap() <= 4);
    }

    #[test]
    fn star_and_cycle() {
        let star = gen(Family::Star, &[50]);
        let r = decide(&star, 1);
        assert!(r.answer());
        assert_eq!(
            verify_ordering(&star, r.witness.as_ref().unwrap()).unwrap(),
            1
        );

        let c6 = gen(Family::Cycle, &[6]);
        assert!(!decide(&c6, 1).answer());
        assert!(decide(&c6, 2).answer());
    }

    #[test]
    fn edge_bound_short_circuits() {
        let k4 = gen(Family::Clique, &[4]);
        let r = decide(&k4, 1);
        assert!(!r.answer());
        assert_eq!(r.counters, OracleCounters::default());
    }

    #[test]
    fn zero_threshold_only_for_edgeless() {
        let empty = Graph::from_edge_list(5, []);
        assert!(decide(&empty, 0).answer());
        let one = Graph::from_edge_list(5, [(1, 3)]);
        assert!(!decide(&one, 0).answer());
        let nothing = Graph::from_edge_list(0, []);
        assert!(decide(&nothing, 0).answer());
        assert_eq!(compute(&nothing).value, 0);
    }

    #[test]
    fn compute_closed_families() {
        assert_eq!(compute(&gen(Family::Clique, &[7])).value, 6);
        assert_eq!(compute(&gen(Family::Path, &[10])).value, 1);
        assert_eq!(compute(&gen(Family::Cycle, &[9])).value, 2);
        assert_eq!(compute(&Graph::from_edge_list(4, [])).value, 0);
    }

    #[test]
    fn compute_matches_greedy_on_subdivided_clique() {
        let g = subdivide_once(&gen(Family::Clique, &[5]));
        let fast = compute(&g);
        let slow = greedy_exact(&g);
        assert_eq!(fast.value, slow.value);
        assert!(fast.value >= 2);
        assert_eq!(verify_ordering(&g, &fast.witness).unwrap(), fast.value);
    }

    #[test]
    fn deadline_in_the_past_times_out() {
        let g = gen(Family::Grid, &[60]);
        let past = Instant::now();
        assert!(matches!(
            decide_until(&g, 3, Some(past)),
            Err(Error::TimedOut)
        ));
        assert!(matches!(
            compute_until(&g, Some(past)),
            Err(Error::TimedOut)
        ));
    }
}

use rustc_hash::FxHashMap;

use super::OracleState;
use crate::graph::Vertex;

impl OracleState<'_> {
    /// Tries to grow `M_v` by one edge along an augmenting path.
    ///
    /// Requires `M_v` to be maximal between `N_R(v)` and `T²_L(v)`. Returns
    /// `false` exactly when `M_v` is already maximum; otherwise the matching
    /// gains one edge and stays maximal.
    ///
    /// The search runs on a directed graph over the matched vertices: matching
    /// edges point from the right side to the left side, other graph edges
    /// between matched vertices point the other way. Sources are matched right
    /// vertices with a free eligible left neighbour, sinks are matched left
    /// vertices with a free right neighbour.
    pub fn augment(&mut self, v: Vertex) -> bool {
        self.counters.augment_calls += 1;
        let matching = &self.matchings[v];
        if matching.is_empty() {
            return false;
        }

        let mut lefts: Vec<Vertex> = matching.lefts().collect();
        lefts.sort_unstable();
        let left_index: FxHashMap<Vertex, usize> =
            lefts.iter().enumerate().map(|(i, &w)| (w, i)).collect();

        // arcs[i]: matched right vertices reachable from lefts[i] by a
        // non-matching edge. sink_out[i]: a free right neighbour of lefts[i].
        let mut arcs: Vec<Vec<Vertex>> = vec![Vec::new(); lefts.len()];
        let mut sink_out: Vec<Option<Vertex>> = vec![None; lefts.len()];
        for &u in &self.nr[v] {
            let u_partner = matching.partner_of_right(u);
            let nl_u = &self.nl[u];
            for (i, &w) in lefts.iter().enumerate() {
                if u_partner == Some(w) || !nl_u.contains(&w) {
                    continue;
                }
                if u_partner.is_some() {
                    arcs[i].push(u);
                } else if sink_out[i].is_none_or(|cur| u < cur) {
                    sink_out[i] = Some(u);
                }
            }
        }
        if sink_out.iter().all(Option::is_none) {
            return false;
        }

        // sources: matched right vertices with a free vertex of T²_L(v) next
        // to them; `source_out` records the smallest such vertex
        let nl_v = &self.nl[v];
        let mut sources: Vec<(Vertex, Vertex)> = Vec::new();
        for right in matching.rights() {
            let out = self.nl[right]
                .iter()
                .copied()
                .filter(|&w| w != v && !matching.contains_left(w) && !nl_v.contains(&w))
                .min();
            if let Some(out) = out {
                sources.push((right, out));
            }
        }
        if sources.is_empty() {
            return false;
        }
        sources.sort_unstable();

        // Every right vertex has exactly one out-arc (its matching edge), so
        // the search walks left vertices: from lefts[i] through a right vertex
        // u to partner(u). `reached_from[i]` is the previous left vertex on
        // the path, or usize::MAX for a path start.
        const START: usize = usize::MAX;
        const UNSEEN: usize = usize::MAX - 1;
        let mut reached_from = vec![UNSEEN; lefts.len()];
        let mut stack: Vec<usize> = Vec::new();
        let mut source_of_start: FxHashMap<usize, Vertex> = FxHashMap::default();
        let mut found: Option<usize> = None;

        'search: for &(s, s_out) in &sources {
            let start = left_index[&matching.partner_of_right(s).expect("source is matched")];
            if reached_from[start] != UNSEEN {
                continue;
            }
            reached_from[start] = START;
            source_of_start.insert(start, s_out);
            stack.push(start);
            while let Some(i) = stack.pop() {
                if sink_out[i].is_some() {
                    found = Some(i);
                    break 'search;
                }
                for &u in &arcs[i] {
                    let next = left_index[&matching
                        .partner_of_right(u)
                        .expect("arc into matched right")];
                    if reached_from[next] == UNSEEN {
                        reached_from[next] = i;
                        stack.push(next);
                    }
                }
            }
        }
        let Some(end) = found else {
            return false;
        };

        // walk back to the start, collecting the left vertices of the path
        let mut path = vec![end];
        let mut cur = end;
        while reached_from[cur] != START {
            cur = reached_from[cur];
            path.push(cur);
        }
        path.reverse();
        let first_out = source_of_start[&path[0]];
        let last_out = sink_out[end].expect("path ends at a sink");

        let path_lefts: Vec<Vertex> = path.iter().map(|&i| lefts[i]).collect();
        let matching = &mut self.matchings[v];
        let path_rights: Vec<Vertex> = path_lefts
            .iter()
            .map(|&w| matching.remove_left(w).expect("path vertex is matched"))
            .collect();
        matching.insert(path_rights[0], first_out);
        for k in 1..path_lefts.len() {
            matching.insert(path_rights[k], path_lefts[k - 1]);
        }
        matching.insert(last_out, *path_lefts.last().unwrap());

        self.counters.augment_successes += 1;
        true
    }
}

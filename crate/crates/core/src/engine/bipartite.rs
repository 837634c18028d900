//! Maximum bipartite matching by repeated augmenting-path search (Kuhn).
//!
//! Deliberately independent of the oracle's incremental matchings so it can
//! serve as a reference for them.

const FREE: usize = usize::MAX;

/// Size of a maximum matching. `adjacency[l]` lists the right-side indices
/// (`< right_count`) adjacent to left index `l`.
pub fn maximum_matching_size(adjacency: &[Vec<usize>], right_count: usize) -> usize {
    maximum_matching(adjacency, right_count).len()
}

/// A maximum matching as `(left, right)` index pairs.
pub fn maximum_matching(adjacency: &[Vec<usize>], right_count: usize) -> Vec<(usize, usize)> {
    let left_count = adjacency.len();
    let mut match_left = vec![FREE; left_count];
    let mut match_right = vec![FREE; right_count];
    let mut seen = vec![usize::MAX; right_count];
    let mut stack: Vec<(usize, usize)> = Vec::new();
    let mut via: Vec<usize> = Vec::new();

    for root in 0..left_count {
        stack.clear();
        via.clear();
        stack.push((root, 0));
        while let Some(&mut (l, ref mut next)) = stack.last_mut() {
            if *next == adjacency[l].len() {
                stack.pop();
                via.pop();
                continue;
            }
            let r = adjacency[l][*next];
            *next += 1;
            if seen[r] == root {
                continue;
            }
            seen[r] = root;
            if match_right[r] == FREE {
                // flip the alternating path: level j takes via[j], the last
                // level takes r
                via.push(r);
                for (&(left, _), &right) in stack.iter().zip(via.iter()) {
                    match_left[left] = right;
                    match_right[right] = left;
                }
                break;
            }
            via.push(r);
            stack.push((match_right[r], 0));
        }
    }

    match_left
        .iter()
        .enumerate()
        .filter(|&(_, &r)| r != FREE)
        .map(|(l, &r)| (l, r))
        .collect()
}

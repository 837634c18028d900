use rustc_hash::FxHashMap;

use crate::graph::Vertex;

/// A local matching between right-side vertices (neighbours of the owner that
/// have been placed) and left-side vertices (two hops away, still unplaced).
///
/// Both directions are indexed so partner lookups are O(1) either way.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Matching {
    by_right: FxHashMap<Vertex, Vertex>,
    by_left: FxHashMap<Vertex, Vertex>,
}

impl Matching {
    pub fn len(&self) -> usize {
        self.by_right.len()
    }

    pub fn is_empty(&self) -> bool {
        self.by_right.is_empty()
    }

    pub fn contains_left(&self, x: Vertex) -> bool {
        self.by_left.contains_key(&x)
    }

    pub fn contains_right(&self, x: Vertex) -> bool {
        self.by_right.contains_key(&x)
    }

    pub fn partner_of_left(&self, left: Vertex) -> Option<Vertex> {
        self.by_left.get(&left).copied()
    }

    pub fn partner_of_right(&self, right: Vertex) -> Option<Vertex> {
        self.by_right.get(&right).copied()
    }

    /// Adds the edge `right–left`. Both endpoints must be unmatched.
    pub fn insert(&mut self, right: Vertex, left: Vertex) {
        debug_assert!(
            !self.by_right.contains_key(&right),
            "{right} already matched"
        );
        debug_assert!(!self.by_left.contains_key(&left), "{left} already matched");
        self.by_right.insert(right, left);
        self.by_left.insert(left, right);
    }

    /// Removes the edge at `left`, returning its right endpoint.
    pub fn remove_left(&mut self, left: Vertex) -> Option<Vertex> {
        let right = self.by_left.remove(&left)?;
        self.by_right.remove(&right);
        Some(right)
    }

    /// Removes the edge at `right`, returning its left endpoint.
    pub fn remove_right(&mut self, right: Vertex) -> Option<Vertex> {
        let left = self.by_right.remove(&right)?;
        self.by_left.remove(&left);
        Some(left)
    }

    /// Edges as `(right, left)` pairs, in no particular order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.by_right.iter().map(|(&r, &l)| (r, l))
    }

    pub fn lefts(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.by_left.keys().copied()
    }

    pub fn rights(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.by_right.keys().copied()
    }

    /// Drops all edges and releases the backing storage.
    pub fn clear(&mut self) {
        *self = Matching::default();
    }

    /// Checks that both indexes describe the same set of disjoint pairs.
    pub fn is_consistent(&self) -> bool {
        self.by_left.len() == self.by_right.len()
            && self
                .by_right
                .iter()
                .all(|(r, l)| self.by_left.get(l) == Some(r) && !self.by_right.contains_key(l))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insert_and_remove_keep_both_sides_in_step() {
        let mut m = Matching::default();
        m.insert(1, 5);
        m.insert(2, 6);
        assert_eq!(m.len(), 2);
        assert_eq!(m.partner_of_left(5), Some(1));
        assert_eq!(m.partner_of_right(2), Some(6));
        assert!(m.is_consistent());

        assert_eq!(m.remove_left(5), Some(1));
        assert!(!m.contains_right(1));
        assert_eq!(m.remove_right(2), Some(6));
        assert!(m.is_empty());
        assert_eq!(m.remove_left(9), None);
    }

    #[test]
    fn clear_releases_storage() {
        let mut m = Matching::default();
        for i in 0..20 {
            m.insert(i, 100 + i);
        }
        m.clear();
        assert!(m.is_empty());
        assert_eq!(m, Matching::default());
    }
}

//! Labeled trees and forests on `[n]`, the Prüfer bijection and the tree metric.

mod edge;
mod edge_vector;
mod forest;
mod labeled;
mod prufer;

use num_bigint::BigUint;

pub use edge::{edge_index, universe_size, Edge};
pub use edge_vector::{edge_vector, tree_from_edge_vector, EdgeVector};
pub use forest::{enumerate_forests, profile, remove_edges, set_partitions, Forest, ProfileVector};
pub use labeled::{identity_line, line, star, tree_distance, LabeledTree};
pub use prufer::{
    collect_trees, enumerate_trees, enumerate_trees_with_prefix, par_fold_trees, par_map_trees,
    partition_prefixes, prufer_decode, prufer_encode, tree_at, word_at, PruferSequence, TreeIter,
};

/// `n^{n-2}`, with one tree on a single node.
pub fn tree_count(n: usize) -> BigUint {
    if n <= 2 {
        return BigUint::from(1u8);
    }
    BigUint::from(n).pow((n - 2) as u32)
}

/// `n^{n-2}` when it fits in a `u128`.
pub fn tree_count_u128(n: usize) -> Option<u128> {
    if n <= 2 {
        return Some(1);
    }
    (n as u128).checked_pow((n - 2) as u32)
}

/// Union-find with path halving and union by size.
#[derive(Debug, Clone)]
pub(crate) struct DisjointSets {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl DisjointSets {
    pub(crate) fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Merges the sets of `a` and `b`; false if they were already joined.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tree_counts() {
        assert_eq!(tree_count(1), BigUint::from(1u8));
        assert_eq!(tree_count(4), BigUint::from(16u8));
        assert_eq!(tree_count_u128(10), Some(100_000_000));
        assert_eq!(tree_count_u128(40), None);
    }

    #[test]
    fn metric_axioms_exhaustive() {
        for n in 1..=5 {
            let trees = collect_trees(n);
            for a in &trees {
                assert_eq!(tree_distance(a, a).unwrap(), 0);
                for b in &trees {
                    let dab = tree_distance(a, b).unwrap();
                    assert_eq!(dab, tree_distance(b, a).unwrap());
                    assert!(dab <= n.saturating_sub(1));
                    assert_eq!(dab == n - 1 && n > 1, a.shared_edges(b) == 0 && n > 1);
                    if a != b {
                        assert!(dab > 0);
                    }
                    for c in &trees {
                        assert!(tree_distance(a, c).unwrap() <= dab + tree_distance(b, c).unwrap());
                    }
                }
            }
        }
    }
}

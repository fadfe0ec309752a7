use std::collections::HashSet;

use proptest::prelude::*;

use arboreal::ball::{forest_ball_size_formula, forest_completions};
use arboreal::tree::{tree_from_edge_vector, universe_size};
use arboreal::{edge_vector, prufer_encode, Edge, LabeledTree, PruferSequence};

/// A random tree on `2..=max_n` nodes, drawn through its Prüfer word.
fn tree(max_n: usize) -> impl Strategy<Value = LabeledTree> {
    (2..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(0..n, n - 2)
            .prop_map(move |w| PruferSequence::new(n, w).unwrap().decode())
    })
}

fn same_size_trees(max_n: usize, k: usize) -> impl Strategy<Value = Vec<LabeledTree>> {
    (2..=max_n).prop_flat_map(move |n| {
        proptest::collection::vec(
            proptest::collection::vec(0..n, n - 2)
                .prop_map(move |w| PruferSequence::new(n, w).unwrap().decode()),
            k,
        )
    })
}

proptest! {
    #[test]
    fn prufer_round_trip(t in tree(40)) {
        let word = prufer_encode(&t).unwrap();
        prop_assert_eq!(word.decode(), t.clone());
        let degrees = t.degrees();
        for (v, d) in degrees.iter().enumerate() {
            prop_assert_eq!(word.word().iter().filter(|&&x| x == v).count() + 1, *d);
        }
    }

    #[test]
    fn edge_vector_round_trip(t in tree(30)) {
        let v = edge_vector(&t);
        prop_assert_eq!(v.count_ones(), t.n() - 1);
        prop_assert_eq!(tree_from_edge_vector(&v).unwrap(), t);
    }

    #[test]
    fn metric_axioms(ts in same_size_trees(14, 3)) {
        let (a, b, c) = (&ts[0], &ts[1], &ts[2]);
        let n = a.n();
        let ab = a.distance(b).unwrap();
        prop_assert_eq!(ab, b.distance(a).unwrap());
        prop_assert_eq!(ab == 0, a == b);
        prop_assert!(ab < n.max(2));
        prop_assert!(a.distance(c).unwrap() <= ab + b.distance(c).unwrap());
        let shared: HashSet<&Edge> = a.edges().iter().collect();
        let common = b.edges().iter().filter(|e| shared.contains(e)).count();
        prop_assert_eq!(ab, n - 1 - common);
    }

    #[test]
    fn removal_profile(t in tree(16), mask in any::<u16>()) {
        let removed: Vec<Edge> = t
            .edges()
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, e)| *e)
            .collect();
        let f = t.remove_edges(&removed).unwrap();
        prop_assert_eq!(f.num_components(), removed.len() + 1);
        let p = f.profile();
        prop_assert_eq!(p.total(), t.n());
        prop_assert!(p.sizes().windows(2).all(|w| w[0] <= w[1]));
        prop_assert!(f.is_subforest_of(&t));
    }

    #[test]
    fn ball_formula_counts_completions(t in tree(7), mask in any::<u8>()) {
        let removed: Vec<Edge> = t
            .edges()
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .take(3)
            .map(|(_, e)| *e)
            .collect();
        let f = t.remove_edges(&removed).unwrap();
        let completions = forest_completions(&f);
        prop_assert_eq!(forest_ball_size_formula(&f), completions.len().into());
        prop_assert!(completions.contains(&t));
    }

    #[test]
    fn edge_index_is_a_bijection(n in 2usize..60, seed in any::<u64>()) {
        let total = universe_size(n);
        let i = (seed % total as u64) as usize;
        let e = Edge::from_index(i, n).unwrap();
        prop_assert_eq!(e.index(n).unwrap(), i);
    }
}

//! Shared fixtures for the benchmarks.

use arboreal::{LabeledTree, TreeCode};

/// A caterpillar: a spine `0..spine` with the remaining nodes hung off it round-robin.
pub fn caterpillar(n: usize, spine: usize) -> LabeledTree {
    let spine = spine.clamp(1, n);
    let mut pairs: Vec<(usize, usize)> = (1..spine).map(|v| (v - 1, v)).collect();
    pairs.extend((spine..n).map(|v| (v % spine, v)));
    LabeledTree::from_pairs(n, &pairs).expect("caterpillar is a tree")
}

/// Every codeword with `k` of its edges erased, as `(codeword index, forest)` pairs.
pub fn erased_words(code: &TreeCode, k: usize) -> Vec<(usize, arboreal::Forest)> {
    code.codewords()
        .iter()
        .enumerate()
        .flat_map(|(i, w)| {
            arboreal::codes::erasure_patterns(w, k)
                .into_iter()
                .map(move |f| (i, f))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn caterpillar_shapes() {
        let t = caterpillar(9, 3);
        assert_eq!(t.edges().len(), 8);
        assert_eq!(caterpillar(5, 5).leaves().len(), 2);
        assert_eq!(caterpillar(5, 1).degree(0), 4);
    }
}

use std::fmt;

use crate::error::{Error, Result};
use crate::tree::{universe_size, Edge, LabeledTree};

/// Indicator word over the edge universe of `[n]`, indexed by edge rank.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EdgeVector {
    n: usize,
    bits: Vec<bool>,
}

impl EdgeVector {
    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            bits: vec![false; universe_size(n)],
        }
    }

    pub fn from_bits(n: usize, bits: Vec<bool>) -> Result<Self> {
        if bits.len() != universe_size(n) {
            return Err(Error::InvalidParameters(format!(
                "edge vector of length {} for n = {n}, expected {}",
                bits.len(),
                universe_size(n)
            )));
        }
        Ok(Self { n, bits })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn count_ones(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    pub fn edges(&self) -> Vec<Edge> {
        self.bits
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(|(i, _)| Edge::from_index(i, self.n).expect("index within universe"))
            .collect()
    }

    pub fn to_tree(&self) -> Result<LabeledTree> {
        LabeledTree::new(self.n, self.edges())
    }
}

pub fn edge_vector(tree: &LabeledTree) -> EdgeVector {
    let mut v = EdgeVector::zeros(tree.n());
    for e in tree.edges() {
        v.bits[e.index_unchecked(tree.n())] = true;
    }
    v
}

pub fn tree_from_edge_vector(v: &EdgeVector) -> Result<LabeledTree> {
    v.to_tree()
}

impl fmt::Display for EdgeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::{enumerate_trees, star};

    #[test]
    fn star_on_three_nodes() {
        let v = edge_vector(&star(3, 0).unwrap());
        assert_eq!(v.to_string(), "110");
        assert_eq!(v.count_ones(), 2);
    }

    #[test]
    fn zero_vector_is_not_a_tree() {
        assert!(tree_from_edge_vector(&EdgeVector::zeros(4)).is_err());
        assert!(EdgeVector::from_bits(4, vec![true; 5]).is_err());
    }

    #[test]
    fn round_trip_all_trees() {
        for n in 2..=5 {
            for t in enumerate_trees(n) {
                let v = edge_vector(&t);
                assert_eq!(v.count_ones(), n - 1);
                assert_eq!(tree_from_edge_vector(&v).unwrap(), t);
            }
        }
    }
}

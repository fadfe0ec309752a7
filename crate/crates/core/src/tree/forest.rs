use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use num_bigint::BigUint;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::tree::labeled::{parse_edges, write_edges};
use crate::tree::prufer::enumerate_trees;
use crate::tree::{DisjointSets, Edge, LabeledTree};

/// Sorted component sizes of a forest.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProfileVector(Vec<usize>);

impl ProfileVector {
    pub fn new(mut sizes: Vec<usize>) -> Result<Self> {
        if sizes.contains(&0) {
            return Err(Error::InvalidParameters(
                "profile entries must be positive".into(),
            ));
        }
        sizes.sort_unstable();
        Ok(Self(sizes))
    }

    pub fn sizes(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn product(&self) -> BigUint {
        self.0.iter().map(|&s| BigUint::from(s)).product()
    }
}

impl fmt::Display for ProfileVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().join(","))
    }
}

impl Serialize for ProfileVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

/// A spanning forest of `[n]`. Components are ordered by (size, smallest node).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Forest {
    n: usize,
    edges: Vec<Edge>,
    components: Vec<Vec<usize>>,
    component_of: Vec<usize>,
}

impl Forest {
    /// Validates acyclicity and derives the components.
    pub fn new(n: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        if n == 0 {
            return Err(Error::NotAForest("a forest needs at least one node".into()));
        }
        let mut edges: Vec<Edge> = edges.into_iter().collect();
        let mut sets = DisjointSets::new(n);
        for e in &edges {
            e.check(n)?;
            if !sets.union(e.u(), e.v()) {
                return Err(Error::NotAForest(format!(
                    "edge {e} closes a cycle or repeats"
                )));
            }
        }
        edges.sort_unstable();
        Ok(Self::from_sets(n, edges, &mut sets))
    }

    fn from_sets(n: usize, edges: Vec<Edge>, sets: &mut DisjointSets) -> Self {
        let mut by_root: Vec<Vec<usize>> = vec![Vec::new(); n];
        for v in 0..n {
            by_root[sets.find(v)].push(v);
        }
        let mut components: Vec<Vec<usize>> =
            by_root.into_iter().filter(|c| !c.is_empty()).collect();
        components.sort_by_key(|c| (c.len(), c[0]));
        let mut component_of = vec![0; n];
        for (i, c) in components.iter().enumerate() {
            for &v in c {
                component_of[v] = i;
            }
        }
        Self {
            n,
            edges,
            components,
            component_of,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    pub fn num_components(&self) -> usize {
        self.components.len()
    }

    /// Index of the component holding `v`.
    pub fn component_of(&self, v: usize) -> usize {
        self.component_of[v]
    }

    pub fn component_sizes(&self) -> Vec<usize> {
        self.components.iter().map(Vec::len).collect()
    }

    pub fn profile(&self) -> ProfileVector {
        ProfileVector(self.component_sizes())
    }

    /// The tree itself when the forest is connected.
    pub fn as_tree(&self) -> Option<LabeledTree> {
        (self.components.len() == 1)
            .then(|| LabeledTree::from_sorted_unchecked(self.n, self.edges.clone()))
    }

    /// Whether every edge of the forest belongs to `tree`.
    pub fn is_subforest_of(&self, tree: &LabeledTree) -> bool {
        self.n == tree.n() && self.edges.iter().all(|e| tree.contains_edge(e))
    }
}

impl fmt::Display for Forest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_edges(f, self.n, &self.edges)
    }
}

impl FromStr for Forest {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (n, edges) = parse_edges(s)?;
        Forest::new(n, edges)
    }
}

impl LabeledTree {
    /// The forest left after deleting `removed`, which must be a subset of the tree's edges.
    pub fn remove_edges(&self, removed: &[Edge]) -> Result<Forest> {
        if removed.iter().any(|e| !self.contains_edge(e)) {
            return Err(Error::NotSubset);
        }
        let mut kept = Vec::with_capacity(self.edges().len());
        let mut sets = DisjointSets::new(self.n());
        for e in self.edges() {
            if !removed.contains(e) {
                sets.union(e.u(), e.v());
                kept.push(*e);
            }
        }
        if kept.len() + removed.len() != self.edges().len() {
            return Err(Error::InvalidParameters(
                "removed edges contain duplicates".into(),
            ));
        }
        Ok(Forest::from_sets(self.n(), kept, &mut sets))
    }

    pub fn as_forest(&self) -> Forest {
        let mut sets = DisjointSets::new(self.n());
        for e in self.edges() {
            sets.union(e.u(), e.v());
        }
        Forest::from_sets(self.n(), self.edges().to_vec(), &mut sets)
    }
}

pub fn remove_edges(tree: &LabeledTree, removed: &[Edge]) -> Result<Forest> {
    tree.remove_edges(removed)
}

pub fn profile(forest: &Forest) -> ProfileVector {
    forest.profile()
}

/// Restricted growth strings: all set partitions of `[n]` into exactly `blocks` blocks.
pub fn set_partitions(n: usize, blocks: usize) -> Vec<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    if blocks == 0 || blocks > n {
        return out;
    }
    let mut label = vec![0usize; n];
    fn rec(
        i: usize,
        used: usize,
        n: usize,
        k: usize,
        label: &mut [usize],
        out: &mut Vec<Vec<Vec<usize>>>,
    ) {
        if n - i < k - used {
            return;
        }
        if i == n {
            let mut parts = vec![Vec::new(); k];
            for (v, &b) in label.iter().enumerate() {
                parts[b].push(v);
            }
            out.push(parts);
            return;
        }
        for b in 0..used.min(k) {
            label[i] = b;
            rec(i + 1, used, n, k, label, out);
        }
        if used < k {
            label[i] = used;
            rec(i + 1, used + 1, n, k, label, out);
        }
    }
    rec(0, 0, n, blocks, &mut label, &mut out);
    out
}

/// All spanning trees on the node set `block` (sorted), as edge lists.
fn block_trees(block: &[usize]) -> Vec<Vec<Edge>> {
    let k = block.len();
    if k == 1 {
        return vec![Vec::new()];
    }
    enumerate_trees(k)
        .map(|t| {
            t.edges()
                .iter()
                .map(|e| Edge::new_unchecked(block[e.u()], block[e.v()]))
                .collect()
        })
        .collect()
}

/// Every spanning forest of `[n]` with exactly `components` components.
pub fn enumerate_forests(n: usize, components: usize) -> Vec<Forest> {
    let mut out = Vec::new();
    for partition in set_partitions(n, components) {
        let per_block: Vec<Vec<Vec<Edge>>> = partition.iter().map(|b| block_trees(b)).collect();
        for choice in per_block.iter().multi_cartesian_product() {
            let edges: Vec<Edge> = choice.into_iter().flatten().copied().collect();
            out.push(Forest::new(n, edges).expect("block trees form a forest"));
        }
    }
    out
}

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::tree::{DisjointSets, Edge};

/// A spanning tree on the node set `[n]`, stored as its sorted canonical edge list.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LabeledTree {
    n: usize,
    edges: Vec<Edge>,
}

impl LabeledTree {
    /// Validates that `edges` form a spanning tree of `[n]`.
    pub fn new(n: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        if n == 0 {
            return Err(Error::NotATree("a tree needs at least one node".into()));
        }
        let mut edges: Vec<Edge> = edges.into_iter().collect();
        if edges.len() != n - 1 {
            return Err(Error::NotATree(format!(
                "{} edges given, a tree on {n} nodes has {}",
                edges.len(),
                n - 1
            )));
        }
        let mut sets = DisjointSets::new(n);
        for e in &edges {
            e.check(n)?;
            if !sets.union(e.u(), e.v()) {
                return Err(Error::NotATree(format!("edge {e} closes a cycle")));
            }
        }
        edges.sort_unstable();
        Ok(Self { n, edges })
    }

    /// Caller guarantees `edges` is a sorted spanning tree of `[n]`.
    pub(crate) fn from_sorted_unchecked(n: usize, edges: Vec<Edge>) -> Self {
        debug_assert_eq!(edges.len() + 1, n);
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        Self { n, edges }
    }

    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let edges = pairs
            .iter()
            .map(|&(a, b)| Edge::new(a, b))
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, edges)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn contains_edge(&self, e: &Edge) -> bool {
        self.edges.binary_search(e).is_ok()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for e in &self.edges {
            deg[e.u()] += 1;
            deg[e.v()] += 1;
        }
        deg
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.contains(v)).count()
    }

    pub fn leaves(&self) -> Vec<usize> {
        self.degrees()
            .into_iter()
            .enumerate()
            .filter_map(|(v, d)| (d == 1).then_some(v))
            .collect()
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        self.edges.iter().filter_map(|e| e.other(v)).collect()
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for e in &self.edges {
            adj[e.u()].push(e.v());
            adj[e.v()].push(e.u());
        }
        adj
    }

    /// Number of edges shared with `other` (sorted merge).
    pub fn shared_edges(&self, other: &LabeledTree) -> usize {
        let (mut i, mut j, mut shared) = (0, 0, 0);
        while i < self.edges.len() && j < other.edges.len() {
            match self.edges[i].cmp(&other.edges[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    shared += 1;
                    i += 1;
                    j += 1;
                }
            }
        }
        shared
    }

    /// Tree distance `n - 1 - |E1 ∩ E2|`.
    pub fn distance(&self, other: &LabeledTree) -> Result<usize> {
        if self.n != other.n {
            return Err(Error::NodeCountMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(self.n - 1 - self.shared_edges(other))
    }

    /// Bitmask over edge indices; available while `C(n,2) <= 64`, i.e. `n <= 11`.
    pub fn mask(&self) -> Option<u64> {
        if crate::tree::universe_size(self.n) > 64 {
            return None;
        }
        Some(
            self.edges
                .iter()
                .fold(0u64, |m, e| m | (1u64 << e.index_unchecked(self.n))),
        )
    }

    /// The tree obtained by deleting leaf `leaf`, with labels above it shifted down by one.
    pub fn remove_leaf(&self, leaf: usize) -> Result<LabeledTree> {
        if leaf >= self.n || self.degree(leaf) != 1 || self.n < 2 {
            return Err(Error::InvalidParameters(format!(
                "node {leaf} is not a leaf"
            )));
        }
        let relabel = |x: usize| if x > leaf { x - 1 } else { x };
        let mut edges: Vec<Edge> = self
            .edges
            .iter()
            .filter(|e| !e.contains(leaf))
            .map(|e| Edge::new_unchecked(relabel(e.u()), relabel(e.v())))
            .collect();
        edges.sort_unstable();
        Ok(LabeledTree::from_sorted_unchecked(self.n - 1, edges))
    }
}

/// Tree distance between two trees on the same node set.
pub fn tree_distance(a: &LabeledTree, b: &LabeledTree) -> Result<usize> {
    a.distance(b)
}

/// Star with hub `center`.
pub fn star(n: usize, center: usize) -> Result<LabeledTree> {
    if center >= n {
        return Err(crate::error::out_of_range(
            "center",
            center,
            format!("0..{n}"),
        ));
    }
    let edges = (0..n)
        .filter(|&v| v != center)
        .map(|v| Edge::new_unchecked(center, v));
    LabeledTree::new(n, edges)
}

/// Path visiting the nodes in `order`, which must be a permutation of `[n]`.
pub fn line(n: usize, order: &[usize]) -> Result<LabeledTree> {
    let mut seen = vec![false; n];
    if order.len() != n {
        return Err(Error::InvalidParameters(format!(
            "line order has {} entries, expected {n}",
            order.len()
        )));
    }
    for &v in order {
        if v >= n || std::mem::replace(&mut seen[v], true) {
            return Err(Error::InvalidParameters(format!(
                "line order is not a permutation of [{n}]"
            )));
        }
    }
    LabeledTree::new(n, order.windows(2).map(|w| Edge::new_unchecked(w[0], w[1])))
}

/// The path `0 - 1 - ... - (n-1)`.
pub fn identity_line(n: usize) -> LabeledTree {
    let order: Vec<usize> = (0..n).collect();
    line(n, &order).expect("identity is a permutation")
}

pub(crate) fn write_edges(f: &mut fmt::Formatter<'_>, n: usize, edges: &[Edge]) -> fmt::Result {
    write!(f, "n={n}; edges=")?;
    for (i, e) in edges.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{e}")?;
    }
    Ok(())
}

/// Parses `n=<n>; edges=u-v,...` into the node count and edge list.
pub(crate) fn parse_edges(s: &str) -> Result<(usize, Vec<Edge>)> {
    let mut n = None;
    let mut edges = None;
    for part in s.split(';') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        let (key, value) = part
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("expected `key=value`, got `{part}`")))?;
        match key.trim() {
            "n" => {
                n = Some(
                    value
                        .trim()
                        .parse::<usize>()
                        .map_err(|e| Error::Parse(format!("bad node count: {e}")))?,
                )
            }
            "edges" => {
                edges = Some(
                    value
                        .split(',')
                        .map(str::trim)
                        .filter(|x| !x.is_empty())
                        .map(str::parse::<Edge>)
                        .collect::<Result<Vec<_>>>()?,
                )
            }
            other => return Err(Error::Parse(format!("unknown key `{other}`"))),
        }
    }
    let n = n.ok_or_else(|| Error::Parse("missing `n=`".into()))?;
    Ok((n, edges.unwrap_or_default()))
}

impl fmt::Display for LabeledTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_edges(f, self.n, &self.edges)
    }
}

impl FromStr for LabeledTree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (n, edges) = parse_edges(s)?;
        LabeledTree::new(n, edges)
    }
}

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::tree::{tree_count_u128, Edge, LabeledTree};

/// A word of length `n - 2` over `[n]`, in bijection with the labeled trees on `[n]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PruferSequence {
    n: usize,
    word: Vec<usize>,
}

impl PruferSequence {
    pub fn new(n: usize, word: Vec<usize>) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidPrufer(format!("n = {n}, need n >= 2")));
        }
        if word.len() != n - 2 {
            return Err(Error::InvalidPrufer(format!(
                "length {} for n = {n}, expected {}",
                word.len(),
                n - 2
            )));
        }
        if let Some(&bad) = word.iter().find(|&&x| x >= n) {
            return Err(Error::InvalidPrufer(format!(
                "entry {bad} is not in [0, {n})"
            )));
        }
        Ok(Self { n, word })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// Smallest-leaf-first encoding.
    pub fn encode(tree: &LabeledTree) -> Result<Self> {
        let n = tree.n();
        if n < 2 {
            return Err(Error::InvalidPrufer(format!("n = {n}, need n >= 2")));
        }
        let adj = tree.adjacency();
        let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
        let mut removed = vec![false; n];
        let mut leaves: BinaryHeap<Reverse<usize>> =
            (0..n).filter(|&v| degree[v] == 1).map(Reverse).collect();
        let mut word = Vec::with_capacity(n - 2);
        while word.len() < n - 2 {
            let Reverse(leaf) = leaves.pop().expect("a tree always has a leaf");
            removed[leaf] = true;
            let parent = adj[leaf]
                .iter()
                .copied()
                .find(|&u| !removed[u])
                .expect("leaf has a live neighbor");
            word.push(parent);
            degree[parent] -= 1;
            if degree[parent] == 1 {
                leaves.push(Reverse(parent));
            }
        }
        Ok(Self { n, word })
    }

    pub fn decode(&self) -> LabeledTree {
        LabeledTree::from_sorted_unchecked(self.n, decode_edges(self.n, &self.word))
    }
}

/// Inverse of the encoding; `word` must be valid for `n >= 2`. Edges come back sorted.
pub(crate) fn decode_edges(n: usize, word: &[usize]) -> Vec<Edge> {
    let mut degree = vec![1usize; n];
    for &x in word {
        degree[x] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<usize>> =
        (0..n).filter(|&v| degree[v] == 1).map(Reverse).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &x in word {
        let Reverse(leaf) = leaves.pop().expect("valid word keeps a leaf available");
        edges.push(Edge::new_unchecked(leaf, x));
        degree[x] -= 1;
        if degree[x] == 1 {
            leaves.push(Reverse(x));
        }
    }
    let Reverse(a) = leaves.pop().expect("two leaves remain");
    let Reverse(b) = leaves.pop().expect("two leaves remain");
    edges.push(Edge::new_unchecked(a, b));
    edges.sort_unstable();
    edges
}

pub fn prufer_encode(tree: &LabeledTree) -> Result<PruferSequence> {
    PruferSequence::encode(tree)
}

pub fn prufer_decode(seq: &PruferSequence) -> LabeledTree {
    seq.decode()
}

impl fmt::Display for PruferSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("p=")?;
        for (i, x) in self.word.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl PruferSequence {
    /// Parses `p=w0 w1 ...`, prefix optional; the node count is `len + 2`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let body = s.strip_prefix("p=").unwrap_or(s);
        let word = body
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|x| !x.is_empty())
            .map(|x| {
                x.parse::<usize>()
                    .map_err(|e| Error::Parse(format!("bad entry `{x}`: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        let n = word.len() + 2;
        Self::new(n, word)
    }

    /// Parses a word with an explicit node count.
    pub fn parse_with_n(n: usize, s: &str) -> Result<Self> {
        let seq = Self::parse(s)?;
        Self::new(n, seq.word)
    }
}

impl FromStr for PruferSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

/// Iterator over every tree on `[n]` whose Prüfer word starts with `prefix`, in lexicographic word order.
#[derive(Debug, Clone)]
pub struct TreeIter {
    n: usize,
    prefix_len: usize,
    word: Vec<usize>,
    state: IterState,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum IterState {
    Single,
    Running,
    Done,
}

impl Iterator for TreeIter {
    type Item = LabeledTree;

    fn next(&mut self) -> Option<LabeledTree> {
        match self.state {
            IterState::Done => None,
            IterState::Single => {
                self.state = IterState::Done;
                Some(if self.n == 1 {
                    LabeledTree::from_sorted_unchecked(1, Vec::new())
                } else {
                    LabeledTree::from_sorted_unchecked(self.n, decode_edges(self.n, &self.word))
                })
            }
            IterState::Running => {
                let tree =
                    LabeledTree::from_sorted_unchecked(self.n, decode_edges(self.n, &self.word));
                if !advance(&mut self.word[self.prefix_len..], self.n) {
                    self.state = IterState::Done;
                }
                Some(tree)
            }
        }
    }
}

/// Odometer increment; returns false after the last word.
fn advance(word: &mut [usize], n: usize) -> bool {
    for x in word.iter_mut().rev() {
        *x += 1;
        if *x < n {
            return true;
        }
        *x = 0;
    }
    false
}

/// All `n^{n-2}` labeled trees on `[n]`, ordered by Prüfer word.
pub fn enumerate_trees(n: usize) -> TreeIter {
    enumerate_trees_with_prefix(n, &[]).expect("empty prefix is always valid")
}

/// The trees whose Prüfer word begins with `prefix`.
pub fn enumerate_trees_with_prefix(n: usize, prefix: &[usize]) -> Result<TreeIter> {
    if n == 0 {
        return Err(crate::error::out_of_range("n", 0, "n >= 1"));
    }
    let len = n.saturating_sub(2);
    if prefix.len() > len || prefix.iter().any(|&x| x >= n) {
        return Err(Error::InvalidPrufer(format!(
            "prefix {prefix:?} is invalid for n = {n}"
        )));
    }
    let mut word = vec![0; len];
    word[..prefix.len()].copy_from_slice(prefix);
    let state = if prefix.len() == len {
        IterState::Single
    } else {
        IterState::Running
    };
    Ok(TreeIter {
        n,
        prefix_len: prefix.len(),
        word,
        state,
    })
}

/// The Prüfer word of rank `index` in lexicographic order.
pub fn word_at(n: usize, mut index: u128) -> Result<Vec<usize>> {
    let total =
        tree_count_u128(n).ok_or_else(|| Error::InvalidParameters(format!("n = {n} too large")))?;
    if n < 2 || index >= total {
        return Err(crate::error::out_of_range(
            "tree index",
            index.min(i64::MAX as u128) as i64,
            format!("0..{total}"),
        ));
    }
    let mut word = vec![0; n - 2];
    for x in word.iter_mut().rev() {
        *x = (index % n as u128) as usize;
        index /= n as u128;
    }
    Ok(word)
}

/// The tree of rank `index` in enumeration order.
pub fn tree_at(n: usize, index: u128) -> Result<LabeledTree> {
    if n == 1 && index == 0 {
        return Ok(LabeledTree::from_sorted_unchecked(1, Vec::new()));
    }
    let word = word_at(n, index)?;
    Ok(LabeledTree::from_sorted_unchecked(
        n,
        decode_edges(n, &word),
    ))
}

/// Prüfer prefixes splitting the enumeration into at most `n^2` disjoint chunks, in order.
pub fn partition_prefixes(n: usize) -> Vec<Vec<usize>> {
    let depth = n.saturating_sub(2).min(2);
    let mut out = vec![Vec::new()];
    for _ in 0..depth {
        out = out
            .into_iter()
            .flat_map(|p: Vec<usize>| {
                (0..n).map(move |x| {
                    let mut q = p.clone();
                    q.push(x);
                    q
                })
            })
            .collect();
    }
    out
}

/// Applies `f` to every tree on `[n]` in parallel; the output keeps enumeration order.
pub fn par_map_trees<R, F>(n: usize, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(&LabeledTree) -> R + Sync,
{
    partition_prefixes(n)
        .into_par_iter()
        .flat_map_iter(|prefix| {
            enumerate_trees_with_prefix(n, &prefix)
                .expect("generated prefixes are valid")
                .map(|t| f(&t))
                .collect::<Vec<_>>()
        })
        .collect()
}

/// Parallel fold over every tree on `[n]`: each prefix chunk folds from `init()`, then chunks are merged.
pub fn par_fold_trees<A, I, F, M>(n: usize, init: I, fold: F, merge: M) -> A
where
    A: Send,
    I: Fn() -> A + Sync,
    F: Fn(A, &LabeledTree) -> A + Sync,
    M: Fn(A, A) -> A + Sync,
{
    let parts: Vec<A> = partition_prefixes(n)
        .into_par_iter()
        .map(|prefix| {
            enumerate_trees_with_prefix(n, &prefix)
                .expect("generated prefixes are valid")
                .fold(init(), |acc, t| fold(acc, &t))
        })
        .collect();
    parts.into_iter().fold(init(), merge)
}

/// Collects all trees on `[n]` in enumeration order, using parallel decoding.
pub fn collect_trees(n: usize) -> Vec<LabeledTree> {
    par_map_trees(n, LabeledTree::clone)
}

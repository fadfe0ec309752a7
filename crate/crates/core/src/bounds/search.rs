use serde::Serialize;

use crate::codes::TreeCode;
use crate::error::{Error, Result};
use crate::guard::Guard;
use crate::tree::{collect_trees, LabeledTree};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SearchMode {
    /// Maximum clique by branch and bound.
    Exact,
    /// First fit in enumeration order.
    Greedy,
}

pub const EXACT_MAX_N: usize = 6;

/// Dense bitset rows for an undirected graph.
#[derive(Debug, Clone)]
pub struct BitGraph {
    size: usize,
    words: usize,
    rows: Vec<u64>,
}

impl BitGraph {
    pub fn new(size: usize) -> Self {
        let words = size.div_ceil(64);
        Self {
            size,
            words,
            rows: vec![0; size * words],
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn add_edge(&mut self, a: usize, b: usize) {
        self.rows[a * self.words + b / 64] |= 1 << (b % 64);
        self.rows[b * self.words + a / 64] |= 1 << (a % 64);
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.rows[a * self.words + b / 64] >> (b % 64) & 1 == 1
    }

    fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }
}

fn first_bit(set: &[u64]) -> Option<usize> {
    set.iter()
        .enumerate()
        .find(|(_, &w)| w != 0)
        .map(|(i, &w)| i * 64 + w.trailing_zeros() as usize)
}

fn is_empty(set: &[u64]) -> bool {
    set.iter().all(|&w| w == 0)
}

struct Search<'a> {
    graph: &'a BitGraph,
    current: Vec<usize>,
    best: Vec<usize>,
}

impl Search<'_> {
    /// Greedy sequential coloring of `candidates`: vertices in coloring order with their color bound.
    fn color(&self, candidates: &[u64]) -> Vec<(usize, usize)> {
        let mut uncolored = candidates.to_vec();
        let mut order = Vec::new();
        let mut color = 0;
        while !is_empty(&uncolored) {
            color += 1;
            let mut q = uncolored.clone();
            while let Some(v) = first_bit(&q) {
                uncolored[v / 64] &= !(1 << (v % 64));
                q[v / 64] &= !(1 << (v % 64));
                for (qw, rw) in q.iter_mut().zip(self.graph.row(v)) {
                    *qw &= !rw;
                }
                order.push((v, color));
            }
        }
        order
    }

    fn expand(&mut self, mut candidates: Vec<u64>) {
        let order = self.color(&candidates);
        for &(v, color) in order.iter().rev() {
            if self.current.len() + color <= self.best.len() {
                return;
            }
            self.current.push(v);
            let next: Vec<u64> = candidates
                .iter()
                .zip(self.graph.row(v))
                .map(|(c, r)| c & r)
                .collect();
            if is_empty(&next) {
                if self.current.len() > self.best.len() {
                    self.best = self.current.clone();
                }
            } else {
                self.expand(next);
            }
            self.current.pop();
            candidates[v / 64] &= !(1 << (v % 64));
        }
    }
}

/// A maximum clique, sorted; deterministic for a given graph.
pub fn max_clique(graph: &BitGraph) -> Vec<usize> {
    let mut all = vec![0u64; graph.words];
    for v in 0..graph.size {
        all[v / 64] |= 1 << (v % 64);
    }
    let mut search = Search {
        graph,
        current: Vec::new(),
        best: Vec::new(),
    };
    if graph.size > 0 {
        search.expand(all);
    }
    let mut best = search.best;
    best.sort_unstable();
    best
}

fn distance_graph(trees: &[LabeledTree], d: usize) -> BitGraph {
    let mut g = BitGraph::new(trees.len());
    let masks: Option<Vec<u64>> = trees.iter().map(LabeledTree::mask).collect();
    for i in 0..trees.len() {
        for j in i + 1..trees.len() {
            let dist = match &masks {
                Some(m) => trees[i].n() - 1 - (m[i] & m[j]).count_ones() as usize,
                None => trees[i].distance(&trees[j]).expect("same n"),
            };
            if dist >= d {
                g.add_edge(i, j);
            }
        }
    }
    g
}

/// Largest code found with minimum distance `d`; exact mode is a true maximum.
pub fn max_code_search(n: usize, d: usize, mode: SearchMode, guard: &Guard) -> Result<TreeCode> {
    if n == 0 || d == 0 || d > n {
        return Err(crate::error::out_of_range("d", d, format!("1..={n}")));
    }
    guard.check_trees(n)?;
    let trees = collect_trees(n);
    let chosen: Vec<LabeledTree> = match mode {
        SearchMode::Exact => {
            if n > EXACT_MAX_N {
                return Err(Error::InvalidParameters(format!(
                    "exact search supports n <= {EXACT_MAX_N}, got {n}"
                )));
            }
            let g = distance_graph(&trees, d);
            max_clique(&g)
                .into_iter()
                .map(|i| trees[i].clone())
                .collect()
        }
        SearchMode::Greedy => {
            let mut chosen: Vec<LabeledTree> = Vec::new();
            for t in trees {
                if chosen.iter().all(|c| c.distance(&t).expect("same n") >= d) {
                    chosen.push(t);
                }
            }
            chosen
        }
    };
    let code = TreeCode::new(n, d, chosen)?;
    crate::codes::require_certified(&code)?;
    Ok(code)
}

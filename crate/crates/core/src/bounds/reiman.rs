use std::collections::VecDeque;

use rand::Rng;

use crate::codes::TreeCode;
use crate::tree::{tree_at, tree_count_u128, universe_size, Edge, Forest};

/// `|E|^2 - |U||E| - |V||U|(|V| - 1) <= 0`.
pub fn reiman_holds(u_size: u64, v_size: u64, edge_count: u64) -> bool {
    let (u, v, e) = (u_size as i128, v_size as i128, edge_count as i128);
    e * e - u * e - v * u * (v - 1) <= 0
}

/// Bipartite graph with parts `U = 0..u_size` and `V = 0..v_size`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteGraph {
    pub u_size: usize,
    pub v_size: usize,
    pub edges: Vec<(usize, usize)>,
}

impl BipartiteGraph {
    /// Length of the shortest cycle, if any.
    pub fn girth(&self) -> Option<usize> {
        let total = self.u_size + self.v_size;
        let mut adj = vec![Vec::new(); total];
        for &(u, v) in &self.edges {
            adj[u].push(self.u_size + v);
            adj[self.u_size + v].push(u);
        }
        let mut best: Option<usize> = None;
        for root in 0..total {
            let mut dist = vec![usize::MAX; total];
            let mut parent = vec![usize::MAX; total];
            dist[root] = 0;
            let mut queue = VecDeque::from([root]);
            while let Some(x) = queue.pop_front() {
                for &y in &adj[x] {
                    if dist[y] == usize::MAX {
                        dist[y] = dist[x] + 1;
                        parent[y] = x;
                        queue.push_back(y);
                    } else if parent[x] != y {
                        let len = dist[x] + dist[y] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    /// Whether the girth-at-least-six and `|V| <= |U|` premises both hold.
    pub fn premise_holds(&self) -> bool {
        self.v_size <= self.u_size && self.girth().is_none_or(|g| g >= 6)
    }

    pub fn reiman_holds(&self) -> bool {
        reiman_holds(
            self.u_size as u64,
            self.v_size as u64,
            self.edges.len() as u64,
        )
    }
}

fn incidence(n: usize, edge_sets: impl Iterator<Item = Vec<Edge>>) -> BipartiteGraph {
    let mut edges = Vec::new();
    let mut v_size = 0;
    for (v, set) in edge_sets.enumerate() {
        v_size = v + 1;
        edges.extend(set.iter().map(|e| (e.index_unchecked(n), v)));
    }
    BipartiteGraph {
        u_size: universe_size(n),
        v_size,
        edges,
    }
}

/// Codeword-to-edge incidence graph: `U` is every edge of the complete graph, `V` the codewords.
pub fn code_incidence_graph(code: &TreeCode) -> BipartiteGraph {
    incidence(
        code.n(),
        code.codewords().iter().map(|t| t.edges().to_vec()),
    )
}

pub fn forest_incidence_graph(n: usize, forests: &[Forest]) -> BipartiteGraph {
    incidence(n, forests.iter().map(|f| f.edges().to_vec()))
}

/// Greedy random family of two-component forests whose edge sets pairwise share at most one edge.
pub fn sample_pairwise_family<R: Rng>(n: usize, attempts: usize, rng: &mut R) -> Vec<Forest> {
    let trees = tree_count_u128(n).expect("small n");
    let mut family: Vec<Forest> = Vec::new();
    for _ in 0..attempts {
        let tree = tree_at(n, rng.gen_range(0..trees)).expect("index in range");
        let cut = tree.edges()[rng.gen_range(0..n - 1)];
        let forest = tree.remove_edges(&[cut]).expect("edge of the tree");
        let compatible = family.iter().all(|f| {
            f.edges()
                .iter()
                .filter(|e| forest.edges().binary_search(e).is_ok())
                .count()
                <= 1
        });
        if compatible {
            family.push(forest);
        }
    }
    family
}

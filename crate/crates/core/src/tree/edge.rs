use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Undirected edge `<u, v>` stored canonically with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    u: usize,
    v: usize,
}

impl Edge {
    /// Builds the canonical form of `<a, b>`. Loops are rejected.
    pub fn new(a: usize, b: usize) -> Result<Self> {
        if a == b {
            return Err(Error::InvalidEdge { u: a, v: b, n: 0 });
        }
        Ok(Self {
            u: a.min(b),
            v: a.max(b),
        })
    }

    pub(crate) fn new_unchecked(a: usize, b: usize) -> Self {
        debug_assert_ne!(a, b);
        Self {
            u: a.min(b),
            v: a.max(b),
        }
    }

    pub fn u(&self) -> usize {
        self.u
    }

    pub fn v(&self) -> usize {
        self.v
    }

    pub fn endpoints(&self) -> (usize, usize) {
        (self.u, self.v)
    }

    pub fn contains(&self, x: usize) -> bool {
        self.u == x || self.v == x
    }

    /// The endpoint opposite to `x`, if `x` is an endpoint.
    pub fn other(&self, x: usize) -> Option<usize> {
        if x == self.u {
            Some(self.v)
        } else if x == self.v {
            Some(self.u)
        } else {
            None
        }
    }

    pub fn check(&self, n: usize) -> Result<()> {
        if self.v >= n {
            Err(Error::InvalidEdge {
                u: self.u,
                v: self.v,
                n,
            })
        } else {
            Ok(())
        }
    }

    /// Lexicographic rank of this edge among the `C(n,2)` edges of the complete graph.
    pub fn index(&self, n: usize) -> Result<usize> {
        self.check(n)?;
        Ok(self.index_unchecked(n))
    }

    #[inline]
    pub(crate) fn index_unchecked(&self, n: usize) -> usize {
        self.u * n - self.u * (self.u + 1) / 2 + (self.v - self.u - 1)
    }

    /// Inverse of [`Edge::index`].
    pub fn from_index(index: usize, n: usize) -> Result<Self> {
        if index >= universe_size(n) {
            return Err(crate::error::out_of_range(
                "edge index",
                index,
                format!("0..{}", universe_size(n)),
            ));
        }
        let mut rest = index;
        for u in 0..n {
            let row = n - u - 1;
            if rest < row {
                return Ok(Self { u, v: u + 1 + rest });
            }
            rest -= row;
        }
        unreachable!("index bounded by C(n,2)")
    }
}

/// Number of edges of the complete graph on `n` nodes.
pub fn universe_size(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Lexicographic rank of `e` for node count `n`.
pub fn edge_index(e: Edge, n: usize) -> Result<usize> {
    e.index(n)
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

impl FromStr for Edge {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (a, b) = s
            .trim()
            .split_once('-')
            .ok_or_else(|| Error::Parse(format!("expected `u-v`, got `{s}`")))?;
        let parse = |x: &str| {
            x.trim()
                .parse::<usize>()
                .map_err(|e| Error::Parse(format!("bad node `{x}`: {e}")))
        };
        Edge::new(parse(a)?, parse(b)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_order() {
        let e = Edge::new(3, 1).unwrap();
        assert_eq!(e.endpoints(), (1, 3));
        assert_eq!(e, Edge::new(1, 3).unwrap());
        assert!(Edge::new(2, 2).is_err());
    }

    #[test]
    fn index_examples() {
        assert_eq!(edge_index(Edge::new(0, 1).unwrap(), 4).unwrap(), 0);
        assert_eq!(edge_index(Edge::new(2, 3).unwrap(), 4).unwrap(), 5);
        // 01,02,03,04,12,13: rank 5 in lexicographic order.
        assert_eq!(edge_index(Edge::new(1, 3).unwrap(), 5).unwrap(), 5);
        assert!(edge_index(Edge::new(1, 4).unwrap(), 4).is_err());
    }

    #[test]
    fn index_matches_lexicographic_enumeration() {
        for n in 2..12 {
            let mut pairs = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    pairs.push(Edge::new(u, v).unwrap());
                }
            }
            assert_eq!(pairs.len(), universe_size(n));
            for (rank, e) in pairs.iter().enumerate() {
                assert_eq!(e.index(n).unwrap(), rank);
                assert_eq!(Edge::from_index(rank, n).unwrap(), *e);
            }
            assert!(Edge::from_index(pairs.len(), n).is_err());
        }
    }

    #[test]
    fn text_round_trip() {
        let e: Edge = "4-2".parse().unwrap();
        assert_eq!(e.to_string(), "2-4");
        assert!("4".parse::<Edge>().is_err());
    }
}

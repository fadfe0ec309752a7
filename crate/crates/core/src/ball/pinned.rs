use itertools::Itertools;
use num_bigint::BigUint;
use num_traits::Zero;
use serde::Serialize;

use crate::combinatorics::binomial;
use crate::error::{out_of_range, Error, Result};
use crate::report::big_string;
use crate::tree::{DisjointSets, LabeledTree};

/// A tree, a radius and a list of pinned nodes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PinnedQuery {
    pub tree: LabeledTree,
    pub t: usize,
    pub pins: Vec<usize>,
}

impl PinnedQuery {
    pub fn new(tree: LabeledTree, t: usize, pins: Vec<usize>) -> Result<Self> {
        let n = tree.n();
        if t >= n {
            return Err(out_of_range("t", t, format!("0..{n}")));
        }
        if pins.len() > t + 1 {
            return Err(out_of_range(
                "pin count",
                pins.len(),
                format!("0..={}", t + 1),
            ));
        }
        if let Some(&p) = pins.iter().find(|&&p| p >= n) {
            return Err(out_of_range("pin", p, format!("0..{n}")));
        }
        Ok(Self { tree, t, pins })
    }
}

/// Sum over `t`-edge deletions separating all pins of the product of the unpinned component sizes.
/// Zero whenever the arguments leave no qualifying deletion.
pub(crate) fn pinned_sum(tree: &LabeledTree, t: i64, pins: &[usize]) -> BigUint {
    let n = tree.n();
    let edges = tree.edges();
    if t < 0 || t as usize > edges.len() || pins.len() > t as usize + 1 {
        return BigUint::zero();
    }
    let t = t as usize;
    let mut total = BigUint::zero();
    let mut pinned_root = vec![false; n];
    let mut size = vec![0usize; n];
    for removed in (0..edges.len()).combinations(t) {
        let mut sets = DisjointSets::new(n);
        let mut r = removed.iter().peekable();
        for (i, e) in edges.iter().enumerate() {
            if r.peek() == Some(&&i) {
                r.next();
            } else {
                sets.union(e.u(), e.v());
            }
        }
        pinned_root.iter_mut().for_each(|x| *x = false);
        size.iter_mut().for_each(|x| *x = 0);
        let mut separated = true;
        for &p in pins {
            let root = sets.find(p);
            if std::mem::replace(&mut pinned_root[root], true) {
                separated = false;
                break;
            }
        }
        if !separated {
            continue;
        }
        for v in 0..n {
            size[sets.find(v)] += 1;
        }
        let product: BigUint = (0..n)
            .filter(|&root| size[root] > 0 && !pinned_root[root])
            .map(|root| BigUint::from(size[root]))
            .product();
        total += product;
    }
    total
}

/// Brute-force pinned product sum.
pub fn pinned_product(q: &PinnedQuery) -> BigUint {
    pinned_sum(&q.tree, q.t as i64, &q.pins)
}

/// The bound `C(n + t - l, 2t + 1 - l)`.
pub fn pinned_bound(n: usize, t: usize, pins: usize) -> BigUint {
    binomial((n + t - pins) as u64, (2 * t + 1 - pins) as u64)
}

/// Whether the pinned product respects its binomial bound.
pub fn pinned_bound_check(q: &PinnedQuery) -> bool {
    pinned_product(q) <= pinned_bound(q.tree.n(), q.t, q.pins.len())
}

/// Outcome of the leaf-deletion recursion for the pinned product.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PinnedRecursion {
    pub leaf: usize,
    pub neighbor: usize,
    pub leaf_pinned: bool,
    /// Right-hand side terms on the smaller tree, in order.
    #[serde(skip)]
    pub terms: Vec<BigUint>,
    #[serde(serialize_with = "big_string")]
    pub lhs: BigUint,
    #[serde(serialize_with = "big_string")]
    pub rhs: BigUint,
    pub equal: bool,
}

/// Evaluates the pinned product on the tree and on the tree with `leaf` deleted.
pub fn pinned_recursion_check(q: &PinnedQuery, leaf: usize) -> Result<PinnedRecursion> {
    let tree = &q.tree;
    if tree.n() < 2 || leaf >= tree.n() || tree.degree(leaf) != 1 {
        return Err(Error::InvalidParameters(format!(
            "node {leaf} is not a leaf"
        )));
    }
    if !q.pins.iter().all_unique() {
        return Err(Error::InvalidParameters(
            "the recursion assumes distinct pins".into(),
        ));
    }
    let neighbor = tree.neighbors(leaf)[0];
    let smaller = tree.remove_leaf(leaf)?;
    let relabel = |x: usize| if x > leaf { x - 1 } else { x };
    let y = relabel(neighbor);
    let t = q.t as i64;
    let leaf_pinned = q.pins.contains(&leaf);
    let terms = if leaf_pinned {
        let moved: Vec<usize> = q
            .pins
            .iter()
            .map(|&p| if p == leaf { y } else { relabel(p) })
            .collect();
        let dropped: Vec<usize> = q
            .pins
            .iter()
            .filter(|&&p| p != leaf)
            .map(|&p| relabel(p))
            .collect();
        vec![
            pinned_sum(&smaller, t, &moved),
            pinned_sum(&smaller, t - 1, &dropped),
        ]
    } else {
        let pins: Vec<usize> = q.pins.iter().map(|&p| relabel(p)).collect();
        let mut extended = pins.clone();
        extended.push(y);
        vec![
            pinned_sum(&smaller, t, &pins),
            pinned_sum(&smaller, t, &extended),
            pinned_sum(&smaller, t - 1, &pins),
        ]
    };
    let lhs = pinned_product(q);
    let rhs: BigUint = terms.iter().sum();
    Ok(PinnedRecursion {
        leaf,
        neighbor,
        leaf_pinned,
        equal: lhs == rhs,
        terms,
        lhs,
        rhs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ball::identities::profile_product_sum;
    use crate::tree::{collect_trees, identity_line, star};

    fn big(x: u64) -> BigUint {
        BigUint::from(x)
    }

    fn q(tree: LabeledTree, t: usize, pins: &[usize]) -> PinnedQuery {
        PinnedQuery::new(tree, t, pins.to_vec()).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(pinned_product(&q(star(4, 0).unwrap(), 1, &[])), big(9));
        assert_eq!(pinned_product(&q(identity_line(5), 1, &[2, 2])), big(0));
        for pins in [vec![], vec![3], vec![4, 0], vec![1, 2, 3, 4, 0]] {
            assert_eq!(pinned_product(&q(identity_line(5), 4, &pins)), big(1));
        }
        assert!(PinnedQuery::new(identity_line(4), 1, vec![0, 1, 2]).is_err());
    }

    #[test]
    fn unpinned_sum_is_the_profile_sum() {
        for n in 1..=6 {
            for tree in collect_trees(n) {
                for t in 0..n {
                    let unscaled = pinned_product(&q(tree.clone(), t, &[]));
                    let expected = profile_product_sum(&tree, t).unwrap();
                    let scaled = if t == 0 {
                        unscaled == big(n as u64) && expected == big(1)
                    } else {
                        unscaled * BigUint::from(n).pow(t as u32 - 1) == expected
                    };
                    assert!(scaled);
                }
            }
        }
    }

    #[test]
    fn full_pinning_counts_forests() {
        let tree: LabeledTree = "n=6; edges=0-1,1-2,1-3,3-4,3-5".parse().unwrap();
        for t in 0..6 {
            for pins in (0..6).combinations(t + 1) {
                // Oracle: count deletions putting every pin in its own component.
                let count = crate::ball::forest_ball::forest_ball(&tree, t)
                    .unwrap()
                    .iter()
                    .filter(|f| pins.iter().map(|&p| f.component_of(p)).all_unique())
                    .count();
                assert_eq!(
                    pinned_product(&q(tree.clone(), t, &pins)),
                    big(count as u64)
                );
            }
        }
    }

    #[test]
    fn pin_order_does_not_matter() {
        let tree: LabeledTree = "n=7; edges=0-1,1-2,2-3,1-4,4-5,4-6".parse().unwrap();
        for t in 1..4 {
            for pins in (0..7).combinations(2) {
                let a = pinned_product(&q(tree.clone(), t, &pins));
                let rev: Vec<usize> = pins.iter().rev().copied().collect();
                assert_eq!(a, pinned_product(&q(tree.clone(), t, &rev)));
            }
        }
    }

    /// Ten nodes, leaf 5 hanging off 6, with 7 pinned at radius 4.
    fn figure_tree() -> LabeledTree {
        LabeledTree::from_pairs(
            10,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (3, 6),
                (5, 6),
                (6, 7),
                (7, 8),
                (7, 9),
            ],
        )
        .unwrap()
    }

    #[test]
    fn figure_instance_three_terms() {
        let query = q(figure_tree(), 4, &[7]);
        let r = pinned_recursion_check(&query, 5).unwrap();
        assert_eq!(r.neighbor, 6);
        assert!(!r.leaf_pinned);
        assert_eq!(r.terms.len(), 3);
        assert!(r.equal);
        // Independent evaluation of the three terms on the nine-node tree.
        let smaller = figure_tree().remove_leaf(5).unwrap();
        let f = |t: usize, pins: &[usize]| pinned_product(&q(smaller.clone(), t, pins));
        assert_eq!(r.lhs, f(4, &[6]) + f(4, &[6, 5]) + f(3, &[6]));
    }

    #[test]
    fn leaf_recursion_exhaustive_small() {
        for n in 2..=5 {
            for tree in collect_trees(n) {
                for leaf in tree.leaves() {
                    for t in 0..n {
                        for l in 0..=t + 1 {
                            for pins in (0..n).combinations(l) {
                                let r = pinned_recursion_check(&q(tree.clone(), t, &pins), leaf)
                                    .unwrap();
                                assert!(r.equal, "{tree} t={t} pins={pins:?} leaf={leaf}");
                                if pins.contains(&leaf) {
                                    let mut last = pins.clone();
                                    last.retain(|&p| p != leaf);
                                    last.push(leaf);
                                    let r =
                                        pinned_recursion_check(&q(tree.clone(), t, &last), leaf)
                                            .unwrap();
                                    assert!(r.equal && r.terms.len() == 2);
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn recursion_rejects_non_leaves() {
        assert!(pinned_recursion_check(&q(identity_line(4), 1, &[]), 1).is_err());
    }

    #[test]
    fn bound_examples() {
        for n in 1..=8 {
            for t in 0..n {
                let line = q(identity_line(n), t, &[]);
                assert_eq!(pinned_product(&line), pinned_bound(n, t, 0));
            }
        }
        let s = q(star(5, 0).unwrap(), 1, &[]);
        assert_eq!(pinned_product(&s), big(16));
        assert_eq!(pinned_bound(5, 1, 0), big(20));
        assert!(pinned_bound_check(&s));
    }

    #[test]
    fn bound_holds_exhaustively_on_six_nodes() {
        for tree in collect_trees(6) {
            for t in 0..4 {
                for l in 0..=t + 1 {
                    for pins in (0..6).combinations(l) {
                        assert!(pinned_bound_check(&q(tree.clone(), t, &pins)));
                    }
                }
            }
        }
    }
}

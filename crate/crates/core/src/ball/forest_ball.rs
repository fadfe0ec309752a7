use itertools::Itertools;
use num_bigint::BigUint;

use crate::combinatorics::scale_n_pow_t_minus_1;
use crate::error::{out_of_range, Error, Result};
use crate::tree::{enumerate_trees, Edge, Forest, LabeledTree, ProfileVector};

fn check_radius(tree: &LabeledTree, t: usize) -> Result<()> {
    if t >= tree.n() {
        return Err(out_of_range("t", t, format!("0..={}", tree.n() - 1)));
    }
    Ok(())
}

/// Every forest obtained by deleting `t` edges of `tree`, in lexicographic order of the deleted set.
pub fn forest_ball(tree: &LabeledTree, t: usize) -> Result<Vec<Forest>> {
    check_radius(tree, t)?;
    Ok(tree
        .edges()
        .iter()
        .copied()
        .combinations(t)
        .map(|removed| {
            tree.remove_edges(&removed)
                .expect("subset of the tree's edges")
        })
        .collect())
}

/// Profiles of the forest ball, sorted, with repetitions.
pub fn profile_multiset(tree: &LabeledTree, t: usize) -> Result<Vec<ProfileVector>> {
    let mut out: Vec<ProfileVector> = forest_ball(tree, t)?.iter().map(Forest::profile).collect();
    out.sort();
    Ok(out)
}

/// `n^{t-1} * prod |C_i|` for a forest with `t + 1` components; 1 when connected.
pub fn forest_ball_size_formula(forest: &Forest) -> BigUint {
    let t = forest.num_components() as u64 - 1;
    scale_n_pow_t_minus_1(forest.n() as u64, t, forest.profile().product())
}

fn check_shape(forest: &Forest, shape: &LabeledTree) -> Result<()> {
    if shape.n() != forest.num_components() {
        return Err(Error::InvalidParameters(format!(
            "shape tree has {} nodes but the forest has {} components",
            shape.n(),
            forest.num_components()
        )));
    }
    Ok(())
}

/// Number of completions of `forest` whose contracted tree is `shape`: `prod |C_i|^{deg(i)}`.
pub fn p1_count(forest: &Forest, shape: &LabeledTree) -> Result<BigUint> {
    check_shape(forest, shape)?;
    Ok(forest
        .component_sizes()
        .iter()
        .zip(shape.degrees())
        .map(|(&c, d)| BigUint::from(c).pow(d as u32))
        .product())
}

/// `prod |C_i|^{deg(i) - 1}`; needs at least two components.
pub fn p2_count(forest: &Forest, shape: &LabeledTree) -> Result<BigUint> {
    check_shape(forest, shape)?;
    if shape.n() < 2 {
        return Err(Error::InvalidParameters("p2 needs t >= 1".into()));
    }
    Ok(forest
        .component_sizes()
        .iter()
        .zip(shape.degrees())
        .map(|(&c, d)| BigUint::from(c).pow(d as u32 - 1))
        .product())
}

/// Completions of `forest` that connect its components along the edges of `shape`.
pub fn completions_along(forest: &Forest, shape: &LabeledTree) -> Result<Vec<LabeledTree>> {
    check_shape(forest, shape)?;
    let comps = forest.components();
    if shape.edges().is_empty() {
        return Ok(vec![LabeledTree::new(forest.n(), forest.edges().to_vec())?]);
    }
    let choices: Vec<Vec<Edge>> = shape
        .edges()
        .iter()
        .map(|e| {
            comps[e.u()]
                .iter()
                .cartesian_product(comps[e.v()].iter())
                .map(|(&a, &b)| Edge::new_unchecked(a, b))
                .collect()
        })
        .collect();
    Ok(choices
        .iter()
        .multi_cartesian_product()
        .map(|added| {
            let edges = forest
                .edges()
                .iter()
                .copied()
                .chain(added.into_iter().copied());
            LabeledTree::new(forest.n(), edges).expect("completion along a shape tree is a tree")
        })
        .collect())
}

/// All trees containing `forest`, sorted.
pub fn forest_completions(forest: &Forest) -> Vec<LabeledTree> {
    let mut out: Vec<LabeledTree> = enumerate_trees(forest.num_components())
        .flat_map(|shape| completions_along(forest, &shape).expect("shape sized to the forest"))
        .collect();
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use std::collections::HashSet;

    use super::*;
    use crate::tree::{collect_trees, enumerate_forests, identity_line, star};

    fn big(x: u64) -> BigUint {
        BigUint::from(x)
    }

    // Oracle: filter every tree on [n] by edge containment.
    fn completions_oracle(forest: &Forest) -> Vec<LabeledTree> {
        let mut out: Vec<LabeledTree> = collect_trees(forest.n())
            .into_iter()
            .filter(|t| forest.is_subforest_of(t))
            .collect();
        out.sort();
        out
    }

    #[test]
    fn forest_ball_sizes() {
        let t = identity_line(5);
        assert_eq!(forest_ball(&t, 0).unwrap(), vec![t.as_forest()]);
        for tree in collect_trees(5) {
            assert_eq!(forest_ball(&tree, 2).unwrap().len(), 6);
        }
        let s = star(4, 0).unwrap();
        let ball = forest_ball(&s, 1).unwrap();
        assert_eq!(ball.len(), 3);
        assert!(ball.iter().all(|f| f.profile().sizes() == [1, 3]));
        assert!(forest_ball(&s, 4).is_err());
    }

    #[test]
    fn profile_multiset_examples() {
        for n in 3..=7 {
            let ps = profile_multiset(&star(n, 0).unwrap(), 1).unwrap();
            assert_eq!(ps.len(), n - 1);
            assert!(ps.iter().all(|p| p.sizes() == [1, n - 1]));
        }
        let line: Vec<Vec<usize>> = profile_multiset(&identity_line(5), 1)
            .unwrap()
            .iter()
            .map(|p| p.sizes().to_vec())
            .collect();
        assert_eq!(line, vec![vec![1, 4], vec![1, 4], vec![2, 3], vec![2, 3]]);
        let all = profile_multiset(&identity_line(5), 4).unwrap();
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].sizes(), &[1, 1, 1, 1, 1]);
    }

    #[test]
    fn completion_examples() {
        let t = identity_line(4);
        assert_eq!(forest_completions(&t.as_forest()), vec![t]);
        let f: Forest = "n=4; edges=1-2,2-3".parse().unwrap();
        assert_eq!(forest_completions(&f).len(), 3);
    }

    #[test]
    fn formula_matches_completion_oracle() {
        for n in 1..=6 {
            for k in 1..=n.min(4) {
                for f in enumerate_forests(n, k) {
                    let oracle = completions_oracle(&f);
                    let built = forest_completions(&f);
                    assert_eq!(built, oracle);
                    assert_eq!(forest_ball_size_formula(&f), big(oracle.len() as u64));
                    for a in &built {
                        for b in &built {
                            assert!(a.distance(b).unwrap() < k);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn formula_examples() {
        let f: Forest = "n=5; edges=1-2,2-3,3-4".parse().unwrap();
        assert_eq!(forest_ball_size_formula(&f), big(4));
        let whole = identity_line(5).as_forest();
        assert_eq!(forest_ball_size_formula(&whole), big(1));
    }

    fn figure_forest() -> Forest {
        "n=10; edges=1-2,4-5,5-6,7-8,8-9".parse().unwrap()
    }

    #[test]
    fn figure_instance() {
        let f = figure_forest();
        assert_eq!(f.component_sizes(), vec![1, 1, 2, 3, 3]);
        let shape = LabeledTree::from_pairs(5, &[(0, 2), (0, 1), (0, 4), (1, 3)]).unwrap();
        assert_eq!(p1_count(&f, &shape).unwrap(), big(18));
        let along = completions_along(&f, &shape).unwrap();
        assert_eq!(along.len(), 18);
        assert_eq!(along.iter().collect::<HashSet<_>>().len(), 18);
        assert_eq!(forest_ball_size_formula(&f), big(18_000));
    }

    #[test]
    fn singleton_components_give_unit_products() {
        let f = Forest::new(5, []).unwrap();
        for shape in enumerate_trees(5) {
            assert_eq!(p1_count(&f, &shape).unwrap(), big(1));
        }
    }

    #[test]
    fn p1_sum_and_p2_sum_identities() {
        for n in 2..=7 {
            for k in 2..=n.min(4) {
                let t = k as u64 - 1;
                for f in enumerate_forests(n, k) {
                    let shapes = collect_trees(k);
                    let s1: BigUint = shapes.iter().map(|s| p1_count(&f, s).unwrap()).sum();
                    let s2: BigUint = shapes.iter().map(|s| p2_count(&f, s).unwrap()).sum();
                    assert_eq!(s1, forest_ball_size_formula(&f));
                    assert_eq!(s2, BigUint::from(n).pow(t as u32 - 1));
                    for s in &shapes {
                        assert_eq!(
                            p1_count(&f, s).unwrap(),
                            p2_count(&f, s).unwrap() * f.profile().product()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn shape_mismatch_is_rejected() {
        let f = figure_forest();
        assert!(p1_count(&f, &identity_line(4)).is_err());
        assert!(p2_count(
            &identity_line(3).as_forest(),
            &LabeledTree::new(1, []).unwrap()
        )
        .is_err());
    }
}

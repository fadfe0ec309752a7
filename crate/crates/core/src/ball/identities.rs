use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::ball::forest_ball::{forest_ball_size_formula, profile_multiset};
use crate::ball::tree_ball::{ball_sizes, sphere_sizes};
use crate::combinatorics::{binomial, binomial_signed, pow, scale_n_pow_t_minus_1};
use crate::error::{out_of_range, Result};
use crate::guard::Guard;
use crate::report::CheckReport;
use crate::tree::{enumerate_forests, tree_count, LabeledTree};

fn check_radius(n: usize, t: usize) -> Result<()> {
    if n == 0 || t >= n {
        return Err(out_of_range("t", t, format!("0..{n}")));
    }
    Ok(())
}

/// `n^{t-1}` times the sum over the profile multiset of the product of component sizes.
pub fn profile_product_sum(tree: &LabeledTree, t: usize) -> Result<BigUint> {
    let sum: BigUint = profile_multiset(tree, t)?.iter().map(|p| p.product()).sum();
    Ok(scale_n_pow_t_minus_1(tree.n() as u64, t as u64, sum))
}

/// Binomially weighted ball sizes against the profile-product sum.
pub fn recursion_check(tree: &LabeledTree, t: usize, guard: &Guard) -> Result<CheckReport> {
    let n = tree.n();
    check_radius(n, t)?;
    let balls = ball_sizes(tree, guard)?;
    let lhs = weighted_sum(n as i64 - 2 - t as i64, t, |r| balls[r].clone());
    Ok(CheckReport::new(
        "recursion",
        n,
        t,
        lhs,
        profile_product_sum(tree, t)?,
    ))
}

/// As [`recursion_check`] with sphere sizes and weights `C(n-1-t+i, i)`.
pub fn sphere_recursion_check(tree: &LabeledTree, t: usize, guard: &Guard) -> Result<CheckReport> {
    let n = tree.n();
    check_radius(n, t)?;
    let spheres = sphere_sizes(tree, guard)?;
    let lhs = weighted_sum(n as i64 - 1 - t as i64, t, |r| spheres[r].clone());
    Ok(CheckReport::new(
        "sphere-recursion",
        n,
        t,
        lhs,
        profile_product_sum(tree, t)?,
    ))
}

/// Both recursions at every radius, sharing one pass over all trees.
pub fn recursion_checks_all(tree: &LabeledTree, guard: &Guard) -> Result<Vec<CheckReport>> {
    let n = tree.n();
    let balls = ball_sizes(tree, guard)?;
    let spheres = sphere_sizes(tree, guard)?;
    let mut out = Vec::with_capacity(2 * n);
    for t in 0..n {
        let rhs = profile_product_sum(tree, t)?;
        let ball_lhs = weighted_sum(n as i64 - 2 - t as i64, t, |r| balls[r].clone());
        let sphere_lhs = weighted_sum(n as i64 - 1 - t as i64, t, |r| spheres[r].clone());
        out.push(CheckReport::new("recursion", n, t, ball_lhs, rhs.clone()));
        out.push(CheckReport::new("sphere-recursion", n, t, sphere_lhs, rhs));
    }
    Ok(out)
}

/// `sum_{i=0}^{t} C(base + i, i) * value(t - i)`.
pub(crate) fn weighted_sum(base: i64, t: usize, value: impl Fn(usize) -> BigUint) -> BigUint {
    (0..=t)
        .map(|i| {
            let w = binomial_signed(base + i as i64, i as u64).expect("weights are non-negative");
            w * value(t - i)
        })
        .sum()
}

/// Sphere size around a star: `C(n-1, t) (n-1)^{t-1} (n-t-1)`, and 1 at `t = 0`.
pub fn star_sphere_formula(n: usize, t: usize) -> Result<BigUint> {
    check_radius(n, t)?;
    if t == 0 {
        return Ok(BigUint::one());
    }
    let (n, t) = (n as u64, t as u64);
    Ok(binomial(n - 1, t) * pow(n - 1, (t - 1) as u32) * (n - t - 1))
}

pub fn star_ball_formula(n: usize, t: usize) -> Result<BigUint> {
    check_radius(n, t)?;
    (0..=t).map(|j| star_sphere_formula(n, j)).sum()
}

/// `n^{t-1} C(n+t, 2t+1)`.
pub fn line_identity_rhs(n: usize, t: usize) -> Result<BigUint> {
    check_radius(n, t)?;
    let (n, t) = (n as u64, t as u64);
    Ok(scale_n_pow_t_minus_1(n, t, binomial(n + t, 2 * t + 1)))
}

/// Sum of forest-ball sizes over every forest with `t + 1` components against `C(n-1, t) n^{n-2}`.
pub fn double_count_check(n: usize, t: usize) -> Result<CheckReport> {
    check_radius(n, t)?;
    let lhs: BigUint = enumerate_forests(n, t + 1)
        .iter()
        .map(forest_ball_size_formula)
        .fold(BigUint::zero(), |a, b| a + b);
    let rhs = binomial(n as u64 - 1, t as u64) * tree_count(n);
    Ok(CheckReport::new("double-count", n, t, lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ball::forest_ball::forest_completions;
    use crate::ball::tree_ball::ball_size;
    use crate::tree::{collect_trees, identity_line, star};

    fn big(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn batched_recursions_match_single() {
        let g = Guard::default();
        for tree in collect_trees(5) {
            let all = recursion_checks_all(&tree, &g).unwrap();
            for t in 0..5 {
                assert_eq!(all[2 * t], recursion_check(&tree, t, &g).unwrap());
                assert_eq!(
                    all[2 * t + 1],
                    sphere_recursion_check(&tree, t, &g).unwrap()
                );
            }
        }
    }

    #[test]
    fn recursion_examples() {
        let g = Guard::default();
        let r = recursion_check(&star(4, 0).unwrap(), 1, &g).unwrap();
        assert_eq!((r.lhs.clone(), r.rhs.clone()), (big(9), big(9)));
        let r = recursion_check(&identity_line(4), 1, &g).unwrap();
        assert_eq!((r.lhs, r.rhs), (big(10), big(10)));
        for tree in collect_trees(5) {
            let r = recursion_check(&tree, 0, &g).unwrap();
            assert_eq!((r.lhs, r.rhs), (big(1), big(1)));
        }
    }

    #[test]
    fn sphere_recursion_examples() {
        let g = Guard::default();
        let r = sphere_recursion_check(&star(4, 0).unwrap(), 1, &g).unwrap();
        assert_eq!((r.lhs, r.rhs), (big(9), big(9)));
        let r = sphere_recursion_check(&identity_line(5), 0, &g).unwrap();
        assert_eq!((r.lhs, r.rhs), (big(1), big(1)));
    }

    #[test]
    fn recursions_hold_exhaustively() {
        let g = Guard::default();
        for n in 1..=6 {
            for tree in collect_trees(n) {
                for t in 0..n {
                    assert!(recursion_check(&tree, t, &g).unwrap().equal, "{tree} t={t}");
                    assert!(
                        sphere_recursion_check(&tree, t, &g).unwrap().equal,
                        "{tree} t={t}"
                    );
                }
            }
        }
    }

    #[test]
    fn star_formulas_match_brute_force() {
        let g = Guard::default();
        assert_eq!(star_sphere_formula(4, 1).unwrap(), big(6));
        assert_eq!(star_ball_formula(5, 2).unwrap(), big(61));
        for n in 1..=7 {
            let spheres = sphere_sizes(&star(n, 0).unwrap(), &g).unwrap();
            for t in 0..n {
                assert_eq!(
                    star_sphere_formula(n, t).unwrap(),
                    spheres[t],
                    "n={n} t={t}"
                );
            }
            if n >= 2 {
                assert_eq!(star_sphere_formula(n, n - 1).unwrap(), big(0));
            }
        }
    }

    #[test]
    fn line_identity_examples() {
        assert_eq!(line_identity_rhs(4, 1).unwrap(), big(10));
        assert_eq!(line_identity_rhs(5, 1).unwrap(), big(20));
        assert_eq!(ball_size(&identity_line(5), 1).unwrap() + 3u32, big(20));
        for n in 1..=9 {
            assert_eq!(line_identity_rhs(n, 0).unwrap(), big(1));
        }
        let g = Guard::default();
        for n in 1..=7 {
            let line = identity_line(n);
            for t in 0..n {
                let r = recursion_check(&line, t, &g).unwrap();
                assert_eq!(r.lhs, line_identity_rhs(n, t).unwrap());
            }
        }
    }

    #[test]
    fn double_count_examples() {
        let r = double_count_check(4, 1).unwrap();
        assert_eq!(r.lhs, big(48));
        assert!(r.equal);
        // Oracle: explicit completion counts.
        let oracle: usize = enumerate_forests(4, 2)
            .iter()
            .map(|f| forest_completions(f).len())
            .sum();
        assert_eq!(oracle, 48);
        assert_eq!(enumerate_forests(4, 2).len(), 15);
        for n in 1..=6 {
            for t in 0..n {
                assert!(double_count_check(n, t).unwrap().equal, "n={n} t={t}");
            }
        }
    }
}

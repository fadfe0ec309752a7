use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::Zero;
use rayon::prelude::*;

use crate::ball::forest_ball::forest_ball_size_formula;
use crate::ball::identities::weighted_sum;
use crate::combinatorics::{
    big, compositions, factorial, multinomial, pow, rational, rational_pow, to_biguint,
};
use crate::error::{out_of_range, Result};
use crate::guard::Guard;
use crate::report::CheckReport;
use crate::tree::{collect_trees, enumerate_forests, tree_count};

/// Number of ordered pairs of trees on `[n]` at each distance, by exhaustive enumeration.
pub fn pair_distance_histogram(n: usize, guard: &Guard) -> Result<Vec<u64>> {
    if n == 0 {
        return Err(out_of_range("n", 0, "n >= 1"));
    }
    guard.check_trees(n)?;
    let trees = collect_trees(n);
    let zero = || vec![0u64; n];
    let add = |mut a: Vec<u64>, b: Vec<u64>| {
        a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
        a
    };
    if let Some(masks) = trees.iter().map(|t| t.mask()).collect::<Option<Vec<u64>>>() {
        Ok(masks
            .par_iter()
            .fold(zero, |mut h, &a| {
                for &b in &masks {
                    h[n - 1 - (a & b).count_ones() as usize] += 1;
                }
                h
            })
            .reduce(zero, add))
    } else {
        Ok(trees
            .par_iter()
            .fold(zero, |mut h, a| {
                for b in &trees {
                    h[n - 1 - a.shared_edges(b)] += 1;
                }
                h
            })
            .reduce(zero, add))
    }
}

/// `sum_T V_T(n, t)` for every `t` in `0..n`.
pub fn total_ball_sizes(n: usize, guard: &Guard) -> Result<Vec<BigUint>> {
    let hist = pair_distance_histogram(n, guard)?;
    Ok(hist
        .iter()
        .scan(0u64, |acc, &h| {
            *acc += h;
            Some(big(*acc))
        })
        .collect())
}

/// Exact average ball size over all trees on `[n]`.
pub fn average_ball_exhaustive(n: usize, t: usize, guard: &Guard) -> Result<BigRational> {
    if t >= n.max(1) {
        return Err(out_of_range("t", t, format!("0..{n}")));
    }
    let totals = total_ball_sizes(n, guard)?;
    Ok(rational(&totals[t]) / rational(&tree_count(n)))
}

/// Closed form for `sum_T V_T(n, 1)`: `n!/2 * sum_{k<=n-2} n^k/k! - (n-2) n^{n-2}`.
pub fn total_ball_r1_formula(n: usize) -> Result<BigUint> {
    if n < 2 {
        return Err(out_of_range("n", n, "n >= 2"));
    }
    let n64 = n as u64;
    let nf = factorial(n64);
    let series: BigUint = (0..=n64 - 2)
        .map(|k| pow(n64, k as u32) * (&nf / factorial(k)))
        .sum();
    Ok(series / 2u32 - big(n64 - 2) * tree_count(n))
}

/// The closed form divided by the number of trees.
pub fn average_ball_formula_r1(n: usize) -> Result<BigRational> {
    Ok(rational(&total_ball_r1_formula(n)?) / rational(&tree_count(n)))
}

/// `n^{2t-2}/(t+1)! * sum over compositions of n into t+1 parts of multinomial * prod i^i`.
pub fn average_recursion_rhs(n: usize, t: usize) -> Result<BigUint> {
    if n == 0 || t >= n {
        return Err(out_of_range("t", t, format!("0..{n}")));
    }
    let sum: BigUint = compositions(n, t + 1)
        .iter()
        .map(|parts| {
            let parts: Vec<u64> = parts.iter().map(|&p| p as u64).collect();
            let powers: BigUint = parts.iter().map(|&p| pow(p, p as u32)).product();
            multinomial(&parts) * powers
        })
        .sum();
    let value = rational(&sum) * rational_pow(n as i64, 2 * t as i64 - 2)
        / rational(&factorial(t as u64 + 1));
    Ok(to_biguint(&value).expect("the weighted total is an integer"))
}

/// Weighted totals of exhaustive ball sizes against the multinomial closed form.
pub fn average_recursion_check(n: usize, t: usize, guard: &Guard) -> Result<CheckReport> {
    let rhs = average_recursion_rhs(n, t)?;
    let totals = total_ball_sizes(n, guard)?;
    let lhs = weighted_sum(n as i64 - 2 - t as i64, t, |r| totals[r].clone());
    Ok(CheckReport::new("average-recursion", n, t, lhs, rhs))
}

/// Exhaustive radius-one total against its closed form.
pub fn average_r1_check(n: usize, guard: &Guard) -> Result<CheckReport> {
    let rhs = total_ball_r1_formula(n)?;
    let lhs = total_ball_sizes(n, guard)?[1].clone();
    Ok(CheckReport::new("average-r1", n, 1, lhs, rhs))
}

/// Exhaustive radius-one total against the squared forest-ball sum over two-component forests.
pub fn squares_check(n: usize, guard: &Guard) -> Result<CheckReport> {
    if n < 2 {
        return Err(out_of_range("n", n, "n >= 2"));
    }
    let lhs = total_ball_sizes(n, guard)?[1].clone();
    let squares = enumerate_forests(n, 2)
        .iter()
        .map(|f| {
            let v = forest_ball_size_formula(f);
            &v * &v
        })
        .fold(BigUint::zero(), |a, b| a + b);
    let rhs = squares - big(n as u64 - 2) * tree_count(n);
    Ok(CheckReport::new("squares", n, 1, lhs, rhs))
}

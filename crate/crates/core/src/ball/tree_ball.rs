use std::collections::HashSet;

use num_bigint::BigUint;
use serde::Serialize;

use crate::ball::forest_ball::{forest_ball, forest_ball_size_formula, forest_completions};
use crate::error::{out_of_range, Result};
use crate::guard::Guard;
use crate::report::big_string;
use crate::tree::{par_fold_trees, LabeledTree};

/// How a tree ball is computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BallStrategy {
    /// Exhaustive for `n <= 8`, completions otherwise.
    #[default]
    Auto,
    /// Filter every tree on `[n]` by distance.
    Exhaustive,
    /// Union of the completions of every forest in the forest ball.
    Completions,
}

impl BallStrategy {
    pub const EXHAUSTIVE_MAX_N: usize = 8;

    fn resolve(self, n: usize) -> Self {
        match self {
            Self::Auto if n <= Self::EXHAUSTIVE_MAX_N => Self::Exhaustive,
            Self::Auto => Self::Completions,
            s => s,
        }
    }
}

/// Size (and optionally members) of a ball or sphere around a tree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BallReport {
    pub center: String,
    pub n: usize,
    pub radius: usize,
    pub sphere: bool,
    #[serde(serialize_with = "big_string")]
    pub size: BigUint,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub members: Option<Vec<String>>,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct BallOptions {
    pub strategy: BallStrategy,
    pub guard: Guard,
    pub materialize: bool,
}

fn check_radius(tree: &LabeledTree, t: usize) -> Result<()> {
    if t >= tree.n() {
        return Err(out_of_range("t", t, format!("0..={}", tree.n() - 1)));
    }
    Ok(())
}

/// Number of trees on `[n]` at each distance `0..n` from `center`, by exhaustive enumeration.
pub fn distance_histogram(center: &LabeledTree, guard: &Guard) -> Result<Vec<u64>> {
    let n = center.n();
    guard.check_trees(n)?;
    let zero = || vec![0u64; n];
    let merge = |mut a: Vec<u64>, b: Vec<u64>| {
        a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
        a
    };
    Ok(match center.mask() {
        Some(mask) => par_fold_trees(
            n,
            zero,
            |mut h, t| {
                let shared = (mask & t.mask().expect("same n")).count_ones() as usize;
                h[n - 1 - shared] += 1;
                h
            },
            merge,
        ),
        None => par_fold_trees(
            n,
            zero,
            |mut h, t| {
                h[n - 1 - center.shared_edges(t)] += 1;
                h
            },
            merge,
        ),
    })
}

/// Ball sizes `V_T(n, 0..n)` from one exhaustive pass.
pub fn ball_sizes(center: &LabeledTree, guard: &Guard) -> Result<Vec<BigUint>> {
    let hist = distance_histogram(center, guard)?;
    Ok(hist
        .iter()
        .scan(0u64, |acc, &h| {
            *acc += h;
            Some(BigUint::from(*acc))
        })
        .collect())
}

/// Sphere sizes `S_T(n, 0..n)` from one exhaustive pass.
pub fn sphere_sizes(center: &LabeledTree, guard: &Guard) -> Result<Vec<BigUint>> {
    Ok(distance_histogram(center, guard)?
        .into_iter()
        .map(BigUint::from)
        .collect())
}

/// Upper bound on the trees generated by the completions strategy.
fn completion_work(center: &LabeledTree, t: usize) -> Result<BigUint> {
    Ok(forest_ball(center, t)?
        .iter()
        .map(forest_ball_size_formula)
        .sum())
}

fn completion_members(
    center: &LabeledTree,
    t: usize,
    guard: &Guard,
) -> Result<HashSet<LabeledTree>> {
    let work = completion_work(center, t)?;
    guard.check(u128::try_from(&work).unwrap_or(u128::MAX))?;
    let mut out = HashSet::new();
    for f in forest_ball(center, t)? {
        out.extend(forest_completions(&f));
    }
    Ok(out)
}

fn exhaustive_members(
    center: &LabeledTree,
    t: usize,
    sphere: bool,
    guard: &Guard,
) -> Result<Vec<LabeledTree>> {
    guard.check_trees(center.n())?;
    let keep = |d: usize| if sphere { d == t } else { d <= t };
    let mut members: Vec<LabeledTree> = crate::tree::par_map_trees(center.n(), |x| {
        keep(center.distance(x).expect("same n")).then(|| x.clone())
    })
    .into_iter()
    .flatten()
    .collect();
    members.sort();
    Ok(members)
}

fn report(
    center: &LabeledTree,
    t: usize,
    sphere: bool,
    size: BigUint,
    members: Option<Vec<LabeledTree>>,
) -> BallReport {
    BallReport {
        center: center.to_string(),
        n: center.n(),
        radius: t,
        sphere,
        size,
        members: members.map(|m| m.iter().map(ToString::to_string).collect()),
    }
}

fn ball_or_sphere(
    center: &LabeledTree,
    t: usize,
    sphere: bool,
    opts: &BallOptions,
) -> Result<BallReport> {
    check_radius(center, t)?;
    match opts.strategy.resolve(center.n()) {
        BallStrategy::Exhaustive => {
            if opts.materialize {
                let members = exhaustive_members(center, t, sphere, &opts.guard)?;
                let size = BigUint::from(members.len());
                return Ok(report(center, t, sphere, size, Some(members)));
            }
            let sizes = if sphere {
                sphere_sizes(center, &opts.guard)?
            } else {
                ball_sizes(center, &opts.guard)?
            };
            Ok(report(center, t, sphere, sizes[t].clone(), None))
        }
        _ => {
            let ball = completion_members(center, t, &opts.guard)?;
            let mut members: Vec<LabeledTree> = if sphere {
                ball.into_iter()
                    .filter(|x| center.distance(x).expect("same n") == t)
                    .collect()
            } else {
                ball.into_iter().collect()
            };
            members.sort();
            let size = BigUint::from(members.len());
            Ok(report(
                center,
                t,
                sphere,
                size,
                opts.materialize.then_some(members),
            ))
        }
    }
}

/// The tree ball of radius `t` around `center`.
pub fn tree_ball(center: &LabeledTree, t: usize, opts: &BallOptions) -> Result<BallReport> {
    ball_or_sphere(center, t, false, opts)
}

/// The sphere of radius `t` around `center`.
pub fn sphere(center: &LabeledTree, t: usize, opts: &BallOptions) -> Result<BallReport> {
    ball_or_sphere(center, t, true, opts)
}

/// `V_T(n, t)` with default options.
pub fn ball_size(center: &LabeledTree, t: usize) -> Result<BigUint> {
    Ok(tree_ball(center, t, &BallOptions::default())?.size)
}

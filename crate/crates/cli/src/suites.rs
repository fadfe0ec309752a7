//! Exhaustive identity checks behind `arboreal verify`.

use std::collections::HashSet;
use std::fmt::Display;
use std::str::FromStr;

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use arboreal::ball::{
    average_r1_check, average_recursion_check, ball_sizes, completions_along, double_count_check,
    forest_ball_size_formula, forest_completions, line_identity_rhs, p1_count, pinned_bound,
    pinned_bound_check, pinned_product, pinned_recursion_check, profile_product_sum,
    recursion_checks_all, sphere_sizes, squares_check, star_ball_formula, star_sphere_formula,
    PinnedQuery,
};
use arboreal::bounds::{
    best_upper_bound, forest_count_bollobas, forest_count_bruteforce, forest_count_moon,
    max_code_search, special_case_table, sphere_packing_value, SearchMode, EXACT_MAX_N,
};
use arboreal::codes::{
    construct_coset_code, construct_line_code, construct_star_code, construct_two_star_code,
    coset_size_lower_bound, decode_line_code, decode_star_code, decode_two_star, erasure_patterns,
    error_patterns, generic_erasure_decode, generic_error_decode, max_step, min_tree_distance,
    two_star_distance, TreeCode,
};
use arboreal::tree::{
    collect_trees, enumerate_forests, identity_line, star, tree_at, tree_count, Forest,
};
use arboreal::{prufer_decode, prufer_encode, CheckReport, Error, Guard, LabeledTree, Result};

/// Named suites accepted by `verify --suite`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Prufer,
    Metric,
    ForestCount,
    BallFormula,
    Recursion,
    Star,
    Line,
    Pinned,
    Average,
    Bounds,
    Codes,
}

impl Suite {
    pub const ALL: [Suite; 11] = [
        Suite::Prufer,
        Suite::Metric,
        Suite::ForestCount,
        Suite::BallFormula,
        Suite::Recursion,
        Suite::Star,
        Suite::Line,
        Suite::Pinned,
        Suite::Average,
        Suite::Bounds,
        Suite::Codes,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Prufer => "prufer",
            Suite::Metric => "metric",
            Suite::ForestCount => "forest-count",
            Suite::BallFormula => "ball-formula",
            Suite::Recursion => "recursion",
            Suite::Star => "star",
            Suite::Line => "line",
            Suite::Pinned => "pinned",
            Suite::Average => "average",
            Suite::Bounds => "bounds",
            Suite::Codes => "codes",
        }
    }

    /// Largest `n` run when none is given.
    pub fn default_n_max(self) -> usize {
        match self {
            Suite::Prufer => 8,
            Suite::Metric | Suite::Average | Suite::Pinned => 5,
            Suite::ForestCount | Suite::BallFormula | Suite::Star | Suite::Line | Suite::Bounds => {
                7
            }
            Suite::Recursion => 6,
            Suite::Codes => 9,
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

impl Display for Suite {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteFailure {
    pub inputs: String,
    pub lhs: String,
    pub rhs: String,
}

/// Case count and the failing cases in the order they were checked.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Tally {
    pub cases: u64,
    pub failures: Vec<SuiteFailure>,
}

impl Tally {
    pub fn same<T: PartialEq + Display>(
        &mut self,
        inputs: impl FnOnce() -> String,
        lhs: T,
        rhs: T,
    ) {
        self.cases += 1;
        if lhs != rhs {
            self.failures.push(SuiteFailure {
                inputs: inputs(),
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            });
        }
    }

    pub fn holds(&mut self, inputs: impl FnOnce() -> String, ok: bool) {
        self.same(inputs, ok, true);
    }

    pub fn report(&mut self, r: &CheckReport, extra: impl FnOnce() -> String) {
        self.cases += 1;
        if !r.equal {
            self.failures.push(SuiteFailure {
                inputs: format!("{} n={} t={} {}", r.check, r.n, r.t, extra())
                    .trim_end()
                    .to_string(),
                lhs: r.lhs.to_string(),
                rhs: r.rhs.to_string(),
            });
        }
    }

    /// Records an error from a computation that should have succeeded.
    pub fn error(&mut self, inputs: impl FnOnce() -> String, e: &Error) {
        self.cases += 1;
        self.failures.push(SuiteFailure {
            inputs: inputs(),
            lhs: format!("error: {e}"),
            rhs: "ok".into(),
        });
    }

    pub fn absorb(&mut self, other: Tally) {
        self.cases += other.cases;
        self.failures.extend(other.failures);
    }

    pub fn merge(parts: impl IntoIterator<Item = Tally>) -> Tally {
        parts.into_iter().fold(Tally::default(), |mut acc, t| {
            acc.absorb(t);
            acc
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationSuiteResult {
    pub suite: String,
    pub n_max: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t_max: Option<usize>,
    pub cases: u64,
    pub passed: bool,
    pub failures: Vec<SuiteFailure>,
}

#[derive(Debug, Clone, Copy)]
pub struct SuiteParams {
    pub n_max: usize,
    pub t_max: Option<usize>,
    pub guard: Guard,
}

impl SuiteParams {
    fn radius_cap(&self, n: usize) -> usize {
        let top = n.saturating_sub(1);
        self.t_max.map_or(top, |t| t.min(top))
    }
}

pub fn run_suite(suite: Suite, params: &SuiteParams) -> Result<VerificationSuiteResult> {
    let tally = match suite {
        Suite::Prufer => prufer_suite(params)?,
        Suite::Metric => metric_suite(params)?,
        Suite::ForestCount => forest_count_suite(params)?,
        Suite::BallFormula => ball_formula_suite(params)?,
        Suite::Recursion => recursion_suite(params)?,
        Suite::Star => star_suite(params)?,
        Suite::Line => line_suite(params)?,
        Suite::Pinned => {
            let mut t = pinned_recursion_suite(params.n_max, params.t_max, &params.guard)?;
            t.absorb(pinned_bound_suite(
                params.n_max,
                params.t_max.unwrap_or(3),
                &params.guard,
            )?);
            t
        }
        Suite::Average => average_suite(params)?,
        Suite::Bounds => bounds_suite(params)?,
        Suite::Codes => codes_suite(params)?,
    };
    Ok(VerificationSuiteResult {
        suite: suite.name().into(),
        n_max: params.n_max,
        t_max: params.t_max,
        cases: tally.cases,
        passed: tally.failures.is_empty(),
        failures: tally.failures,
    })
}

/// Runs `check` on every tree of `[n]` in parallel and merges in enumeration order.
fn per_tree(
    n: usize,
    guard: &Guard,
    check: impl Fn(&LabeledTree, &mut Tally) + Sync,
) -> Result<Tally> {
    guard.check_trees(n)?;
    let trees = collect_trees(n);
    let parts: Vec<Tally> = trees
        .par_iter()
        .map(|t| {
            let mut tally = Tally::default();
            check(t, &mut tally);
            tally
        })
        .collect();
    Ok(Tally::merge(parts))
}

pub fn prufer_suite(p: &SuiteParams) -> Result<Tally> {
    let mut tally = Tally::default();
    for n in 1..=p.n_max {
        p.guard.check_trees(n)?;
        let trees = collect_trees(n);
        let distinct: HashSet<&LabeledTree> = trees.iter().collect();
        tally.same(
            || format!("count n={n}"),
            trees.len().to_string(),
            tree_count(n).to_string(),
        );
        tally.same(|| format!("distinct n={n}"), distinct.len(), trees.len());
        if n < 2 {
            continue;
        }
        let parts: Vec<Tally> = trees
            .par_iter()
            .map(|t| {
                let mut local = Tally::default();
                match prufer_encode(t) {
                    Ok(word) => {
                        local.same(|| format!("round-trip {t}"), &prufer_decode(&word), t);
                        let degrees = t.degrees();
                        let law = (0..n).all(|v| {
                            word.word().iter().filter(|&&x| x == v).count() + 1 == degrees[v]
                        });
                        local.holds(|| format!("degree law {t}"), law);
                    }
                    Err(e) => local.error(|| format!("encode {t}"), &e),
                }
                local
            })
            .collect();
        tally.absorb(Tally::merge(parts));
    }
    Ok(tally)
}

/// Largest `n` for which the triangle inequality is checked over all triples.
const TRIANGLE_MAX_N: usize = 5;

pub fn metric_suite(p: &SuiteParams) -> Result<Tally> {
    let mut tally = Tally::default();
    for n in 1..=p.n_max {
        p.guard.check_trees(n)?;
        let trees = collect_trees(n);
        let count = trees.len();
        p.guard.check((count as u128).pow(2))?;
        // Distances computed from shared-edge counts, compared with the library metric.
        let rows: Vec<(Vec<usize>, Tally)> = trees
            .par_iter()
            .map(|a| {
                let mut local = Tally::default();
                let row = trees
                    .iter()
                    .map(|b| {
                        let d = a.distance(b).expect("same n");
                        local.same(
                            || format!("shared edges {a} | {b}"),
                            d,
                            n - 1 - a.shared_edges(b),
                        );
                        local.same(
                            || format!("symmetry {a} | {b}"),
                            d,
                            b.distance(a).expect("same n"),
                        );
                        local.holds(|| format!("range {a} | {b}"), d < n.max(1));
                        local.same(|| format!("zero iff equal {a} | {b}"), d == 0, a == b);
                        d
                    })
                    .collect();
                (row, local)
            })
            .collect();
        let (matrix, parts): (Vec<Vec<usize>>, Vec<Tally>) = rows.into_iter().unzip();
        tally.absorb(Tally::merge(parts));
        if n <= TRIANGLE_MAX_N {
            let parts: Vec<Tally> = (0..count)
                .into_par_iter()
                .map(|i| {
                    let mut local = Tally::default();
                    for j in 0..count {
                        for k in 0..count {
                            local.cases += 1;
                            if matrix[i][k] > matrix[i][j] + matrix[j][k] {
                                local.failures.push(SuiteFailure {
                                    inputs: format!(
                                        "triangle {} | {} | {}",
                                        trees[i], trees[j], trees[k]
                                    ),
                                    lhs: matrix[i][k].to_string(),
                                    rhs: (matrix[i][j] + matrix[j][k]).to_string(),
                                });
                            }
                        }
                    }
                    local
                })
                .collect();
            tally.absorb(Tally::merge(parts));
        }
    }
    Ok(tally)
}

pub fn forest_count_suite(p: &SuiteParams) -> Result<Tally> {
    let mut tally = Tally::default();
    for n in 1..=p.n_max {
        for d in 1..=n {
            let moon = forest_count_moon(n, d)?;
            let bollobas = forest_count_bollobas(n, d)?;
            let brute = forest_count_bruteforce(n, d, &p.guard)?;
            tally.same(|| format!("moon n={n} d={d}"), &moon, &brute);
            tally.same(|| format!("bollobas n={n} d={d}"), &bollobas, &brute);
        }
        special_cases(n, &mut tally)?;
    }
    Ok(tally)
}

/// Every special-case formula at `n` against the general closed form.
pub fn special_cases(n: usize, tally: &mut Tally) -> Result<()> {
    for case in special_case_table(n) {
        let closed = forest_count_moon(n, case.d)?;
        tally.same(
            || format!("special {} n={n}", case.case),
            &case.value,
            &closed,
        );
    }
    Ok(())
}

/// The worked instance: ten nodes, five components, one fixed shape tree.
pub fn figure_instance(tally: &mut Tally) -> Result<()> {
    let forest: Forest = "n=10; edges=1-2,4-5,5-6,7-8,8-9".parse()?;
    let shape = LabeledTree::from_pairs(5, &[(0, 2), (0, 1), (0, 4), (1, 3)])?;
    tally.same(
        || "figure P1".into(),
        p1_count(&forest, &shape)?.to_string(),
        "18".into(),
    );
    tally.same(
        || "figure completions along shape".into(),
        completions_along(&forest, &shape)?.len(),
        18,
    );
    tally.same(
        || "figure ball size".into(),
        forest_ball_size_formula(&forest).to_string(),
        "18000".into(),
    );
    Ok(())
}

pub fn ball_formula_suite(p: &SuiteParams) -> Result<Tally> {
    let mut tally = Tally::default();
    for n in 1..=p.n_max {
        p.guard.check_trees(n)?;
        for t in 0..=p.radius_cap(n) {
            let forests = enumerate_forests(n, t + 1);
            let parts: Vec<Tally> = forests
                .par_iter()
                .map(|f| {
                    let mut local = Tally::default();
                    local.same(
                        || format!("ball formula {f}"),
                        forest_ball_size_formula(f).to_string(),
                        forest_completions(f).len().to_string(),
                    );
                    local
                })
                .collect();
            tally.absorb(Tally::merge(parts));
        }
    }
    figure_instance(&mut tally)?;
    Ok(tally)
}

fn recursion_cases(tree: &LabeledTree, t_cap: usize, guard: &Guard, tally: &mut Tally) {
    match recursion_checks_all(tree, guard) {
        Ok(reports) => {
            for r in reports.iter().filter(|r| r.t <= t_cap) {
                tally.report(r, || tree.to_string());
            }
        }
        Err(e) => tally.error(|| format!("recursion {tree}"), &e),
    }
}

pub fn recursion_suite(p: &SuiteParams) -> Result<Tally> {
    let mut tally = Tally::default();
    for n in 1..=p.n_max {
        let cap = p.radius_cap(n);
        tally.absorb(per_tree(n, &p.guard, |tree, local| {
            recursion_cases(tree, cap, &p.guard, local)
        })?);
    }
    Ok(tally)
}

/// Both recursions on `samples` seeded uniform trees of `[n]`, every radius.
pub fn recursion_spot(n: usize, samples: usize, seed: u64, guard: &Guard) -> Result<Tally> {
    let total = arboreal::tree::tree_count_u128(n)
        .ok_or_else(|| Error::InvalidParameters(format!("n={n}")))?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let trees = (0..samples)
        .map(|_| tree_at(n, rng.gen_range(0..total)))
        .collect::<Result<Vec<_>>>()?;
    let parts: Vec<Tally> = trees
        .par_iter()
        .map(|tree| {
            let mut local = Tally::default();
            recursion_cases(tree, n - 1, guard, &mut local);
            local
        })
        .collect();
    Ok(Tally::merge(parts))
}

pub fn star_suite(p: &SuiteParams) -> Result<Tally> {
    let mut tally = Tally::default();
    for n in 1..=p.n_max {
        let center = star(n, 0)?;
        let spheres = sphere_sizes(&center, &p.guard)?;
        let balls = ball_sizes(&center, &p.guard)?;
        for t in 0..n {
            tally.same(
                || format!("star sphere n={n} t={t}"),
                &star_sphere_formula(n, t)?,
                &spheres[t],
            );
            tally.same(
                || format!("star ball n={n} t={t}"),
                &star_ball_formula(n, t)?,
                &balls[t],
            );
        }
        if n == 5 {
            tally.same(
                || "star ball n=5 t=1".into(),
                balls[1].to_string(),
                "13".into(),
            );
        }
    }
    Ok(tally)
}

pub fn line_suite(p: &SuiteParams) -> Result<Tally> {
    let mut tally = Tally::default();
    for n in 1..=p.n_max {
        let path = identity_line(n);
        for t in 0..n {
            tally.same(
                || format!("line identity n={n} t={t}"),
                &profile_product_sum(&path, t)?,
                &line_identity_rhs(n, t)?,
            );
        }
        if n == 5 {
            let balls = ball_sizes(&path, &p.guard)?;
            tally.same(
                || "line ball n=5 t=1".into(),
                balls[1].to_string(),
                "17".into(),
            );
        }
    }
    Ok(tally)
}

/// Leaf recursion for every tree, leaf, radius and pin set with `n <= n_max`.
pub fn pinned_recursion_suite(n_max: usize, t_max: Option<usize>, guard: &Guard) -> Result<Tally> {
    let mut tally = Tally::default();
    for n in 2..=n_max {
        let cap = t_max.map_or(n - 1, |t| t.min(n - 1));
        tally.absorb(per_tree(n, guard, |tree, local| {
            for leaf in tree.leaves() {
                for t in 0..=cap {
                    for pins in (0..n).powerset().filter(|s| s.len() <= t + 1) {
                        let inputs =
                            || format!("pinned recursion {tree} t={t} pins={pins:?} leaf={leaf}");
                        match PinnedQuery::new(tree.clone(), t, pins.clone())
                            .and_then(|q| pinned_recursion_check(&q, leaf))
                        {
                            Ok(r) => local.same(inputs, r.lhs, r.rhs),
                            Err(e) => local.error(inputs, &e),
                        }
                    }
                }
            }
        })?);
    }
    Ok(tally)
}

/// Binomial upper bound for every tree of `[n]`, `t <= t_max`, and equality for the path with no pins.
pub fn pinned_bound_cases(n: usize, t_max: usize, guard: &Guard) -> Result<Tally> {
    let cap = t_max.min(n.saturating_sub(1));
    let mut tally = per_tree(n, guard, |tree, local| {
        for t in 0..=cap {
            for pins in (0..n).powerset().filter(|s| s.len() <= t + 1) {
                let inputs = || format!("pinned bound {tree} t={t} pins={pins:?}");
                match PinnedQuery::new(tree.clone(), t, pins.clone()) {
                    Ok(q) => local.holds(inputs, pinned_bound_check(&q)),
                    Err(e) => local.error(inputs, &e),
                }
            }
        }
    })?;
    let path = identity_line(n);
    for t in 0..=cap {
        let q = PinnedQuery::new(path.clone(), t, Vec::new())?;
        tally.same(
            || format!("pinned path equality n={n} t={t}"),
            pinned_product(&q),
            pinned_bound(n, t, 0),
        );
    }
    Ok(tally)
}

pub fn pinned_bound_suite(n_max: usize, t_max: usize, guard: &Guard) -> Result<Tally> {
    let mut tally = Tally::default();
    for n in 1..=n_max {
        tally.absorb(pinned_bound_cases(n, t_max, guard)?);
    }
    Ok(tally)
}

/// Largest radius for the averaged recursion when none is given.
const AVERAGE_T_MAX: usize = 2;

pub fn average_suite(p: &SuiteParams) -> Result<Tally> {
    let mut tally = Tally::default();
    for n in 2..=p.n_max {
        tally.report(&average_r1_check(n, &p.guard)?, String::new);
        tally.report(&squares_check(n, &p.guard)?, String::new);
        for t in 0..n {
            tally.report(&double_count_check(n, t)?, String::new);
        }
        for t in 0..=p.t_max.unwrap_or(AVERAGE_T_MAX).min(n - 1) {
            tally.report(&average_recursion_check(n, t, &p.guard)?, String::new);
        }
    }
    Ok(tally)
}

pub fn bounds_suite(p: &SuiteParams) -> Result<Tally> {
    let mut tally = Tally::default();
    if p.n_max >= 4 {
        tally.same(
            || "sphere packing n=4 d=2".into(),
            sphere_packing_value(4, 2)?.to_string(),
            "5".into(),
        );
    }
    for n in 2..=p.n_max {
        let mut previous = None;
        for d in 1..n {
            let r = best_upper_bound(n, d)?;
            tally.holds(
                || format!("bound below sphere packing n={n} d={d}"),
                r.bound <= r.sphere_packing,
            );
            if let Some(prev) = previous.replace(r.bound.clone()) {
                tally.holds(
                    || format!("bound non-increasing n={n} d={d}"),
                    r.bound <= prev,
                );
            }
        }
        let last = best_upper_bound(n, n - 1)?;
        tally.same(
            || format!("bound d=n-1 n={n}"),
            last.bound.to_string(),
            (n / 2).to_string(),
        );
        if n >= 4 {
            let r = best_upper_bound(n, n - 2)?;
            tally.same(
                || format!("bound d=n-2 n={n}"),
                r.bound.to_string(),
                n.to_string(),
            );
        }
        if n >= 9 {
            let r = best_upper_bound(n, n - 3)?;
            tally.same(
                || format!("bound d=n-3 n={n}"),
                r.bound.to_string(),
                (n * n).to_string(),
            );
        }
    }
    for n in 4..=p.n_max.min(EXACT_MAX_N) {
        exact_endpoints(n, &p.guard, &mut tally)?;
    }
    Ok(tally)
}

/// Exact search at `d = n-1` and `d = n-2` against the bounds.
pub fn exact_endpoints(n: usize, guard: &Guard, tally: &mut Tally) -> Result<()> {
    for (d, expected) in [(n - 1, n / 2), (n - 2, n)] {
        let code = max_code_search(n, d, SearchMode::Exact, guard)?;
        tally.same(|| format!("exact search n={n} d={d}"), code.len(), expected);
        let bound = best_upper_bound(n, d)?.bound;
        tally.same(
            || format!("search meets bound n={n} d={d}"),
            code.len().to_string(),
            bound.to_string(),
        );
    }
    Ok(())
}

fn certify_code(label: &str, code: &TreeCode, expected_size: usize, tally: &mut Tally) {
    tally.same(|| format!("{label} size"), code.len(), expected_size);
    let min = min_tree_distance(code).unwrap_or(usize::MAX);
    tally.holds(
        || format!("{label} distance {min} >= {}", code.declared_distance()),
        min >= code.declared_distance(),
    );
}

/// Every erasure pattern of each weight, checked against the codeword and the generic decoder.
pub fn erasure_sweep(
    label: &str,
    code: &TreeCode,
    weights: std::ops::RangeInclusive<usize>,
    decoder: impl Fn(&Forest) -> Result<LabeledTree> + Sync,
) -> Tally {
    let parts: Vec<Tally> = code
        .codewords()
        .par_iter()
        .map(|word| {
            let mut local = Tally::default();
            for k in weights.clone() {
                for f in erasure_patterns(word, k) {
                    let inputs = || format!("{label} erasures={k} {f}");
                    match (decoder(&f), generic_erasure_decode(code, &f)) {
                        (Ok(a), Ok(b)) => {
                            local.same(inputs, &a, word);
                            local.same(|| format!("{label} generic agrees {f}"), &a, &b);
                        }
                        (Err(e), _) | (_, Err(e)) => local.error(inputs, &e),
                    }
                }
            }
            local
        })
        .collect();
    Tally::merge(parts)
}

/// Every error pattern of weight `k` decoded by the generic error decoder.
pub fn error_sweep(label: &str, code: &TreeCode, k: usize) -> Tally {
    let parts: Vec<Tally> = code
        .codewords()
        .par_iter()
        .map(|word| {
            let mut local = Tally::default();
            for received in error_patterns(word, k) {
                let inputs = || format!("{label} errors={k} {received}");
                match generic_error_decode(code, &received) {
                    Ok(t) => local.same(inputs, &t, word),
                    Err(e) => local.error(inputs, &e),
                }
            }
            local
        })
        .collect();
    Tally::merge(parts)
}

/// Two-star parameter sets always included in the codes suite.
pub const TWO_STAR_CASES: [(usize, usize); 3] = [(11, 5), (13, 6), (17, 6)];
/// Coset parameter sets, run when `n` is within range.
pub const COSET_CASES: [(usize, usize); 4] = [(5, 2), (6, 2), (6, 3), (7, 2)];

pub fn codes_suite(p: &SuiteParams) -> Result<Tally> {
    let mut tally = Tally::default();
    for n in 3..=p.n_max {
        certify_code(
            &format!("line n={n}"),
            &construct_line_code(n)?,
            n / 2,
            &mut tally,
        );
    }
    for n in 4..=p.n_max {
        certify_code(
            &format!("star n={n}"),
            &construct_star_code(n)?,
            n,
            &mut tally,
        );
    }
    for (n, d) in COSET_CASES.into_iter().filter(|&(n, _)| n <= p.n_max) {
        let built = construct_coset_code(n, d, &p.guard)?;
        let label = format!("coset n={n} d={d}");
        certify_code(&label, &built.code, built.code.len(), &mut tally);
        let floor = coset_size_lower_bound(&built.substrate);
        tally.holds(
            || format!("{label} size {} >= {floor}", built.code.len()),
            floor <= built.code.len().into(),
        );
    }
    for (n, m) in TWO_STAR_CASES {
        let code = construct_two_star_code(n, m)?;
        tally.same(
            || format!("twostar n={n} m={m} distance"),
            code.declared_distance() as i64,
            two_star_distance(n, m),
        );
        certify_code(
            &format!("twostar n={n} m={m}"),
            &code,
            (n - 1) / 2 * max_step(n, m),
            &mut tally,
        );
    }

    for n in 3..=p.n_max.min(9) {
        let code = construct_line_code(n)?;
        tally.absorb(erasure_sweep(
            &format!("line n={n}"),
            &code,
            0..=n - 2,
            |f| decode_line_code(&code, f),
        ));
    }
    for n in 4..=p.n_max.min(8) {
        let code = construct_star_code(n)?;
        tally.absorb(erasure_sweep(
            &format!("star n={n}"),
            &code,
            0..=n - 3,
            |f| decode_star_code(&code, f),
        ));
    }
    for (n, m, top) in [(11, 5, 1), (13, 6, 2)] {
        let code = construct_two_star_code(n, m)?;
        tally.absorb(erasure_sweep(
            &format!("twostar n={n} m={m}"),
            &code,
            0..=top,
            |f| decode_two_star(&code, m, f),
        ));
    }
    if p.n_max >= 6 {
        let built = construct_coset_code(6, 3, &p.guard)?;
        tally.absorb(erasure_sweep("coset n=6 d=3", &built.code, 0..=2, |f| {
            generic_erasure_decode(&built.code, f)
        }));
    }
    let code = construct_two_star_code(13, 6)?;
    tally.absorb(error_sweep("twostar n=13 m=6", &code, 1));
    Ok(tally)
}

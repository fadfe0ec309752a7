use itertools::Itertools;
use num_traits::ToPrimitive;
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::ball::forest_completions;
use crate::codes::{generic_erasure_decode, generic_error_decode, TreeCode};
use crate::combinatorics::binomial;
use crate::error::{Error, Result};
use crate::guard::Guard;
use crate::tree::{DisjointSets, Edge, Forest, LabeledTree};

/// What the channel does to a codeword.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "weight", rename_all = "lowercase")]
pub enum ChannelKind {
    Erasure(usize),
    Error(usize),
}

impl ChannelKind {
    pub fn weight(self) -> usize {
        match self {
            Self::Erasure(w) | Self::Error(w) => w,
        }
    }

    /// Largest weight the declared distance guarantees to correct.
    pub fn capability(self, d: usize) -> usize {
        match self {
            Self::Erasure(_) => d.saturating_sub(1),
            Self::Error(_) => d.saturating_sub(1) / 2,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PatternMode {
    Exhaustive,
    Sampled { trials: usize, seed: u64 },
}

/// One channel output together with the codeword it came from.
#[derive(Debug, Clone)]
pub enum Received {
    Erased(Forest),
    Corrupted(LabeledTree),
}

#[derive(Debug, Clone)]
pub struct Pattern {
    pub codeword: usize,
    pub received: Received,
}

#[derive(Debug, Clone, Serialize)]
pub struct ChannelFailure {
    pub codeword: usize,
    pub received: String,
    pub outcome: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct ChannelReport {
    pub n: usize,
    pub d: usize,
    pub channel: ChannelKind,
    pub capability: usize,
    pub within_capability: bool,
    pub mode: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub trials: usize,
    pub successes: usize,
    pub success: String,
    pub failures: Vec<ChannelFailure>,
}

impl ChannelReport {
    pub fn all_succeeded(&self) -> bool {
        self.successes == self.trials
    }
}

/// Reported failures are capped at this many.
pub const MAX_REPORTED_FAILURES: usize = 20;

/// Every tree at distance exactly `weight` from `word`, grouped by the removed edge set.
pub fn error_patterns(word: &LabeledTree, weight: usize) -> Vec<LabeledTree> {
    word.edges()
        .iter()
        .copied()
        .combinations(weight)
        .flat_map(|removed| {
            let forest = word.remove_edges(&removed).expect("edges of the word");
            forest_completions(&forest)
                .into_iter()
                .filter(|t| t.distance(word).expect("same n") == weight)
                .collect::<Vec<_>>()
        })
        .collect()
}

/// Every forest left by erasing `weight` edges of `word`.
pub fn erasure_patterns(word: &LabeledTree, weight: usize) -> Vec<Forest> {
    word.edges()
        .iter()
        .copied()
        .combinations(weight)
        .map(|removed| word.remove_edges(&removed).expect("edges of the word"))
        .collect()
}

fn exhaustive_patterns(code: &TreeCode, kind: ChannelKind, guard: &Guard) -> Result<Vec<Pattern>> {
    let edges = code.n().saturating_sub(1) as u64;
    let per_word = binomial(edges, kind.weight() as u64)
        .to_u128()
        .unwrap_or(u128::MAX);
    guard.check(per_word.saturating_mul(code.len() as u128))?;
    let per_codeword: Vec<Vec<Pattern>> = code
        .codewords()
        .par_iter()
        .enumerate()
        .map(|(i, w)| match kind {
            ChannelKind::Erasure(k) => erasure_patterns(w, k)
                .into_iter()
                .map(|f| Pattern {
                    codeword: i,
                    received: Received::Erased(f),
                })
                .collect(),
            ChannelKind::Error(k) => error_patterns(w, k)
                .into_iter()
                .map(|t| Pattern {
                    codeword: i,
                    received: Received::Corrupted(t),
                })
                .collect(),
        })
        .collect();
    Ok(per_codeword.into_iter().flatten().collect())
}

/// Joins the components of `forest` with random edges until it is a tree.
fn random_completion(forest: &Forest, rng: &mut impl Rng) -> LabeledTree {
    let n = forest.n();
    let mut sets = DisjointSets::new(n);
    let mut pairs: Vec<(usize, usize)> = forest.edges().iter().map(|e| (e.u(), e.v())).collect();
    for &(u, v) in &pairs {
        sets.union(u, v);
    }
    while pairs.len() + 1 < n {
        let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if sets.union(u, v) {
            pairs.push((u, v));
        }
    }
    LabeledTree::from_pairs(n, &pairs).expect("spanning and acyclic")
}

fn sampled_patterns(
    code: &TreeCode,
    kind: ChannelKind,
    trials: usize,
    seed: u64,
) -> Result<Vec<Pattern>> {
    let n = code.n();
    let weight = kind.weight();
    if weight > n.saturating_sub(1) {
        return Err(Error::InvalidParameters(format!(
            "weight {weight} exceeds the {} edges of a tree",
            n.saturating_sub(1)
        )));
    }
    if code.is_empty() {
        return Ok(Vec::new());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(trials);
    for _ in 0..trials {
        let i = rng.gen_range(0..code.len());
        let word = &code.codewords()[i];
        let removed: Vec<Edge> = sample(&mut rng, n - 1, weight)
            .into_iter()
            .map(|k| word.edges()[k])
            .collect();
        let forest = word.remove_edges(&removed)?;
        let received = match kind {
            ChannelKind::Erasure(_) => Received::Erased(forest),
            ChannelKind::Error(_) => {
                // Redraw until no removed edge comes back.
                let mut tree = random_completion(&forest, &mut rng);
                while tree.distance(word)? != weight {
                    tree = random_completion(&forest, &mut rng);
                }
                Received::Corrupted(tree)
            }
        };
        out.push(Pattern {
            codeword: i,
            received,
        });
    }
    Ok(out)
}

/// Patterns in a deterministic order for the given mode.
pub fn channel_patterns(
    code: &TreeCode,
    kind: ChannelKind,
    mode: PatternMode,
    guard: &Guard,
) -> Result<Vec<Pattern>> {
    match mode {
        PatternMode::Exhaustive => exhaustive_patterns(code, kind, guard),
        PatternMode::Sampled { trials, seed } => sampled_patterns(code, kind, trials, seed),
    }
}

/// Sends codewords through the channel and decodes them with the generic decoders.
pub fn simulate_channel(
    code: &TreeCode,
    kind: ChannelKind,
    mode: PatternMode,
    guard: &Guard,
) -> Result<ChannelReport> {
    let patterns = channel_patterns(code, kind, mode, guard)?;
    let outcomes: Vec<Option<ChannelFailure>> = patterns
        .par_iter()
        .map(|p| {
            let expected = &code.codewords()[p.codeword];
            let (decoded, received) = match &p.received {
                Received::Erased(f) => (generic_erasure_decode(code, f), f.to_string()),
                Received::Corrupted(t) => (generic_error_decode(code, t), t.to_string()),
            };
            let outcome = match decoded {
                Ok(t) if &t == expected => return None,
                Ok(t) => format!("decoded to {t}"),
                Err(e) => e.to_string(),
            };
            Some(ChannelFailure {
                codeword: p.codeword,
                received,
                outcome,
            })
        })
        .collect();
    let trials = outcomes.len();
    let failed: Vec<ChannelFailure> = outcomes.into_iter().flatten().collect();
    let successes = trials - failed.len();
    let capability = kind.capability(code.declared_distance());
    Ok(ChannelReport {
        n: code.n(),
        d: code.declared_distance(),
        channel: kind,
        capability,
        within_capability: kind.weight() <= capability,
        mode: match mode {
            PatternMode::Exhaustive => "exhaustive",
            PatternMode::Sampled { .. } => "sampled",
        },
        seed: match mode {
            PatternMode::Sampled { seed, .. } => Some(seed),
            PatternMode::Exhaustive => None,
        },
        trials,
        successes,
        success: format!("{successes}/{trials}"),
        failures: failed.into_iter().take(MAX_REPORTED_FAILURES).collect(),
    })
}

use std::collections::BTreeMap;

use num_bigint::BigUint;
use serde::Serialize;

use crate::codes::bch::{build_binary_code, coset_size_lower_bound, BinaryCodeSpec};
use crate::codes::TreeCode;
use crate::error::Result;
use crate::guard::Guard;
use crate::report::big_string;
use crate::tree::{enumerate_trees, par_map_trees, LabeledTree};

/// Coset code together with the substrate it was cut from.
#[derive(Debug, Clone)]
pub struct CosetCode {
    pub code: TreeCode,
    pub substrate: BinaryCodeSpec,
    pub syndrome: u128,
    pub buckets: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct CosetSummary {
    pub n: usize,
    pub d: usize,
    pub size: usize,
    pub rank: usize,
    pub syndrome: String,
    pub buckets: usize,
    #[serde(serialize_with = "big_string")]
    pub lower_bound: BigUint,
}

impl CosetCode {
    pub fn summary(&self) -> CosetSummary {
        CosetSummary {
            n: self.code.n(),
            d: self.code.declared_distance(),
            size: self.code.len(),
            rank: self.substrate.rank,
            syndrome: format!("{:#x}", self.syndrome),
            buckets: self.buckets,
            lower_bound: coset_size_lower_bound(&self.substrate),
        }
    }
}

/// Trees whose edge vectors fall in the most populated coset of the substrate.
pub fn construct_coset_code(n: usize, d: usize, guard: &Guard) -> Result<CosetCode> {
    let substrate = build_binary_code(n, d)?;
    guard.check_trees(n)?;
    let syndromes = par_map_trees(n, |t| substrate.syndrome(t));
    let mut counts: BTreeMap<u128, usize> = BTreeMap::new();
    for &s in &syndromes {
        *counts.entry(s).or_default() += 1;
    }
    // `max_by_key` keeps the last maximum, so walking keys downwards settles ties on the smallest syndrome.
    let (&syndrome, _) = counts
        .iter()
        .rev()
        .max_by_key(|(_, &c)| c)
        .expect("at least one tree");
    let codewords: Vec<LabeledTree> = enumerate_trees(n)
        .zip(&syndromes)
        .filter_map(|(t, &s)| (s == syndrome).then_some(t))
        .collect();
    Ok(CosetCode {
        code: TreeCode::new(n, d, codewords)?,
        substrate,
        syndrome,
        buckets: counts.len(),
    })
}

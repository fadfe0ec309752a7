//! CSV tables with a fixed row order.

use std::fmt::Write;

use rayon::prelude::*;

use arboreal::ball::distance_histogram;
use arboreal::bounds::{
    best_upper_bound, forest_count_bollobas, forest_count_moon, special_case_table,
};
use arboreal::tree::collect_trees;
use arboreal::{prufer_encode, Guard, Result};

use crate::output::edge_tokens;

/// One row per tree in enumeration order: `V_T(n, t)` and `S_T(n, t)`.
pub fn balls_table(n: usize, t: usize, guard: &Guard) -> Result<String> {
    if t >= n.max(1) {
        return Err(arboreal::Error::OutOfRange {
            what: "t",
            value: t as i64,
            range: format!("0..{n}"),
        });
    }
    guard.check_trees(n)?;
    let trees = collect_trees(n);
    let rows: Vec<Result<String>> = trees
        .par_iter()
        .enumerate()
        .map(|(i, tree)| {
            let hist = distance_histogram(tree, guard)?;
            let ball: u64 = hist[..=t].iter().sum();
            let word = if n >= 2 {
                prufer_encode(tree)?
                    .word()
                    .iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join(" ")
            } else {
                String::new()
            };
            Ok(format!(
                "{i},{word},{},{},{}",
                edge_tokens(tree),
                ball,
                hist[t]
            ))
        })
        .collect();
    let mut out = String::from("index,prufer,edges,ball,sphere\n");
    for row in rows {
        writeln!(out, "{}", row?).expect("string write");
    }
    Ok(out)
}

/// Sphere-packing value and best bound for each `d`.
pub fn bounds_table(n: usize) -> Result<String> {
    let mut out = String::from("n,d,sphere_packing,bound,provenance\n");
    for d in 1..n {
        let r = best_upper_bound(n, d)?;
        writeln!(
            out,
            "{n},{d},{},{},{}",
            r.sphere_packing,
            r.bound,
            r.provenance.tag()
        )
        .expect("string write");
    }
    Ok(out)
}

/// Forest counts by both closed forms and the matching special case, if any.
pub fn forests_table(n: usize) -> Result<String> {
    let special = special_case_table(n);
    let mut out = String::from("n,d,forests,alternating,special_case,special_value\n");
    for d in 1..=n {
        let (case, value) = special
            .iter()
            .find(|c| c.d == d)
            .map(|c| (c.case.to_string(), c.value.to_string()))
            .unwrap_or_default();
        writeln!(
            out,
            "{n},{d},{},{},{case},{value}",
            forest_count_moon(n, d)?,
            forest_count_bollobas(n, d)?
        )
        .expect("string write");
    }
    Ok(out)
}

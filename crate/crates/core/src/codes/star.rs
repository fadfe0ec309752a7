use crate::codes::decode::{confirm, forest_degrees};
use crate::codes::TreeCode;
use crate::error::{out_of_range, Error, Result};
use crate::tree::{star, Forest, LabeledTree};

/// All `n` stars; distance `n - 2`.
pub fn construct_star_code(n: usize) -> Result<TreeCode> {
    if n < 4 {
        return Err(out_of_range("n", n, "n >= 4"));
    }
    let words = (0..n).map(|c| star(n, c)).collect::<Result<Vec<_>>>()?;
    TreeCode::new(n, n - 2, words)
}

/// The hub is the only node of surviving degree at least two.
pub fn decode_star_code(code: &TreeCode, forest: &Forest) -> Result<LabeledTree> {
    let hubs: Vec<usize> = forest_degrees(forest)
        .iter()
        .enumerate()
        .filter_map(|(v, &d)| (d >= 2).then_some(v))
        .collect();
    match hubs.as_slice() {
        [] => Err(Error::Undecodable("no node keeps two edges".into())),
        [hub] => confirm(code, forest, star(forest.n(), *hub)?),
        _ => Err(Error::ChannelViolation(format!(
            "several nodes keep two edges: {hubs:?}"
        ))),
    }
}

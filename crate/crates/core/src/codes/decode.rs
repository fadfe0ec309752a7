use crate::codes::TreeCode;
use crate::error::{Error, Result};
use crate::tree::{Forest, LabeledTree};

fn unique(mut candidates: Vec<&LabeledTree>, what: &str) -> Result<LabeledTree> {
    match candidates.len() {
        0 => Err(Error::ChannelViolation(format!(
            "no codeword is consistent with the {what}"
        ))),
        1 => Ok(candidates.pop().expect("one candidate").clone()),
        k => Err(Error::Certification(format!(
            "{k} codewords are consistent with the {what}; the declared distance is wrong"
        ))),
    }
}

/// The codeword containing every surviving edge of `forest`.
pub fn generic_erasure_decode(code: &TreeCode, forest: &Forest) -> Result<LabeledTree> {
    if forest.n() != code.n() {
        return Err(Error::NodeCountMismatch {
            left: code.n(),
            right: forest.n(),
        });
    }
    let candidates = code
        .codewords()
        .iter()
        .filter(|c| forest.is_subforest_of(c))
        .collect();
    unique(candidates, "surviving edges")
}

/// The codeword within `floor((d-1)/2)` of `received`.
pub fn generic_error_decode(code: &TreeCode, received: &LabeledTree) -> Result<LabeledTree> {
    if received.n() != code.n() {
        return Err(Error::NodeCountMismatch {
            left: code.n(),
            right: received.n(),
        });
    }
    let radius = code.declared_distance().saturating_sub(1) / 2;
    let candidates = code
        .codewords()
        .iter()
        .filter(|c| c.distance(received).expect("same n") <= radius)
        .collect();
    unique(candidates, "received tree")
}

/// Surviving degree of every node.
pub(crate) fn forest_degrees(forest: &Forest) -> Vec<usize> {
    let mut deg = vec![0; forest.n()];
    for e in forest.edges() {
        deg[e.u()] += 1;
        deg[e.v()] += 1;
    }
    deg
}

/// Confirms that a specialized decoder's answer contains the surviving edges and is a codeword.
pub(crate) fn confirm(code: &TreeCode, forest: &Forest, tree: LabeledTree) -> Result<LabeledTree> {
    if !forest.is_subforest_of(&tree) || !code.contains(&tree) {
        return Err(Error::ChannelViolation(
            "surviving edges are not contained in the decoded codeword".into(),
        ));
    }
    Ok(tree)
}

use std::collections::HashSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tree::{Edge, LabeledTree};

/// A set of codeword trees on `[n]` with a declared minimum distance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeCode {
    n: usize,
    declared_distance: usize,
    codewords: Vec<LabeledTree>,
}

impl TreeCode {
    /// Checks that codewords are distinct and share the node count. Distance is not certified here.
    pub fn new(n: usize, declared_distance: usize, codewords: Vec<LabeledTree>) -> Result<Self> {
        let mut seen = HashSet::with_capacity(codewords.len());
        for c in &codewords {
            if c.n() != n {
                return Err(Error::NodeCountMismatch {
                    left: n,
                    right: c.n(),
                });
            }
            if !seen.insert(c) {
                return Err(Error::InvalidParameters(format!("duplicate codeword {c}")));
            }
        }
        Ok(Self {
            n,
            declared_distance,
            codewords,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn declared_distance(&self) -> usize {
        self.declared_distance
    }

    pub fn codewords(&self) -> &[LabeledTree] {
        &self.codewords
    }

    pub fn len(&self) -> usize {
        self.codewords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.codewords.is_empty()
    }

    pub fn contains(&self, tree: &LabeledTree) -> bool {
        self.codewords.contains(tree)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&CodeFile::from(self)).expect("code serializes")
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(&CodeFile::from(self)).expect("code serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let file: CodeFile = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        file.try_into()
    }
}

/// On-disk form: `{n, d, codewords: [["u-v", ...], ...]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CodeFile {
    n: usize,
    d: usize,
    codewords: Vec<Vec<String>>,
}

impl From<&TreeCode> for CodeFile {
    fn from(code: &TreeCode) -> Self {
        Self {
            n: code.n,
            d: code.declared_distance,
            codewords: code
                .codewords
                .iter()
                .map(|t| t.edges().iter().map(ToString::to_string).collect())
                .collect(),
        }
    }
}

impl TryFrom<CodeFile> for TreeCode {
    type Error = Error;

    fn try_from(file: CodeFile) -> Result<Self> {
        let codewords = file
            .codewords
            .iter()
            .map(|edges| {
                let edges = edges
                    .iter()
                    .map(|e| e.parse::<Edge>())
                    .collect::<Result<Vec<_>>>()?;
                LabeledTree::new(file.n, edges)
            })
            .collect::<Result<Vec<_>>>()?;
        TreeCode::new(file.n, file.d, codewords)
    }
}

/// Smallest pairwise distance; `None` for fewer than two codewords.
pub fn min_tree_distance(code: &TreeCode) -> Option<usize> {
    let words = code.codewords();
    (0..words.len())
        .into_par_iter()
        .filter_map(|i| {
            words[i + 1..]
                .iter()
                .map(|b| words[i].distance(b).expect("same n"))
                .min()
        })
        .min()
}

/// Recomputed parameters of a code.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub n: usize,
    pub size: usize,
    pub declared_distance: usize,
    pub min_distance: Option<usize>,
    pub ok: bool,
}

/// Recomputes size and minimum distance and compares against the declared distance.
pub fn certify(code: &TreeCode) -> Certificate {
    let min_distance = min_tree_distance(code);
    Certificate {
        n: code.n(),
        size: code.len(),
        declared_distance: code.declared_distance(),
        min_distance,
        ok: min_distance.is_none_or(|d| d >= code.declared_distance()),
    }
}

/// Fails with a certification error when the declared distance does not hold.
pub fn require_certified(code: &TreeCode) -> Result<Certificate> {
    let cert = certify(code);
    if cert.ok {
        Ok(cert)
    } else {
        Err(Error::Certification(format!(
            "minimum distance {:?} is below the declared {}",
            cert.min_distance, cert.declared_distance
        )))
    }
}

//! Codes over labeled trees under the tree distance.

pub mod ball;
pub mod bounds;
pub mod codes;
pub mod combinatorics;
pub mod error;
pub mod guard;
pub mod report;
pub mod tree;

pub use ball::{BallOptions, BallReport, BallStrategy};
pub use bounds::{best_upper_bound, BoundReport, Provenance, SearchMode};
pub use codes::{
    construct_coset_code, construct_line_code, construct_star_code, construct_two_star_code,
    generic_erasure_decode, generic_error_decode, min_tree_distance, BinaryCodeSpec, Certificate,
    ChannelKind, ChannelReport, PatternMode, TreeCode, TwoStarParams,
};
pub use error::{Error, Result};
pub use guard::Guard;
pub use report::CheckReport;
pub use tree::{
    edge_index, edge_vector, enumerate_trees, line, prufer_decode, prufer_encode, remove_edges,
    star, tree_distance, Edge, EdgeVector, Forest, LabeledTree, ProfileVector, PruferSequence,
};

//! Codes over trees: the four constructions, certification and decoders.

mod bch;
mod channel;
mod code;
mod coset;
mod decode;
mod line;
mod star;
mod two_star;

pub use bch::{build_binary_code, coset_size_lower_bound, BinaryCodeSpec};
pub use channel::{
    channel_patterns, erasure_patterns, error_patterns, simulate_channel, ChannelFailure,
    ChannelKind, ChannelReport, Pattern, PatternMode, Received, MAX_REPORTED_FAILURES,
};
pub use code::{certify, min_tree_distance, require_certified, Certificate, TreeCode};
pub use coset::{construct_coset_code, CosetCode, CosetSummary};
pub use decode::{generic_erasure_decode, generic_error_decode};
pub use line::{construct_line_code, decode_line_code, zigzag_order};
pub use star::{construct_star_code, decode_star_code};
pub use two_star::{
    construct_two_star_code, decode_two_star, exclusivity_failures, is_prime, max_step,
    max_step_overlap, step_centers, two_star_distance, two_star_membership, two_star_w_set,
    TwoStarParams,
};

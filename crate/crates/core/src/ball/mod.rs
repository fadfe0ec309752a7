//! Balls and spheres around trees and forests, with closed forms and brute-force oracles.

mod average;
mod forest_ball;
mod identities;
mod pinned;
mod tree_ball;

pub use average::{
    average_ball_exhaustive, average_ball_formula_r1, average_r1_check, average_recursion_check,
    average_recursion_rhs, pair_distance_histogram, squares_check, total_ball_r1_formula,
    total_ball_sizes,
};
pub use forest_ball::{
    completions_along, forest_ball, forest_ball_size_formula, forest_completions, p1_count,
    p2_count, profile_multiset,
};
pub use identities::{
    double_count_check, line_identity_rhs, profile_product_sum, recursion_check,
    recursion_checks_all, sphere_recursion_check, star_ball_formula, star_sphere_formula,
};
pub use pinned::{
    pinned_bound, pinned_bound_check, pinned_product, pinned_recursion_check, PinnedQuery,
    PinnedRecursion,
};
pub use tree_ball::{
    ball_size, ball_sizes, distance_histogram, sphere, sphere_sizes, tree_ball, BallOptions,
    BallReport, BallStrategy,
};

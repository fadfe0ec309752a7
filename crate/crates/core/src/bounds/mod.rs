//! Forest counts, upper bounds on code size and exhaustive code search.

mod bound;
mod forest_count;
mod reiman;
mod search;

pub use bound::{
    best_upper_bound, sphere_packing_bound, sphere_packing_value, BoundReport, Provenance,
};
pub use forest_count::{
    forest_count_bollobas, forest_count_bruteforce, forest_count_closed, forest_count_moon,
    special_case_table, SpecialCase,
};
pub use reiman::{
    code_incidence_graph, forest_incidence_graph, reiman_holds, sample_pairwise_family,
    BipartiteGraph,
};
pub use search::{max_clique, max_code_search, BitGraph, SearchMode, EXACT_MAX_N};

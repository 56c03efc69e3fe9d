//! Independent oracles: automorphism counting and brute-force ocycle search.

mod automorphism;
mod search;

pub use automorphism::{automorphism_order, is_af, is_automorphism, AfVerdict, AutomorphismReport, DEFAULT_BUDGET};
pub use search::{exhaustive_ocycle_search, DEFAULT_SEARCH_LIMIT};

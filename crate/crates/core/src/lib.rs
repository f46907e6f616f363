//! Double change covering designs: ordered block lists in which consecutive
//! blocks differ in exactly two points and every pair of points appears
//! together in some block.
//!
//! ```
//! use dccd::{classify, construct::catalog};
//!
//! let d = catalog("cdccd-7-3-7").unwrap().design;
//! let c = classify(&d);
//! assert!(c.is_double_change() && c.tight);
//! ```

pub mod bounds;
pub mod cli;
pub mod construct;
pub mod cost;
pub mod design;
pub mod document;
pub mod error;
pub mod expansion;
pub mod factorization;
pub mod search;
pub mod verify;

pub use bounds::{
    binomial, change_bound, lower_bound_circular, lower_bound_linear, BoundQuery, ChangeBound,
};
pub use cost::{full_swap_cost, sequential_cost, CostParams, CostReport};
pub use design::{Block, Design, Point};
pub use document::{render_table, DesignDocument};
pub use error::{Error, Result};
pub use expansion::{
    corollary_chain, expand, expand_with_circle_method, find_expansion_set,
    validate_expansion_set, ChainEntry, ExpansionSet,
};
pub use factorization::{circle_method, verify_factorization, OneFactorization};
pub use search::{exhaustive_min_blocks, SearchLimits};
pub use verify::{
    classify, coverage, introductions, unchanged_subsets, verify_m_change, Classification,
    CoverageLedger,
};

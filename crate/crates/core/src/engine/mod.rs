//! Universe closure, symbolic partition refinement and the bounded oracle.

mod closure;
mod ks;
mod oracle;
mod partition;
mod refine;
mod saturated;

pub use closure::{close_universe, SymbolicLts, DEFAULT_MAX_STATES};
pub use ks::{ks_refine, KsResult, PlainLts};
pub use oracle::{oracle_check, OracleOptions, OracleReport};
pub use partition::Partition;
pub use refine::{
    bisimilar, initial_partition, minimize, redundant_in, refine, signature, Minimization,
    MinimizeOptions, QuotientEdge, Signature, DEFAULT_MAX_ITERS,
};
pub use saturated::{bounded_saturated_lts, syntactic_lts, SaturatedLts};

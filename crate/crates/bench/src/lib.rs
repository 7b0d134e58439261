//! Shared inputs for the criterion benchmarks.

use howe_core::{Context, GeneralizedPartition, Partition};

/// The smallest context in which all four generator families appear.
pub const FULL: Context = Context::new(1, 1, 1, 1, 2);

pub fn partition(parts: &[i64]) -> Partition {
    Partition::new(parts.to_vec()).expect("valid partition")
}

pub fn label(parts: &[i64]) -> GeneralizedPartition {
    GeneralizedPartition::new(parts.to_vec()).expect("valid generalized partition")
}

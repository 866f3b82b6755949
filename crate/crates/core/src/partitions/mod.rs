//! Partitions, their statistics, exhaustive enumeration (the brute-force
//! oracle), and the mod-2 Ferrers bijection.

pub mod enumerate;
pub mod ferrers;
pub mod partition;
pub mod stats;
pub mod weights;

pub use enumerate::{
    check_cap, enumerate_overpartitions_strict, enumerate_partitions, for_each_partition, for_each_strict_partition,
    overline_allowed, validate_strict_overpartition, DEFAULT_CAP,
};
pub use ferrers::{ferrers_compose, ferrers_decompose, FerrersSplit};
pub use partition::{format_vector, Partition};
pub use stats::{stats_of, PartitionStats};
pub use weights::{oracle_series, Stat, WeightMap};

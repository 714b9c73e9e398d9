//! Depth regions, their dimensions, cascade sums and integrals, survival
//! times, and median-region partitions.

mod arrangement;
mod partition;
mod report;
mod survival;

pub use arrangement::{Arrangement2D, Feature, Line};
pub use partition::{
    find_median_partition, tukey_median_vertices, MedianPartition, MedianPartitionSearch,
    PARTITION_CAP,
};
pub use report::{
    cascade_integral, cascade_sum, median_region, region_dims, report_from_depths, CascadeSum,
    FeatureDepths, MedianRegion, RegionReport,
};
pub use survival::{
    check_integral_lemma, integral_lemma, survival_times, IntegralLemma, SurvivalProfile,
    RANDOM_BASES,
};

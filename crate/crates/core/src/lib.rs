//! Edge augmentation of metric graphs for low dilation.

pub mod cli;
pub mod error;
pub mod generators;
pub mod greedy;
pub mod instance;
pub mod metric;
pub mod oracle;
pub mod setcover;

pub use error::{Error, Result};
pub use metric::{
    apsp, dilation, incremental_update, DilationReport, DistanceMatrix, Edge, MetricGraph,
    MetricSpace,
};

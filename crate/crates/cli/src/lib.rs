//! Feature extraction runs over TUDataset-format graph collections: saw
//! signatures or multi-persistence grids per graph, written as CSV for a
//! downstream classifier.

pub mod config;
pub mod features;
pub mod inspect;

pub use config::{resolve_dataset_dir, GridShape, RunConfig, SummaryKind, ThresholdScope};
pub use features::{extract_features, write_features, FeatureRun, GraphStatus, PhaseTimings};
pub use inspect::{dataset_info, diagram_report};

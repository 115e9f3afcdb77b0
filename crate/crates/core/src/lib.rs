//! Topological summaries of graphs built from node-function filtrations.
//!
//! * [`graph`] and [`dataset`]: simple undirected graphs and the TUDataset reader.
//! * [`filtrations`]: structural node functions (degree, centralities, curvature).
//! * [`persistence`]: sublevel/superlevel filtrations, Betti curves, persistence
//!   diagrams in dimensions 0 and 1, and a brute-force oracle.
//! * [`saw`]: saw functions, their signatures, tension, and the L1/Sobolev and
//!   Wasserstein distances used to check their stability.
//! * [`mpgf`]: multi-persistence grid functions over two or more node functions.
//!
//! ```
//! use graphtopo::{
//!     compute_filtration, persistence_dim0, ComplexMode, Direction, FiltrationKind,
//!     FiltrationSpec, Graph, SawFunction,
//! };
//!
//! let g = Graph::cycle(6);
//! let degree = compute_filtration(&g, FiltrationKind::Degree)?;
//! let spec = FiltrationSpec::evenly_spaced(degree, 10, Direction::Sublevel, ComplexMode::Graph)?;
//! let pd0 = persistence_dim0(&g, &spec)?;
//! let signature = SawFunction::with_default_lag(&pd0)?.signature(100)?;
//! assert_eq!(signature.samples.len(), 100);
//! # Ok::<(), graphtopo::Error>(())
//! ```

pub mod dataset;
pub mod error;
pub mod filtrations;
mod gf2;
pub mod graph;
pub mod mpgf;
pub mod persistence;
pub mod saw;
mod union_find;

pub use dataset::{load_tudataset, write_tudataset, DatasetStats, GraphDataset};
pub use error::{Error, Result};
pub use filtrations::{compute_filtration, FiltrationKind};
pub use graph::{Graph, NodeValues};
pub use mpgf::{
    compute_mpgf2, compute_mpgf_d, grid_l1_distance, CellConvention, GridAxis, GridSpec2, MpgfGrid,
    MpgfGridD,
};
pub use persistence::{
    betti_curves, make_thresholds, persistence_dim0, persistence_dim1, BettiCurve, ComplexMode,
    Direction, FiltrationSpec, PersistenceDiagram, PersistencePair,
};
pub use saw::{
    default_lag, l1_distance, l2_sobolev_distance, wasserstein, BirthDeathCounts, SawFunction,
    SawSignature, WassersteinOrder,
};

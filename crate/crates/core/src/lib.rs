//! Exact electric resistance, potentials and random-walk bounds for
//! distance-regular graphs, computed from intersection arrays and checked
//! against explicit graphs.

pub mod array;
pub mod catalog;
pub mod error;
pub mod exact;
pub mod graph;
pub mod potentials;
pub mod report;
pub mod resistance;
pub mod scan;
pub mod verify;
pub mod walks;

pub use array::{
    canonical, check_divisibility, compute_distance_distribution, diameter_head_bound, validate_basic,
    CheckResult, DistanceDistribution, FeasibilityReport, HeadBound, IntersectionArray,
};
pub use catalog::{catalog, CatalogEntry};
pub use error::{AnalysisError, ArrayError, GraphError, ScanError};
pub use exact::Q;
pub use graph::{construct_named_graph, ExplicitGraph};
pub use potentials::{check_potential_properties, potentials_closed_form, potentials_recursive, PotentialSequence};
pub use report::{analyze, AnalysisReport};
pub use resistance::{
    biggs_ratio, classify_biggs, extremal_set, resistance_profile, BiggsClass, BiggsVerdict, ResistanceProfile,
};
pub use scan::{enumerate_arrays, scan, ScanQuery, ScanRecord, ScanReport};
pub use walks::{commute_time, simulate_hitting_time, spectral_check, walk_bounds, MonteCarloEstimate};

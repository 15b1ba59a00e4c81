//! Exact computation of distance-k domination, truncated metric dimension,
//! and (s,t)-locating-dominating sets in finite simple graphs, with closed
//! forms for standard families and a verification harness that re-checks
//! every claimed bound against the solver.

pub mod certify;
pub mod families;
pub mod graph;
pub mod harness;
pub mod metric;
pub mod report;
pub mod solve;
pub mod trees;
pub mod twins;

pub use certify::{
    code_vector, is_distance_k_dominating, is_distance_k_resolving, is_st_locating_dominating,
    CodeVector, LandmarkSet,
};
pub use graph::{Graph, GraphError};
pub use metric::TruncatedMetric;
pub use solve::{brute_force_min, dim_k, gamma_k, gamma_l_k, gamma_l_st, solve, Parameter, SolveResult};

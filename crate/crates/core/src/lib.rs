//! K_t-saturated subgraphs of the complete balanced multipartite graph K_k^n.
//!
//! The crate materializes six known constructions, checks saturation with
//! explicit witnesses, evaluates their closed-form sizes, and computes
//! sat(K_t, K_k^n) exactly by exhaustive search on very small hosts.

pub mod bitset;
pub mod clique;
pub mod constructions;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod report;
pub mod search;
pub mod verify;

pub use bitset::VertexSet;
pub use clique::{common_neighborhood, completes_kt, contains_clique, CliqueWitness};
pub use constructions::{
    build, general_bound_formula, sat_k3_formula, size_formula, ConstructionArtifacts,
    ConstructionKind, ConstructionSpec, K3Argmin,
};
pub use error::{Error, Result};
pub use graph::{Edge, Host, Subgraph, VertexId};
pub use graph6::{decode_graph6, encode_graph6};
pub use search::{
    brute_force_sat, greedy_saturate, random_greedy_upper_bound, ExactResult, HeuristicResult,
    SearchBudget,
};
pub use verify::{density_profile, is_kt_free, verify_saturated, PairDensity, SaturationReport};

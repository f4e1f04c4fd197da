//! Seeded instance generators: hardness constructions with brute-force
//! ground truth, and standard families for tests and benchmarks.

mod families;
mod hard;

use serde::{Deserialize, Serialize};

pub use families::{
    gen_complete, gen_complete_bipartite, gen_cycle, gen_gnp, gen_path, gen_random_cograph, gen_random_tree,
    gen_star, gen_subdivided, gen_theta, gen_tree_plus_edges, plant_p4s,
};
pub use hard::{
    find_colored_independent_set, find_orthogonal_pair, gen_4is_graph, gen_ov_graph, solve_4is_bruteforce,
    solve_ov_bruteforce, FourIsGraph, FourIsLandmarks, FourPartiteInstance, OvGraph, OvInstance, OvLandmarks,
};

/// Metadata written next to a generated edge list.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Sidecar {
    pub family: String,
    pub seed: Option<u64>,
    pub params: serde_json::Value,
    #[serde(skip_serializing_if = "serde_json::Value::is_null", default)]
    pub landmarks: serde_json::Value,
    /// Answer of the encoded decision problem, for hardness constructions.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub ground_truth: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub warning: Option<String>,
}

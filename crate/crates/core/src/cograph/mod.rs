//! Hyperbolicity parameterized by the distance to cographs.

mod cotree;
mod dc4t;
mod isi;
mod types;

pub use cotree::{cograph_deletion_set, cograph_recognize, Cotree, P4Witness, Recognition};
pub use dc4t::{
    distance_constrained_4tuple, hyperbolicity_cograph_distance, hyperbolicity_cograph_distance_with,
    max_delta_by_tuples, max_delta_quadruple, CographOptions, CographReport, DistanceConstraints, Instance,
};
pub use isi::{colored_isi, colored_isi_with_cap, is_colored_embedding, ColoredPattern, DEFAULT_PATTERN_CAP};
pub use types::{compute_type_vectors, TypeVector, TYPE_INF};

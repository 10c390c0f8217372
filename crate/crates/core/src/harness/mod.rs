//! Seeded samplers for the tree and map laws, the edge-length model and the
//! Monte Carlo experiments.

pub mod edge_length;
pub mod experiment;
pub mod samplers;
pub mod stats;
pub mod verify;

pub use edge_length::{perturbed_walk, EdgeLengthModel, LengthFamily, PerturbedWalk};
pub use experiment::{replica_rng, replicate, run_experiment, ExperimentConfig, ExperimentKind};
pub use samplers::{
    sample_labeled_uniform, sample_pd_encoding, sample_pointed_ps, sample_rooted_pd, sample_uniform_encoding,
    uniform_walk,
};
pub use stats::{ks_statistic, mean, median, quantile};
pub use verify::{check_instance, exhaustive_checks, Check};

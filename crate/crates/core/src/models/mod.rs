//! Random graph models tied to the two spectral estimators, their exact
//! log-likelihoods and samplers, and synthetic attribute generators.

mod generators;
mod kernel;
mod numeric;
mod prdrg;
mod sampling;
mod trophic;

pub use generators::{cluster_labels, gen_clustered_angles, gen_trophic_levels};
pub use kernel::{
    kernel_edge_prob, kernel_loglik, kernel_weighted_logdensity, Kernel, KernelModel,
    SquaredEuclidean, TrophicKernel,
};
pub use numeric::{ln_truncated_exp_normalizer, log_sum_exp, softplus};
pub use prdrg::{
    draw_outcome, prdrg_expected_edges, prdrg_loglik, prdrg_pair_log_probs, prdrg_pair_probs,
    prdrg_sample, OutcomeProbs, PairOutcome, PrdrgParams, PrdrgProfile,
};
pub use trophic::{
    trophic_edge_prob, trophic_expected_edges, trophic_loglik, trophic_sample,
    weighted_trophic_logdensity, TrophicParams, TrophicProfile,
};

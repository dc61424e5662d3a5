//! Clustered node attributes for synthetic experiments.

use std::f64::consts::TAU;

use rand::Rng;

use super::sampling::attribute_rng;
use crate::error::{Error, Result};

fn check(clusters: usize, size: usize, noise: f64) -> Result<()> {
    if clusters == 0 || size == 0 {
        return Err(Error::InvalidParameter(
            "cluster count and size must be positive".into(),
        ));
    }
    if !(noise >= 0.0 && noise.is_finite()) {
        return Err(Error::InvalidParameter(format!(
            "noise half-width {noise} must be >= 0"
        )));
    }
    Ok(())
}

fn clustered(
    clusters: usize,
    size: usize,
    noise: f64,
    seed: u64,
    center: impl Fn(usize) -> f64,
) -> Vec<f64> {
    let mut rng = attribute_rng(seed);
    let mut out = Vec::with_capacity(clusters * size);
    for l in 0..clusters {
        for _ in 0..size {
            let sigma = if noise > 0.0 {
                rng.random_range(-noise..noise)
            } else {
                0.0
            };
            out.push(center(l) + sigma);
        }
    }
    out
}

/// `size` nodes per cluster; cluster `l` (zero based) sits at angle
/// `2π l / clusters`, plus uniform noise on `(-noise, noise)`. Angles are not
/// wrapped.
pub fn gen_clustered_angles(
    clusters: usize,
    size: usize,
    noise: f64,
    seed: u64,
) -> Result<Vec<f64>> {
    check(clusters, size, noise)?;
    Ok(clustered(clusters, size, noise, seed, |l| {
        TAU * l as f64 / clusters as f64
    }))
}

/// Cluster `l` (zero based) sits at level `l + 1`, plus uniform noise.
pub fn gen_trophic_levels(clusters: usize, size: usize, noise: f64, seed: u64) -> Result<Vec<f64>> {
    check(clusters, size, noise)?;
    Ok(clustered(clusters, size, noise, seed, |l| (l + 1) as f64))
}

/// Ground-truth cluster of each generated node.
pub fn cluster_labels(clusters: usize, size: usize) -> Vec<usize> {
    (0..clusters)
        .flat_map(|l| std::iter::repeat_n(l, size))
        .collect()
}

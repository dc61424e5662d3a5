//! Detect and quantify periodic versus linear directed hierarchy in networks.
//!
//! The Magnetic Laplacian estimates a phase angle per node (periodic
//! hierarchy); the Trophic Laplacian estimates a level per node (linear
//! hierarchy). Each estimator has an associated random graph model, and the
//! maximized log-likelihoods of the two models are compared to decide which
//! structure the graph supports better.

pub mod cli;
pub mod error;
pub mod graph;
pub mod inference;
pub mod models;
pub mod spectral;

pub use error::{Error, Result};

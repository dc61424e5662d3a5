//! Kernel random graphs with attributes beyond a single scalar.

use directed_hierarchy::graph::DirectedGraph;
use directed_hierarchy::inference::{fit_gamma_mle, GammaBounds};
use directed_hierarchy::models::{kernel_loglik, KernelModel, SquaredEuclidean};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() -> directed_hierarchy::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let points: Vec<Vec<f64>> = (0..120)
        .map(|_| vec![rng.random_range(0.0..2.0), rng.random_range(0.0..2.0)])
        .collect();

    // nearby points are likely to link, in both directions
    let truth = KernelModel::new(points.clone(), SquaredEuclidean, 4.0)?;
    let mut edges = Vec::new();
    for i in 0..points.len() {
        for j in 0..points.len() {
            if i != j && rng.random::<f64>() < truth.edge_prob(i, j)? {
                edges.push((i, j));
            }
        }
    }
    let graph = DirectedGraph::new(points.len(), &edges)?;
    println!("{} edges", graph.edge_count());

    let loglik = |gamma: f64| {
        let model = KernelModel::new(points.clone(), SquaredEuclidean, gamma).expect("valid gamma");
        kernel_loglik(&graph, &model).expect("matching sizes")
    };
    let fit = fit_gamma_mle(loglik, GammaBounds::MLE)?;
    println!(
        "squared distance kernel: gamma {:.3}, loglik {:.2}",
        fit.gamma, fit.loglik
    );

    // any closure works as a kernel; here a shifted distance favoring links
    // from left to right
    let shifted = |x: &[f64], y: &[f64]| (y[0] - x[0] - 0.5).powi(2) + (y[1] - x[1]).powi(2);
    let model = KernelModel::new(points.clone(), shifted, fit.gamma)?;
    println!(
        "shifted kernel at the same gamma: loglik {:.2}",
        kernel_loglik(&graph, &model)?
    );
    Ok(())
}

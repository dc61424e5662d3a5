//! Recover cyclic cluster structure from a sampled graph with the Magnetic
//! Laplacian and print the clusters in phase order.

use directed_hierarchy::graph::apply_ordering;
use directed_hierarchy::models::{cluster_labels, gen_clustered_angles, prdrg_sample, PrdrgParams};
use directed_hierarchy::spectral::magnetic_algorithm;

fn main() -> directed_hierarchy::Result<()> {
    let (k, m, g) = (5, 40, 0.2);
    let theta = gen_clustered_angles(k, m, 0.2, 7)?;
    let graph = prdrg_sample(
        &PrdrgParams {
            theta,
            gamma: 5.0,
            g,
        },
        7,
    )?;
    println!("sampled {} nodes, {} edges", graph.n(), graph.edge_count());

    let phases = magnetic_algorithm(&graph, g)?;
    println!("smallest eigenvalue {:.4}", phases.smallest_eigenvalue);

    let truth = cluster_labels(k, m);
    let order = apply_ordering(&graph, &phases.theta)?;
    let mut runs: Vec<(usize, usize)> = Vec::new();
    for &v in &order {
        match runs.last_mut() {
            Some((c, len)) if *c == truth[v] => *len += 1,
            _ => runs.push((truth[v], 1)),
        }
    }
    println!("true cluster along the phase order (cluster x run length):");
    for (c, len) in runs {
        print!(" {c}x{len}");
    }
    println!();
    Ok(())
}

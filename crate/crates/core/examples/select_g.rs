//! Choose the rotation parameter g by maximized likelihood.

use directed_hierarchy::inference::{format_g, sci, select_g, FitOptions};
use directed_hierarchy::models::{gen_clustered_angles, prdrg_sample, PrdrgParams};

fn main() -> directed_hierarchy::Result<()> {
    let candidates: Vec<f64> = (2..=8).map(|k| 1.0 / k as f64).collect();
    for k in [3, 4, 6] {
        let theta = gen_clustered_angles(k, 30, 0.15, 5)?;
        let g = 1.0 / k as f64;
        let graph = prdrg_sample(
            &PrdrgParams {
                theta,
                gamma: 6.0,
                g,
            },
            5,
        )?;
        let sel = select_g(&graph, &candidates, &FitOptions::default())?;
        println!("{k} clusters, generated with g = {}", format_g(g));
        for c in &sel.candidates {
            println!(
                "  g = {:<4} gamma {:.3}  loglik {}",
                format_g(c.phases.g),
                c.fit.gamma_mle,
                sci(c.fit.loglik_at_mle)
            );
        }
        println!("  selected g = {}", format_g(sel.best_g()));
    }
    Ok(())
}

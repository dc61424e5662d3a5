//! Trophic levels of a weighted graph and the log-density of its weights.

use directed_hierarchy::graph::{parse_edge_list, WeightMode};
use directed_hierarchy::inference::{fit_gamma_mle, GammaBounds};
use directed_hierarchy::models::{weighted_trophic_logdensity, TrophicParams};
use directed_hierarchy::spectral::trophic_algorithm;

const TEXT: &str = "\
plankton krill 0.9
plankton fish 0.2
krill fish 0.7
krill whale 0.8
fish seal 0.6
seal orca 0.5
fish orca 0.1
";

fn main() -> directed_hierarchy::Result<()> {
    let g = parse_edge_list(TEXT, WeightMode::Weighted)?.graph;
    let levels = trophic_algorithm(&g)?;
    for (label, h) in g.labels().iter().zip(&levels.h) {
        println!("{label:>9}  {h:.3}");
    }
    println!("incoherence {:.4}", levels.incoherence);

    let logdensity = |gamma: f64| {
        weighted_trophic_logdensity(
            &g,
            &TrophicParams {
                h: levels.h.clone(),
                gamma,
            },
        )
        .expect("valid weights")
    };
    for gamma in [0.0, 0.5, 2.0, 8.0] {
        println!("gamma {gamma:>4}: log-density {:.4}", logdensity(gamma));
    }
    let best = fit_gamma_mle(logdensity, GammaBounds::MLE)?;
    println!(
        "best gamma {:.4} (boundary {:?})",
        best.gamma, best.boundary
    );
    Ok(())
}

//! Trophic levels of a small food chain and of a sampled layered graph.

use directed_hierarchy::graph::{largest_wcc, DirectedGraph};
use directed_hierarchy::models::{gen_trophic_levels, trophic_sample, TrophicParams};
use directed_hierarchy::spectral::trophic_algorithm;

fn pearson(x: &[f64], y: &[f64]) -> f64 {
    let n = x.len() as f64;
    let (mx, my) = (x.iter().sum::<f64>() / n, y.iter().sum::<f64>() / n);
    let (mut sxy, mut sxx, mut syy) = (0.0, 0.0, 0.0);
    for (a, b) in x.iter().zip(y) {
        sxy += (a - mx) * (b - my);
        sxx += (a - mx) * (a - mx);
        syy += (b - my) * (b - my);
    }
    sxy / (sxx * syy).sqrt()
}

fn main() -> directed_hierarchy::Result<()> {
    let labels = ["grass", "rabbit", "fox", "insect", "bird"]
        .map(String::from)
        .to_vec();
    // 0 grass, 1 rabbit, 2 fox, 3 insect, 4 bird; edges point from prey to predator
    let web = DirectedGraph::with_labels(labels, &[(0, 1), (1, 2), (0, 3), (3, 4), (4, 2)])?;
    let levels = trophic_algorithm(&web)?;
    for (label, h) in web.labels().iter().zip(&levels.h) {
        println!("{label:>7}  {h:.3}");
    }
    println!("incoherence {:.4}", levels.incoherence);

    let truth = gen_trophic_levels(5, 60, 0.2, 3)?;
    let sample = trophic_sample(
        &TrophicParams {
            h: truth.clone(),
            gamma: 5.0,
        },
        3,
    )?;
    let wcc = largest_wcc(&sample)?;
    let est = trophic_algorithm(&wcc.graph)?;
    let true_h: Vec<f64> = wcc.original_index.iter().map(|&i| truth[i]).collect();
    println!(
        "sampled graph: {} nodes, {} edges, correlation with true levels {:.4}",
        wcc.graph.n(),
        wcc.graph.edge_count(),
        pearson(&est.h, &true_h)
    );
    Ok(())
}

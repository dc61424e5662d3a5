//! Independent reference computations shared by the integration tests.
#![allow(dead_code)]

use std::f64::consts::TAU;

use directed_hierarchy::graph::DirectedGraph;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Dense 0/1 adjacency as nested vectors.
pub fn adjacency(g: &DirectedGraph) -> Vec<Vec<f64>> {
    let n = g.n();
    let mut a = vec![vec![0.0; n]; n];
    for e in g.edges() {
        a[e.src][e.dst] = e.weight;
    }
    a
}

/// Frustration straight from the adjacency matrix: `W = (A + Aᵀ)/2`, rotation
/// `exp(-2πi g (A_ij - A_ji))`, summed over ordered pairs.
pub fn frustration_oracle(g: &DirectedGraph, theta: &[f64], rot: f64) -> f64 {
    let a = adjacency(g);
    let n = g.n();
    let mut total = 0.0;
    for i in 0..n {
        for j in 0..n {
            let w = 0.5 * (a[i][j] + a[j][i]);
            if w == 0.0 {
                continue;
            }
            let delta = -TAU * rot * (a[i][j] - a[j][i]);
            let zi = Complex64::from_polar(1.0, theta[i]);
            let zj = Complex64::from_polar(1.0, theta[j] + delta);
            total += w * (zi - zj).norm_sqr();
        }
    }
    total
}

/// `Σ A_ij (h_j - h_i - 1)²`.
pub fn incoherence_numerator(g: &DirectedGraph, h: &[f64]) -> f64 {
    g.edges()
        .iter()
        .map(|e| e.weight * (h[e.dst] - h[e.src] - 1.0).powi(2))
        .sum()
}

/// Each ordered pair `i != j` is an edge with probability `p`.
pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> DirectedGraph {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j && rng.random::<f64>() < p {
                edges.push((i, j));
            }
        }
    }
    DirectedGraph::new(n, &edges).unwrap()
}

/// A randomly oriented random spanning tree plus extra random edges; always
/// weakly connected.
pub fn random_connected_graph(rng: &mut impl Rng, n: usize, extra: f64) -> DirectedGraph {
    let mut edges = Vec::new();
    for v in 1..n {
        let u = rng.random_range(0..v);
        if rng.random::<bool>() {
            edges.push((u, v));
        } else {
            edges.push((v, u));
        }
    }
    for i in 0..n {
        for j in 0..n {
            if i != j && rng.random::<f64>() < extra {
                edges.push((i, j));
            }
        }
    }
    DirectedGraph::new(n, &edges).unwrap()
}

pub fn pearson(x: &[f64], y: &[f64]) -> f64 {
    let n = x.len() as f64;
    let mx = x.iter().sum::<f64>() / n;
    let my = y.iter().sum::<f64>() / n;
    let (mut sxy, mut sxx, mut syy) = (0.0, 0.0, 0.0);
    for (a, b) in x.iter().zip(y) {
        sxy += (a - mx) * (b - my);
        sxx += (a - mx) * (a - mx);
        syy += (b - my) * (b - my);
    }
    sxy / (sxx * syy).sqrt()
}

/// Agreement of two angle vectors up to a global rotation and reflection:
/// the larger of `|mean exp(i(a - b))|` and `|mean exp(i(a + b))|`.
pub fn circular_agreement(a: &[f64], b: &[f64]) -> f64 {
    let n = a.len() as f64;
    let resultant = |sign: f64| {
        a.iter()
            .zip(b)
            .map(|(x, y)| Complex64::from_polar(1.0, x - sign * y))
            .sum::<Complex64>()
            .norm()
            / n
    };
    resultant(1.0).max(resultant(-1.0))
}

/// Adaptive Simpson quadrature on `[a, b]`.
pub fn adaptive_simpson(f: &impl Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> f64 {
    fn simpson(fa: f64, fm: f64, fb: f64, a: f64, b: f64) -> f64 {
        (b - a) / 6.0 * (fa + 4.0 * fm + fb)
    }
    #[allow(clippy::too_many_arguments)]
    fn recurse(
        f: &impl Fn(f64) -> f64,
        a: f64,
        b: f64,
        fa: f64,
        fm: f64,
        fb: f64,
        whole: f64,
        tol: f64,
        depth: u32,
    ) -> f64 {
        let m = 0.5 * (a + b);
        let (lm, rm) = (0.5 * (a + m), 0.5 * (m + b));
        let (flm, frm) = (f(lm), f(rm));
        let left = simpson(fa, flm, fm, a, m);
        let right = simpson(fm, frm, fb, m, b);
        let diff = left + right - whole;
        if depth == 0 || diff.abs() <= 15.0 * tol {
            left + right + diff / 15.0
        } else {
            recurse(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1)
                + recurse(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1)
        }
    }
    let (fa, fm, fb) = (f(a), f(0.5 * (a + b)), f(b));
    let whole = simpson(fa, fm, fb, a, b);
    recurse(f, a, b, fa, fm, fb, whole, tol, 50)
}

/// Members of `values` within `tol` of the optimum, as a sorted index list.
pub fn optimal_set(values: &[f64], maximize: bool) -> Vec<usize> {
    let best = if maximize {
        values.iter().copied().fold(f64::NEG_INFINITY, f64::max)
    } else {
        values.iter().copied().fold(f64::INFINITY, f64::min)
    };
    let tol = 1e-9 * (1.0 + best.abs());
    (0..values.len())
        .filter(|&k| (values[k] - best).abs() <= tol)
        .collect()
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    loop {
        out.push(p.clone());
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| p[i] < p[i + 1]) else {
            return out;
        };
        let j = (i + 1..n).rev().find(|&j| p[j] > p[i]).unwrap();
        p.swap(i, j);
        p[i + 1..].reverse();
    }
}

//! Small log-domain helpers.

/// `ln(1 + e^x)` without overflow.
pub fn softplus(x: f64) -> f64 {
    if x > 0.0 {
        x + (-x).exp().ln_1p()
    } else {
        x.exp().ln_1p()
    }
}

/// `ln Σ e^{x_k}`.
pub fn log_sum_exp(xs: &[f64]) -> f64 {
    let max = xs.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if max == f64::NEG_INFINITY {
        return max;
    }
    max + xs.iter().map(|&x| (x - max).exp()).sum::<f64>().ln()
}

/// `ln Z(x)` for `Z(x) = (1 - e^{-x}) / x`, the normalizer of the density
/// `e^{-x w} / Z` on `(0, 1)`. `Z(0) = 1`.
pub fn ln_truncated_exp_normalizer(x: f64) -> f64 {
    if x == 0.0 {
        0.0
    } else if x.abs() < 1e-5 {
        // Z = 1 - x/2 + x²/6 - x³/24 + ...
        (-x / 2.0 + x * x / 6.0 - x * x * x / 24.0).ln_1p()
    } else {
        (-(-x).exp_m1() / x).ln()
    }
}

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::growth::is_everlasting;
use crate::linalg::growth_values;
use crate::words::D0LSystem;

use super::logspace::ln_biguint;

/// Largest window end the ratio checks will evaluate (the doubled window
/// reaches `2·n_hi`).
pub const MAX_WINDOW_END: u64 = 20_000;

/// Maximum relative change of the ratio spread under window doubling for
/// the fit to count as stable.
pub const STABILITY_TOLERANCE: f64 = 0.25;

/// Ratios `|σⁿ(w)| / (n^α βⁿ)` over `n_lo..=n_hi`, plus the spread over the
/// doubled window `n_lo..=2·n_hi`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AsymptoticsReport {
    pub n_lo: u64,
    pub n_hi: u64,
    pub alpha: u32,
    pub beta: f64,
    pub ratio_min: f64,
    pub ratio_max: f64,
    pub spread: f64,
    pub spread_doubled: f64,
    pub stable: bool,
}

fn ln_ratios(lengths: &[num_bigint::BigUint], alpha: u32, ln_beta: f64, n_lo: u64, n_hi: u64) -> Vec<f64> {
    (n_lo..=n_hi)
        .map(|n| ln_biguint(&lengths[n as usize]) - f64::from(alpha) * (n as f64).ln() - n as f64 * ln_beta)
        .collect()
}

fn min_max(xs: &[f64]) -> (f64, f64) {
    xs.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &x| (lo.min(x), hi.max(x)))
}

/// Checks `|σⁿ(w)| ≍ n^α βⁿ` on a window. Lengths are exact; the ratio is
/// formed in log space so `βⁿ` never overflows.
///
/// The candidate is *stable* when `max/min` of the ratio changes by less than
/// 25% when the window end is doubled. A wrong exponent makes the ratio
/// drift like a power of `n`, and the spread then roughly doubles.
pub fn check_asymptotics(s: &D0LSystem, alpha: u32, beta: f64, n_lo: u64, n_hi: u64) -> Result<AsymptoticsReport> {
    if n_lo < 1 || n_hi <= n_lo {
        return Err(Error::InvalidArgument(format!("need 1 ≤ n_lo < n_hi, got [{n_lo}, {n_hi}]")));
    }
    if !(beta.is_finite() && beta > 0.0) {
        return Err(Error::InvalidArgument(format!("beta must be positive, got {beta}")));
    }
    if 2 * n_hi > MAX_WINDOW_END {
        return Err(Error::InvalidArgument(format!(
            "window end {n_hi} too large: the doubled window would exceed {MAX_WINDOW_END}"
        )));
    }
    if !is_everlasting(s) {
        return Err(Error::Mortal);
    }
    let lengths = growth_values(s, 2 * n_hi);
    let ln_beta = beta.ln();
    let window = ln_ratios(&lengths, alpha, ln_beta, n_lo, n_hi);
    let doubled = ln_ratios(&lengths, alpha, ln_beta, n_lo, 2 * n_hi);
    let (lo, hi) = min_max(&window);
    let (dlo, dhi) = min_max(&doubled);
    let spread = (hi - lo).exp();
    let spread_doubled = (dhi - dlo).exp();
    Ok(AsymptoticsReport {
        n_lo,
        n_hi,
        alpha,
        beta,
        ratio_min: lo.exp(),
        ratio_max: hi.exp(),
        spread,
        spread_doubled,
        stable: (spread_doubled / spread - 1.0).abs() < STABILITY_TOLERANCE,
    })
}

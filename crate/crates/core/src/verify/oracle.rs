use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::growth::is_everlasting;
use crate::linalg::growth_values;
use crate::words::D0LSystem;

use super::logspace::ln_biguint;

/// Smallest window `n_hi − n_lo` the fit accepts.
pub const MIN_FIT_WINDOW: u64 = 20;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SlopeFit {
    pub alpha_est: f64,
    pub beta_est: f64,
}

/// Numeric estimate of `(α, β)` independent of the structural analysis:
/// least squares of `ln|σⁿ(w)| ≈ a·n + b·ln n + c` over the window, giving
/// `β ≈ eᵃ`, `α ≈ b`.
pub fn slope_oracle(s: &D0LSystem, n_lo: u64, n_hi: u64) -> Result<SlopeFit> {
    if n_lo < 1 || n_hi < n_lo + MIN_FIT_WINDOW {
        return Err(Error::InvalidArgument(format!(
            "degenerate window [{n_lo}, {n_hi}]: need n_lo ≥ 1 and at least {MIN_FIT_WINDOW} steps"
        )));
    }
    if !is_everlasting(s) {
        return Err(Error::Mortal);
    }
    let lengths = growth_values(s, n_hi);
    let samples: Vec<([f64; 3], f64)> = (n_lo..=n_hi)
        .map(|n| {
            let x = n as f64;
            ([x, x.ln(), 1.0], ln_biguint(&lengths[n as usize]))
        })
        .collect();
    let [a, b, _] = least_squares(&samples)?;
    Ok(SlopeFit { alpha_est: b, beta_est: a.exp() })
}

/// Three-parameter linear least squares via normal equations on
/// standardized columns.
fn least_squares(samples: &[([f64; 3], f64)]) -> Result<[f64; 3]> {
    let m = samples.len() as f64;
    // Standardize the two non-constant columns.
    let mut mean = [0.0; 2];
    let mut scale = [0.0; 2];
    for k in 0..2 {
        mean[k] = samples.iter().map(|(x, _)| x[k]).sum::<f64>() / m;
        scale[k] = (samples.iter().map(|(x, _)| (x[k] - mean[k]).powi(2)).sum::<f64>() / m).sqrt();
        if scale[k] == 0.0 {
            return Err(Error::InvalidArgument("degenerate design matrix".into()));
        }
    }
    let row = |x: &[f64; 3]| [(x[0] - mean[0]) / scale[0], (x[1] - mean[1]) / scale[1], 1.0];

    let mut ata = [[0.0f64; 3]; 3];
    let mut aty = [0.0f64; 3];
    for (x, y) in samples {
        let r = row(x);
        for i in 0..3 {
            aty[i] += r[i] * y;
            for j in 0..3 {
                ata[i][j] += r[i] * r[j];
            }
        }
    }
    let z = solve3(ata, aty).ok_or_else(|| Error::InvalidArgument("singular normal equations".into()))?;
    let a = z[0] / scale[0];
    let b = z[1] / scale[1];
    let c = z[2] - a * mean[0] - b * mean[1];
    Ok([a, b, c])
}

fn solve3(mut a: [[f64; 3]; 3], mut b: [f64; 3]) -> Option<[f64; 3]> {
    for col in 0..3 {
        let pivot = (col..3).max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs()))?;
        if a[pivot][col].abs() < 1e-12 {
            return None;
        }
        a.swap(col, pivot);
        b.swap(col, pivot);
        for r in col + 1..3 {
            let f = a[r][col] / a[col][col];
            let pivot_row = a[col];
            for (x, p) in a[r][col..].iter_mut().zip(&pivot_row[col..]) {
                *x -= f * p;
            }
            b[r] -= f * b[col];
        }
    }
    let mut x = [0.0; 3];
    for r in (0..3).rev() {
        let tail: f64 = (r + 1..3).map(|c| a[r][c] * x[c]).sum();
        x[r] = (b[r] - tail) / a[r][r];
    }
    Some(x)
}

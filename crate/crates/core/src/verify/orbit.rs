use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Bin coverage of `{cos(nθ)}` and `{sin(nθ)}` in `[-1, 1]`, `θ = arg(p + qi)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DensityReport {
    pub p: i64,
    pub q: i64,
    pub sample_count: u64,
    pub bin_width: f64,
    pub bins_total: usize,
    pub cos_bins_hit: usize,
    pub sin_bins_hit: usize,
}

impl DensityReport {
    pub fn all_hit(&self) -> bool {
        self.cos_bins_hit == self.bins_total && self.sin_bins_hit == self.bins_total
    }
}

/// `(n, cos(nθ), sin(nθ))` for `n < count`.
pub fn orbit_samples(p: i64, q: i64, count: u64) -> Vec<(u64, f64, f64)> {
    let theta = (q as f64).atan2(p as f64);
    (0..count)
        .map(|n| {
            let (s, c) = (n as f64 * theta).sin_cos();
            (n, c, s)
        })
        .collect()
}

fn bin_of(x: f64, delta: f64, bins: usize) -> usize {
    (((x + 1.0) / delta).floor().max(0.0) as usize).min(bins - 1)
}

pub fn orbit_density(p: i64, q: i64, count: u64, delta: f64) -> Result<DensityReport> {
    if p == 0 && q == 0 {
        return Err(Error::InvalidArgument("p + qi must be non-zero".into()));
    }
    if !(delta > 0.0 && delta < 2.0) {
        return Err(Error::InvalidArgument(format!("bin width must lie in (0, 2), got {delta}")));
    }
    if count == 0 {
        return Err(Error::InvalidArgument("need at least one sample".into()));
    }
    let bins = (2.0 / delta).ceil() as usize;
    let mut cos_hit = vec![false; bins];
    let mut sin_hit = vec![false; bins];
    for (_, c, s) in orbit_samples(p, q, count) {
        cos_hit[bin_of(c, delta, bins)] = true;
        sin_hit[bin_of(s, delta, bins)] = true;
    }
    Ok(DensityReport {
        p,
        q,
        sample_count: count,
        bin_width: delta,
        bins_total: bins,
        cos_bins_hit: cos_hit.iter().filter(|&&h| h).count(),
        sin_bins_hit: sin_hit.iter().filter(|&&h| h).count(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum NivenClass {
    Rational(BigRational),
    Irrational,
}

/// Whether `cos(2πρ)` is rational. Writing `ρ mod 1 = s/t` in lowest terms,
/// it is rational exactly for `t ∈ {1, 2, 3, 4, 6}`, with value in
/// `{1, −1, −1/2, 0, 1/2}`.
pub fn niven_classify(rho: &BigRational) -> NivenClass {
    let frac = rho - rho.floor();
    let t = frac.denom();
    let half = || BigRational::new(BigInt::one(), BigInt::from(2));
    let value = match t.to_u64() {
        Some(1) => BigRational::one(),
        Some(2) => -BigRational::one(),
        Some(3) => -half(),
        Some(4) => BigRational::zero(),
        Some(6) => half(),
        _ => return NivenClass::Irrational,
    };
    NivenClass::Rational(value)
}

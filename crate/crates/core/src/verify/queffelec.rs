use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::growth::{dependency_graph, is_irreducible};
use crate::linalg::{incidence, perron_root, AlgebraicNumber};
use crate::words::{D0LSystem, Letter};

use super::logspace::ln_bigint_abs;

/// Number of trailing values compared by the convergence test.
pub const TAIL_LEN: usize = 3;

/// Convergence of `|σ^{nq+r}(a)|_b / β^{nq+r}` along one residue class.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConvergenceReport {
    pub residue: u64,
    pub modulus: u64,
    /// `(exponent, normalized value)` for the last values of the class.
    pub tail: Vec<(u64, f64)>,
    pub converged: bool,
    pub limit_estimate: f64,
    /// The count vanishes on the whole tail, so the limit is 0 rather than
    /// positive.
    pub zero_tail: bool,
    pub warning: Option<String>,
}

fn close(x: f64, y: f64, rel_tol: f64) -> bool {
    x == y || (x - y).abs() <= rel_tol * x.abs().max(y.abs())
}

/// Normalized occurrence counts of `b` in `σᵐ(a)` for `m ≤ n_max`, split by
/// residue of `m` modulo the common letter period.
pub fn queffelec_check(
    s: &D0LSystem,
    a: Letter,
    b: Letter,
    rel_tol: f64,
    n_max: u64,
) -> Result<Vec<ConvergenceReport>> {
    if !s.alphabet().contains(a) || !s.alphabet().contains(b) {
        return Err(Error::LetterOutOfRange(a.index().max(b.index())));
    }
    if !(rel_tol > 0.0 && rel_tol < 1.0) {
        return Err(Error::InvalidArgument(format!("rel_tol must lie in (0, 1), got {rel_tol}")));
    }
    if !is_irreducible(s) {
        return Err(Error::Reducible);
    }
    let g = dependency_graph(s);
    let q = g.component_period(&(0..s.alphabet().len()).collect::<Vec<_>>());
    let m = incidence(s);
    let beta = perron_root(&m)?;
    if q == 0 || beta == AlgebraicNumber::zero() {
        return Err(Error::Mortal);
    }
    if n_max < q * TAIL_LEN as u64 {
        return Err(Error::InvalidArgument(format!(
            "n_max = {n_max} leaves fewer than {TAIL_LEN} values per residue class (period {q})"
        )));
    }
    let ln_beta = beta.to_f64().ln();

    let mut counts = Vec::with_capacity(n_max as usize + 1);
    let mut v = vec![num_bigint::BigInt::from(0); s.alphabet().len()];
    v[a.index()] = 1.into();
    for _ in 0..=n_max {
        counts.push(v[b.index()].clone());
        v = m.mul_vec(&v);
    }
    let normalized = |k: u64| -> f64 {
        let c = &counts[k as usize];
        if c.is_positive() {
            (ln_bigint_abs(c) - k as f64 * ln_beta).exp()
        } else {
            0.0
        }
    };

    let mut reports = Vec::with_capacity(q as usize);
    for r in 0..q {
        let last = r + (n_max - r) / q * q;
        let tail: Vec<(u64, f64)> = (0..TAIL_LEN as u64)
            .rev()
            .map(|i| last - i * q)
            .map(|k| (k, normalized(k)))
            .collect();
        let converged = tail
            .iter()
            .enumerate()
            .all(|(i, &(_, x))| tail[i + 1..].iter().all(|&(_, y)| close(x, y, rel_tol)));
        let zero_tail = tail.iter().all(|&(_, x)| x == 0.0);
        let warning = zero_tail.then(|| {
            format!("count vanishes on the tail of residue {r} mod {q}; the limit along this class is 0, not positive")
        });
        reports.push(ConvergenceReport {
            residue: r,
            modulus: q,
            limit_estimate: tail.last().map(|&(_, x)| x).unwrap_or(0.0),
            tail,
            converged,
            zero_tail,
            warning,
        });
    }
    Ok(reports)
}

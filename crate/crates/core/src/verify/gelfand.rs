use num_bigint::{BigInt, BigUint};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::IntMatrix;

use super::logspace::ln_biguint;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Norm {
    Manhattan,
    Max,
}

impl Norm {
    pub fn of(self, m: &IntMatrix) -> BigUint {
        match self {
            Norm::Manhattan => m.manhattan_norm(),
            Norm::Max => m.max_norm(),
        }
    }
}

/// `‖Mⁿ‖^{1/n}`, which tends to the spectral radius as `n` grows.
pub fn gelfand_estimate(m: &IntMatrix, n: u64, norm: Norm) -> Result<f64> {
    if n == 0 {
        return Err(Error::InvalidArgument("gelfand_estimate needs n ≥ 1".into()));
    }
    let value = norm.of(&m.pow(n));
    Ok((ln_biguint(&value) / n as f64).exp())
}

/// The 2×2 matrix with eigenvalues `4 ± 3i`, i.e. `5` times a rotation.
pub fn rotation_example() -> IntMatrix {
    IntMatrix::from_rows(&[vec![4, -3], vec![3, 4]]).expect("square")
}

/// Exact check of the norm bounds of `Mⁿ` for [`rotation_example`]:
/// `2·5ⁿ ≤ ‖Mⁿ‖₁ ≤ 2√2·5ⁿ` and `(√2/2)·5ⁿ ≤ ‖Mⁿ‖∞ ≤ 5ⁿ`.
///
/// The irrational bounds are squared so every comparison is between
/// integers.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RotationBounds {
    pub n: u64,
    /// `‖Mⁿ‖₁ / 5ⁿ`, for display.
    pub manhattan_ratio: f64,
    /// `‖Mⁿ‖∞ / 5ⁿ`, for display.
    pub max_ratio: f64,
    pub manhattan_ok: bool,
    pub max_ok: bool,
}

pub fn rotation_bounds(n: u64) -> RotationBounds {
    let mn = rotation_example().pow(n);
    let l1 = BigInt::from(mn.manhattan_norm());
    let linf = BigInt::from(mn.max_norm());
    let five_n = BigInt::from(5).pow(n as u32);
    let twenty_five_n = &five_n * &five_n;

    // 2·5ⁿ ≤ ‖·‖₁ and ‖·‖₁² ≤ 8·25ⁿ.
    let manhattan_ok = BigInt::from(2) * &five_n <= l1 && &l1 * &l1 <= BigInt::from(8) * &twenty_five_n;
    // 25ⁿ ≤ 2‖·‖∞² and ‖·‖∞ ≤ 5ⁿ.
    let max_ok = twenty_five_n <= BigInt::from(2) * &linf * &linf && linf <= five_n;

    let ln5n = n as f64 * 5f64.ln();
    RotationBounds {
        n,
        manhattan_ratio: (ln_biguint(l1.magnitude()) - ln5n).exp(),
        max_ratio: (ln_biguint(linf.magnitude()) - ln5n).exp(),
        manhattan_ok,
        max_ok,
    }
}

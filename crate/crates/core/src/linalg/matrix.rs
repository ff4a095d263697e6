use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::words::{parikh, D0LSystem, Letter};

/// Dense square matrix of arbitrary-precision integers, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    dim: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(dim: usize) -> Self {
        Self { dim, entries: vec![BigInt::zero(); dim * dim] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.entries[i * dim + i] = BigInt::one();
        }
        m
    }

    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Result<Self> {
        let dim = rows.len();
        if rows.iter().any(|r| r.len() != dim) {
            return Err(Error::InvalidArgument("matrix must be square".into()));
        }
        let entries = rows.iter().flat_map(|r| r.iter().cloned().map(Into::into)).collect();
        Ok(Self { dim, entries })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigInt) {
        self.entries[i * self.dim + j] = value;
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn rows(&self) -> impl Iterator<Item = &[BigInt]> {
        self.entries.chunks(self.dim.max(1)).take(self.dim)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.entries.iter().all(|e| !e.is_negative())
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn trace(&self) -> BigInt {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    pub fn max_row_sum(&self) -> BigInt {
        self.rows()
            .map(|r| r.iter().map(|e| e.abs()).sum::<BigInt>())
            .max()
            .unwrap_or_default()
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        let d = self.dim;
        let mut out = IntMatrix::zeros(d);
        for i in 0..d {
            for k in 0..d {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..d {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.entries[i * d + j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.dim, v.len(), "dimension mismatch");
        self.rows()
            .map(|r| r.iter().zip(v).filter(|(a, _)| !a.is_zero()).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn add(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect();
        IntMatrix { dim: self.dim, entries }
    }

    pub fn scale(&self, c: &BigInt) -> IntMatrix {
        IntMatrix { dim: self.dim, entries: self.entries.iter().map(|e| e * c).collect() }
    }

    /// `selfⁿ` by binary exponentiation; `self⁰` is the identity.
    pub fn pow(&self, mut n: u64) -> IntMatrix {
        let mut result = IntMatrix::identity(self.dim);
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                result = result.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Principal submatrix on the given row/column indices (in that order).
    pub fn principal_submatrix(&self, indices: &[usize]) -> IntMatrix {
        let d = indices.len();
        let mut out = IntMatrix::zeros(d);
        for (a, &i) in indices.iter().enumerate() {
            for (b, &j) in indices.iter().enumerate() {
                out.entries[a * d + b] = self.get(i, j).clone();
            }
        }
        out
    }

    /// Sum of the magnitudes of all entries.
    pub fn manhattan_norm(&self) -> BigUint {
        self.entries.iter().map(BigInt::magnitude).sum()
    }

    /// Largest entry magnitude.
    pub fn max_norm(&self) -> BigUint {
        self.entries.iter().map(BigInt::magnitude).max().cloned().unwrap_or_default()
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.rows() {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

impl Serialize for IntMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Vec<String>> = self.rows().map(|r| r.iter().map(ToString::to_string).collect()).collect();
        rows.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for IntMatrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let rows: Vec<Vec<String>> = Vec::deserialize(deserializer)?;
        let parsed = rows
            .iter()
            .map(|r| r.iter().map(|s| s.parse::<BigInt>()).collect::<std::result::Result<Vec<_>, _>>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(D::Error::custom)?;
        IntMatrix::from_rows(&parsed).map_err(D::Error::custom)
    }
}

/// Free-function form of [`IntMatrix::pow`].
pub fn mat_pow(m: &IntMatrix, n: u64) -> IntMatrix {
    m.pow(n)
}

pub fn manhattan_norm(m: &IntMatrix) -> BigUint {
    m.manhattan_norm()
}

pub fn max_norm(m: &IntMatrix) -> BigUint {
    m.max_norm()
}

/// Incidence matrix with rows and columns indexed by `letter_order`: entry
/// `(i, j)` counts occurrences of `letter_order[i]` in the image of
/// `letter_order[j]`.
pub fn incidence_matrix(s: &D0LSystem, letter_order: &[Letter]) -> Result<IntMatrix> {
    let d = s.alphabet().len();
    let mut position = vec![usize::MAX; d];
    for (i, &l) in letter_order.iter().enumerate() {
        if !s.alphabet().contains(l) || position[l.index()] != usize::MAX {
            return Err(Error::InvalidArgument("letter order must list each letter exactly once".into()));
        }
        position[l.index()] = i;
    }
    if letter_order.len() != d {
        return Err(Error::InvalidArgument("letter order must list each letter exactly once".into()));
    }
    let mut m = IntMatrix::zeros(d);
    for (j, &a) in letter_order.iter().enumerate() {
        for &b in s.morphism().image(a).letters() {
            let i = position[b.index()];
            m.entries[i * d + j] += 1;
        }
    }
    Ok(m)
}

/// Incidence matrix in alphabet order.
pub fn incidence(s: &D0LSystem) -> IntMatrix {
    let order: Vec<Letter> = s.alphabet().letters().collect();
    incidence_matrix(s, &order).expect("alphabet order is a permutation")
}

fn axiom_vector(s: &D0LSystem) -> Vec<BigInt> {
    parikh(s.axiom(), s.alphabet()).counts.into_iter().map(|c| BigInt::from_biguint(Sign::Plus, c)).collect()
}

fn to_length(v: &[BigInt]) -> BigUint {
    v.iter().sum::<BigInt>().to_biguint().expect("counts are nonnegative")
}

/// `|σⁿ(axiom)|` from the incidence matrix, without building the word.
pub fn growth_value(s: &D0LSystem, n: u64) -> BigUint {
    let m = incidence(s).pow(n);
    to_length(&m.mul_vec(&axiom_vector(s)))
}

/// `|σᵏ(axiom)|` for every `k` in `0..=n_max`.
pub fn growth_values(s: &D0LSystem, n_max: u64) -> Vec<BigUint> {
    parikh_sequence(s, n_max).iter().map(|v| to_length(v)).collect()
}

/// Parikh vectors of `σᵏ(axiom)` for `k` in `0..=n_max`, as signed vectors
/// ready for further products.
pub fn parikh_sequence(s: &D0LSystem, n_max: u64) -> Vec<Vec<BigInt>> {
    let m = incidence(s);
    let mut v = axiom_vector(s);
    let mut out = Vec::with_capacity(n_max as usize + 1);
    out.push(v.clone());
    for _ in 0..n_max {
        v = m.mul_vec(&v);
        out.push(v.clone());
    }
    out
}

//! Exact growth analysis for D0L-systems.
//!
//! For a D0L-system `(A, σ, w)` whose iterates never vanish there are an
//! integer `0 ≤ α < |A|` and a real algebraic `β ≥ 1` with
//! `|σⁿ(w)| ≍ n^α βⁿ`. This crate computes `(α, β)` exactly:
//!
//! - [`words`]: alphabets, words, morphisms, the `.dol` text format.
//! - [`linalg`]: big-integer incidence matrices, norms, characteristic
//!   polynomials, Sturm root isolation and exact algebraic comparisons.
//! - [`growth`]: mortality, reduction, strongly connected components,
//!   periods, primitivity, the growth order itself, cycle detection.
//! - [`verify`]: independent numeric checks of the above.
//! - [`cli`]: the commands behind the `d0l` binary.
//!
//! ```
//! use d0l_growth::{growth::growth_order, growth::GrowthClass, words::parse_system};
//!
//! let fib = parse_system("a -> a b\nb -> a\naxiom: a").unwrap();
//! let order = growth_order(&fib);
//! assert_eq!(order.class, GrowthClass::Exponential);
//! assert_eq!(order.alpha, Some(0));
//! assert_eq!(order.beta.unwrap().decimal_approx(10), "1.618033989");
//! ```

pub mod cli;
pub mod error;
pub mod growth;
pub mod linalg;
pub mod verify;
pub mod words;

pub use error::{Error, Result};
pub use growth::{growth_order, GrowthClass, GrowthOrder};
pub use linalg::{AlgebraicNumber, IntMatrix, IntPolynomial};
pub use words::{parse_system, D0LSystem, Letter, Word};

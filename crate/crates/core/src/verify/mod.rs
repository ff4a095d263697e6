//! Empirical checks that run independently of the structural growth
//! analysis: ratio stability, a numeric slope fit, Gelfand estimates,
//! per-residue convergence of normalized letter counts, and orbit density.

pub mod asymptotics;
pub mod gelfand;
pub mod logspace;
pub mod oracle;
pub mod orbit;
pub mod queffelec;

pub use asymptotics::{check_asymptotics, AsymptoticsReport, STABILITY_TOLERANCE};
pub use gelfand::{gelfand_estimate, rotation_bounds, rotation_example, Norm, RotationBounds};
pub use logspace::{ln_bigint_abs, ln_biguint};
pub use oracle::{slope_oracle, SlopeFit};
pub use orbit::{niven_classify, orbit_density, orbit_samples, DensityReport, NivenClass};
pub use queffelec::{queffelec_check, ConvergenceReport};

//! Structural analysis of D0L-systems and their exact growth order.

pub mod cycle;
pub mod graph;
pub mod order;
pub mod reduce;
pub mod report;

pub use cycle::{detect_cycle, detect_cycle_with_word_cap, PeriodicityReport, DEFAULT_CYCLE_CAP};
pub use graph::{
    condensation, dependency_graph, is_irreducible, is_primitive, is_primitive_wielandt, period,
    scc_condensation, Component, DependencyGraph, SccDecomposition,
};
pub use order::{analyze_growth, growth_order, GrowthAnalysis, GrowthClass, GrowthOrder};
pub use reduce::{is_everlasting, is_reduced, mortal_letters, mortal_mask, reduce};
pub use report::{analysis_report, AnalysisReport, SccEntry};

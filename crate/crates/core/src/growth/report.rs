use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::linalg::AlgebraicNumber;
use crate::words::D0LSystem;

use super::cycle::{detect_cycle, PeriodicityReport};
use super::order::{analyze_growth, GrowthClass};
use super::reduce::mortal_letters;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SccEntry {
    pub letters: Vec<String>,
    pub perron: AlgebraicNumber,
    pub period: u64,
    pub basic: bool,
}

/// Machine-readable structural analysis of one system. Field order is part
/// of the output format.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub reduced_alphabet: Vec<String>,
    pub mortal_letters: Vec<String>,
    pub everlasting: bool,
    pub scc: Vec<SccEntry>,
    pub alpha: Option<u32>,
    pub beta: Option<AlgebraicNumber>,
    pub class: GrowthClass,
    pub periodicity: PeriodicityReport,
}

pub fn analysis_report(s: &D0LSystem, cycle_cap: u64) -> Result<AnalysisReport> {
    let analysis = analyze_growth(s);
    let reduced = &analysis.reduced;
    let sym = |l| reduced.alphabet().symbol(l).to_string();
    let scc = analysis
        .scc
        .components
        .iter()
        .zip(&analysis.basic)
        .map(|(c, &basic)| SccEntry {
            letters: c.letters.iter().map(|&l| sym(l)).collect(),
            perron: c.perron.clone(),
            period: c.period,
            basic,
        })
        .collect();
    Ok(AnalysisReport {
        reduced_alphabet: reduced.alphabet().symbols().to_vec(),
        mortal_letters: mortal_letters(s).into_iter().map(|l| s.alphabet().symbol(l).to_string()).collect(),
        everlasting: analysis.everlasting,
        scc,
        alpha: analysis.order.alpha,
        beta: analysis.order.beta.clone(),
        class: analysis.order.class,
        periodicity: detect_cycle(s, cycle_cap)?,
    })
}

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::linalg::{compare_roots, AlgebraicNumber};
use crate::words::D0LSystem;

use super::graph::{condensation, SccDecomposition};
use super::reduce::{is_everlasting, reduce};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GrowthClass {
    Mortal,
    Bounded,
    Polynomial,
    Exponential,
}

impl fmt::Display for GrowthClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            GrowthClass::Mortal => "Mortal",
            GrowthClass::Bounded => "Bounded",
            GrowthClass::Polynomial => "Polynomial",
            GrowthClass::Exponential => "Exponential",
        };
        f.write_str(s)
    }
}

/// `|σⁿ(w)| ≍ n^alpha · betaⁿ`; both absent for mortal systems.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrowthOrder {
    pub alpha: Option<u32>,
    pub beta: Option<AlgebraicNumber>,
    pub class: GrowthClass,
}

impl GrowthOrder {
    pub fn mortal() -> Self {
        Self { alpha: None, beta: None, class: GrowthClass::Mortal }
    }

    pub fn is_mortal(&self) -> bool {
        self.class == GrowthClass::Mortal
    }
}

/// Growth order together with the structure it was read off.
#[derive(Debug, Clone)]
pub struct GrowthAnalysis {
    pub reduced: D0LSystem,
    pub everlasting: bool,
    pub scc: SccDecomposition,
    /// `basic[i]`: component `i` attains the spectral radius.
    pub basic: Vec<bool>,
    pub order: GrowthOrder,
}

/// Exact `(α, β)` of the growth function.
///
/// The system is reduced to the letters reachable from the axiom. `β` is
/// the largest Perron root among the strongly connected components; the
/// components attaining it are *basic*, and `α + 1` is the largest number of
/// basic components met along one path of the condensation DAG. That chain
/// length is the size of the largest Jordan block for `β`.
pub fn growth_order(s: &D0LSystem) -> GrowthOrder {
    analyze_growth(s).order
}

pub fn analyze_growth(s: &D0LSystem) -> GrowthAnalysis {
    let reduced = reduce(s);
    let everlasting = is_everlasting(&reduced);
    let scc = condensation(&reduced);
    let n = scc.components.len();

    if !everlasting {
        return GrowthAnalysis { reduced, everlasting, scc, basic: vec![false; n], order: GrowthOrder::mortal() };
    }

    let beta = scc
        .components
        .iter()
        .map(|c| &c.perron)
        .max_by(|a, b| compare_roots(a, b))
        .cloned()
        .expect("an everlasting system has at least one letter");
    let basic: Vec<bool> = scc
        .components
        .iter()
        .map(|c| !c.is_trivial && compare_roots(&c.perron, &beta) == Ordering::Equal)
        .collect();

    // Components are in topological order, so one forward pass suffices.
    let mut chain = vec![0u32; n];
    for i in 0..n {
        chain[i] += u32::from(basic[i]);
        for &j in &scc.dag[i] {
            chain[j] = chain[j].max(chain[i]);
        }
    }
    let longest = chain.iter().copied().max().unwrap_or(0);
    let alpha = longest.saturating_sub(1);

    let one = AlgebraicNumber::from_integer(1);
    let class = match compare_roots(&beta, &one) {
        Ordering::Greater => GrowthClass::Exponential,
        Ordering::Equal if alpha == 0 => GrowthClass::Bounded,
        Ordering::Equal => GrowthClass::Polynomial,
        Ordering::Less => unreachable!("an everlasting system has a cycle, so β ≥ 1"),
    };

    GrowthAnalysis {
        reduced,
        everlasting,
        scc,
        basic,
        order: GrowthOrder { alpha: Some(alpha), beta: Some(beta), class },
    }
}

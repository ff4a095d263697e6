use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::words::{D0LSystem, Word, DEFAULT_WORD_CAP};

use super::order::{growth_order, GrowthClass};

/// Default number of iterates searched for a repeat.
pub const DEFAULT_CYCLE_CAP: u64 = 10_000;

/// Outcome of the search for `σ^{n₁}(w) = σ^{n₂}(w)`.
///
/// `eventually_periodic` is `None` when the search gave up at the cap.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PeriodicityReport {
    pub eventually_periodic: Option<bool>,
    pub preperiod: Option<u64>,
    pub period_length: Option<u64>,
    pub cap_hit: bool,
}

impl PeriodicityReport {
    fn not_periodic() -> Self {
        Self { eventually_periodic: Some(false), preperiod: None, period_length: None, cap_hit: false }
    }

    fn unknown() -> Self {
        Self { eventually_periodic: None, preperiod: None, period_length: None, cap_hit: true }
    }
}

/// Searches up to `cap` iterates for a repeated word. Growing systems are
/// reported non-periodic straight from their growth class.
pub fn detect_cycle(s: &D0LSystem, cap: u64) -> Result<PeriodicityReport> {
    detect_cycle_with_word_cap(s, cap, DEFAULT_WORD_CAP)
}

pub fn detect_cycle_with_word_cap(s: &D0LSystem, cap: u64, word_cap: u64) -> Result<PeriodicityReport> {
    if cap == 0 {
        return Err(Error::InvalidArgument("cycle cap must be at least 1".into()));
    }
    match growth_order(s).class {
        GrowthClass::Polynomial | GrowthClass::Exponential => return Ok(PeriodicityReport::not_periodic()),
        GrowthClass::Mortal | GrowthClass::Bounded => {}
    }
    let mut seen: HashMap<Word, u64> = HashMap::new();
    let mut word = s.axiom().clone();
    for n in 0..=cap {
        if let Some(&first) = seen.get(&word) {
            return Ok(PeriodicityReport {
                eventually_periodic: Some(true),
                preperiod: Some(first),
                period_length: Some(n - first),
                cap_hit: false,
            });
        }
        if n == cap {
            break;
        }
        let next = s.morphism().apply(&word)?;
        if next.len() as u64 > word_cap {
            return Ok(PeriodicityReport::unknown());
        }
        seen.insert(std::mem::replace(&mut word, next), n);
    }
    Ok(PeriodicityReport::unknown())
}

//! Command implementations behind the `d0l` binary.
//!
//! Every command returns an [`Outcome`] (exit code plus captured stdout and
//! stderr) so the binary stays a thin argument parser and the commands can
//! be tested in-process.

use std::fmt::Write as _;
use std::path::PathBuf;

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::growth::{
    analysis_report, growth_order, is_irreducible, is_primitive, is_primitive_wielandt, reduce, AnalysisReport,
    GrowthClass, GrowthOrder,
};
use crate::linalg::{growth_values, AlgebraicNumber};
use crate::verify::{
    check_asymptotics, orbit_density, orbit_samples, queffelec_check, slope_oracle, AsymptoticsReport,
    ConvergenceReport, DensityReport, SlopeFit,
};
use crate::words::{parse_system, D0LSystem};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_INCONSISTENT: i32 = 3;
pub const EXIT_MORTAL: i32 = 4;

/// Oracle agreement thresholds: `|Δα| < 0.3`, `|Δβ|/β < 0.02`.
pub const ALPHA_AGREEMENT: f64 = 0.3;
pub const BETA_AGREEMENT: f64 = 0.02;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Command {
    Analyze { file: PathBuf },
    Simulate { file: PathBuf, n_max: u64, words: bool },
    Verify { file: PathBuf, queffelec: bool, force_alpha: Option<u32>, force_beta: Option<f64> },
    Orbit { p: i64, q: i64, n: u64, delta: f64 },
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub command: Command,
    pub n_lo: u64,
    pub n_hi: u64,
    pub word_cap: u64,
    pub cycle_cap: u64,
    pub rel_tol: f64,
    pub format: OutputFormat,
    pub seed: u64,
}

impl RunConfig {
    pub fn new(command: Command) -> Self {
        Self {
            command,
            n_lo: 10,
            n_hi: 60,
            word_cap: crate::words::DEFAULT_WORD_CAP,
            cycle_cap: crate::growth::DEFAULT_CYCLE_CAP,
            rel_tol: 1e-3,
            format: OutputFormat::Json,
            seed: 0,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n_lo >= self.n_hi {
            return Err(Error::InvalidArgument(format!("n_lo ({}) must be below n_hi ({})", self.n_lo, self.n_hi)));
        }
        if self.word_cap == 0 || self.cycle_cap == 0 {
            return Err(Error::InvalidArgument("caps must be positive".into()));
        }
        if !(self.rel_tol > 0.0 && self.rel_tol < 1.0) {
            return Err(Error::InvalidArgument(format!("rel_tol must lie in (0, 1), got {}", self.rel_tol)));
        }
        Ok(())
    }
}

/// Exit code and captured output of one command.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn error(code: i32, message: impl std::fmt::Display) -> Self {
        Self { code, stdout: String::new(), stderr: format!("error: {message}\n") }
    }
}

pub fn run(config: &RunConfig) -> Outcome {
    if let Err(e) = config.validate() {
        return Outcome::error(EXIT_INPUT, e);
    }
    match &config.command {
        Command::Analyze { file } => cmd_analyze(config, file),
        Command::Simulate { file, n_max, words } => cmd_simulate(config, file, *n_max, *words),
        Command::Verify { file, queffelec, force_alpha, force_beta } => {
            cmd_verify(config, file, *queffelec, *force_alpha, *force_beta)
        }
        Command::Orbit { p, q, n, delta } => cmd_orbit(config, *p, *q, *n, *delta),
    }
}

fn load(path: &PathBuf) -> std::result::Result<D0LSystem, Outcome> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Outcome::error(EXIT_INPUT, format!("cannot read {}: {e}", path.display())))?;
    parse_system(&text).map_err(|e| Outcome::error(EXIT_INPUT, format!("{}: {e}", path.display())))
}

fn json_line<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("reports serialize");
    s.push('\n');
    s
}

fn beta_text(beta: &Option<AlgebraicNumber>) -> String {
    beta.as_ref().map_or_else(|| "-".to_string(), ToString::to_string)
}

/// Internal consistency checks between independent routes. Returns the
/// list of failures.
fn cross_check(s: &D0LSystem, report: &AnalysisReport, config: &RunConfig) -> Vec<String> {
    let mut failures = Vec::new();
    let reduced = reduce(s);
    if is_primitive(&reduced) != is_primitive_wielandt(&reduced) {
        failures.push("primitivity: SCC/period route and Wielandt power disagree".to_string());
    }
    if let Some(alpha) = report.alpha {
        if alpha as usize + 1 > reduced.alphabet().len() {
            failures.push(format!("alpha = {alpha} exceeds |reduced alphabet| − 1"));
        }
    }
    if (report.class == GrowthClass::Mortal) == report.everlasting {
        failures.push("class Mortal must coincide with a non-everlasting axiom".to_string());
    }
    if matches!(report.class, GrowthClass::Polynomial | GrowthClass::Exponential)
        && report.periodicity.eventually_periodic != Some(false)
    {
        failures.push("growing system reported as eventually periodic".to_string());
    }
    // Matrix lengths against materialized words at a few sampled steps.
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let lengths = growth_values(s, 32);
    for _ in 0..6 {
        let n = rng.gen_range(0..=32u64);
        if lengths[n as usize] > BigUint::from(config.word_cap.min(1 << 20)) {
            continue;
        }
        match s.iterate_capped(n, config.word_cap) {
            Ok(w) if BigUint::from(w.len()) == lengths[n as usize] => {}
            Ok(w) => failures.push(format!("n = {n}: word length {} but matrix gives {}", w.len(), lengths[n as usize])),
            Err(e) => failures.push(format!("n = {n}: {e}")),
        }
    }
    failures
}

pub fn cmd_analyze(config: &RunConfig, file: &PathBuf) -> Outcome {
    let s = match load(file) {
        Ok(s) => s,
        Err(o) => return o,
    };
    let report = match analysis_report(&s, config.cycle_cap) {
        Ok(r) => r,
        Err(e) => return Outcome::error(EXIT_INPUT, e),
    };
    let failures = cross_check(&s, &report, config);

    let stdout = match config.format {
        OutputFormat::Json => json_line(&report),
        OutputFormat::Csv => {
            let mut out = String::from("field,value\n");
            let _ = writeln!(out, "reduced_alphabet,{}", report.reduced_alphabet.join(" "));
            let _ = writeln!(out, "mortal_letters,{}", report.mortal_letters.join(" "));
            let _ = writeln!(out, "everlasting,{}", report.everlasting);
            let _ = writeln!(out, "components,{}", report.scc.len());
            let _ = writeln!(out, "alpha,{}", report.alpha.map_or("-".into(), |a| a.to_string()));
            let _ = writeln!(
                out,
                "beta,{}",
                report.beta.as_ref().map_or("-".into(), |b| b.decimal_approx(20))
            );
            let _ = writeln!(out, "class,{}", report.class);
            let _ = writeln!(
                out,
                "eventually_periodic,{}",
                report.periodicity.eventually_periodic.map_or("unknown".into(), |b| b.to_string())
            );
            out
        }
        OutputFormat::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "class:            {}", report.class);
            let _ = writeln!(out, "alpha:            {}", report.alpha.map_or("-".into(), |a| a.to_string()));
            let _ = writeln!(out, "beta:             {}", beta_text(&report.beta));
            let _ = writeln!(out, "reduced alphabet: {}", report.reduced_alphabet.join(" "));
            let _ = writeln!(out, "mortal letters:   {}", report.mortal_letters.join(" "));
            let _ = writeln!(out, "everlasting:      {}", report.everlasting);
            let reduced = reduce(&s);
            let _ = writeln!(out, "irreducible:      {}", is_irreducible(&reduced));
            let _ = writeln!(out, "primitive:        {}", is_primitive(&reduced));
            for c in &report.scc {
                let _ = writeln!(
                    out,
                    "  scc {{{}}} perron {} period {}{}",
                    c.letters.join(" "),
                    c.perron,
                    c.period,
                    if c.basic { " basic" } else { "" }
                );
            }
            let p = &report.periodicity;
            let _ = match p.eventually_periodic {
                Some(true) => writeln!(
                    out,
                    "eventually periodic: preperiod {} period {}",
                    p.preperiod.unwrap_or(0),
                    p.period_length.unwrap_or(0)
                ),
                Some(false) => writeln!(out, "eventually periodic: no"),
                None => writeln!(out, "eventually periodic: unknown (cap hit)"),
            };
            out
        }
    };
    let mut stderr = String::new();
    for f in &failures {
        let _ = writeln!(stderr, "inconsistency: {f}");
    }
    Outcome { code: if failures.is_empty() { EXIT_OK } else { EXIT_INCONSISTENT }, stdout, stderr }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimulationRow {
    pub n: u64,
    /// Exact length as a decimal string.
    pub length: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub word: Option<String>,
}

pub fn cmd_simulate(config: &RunConfig, file: &PathBuf, n_max: u64, words: bool) -> Outcome {
    let s = match load(file) {
        Ok(s) => s,
        Err(o) => return o,
    };
    let lengths = growth_values(&s, n_max);
    let cap = BigUint::from(config.word_cap);
    let mut word = s.axiom().clone();
    let mut word_alive = words;
    let mut rows = Vec::with_capacity(lengths.len());
    for (n, len) in lengths.iter().enumerate() {
        if n > 0 && word_alive {
            if *len > cap {
                word_alive = false;
            } else {
                word = s.morphism().apply(&word).expect("word is over the alphabet");
            }
        }
        rows.push(SimulationRow {
            n: n as u64,
            length: len.to_string(),
            word: word_alive.then(|| s.alphabet().spell(&word)),
        });
    }
    let stdout = match config.format {
        OutputFormat::Json => json_line(&rows),
        OutputFormat::Csv => {
            let mut out = String::from(if words { "n,length,word\n" } else { "n,length\n" });
            for r in &rows {
                match (&r.word, words) {
                    (Some(w), _) => writeln!(out, "{},{},{}", r.n, r.length, w),
                    (None, true) => writeln!(out, "{},{},", r.n, r.length),
                    (None, false) => writeln!(out, "{},{}", r.n, r.length),
                }
                .unwrap();
            }
            out
        }
        OutputFormat::Text => {
            let mut out = String::new();
            for r in &rows {
                match &r.word {
                    Some(w) => writeln!(out, "{:>4}  {:>12}  {}", r.n, r.length, w),
                    None => writeln!(out, "{:>4}  {:>12}", r.n, r.length),
                }
                .unwrap();
            }
            out
        }
    };
    let stderr = if words && !word_alive {
        format!("note: words longer than {} letters are omitted\n", config.word_cap)
    } else {
        String::new()
    };
    Outcome { code: EXIT_OK, stdout, stderr }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub class: GrowthClass,
    pub alpha: Option<u32>,
    pub beta: Option<AlgebraicNumber>,
    pub tested_alpha: Option<u32>,
    pub tested_beta: Option<f64>,
    pub asymptotics: Option<AsymptoticsReport>,
    pub oracle: Option<SlopeFit>,
    pub oracle_agrees: Option<bool>,
    pub queffelec: Option<Vec<QueffelecEntry>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QueffelecEntry {
    pub from: String,
    pub count: String,
    pub reports: Vec<ConvergenceReport>,
}

/// `(α, β)` from the engine agrees with the numeric fit.
pub fn oracle_agrees(order: &GrowthOrder, fit: &SlopeFit) -> bool {
    match (order.alpha, &order.beta) {
        (Some(alpha), Some(beta)) => {
            let b = beta.to_f64();
            (fit.alpha_est - f64::from(alpha)).abs() < ALPHA_AGREEMENT && ((fit.beta_est - b) / b).abs() < BETA_AGREEMENT
        }
        _ => false,
    }
}

pub fn cmd_verify(
    config: &RunConfig,
    file: &PathBuf,
    queffelec: bool,
    force_alpha: Option<u32>,
    force_beta: Option<f64>,
) -> Outcome {
    let s = match load(file) {
        Ok(s) => s,
        Err(o) => return o,
    };
    let order = growth_order(&s);
    let mut report = VerifyReport {
        class: order.class,
        alpha: order.alpha,
        beta: order.beta.clone(),
        tested_alpha: None,
        tested_beta: None,
        asymptotics: None,
        oracle: None,
        oracle_agrees: None,
        queffelec: None,
    };
    let mut stderr = String::new();

    if order.is_mortal() {
        let _ = writeln!(stderr, "system is mortal: growth checks do not apply");
        return Outcome { code: EXIT_MORTAL, stdout: render_verify(&report, config.format), stderr };
    }

    let alpha = force_alpha.or(order.alpha).expect("everlasting systems have alpha");
    let beta = force_beta.unwrap_or_else(|| order.beta.as_ref().expect("everlasting systems have beta").to_f64());
    report.tested_alpha = Some(alpha);
    report.tested_beta = Some(beta);

    let asym = match check_asymptotics(&s, alpha, beta, config.n_lo, config.n_hi) {
        Ok(a) => a,
        Err(e) => return Outcome::error(EXIT_INPUT, e),
    };
    let fit = match slope_oracle(&s, config.n_lo, config.n_hi) {
        Ok(f) => f,
        Err(e) => return Outcome::error(EXIT_INPUT, e),
    };
    let agrees = oracle_agrees(&order, &fit);
    let stable = asym.stable;
    report.asymptotics = Some(asym);
    report.oracle = Some(fit);
    report.oracle_agrees = Some(agrees);

    if queffelec {
        if is_irreducible(&s) {
            let a = s.axiom().letters()[0];
            let mut entries = Vec::new();
            for b in s.alphabet().letters() {
                match queffelec_check(&s, a, b, config.rel_tol, config.n_hi) {
                    Ok(reports) => {
                        for r in reports.iter().filter(|r| r.zero_tail) {
                            let _ = writeln!(
                                stderr,
                                "warning: count of {} in iterates of {}: residue {} mod {} has a zero tail",
                                s.alphabet().symbol(b),
                                s.alphabet().symbol(a),
                                r.residue,
                                r.modulus
                            );
                        }
                        entries.push(QueffelecEntry {
                            from: s.alphabet().symbol(a).to_string(),
                            count: s.alphabet().symbol(b).to_string(),
                            reports,
                        });
                    }
                    Err(e) => {
                        let _ = writeln!(stderr, "warning: convergence check skipped: {e}");
                    }
                }
            }
            report.queffelec = Some(entries);
        } else {
            let _ = writeln!(stderr, "warning: morphism is reducible; per-residue convergence check skipped");
        }
    }

    if !stable {
        let _ = writeln!(stderr, "ratio |s^n(w)| / (n^{alpha} {beta}^n) is not stable under window doubling");
    }
    if !agrees {
        let _ = writeln!(stderr, "slope oracle disagrees with the growth order");
    }
    let code = if stable && agrees { EXIT_OK } else { EXIT_CHECK_FAILED };
    Outcome { code, stdout: render_verify(&report, config.format), stderr }
}

fn render_verify(report: &VerifyReport, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => json_line(report),
        OutputFormat::Csv | OutputFormat::Text => {
            let sep = if format == OutputFormat::Csv { "," } else { ": " };
            let mut out = String::new();
            if format == OutputFormat::Csv {
                out.push_str("field,value\n");
            }
            let mut line = |k: &str, v: String| {
                let _ = writeln!(out, "{k}{sep}{v}");
            };
            line("class", report.class.to_string());
            line("alpha", report.alpha.map_or("-".into(), |a| a.to_string()));
            line("beta", beta_text(&report.beta));
            if let Some(a) = &report.asymptotics {
                line("tested_alpha", a.alpha.to_string());
                line("tested_beta", a.beta.to_string());
                line("window", format!("{}..{}", a.n_lo, a.n_hi));
                line("ratio_min", a.ratio_min.to_string());
                line("ratio_max", a.ratio_max.to_string());
                line("spread", a.spread.to_string());
                line("spread_doubled", a.spread_doubled.to_string());
                line("stable", a.stable.to_string());
            }
            if let Some(f) = &report.oracle {
                line("alpha_est", f.alpha_est.to_string());
                line("beta_est", f.beta_est.to_string());
            }
            if let Some(ok) = report.oracle_agrees {
                line("oracle_agrees", ok.to_string());
            }
            for e in report.queffelec.iter().flatten() {
                for r in &e.reports {
                    line(
                        &format!("limit[{}->{} r={} q={}]", e.from, e.count, r.residue, r.modulus),
                        format!("{} converged={}", r.limit_estimate, r.converged),
                    );
                }
            }
            out
        }
    }
}

pub fn cmd_orbit(config: &RunConfig, p: i64, q: i64, n: u64, delta: f64) -> Outcome {
    let report: DensityReport = match orbit_density(p, q, n, delta) {
        Ok(r) => r,
        Err(e) => return Outcome::error(EXIT_INPUT, e),
    };
    let stdout = match config.format {
        OutputFormat::Json => json_line(&report),
        OutputFormat::Csv => {
            let mut out = String::from("n,cos,sin\n");
            for (k, c, s) in orbit_samples(p, q, n) {
                let _ = writeln!(out, "{k},{c},{s}");
            }
            out
        }
        OutputFormat::Text => format!(
            "theta = arg({p} + {q}i), {} samples, {} bins of width {}\ncos bins hit: {}/{}\nsin bins hit: {}/{}\n",
            report.sample_count,
            report.bins_total,
            report.bin_width,
            report.cos_bins_hit,
            report.bins_total,
            report.sin_bins_hit,
            report.bins_total
        ),
    };
    Outcome { code: if report.all_hit() { EXIT_OK } else { EXIT_CHECK_FAILED }, stdout, stderr: String::new() }
}

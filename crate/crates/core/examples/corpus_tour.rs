//! Full analysis report for every system in the bundled corpus.

use d0l_growth::growth::{analysis_report, DEFAULT_CYCLE_CAP};
use d0l_growth::parse_system;

fn main() {
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus");
    let mut paths: Vec<_> = std::fs::read_dir(&dir).unwrap().map(|e| e.unwrap().path()).collect();
    paths.sort();
    for p in paths.iter().filter(|p| p.extension().is_some_and(|x| x == "dol")) {
        let s = parse_system(&std::fs::read_to_string(p).unwrap()).unwrap();
        let r = analysis_report(&s, DEFAULT_CYCLE_CAP).unwrap();
        let beta = r.beta.as_ref().map_or("-".to_string(), |b| b.decimal_approx(8));
        let periodic = match r.periodicity.eventually_periodic {
            Some(true) => format!("periodic ({:?}, {:?})", r.periodicity.preperiod.unwrap(), r.periodicity.period_length.unwrap()),
            Some(false) => "not periodic".to_string(),
            None => "unknown".to_string(),
        };
        println!(
            "{:<26} {:<12} alpha {:<2} beta {:<11} {} components, {}",
            p.file_name().unwrap().to_string_lossy(),
            r.class.to_string(),
            r.alpha.map_or("-".to_string(), |a| a.to_string()),
            beta,
            r.scc.len(),
            periodic
        );
    }
}

//! Normalized letter counts |s^n(a)|_b / beta^n along residue classes.

use d0l_growth::verify::queffelec_check;
use d0l_growth::{D0LSystem, Letter};

fn main() {
    let cases = [
        ("thue-morse", D0LSystem::from_rules(&[("a", "a b"), ("b", "b a")], "a").unwrap()),
        ("fibonacci", D0LSystem::from_rules(&[("a", "a b"), ("b", "a")], "a").unwrap()),
        ("imprimitive", D0LSystem::from_rules(&[("a", "b b"), ("b", "a")], "a").unwrap()),
        ("swap", D0LSystem::from_rules(&[("a", "b"), ("b", "a")], "a").unwrap()),
    ];
    for (name, s) in &cases {
        for b in s.alphabet().letters() {
            for r in queffelec_check(s, Letter(0), b, 1e-3, 40).unwrap() {
                println!(
                    "{name:<12} count {} r = {} mod {}: limit {:.6} converged {}{}",
                    s.alphabet().symbol(b),
                    r.residue,
                    r.modulus,
                    r.limit_estimate,
                    r.converged,
                    r.warning.map(|w| format!(" ({w})")).unwrap_or_default()
                );
            }
        }
    }
}

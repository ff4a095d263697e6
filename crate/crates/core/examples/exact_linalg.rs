//! Incidence matrix, big-integer powers, norms and the characteristic polynomial.

use d0l_growth::linalg::{char_poly, growth_value, incidence};
use d0l_growth::D0LSystem;

fn main() {
    let s = D0LSystem::from_rules(&[("a", "a b"), ("b", "a")], "a").unwrap();
    let m = incidence(&s);
    println!("M = {:?}", m.rows().collect::<Vec<_>>());
    println!("char poly: {}", char_poly(&m));

    for n in [10u64, 100, 1000] {
        let p = m.pow(n);
        let l1 = p.manhattan_norm().to_string();
        let linf = p.max_norm().to_string();
        println!("n = {n:>4}: ‖M^n‖₁ has {} digits, ‖M^n‖∞ starts {}", l1.len(), &linf[..12.min(linf.len())]);
    }

    // Lengths come straight from the matrix, no words are built.
    let len = growth_value(&s, 500);
    println!("|s^500(a)| = {len}");
}

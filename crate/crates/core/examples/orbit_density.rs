//! Where cos(n theta) and sin(n theta) land for theta = arg(p + qi), and
//! which rational multiples of a full turn have a rational cosine.

use d0l_growth::verify::{niven_classify, orbit_density, NivenClass};
use num_rational::BigRational;

fn main() {
    for (p, q) in [(4, 3), (1, 1), (0, 1), (1, 0), (12, 5)] {
        let r = orbit_density(p, q, 5000, 0.1).unwrap();
        println!("({p}, {q}): cos {}/{} bins, sin {}/{} bins", r.cos_bins_hit, r.bins_total, r.sin_bins_hit, r.bins_total);
    }
    println!();
    for t in 1..=12i64 {
        let rho = BigRational::new(1.into(), t.into());
        let label = match niven_classify(&rho) {
            NivenClass::Rational(v) => format!("rational, {v}"),
            NivenClass::Irrational => "irrational".to_string(),
        };
        println!("cos(2π/{t}) is {label}");
    }
}

//! Ratio stability and the slope fit against the exact growth order.

use d0l_growth::growth_order;
use d0l_growth::verify::{check_asymptotics, slope_oracle};
use d0l_growth::parse_system;

fn main() {
    let dir = format!("{}/corpus", env!("CARGO_MANIFEST_DIR"));
    for name in ["linear", "chain4", "fibonacci", "doubling-chain", "quadratic-exponential", "imprimitive"] {
        let s = parse_system(&std::fs::read_to_string(format!("{dir}/{name}.dol")).unwrap()).unwrap();
        let o = growth_order(&s);
        let (alpha, beta) = (o.alpha.unwrap(), o.beta.unwrap().to_f64());
        let fit = slope_oracle(&s, 20, 100).unwrap();
        let right = check_asymptotics(&s, alpha, beta, 10, 60).unwrap();
        let wrong = check_asymptotics(&s, alpha + 1, beta, 10, 60).unwrap();
        println!(
            "{name:<22} alpha {alpha} beta {beta:.6} | fit {:.3} {:.6} | spread {:.3} -> {:.3} (stable {}) | alpha+1: {:.3} -> {:.3} (stable {})",
            fit.alpha_est, fit.beta_est, right.spread, right.spread_doubled, right.stable, wrong.spread, wrong.spread_doubled, wrong.stable
        );
    }
}

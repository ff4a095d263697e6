//! Exact growth order of a D0L-system given on the command line or a corpus file.
//!
//! cargo run --example growth_order -- corpus/chain4.dol

use d0l_growth::growth::analyze_growth;
use d0l_growth::parse_system;

fn main() {
    let path = std::env::args().nth(1).unwrap_or_else(|| format!("{}/corpus/tribonacci.dol", env!("CARGO_MANIFEST_DIR")));
    let text = std::fs::read_to_string(&path).expect("readable .dol file");
    let s = parse_system(&text).expect("valid system");
    let a = analyze_growth(&s);

    println!("{path}");
    println!("{}", s.render());
    println!("class: {}", a.order.class);
    match (a.order.alpha, &a.order.beta) {
        (Some(alpha), Some(beta)) => {
            println!("|s^n(w)| ~ n^{alpha} * beta^n");
            println!("beta = root of {} in [{}, {}]", beta.poly(), beta.lo(), beta.hi());
            println!("beta ~ {}", beta.decimal_approx(25));
        }
        _ => println!("the axiom dies out"),
    }
}

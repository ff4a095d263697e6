//! Parsing the rule format, iterating morphisms and Parikh vectors.

use d0l_growth::parse_system;
use d0l_growth::words::parikh;

fn main() {
    let s = parse_system(
        "# Tribonacci with multi-character letters\n\
         x1 -> x1 x2\n\
         x2 -> x1 x3\n\
         x3 -> x1\n\
         axiom: x1\n",
    )
    .unwrap();
    print!("{}", s.render());
    for n in 0..=6 {
        let w = s.iterate(n).unwrap();
        let p = parikh(&w, s.alphabet());
        let counts: Vec<String> = s.alphabet().letters().map(|a| p.count(a).to_string()).collect();
        println!("n = {n}: {:<40} parikh ({})", s.alphabet().spell(&w), counts.join(", "));
    }
    match s.iterate_capped(40, 1000) {
        Ok(_) => unreachable!(),
        Err(e) => println!("{e}"),
    }
}

//! Mortal letters, reduction, strongly connected components, periods and primitivity.

use d0l_growth::growth::{condensation, is_primitive, is_primitive_wielandt, mortal_letters, period, reduce};
use d0l_growth::parse_system;

const SYSTEMS: [&str; 4] = [
    "a -> a b\nb -> a\naxiom: a",
    "a -> b b\nb -> a\naxiom: a",
    "a -> b d\nb -> c\nc -> b\nd ->\naxiom: a",
    "a -> a a b\nb -> b b c\nc -> c d\nd -> d d\naxiom: a",
];

fn main() {
    for text in SYSTEMS {
        let s = parse_system(text).unwrap();
        let ab = s.alphabet();
        println!("{}", text.replace('\n', "; "));
        let mortal: Vec<&str> = mortal_letters(&s).into_iter().map(|l| ab.symbol(l)).collect();
        println!("  mortal: {mortal:?}");
        let r = reduce(&s);
        println!("  reduced alphabet: {:?}", r.alphabet().symbols());
        for c in condensation(&r).components {
            let letters: Vec<&str> = c.letters.iter().map(|&l| r.alphabet().symbol(l)).collect();
            println!("  component {letters:?}: perron {}, period {}", c.perron.decimal_approx(6), c.period);
        }
        let periods: Vec<u64> = s.alphabet().letters().map(|a| period(&s, a)).collect();
        println!("  letter periods: {periods:?}");
        println!("  primitive: {} (Wielandt check: {})", is_primitive(&s), is_primitive_wielandt(&s));
    }
}

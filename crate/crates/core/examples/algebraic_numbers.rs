//! Perron roots as exact algebraic numbers: isolation, refinement, comparison.

use std::cmp::Ordering;

use d0l_growth::linalg::{compare_roots, perron_root};
use d0l_growth::{AlgebraicNumber, IntMatrix};
use num_bigint::BigInt;
use num_rational::BigRational;

fn main() {
    let fib = IntMatrix::from_rows(&[vec![1, 1], vec![1, 0]]).unwrap();
    let trib = IntMatrix::from_rows(&[vec![1, 1, 1], vec![1, 0, 0], vec![0, 1, 0]]).unwrap();
    let phi = perron_root(&fib).unwrap();
    let t = perron_root(&trib).unwrap();
    println!("phi: {} on [{}, {}]", phi.poly(), phi.lo(), phi.hi());
    println!("tribonacci: {} on [{}, {}]", t.poly(), t.lo(), t.hi());

    let width = BigRational::new(1.into(), BigInt::from(10).pow(40));
    let narrow = phi.refine_to_width(&width);
    println!("phi to 40 digits: {}", narrow.decimal_approx(40));

    let two = AlgebraicNumber::from_integer(2);
    for (name, x) in [("phi", &phi), ("tribonacci", &t)] {
        let rel = match compare_roots(x, &two) {
            Ordering::Less => "<",
            Ordering::Equal => "=",
            Ordering::Greater => ">",
        };
        println!("{name} {rel} 2");
    }

    // A doubled eigenvalue: the square-free part keeps the comparison exact.
    let twice = IntMatrix::from_rows(&[vec![1, 1, 0, 0], vec![1, 0, 0, 0], vec![0, 0, 1, 1], vec![0, 0, 1, 0]]).unwrap();
    let again = perron_root(&twice).unwrap();
    println!("block-diagonal copy: {}, equal to phi: {}", again.poly(), compare_roots(&again, &phi) == Ordering::Equal);
}

//! n-th roots of matrix norms approaching the spectral radius, and the exact
//! norm bounds for 5 times a rotation.

use d0l_growth::verify::{gelfand_estimate, rotation_bounds, rotation_example, Norm};
use d0l_growth::IntMatrix;

fn main() {
    let fib = IntMatrix::from_rows(&[vec![1, 1], vec![1, 0]]).unwrap();
    println!("   n   fib ‖·‖₁   fib ‖·‖∞   rot ‖·‖₁   rot ‖·‖∞");
    for n in [10, 30, 60, 120, 500, 2000] {
        println!(
            "{n:>4}  {:>9.6}  {:>9.6}  {:>9.6}  {:>9.6}",
            gelfand_estimate(&fib, n, Norm::Manhattan).unwrap(),
            gelfand_estimate(&fib, n, Norm::Max).unwrap(),
            gelfand_estimate(&rotation_example(), n, Norm::Manhattan).unwrap(),
            gelfand_estimate(&rotation_example(), n, Norm::Max).unwrap(),
        );
    }
    println!();
    println!("   n   ‖M^n‖₁/5^n  ‖M^n‖∞/5^n  bounds hold");
    for n in [0, 1, 2, 7, 25, 100] {
        let b = rotation_bounds(n);
        println!("{n:>4}  {:>10.6}  {:>10.6}  {}", b.manhattan_ratio, b.max_ratio, b.manhattan_ok && b.max_ok);
    }
}

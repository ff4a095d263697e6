use num_bigint::{BigInt, BigUint};
use num_traits::{ToPrimitive, Zero};

/// Natural logarithm of an arbitrary-precision integer from its top 64 bits
/// and binary exponent. `-inf` for zero.
pub fn ln_biguint(x: &BigUint) -> f64 {
    if x.is_zero() {
        return f64::NEG_INFINITY;
    }
    let bits = x.bits();
    let shift = bits.saturating_sub(64);
    let top = (x >> shift).to_f64().expect("64-bit mantissa fits in f64");
    top.ln() + shift as f64 * std::f64::consts::LN_2
}

/// `ln |x|`.
pub fn ln_bigint_abs(x: &BigInt) -> f64 {
    ln_biguint(x.magnitude())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn small_and_huge() {
        assert_eq!(ln_biguint(&BigUint::zero()), f64::NEG_INFINITY);
        assert_eq!(ln_biguint(&BigUint::one()), 0.0);
        assert!((ln_biguint(&BigUint::from(1000u32)) - 1000f64.ln()).abs() < 1e-15);
        let big = BigUint::one() << 5000u32;
        assert!((ln_biguint(&big) - 5000.0 * std::f64::consts::LN_2).abs() < 1e-9);
        let three_pow = BigUint::from(3u8).pow(2000);
        assert!((ln_biguint(&three_pow) / 2000.0 - 3f64.ln()).abs() < 1e-14);
    }
}

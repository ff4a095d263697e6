//! Real algebraic numbers as (square-free polynomial, isolating interval).
//!
//! An [`AlgebraicNumber`] is always in one of two normal forms:
//! - a point `[r, r]` where `r` is a rational root of the polynomial, or
//! - an open interval `lo < hi` where the polynomial has opposite nonzero
//!   signs at the endpoints and exactly one root in between.
//!
//! The second form makes sign bisection exact; Sturm counts are only needed
//! at construction time and when deciding equality.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::matrix::IntMatrix;
use super::poly::{char_poly, IntPolynomial};
use crate::error::{Error, Result};

/// Width below which overlapping isolating intervals trigger an exact
/// equality test.
const EQUALITY_PROBE_BITS: u32 = 80;

/// Closed interval of rationals, `lo ≤ hi`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalInterval {
    lo: BigRational,
    hi: BigRational,
}

impl RationalInterval {
    pub fn new(lo: BigRational, hi: BigRational) -> Result<Self> {
        if lo > hi {
            return Err(Error::InvalidArgument(format!("empty interval [{lo}, {hi}]")));
        }
        Ok(Self { lo, hi })
    }

    pub fn point(x: BigRational) -> Self {
        Self { lo: x.clone(), hi: x }
    }

    pub fn lo(&self) -> &BigRational {
        &self.lo
    }

    pub fn hi(&self) -> &BigRational {
        &self.hi
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.lo + &self.hi) / BigRational::from_integer(2.into())
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn intersect(&self, other: &Self) -> Option<Self> {
        let lo = (&self.lo).max(&other.lo).clone();
        let hi = (&self.hi).min(&other.hi).clone();
        (lo <= hi).then_some(Self { lo, hi })
    }
}

/// A real root of a square-free integer polynomial, pinned down by an
/// isolating interval.
#[derive(Debug, Clone)]
pub struct AlgebraicNumber {
    poly: IntPolynomial,
    isolate: RationalInterval,
}

impl AlgebraicNumber {
    pub fn from_rational(r: BigRational) -> Self {
        let poly = IntPolynomial::new(vec![-r.numer().clone(), r.denom().clone()]).primitive_part();
        Self { poly, isolate: RationalInterval::point(r) }
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Self::from_rational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Self::from_integer(0)
    }

    /// The unique root of `poly` in the closed interval `[lo, hi]`.
    /// `poly` is replaced by its square-free part.
    pub fn new(poly: &IntPolynomial, lo: BigRational, hi: BigRational) -> Result<Self> {
        if poly.degree().unwrap_or(0) == 0 {
            return Err(Error::InvalidAlgebraic("polynomial must have positive degree".into()));
        }
        let poly = poly.square_free_part();
        let isolate = RationalInterval::new(lo, hi)?;
        let sturm = poly.sturm_sequence();
        let mut count = sturm.count_roots(isolate.lo(), isolate.hi());
        if poly.is_root(isolate.lo()) {
            count += 1;
        }
        if count != 1 {
            return Err(Error::InvalidAlgebraic(format!(
                "{poly} has {count} roots in [{}, {}], expected exactly one",
                isolate.lo(),
                isolate.hi()
            )));
        }
        Ok(Self::normalized(poly, isolate))
    }

    /// Collapses to a point when an endpoint is the root. The caller
    /// guarantees exactly one root in the closed interval.
    fn normalized(poly: IntPolynomial, isolate: RationalInterval) -> Self {
        if poly.is_root(isolate.lo()) {
            return Self { poly, isolate: RationalInterval::point(isolate.lo) };
        }
        if poly.is_root(isolate.hi()) {
            return Self { poly, isolate: RationalInterval::point(isolate.hi) };
        }
        Self { poly, isolate }
    }

    pub fn poly(&self) -> &IntPolynomial {
        &self.poly
    }

    pub fn isolate(&self) -> &RationalInterval {
        &self.isolate
    }

    pub fn lo(&self) -> &BigRational {
        self.isolate.lo()
    }

    pub fn hi(&self) -> &BigRational {
        self.isolate.hi()
    }

    pub fn width(&self) -> BigRational {
        self.isolate.width()
    }

    pub fn is_point(&self) -> bool {
        self.isolate.lo == self.isolate.hi
    }

    /// One bisection step. Never changes the represented value.
    pub fn refine(&self) -> Self {
        if self.is_point() {
            return self.clone();
        }
        let mid = self.isolate.midpoint();
        let s_mid = self.poly.sign_at(&mid);
        let isolate = if s_mid == Ordering::Equal {
            RationalInterval::point(mid)
        } else if s_mid == self.poly.sign_at(self.lo()) {
            RationalInterval { lo: mid, hi: self.isolate.hi.clone() }
        } else {
            RationalInterval { lo: self.isolate.lo.clone(), hi: mid }
        };
        Self { poly: self.poly.clone(), isolate }
    }

    /// Bisects until the isolating interval is no wider than `width`.
    pub fn refine_to_width(&self, width: &BigRational) -> Self {
        let mut cur = self.clone();
        while &cur.width() > width {
            cur = cur.refine();
        }
        cur
    }

    /// The exact value when it is rational.
    ///
    /// Any rational root `u/v` of a primitive integer polynomial has `v`
    /// dividing the leading coefficient `c`, so it equals `k/c` for some
    /// integer `k`. Once the interval is narrower than `1/c` at most two such
    /// candidates remain.
    pub fn rational_value(&self) -> Option<BigRational> {
        if self.is_point() {
            return Some(self.isolate.lo.clone());
        }
        let c = self.poly.leading()?.abs();
        let cur = self.refine_to_width(&BigRational::new(BigInt::one(), c.clone()));
        if cur.is_point() {
            return Some(cur.isolate.lo);
        }
        let scaled_lo = (cur.lo() * BigRational::from_integer(c.clone())).ceil().to_integer();
        let scaled_hi = (cur.hi() * BigRational::from_integer(c.clone())).floor().to_integer();
        let mut k = scaled_lo;
        while k <= scaled_hi {
            let x = BigRational::new(k.clone(), c.clone());
            if cur.poly.is_root(&x) {
                return Some(x);
            }
            k += 1;
        }
        None
    }

    pub fn is_rational(&self) -> bool {
        self.rational_value().is_some()
    }

    /// Midpoint of an interval refined below `2^-64` relative width.
    pub fn to_f64(&self) -> f64 {
        if self.is_point() {
            return self.isolate.lo.to_f64().unwrap_or(f64::NAN);
        }
        let scale = self.lo().abs().max(self.hi().abs()).max(BigRational::one());
        let target = scale / BigRational::from_integer(BigInt::one() << 64);
        let cur = self.refine_to_width(&target);
        cur.isolate.midpoint().to_f64().unwrap_or(f64::NAN)
    }

    /// Decimal rendering to `digits` significant digits (trailing zeros
    /// dropped).
    pub fn decimal_approx(&self, digits: usize) -> String {
        if self.is_point() {
            return format_rational(self.lo(), digits);
        }
        let mut cur = self.clone();
        // Refine until the interval excludes zero and is narrow relative to
        // its magnitude.
        loop {
            let zero = BigRational::zero();
            if !cur.isolate.contains(&zero) || cur.is_point() {
                let mag = cur.lo().abs().min(cur.hi().abs());
                let tol = mag / BigRational::from_integer(BigInt::from(10).pow(digits as u32 + 3));
                if cur.width() <= tol || cur.is_point() {
                    break;
                }
            }
            cur = cur.refine();
        }
        format_rational(&cur.isolate.midpoint(), digits)
    }

    /// Exact total order of real algebraic numbers.
    pub fn compare(&self, other: &Self) -> Ordering {
        compare_roots(self, other)
    }
}

/// Orders two algebraic numbers exactly.
///
/// Intervals are bisected until disjoint. Once both are narrower than
/// `2^-80` while still overlapping, equality is tested exactly: the two
/// values coincide iff the gcd of the defining polynomials has a root in the
/// intersection (that root is then the isolated root of both).
pub fn compare_roots(a: &AlgebraicNumber, b: &AlgebraicNumber) -> Ordering {
    let probe = BigRational::new(BigInt::one(), BigInt::one() << EQUALITY_PROBE_BITS);
    let mut a = a.clone();
    let mut b = b.clone();
    let mut common: Option<IntPolynomial> = None;
    loop {
        if a.hi() < b.lo() {
            return Ordering::Less;
        }
        if b.hi() < a.lo() {
            return Ordering::Greater;
        }
        match (a.is_point(), b.is_point()) {
            (true, true) => return a.lo().cmp(b.lo()),
            (true, false) => {
                if b.poly.is_root(a.lo()) {
                    return Ordering::Equal;
                }
                b = b.refine();
                continue;
            }
            (false, true) => {
                if a.poly.is_root(b.lo()) {
                    return Ordering::Equal;
                }
                a = a.refine();
                continue;
            }
            (false, false) => {}
        }
        if a.width() < probe && b.width() < probe {
            let g = common.get_or_insert_with(|| a.poly.gcd(&b.poly));
            if g.degree().unwrap_or(0) > 0 {
                let meet = a.isolate.intersect(&b.isolate).expect("intervals overlap");
                let sturm = g.sturm_sequence();
                let inside = sturm.count_roots(meet.lo(), meet.hi()) + usize::from(g.is_root(meet.lo()));
                if inside >= 1 {
                    return Ordering::Equal;
                }
            }
        }
        a = a.refine();
        b = b.refine();
    }
}

impl PartialEq for AlgebraicNumber {
    fn eq(&self, other: &Self) -> bool {
        compare_roots(self, other) == Ordering::Equal
    }
}

impl Eq for AlgebraicNumber {}

impl PartialOrd for AlgebraicNumber {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for AlgebraicNumber {
    fn cmp(&self, other: &Self) -> Ordering {
        compare_roots(self, other)
    }
}

impl fmt::Display for AlgebraicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.rational_value() {
            Some(r) => write!(f, "{r}"),
            None => write!(f, "{} (root of {})", self.decimal_approx(20), self.poly),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct AlgebraicRepr {
    poly: IntPolynomial,
    lo: String,
    hi: String,
    decimal_approx: String,
}

impl Serialize for AlgebraicNumber {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        AlgebraicRepr {
            poly: self.poly.clone(),
            lo: self.lo().to_string(),
            hi: self.hi().to_string(),
            decimal_approx: self.decimal_approx(20),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for AlgebraicNumber {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = AlgebraicRepr::deserialize(deserializer)?;
        let lo: BigRational = repr.lo.parse().map_err(D::Error::custom)?;
        let hi: BigRational = repr.hi.parse().map_err(D::Error::custom)?;
        if lo == hi && repr.poly.degree() == Some(1) {
            if !repr.poly.is_root(&lo) {
                return Err(D::Error::custom("point is not a root of the polynomial"));
            }
            return Ok(AlgebraicNumber::from_rational(lo));
        }
        AlgebraicNumber::new(&repr.poly, lo, hi).map_err(D::Error::custom)
    }
}

/// Formats a rational to `digits` significant digits, rounding half up.
pub fn format_rational(x: &BigRational, digits: usize) -> String {
    let digits = digits.max(1);
    if x.is_zero() {
        return "0".into();
    }
    let neg = x.is_negative();
    let a = x.abs();
    let ten = BigInt::from(10);
    let pow10 = |e: i64| -> BigRational {
        if e >= 0 {
            BigRational::from_integer(ten.pow(e as u32))
        } else {
            BigRational::new(BigInt::one(), ten.pow((-e) as u32))
        }
    };
    let mut e = a.numer().to_string().len() as i64 - a.denom().to_string().len() as i64;
    while pow10(e) > a {
        e -= 1;
    }
    while pow10(e + 1) <= a {
        e += 1;
    }
    let scaled = &a * pow10(digits as i64 - 1 - e);
    let mut mant = (scaled + BigRational::new(BigInt::one(), BigInt::from(2))).floor().to_integer();
    if mant >= ten.pow(digits as u32) {
        mant = mant.div_floor(&ten);
        e += 1;
    }
    let s = mant.to_string();
    let (int_part, frac_part) = if e >= 0 {
        let e = e as usize;
        if e + 1 >= s.len() {
            (format!("{s}{}", "0".repeat(e + 1 - s.len())), String::new())
        } else {
            (s[..e + 1].to_string(), s[e + 1..].to_string())
        }
    } else {
        ("0".to_string(), format!("{}{s}", "0".repeat((-e - 1) as usize)))
    };
    let frac_part = frac_part.trim_end_matches('0');
    let sign = if neg { "-" } else { "" };
    if frac_part.is_empty() {
        format!("{sign}{int_part}")
    } else {
        format!("{sign}{int_part}.{frac_part}")
    }
}

/// Spectral radius of a nonnegative integer matrix as an exact algebraic
/// number: the largest real root of the square-free part of the
/// characteristic polynomial, isolated by Sturm bisection inside
/// `[0, max row sum]`.
pub fn perron_root(m: &IntMatrix) -> Result<AlgebraicNumber> {
    if !m.is_nonnegative() {
        return Err(Error::InvalidArgument("perron_root needs a nonnegative matrix".into()));
    }
    if m.dim() == 0 || m.is_zero() {
        return Ok(AlgebraicNumber::zero());
    }
    let poly = char_poly(m).square_free_part();
    let sturm = poly.sturm_sequence();
    let mut lo = BigRational::zero();
    let mut hi = BigRational::from_integer(m.max_row_sum());
    let mut count = sturm.count_roots(&lo, &hi);
    if count == 0 {
        return Ok(AlgebraicNumber::zero());
    }
    // Keep the largest root in (lo, hi] while shrinking to a single root.
    while count > 1 {
        let mid = (&lo + &hi) / BigRational::from_integer(2.into());
        let upper = sturm.count_roots(&mid, &hi);
        if upper >= 1 {
            lo = mid;
            count = upper;
        } else {
            hi = mid;
            count = sturm.count_roots(&lo, &hi);
        }
    }
    // `lo` may itself be a smaller root; move it up until it is not.
    while poly.is_root(&lo) && !poly.is_root(&hi) {
        let mid = (&lo + &hi) / BigRational::from_integer(2.into());
        if poly.is_root(&mid) {
            lo = mid.clone();
            hi = mid;
        } else if sturm.count_roots(&mid, &hi) == 1 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    if poly.is_root(&hi) {
        lo = hi.clone();
    }
    Ok(AlgebraicNumber::normalized(poly, RationalInterval { lo, hi }))
}

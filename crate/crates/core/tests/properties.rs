use std::cmp::Ordering;
use std::path::PathBuf;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use proptest::prelude::*;

use d0l_growth::growth::{
    analyze_growth, detect_cycle, is_everlasting, is_irreducible, is_primitive, is_primitive_wielandt, period, reduce,
};
use d0l_growth::linalg::{char_poly, compare_roots, growth_value, incidence, perron_root};
use d0l_growth::verify::{gelfand_estimate, niven_classify, NivenClass, Norm};
use d0l_growth::words::{parikh, Alphabet, Morphism};
use d0l_growth::{growth_order, parse_system, AlgebraicNumber, D0LSystem, GrowthClass, IntMatrix, Letter, Word};

const SYMBOLS: [&str; 5] = ["a", "b", "c", "d", "e"];

fn build(images: Vec<Vec<u32>>, axiom: Vec<u32>) -> D0LSystem {
    let d = images.len();
    let alphabet = Alphabet::from_symbols(SYMBOLS[..d].iter().copied()).unwrap();
    let to_word = |v: Vec<u32>| Word(v.into_iter().map(Letter).collect());
    let morphism = Morphism::new(images.into_iter().map(to_word).collect()).unwrap();
    D0LSystem::new(alphabet, morphism, to_word(axiom)).unwrap()
}

/// Random systems on up to five letters with images of length ≤ 3.
fn arb_system() -> impl Strategy<Value = D0LSystem> {
    (1usize..=5)
        .prop_flat_map(|d| {
            let letter = 0..d as u32;
            (
                prop::collection::vec(prop::collection::vec(letter.clone(), 0..=3), d),
                prop::collection::vec(letter, 1..=3),
            )
        })
        .prop_map(|(images, axiom)| build(images, axiom))
}

fn arb_word(d: usize, max: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec((0..d as u32).prop_map(Letter), 0..=max).prop_map(Word)
}

fn arb_matrix(max_dim: usize, lo: i64, hi: i64) -> impl Strategy<Value = IntMatrix> {
    (1..=max_dim).prop_flat_map(move |d| {
        prop::collection::vec(prop::collection::vec(lo..=hi, d), d).prop_map(|rows| IntMatrix::from_rows(&rows).unwrap())
    })
}

fn lengths(s: &D0LSystem, n_max: u64) -> Vec<BigUint> {
    (0..=n_max).map(|n| growth_value(s, n)).collect()
}

fn letter_system(s: &D0LSystem, a: Letter) -> D0LSystem {
    s.with_axiom(Word(vec![a])).unwrap()
}

fn ln(x: &BigUint) -> f64 {
    d0l_growth::verify::ln_biguint(x)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn morphism_law(s in arb_system(), x in prop::collection::vec(0u32..5, 0..=6), y in prop::collection::vec(0u32..5, 0..=6)) {
        let d = s.alphabet().len() as u32;
        let word = |v: Vec<u32>| Word(v.into_iter().map(|i| Letter(i % d)).collect());
        let (x, y) = (word(x), word(y));
        let m = s.morphism();
        prop_assert_eq!(m.apply(&x.concat(&y)).unwrap(), m.apply(&x).unwrap().concat(&m.apply(&y).unwrap()));
    }

    #[test]
    fn iteration_composes(s in arb_system(), m in 0u64..4, n in 0u64..4) {
        let cap = 100_000;
        if let (Ok(whole), Ok(mut part)) = (s.iterate_capped(m + n, cap), s.iterate_capped(n, cap)) {
            for _ in 0..m {
                part = s.morphism().apply(&part).unwrap();
            }
            prop_assert_eq!(whole, part);
        }
    }

    #[test]
    fn length_is_additive(s in arb_system(), w in arb_word(5, 8)) {
        let d = s.alphabet().len();
        let w = Word(w.0.into_iter().filter(|l| l.index() < d).collect());
        let p = parikh(&w, s.alphabet());
        let expected: BigUint = s
            .alphabet()
            .letters()
            .map(|a| p.count(a) * BigUint::from(s.morphism().image(a).len()))
            .sum();
        prop_assert_eq!(BigUint::from(s.morphism().apply(&w).unwrap().len()), expected);
    }

    #[test]
    fn render_parse_round_trip(s in arb_system()) {
        prop_assert_eq!(parse_system(&s.render()).unwrap(), s);
    }

    #[test]
    fn norm_sandwich(m in arb_matrix(6, -9, 9)) {
        let d = m.dim();
        let (l1, linf) = (m.manhattan_norm(), m.max_norm());
        prop_assert!(linf <= l1);
        prop_assert!(l1 <= BigUint::from(d * d) * linf);
    }

    #[test]
    fn power_entries_count_occurrences(s in arb_system(), n in 0u64..5) {
        let mp = incidence(&s).pow(n);
        for a in s.alphabet().letters() {
            let Ok(word) = letter_system(&s, a).iterate_capped(n, 100_000) else { continue };
            for b in s.alphabet().letters() {
                let count = word.letters().iter().filter(|&&l| l == b).count();
                prop_assert_eq!(mp.get(b.index(), a.index()), &BigInt::from(count));
            }
        }
    }

    #[test]
    fn letter_lengths_sum_to_manhattan_norm(s in arb_system(), n in 0u64..30) {
        let total: BigUint = s.alphabet().letters().map(|a| growth_value(&letter_system(&s, a), n)).sum();
        prop_assert_eq!(total, incidence(&s).pow(n).manhattan_norm());
    }

    #[test]
    fn growth_value_is_iterate_length(s in arb_system(), n in 0u64..8) {
        if let Ok(w) = s.iterate_capped(n, 100_000) {
            prop_assert_eq!(growth_value(&s, n), BigUint::from(w.len()));
        }
    }

    #[test]
    fn cayley_hamilton(m in arb_matrix(4, -5, 5)) {
        let p = char_poly(&m);
        let d = m.dim();
        let mut acc = IntMatrix::zeros(d);
        let mut power = IntMatrix::identity(d);
        for c in p.coeffs() {
            acc = acc.add(&power.scale(c));
            power = power.mul(&m);
        }
        prop_assert!(acc.is_zero());
    }

    #[test]
    fn perron_root_is_certified(m in arb_matrix(4, 0, 3)) {
        let r = perron_root(&m).unwrap();
        let sturm = r.poly().square_free_part().sturm_sequence();
        if let Some(q) = r.rational_value() {
            prop_assert!(r.poly().is_root(&q));
        } else {
            prop_assert_eq!(sturm.count_roots(r.lo(), r.hi()), 1);
        }
        // Nothing larger: no root of the characteristic polynomial above r.
        let bound = BigRational::from_integer(m.max_row_sum() + 1);
        prop_assert_eq!(sturm.count_roots(r.hi(), &bound), 0);
    }

    #[test]
    fn compare_roots_is_a_consistent_order(a in arb_matrix(3, 0, 3), b in arb_matrix(3, 0, 3), c in arb_matrix(3, 0, 3)) {
        let [x, y, z] = [&a, &b, &c].map(|m| perron_root(m).unwrap());
        prop_assert_eq!(compare_roots(&x, &y), compare_roots(&y, &x).reverse());
        prop_assert_eq!(compare_roots(&x, &x), Ordering::Equal);
        if compare_roots(&x, &y) != Ordering::Greater && compare_roots(&y, &z) != Ordering::Greater {
            prop_assert_ne!(compare_roots(&x, &z), Ordering::Greater);
        }
        // Agrees with midpoints after refining to width 1e-30 whenever those are far apart.
        let width = BigRational::new(BigInt::one(), BigInt::from(10).pow(30));
        let (xr, yr) = (x.refine_to_width(&width), y.refine_to_width(&width));
        let gap = (xr.isolate().midpoint() - yr.isolate().midpoint()).abs();
        if gap > BigRational::from_integer(2.into()) * &width {
            prop_assert_eq!(compare_roots(&x, &y), xr.isolate().midpoint().cmp(&yr.isolate().midpoint()));
        }
    }

    #[test]
    fn reduce_is_idempotent_and_preserves_lengths(s in arb_system()) {
        let r = reduce(&s);
        prop_assert_eq!(reduce(&r), r.clone());
        for n in 0..=50 {
            prop_assert_eq!(growth_value(&s, n), growth_value(&r, n));
        }
    }

    #[test]
    fn letter_sum_is_comparable_to_word_length(s in arb_system()) {
        let r = reduce(&s);
        prop_assume!(is_everlasting(&r));
        let w = lengths(&r, 120);
        let per_letter: Vec<Vec<BigUint>> = r.alphabet().letters().map(|a| lengths(&letter_system(&r, a), 120)).collect();
        let ln_ratio = |n: usize| {
            let total: BigUint = per_letter.iter().map(|l| &l[n]).sum();
            ln(&total) - ln(&w[n])
        };
        let spread = |hi: usize| {
            let xs: Vec<f64> = (10..=hi).map(ln_ratio).collect();
            xs.iter().cloned().fold(f64::NEG_INFINITY, f64::max) - xs.iter().cloned().fold(f64::INFINITY, f64::min)
        };
        let (s1, s2) = (spread(60), spread(120));
        prop_assert!(s2 - s1 < 0.25_f64.ln_1p(), "spread {} → {}", s1.exp(), s2.exp());
    }

    #[test]
    fn occurring_letters_grow_no_faster(s in arb_system(), n0 in 0u64..4) {
        let Ok(word) = s.iterate_capped(n0, 100_000) else { return Ok(()) };
        let l = s.alphabet().letters().map(|a| growth_value(&letter_system(&s, a), n0)).max().unwrap();
        let mut present: Vec<Letter> = word.letters().to_vec();
        present.sort();
        present.dedup();
        for x in present {
            let sx = letter_system(&s, x);
            for n in 0..=30 {
                prop_assert!(growth_value(&sx, n) <= &l * growth_value(&s, n));
            }
        }
    }

    #[test]
    fn irreducible_letters_share_a_period(s in arb_system()) {
        if is_irreducible(&s) {
            let p0 = period(&s, Letter(0));
            for a in s.alphabet().letters() {
                prop_assert_eq!(period(&s, a), p0);
            }
        }
    }

    #[test]
    fn primitivity_routes_agree(s in arb_system()) {
        prop_assert_eq!(is_primitive(&s), is_primitive_wielandt(&s));
    }

    #[test]
    fn growth_order_bounds(s in arb_system()) {
        let analysis = analyze_growth(&s);
        let o = &analysis.order;
        prop_assert_eq!(o.class == GrowthClass::Mortal, !is_everlasting(&s));
        if let (Some(alpha), Some(beta)) = (o.alpha, &o.beta) {
            prop_assert!((alpha as usize) < analysis.reduced.alphabet().len());
            prop_assert_ne!(compare_roots(beta, &AlgebraicNumber::from_integer(1)), Ordering::Less);
        }
    }

    #[test]
    fn reported_cycles_verify(s in arb_system()) {
        let r = detect_cycle(&s, 200).unwrap();
        if r.eventually_periodic == Some(true) {
            let (pre, per) = (r.preperiod.unwrap(), r.period_length.unwrap());
            prop_assert!(per >= 1);
            prop_assert_eq!(s.iterate(pre).unwrap(), s.iterate(pre + per).unwrap());
            if pre > 0 {
                prop_assert_ne!(s.iterate(pre - 1).unwrap(), s.iterate(pre - 1 + per).unwrap());
            }
        }
        if matches!(growth_order(&s).class, GrowthClass::Polynomial | GrowthClass::Exponential) {
            prop_assert_eq!(r.eventually_periodic, Some(false));
        }
    }

    #[test]
    fn niven_matches_fifty_digit_cosine(s in -500i64..500, t in 1i64..=100) {
        let rho = BigRational::new(s.into(), t.into());
        let c = cos_two_pi(&rho);
        let one = fixed_one();
        match niven_classify(&rho) {
            NivenClass::Rational(v) => {
                let v = (BigRational::from_integer(one.clone()) * v).to_integer();
                prop_assert!((&c - v).abs() < BigInt::from(10).pow(DIGITS - 45));
            }
            NivenClass::Irrational => {
                // No p/q with q ≤ 1000 within 1e-40.
                let tol = BigInt::from(10).pow(DIGITS - 40);
                for q in 1..=1000i64 {
                    let qc = &c * q;
                    let (near, rem) = qc.div_mod_floor(&one);
                    let dist = rem.clone().min(&one - &rem);
                    prop_assert!(dist > &tol * q, "cos(2π·{s}/{t}) ≈ {}/{q}", near);
                }
            }
        }
    }
}

/// Fixed-point digits used for the cosine oracle.
const DIGITS: u32 = 60;
const PI_60: &str = "3141592653589793238462643383279502884197169399375105820974944";

fn fixed_one() -> BigInt {
    BigInt::from(10).pow(DIGITS)
}

/// `cos(2πρ)` scaled by `10^DIGITS`, by Taylor series in fixed point.
fn cos_two_pi(rho: &BigRational) -> BigInt {
    let one = fixed_one();
    let pi: BigInt = PI_60.parse().unwrap();
    // ρ mod 1 in [0, 1), then x = 2πρ − π ∈ [−π, π) and cos(2πρ) = −cos(x).
    let frac = rho - rho.floor();
    let x = (BigRational::from_integer(&pi * 2) * frac).to_integer() - &pi;
    let x2 = &x * &x / &one;
    let mut term = one.clone();
    let mut sum = one.clone();
    for k in 1u32.. {
        term = -(&term * &x2 / &one) / BigInt::from((2 * k - 1) * (2 * k));
        if term.is_zero() {
            break;
        }
        sum += &term;
    }
    -sum
}

fn corpus_matrices() -> Vec<(String, IntMatrix)> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("corpus");
    let mut out: Vec<(String, IntMatrix)> = std::fs::read_dir(&dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "dol"))
        .map(|p| {
            let s = parse_system(&std::fs::read_to_string(&p).unwrap()).unwrap();
            (p.file_stem().unwrap().to_string_lossy().into_owned(), incidence(&s))
        })
        .collect();
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

#[test]
fn gelfand_error_does_not_grow_when_doubling() {
    for (name, m) in corpus_matrices() {
        let rho = perron_root(&m).unwrap().to_f64();
        for n in 8..=64 {
            let e1 = (gelfand_estimate(&m, n, Norm::Manhattan).unwrap() - rho).abs();
            let e2 = (gelfand_estimate(&m, 2 * n, Norm::Manhattan).unwrap() - rho).abs();
            assert!(e2 <= e1 + 1e-9, "{name}, n = {n}: {e1} → {e2}");
        }
    }
}

#[test]
fn cosine_oracle_sanity() {
    let one = fixed_one();
    let q = |s: i64, t: i64| BigRational::new(BigInt::from(s), BigInt::from(t));
    assert!((cos_two_pi(&q(0, 1)) - &one).abs() < BigInt::from(1000));
    assert!((cos_two_pi(&q(1, 2)) + &one).abs() < BigInt::from(1000));
    assert!((cos_two_pi(&q(1, 6)) * BigInt::from(2) - &one).abs() < BigInt::from(1000));
    let c = cos_two_pi(&q(1, 5)).to_f64().unwrap() / 1e60;
    assert!((c - (5f64.sqrt() - 1.0) / 4.0).abs() < 1e-15);
}

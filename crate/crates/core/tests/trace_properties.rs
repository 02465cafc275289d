use fricke_core::tracering::{markov_polynomial, trace_polynomial, TraceCalculator, TracePoly};
use fricke_core::words::{parse_word, random_reduced_word, Generator, Letter, Word};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Mat = [BigRational; 4];

fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn mul(p: &Mat, r: &Mat) -> Mat {
    [
        &p[0] * &r[0] + &p[1] * &r[2],
        &p[0] * &r[1] + &p[1] * &r[3],
        &p[2] * &r[0] + &p[3] * &r[2],
        &p[2] * &r[1] + &p[3] * &r[3],
    ]
}

fn inv(m: &Mat) -> Mat {
    [m[3].clone(), -m[1].clone(), -m[2].clone(), m[0].clone()]
}

/// Determinant one by construction: `d = (1 + bc) / a`.
fn random_sl2(rng: &mut ChaCha8Rng) -> Mat {
    let mut a = rng.gen_range(-4i64..=4);
    if a == 0 {
        a = 1;
    }
    let b = rng.gen_range(-4i64..=4);
    let c = rng.gen_range(-4i64..=4);
    let d = BigRational::new(BigInt::from(1 + b * c), BigInt::from(a));
    [q(a), q(b), q(c), d]
}

fn word_matrix(w: &Word, a: &Mat, b: &Mat) -> Mat {
    let (ai, bi) = (inv(a), inv(b));
    w.letters().iter().fold([q(1), q(0), q(0), q(1)], |acc, l| {
        let m = match (l.generator, l.inverse) {
            (Generator::A, false) => a,
            (Generator::A, true) => &ai,
            (Generator::B, false) => b,
            (Generator::B, true) => &bi,
        };
        mul(&acc, m)
    })
}

fn tr(m: &Mat) -> BigRational {
    &m[0] + &m[3]
}

#[test]
fn exact_matrix_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut calc = TraceCalculator::new();
    for _ in 0..300 {
        let len = rng.gen_range(0..=12);
        let w = random_reduced_word(&mut rng, len);
        let (a, b) = (random_sl2(&mut rng), random_sl2(&mut rng));
        let (x, y, z) = (tr(&a), tr(&b), tr(&mul(&a, &b)));
        let symbolic = calc.trace(&w).evaluate_rational(&x, &y, &z);
        assert_eq!(symbolic, tr(&word_matrix(&w, &a, &b)), "word {w}");
    }
}

#[test]
fn commutator_trace_is_markov_minus_two() {
    let w = parse_word("abAB").unwrap();
    assert_eq!(
        trace_polynomial(&w),
        &markov_polynomial() - &TracePoly::from_int(2)
    );
}

#[test]
fn worked_example_traces() {
    let cases = [
        ("1", "2"),
        ("aa", "X^2 - 2"),
        ("aab", "X*Z - Y"),
        ("AB", "Z"),
        ("aB", "X*Y - Z"),
    ];
    for (w, p) in cases {
        assert_eq!(
            trace_polynomial(&parse_word(w).unwrap()).to_string(),
            p,
            "{w}"
        );
    }
}

fn letter() -> impl Strategy<Value = Letter> {
    prop_oneof![
        Just(Letter::new(Generator::A, false)),
        Just(Letter::new(Generator::A, true)),
        Just(Letter::new(Generator::B, false)),
        Just(Letter::new(Generator::B, true)),
    ]
}

fn word(max: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(letter(), 0..=max).prop_map(Word::from_letters)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn conjugates_share_a_representative(u in word(9), w in word(6)) {
        let conj = w.concat(&u).concat(&w.invert());
        prop_assert_eq!(u.cyclic_reduce(), conj.cyclic_reduce());
        prop_assert_eq!(trace_polynomial(&u), trace_polynomial(&conj));
    }

    #[test]
    fn trace_is_inversion_invariant(u in word(10)) {
        prop_assert_eq!(trace_polynomial(&u), trace_polynomial(&u.invert()));
    }

    #[test]
    fn trace_survives_cyclic_reduction(u in word(10)) {
        prop_assert_eq!(trace_polynomial(&u), trace_polynomial(&u.cyclic_reduce()));
    }

    #[test]
    fn fundamental_identity(u in word(7), v in word(7)) {
        let lhs = &trace_polynomial(&u.concat(&v)) + &trace_polynomial(&u.concat(&v.invert()));
        let rhs = &trace_polynomial(&u) * &trace_polynomial(&v);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn inversion_is_an_involution(u in word(12)) {
        prop_assert_eq!(u.invert().invert(), u.clone());
        prop_assert!(u.concat(&u.invert()).is_identity());
    }

    #[test]
    fn display_round_trips(u in word(12)) {
        prop_assert_eq!(parse_word(&u.to_string()).unwrap(), u);
    }
}

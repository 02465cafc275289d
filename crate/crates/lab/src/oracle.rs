//! Floating-point cross-check of trace polynomials against explicit
//! `SL(2, R)` matrices.

use fricke_core::tracering::{markov_polynomial, TraceCalculator, TracePoly};
use fricke_core::words::{parse_word, random_reduced_word, Generator, Word};
use rand::Rng;

/// Row-major `[[m0, m1], [m2, m3]]`.
pub type Mat2 = [f64; 4];

fn mul(p: &Mat2, q: &Mat2) -> Mat2 {
    [
        p[0] * q[0] + p[1] * q[2],
        p[0] * q[1] + p[1] * q[3],
        p[2] * q[0] + p[3] * q[2],
        p[2] * q[1] + p[3] * q[3],
    ]
}

fn inverse(m: &Mat2) -> Mat2 {
    [m[3], -m[1], -m[2], m[0]]
}

/// Random determinant-one matrix: `a` away from zero, `b, c ∈ [-2, 2]`,
/// `d = (1 + bc) / a`.
pub fn random_sl2<R: Rng + ?Sized>(rng: &mut R) -> Mat2 {
    let magnitude = rng.gen_range(0.5..2.0);
    let a = if rng.gen_bool(0.5) {
        magnitude
    } else {
        -magnitude
    };
    let b = rng.gen_range(-2.0..=2.0);
    let c = rng.gen_range(-2.0..=2.0);
    [a, b, c, (1.0 + b * c) / a]
}

pub fn word_matrix(w: &Word, a: &Mat2, b: &Mat2) -> Mat2 {
    let (ai, bi) = (inverse(a), inverse(b));
    w.letters().iter().fold([1.0, 0.0, 0.0, 1.0], |acc, l| {
        let m = match (l.generator, l.inverse) {
            (Generator::A, false) => a,
            (Generator::A, true) => &ai,
            (Generator::B, false) => b,
            (Generator::B, true) => &bi,
        };
        mul(&acc, m)
    })
}

pub fn trace(m: &Mat2) -> f64 {
    m[0] + m[3]
}

#[derive(Debug, Clone)]
pub struct OracleMismatch {
    pub word: Word,
    pub symbolic: f64,
    pub numeric: f64,
}

#[derive(Debug, Clone)]
pub struct OracleReport {
    pub samples: usize,
    pub max_relative_error: f64,
    pub mismatches: Vec<OracleMismatch>,
    /// `tr [a, b]` reduces to the Markov polynomial minus 2.
    pub commutator_symbolic: bool,
    pub commutator_numeric_failures: usize,
}

impl OracleReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
            && self.commutator_symbolic
            && self.commutator_numeric_failures == 0
    }
}

fn relative_error(symbolic: f64, numeric: f64) -> f64 {
    (symbolic - numeric).abs() / numeric.abs().max(1.0)
}

/// Draws `samples` words of length at most `max_len`, each with a fresh
/// random pair of matrices, and compares the trace polynomial evaluated at
/// `(tr A, tr B, tr AB)` with the trace of the matrix product.
pub fn matrix_trace_oracle<R: Rng + ?Sized>(
    rng: &mut R,
    samples: usize,
    max_len: usize,
    tolerance: f64,
) -> OracleReport {
    let mut calc = TraceCalculator::new();
    let commutator = parse_word("abAB").expect("literal word");
    let expected = &markov_polynomial() - &TracePoly::from_int(2);
    let commutator_poly = calc.trace(&commutator);
    let mut report = OracleReport {
        samples,
        max_relative_error: 0.0,
        mismatches: Vec::new(),
        commutator_symbolic: commutator_poly == expected,
        commutator_numeric_failures: 0,
    };
    for _ in 0..samples {
        let len = rng.gen_range(0..=max_len);
        let w = random_reduced_word(rng, len);
        let (a, b) = (random_sl2(rng), random_sl2(rng));
        let (x, y, z) = (trace(&a), trace(&b), trace(&mul(&a, &b)));
        let numeric = trace(&word_matrix(&w, &a, &b));
        let symbolic = calc.trace(&w).evaluate_f64(x, y, z);
        let err = relative_error(symbolic, numeric);
        report.max_relative_error = report.max_relative_error.max(err);
        if err.is_nan() || err > tolerance {
            report.mismatches.push(OracleMismatch {
                word: w,
                symbolic,
                numeric,
            });
        }
        let c = trace(&word_matrix(&commutator, &a, &b));
        if relative_error(commutator_poly.evaluate_f64(x, y, z), c) > tolerance {
            report.commutator_numeric_failures += 1;
        }
    }
    report
}

//! Marked length varieties.
//!
//! A rational polynomial `F(X1, …, Xn)` and a tuple of words `(γ1, …, γn)`
//! give the condition `F(tr γ1, …, tr γn) = 0`. Composing `F` with trace
//! polynomials decides it for every point at once; evaluating at a Fricke
//! point decides it there.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use thiserror::Error;

use crate::algebraic::{is_geometric_salem_with, AlgebraicError, FieldElem, Real, SalemStatus};
use crate::fricke::{trace_of_with, FrickePoint};
use crate::interval::Interval;
use crate::poly::UniPoly;
use crate::textpoly::parse_terms;
use crate::tracering::{TraceCalculator, TracePoly};
use crate::words::{random_reduced_word, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VarietyError {
    #[error("malformed variety polynomial: {0}")]
    Parse(String),
    #[error("polynomial has arity {arity} but the tuple has {words} words")]
    ArityMismatch { arity: usize, words: usize },
    #[error("no minimal polynomial supplied for subset {0}")]
    MissingSubset(String),
    #[error("subset {0} does not index the generators")]
    InvalidSubset(String),
    #[error("between 1 and 16 generators are supported, got {0}")]
    GeneratorCount(usize),
    #[error(transparent)]
    Algebraic(#[from] AlgebraicError),
}

/// Exponent vector ordered by total degree, then lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
struct Exponents(Vec<u32>);

impl Exponents {
    fn degree(&self) -> u32 {
        self.0.iter().sum()
    }
}

impl PartialOrd for Exponents {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Exponents {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

/// Sparse polynomial over `Q` in `X1, …, Xn`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VarietyPolynomial {
    arity: usize,
    terms: BTreeMap<Exponents, BigRational>,
}

fn parse_index(name: &str) -> Result<usize, VarietyError> {
    name.strip_prefix('X')
        .and_then(|k| k.parse::<usize>().ok())
        .filter(|&k| k >= 1)
        .ok_or_else(|| {
            VarietyError::Parse(alloc::format!(
                "unknown variable {name:?} (expected X1, X2, ...)"
            ))
        })
}

impl VarietyPolynomial {
    /// Parses text such as `X1*X2 - X3 - X4`; the arity is the largest
    /// variable index.
    pub fn parse(text: &str) -> Result<Self, VarietyError> {
        Self::parse_inner(text, None)
    }

    /// Parses with an explicitly declared arity.
    pub fn parse_with_arity(text: &str, arity: usize) -> Result<Self, VarietyError> {
        Self::parse_inner(text, Some(arity))
    }

    fn parse_inner(text: &str, declared: Option<usize>) -> Result<Self, VarietyError> {
        let raw = parse_terms(text).map_err(VarietyError::Parse)?;
        let mut parsed = Vec::with_capacity(raw.len());
        let mut max_index = 0;
        for (coeff, vars) in raw {
            let mut idx = Vec::with_capacity(vars.len());
            for (name, e) in vars {
                let k = parse_index(&name)?;
                max_index = max_index.max(k);
                idx.push((k, e));
            }
            parsed.push((coeff, idx));
        }
        let arity = match declared {
            Some(n) if n < max_index => {
                return Err(VarietyError::Parse(alloc::format!(
                    "variable X{max_index} exceeds the declared arity {n}"
                )))
            }
            Some(n) => n,
            None => max_index,
        };
        if arity == 0 {
            return Err(VarietyError::Parse(
                "no variables and no declared arity".into(),
            ));
        }
        let mut out = VarietyPolynomial {
            arity,
            terms: BTreeMap::new(),
        };
        for (coeff, idx) in parsed {
            let mut exps = alloc::vec![0u32; arity];
            for (k, e) in idx {
                exps[k - 1] += e;
            }
            out.add_term(Exponents(exps), coeff);
        }
        Ok(out)
    }

    fn add_term(&mut self, m: Exponents, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let entry = self
            .terms
            .entry(m.clone())
            .or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    /// `X1*X2 - X3 - X4`.
    pub fn trace_identity() -> Self {
        Self::parse("X1*X2 - X3 - X4").expect("literal polynomial")
    }

    /// `X1 - X2`, whose variety is the marked length pattern.
    pub fn length_pattern() -> Self {
        Self::parse("X1 - X2").expect("literal polynomial")
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Least positive common denominator of the coefficients.
    pub fn denominator(&self) -> BigInt {
        self.terms
            .values()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }

    pub fn evaluate_by<T: Clone>(
        &self,
        values: &[T],
        lift: impl Fn(&BigRational) -> T,
        add: impl Fn(&T, &T) -> T,
        mul: impl Fn(&T, &T) -> T,
    ) -> T {
        let mut acc = lift(&BigRational::zero());
        for (m, c) in &self.terms {
            let mut t = lift(c);
            for (v, &e) in values.iter().zip(&m.0) {
                for _ in 0..e {
                    t = mul(&t, v);
                }
            }
            acc = add(&acc, &t);
        }
        acc
    }

    fn check_arity(&self, words: usize) -> Result<(), VarietyError> {
        if words != self.arity {
            return Err(VarietyError::ArityMismatch {
                arity: self.arity,
                words,
            });
        }
        Ok(())
    }
}

impl fmt::Display for VarietyPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            let vars: Vec<String> =
                m.0.iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(k, &e)| {
                        if e == 1 {
                            alloc::format!("X{}", k + 1)
                        } else {
                            alloc::format!("X{}^{e}", k + 1)
                        }
                    })
                    .collect();
            if vars.is_empty() {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                f.write_str(&vars.join("*"))?;
            }
        }
        Ok(())
    }
}

impl FromStr for VarietyPolynomial {
    type Err = VarietyError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::parse(s)
    }
}

/// An ordered tuple of words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordTuple(pub Vec<Word>);

impl WordTuple {
    pub fn parse(text: &str) -> Result<Self, crate::words::WordError> {
        crate::words::parse_word_tuple(text).map(WordTuple)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for WordTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, w) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{w}")?;
        }
        Ok(())
    }
}

/// `F(tr γ1, …, tr γn) = factor · numerator` with `numerator` a primitive
/// integer trace polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolicResidual {
    pub numerator: TracePoly,
    pub factor: BigRational,
}

impl SymbolicResidual {
    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }
}

impl fmt::Display for SymbolicResidual {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            f.write_str("0")
        } else if self.factor.is_one() {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "{} * ({})", self.factor, self.numerator)
        }
    }
}

pub fn symbolic_residual(
    f: &VarietyPolynomial,
    tuple: &WordTuple,
) -> Result<SymbolicResidual, VarietyError> {
    symbolic_residual_with(&mut TraceCalculator::new(), f, tuple)
}

pub fn symbolic_residual_with(
    calc: &mut TraceCalculator,
    f: &VarietyPolynomial,
    tuple: &WordTuple,
) -> Result<SymbolicResidual, VarietyError> {
    f.check_arity(tuple.len())?;
    let den = f.denominator();
    let traces: Vec<TracePoly> = tuple.0.iter().map(|w| calc.trace(w)).collect();
    let composed = f.evaluate_by(
        &traces,
        |c| TracePoly::constant((c * BigRational::from_integer(den.clone())).to_integer()),
        |a, b| a + b,
        |a, b| a * b,
    );
    let (content, numerator) = composed.primitive_part();
    let factor = if content.is_zero() {
        BigRational::zero()
    } else {
        BigRational::new(content, den)
    };
    Ok(SymbolicResidual { numerator, factor })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Membership {
    In,
    Out,
    Undecided,
}

impl fmt::Display for Membership {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Membership::In => "In",
            Membership::Out => "Out",
            Membership::Undecided => "Undecided",
        })
    }
}

/// Working precision and tolerance for enclosed points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NumericConfig {
    pub bits: u32,
    pub tolerance: BigRational,
}

impl Default for NumericConfig {
    fn default() -> Self {
        NumericConfig {
            bits: crate::fricke::DEFAULT_PRECISION_BITS,
            tolerance: crate::fricke::default_tolerance(),
        }
    }
}

fn classify(i: &Interval, tol: &BigRational) -> Membership {
    if i.is_subset_of(&Interval::new(-tol.clone(), tol.clone())) {
        Membership::In
    } else if !i.contains_zero() {
        Membership::Out
    } else {
        Membership::Undecided
    }
}

/// Membership at one point: exact at algebraic points, tolerance-based
/// at enclosed ones.
pub fn numeric_member(
    f: &VarietyPolynomial,
    tuple: &WordTuple,
    pt: &FrickePoint,
    cfg: &NumericConfig,
) -> Result<Membership, VarietyError> {
    numeric_member_with(&mut TraceCalculator::new(), f, tuple, pt, cfg)
}

pub fn numeric_member_with(
    calc: &mut TraceCalculator,
    f: &VarietyPolynomial,
    tuple: &WordTuple,
    pt: &FrickePoint,
    cfg: &NumericConfig,
) -> Result<Membership, VarietyError> {
    f.check_arity(tuple.len())?;
    let traces: Vec<Real> = tuple
        .0
        .iter()
        .map(|w| trace_of_with(calc, pt, w, cfg.bits))
        .collect();
    if let Some(exact) = traces
        .iter()
        .map(Real::as_exact)
        .collect::<Option<Vec<_>>>()
    {
        let exact: Vec<FieldElem> = exact.into_iter().cloned().collect();
        let v = f.evaluate_by(
            &exact,
            |c| FieldElem::rational(c.clone()),
            FieldElem::add_unchecked,
            FieldElem::mul_unchecked,
        );
        return Ok(if v.is_zero() {
            Membership::In
        } else {
            Membership::Out
        });
    }
    let enclosures: Vec<Interval> = traces.iter().map(|t| t.enclosure(cfg.bits)).collect();
    let bits = cfg.bits;
    let v = f.evaluate_by(
        &enclosures,
        |c| Interval::point(c.clone()),
        |a, b| (a + b).round(bits),
        |a, b| (a * b).round(bits),
    );
    Ok(classify(&v, &cfg.tolerance))
}

/// Whether `u` and `v` have equal length at the point.
pub fn pattern_member(u: &Word, v: &Word, pt: &FrickePoint, cfg: &NumericConfig) -> Membership {
    let tuple = WordTuple(alloc::vec![u.clone(), v.clone()]);
    numeric_member(&VarietyPolynomial::length_pattern(), &tuple, pt, cfg)
        .expect("the pattern polynomial has arity 2")
}

/// Root certification of one subset trace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RootCheck {
    Exact(bool),
    Enclosure(Membership),
}

impl RootCheck {
    pub fn passes(&self) -> bool {
        matches!(
            self,
            RootCheck::Exact(true) | RootCheck::Enclosure(Membership::In)
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsetCheck {
    /// 1-based generator indices, increasing.
    pub subset: Vec<usize>,
    pub word: Word,
    pub polynomial: UniPoly,
    pub salem: SalemStatus,
    pub root: RootCheck,
}

impl SubsetCheck {
    pub fn passes(&self) -> bool {
        self.salem == SalemStatus::GeometricSalem && self.root.passes()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremAReport {
    pub checks: Vec<SubsetCheck>,
    pub rigidity_set: Vec<String>,
}

impl TheoremAReport {
    pub fn satisfied(&self) -> bool {
        self.checks.iter().all(SubsetCheck::passes)
    }
}

pub fn format_subset(s: &[usize]) -> String {
    let parts: Vec<String> = s.iter().map(|k| alloc::format!("{k}")).collect();
    alloc::format!("{{{}}}", parts.join(","))
}

impl fmt::Display for TheoremAReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let root = match &c.root {
                RootCheck::Exact(true) => "root: exact",
                RootCheck::Exact(false) => "root: no (exact)",
                RootCheck::Enclosure(Membership::In) => "root: within tolerance",
                RootCheck::Enclosure(Membership::Out) => "root: no (enclosure)",
                RootCheck::Enclosure(Membership::Undecided) => "root: undecided",
            };
            writeln!(
                f,
                "subset {} word {}: f = {}; salem: {}; {}",
                format_subset(&c.subset),
                c.word,
                c.polynomial.pretty("x"),
                c.salem.token(),
                root
            )?;
        }
        writeln!(f, "rigidity set: {{{}}}", self.rigidity_set.join(", "))?;
        if self.satisfied() {
            writeln!(f, "hypothesis: SATISFIED")?;
            write!(f, "verdict: Satisfied")
        } else {
            writeln!(f, "hypothesis: NOT SATISFIED")?;
            write!(f, "verdict: NotSatisfied")
        }
    }
}

fn nonempty_subsets(n: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = (1u32..(1 << n))
        .map(|mask| {
            (0..n)
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| i + 1)
                .collect()
        })
        .collect();
    out.sort_by(|a: &Vec<usize>, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

/// Checks the hypotheses of the rigidity theorem for subset products of
/// `generators`: each supplied minimal polynomial is geometric Salem and
/// has the subset trace as a root.
pub fn theorem_a_check(
    generators: &[Word],
    minpolys: &BTreeMap<Vec<usize>, UniPoly>,
    pt: &FrickePoint,
    cfg: &NumericConfig,
    prime_bound: u64,
) -> Result<TheoremAReport, VarietyError> {
    let n = generators.len();
    if n == 0 || n > 16 {
        return Err(VarietyError::GeneratorCount(n));
    }
    for key in minpolys.keys() {
        let increasing = key.windows(2).all(|w| w[0] < w[1]);
        if key.is_empty() || !increasing || key.iter().any(|&k| k == 0 || k > n) {
            return Err(VarietyError::InvalidSubset(format_subset(key)));
        }
    }
    let mut calc = TraceCalculator::new();
    let mut checks = Vec::new();
    let mut rigidity_set = alloc::vec![alloc::format!("{}", VarietyPolynomial::trace_identity())];
    for subset in nonempty_subsets(n) {
        let f = minpolys
            .get(&subset)
            .ok_or_else(|| VarietyError::MissingSubset(format_subset(&subset)))?;
        let word = subset
            .iter()
            .fold(Word::identity(), |acc, &k| acc.concat(&generators[k - 1]));
        let salem = is_geometric_salem_with(f, prime_bound)?.status;
        let root = match trace_of_with(&mut calc, pt, &word, cfg.bits) {
            Real::Exact(t) => {
                let v = f
                    .coeffs()
                    .iter()
                    .rev()
                    .fold(FieldElem::from_int(0), |acc, c| {
                        acc.mul_unchecked(&t).add_unchecked(&FieldElem::rational(
                            BigRational::from_integer(c.clone()),
                        ))
                    });
                RootCheck::Exact(v.is_zero())
            }
            Real::Enclosure(t) => {
                let v = f
                    .coeffs()
                    .iter()
                    .rev()
                    .fold(Interval::from_int(0), |acc, c| {
                        (&(&acc * &t) + &Interval::point(BigRational::from_integer(c.clone())))
                            .round(cfg.bits)
                    });
                RootCheck::Enclosure(classify(&v, &cfg.tolerance))
            }
        };
        rigidity_set.push(f.pretty("x"));
        checks.push(SubsetCheck {
            subset,
            word,
            polynomial: f.clone(),
            salem,
            root,
        });
    }
    Ok(TheoremAReport {
        checks,
        rigidity_set,
    })
}

/// Outcome of the randomized trace-identity harness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentitySuiteReport {
    pub polynomial: VarietyPolynomial,
    pub samples: usize,
    /// `(u, v, residual)` for each failing pair.
    pub failures: Vec<(Word, Word, SymbolicResidual)>,
}

impl IdentitySuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for IdentitySuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "polynomial: {}", self.polynomial)?;
        writeln!(f, "tuple: (u, v, uv, uv^-1)")?;
        writeln!(f, "samples: {}", self.samples)?;
        writeln!(f, "failures: {}", self.failures.len())?;
        if let Some((u, v, r)) = self.failures.first() {
            writeln!(f, "counterexample: u = {u}, v = {v}, residual = {r}")?;
        }
        write!(
            f,
            "verdict: {}",
            if self.passed() { "pass" } else { "fail" }
        )
    }
}

/// Runs [`trace_identity_suite_with`] on `X1*X2 - X3 - X4`.
pub fn trace_identity_suite<R: Rng + ?Sized>(
    rng: &mut R,
    sample_count: usize,
    max_len: usize,
) -> IdentitySuiteReport {
    trace_identity_suite_with(
        &VarietyPolynomial::trace_identity(),
        rng,
        sample_count,
        max_len,
    )
    .expect("the identity polynomial has arity 4")
}

/// Draws random pairs `u, v` with lengths up to `max_len` and composes `f`
/// with `(u, v, uv, uv⁻¹)`.
pub fn trace_identity_suite_with<R: Rng + ?Sized>(
    f: &VarietyPolynomial,
    rng: &mut R,
    sample_count: usize,
    max_len: usize,
) -> Result<IdentitySuiteReport, VarietyError> {
    f.check_arity(4)?;
    let mut calc = TraceCalculator::new();
    let mut failures = Vec::new();
    for _ in 0..sample_count {
        let lu = rng.gen_range(0..=max_len);
        let u = random_reduced_word(rng, lu);
        let lv = rng.gen_range(0..=max_len);
        let v = random_reduced_word(rng, lv);
        let tuple = WordTuple(alloc::vec![
            u.clone(),
            v.clone(),
            u.concat(&v),
            u.concat(&v.invert())
        ]);
        let r = symbolic_residual_with(&mut calc, f, &tuple)?;
        if !r.is_zero() {
            failures.push((u, v, r));
        }
    }
    Ok(IdentitySuiteReport {
        polynomial: f.clone(),
        samples: sample_count,
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fricke::solve_paper_system;
    use crate::words::parse_word;
    use alloc::string::ToString;
    use rand::SeedableRng;

    fn w(s: &str) -> Word {
        parse_word(s).unwrap()
    }

    fn t(s: &str) -> WordTuple {
        WordTuple::parse(s).unwrap()
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn parse_and_print() {
        let f = VarietyPolynomial::parse("X1*X2 - X3 - X4").unwrap();
        assert_eq!(f.arity(), 4);
        assert_eq!(f.to_string(), "X1*X2 - X3 - X4");
        let g = VarietyPolynomial::parse("1/2*X2^2 - 3 + X1").unwrap();
        assert_eq!(g.to_string(), "1/2*X2^2 + X1 - 3");
        assert_eq!(g.denominator(), BigInt::from(2));
        assert!(VarietyPolynomial::parse("X0 + X1").is_err());
        assert!(VarietyPolynomial::parse("Y1").is_err());
        assert!(VarietyPolynomial::parse_with_arity("X3", 2).is_err());
        assert_eq!(
            VarietyPolynomial::parse_with_arity("X1*X2 - X3", 4)
                .unwrap()
                .arity(),
            4
        );
    }

    #[test]
    fn symbolic_examples() {
        let r = symbolic_residual(&VarietyPolynomial::trace_identity(), &t("a,b,ab,aB")).unwrap();
        assert!(r.is_zero());
        let pat = VarietyPolynomial::length_pattern();
        assert!(symbolic_residual(&pat, &t("a,a")).unwrap().is_zero());
        let r = symbolic_residual(&pat, &t("a,b")).unwrap();
        assert_eq!(r.to_string(), "X - Y");
        let half = VarietyPolynomial::parse("1/2*X1 - 1/2*X2").unwrap();
        let r = symbolic_residual(&half, &t("a,b")).unwrap();
        assert_eq!(r.factor, q(1, 2));
        assert_eq!(r.numerator.to_string(), "X - Y");
        assert_eq!(
            symbolic_residual(&pat, &t("a,b,ab")),
            Err(VarietyError::ArityMismatch { arity: 2, words: 3 })
        );
    }

    #[test]
    fn solved_point_patterns() {
        let sol = solve_paper_system(&q(1, 100000)).unwrap();
        let cfg = NumericConfig::default();
        assert_eq!(
            pattern_member(&w("a"), &w("b"), &sol.point, &cfg),
            Membership::In
        );
        assert_eq!(
            pattern_member(&w("aa"), &w("aab"), &sol.point, &cfg),
            Membership::In
        );
        assert_eq!(
            pattern_member(&w("a"), &w("ab"), &sol.point, &cfg),
            Membership::Out
        );
        let enc = sol.point.enclose(128);
        assert_eq!(
            pattern_member(&w("aa"), &w("aab"), &enc, &cfg),
            Membership::In
        );
        assert_eq!(
            pattern_member(&w("a"), &w("ab"), &enc, &cfg),
            Membership::Out
        );
        let coarse = sol.point.enclose(32);
        let cfg32 = NumericConfig {
            bits: 32,
            ..NumericConfig::default()
        };
        assert_eq!(
            pattern_member(&w("aa"), &w("aab"), &coarse, &cfg32),
            Membership::Undecided
        );
        let other = FrickePoint::markov(&q(3, 1), &q(4, 1)).unwrap();
        assert_eq!(
            pattern_member(&w("a"), &w("b"), &other, &cfg),
            Membership::Out
        );
    }

    #[test]
    fn rigidity_check_examples() {
        let cfg = NumericConfig::default();
        let mut m = BTreeMap::new();
        m.insert(alloc::vec![1], UniPoly::from_i64s(&[-3, 1]));
        let pt = FrickePoint::markov(&q(3, 1), &q(3, 1)).unwrap();
        let r = theorem_a_check(&[w("a")], &m, &pt, &cfg, 500).unwrap();
        assert!(r.satisfied());
        assert!(r.to_string().contains("hypothesis: SATISFIED"));

        // x = (1 + √13)/2 is a root of x^2 - x - 3
        let f = UniPoly::from_i64s(&[-3, -1, 1]);
        let alpha =
            crate::algebraic::make_algebraic(&f, &crate::poly::RootInterval::from_ints(2, 3))
                .unwrap();
        let x = FieldElem::generator_of(&alpha);
        let pt = FrickePoint::exact(x.clone(), x.clone(), x).unwrap();
        let mut m = BTreeMap::new();
        m.insert(alloc::vec![1], f);
        assert!(theorem_a_check(&[w("a")], &m, &pt, &cfg, 500)
            .unwrap()
            .satisfied());

        let sol = solve_paper_system(&q(1, 100000)).unwrap();
        let mut m = BTreeMap::new();
        m.insert(alloc::vec![1], sol.quintic.clone());
        let r = theorem_a_check(&[w("a")], &m, &sol.point, &cfg, 500).unwrap();
        assert!(!r.satisfied());
        assert_eq!(r.checks[0].root, RootCheck::Exact(true));
        assert!(r.to_string().contains("NOT SATISFIED"));

        let err = theorem_a_check(&[w("a"), w("b")], &m, &sol.point, &cfg, 500).unwrap_err();
        assert_eq!(err, VarietyError::MissingSubset("{2}".into()));
    }

    #[test]
    fn identity_suite() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(42);
        let r = trace_identity_suite(&mut rng, 50, 8);
        assert!(r.passed());
        let r = trace_identity_suite(&mut rng, 1, 0);
        assert!(r.passed());
        let broken = VarietyPolynomial::parse_with_arity("X1*X2 - X3", 4).unwrap();
        let r = trace_identity_suite_with(&broken, &mut rng, 5, 6).unwrap();
        assert!(!r.passed());
        assert!(r.to_string().contains("counterexample"));
    }
}

//! Trace polynomials of words in `F(a, b)`.
//!
//! For every word `w` there is a unique integer polynomial `P_w(X, Y, Z)`
//! with `tr ρ(w) = P_w(tr ρ(a), tr ρ(b), tr ρ(ab))` for every representation
//! `ρ: F(a, b) → SL(2)`. [`TraceCalculator`] computes it by rewriting with
//!
//! * `tr(UV) = tr(U) tr(V) - tr(UV⁻¹)`,
//! * `tr(U⁻¹) = tr(U)`,
//! * `tr(UV) = tr(VU)`,
//!
//! from the base cases `tr(1) = 2`, `tr(a) = X`, `tr(b) = Y`, `tr(ab) = Z`.
//!
//! Each step works on the canonical conjugacy representative and strictly
//! decreases the measure `(length, min(#inverse letters of w, of w⁻¹))`
//! in lexicographic order:
//!
//! 1. a cyclic block `gg` (equal adjacent letters) gives
//!    `tr(g·gR) = tr(g) tr(gR) - tr(R)`, both strictly shorter;
//! 2. otherwise letters alternate between the generators. Pick whichever
//!    of `w`, `w⁻¹` has fewer inverse letters; if that count is positive,
//!    rotate so the word reads `P g⁻¹` and use
//!    `tr(P g⁻¹) = tr(P) tr(g) - tr(P g)`: `P` is shorter and `P g` has one
//!    fewer inverse letter at the same length;
//! 3. the remaining words are `(ab)^k`, `k ≥ 2`, split as `U = ab`,
//!    `V = (ab)^(k-1)`: `tr(U V⁻¹) = tr((ab)^(k-2))` is shorter.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};
use core::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::interval::Interval;
use crate::textpoly::parse_terms;
use crate::words::{Generator, Word};

/// Exponents of `X^x Y^y Z^z`, ordered graded-lexicographically.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    pub x: u32,
    pub y: u32,
    pub z: u32,
}

impl Monomial {
    pub const fn new(x: u32, y: u32, z: u32) -> Self {
        Self { x, y, z }
    }

    pub fn degree(&self) -> u32 {
        self.x + self.y + self.z
    }

    fn times(self, o: Monomial) -> Monomial {
        Monomial::new(self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, o: &Self) -> Ordering {
        (self.degree(), self.x, self.y, self.z).cmp(&(o.degree(), o.x, o.y, o.z))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("malformed trace polynomial: {0}")]
pub struct TracePolyParseError(pub String);

/// Sparse integer polynomial in `X = tr a`, `Y = tr b`, `Z = tr ab`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct TracePoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl TracePoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: BigInt) -> Self {
        Self::term(c, Monomial::default())
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(c.into())
    }

    pub fn term(c: BigInt, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Self { terms }
    }

    pub fn x() -> Self {
        Self::term(BigInt::one(), Monomial::new(1, 0, 0))
    }

    pub fn y() -> Self {
        Self::term(BigInt::one(), Monomial::new(0, 1, 0))
    }

    pub fn z() -> Self {
        Self::term(BigInt::one(), Monomial::new(0, 0, 1))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn scale(&self, k: &BigInt) -> TracePoly {
        if k.is_zero() {
            return TracePoly::zero();
        }
        TracePoly {
            terms: self.terms.iter().map(|(m, c)| (*m, c * k)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> TracePoly {
        let mut out = TracePoly::from_int(1);
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    /// Nonnegative gcd of the coefficients.
    pub fn content(&self) -> BigInt {
        use num_integer::Integer;
        self.terms.values().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// `(content, self / content)`; zero gives `(0, 0)`.
    pub fn primitive_part(&self) -> (BigInt, TracePoly) {
        let g = self.content();
        if g.is_zero() {
            return (g, TracePoly::zero());
        }
        let terms = self.terms.iter().map(|(m, c)| (*m, c / &g)).collect();
        (g, TracePoly { terms })
    }

    /// Evaluates with caller-supplied ring operations.
    pub fn evaluate_by<T: Clone>(
        &self,
        vars: [&T; 3],
        lift: impl Fn(&BigInt) -> T,
        add: impl Fn(&T, &T) -> T,
        mul: impl Fn(&T, &T) -> T,
    ) -> T {
        let mut powers: [Vec<T>; 3] = [Vec::new(), Vec::new(), Vec::new()];
        let one = lift(&BigInt::one());
        let power = |powers: &mut [Vec<T>; 3], v: usize, e: u32| -> T {
            let table = &mut powers[v];
            if table.is_empty() {
                table.push(one.clone());
            }
            while table.len() <= e as usize {
                let next = mul(table.last().expect("nonempty"), vars[v]);
                table.push(next);
            }
            table[e as usize].clone()
        };
        let mut acc = lift(&BigInt::zero());
        for (m, c) in &self.terms {
            let mut t = lift(c);
            for (v, e) in [(0, m.x), (1, m.y), (2, m.z)] {
                if e > 0 {
                    t = mul(&t, &power(&mut powers, v, e));
                }
            }
            acc = add(&acc, &t);
        }
        acc
    }

    pub fn evaluate_rational(
        &self,
        x: &BigRational,
        y: &BigRational,
        z: &BigRational,
    ) -> BigRational {
        self.evaluate_by(
            [x, y, z],
            |c| BigRational::from_integer(c.clone()),
            |a, b| a + b,
            |a, b| a * b,
        )
    }

    pub fn evaluate_f64(&self, x: f64, y: f64, z: f64) -> f64 {
        self.evaluate_by(
            [&x, &y, &z],
            |c| c.to_f64().unwrap_or(f64::NAN),
            |a, b| a + b,
            |a, b| a * b,
        )
    }

    /// Interval enclosure; intermediate endpoints are rounded outward to
    /// the grid `2^-bits`.
    pub fn evaluate_interval(
        &self,
        x: &Interval,
        y: &Interval,
        z: &Interval,
        bits: u32,
    ) -> Interval {
        self.evaluate_by(
            [x, y, z],
            |c| Interval::point(BigRational::from_integer(c.clone())),
            |a, b| (a + b).round(bits),
            |a, b| (a * b).round(bits),
        )
    }

    pub fn parse(text: &str) -> Result<TracePoly, TracePolyParseError> {
        let raw = parse_terms(text).map_err(TracePolyParseError)?;
        let mut out = TracePoly::zero();
        for (coeff, vars) in raw {
            if !coeff.is_integer() {
                return Err(TracePolyParseError(alloc::format!(
                    "coefficient {coeff} is not an integer"
                )));
            }
            let mut m = Monomial::default();
            for (name, e) in vars {
                match name.as_str() {
                    "X" => m.x += e,
                    "Y" => m.y += e,
                    "Z" => m.z += e,
                    other => {
                        return Err(TracePolyParseError(alloc::format!(
                            "unknown variable {other:?} (expected X, Y or Z)"
                        )))
                    }
                }
            }
            out.add_term(m, coeff.to_integer());
        }
        Ok(out)
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, m: &Monomial) -> fmt::Result {
    let mut first = true;
    for (name, e) in [("X", m.x), ("Y", m.y), ("Z", m.z)] {
        if e == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        f.write_str(name)?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    Ok(())
}

impl fmt::Display for TracePoly {
    /// Descending graded-lex order, e.g. `-X*Y*Z + X^2 + Y^2 + Z^2 - 2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            let constant = m.degree() == 0;
            if constant {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                write_monomial(f, m)?;
            }
        }
        Ok(())
    }
}

impl FromStr for TracePoly {
    type Err = TracePolyParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TracePoly::parse(s)
    }
}

impl Add for &TracePoly {
    type Output = TracePoly;
    fn add(self, rhs: &TracePoly) -> TracePoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Sub for &TracePoly {
    type Output = TracePoly;
    fn sub(self, rhs: &TracePoly) -> TracePoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c);
        }
        out
    }
}

impl Mul for &TracePoly {
    type Output = TracePoly;
    fn mul(self, rhs: &TracePoly) -> TracePoly {
        let mut out = TracePoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.times(*mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &TracePoly {
    type Output = TracePoly;
    fn neg(self) -> TracePoly {
        self.scale(&BigInt::from(-1))
    }
}

/// Arithmetic selector for [`tp_arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TpArith {
    Add,
    Sub,
    Mul,
}

pub fn tp_arith(p: &TracePoly, q: &TracePoly, kind: TpArith) -> TracePoly {
    match kind {
        TpArith::Add => p + q,
        TpArith::Sub => p - q,
        TpArith::Mul => p * q,
    }
}

/// Key shared by a word, its conjugates and its inverse.
pub fn trace_key(w: &Word) -> Word {
    let a = w.cyclic_reduce();
    let b = w.invert().cyclic_reduce();
    if b < a {
        b
    } else {
        a
    }
}

fn inverse_letters(w: &Word) -> usize {
    w.letters().iter().filter(|l| l.inverse).count()
}

/// Memoized trace-polynomial evaluator.
///
/// The memo table is owned by the calculator; share one per thread.
#[derive(Debug, Default, Clone)]
pub struct TraceCalculator {
    memo: BTreeMap<Word, TracePoly>,
}

impl TraceCalculator {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn cache_len(&self) -> usize {
        self.memo.len()
    }

    pub fn clear(&mut self) {
        self.memo.clear();
    }

    pub fn trace(&mut self, w: &Word) -> TracePoly {
        let key = trace_key(w);
        if let Some(p) = self.memo.get(&key) {
            return p.clone();
        }
        let p = self.reduce(&key);
        self.memo.insert(key, p.clone());
        p
    }

    /// `w` is cyclically reduced here.
    fn reduce(&mut self, w: &Word) -> TracePoly {
        let n = w.len();
        let letters = w.letters();
        match n {
            0 => return TracePoly::from_int(2),
            1 => {
                return match letters[0].generator {
                    Generator::A => TracePoly::x(),
                    Generator::B => TracePoly::y(),
                }
            }
            _ => {}
        }

        // 1. cyclic block gg
        if let Some(i) = (0..n).find(|&i| letters[i] == letters[(i + 1) % n]) {
            let r = w.rotate(i);
            let g = r.slice(0, 1);
            let g_rest = r.slice(1, n);
            let rest = r.slice(2, n);
            let tg = self.trace(&g);
            let tgr = self.trace(&g_rest);
            let tr = self.trace(&rest);
            return &(&tg * &tgr) - &tr;
        }

        // 2. alternating, with inverse letters on the cheaper side
        let inv = w.invert();
        let w = if inverse_letters(&inv) < inverse_letters(w) {
            inv.cyclically_reduced_core()
        } else {
            w.clone()
        };
        let letters = w.letters();
        if let Some(j) = letters.iter().position(|l| l.inverse) {
            let r = w.rotate(j + 1);
            let p = r.slice(0, n - 1);
            let g_inv = r.letters()[n - 1];
            let g = Word::from_letters([g_inv.inv()]);
            let pg = p.concat(&g);
            let tp = self.trace(&p);
            let tg = self.trace(&g);
            let tpg = self.trace(&pg);
            return &(&tp * &tg) - &tpg;
        }

        // 3. (ab)^k
        if n == 2 {
            return TracePoly::z();
        }
        let u = w.slice(0, 2);
        let v = w.slice(2, n);
        let uv_inv = u.concat(&v.invert());
        let tu = self.trace(&u);
        let tv = self.trace(&v);
        let tuv = self.trace(&uv_inv);
        &(&tu * &tv) - &tuv
    }
}

/// Trace polynomial of `w` with a fresh memo table.
pub fn trace_polynomial(w: &Word) -> TracePoly {
    TraceCalculator::new().trace(w)
}

/// `X² + Y² + Z² - XYZ`, whose vanishing is the Markov relation.
pub fn markov_polynomial() -> TracePoly {
    let x = TracePoly::x();
    let y = TracePoly::y();
    let z = TracePoly::z();
    &(&(&(&x * &x) + &(&y * &y)) + &(&z * &z)) - &(&(&x * &y) * &z)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::parse_word;
    use alloc::string::ToString;

    fn tr(s: &str) -> TracePoly {
        trace_polynomial(&parse_word(s).unwrap())
    }

    fn tp(s: &str) -> TracePoly {
        TracePoly::parse(s).unwrap()
    }

    #[test]
    fn arith_examples() {
        assert!(tp_arith(&TracePoly::x(), &-&TracePoly::x(), TpArith::Add).is_zero());
        assert_eq!(
            tp_arith(&TracePoly::x(), &TracePoly::y(), TpArith::Mul).to_string(),
            "X*Y"
        );
        let p = tp("X^2*Z - 3*Y + 1");
        assert!(tp_arith(&p, &p, TpArith::Sub).is_zero());
    }

    #[test]
    fn trace_examples() {
        assert_eq!(tr("aa").to_string(), "X^2 - 2");
        assert_eq!(tr("aab").to_string(), "X*Z - Y");
        assert_eq!(tr("1").to_string(), "2");
        assert_eq!(tr("abAB"), tp("X^2 + Y^2 + Z^2 - X*Y*Z - 2"));
        assert_eq!(tr("abAB").to_string(), "-X*Y*Z + X^2 + Y^2 + Z^2 - 2");
    }

    #[test]
    fn small_traces() {
        assert_eq!(tr("a"), TracePoly::x());
        assert_eq!(tr("B"), TracePoly::y());
        assert_eq!(tr("ba"), TracePoly::z());
        assert_eq!(tr("aB"), tp("X*Y - Z"));
        assert_eq!(tr("aaa"), tp("X^3 - 3*X"));
        assert_eq!(tr("abab"), tp("Z^2 - 2"));
        assert_eq!(tr("abb"), tp("Y*Z - X"));
    }

    #[test]
    fn display_parse_roundtrip() {
        for s in ["abAB", "aabAbb", "aBaBab", "bbbaaB"] {
            let p = tr(s);
            assert_eq!(tp(&p.to_string()), p, "{s}");
        }
        assert!(TracePoly::parse("X*W").is_err());
        assert!(TracePoly::parse("1/2*X").is_err());
        assert_eq!(tp("Z*X - Y").to_string(), "X*Z - Y");
    }

    #[test]
    fn markov_and_commutator() {
        assert_eq!(&tr("abAB") + &TracePoly::from_int(2), markov_polynomial());
    }

    #[test]
    fn evaluation_paths_agree() {
        let p = tr("aabAbbaB");
        let (x, y, z) = (
            BigRational::from_integer(3.into()),
            BigRational::new(7.into(), 2.into()),
            BigRational::from_integer((-2).into()),
        );
        let exact = p.evaluate_rational(&x, &y, &z);
        let iv = p.evaluate_interval(
            &Interval::point(x.clone()),
            &Interval::point(y.clone()),
            &Interval::point(z.clone()),
            64,
        );
        assert!(iv.contains(&exact));
        let f = p.evaluate_f64(3.0, 3.5, -2.0);
        assert!((f - num_traits::ToPrimitive::to_f64(&exact).unwrap()).abs() < 1e-6);
    }

    #[test]
    fn memo_does_not_change_results() {
        let words = ["aabAbbaB", "abAB", "bAbaBBa", "aaaBBBab"];
        let mut warm = TraceCalculator::new();
        for w in words {
            warm.trace(&parse_word(w).unwrap());
        }
        for w in words {
            assert_eq!(warm.trace(&parse_word(w).unwrap()), tr(w));
        }
        assert!(warm.cache_len() > 0);
    }
}

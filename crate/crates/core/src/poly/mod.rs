//! Exact univariate polynomials over the integers.
//!
//! [`UniPoly`] stores coefficients in ascending order (constant term first)
//! and is always normalized: the last stored coefficient is nonzero and the
//! zero polynomial is the empty vector. No floating point is used anywhere in
//! this module.

mod gcd;
mod modp;
mod ratpoly;
mod sturm;

pub use gcd::{discriminant, gcd, resultant, square_free_part};
pub use modp::{
    factor_degrees_mod_p, factor_mod_p, irreducible_over_q, is_prime, primes_up_to, rational_roots,
    FpPoly, Irreducibility,
};
pub use ratpoly::RatPoly;
pub use sturm::{
    isolate_real_roots, refine_root, sign_at, sturm_count, Bound, RootInterval, SturmChain,
};

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("gcd of two zero polynomials is undefined")]
    BothZero,
    #[error("operation requires a nonzero polynomial")]
    ZeroPolynomial,
    #[error("operation requires a polynomial of degree at least {0}")]
    DegreeTooSmall(usize),
    #[error("endpoint {0} is a root; perturb the endpoint by a small rational and retry")]
    EndpointIsRoot(BigRational),
    #[error("empty interval: lower endpoint must be below upper endpoint")]
    EmptyInterval,
    #[error("interval does not isolate a simple root (no sign change at the endpoints)")]
    NotIsolating,
    #[error("prime {0} divides the leading coefficient")]
    PrimeDividesLeading(u64),
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("malformed polynomial text: {0}")]
    Parse(String),
}

/// Dense univariate polynomial with unbounded integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<BigInt>,
}

impl UniPoly {
    /// Builds a polynomial from ascending coefficients, trimming trailing zeros.
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(alloc::vec![c])
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Self::from_i64s(&[0, 1])
    }

    /// `c * x^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut v = alloc::vec![BigInt::zero(); k + 1];
        v[k] = c;
        Self::new(v)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Coefficient of `x^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// Leading coefficient; zero for the zero polynomial.
    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    /// Nonnegative gcd of the coefficients.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive_part(&self) -> UniPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = self.content();
        if self.leading().is_negative() {
            c = -c;
        }
        self.div_scalar_exact(&c)
    }

    pub fn is_primitive(&self) -> bool {
        self.content().is_one()
    }

    pub fn scale(&self, k: &BigInt) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Divides every coefficient by `k`, which must divide all of them.
    pub fn div_scalar_exact(&self, k: &BigInt) -> UniPoly {
        debug_assert!(self.coeffs.iter().all(|c| c.is_multiple_of(k)));
        UniPoly::new(self.coeffs.iter().map(|c| c / k).collect())
    }

    /// Multiplication by `x^k`.
    pub fn shift(&self, k: usize) -> UniPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut v = alloc::vec![BigInt::zero(); k];
        v.extend(self.coeffs.iter().cloned());
        UniPoly::new(v)
    }

    pub fn derivative(&self) -> UniPoly {
        UniPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// Horner evaluation at a rational point.
    pub fn evaluate(&self, t: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + BigRational::from_integer(c.clone());
        }
        acc
    }

    pub fn evaluate_int(&self, t: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + c;
        }
        acc
    }

    /// `p(x)` composed with `q(x)`.
    pub fn compose(&self, q: &UniPoly) -> UniPoly {
        let mut acc = UniPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * q) + &UniPoly::constant(c.clone());
        }
        acc
    }

    /// `p(-x)`.
    pub fn reflect(&self) -> UniPoly {
        UniPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    /// Reversed coefficient list, `x^d p(1/x)`.
    pub fn reciprocal(&self) -> UniPoly {
        UniPoly::new(self.coeffs.iter().rev().cloned().collect())
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_one()
    }

    /// Pseudo-remainder `lc(q)^(deg p - deg q + 1) * p mod q`.
    ///
    /// Panics if `q` is zero.
    pub fn pseudo_rem(&self, q: &UniPoly) -> UniPoly {
        let dq = q.degree().expect("pseudo_rem by zero polynomial");
        let Some(dp) = self.degree() else {
            return UniPoly::zero();
        };
        if dp < dq {
            return self.clone();
        }
        let lc = q.leading();
        let mut r = self.coeffs.clone();
        let mut top = dp;
        loop {
            // r <- lc*r - r[top] * x^(top-dq) * q
            let lead = r[top].clone();
            for c in r.iter_mut() {
                *c *= &lc;
            }
            if !lead.is_zero() {
                for (i, qc) in q.coeffs.iter().enumerate() {
                    r[top - dq + i] -= &lead * qc;
                }
            }
            debug_assert!(r[top].is_zero());
            if top == dq {
                break;
            }
            top -= 1;
        }
        r.truncate(dq);
        UniPoly::new(r)
    }

    /// Exact division when `q` divides `self` over the integers.
    ///
    /// Returns `None` if the division leaves a remainder or a non-integral
    /// quotient.
    pub fn div_exact(&self, q: &UniPoly) -> Option<UniPoly> {
        let dq = q.degree()?;
        let Some(dp) = self.degree() else {
            return Some(UniPoly::zero());
        };
        if dp < dq {
            return None;
        }
        let lc = q.leading();
        let mut r = self.coeffs.clone();
        let mut quot = alloc::vec![BigInt::zero(); dp - dq + 1];
        for k in (0..=dp - dq).rev() {
            let (c, rem) = r[k + dq].div_rem(&lc);
            if !rem.is_zero() {
                return None;
            }
            if !c.is_zero() {
                for (i, qc) in q.coeffs.iter().enumerate() {
                    r[k + i] -= &c * qc;
                }
            }
            quot[k] = c;
        }
        if r.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(UniPoly::new(quot))
    }

    pub fn to_ratpoly(&self) -> RatPoly {
        RatPoly::new(
            self.coeffs
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        )
    }

    /// Reads the `poly: c0 c1 ... cn` text format.
    pub fn parse(text: &str) -> Result<UniPoly, PolyError> {
        let body = text
            .trim()
            .strip_prefix("poly:")
            .ok_or_else(|| PolyError::Parse("expected prefix `poly:`".into()))?;
        let mut coeffs = Vec::new();
        for (i, tok) in body.split_whitespace().enumerate() {
            let c: BigInt = tok.parse().map_err(|_| {
                PolyError::Parse(alloc::format!(
                    "coefficient {i} ({tok:?}) is not a decimal integer"
                ))
            })?;
            coeffs.push(c);
        }
        if coeffs.is_empty() {
            return Err(PolyError::Parse("no coefficients".into()));
        }
        Ok(UniPoly::new(coeffs))
    }

    /// Human-readable form, descending powers of `var`.
    pub fn pretty(&self, var: &str) -> String {
        use core::fmt::Write;
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let show_coeff = i == 0 || !mag.is_one();
            if show_coeff {
                let _ = write!(out, "{mag}");
            }
            if i > 0 {
                if show_coeff {
                    out.push('*');
                }
                out.push_str(var);
                if i > 1 {
                    let _ = write!(out, "^{i}");
                }
            }
        }
        out
    }
}

impl fmt::Display for UniPoly {
    /// `poly: c0 c1 ... cn`; the zero polynomial prints as `poly: 0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("poly:")?;
        if self.coeffs.is_empty() {
            return f.write_str(" 0");
        }
        for c in &self.coeffs {
            write!(f, " {c}")?;
        }
        Ok(())
    }
}

impl FromStr for UniPoly {
    type Err = PolyError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        UniPoly::parse(s)
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = alloc::vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for UniPoly {
            type Output = UniPoly;
            fn $m(self, rhs: UniPoly) -> UniPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        -&self
    }
}

/// Arithmetic selector used by the command-line front end.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithKind {
    Add,
    Sub,
    Mul,
}

pub fn arith(p: &UniPoly, q: &UniPoly, kind: ArithKind) -> UniPoly {
    match kind {
        ArithKind::Add => p + q,
        ArithKind::Sub => p - q,
        ArithKind::Mul => p * q,
    }
}

/// The quintic obtained by eliminating the defining marked length pattern
/// from the Markov relation, as ascending coefficients.
pub const PATTERN_QUINTIC: [i64; 6] = [-4, 4, 3, -4, -2, 1];

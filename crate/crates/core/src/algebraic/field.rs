use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{AlgebraicError, AlgebraicReal};
use crate::interval::{pow2, Interval};
use crate::poly::{gcd, Bound, RatPoly, SturmChain};

/// An element `r(α)` of `Q(α)`, with `r` reduced modulo the defining
/// polynomial of `α`. Without a generator the element is rational.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldElem {
    generator: Option<AlgebraicReal>,
    value: RatPoly,
}

fn horner_interval(r: &RatPoly, t: &Interval, bits: u32) -> Interval {
    let mut acc = Interval::point(BigRational::zero());
    for c in r.coeffs().iter().rev() {
        acc = (&(&acc * t) + &Interval::point(c.clone())).round(bits);
    }
    acc
}

impl FieldElem {
    pub fn rational(r: BigRational) -> Self {
        FieldElem {
            generator: None,
            value: RatPoly::constant(r),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::rational(BigRational::from_integer(n.into()))
    }

    /// The generator `α` itself.
    pub fn generator_of(alpha: &AlgebraicReal) -> Self {
        Self::from_poly(alpha, RatPoly::x())
    }

    /// `r(α)`.
    pub fn from_poly(alpha: &AlgebraicReal, r: RatPoly) -> Self {
        let mut e = FieldElem {
            generator: Some(alpha.clone()),
            value: r,
        };
        e.reduce();
        e
    }

    pub fn generator(&self) -> Option<&AlgebraicReal> {
        self.generator.as_ref()
    }

    pub fn value(&self) -> &RatPoly {
        &self.value
    }

    fn reduce(&mut self) {
        if let Some(g) = &self.generator {
            if g.degree() >= 1 {
                self.value = self.value.rem(&g.defining().to_ratpoly());
            }
        }
        if self.value.degree().unwrap_or(0) == 0 {
            self.generator = None;
        }
    }

    /// Rational value, when the representation is constant.
    pub fn as_rational(&self) -> Option<BigRational> {
        self.value.as_constant()
    }

    /// Whether both sides may be combined, and over which generator.
    pub fn compatible(&self, other: &FieldElem) -> Result<Option<AlgebraicReal>, AlgebraicError> {
        match (&self.generator, &other.generator) {
            (None, None) => Ok(None),
            (Some(g), None) | (None, Some(g)) => Ok(Some(g.clone())),
            (Some(g), Some(h)) => {
                if g == h || (g.defining() == h.defining() && g.same_number(h)) {
                    Ok(Some(g.clone()))
                } else {
                    Err(AlgebraicError::IncompatibleGenerators)
                }
            }
        }
    }

    fn combine(&self, other: &FieldElem, op: impl Fn(&RatPoly, &RatPoly) -> RatPoly) -> FieldElem {
        let generator = self.generator.clone().or_else(|| other.generator.clone());
        let mut e = FieldElem {
            generator,
            value: op(&self.value, &other.value),
        };
        e.reduce();
        e
    }

    /// Sum without the generator check; callers guarantee compatibility.
    pub(crate) fn add_unchecked(&self, other: &FieldElem) -> FieldElem {
        self.combine(other, |a, b| a + b)
    }

    pub(crate) fn mul_unchecked(&self, other: &FieldElem) -> FieldElem {
        self.combine(other, |a, b| a * b)
    }

    pub fn add(&self, other: &FieldElem) -> Result<FieldElem, AlgebraicError> {
        self.compatible(other)?;
        Ok(self.add_unchecked(other))
    }

    pub fn sub(&self, other: &FieldElem) -> Result<FieldElem, AlgebraicError> {
        self.compatible(other)?;
        Ok(self.combine(other, |a, b| a - b))
    }

    pub fn mul(&self, other: &FieldElem) -> Result<FieldElem, AlgebraicError> {
        self.compatible(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub fn neg(&self) -> FieldElem {
        FieldElem {
            generator: self.generator.clone(),
            value: -&self.value,
        }
    }

    pub fn scale(&self, k: &BigRational) -> FieldElem {
        let mut e = FieldElem {
            generator: self.generator.clone(),
            value: self.value.scale(k),
        };
        e.reduce();
        e
    }

    /// Multiplicative inverse; fails exactly when the element is zero.
    pub fn inv(&self) -> Result<FieldElem, AlgebraicError> {
        let Some(alpha) = &self.generator else {
            let c = self.value.as_constant().unwrap_or_default();
            if c.is_zero() {
                return Err(AlgebraicError::DivisionByZero);
            }
            return Ok(FieldElem::rational(BigRational::one() / c));
        };
        if self.is_zero() {
            return Err(AlgebraicError::DivisionByZero);
        }
        let f = alpha.defining().to_ratpoly();
        // when gcd(r, f) is nontrivial, α is a root of the cofactor f / gcd
        let (g, _) = self.value.gcd_with_cofactor(&f);
        let modulus = if g.degree() == Some(0) {
            f
        } else {
            f.div_rem(&g).0
        };
        let inv = self
            .value
            .inverse_mod(&modulus)
            .ok_or(AlgebraicError::DivisionByZero)?;
        Ok(FieldElem::from_poly(alpha, inv))
    }

    pub fn div(&self, other: &FieldElem) -> Result<FieldElem, AlgebraicError> {
        self.compatible(other)?;
        Ok(self.mul_unchecked(&other.inv()?))
    }

    /// Exact zero test through `gcd(r, f)`.
    pub fn is_zero(&self) -> bool {
        if self.value.is_zero() {
            return true;
        }
        let Some(alpha) = &self.generator else {
            return false;
        };
        let (num, _) = self.value.to_integer_poly();
        let g = match gcd(&num, alpha.defining()) {
            Ok(g) => g,
            Err(_) => return false,
        };
        if g.is_constant() {
            return false;
        }
        let iso = alpha.isolating();
        SturmChain::new(&g)
            .count(
                &Bound::Finite(iso.lo.clone()),
                &Bound::Finite(iso.hi.clone()),
            )
            .map(|n| n == 1)
            .unwrap_or(false)
    }

    /// Exact sign.
    pub fn sign(&self) -> Ordering {
        if let Some(c) = self.as_rational() {
            return c.cmp(&BigRational::zero());
        }
        if self.is_zero() {
            return Ordering::Equal;
        }
        let mut bits = 32;
        loop {
            if let Some(s) = self.enclosure(bits).sign() {
                return s;
            }
            bits *= 2;
        }
    }

    pub fn cmp_rational(&self, r: &BigRational) -> Ordering {
        self.combine(&FieldElem::rational(r.clone()), |a, b| a - b)
            .sign()
    }

    /// Closed interval of width at most `2^-bits` containing the value.
    pub fn enclosure(&self, bits: u32) -> Interval {
        let Some(alpha) = &self.generator else {
            return Interval::point(self.value.as_constant().unwrap_or_default());
        };
        let target = pow2(-(bits as i64));
        let mut k = bits + 8;
        loop {
            let t = alpha.enclosure(k);
            let e = horner_interval(&self.value, &t, k + 8);
            if e.width() <= target {
                return e;
            }
            k += (k / 2).max(8);
        }
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_rational() {
            Some(c) => write!(f, "{c}"),
            None => write!(f, "{}", self.enclosure(40)),
        }
    }
}

/// A certified real: exact in `Q(α)`, or a rigorous enclosure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Real {
    Exact(FieldElem),
    Enclosure(Interval),
}

impl Real {
    pub fn rational(r: BigRational) -> Self {
        Real::Exact(FieldElem::rational(r))
    }

    pub fn from_int(n: i64) -> Self {
        Real::Exact(FieldElem::from_int(n))
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Real::Exact(_))
    }

    pub fn as_exact(&self) -> Option<&FieldElem> {
        match self {
            Real::Exact(e) => Some(e),
            Real::Enclosure(_) => None,
        }
    }

    /// Interval containing the value; exact values are enclosed to width
    /// at most `2^-bits`.
    pub fn enclosure(&self, bits: u32) -> Interval {
        match self {
            Real::Exact(e) => e.enclosure(bits),
            Real::Enclosure(i) => i.clone(),
        }
    }

    fn binary(
        &self,
        other: &Real,
        bits: u32,
        exact: impl Fn(&FieldElem, &FieldElem) -> Result<FieldElem, AlgebraicError>,
        approx: impl Fn(&Interval, &Interval) -> Interval,
    ) -> Result<Real, AlgebraicError> {
        match (self, other) {
            (Real::Exact(a), Real::Exact(b)) => exact(a, b).map(Real::Exact),
            _ => Ok(Real::Enclosure(
                approx(&self.enclosure(bits), &other.enclosure(bits)).round(bits),
            )),
        }
    }

    pub fn add(&self, other: &Real, bits: u32) -> Result<Real, AlgebraicError> {
        self.binary(other, bits, FieldElem::add, |a, b| a + b)
    }

    pub fn sub(&self, other: &Real, bits: u32) -> Result<Real, AlgebraicError> {
        self.binary(other, bits, FieldElem::sub, |a, b| a - b)
    }

    pub fn mul(&self, other: &Real, bits: u32) -> Result<Real, AlgebraicError> {
        self.binary(other, bits, FieldElem::mul, |a, b| a * b)
    }

    /// Certified comparison with a rational; `None` when an enclosure
    /// straddles it.
    pub fn cmp_rational(&self, r: &BigRational) -> Option<Ordering> {
        match self {
            Real::Exact(e) => Some(e.cmp_rational(r)),
            Real::Enclosure(i) => i.cmp_rational(r),
        }
    }

    pub fn sign(&self) -> Option<Ordering> {
        self.cmp_rational(&BigRational::zero())
    }
}

impl From<FieldElem> for Real {
    fn from(e: FieldElem) -> Self {
        Real::Exact(e)
    }
}

impl From<Interval> for Real {
    fn from(i: Interval) -> Self {
        Real::Enclosure(i)
    }
}

impl From<BigInt> for Real {
    fn from(n: BigInt) -> Self {
        Real::rational(BigRational::from_integer(n))
    }
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Real::Exact(e) => write!(f, "{e}"),
            Real::Enclosure(i) => write!(f, "{i}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebraic::make_algebraic;
    use crate::poly::{RootInterval, UniPoly, PATTERN_QUINTIC};

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn sqrt2() -> AlgebraicReal {
        make_algebraic(
            &UniPoly::from_i64s(&[-2, 0, 1]),
            &RootInterval::from_ints(1, 2),
        )
        .unwrap()
    }

    #[test]
    fn arithmetic_in_quadratic_field() {
        let s = FieldElem::generator_of(&sqrt2());
        let two = s.mul(&s).unwrap();
        assert_eq!(two.as_rational(), Some(q(2, 1)));
        let one_plus = s.add(&FieldElem::from_int(1)).unwrap();
        let inv = one_plus.inv().unwrap();
        // 1/(1+√2) = √2 - 1
        let expected = s.sub(&FieldElem::from_int(1)).unwrap();
        assert!(inv.sub(&expected).unwrap().is_zero());
        assert_eq!(s.cmp_rational(&q(7, 5)), Ordering::Greater);
        assert_eq!(s.neg().sign(), Ordering::Less);
    }

    #[test]
    fn zero_detection_with_reducible_defining_polynomial() {
        // α = √2 as a root of (x^2 - 2)(x - 5)
        let f = UniPoly::from_i64s(&[10, -2, -5, 1]);
        let alpha = make_algebraic(&f, &RootInterval::from_ints(1, 2)).unwrap();
        let r = FieldElem::from_poly(
            &alpha,
            RatPoly::new(alloc::vec![q(-2, 1), q(0, 1), q(1, 1)]),
        );
        assert!(r.is_zero());
        let nz = FieldElem::from_poly(&alpha, RatPoly::new(alloc::vec![q(-5, 1), q(1, 1)]));
        assert!(!nz.is_zero());
        let inv = nz.inv().unwrap();
        assert!(nz
            .mul(&inv)
            .unwrap()
            .sub(&FieldElem::from_int(1))
            .unwrap()
            .is_zero());
    }

    #[test]
    fn quintic_field_enclosures() {
        let x0 = make_algebraic(
            &UniPoly::from_i64s(&PATTERN_QUINTIC),
            &RootInterval::from_ints(2, 3),
        )
        .unwrap();
        let x = FieldElem::generator_of(&x0);
        let e = x.mul(&x).unwrap().enclosure(100);
        assert!(e.width() <= pow2(-100));
        assert_eq!(e.cmp_rational(&q(848, 100)), Some(Ordering::Greater));
        assert_eq!(e.cmp_rational(&q(849, 100)), Some(Ordering::Less));
        let other = FieldElem::generator_of(&sqrt2());
        assert_eq!(x.add(&other), Err(AlgebraicError::IncompatibleGenerators));
    }

    #[test]
    fn real_mixing_falls_back_to_intervals() {
        let a = Real::from_int(3);
        let b = Real::Enclosure(Interval::new(q(1, 2), q(3, 4)));
        let c = a.mul(&b, 64).unwrap();
        assert!(!c.is_exact());
        assert_eq!(c.cmp_rational(&q(1, 1)), Some(Ordering::Greater));
        assert_eq!(c.cmp_rational(&q(2, 1)), None);
        let d = a.add(&Real::from_int(-3), 64).unwrap();
        assert_eq!(d.sign(), Some(Ordering::Equal));
    }
}

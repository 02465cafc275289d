//! Certified real algebraic numbers and number-theoretic verdicts.
//!
//! An [`AlgebraicReal`] is a square-free integer polynomial together with a
//! rational open interval holding exactly one of its roots. Everything else
//! in this module is built on exact Sturm counts over such pairs.

mod field;
mod galois;
mod salem;

use alloc::boxed::Box;
use alloc::string::String;
use core::cmp::Ordering;
use core::fmt;

use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

use crate::interval::{decimal_round, pow2, Interval};
use crate::poly::{
    gcd, refine_root, sign_at, square_free_part, Bound, PolyError, RootInterval, SturmChain,
    UniPoly,
};

pub use field::{FieldElem, Real};
pub use galois::{
    galois_cycle_types, non_arithmeticity_report, ArithmeticityReport, ArithmeticityVerdict,
    GaloisCertificate, GaloisConclusion,
};
pub use salem::{
    inverse_salem_transform, is_geometric_salem, is_geometric_salem_with, is_salem,
    salem_transform, NotSalemReason, RootEvidence, SalemStatus, SalemVerdict,
};

/// Prime bound used by the verdict functions when none is given.
pub const DEFAULT_PRIME_BOUND: u64 = 500;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraicError {
    #[error("expected exactly one root in {interval}, found {count}")]
    Isolation {
        interval: Box<RootInterval>,
        count: usize,
    },
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("operands are defined over different algebraic generators")]
    IncompatibleGenerators,
    #[error("division by zero")]
    DivisionByZero,
    #[error("domain error: {0}")]
    Domain(String),
}

/// A real root of an integer polynomial, pinned by an isolating interval.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraicReal {
    defining: UniPoly,
    isolating: RootInterval,
}

/// Builds the root of `p` inside `hint`.
///
/// Fails with [`AlgebraicError::Isolation`] unless `hint` holds exactly one
/// distinct root.
pub fn make_algebraic(p: &UniPoly, hint: &RootInterval) -> Result<AlgebraicReal, AlgebraicError> {
    if p.is_zero() {
        return Err(PolyError::ZeroPolynomial.into());
    }
    let sf = square_free_part(p)?;
    let count = SturmChain::new(&sf).count(
        &Bound::Finite(hint.lo.clone()),
        &Bound::Finite(hint.hi.clone()),
    )?;
    if count != 1 {
        return Err(AlgebraicError::Isolation {
            interval: Box::new(hint.clone()),
            count,
        });
    }
    Ok(AlgebraicReal {
        defining: sf,
        isolating: hint.clone(),
    })
}

impl AlgebraicReal {
    /// The rational `r` as the root of `den·x - num`.
    pub fn from_rational(r: &BigRational) -> Self {
        let defining = UniPoly::new(alloc::vec![-r.numer().clone(), r.denom().clone()]);
        let one = BigRational::one();
        AlgebraicReal {
            defining,
            isolating: RootInterval::new(r - &one, r + &one),
        }
    }

    pub fn defining(&self) -> &UniPoly {
        &self.defining
    }

    pub fn isolating(&self) -> &RootInterval {
        &self.isolating
    }

    pub fn degree(&self) -> usize {
        self.defining.degree().unwrap_or(0)
    }

    /// Narrows the isolating interval below width `eps`.
    pub fn refine(&self, eps: &BigRational) -> AlgebraicReal {
        if self.isolating.width() < *eps {
            return self.clone();
        }
        let isolating = refine_root(&self.defining, &self.isolating, eps)
            .expect("an isolating interval of a square-free polynomial has a sign change");
        AlgebraicReal {
            defining: self.defining.clone(),
            isolating,
        }
    }

    /// Closed enclosure of width at most `2^-bits`.
    pub fn enclosure(&self, bits: u32) -> Interval {
        let r = self.refine(&pow2(-(bits as i64)));
        Interval::new(r.isolating.lo, r.isolating.hi)
    }

    /// Exact comparison with a rational.
    pub fn cmp_rational(&self, r: &BigRational) -> Ordering {
        let iso = &self.isolating;
        if r <= &iso.lo {
            return Ordering::Greater;
        }
        if r >= &iso.hi {
            return Ordering::Less;
        }
        let s = sign_at(&self.defining, r);
        if s == 0 {
            Ordering::Equal
        } else if s == sign_at(&self.defining, &iso.lo) {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }

    pub fn sign(&self) -> Ordering {
        self.cmp_rational(&BigRational::zero())
    }

    /// The value as a rational, when it is one.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.degree() == 1 {
            let c = self.defining.coeffs();
            return Some(BigRational::new(-c[0].clone(), c[1].clone()));
        }
        crate::poly::rational_roots(&self.defining)
            .into_iter()
            .find(|r| self.isolating.contains(r))
    }

    /// Exact equality test.
    pub fn same_number(&self, other: &AlgebraicReal) -> bool {
        let lo = (&self.isolating.lo).max(&other.isolating.lo).clone();
        let hi = (&self.isolating.hi).min(&other.isolating.hi).clone();
        if lo >= hi {
            return false;
        }
        let common = if self.defining == other.defining {
            self.defining.clone()
        } else {
            match gcd(&self.defining, &other.defining) {
                Ok(g) if !g.is_constant() => g,
                _ => return false,
            }
        };
        // both isolated roots lie in (lo, hi) exactly when it holds a common root
        let count = |p: &UniPoly, iv: &RootInterval| {
            SturmChain::new(p)
                .count(&Bound::Finite(iv.lo.clone()), &Bound::Finite(iv.hi.clone()))
                .unwrap_or(0)
        };
        count(&common, &self.isolating) == 1
            && count(&common, &other.isolating) == 1
            && count(&common, &RootInterval::new(lo, hi)) == 1
    }

    pub fn to_f64(&self) -> f64 {
        self.enclosure(60).midpoint().to_f64().unwrap_or(f64::NAN)
    }

    /// Decimal digits correct up to rounding of the last place.
    pub fn to_decimal(&self, digits: usize) -> String {
        let bits = (digits as f64 * 3.33) as u32 + 8;
        decimal_round(&self.enclosure(bits).midpoint(), digits)
    }
}

impl fmt::Display for AlgebraicReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "root of {} in {} (~{})",
            self.defining.pretty("x"),
            self.isolating,
            self.to_decimal(10)
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::PATTERN_QUINTIC;
    use num_bigint::BigInt;

    fn p(c: &[i64]) -> UniPoly {
        UniPoly::from_i64s(c)
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn make_examples() {
        let sqrt2 = make_algebraic(&p(&[-2, 0, 1]), &RootInterval::from_ints(1, 2)).unwrap();
        assert_eq!(sqrt2.to_decimal(5), "1.41421");
        let x0 = make_algebraic(&p(&PATTERN_QUINTIC), &RootInterval::from_ints(2, 3)).unwrap();
        assert_eq!(x0.to_decimal(12), "2.913301193132");
        let err = make_algebraic(&p(&[-2, 0, 1]), &RootInterval::from_ints(-2, 2)).unwrap_err();
        assert!(matches!(err, AlgebraicError::Isolation { count: 2, .. }));
        assert!(make_algebraic(&p(&[-2, 0, 1]), &RootInterval::from_ints(0, 3)).is_ok());
    }

    #[test]
    fn square_free_part_is_stored() {
        let a = make_algebraic(&p(&[4, -4, 1]), &RootInterval::from_ints(1, 3)).unwrap();
        assert_eq!(a.defining(), &p(&[-2, 1]));
        assert_eq!(a.as_rational(), Some(q(2, 1)));
    }

    #[test]
    fn comparisons_are_exact() {
        let sqrt2 = make_algebraic(&p(&[-2, 0, 1]), &RootInterval::from_ints(0, 2)).unwrap();
        assert_eq!(sqrt2.cmp_rational(&q(141, 100)), Ordering::Greater);
        assert_eq!(sqrt2.cmp_rational(&q(142, 100)), Ordering::Less);
        let two = AlgebraicReal::from_rational(&q(2, 1));
        assert_eq!(two.cmp_rational(&q(2, 1)), Ordering::Equal);
        let other = make_algebraic(&p(&[-4, 0, 0, 0, 1]), &RootInterval::from_ints(1, 2)).unwrap();
        assert!(sqrt2.same_number(&other));
        assert!(!sqrt2.same_number(&two));
    }

    #[test]
    fn refinement_is_nested() {
        let x0 = make_algebraic(&p(&PATTERN_QUINTIC), &RootInterval::from_ints(2, 3)).unwrap();
        let (band_lo, band_hi) = (q(291330, 100000), q(291331, 100000));
        let mut prev = x0.isolating().clone();
        for k in 1..=12u32 {
            let eps = BigRational::new(1.into(), BigInt::from(10).pow(k));
            let r = x0.refine(&eps);
            assert!(r.isolating().is_within(&prev));
            assert!(r.isolating().width() < eps);
            assert!(r.isolating().lo < band_hi && r.isolating().hi > band_lo);
            assert_eq!(r.cmp_rational(&band_lo), Ordering::Greater);
            prev = r.isolating().clone();
        }
    }
}

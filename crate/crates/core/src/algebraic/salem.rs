//! Salem and geometric Salem verdicts via exact Sturm counts.
//!
//! Unit-circle roots are never located numerically: a palindromic
//! `p(t) = t^m h(t + 1/t)` has a root on the unit circle for every root of
//! `h` in `(-2, 2)`, and a real pair `y, 1/y` for every root of `h` outside
//! `[-2, 2]`.

use alloc::string::String;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::{AlgebraicError, DEFAULT_PRIME_BOUND};
use crate::poly::{
    irreducible_over_q, square_free_part, Bound, Irreducibility, PolyError, SturmChain, UniPoly,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NotSalemReason {
    /// Some roots are not real.
    ComplexRoots {
        nonreal: usize,
    },
    RepeatedRoots,
    NoRootAboveTwo,
    SeveralRootsAboveTwo(usize),
    /// A conjugate other than the large root has absolute value at least 2.
    ConjugateOutside,
    /// A rational root splits off a linear factor.
    Reducible(String),
    NotReciprocal,
    NotMonic,
    /// Degree below four leaves no conjugates on the unit circle.
    Degenerate,
    /// The trace polynomial `h` has the wrong root pattern.
    CirclePattern {
        above_two: usize,
        inside: usize,
    },
}

impl fmt::Display for NotSalemReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NotSalemReason::ComplexRoots { nonreal } => {
                write!(f, "complex conjugates exist ({nonreal} non-real roots)")
            }
            NotSalemReason::RepeatedRoots => f.write_str("repeated roots"),
            NotSalemReason::NoRootAboveTwo => f.write_str("no root greater than 2"),
            NotSalemReason::SeveralRootsAboveTwo(n) => write!(f, "{n} roots greater than 2"),
            NotSalemReason::ConjugateOutside => {
                f.write_str("a conjugate has absolute value at least 2")
            }
            NotSalemReason::Reducible(r) => write!(f, "reducible (rational root {r})"),
            NotSalemReason::NotReciprocal => f.write_str("not reciprocal"),
            NotSalemReason::NotMonic => f.write_str("not monic, so not an algebraic integer"),
            NotSalemReason::Degenerate => f.write_str("degenerate (degree below 4)"),
            NotSalemReason::CirclePattern { above_two, inside } => {
                write!(f, "h has {above_two} roots above 2 and {inside} in (-2, 2)")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SalemStatus {
    GeometricSalem,
    Salem,
    NotSalem(NotSalemReason),
    Inconclusive(String),
}

impl SalemStatus {
    /// The bare verdict word, as printed after `verdict:`.
    pub fn token(&self) -> &'static str {
        match self {
            SalemStatus::GeometricSalem => "GeometricSalem",
            SalemStatus::Salem => "Salem",
            SalemStatus::NotSalem(_) => "NotSalem",
            SalemStatus::Inconclusive(_) => "Inconclusive",
        }
    }
}

/// Exact root-location counts of the examined polynomial.
///
/// For [`is_salem`] the counts describe `h`, and `circle_roots` is the
/// number of roots of the palindromic input on the unit circle.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RootEvidence {
    pub examined: UniPoly,
    pub degree: usize,
    pub real_roots: usize,
    pub below_minus_two: usize,
    pub inside: usize,
    pub above_two: usize,
    pub at_plus_minus_two: usize,
    pub monic: bool,
    pub circle_roots: Option<usize>,
    pub irreducibility: Option<Irreducibility>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SalemVerdict {
    pub status: SalemStatus,
    pub evidence: RootEvidence,
}

impl fmt::Display for SalemVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e = &self.evidence;
        writeln!(f, "polynomial: {}", e.examined.pretty("x"))?;
        writeln!(f, "degree: {}", e.degree)?;
        writeln!(f, "monic: {}", if e.monic { "yes" } else { "no" })?;
        writeln!(f, "real roots: {}", e.real_roots)?;
        writeln!(
            f,
            "roots below -2: {}, in (-2, 2): {}, above 2: {}, at +-2: {}",
            e.below_minus_two, e.inside, e.above_two, e.at_plus_minus_two
        )?;
        if let Some(c) = e.circle_roots {
            writeln!(f, "unit-circle roots: {c}")?;
        }
        match &e.irreducibility {
            Some(Irreducibility::IrreducibleWitness(p)) => {
                writeln!(f, "irreducible: witness prime {p}")?
            }
            Some(Irreducibility::RationalRootFound(r)) => writeln!(f, "reducible: root {r}")?,
            Some(Irreducibility::Inconclusive) => writeln!(f, "irreducible: inconclusive")?,
            None => {}
        }
        match &self.status {
            SalemStatus::NotSalem(r) => writeln!(f, "reason: {r}")?,
            SalemStatus::Inconclusive(r) => writeln!(f, "reason: {r}")?,
            _ => {}
        }
        write!(f, "verdict: {}", self.status.token())
    }
}

fn count(chain: &SturmChain, lo: Bound, hi: Bound) -> Result<usize, PolyError> {
    chain.count(&lo, &hi)
}

/// Counts of the distinct real roots of `sf` around `±2`.
fn locate(sf: &UniPoly) -> Result<(usize, usize, usize, usize), PolyError> {
    let two = BigInt::from(2);
    let at_two = sf.evaluate_int(&two).is_zero() as usize;
    let at_minus_two = sf.evaluate_int(&-two.clone()).is_zero() as usize;
    // when ±2 is a root, count on either side of a small gap around it
    let chain = SturmChain::new(sf);
    let eps = BigRational::new(1.into(), 8.into());
    let p2 = BigRational::from_integer(two.clone());
    let m2 = -p2.clone();
    let (below, inside, above);
    if at_two + at_minus_two == 0 {
        below = count(&chain, Bound::NegInf, Bound::Finite(m2.clone()))?;
        inside = count(&chain, Bound::Finite(m2), Bound::Finite(p2.clone()))?;
        above = count(&chain, Bound::Finite(p2), Bound::PosInf)?;
    } else {
        let mut grid = eps.clone();
        loop {
            let pts = [&m2 - &grid, &m2 + &grid, &p2 - &grid, &p2 + &grid];
            if pts.iter().all(|t| !sf.evaluate(t).is_zero()) {
                let b = count(&chain, Bound::NegInf, Bound::Finite(pts[0].clone()))?;
                let i = count(
                    &chain,
                    Bound::Finite(pts[1].clone()),
                    Bound::Finite(pts[2].clone()),
                )?;
                let a = count(&chain, Bound::Finite(pts[3].clone()), Bound::PosInf)?;
                let near = count(
                    &chain,
                    Bound::Finite(pts[0].clone()),
                    Bound::Finite(pts[1].clone()),
                )? + count(
                    &chain,
                    Bound::Finite(pts[2].clone()),
                    Bound::Finite(pts[3].clone()),
                )?;
                if near == at_two + at_minus_two {
                    below = b;
                    inside = i;
                    above = a;
                    break;
                }
            }
            grid /= BigRational::from_integer(2.into());
        }
    }
    Ok((below, inside, above, at_two + at_minus_two))
}

/// Geometric Salem test with the default prime bound.
pub fn is_geometric_salem(p: &UniPoly) -> Result<SalemVerdict, AlgebraicError> {
    is_geometric_salem_with(p, DEFAULT_PRIME_BOUND)
}

/// A root above 2 whose other conjugates are real and inside `(-2, 2)`.
///
/// Root conditions are checked before the irreducibility witness search.
pub fn is_geometric_salem_with(
    p: &UniPoly,
    prime_bound: u64,
) -> Result<SalemVerdict, AlgebraicError> {
    let deg = p.degree().ok_or(PolyError::ZeroPolynomial)?;
    if deg == 0 {
        return Err(AlgebraicError::Domain(
            "constant polynomial has no roots".into(),
        ));
    }
    let f = p.primitive_part();
    let sf = square_free_part(&f)?;
    let real = SturmChain::new(&sf).count(&Bound::NegInf, &Bound::PosInf)?;
    let (below, inside, above, at_two) = locate(&sf)?;
    let mut evidence = RootEvidence {
        examined: f.clone(),
        degree: deg,
        real_roots: real,
        below_minus_two: below,
        inside,
        above_two: above,
        at_plus_minus_two: at_two,
        monic: f.is_monic(),
        circle_roots: None,
        irreducibility: None,
    };
    let not = |reason, evidence| {
        Ok(SalemVerdict {
            status: SalemStatus::NotSalem(reason),
            evidence,
        })
    };
    if sf.degree() != Some(deg) {
        return not(NotSalemReason::RepeatedRoots, evidence);
    }
    if real < deg {
        return not(
            NotSalemReason::ComplexRoots {
                nonreal: deg - real,
            },
            evidence,
        );
    }
    match above {
        0 => return not(NotSalemReason::NoRootAboveTwo, evidence),
        1 => {}
        n => return not(NotSalemReason::SeveralRootsAboveTwo(n), evidence),
    }
    if inside != deg - 1 {
        return not(NotSalemReason::ConjugateOutside, evidence);
    }
    if deg == 1 {
        return Ok(SalemVerdict {
            status: SalemStatus::GeometricSalem,
            evidence,
        });
    }
    let irr = irreducible_over_q(&f, prime_bound)?;
    evidence.irreducibility = Some(irr.clone());
    let status = match irr {
        Irreducibility::IrreducibleWitness(_) => SalemStatus::GeometricSalem,
        Irreducibility::RationalRootFound(r) => {
            SalemStatus::NotSalem(NotSalemReason::Reducible(alloc::format!("{r}")))
        }
        Irreducibility::Inconclusive => SalemStatus::Inconclusive(alloc::format!(
            "no irreducibility witness among primes up to {prime_bound}"
        )),
    };
    Ok(SalemVerdict { status, evidence })
}

/// `(t^2 + 1)^k`.
fn t2_plus_one_pow(k: usize) -> UniPoly {
    let base = UniPoly::from_i64s(&[1, 0, 1]);
    let mut out = UniPoly::one();
    for _ in 0..k {
        out = &out * &base;
    }
    out
}

/// `t^d p(t + 1/t)`, a palindromic polynomial of degree `2d`.
pub fn salem_transform(p: &UniPoly) -> UniPoly {
    let Some(d) = p.degree() else {
        return UniPoly::zero();
    };
    let mut out = UniPoly::zero();
    for (k, c) in p.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        out = &out + &t2_plus_one_pow(k).shift(d - k).scale(c);
    }
    out
}

/// The `h` with `p(t) = t^m h(t + 1/t)`, for palindromic `p` of degree `2m`.
pub fn inverse_salem_transform(p: &UniPoly) -> Option<UniPoly> {
    let n = p.degree()?;
    if n % 2 == 1 || p.reciprocal() != *p {
        return None;
    }
    let m = n / 2;
    let mut rest = p.clone();
    let mut h = alloc::vec![BigInt::zero(); m + 1];
    for k in (0..=m).rev() {
        let c = rest.coeff(m + k);
        if c.is_zero() {
            continue;
        }
        rest = &rest - &t2_plus_one_pow(k).shift(m - k).scale(&c);
        h[k] = c;
    }
    rest.is_zero().then(|| UniPoly::new(h))
}

/// Salem test for a monic palindromic polynomial of even degree.
pub fn is_salem(p: &UniPoly) -> Result<SalemVerdict, AlgebraicError> {
    let deg = p.degree().ok_or(PolyError::ZeroPolynomial)?;
    if deg % 2 == 1 {
        return Err(AlgebraicError::Domain(alloc::format!(
            "a Salem polynomial has even degree, got {deg}"
        )));
    }
    let mut evidence = RootEvidence {
        examined: p.clone(),
        degree: deg,
        monic: p.is_monic(),
        ..RootEvidence::default()
    };
    let not = |reason, evidence| {
        Ok(SalemVerdict {
            status: SalemStatus::NotSalem(reason),
            evidence,
        })
    };
    if !evidence.monic {
        return not(NotSalemReason::NotMonic, evidence);
    }
    if deg < 4 {
        return not(NotSalemReason::Degenerate, evidence);
    }
    let Some(h) = inverse_salem_transform(p) else {
        return not(NotSalemReason::NotReciprocal, evidence);
    };
    let m = deg / 2;
    let sf = square_free_part(&h)?;
    let (below, inside, above, at_two) = locate(&sf)?;
    evidence.examined = h.clone();
    evidence.degree = m;
    evidence.real_roots = SturmChain::new(&sf).count(&Bound::NegInf, &Bound::PosInf)?;
    evidence.below_minus_two = below;
    evidence.inside = inside;
    evidence.above_two = above;
    evidence.at_plus_minus_two = at_two;
    evidence.circle_roots = Some(2 * inside);
    if above == 1 && inside == m - 1 {
        Ok(SalemVerdict {
            status: SalemStatus::Salem,
            evidence,
        })
    } else {
        not(
            NotSalemReason::CirclePattern {
                above_two: above,
                inside,
            },
            evidence,
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::PATTERN_QUINTIC;

    fn p(c: &[i64]) -> UniPoly {
        UniPoly::from_i64s(c)
    }

    #[test]
    fn geometric_salem_examples() {
        assert_eq!(
            is_geometric_salem(&p(&[-3, -1, 1])).unwrap().status,
            SalemStatus::GeometricSalem
        );
        assert_eq!(
            is_geometric_salem(&p(&[1, -4, 1])).unwrap().status,
            SalemStatus::GeometricSalem
        );
        assert_eq!(
            is_geometric_salem(&p(&[-3, 1])).unwrap().status,
            SalemStatus::GeometricSalem
        );
        let q = is_geometric_salem(&p(&PATTERN_QUINTIC)).unwrap();
        assert_eq!(
            q.status,
            SalemStatus::NotSalem(NotSalemReason::ComplexRoots { nonreal: 4 })
        );
        assert_eq!(q.evidence.real_roots, 1);
        // scaling by a positive constant changes nothing
        let scaled = is_geometric_salem(&p(&[-9, -3, 3])).unwrap();
        assert_eq!(scaled.status, SalemStatus::GeometricSalem);
    }

    #[test]
    fn geometric_salem_negatives() {
        // (x - 3)(x - 1): reducible
        let r = is_geometric_salem(&p(&[3, -4, 1])).unwrap();
        assert!(matches!(
            r.status,
            SalemStatus::NotSalem(NotSalemReason::Reducible(_))
        ));
        // x^2 - 2: no root above 2
        let r = is_geometric_salem(&p(&[-2, 0, 1])).unwrap();
        assert_eq!(
            r.status,
            SalemStatus::NotSalem(NotSalemReason::NoRootAboveTwo)
        );
        // (x - 3)(x + 2) has a root at -2
        let r = is_geometric_salem(&p(&[-6, -1, 1])).unwrap();
        assert_eq!(r.evidence.at_plus_minus_two, 1);
        assert_eq!(
            r.status,
            SalemStatus::NotSalem(NotSalemReason::ConjugateOutside)
        );
        // non-monic: 2x^2 - 5x - 1 has roots 2.69 and -0.19
        let r = is_geometric_salem(&p(&[-1, -5, 2])).unwrap();
        assert!(!r.evidence.monic);
        assert_eq!(r.status, SalemStatus::GeometricSalem);
        assert!(is_geometric_salem(&p(&[5])).is_err());
    }

    #[test]
    fn transform_examples() {
        assert_eq!(salem_transform(&p(&[-3, 1])), p(&[1, -3, 1]));
        assert_eq!(salem_transform(&p(&[-3, -1, 1])), p(&[1, -1, -1, -1, 1]));
        assert_eq!(salem_transform(&p(&[0, 1])), p(&[1, 0, 1]));
        assert_eq!(
            inverse_salem_transform(&p(&[1, -1, -1, -1, 1])),
            Some(p(&[-3, -1, 1]))
        );
        assert_eq!(inverse_salem_transform(&p(&[1, 2, 3])), None);
    }

    #[test]
    fn salem_examples() {
        let v = is_salem(&p(&[1, -1, -1, -1, 1])).unwrap();
        assert_eq!(v.status, SalemStatus::Salem);
        assert_eq!(v.evidence.circle_roots, Some(2));
        assert_eq!(
            is_salem(&p(&[1, -3, 1])).unwrap().status,
            SalemStatus::NotSalem(NotSalemReason::Degenerate)
        );
        assert!(matches!(
            is_salem(&p(&[1, 1, 1, 1, 1])).unwrap().status,
            SalemStatus::NotSalem(NotSalemReason::CirclePattern {
                above_two: 0,
                inside: 2
            })
        ));
        assert_eq!(
            is_salem(&p(&[1, 2, 0, -1, 1])).unwrap().status,
            SalemStatus::NotSalem(NotSalemReason::NotReciprocal)
        );
        assert!(is_salem(&p(&PATTERN_QUINTIC)).is_err());
        // Lehmer's polynomial
        let lehmer = p(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1]);
        assert_eq!(is_salem(&lehmer).unwrap().status, SalemStatus::Salem);
    }

    #[test]
    fn verdict_report_ends_with_token() {
        let text = alloc::format!("{}", is_geometric_salem(&p(&PATTERN_QUINTIC)).unwrap());
        assert!(text.ends_with("verdict: NotSalem"));
        assert!(text.contains("complex conjugates exist"));
    }
}

//! Sturm sequences and exact real root isolation.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{square_free_part, PolyError, UniPoly};

/// An endpoint of a real interval, possibly infinite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bound {
    NegInf,
    Finite(BigRational),
    PosInf,
}

impl Bound {
    pub fn from_int(n: i64) -> Self {
        Bound::Finite(BigRational::from_integer(n.into()))
    }
}

impl From<BigRational> for Bound {
    fn from(r: BigRational) -> Self {
        Bound::Finite(r)
    }
}

fn int_sign(x: &BigInt) -> i32 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

/// Sign of `p(t)` as -1, 0 or 1.
pub fn sign_at(p: &UniPoly, t: &BigRational) -> i32 {
    let v = p.evaluate(t);
    if v.is_positive() {
        1
    } else if v.is_negative() {
        -1
    } else {
        0
    }
}

fn sign_at_bound(p: &UniPoly, b: &Bound) -> i32 {
    match b {
        Bound::Finite(t) => sign_at(p, t),
        Bound::PosInf => int_sign(&p.leading()),
        Bound::NegInf => {
            let s = int_sign(&p.leading());
            if p.degree().unwrap_or(0) % 2 == 1 {
                -s
            } else {
                s
            }
        }
    }
}

/// The signed remainder chain `p, p', -rem(p, p'), ...`.
///
/// Remainders are pseudo-remainders scaled by a positive factor and then
/// divided by their (positive) content, which leaves every sign variation
/// count unchanged.
#[derive(Debug, Clone)]
pub struct SturmChain {
    polys: Vec<UniPoly>,
}

impl SturmChain {
    pub fn new(p: &UniPoly) -> Self {
        let mut polys = Vec::new();
        if p.is_zero() {
            return Self { polys };
        }
        polys.push(p.clone());
        let d = p.derivative();
        if d.is_zero() {
            return Self { polys };
        }
        polys.push(d);
        loop {
            let n = polys.len();
            let (a, b) = (&polys[n - 2], &polys[n - 1]);
            let mut r = a.pseudo_rem(b);
            if r.is_zero() {
                break;
            }
            // pseudo_rem multiplies by lc(b)^(da-db+1); undo a negative factor
            let da = a.degree().unwrap_or(0);
            let db = b.degree().unwrap_or(0);
            if b.leading().is_negative() && (da - db + 1) % 2 == 1 {
                r = -r;
            }
            let c = r.content();
            polys.push(-&r.div_scalar_exact(&c));
        }
        Self { polys }
    }

    pub fn polys(&self) -> &[UniPoly] {
        &self.polys
    }

    /// Last element: a positive multiple of `gcd(p, p')` up to sign.
    pub fn last(&self) -> Option<&UniPoly> {
        self.polys.last()
    }

    fn variations(&self, b: &Bound) -> usize {
        let mut count = 0;
        let mut prev = 0;
        for p in &self.polys {
            let s = sign_at_bound(p, b);
            if s == 0 {
                continue;
            }
            if prev != 0 && s != prev {
                count += 1;
            }
            prev = s;
        }
        count
    }

    /// Number of distinct real roots in the open interval `(lo, hi)`.
    pub fn count(&self, lo: &Bound, hi: &Bound) -> Result<usize, PolyError> {
        let Some(p) = self.polys.first() else {
            return Err(PolyError::ZeroPolynomial);
        };
        if bound_cmp(lo, hi) != Ordering::Less {
            return Err(PolyError::EmptyInterval);
        }
        for b in [lo, hi] {
            if let Bound::Finite(t) = b {
                if sign_at(p, t) == 0 {
                    return Err(PolyError::EndpointIsRoot(t.clone()));
                }
            }
        }
        let vl = self.variations(lo);
        let vh = self.variations(hi);
        Ok(vl.saturating_sub(vh))
    }
}

fn bound_cmp(a: &Bound, b: &Bound) -> Ordering {
    match (a, b) {
        (Bound::NegInf, Bound::NegInf) | (Bound::PosInf, Bound::PosInf) => Ordering::Equal,
        (Bound::NegInf, _) | (_, Bound::PosInf) => Ordering::Less,
        (_, Bound::NegInf) | (Bound::PosInf, _) => Ordering::Greater,
        (Bound::Finite(x), Bound::Finite(y)) => x.cmp(y),
    }
}

/// Exact count of distinct real roots of `p` in `(lo, hi)`.
pub fn sturm_count(p: &UniPoly, lo: &Bound, hi: &Bound) -> Result<usize, PolyError> {
    if p.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    SturmChain::new(p).count(lo, hi)
}

/// Open rational interval `(lo, hi)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootInterval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl RootInterval {
    pub fn new(lo: BigRational, hi: BigRational) -> Self {
        Self { lo, hi }
    }

    pub fn from_ints(lo: i64, hi: i64) -> Self {
        Self::new(
            BigRational::from_integer(lo.into()),
            BigRational::from_integer(hi.into()),
        )
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.lo + &self.hi) / BigRational::from_integer(2.into())
    }

    pub fn contains(&self, t: &BigRational) -> bool {
        &self.lo < t && t < &self.hi
    }

    pub fn is_within(&self, outer: &RootInterval) -> bool {
        outer.lo <= self.lo && self.hi <= outer.hi
    }
}

impl fmt::Display for RootInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.lo, self.hi)
    }
}

/// Cauchy bound: every root has absolute value strictly below it.
fn cauchy_bound(p: &UniPoly) -> BigRational {
    let lc = p.leading().abs();
    let d = p.degree().unwrap_or(0);
    let max = p.coeffs()[..d]
        .iter()
        .map(|c| c.abs())
        .max()
        .unwrap_or_else(BigInt::zero);
    BigRational::one() + BigRational::new(max, lc) + BigRational::one()
}

/// A point strictly inside `(lo, hi)` at which `p` does not vanish.
fn split_point(p: &UniPoly, lo: &BigRational, hi: &BigRational) -> BigRational {
    const FRACTIONS: [(i64, i64); 8] = [
        (1, 2),
        (1, 3),
        (2, 3),
        (2, 5),
        (3, 5),
        (3, 7),
        (4, 7),
        (5, 11),
    ];
    let w = hi - lo;
    for (n, d) in FRACTIONS {
        let t = lo + &w * BigRational::new(n.into(), d.into());
        if sign_at(p, &t) != 0 {
            return t;
        }
    }
    // p has at most deg p roots, so some dyadic offset avoids them
    let mut k = 3u32;
    loop {
        let t = lo + &w / BigRational::from_integer(BigInt::from(2).pow(k));
        if sign_at(p, &t) != 0 {
            return t;
        }
        k += 1;
    }
}

/// Disjoint open rational intervals, one per distinct real root, ascending.
pub fn isolate_real_roots(p: &UniPoly) -> Result<Vec<RootInterval>, PolyError> {
    if p.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    if p.is_constant() {
        return Ok(Vec::new());
    }
    let sf = square_free_part(p)?;
    let chain = SturmChain::new(&sf);
    let b = cauchy_bound(&sf);
    let mut out = Vec::new();
    let mut stack = alloc::vec![(-b.clone(), b)];
    while let Some((lo, hi)) = stack.pop() {
        let n = chain.count(&Bound::Finite(lo.clone()), &Bound::Finite(hi.clone()))?;
        match n {
            0 => {}
            1 => out.push(RootInterval::new(lo, hi)),
            _ => {
                let m = split_point(&sf, &lo, &hi);
                stack.push((lo, m.clone()));
                stack.push((m, hi));
            }
        }
    }
    out.sort_by(|a, b| a.lo.cmp(&b.lo));
    Ok(out)
}

/// Bisects an isolating interval of a simple root until its width is below
/// `eps`.
///
/// Requires `p(lo)` and `p(hi)` to have opposite signs.
pub fn refine_root(
    p: &UniPoly,
    interval: &RootInterval,
    eps: &BigRational,
) -> Result<RootInterval, PolyError> {
    if interval.lo >= interval.hi {
        return Err(PolyError::EmptyInterval);
    }
    let sl = sign_at(p, &interval.lo);
    let sh = sign_at(p, &interval.hi);
    if sl == 0 || sh == 0 || sl == sh {
        return Err(PolyError::NotIsolating);
    }
    let two = BigRational::from_integer(2.into());
    let (mut lo, mut hi) = (interval.lo.clone(), interval.hi.clone());
    while &hi - &lo >= *eps {
        let m = (&lo + &hi) / &two;
        match sign_at(p, &m) {
            0 => {
                // exact rational root: return a tight interval around it
                let mut delta = eps / BigRational::from_integer(4.into());
                let half_gap = (&m - &lo).min(&hi - &m) / &two;
                if half_gap < delta {
                    delta = half_gap;
                }
                return Ok(RootInterval::new(&m - &delta, &m + &delta));
            }
            s if s == sl => lo = m,
            _ => hi = m,
        }
    }
    Ok(RootInterval::new(lo, hi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::PATTERN_QUINTIC;

    fn p(c: &[i64]) -> UniPoly {
        UniPoly::from_i64s(c)
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn sturm_count_examples() {
        assert_eq!(
            sturm_count(&p(&[-2, 0, 1]), &Bound::from_int(0), &Bound::from_int(2)),
            Ok(1)
        );
        assert_eq!(
            sturm_count(&p(&[1, 0, 1]), &Bound::from_int(-10), &Bound::from_int(10)),
            Ok(0)
        );
        assert_eq!(
            sturm_count(&p(&PATTERN_QUINTIC), &Bound::NegInf, &Bound::PosInf),
            Ok(1)
        );
        assert_eq!(
            sturm_count(
                &p(&PATTERN_QUINTIC),
                &Bound::from_int(2),
                &Bound::from_int(3)
            ),
            Ok(1)
        );
    }

    #[test]
    fn sturm_count_endpoint_root() {
        assert_eq!(
            sturm_count(&p(&[-1, 0, 1]), &Bound::from_int(1), &Bound::from_int(3)),
            Err(PolyError::EndpointIsRoot(q(1, 1)))
        );
        assert_eq!(
            sturm_count(&p(&[-1, 0, 1]), &Bound::from_int(3), &Bound::from_int(1)),
            Err(PolyError::EmptyInterval)
        );
    }

    #[test]
    fn chain_ends_in_gcd() {
        // (x-1)^2 (x+1): gcd with derivative is x - 1
        let f = &(&p(&[-1, 1]) * &p(&[-1, 1])) * &p(&[1, 1]);
        let chain = SturmChain::new(&f);
        let last = chain.last().unwrap();
        assert_eq!(last.primitive_part(), p(&[-1, 1]));
        // distinct roots are still counted
        assert_eq!(chain.count(&Bound::NegInf, &Bound::PosInf), Ok(2));
    }

    #[test]
    fn isolate_examples() {
        let roots = isolate_real_roots(&p(&[-2, 0, 1])).unwrap();
        assert_eq!(roots.len(), 2);
        let neg = refine_root(&p(&[-2, 0, 1]), &roots[0], &q(1, 4)).unwrap();
        let pos = refine_root(&p(&[-2, 0, 1]), &roots[1], &q(1, 4)).unwrap();
        assert!(neg.is_within(&RootInterval::from_ints(-2, -1)));
        assert!(pos.is_within(&RootInterval::from_ints(1, 2)));
        let quintic = isolate_real_roots(&p(&PATTERN_QUINTIC)).unwrap();
        assert_eq!(quintic.len(), 1);
        let fine = refine_root(&p(&PATTERN_QUINTIC), &quintic[0], &q(1, 2)).unwrap();
        assert!(fine.is_within(&RootInterval::from_ints(2, 3)));

        let r = isolate_real_roots(&p(&[-3, -1, 1])).unwrap();
        assert_eq!(r.len(), 2);
        // (1 - sqrt 13)/2 = -1.3028, (1 + sqrt 13)/2 = 2.3028
        let lo = refine_root(&p(&[-3, -1, 1]), &r[0], &q(1, 100)).unwrap();
        let hi = refine_root(&p(&[-3, -1, 1]), &r[1], &q(1, 100)).unwrap();
        assert!(lo.contains(&q(-13028, 10000)));
        assert!(hi.contains(&q(23028, 10000)));
    }

    #[test]
    fn isolate_handles_rational_roots_and_multiplicity() {
        // x (x - 1)^2 (x + 1/2) * 2
        let f = &(&(&p(&[0, 1]) * &p(&[-1, 1])) * &p(&[-1, 1])) * &p(&[1, 2]);
        let roots = isolate_real_roots(&f).unwrap();
        assert_eq!(roots.len(), 3);
        for w in roots.windows(2) {
            assert!(w[0].hi <= w[1].lo);
        }
        assert!(roots[0].contains(&q(-1, 2)));
        assert!(roots[1].contains(&q(0, 1)));
        assert!(roots[2].contains(&q(1, 1)));
    }

    #[test]
    fn refine_examples() {
        let r = refine_root(&p(&[-2, 0, 1]), &RootInterval::from_ints(1, 2), &q(1, 1000)).unwrap();
        assert!(r.width() < q(1, 1000));
        assert!(r.lo < q(141422, 100000) && r.hi > q(141421, 100000));

        let r = refine_root(
            &p(&[-3, 1]),
            &RootInterval::from_ints(2, 4),
            &q(1, 1_000_000_000),
        )
        .unwrap();
        assert!(r.contains(&q(3, 1)));
        assert!(r.width() < q(1, 1_000_000_000));

        assert_eq!(
            refine_root(&p(&[-2, 0, 1]), &RootInterval::from_ints(2, 3), &q(1, 10)),
            Err(PolyError::NotIsolating)
        );
    }
}

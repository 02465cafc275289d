use num_bigint::BigInt;
use num_traits::{One, Pow, Zero};

use super::{PolyError, UniPoly};

/// Primitive gcd with positive leading coefficient.
///
/// Runs a primitive pseudo-remainder sequence, so intermediate coefficients
/// stay integral.
pub fn gcd(p: &UniPoly, q: &UniPoly) -> Result<UniPoly, PolyError> {
    if p.is_zero() && q.is_zero() {
        return Err(PolyError::BothZero);
    }
    let (mut a, mut b) = if p.degree() >= q.degree() {
        (p.primitive_part(), q.primitive_part())
    } else {
        (q.primitive_part(), p.primitive_part())
    };
    while !b.is_zero() {
        let r = a.pseudo_rem(&b);
        a = b;
        b = r.primitive_part();
    }
    Ok(a.primitive_part())
}

/// `p / gcd(p, p')`, primitive with positive leading coefficient.
pub fn square_free_part(p: &UniPoly) -> Result<UniPoly, PolyError> {
    if p.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    if p.is_constant() {
        return Ok(UniPoly::one());
    }
    let g = gcd(p, &p.derivative())?;
    let pp = p.primitive_part();
    Ok(pp
        .div_exact(&g)
        .expect("gcd with the derivative divides a primitive polynomial")
        .primitive_part())
}

/// Resultant of `p` and `q` by the subresultant algorithm.
///
/// Sign convention: `res(p, q) = lc(p)^deg q * prod q(alpha)` over the roots
/// `alpha` of `p`.
pub fn resultant(p: &UniPoly, q: &UniPoly) -> Result<BigInt, PolyError> {
    if p.is_zero() || q.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    let dp = p.degree().unwrap_or(0);
    let dq = q.degree().unwrap_or(0);
    if dp == 0 {
        return Ok(Pow::pow(&p.leading(), dq));
    }
    if dq == 0 {
        return Ok(Pow::pow(&q.leading(), dp));
    }

    let ca = p.content();
    let cb = q.content();
    let mut a = p.div_scalar_exact(&ca);
    let mut b = q.div_scalar_exact(&cb);
    let t = Pow::pow(&ca, dq) * Pow::pow(&cb, dp);

    let mut g = BigInt::one();
    let mut h = BigInt::one();
    let mut s = BigInt::one();

    if dp < dq {
        core::mem::swap(&mut a, &mut b);
        if dp % 2 == 1 && dq % 2 == 1 {
            s = -s;
        }
    }

    loop {
        let da = a.degree().unwrap_or(0);
        let db = b.degree().unwrap_or(0);
        let delta = da - db;
        if da % 2 == 1 && db % 2 == 1 {
            s = -s;
        }
        let r = a.pseudo_rem(&b);
        a = b;
        if r.is_zero() {
            return Ok(BigInt::zero());
        }
        let divisor = &g * Pow::pow(&h, delta);
        b = r.div_scalar_exact(&divisor);
        g = a.leading();
        // h <- g^delta / h^(delta - 1)
        h = if delta == 0 {
            h
        } else {
            Pow::pow(&g, delta) / Pow::pow(&h, delta - 1)
        };
        if b.degree() == Some(0) {
            break;
        }
    }
    let da = a.degree().unwrap_or(0);
    let lb = b.leading();
    // h <- lb^da / h^(da - 1)
    let hh = if da == 0 {
        BigInt::one()
    } else {
        Pow::pow(&lb, da) / Pow::pow(&h, da - 1)
    };
    Ok(s * t * hh)
}

/// `(-1)^(d(d-1)/2) res(p, p') / lc(p)`.
pub fn discriminant(p: &UniPoly) -> Result<BigInt, PolyError> {
    let d = p.degree().ok_or(PolyError::DegreeTooSmall(1))?;
    if d == 0 {
        return Err(PolyError::DegreeTooSmall(1));
    }
    if d == 1 {
        return Ok(BigInt::one());
    }
    let r = resultant(p, &p.derivative())?;
    let lc = p.leading();
    let mut disc = r / &lc;
    if (d * (d - 1) / 2) % 2 == 1 {
        disc = -disc;
    }
    Ok(disc)
}

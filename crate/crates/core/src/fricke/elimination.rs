//! Elimination of the two pattern constraints against the Markov relation.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::poly::{resultant, UniPoly};
use crate::tracering::{markov_polynomial, trace_polynomial, Monomial, TracePoly};
use crate::words::parse_word;

/// Which of `X`, `Y`, `Z`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Var {
    X,
    Y,
    Z,
}

fn exponent(m: &Monomial, v: Var) -> u32 {
    match v {
        Var::X => m.x,
        Var::Y => m.y,
        Var::Z => m.z,
    }
}

fn without(m: &Monomial, v: Var) -> Monomial {
    let mut m = *m;
    match v {
        Var::X => m.x = 0,
        Var::Y => m.y = 0,
        Var::Z => m.z = 0,
    }
    m
}

pub fn degree_in(p: &TracePoly, v: Var) -> u32 {
    p.terms().map(|(m, _)| exponent(m, v)).max().unwrap_or(0)
}

/// Coefficients of `p` as a polynomial in `v`, lowest power first.
pub fn coefficients_in(p: &TracePoly, v: Var) -> Vec<TracePoly> {
    let d = degree_in(p, v) as usize;
    let mut out = alloc::vec![TracePoly::zero(); d + 1];
    for (m, c) in p.terms() {
        let k = exponent(m, v) as usize;
        out[k] = &out[k] + &TracePoly::term(c.clone(), without(m, v));
    }
    out
}

/// `Σ q_k num^k den^(d-k)`: the numerator of `q` after `v = num / den`,
/// cleared by `den^d` with `d = deg_v q`.
pub fn substitute(q: &TracePoly, v: Var, num: &TracePoly, den: &TracePoly) -> TracePoly {
    let coeffs = coefficients_in(q, v);
    let d = coeffs.len() as u32 - 1;
    let mut out = TracePoly::zero();
    for (k, qk) in coeffs.iter().enumerate() {
        if qk.is_zero() {
            continue;
        }
        let k = k as u32;
        out = &out + &(&(qk * &num.pow(k)) * &den.pow(d - k));
    }
    out
}

/// `v = num / den` from a constraint of degree one in `v`.
pub fn solve_linear(c: &TracePoly, v: Var) -> Option<(TracePoly, TracePoly)> {
    let coeffs = coefficients_in(c, v);
    if coeffs.len() != 2 || coeffs[1].is_zero() {
        return None;
    }
    Some((-&coeffs[0], coeffs[1].clone()))
}

/// Reads a polynomial in `X` alone.
pub fn to_univariate(p: &TracePoly) -> Option<UniPoly> {
    let mut coeffs = alloc::vec![BigInt::zero(); p.total_degree() as usize + 1];
    for (m, c) in p.terms() {
        if m.y != 0 || m.z != 0 {
            return None;
        }
        coeffs[m.x as usize] = c.clone();
    }
    Some(UniPoly::new(coeffs))
}

/// Primitive part with positive leading coefficient.
pub fn normalize(p: &UniPoly) -> UniPoly {
    p.primitive_part()
}

/// The two pattern constraints `tr a - tr b` and `tr a² - tr a²b`.
pub fn pattern_constraints() -> [TracePoly; 2] {
    let tr = |s: &str| trace_polynomial(&parse_word(s).expect("literal word"));
    [&tr("a") - &tr("b"), &tr("aa") - &tr("aab")]
}

/// `Y = X` from the first constraint, then `Z = N / D` from the second.
pub(crate) fn solved_coordinates() -> ((TracePoly, TracePoly), (TracePoly, TracePoly)) {
    let [c1, c2] = pattern_constraints();
    let (ny, dy) = solve_linear(&c1, Var::Y).expect("first constraint is linear in Y");
    let c2 = substitute(&c2, Var::Y, &ny, &dy);
    let (nz, dz) = solve_linear(&c2, Var::Z).expect("second constraint is linear in Z");
    ((ny, dy), (nz, dz))
}

/// Substitution route: solve the constraints for `y` and `z` as rational
/// functions of `x` and clear denominators in the Markov relation.
pub fn eliminate_paper_system() -> UniPoly {
    let ((ny, dy), (nz, dz)) = solved_coordinates();
    let m = substitute(&markov_polynomial(), Var::Y, &ny, &dy);
    let m = substitute(&m, Var::Z, &nz, &dz);
    normalize(&to_univariate(&m).expect("only X remains"))
}

/// Lagrange interpolation through `(x_i, v_i)`, exact over the rationals.
fn interpolate(points: &[(BigInt, BigInt)]) -> Option<UniPoly> {
    let n = points.len();
    let mut acc = alloc::vec![BigRational::zero(); n];
    for (i, (xi, vi)) in points.iter().enumerate() {
        // basis polynomial prod_{j != i} (x - x_j) / (x_i - x_j)
        let mut basis = alloc::vec![BigRational::one()];
        let mut denom = BigRational::one();
        for (j, (xj, _)) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            let mut next = alloc::vec![BigRational::zero(); basis.len() + 1];
            for (k, b) in basis.iter().enumerate() {
                next[k + 1] += b;
                next[k] -= b * BigRational::from_integer(xj.clone());
            }
            basis = next;
            denom *= BigRational::from_integer(xi - xj);
        }
        let scale = BigRational::from_integer(vi.clone()) / denom;
        for (k, b) in basis.iter().enumerate() {
            acc[k] += b * &scale;
        }
    }
    let mut coeffs = Vec::with_capacity(n);
    for c in acc {
        if !c.is_integer() {
            return None;
        }
        coeffs.push(c.to_integer());
    }
    Some(UniPoly::new(coeffs))
}

fn specialize_x(p: &TracePoly, x: &BigInt) -> UniPoly {
    let coeffs = coefficients_in(p, Var::Z);
    UniPoly::new(
        coeffs
            .iter()
            .map(|c| {
                let r = c.evaluate_rational(
                    &BigRational::from_integer(x.clone()),
                    &BigRational::zero(),
                    &BigRational::zero(),
                );
                r.to_integer()
            })
            .collect(),
    )
}

/// `res_Z(p, q)` for `p, q ∈ Z[X, Z]`, by evaluating `X` at integers,
/// taking univariate subresultant resultants and interpolating.
pub fn resultant_in_z(p: &TracePoly, q: &TracePoly) -> Option<UniPoly> {
    let dp = degree_in(p, Var::Z) as usize;
    let dq = degree_in(q, Var::Z) as usize;
    let lp = coefficients_in(p, Var::Z).pop()?;
    let lq = coefficients_in(q, Var::Z).pop()?;
    // Bezout bound on the X-degree, plus two check points
    let bound = (p.total_degree() * q.total_degree()) as usize;
    let mut points = Vec::new();
    let mut checks = Vec::new();
    let mut x = BigInt::from(1);
    while points.len() + checks.len() < bound + 3 {
        let lead_ok = |l: &TracePoly| {
            !l.evaluate_rational(
                &BigRational::from_integer(x.clone()),
                &BigRational::zero(),
                &BigRational::zero(),
            )
            .is_zero()
        };
        if lead_ok(&lp) && lead_ok(&lq) {
            let (a, b) = (specialize_x(p, &x), specialize_x(q, &x));
            debug_assert_eq!((a.degree(), b.degree()), (Some(dp), Some(dq)));
            let r = resultant(&a, &b).ok()?;
            if points.len() <= bound {
                points.push((x.clone(), r));
            } else {
                checks.push((x.clone(), r));
            }
        }
        x = if x.is_positive() { -x } else { -x + 1 };
    }
    let poly = interpolate(&points)?;
    checks
        .iter()
        .all(|(x, r)| &poly.evaluate_int(x) == r)
        .then_some(poly)
}

/// Resultant route: `res_Z(res_Y(C1, C2), res_Y(C1, M))`, where the inner
/// resultants against the linear `C1` are expanded symbolically and the
/// outer one runs through univariate subresultants.
pub fn eliminate_by_resultants() -> UniPoly {
    let [c1, c2] = pattern_constraints();
    let (ny, dy) = solve_linear(&c1, Var::Y).expect("first constraint is linear in Y");
    // res_Y(dy*Y - ny, q) = Σ q_k ny^k dy^(d-k)
    let r2 = substitute(&c2, Var::Y, &ny, &dy);
    let rm = substitute(&markov_polynomial(), Var::Y, &ny, &dy);
    let r = resultant_in_z(&r2, &rm).expect("interpolation is consistent");
    normalize(&r)
}

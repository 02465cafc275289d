//! Fricke points of the once-punctured torus.
//!
//! A point is a triple `(x, y, z) = (tr a, tr b, tr ab)` with
//! `x² + y² + z² = xyz` and `x, y, z > 2`. Coordinates are either exact
//! elements of one number field `Q(α)` or rigorous interval enclosures.

mod elimination;

use alloc::string::String;
use core::cmp::Ordering;
use core::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::algebraic::{make_algebraic, AlgebraicError, AlgebraicReal, FieldElem, Real};
use crate::interval::{bits_below, pow2, Interval};
use crate::poly::{isolate_real_roots, sturm_count, Bound, RatPoly, RootInterval, UniPoly};
use crate::tracering::{markov_polynomial, TraceCalculator, TracePoly};
use crate::words::Word;

pub use elimination::{
    coefficients_in, degree_in, eliminate_by_resultants, eliminate_paper_system, pattern_constraints,
    resultant_in_z, solve_linear, substitute, to_univariate, Var,
};

pub const DEFAULT_PRECISION_BITS: u32 = 128;

/// Default Markov tolerance for enclosed points, `2^-96`.
pub fn default_tolerance() -> BigRational {
    pow2(-96)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FrickeError {
    #[error(transparent)]
    Algebraic(#[from] AlgebraicError),
    #[error("undecidable at the current precision: {0}; raise the precision and retry")]
    Precision(String),
    #[error("trace {trace} is not greater than 2: the element is not hyperbolic")]
    NonHyperbolic { trace: String },
    #[error("certification failed: {0}")]
    Certification(String),
    #[error("no real point: {0}")]
    NoRealPoint(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Certification {
    /// All coordinates lie in one exact number field.
    Exact,
    /// Coordinates are interval enclosures; equalities hold up to a tolerance.
    Enclosure,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrickePoint {
    x: Real,
    y: Real,
    z: Real,
}

impl FrickePoint {
    /// Exact point; the coordinates must share their generator.
    pub fn exact(x: FieldElem, y: FieldElem, z: FieldElem) -> Result<Self, FrickeError> {
        x.compatible(&y)?;
        x.compatible(&z)?;
        y.compatible(&z)?;
        Ok(FrickePoint {
            x: Real::Exact(x),
            y: Real::Exact(y),
            z: Real::Exact(z),
        })
    }

    pub fn from_rationals(x: BigRational, y: BigRational, z: BigRational) -> Self {
        FrickePoint {
            x: Real::rational(x),
            y: Real::rational(y),
            z: Real::rational(z),
        }
    }

    pub fn from_ints(x: i64, y: i64, z: i64) -> Self {
        let r = |n: i64| BigRational::from_integer(n.into());
        Self::from_rationals(r(x), r(y), r(z))
    }

    pub fn enclosed(x: Interval, y: Interval, z: Interval) -> Self {
        FrickePoint {
            x: Real::Enclosure(x),
            y: Real::Enclosure(y),
            z: Real::Enclosure(z),
        }
    }

    /// The point over rational `x, y` whose `z` is the larger root of
    /// `t² - xy·t + x² + y²`.
    pub fn markov(x: &BigRational, y: &BigRational) -> Result<Self, FrickeError> {
        let a = x * y;
        let b = x * x + y * y;
        let disc = &a * &a - BigRational::from_integer(4.into()) * &b;
        let half = BigRational::new(1.into(), 2.into());
        if disc.is_negative() {
            return Err(FrickeError::NoRealPoint(alloc::format!(
                "t^2 - {a}t + {b} has no real root"
            )));
        }
        let z = if disc.is_zero() {
            FieldElem::rational(&a * &half)
        } else {
            let quad = RatPoly::new(alloc::vec![b, -a.clone(), BigRational::one()]);
            let (poly, _) = quad.to_integer_poly();
            let hint = RootInterval::new(&a * &half, &a + BigRational::one());
            FieldElem::generator_of(&make_algebraic(&poly, &hint)?)
        };
        Self::exact(
            FieldElem::rational(x.clone()),
            FieldElem::rational(y.clone()),
            z,
        )
    }

    pub fn x(&self) -> &Real {
        &self.x
    }

    pub fn y(&self) -> &Real {
        &self.y
    }

    pub fn z(&self) -> &Real {
        &self.z
    }

    pub fn coordinates(&self) -> [&Real; 3] {
        [&self.x, &self.y, &self.z]
    }

    pub fn certification(&self) -> Certification {
        if self.coordinates().iter().all(|c| c.is_exact()) {
            Certification::Exact
        } else {
            Certification::Enclosure
        }
    }

    /// Common generator of an exact point.
    pub fn generator(&self) -> Option<&AlgebraicReal> {
        self.coordinates()
            .iter()
            .find_map(|c| c.as_exact().and_then(FieldElem::generator))
    }

    /// The same point as interval enclosures of width at most `2^-bits`.
    pub fn enclose(&self, bits: u32) -> FrickePoint {
        FrickePoint::enclosed(
            self.x.enclosure(bits),
            self.y.enclosure(bits),
            self.z.enclosure(bits),
        )
    }

    /// Evaluates a polynomial in the Fricke coordinates.
    pub fn evaluate(&self, p: &TracePoly, bits: u32) -> Real {
        if let [Real::Exact(x), Real::Exact(y), Real::Exact(z)] = self.coordinates() {
            let v = p.evaluate_by(
                [x, y, z],
                |c| FieldElem::rational(BigRational::from_integer(c.clone())),
                FieldElem::add_unchecked,
                FieldElem::mul_unchecked,
            );
            return Real::Exact(v);
        }
        let [x, y, z] = self.coordinates().map(|c| c.enclosure(bits));
        Real::Enclosure(p.evaluate_interval(&x, &y, &z, bits))
    }
}

impl fmt::Display for FrickePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.x, self.y, self.z)
    }
}

/// `x² + y² + z² - xyz` at the point.
pub fn markov_residual(pt: &FrickePoint, bits: u32) -> Real {
    pt.evaluate(&markov_polynomial(), bits)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ResidualCheck {
    ExactZero,
    ExactNonzero,
    /// Enclosure inside `[-tol, tol]`, with its width.
    WithinTolerance {
        width: BigRational,
    },
    /// Enclosure excludes zero.
    Nonzero,
}

impl ResidualCheck {
    pub fn passes(&self) -> bool {
        matches!(
            self,
            ResidualCheck::ExactZero | ResidualCheck::WithinTolerance { .. }
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TeichmullerCertificate {
    pub certification: Certification,
    pub x_above_two: bool,
    pub y_above_two: bool,
    pub z_above_two: bool,
    pub residual: ResidualCheck,
}

impl TeichmullerCertificate {
    pub fn is_member(&self) -> bool {
        self.x_above_two && self.y_above_two && self.z_above_two && self.residual.passes()
    }
}

/// Certified membership in Teichmüller space.
///
/// Returns a precision error instead of a verdict when an enclosure is too
/// wide to decide a comparison.
pub fn in_teichmuller(
    pt: &FrickePoint,
    tol: &BigRational,
    bits: u32,
) -> Result<TeichmullerCertificate, FrickeError> {
    let two = BigRational::from_integer(2.into());
    let above = |c: &Real, name: &str| match c.cmp_rational(&two) {
        Some(o) => Ok(o == Ordering::Greater),
        None => Err(FrickeError::Precision(alloc::format!(
            "cannot decide {name} > 2"
        ))),
    };
    let x_above_two = above(&pt.x, "x")?;
    let y_above_two = above(&pt.y, "y")?;
    let z_above_two = above(&pt.z, "z")?;
    let residual = match markov_residual(pt, bits) {
        Real::Exact(e) => {
            if e.is_zero() {
                ResidualCheck::ExactZero
            } else {
                ResidualCheck::ExactNonzero
            }
        }
        Real::Enclosure(i) => {
            if i.is_subset_of(&Interval::new(-tol.clone(), tol.clone())) {
                ResidualCheck::WithinTolerance { width: i.width() }
            } else if !i.contains_zero() {
                ResidualCheck::Nonzero
            } else {
                return Err(FrickeError::Precision(alloc::format!(
                    "Markov residual enclosure of width {} exceeds the tolerance",
                    crate::interval::format_sci(&i.width(), 3)
                )));
            }
        }
    };
    Ok(TeichmullerCertificate {
        certification: pt.certification(),
        x_above_two,
        y_above_two,
        z_above_two,
        residual,
    })
}

/// The solved point together with its certificates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolvedPoint {
    pub quintic: UniPoly,
    pub real_roots: usize,
    pub x0: AlgebraicReal,
    pub point: FrickePoint,
    pub certificate: TeichmullerCertificate,
}

fn eval_in_field(p: &TracePoly, x: &FieldElem) -> FieldElem {
    let zero = FieldElem::from_int(0);
    p.evaluate_by(
        [x, &zero, &zero],
        |c| FieldElem::rational(BigRational::from_integer(c.clone())),
        FieldElem::add_unchecked,
        FieldElem::mul_unchecked,
    )
}

/// Solves the two pattern constraints on the Markov surface.
///
/// The root `x₀` is the unique real root of the eliminated quintic; `y₀`
/// and `z₀` are the rational functions of `x₀` read off the constraints.
pub fn solve_paper_system(precision: &BigRational) -> Result<SolvedPoint, FrickeError> {
    let quintic = eliminate_paper_system();
    let real_roots =
        sturm_count(&quintic, &Bound::NegInf, &Bound::PosInf).map_err(AlgebraicError::from)?;
    if real_roots != 1 {
        return Err(FrickeError::Certification(alloc::format!(
            "expected one real root, found {real_roots}"
        )));
    }
    let roots = isolate_real_roots(&quintic).map_err(AlgebraicError::from)?;
    let x0 = make_algebraic(&quintic, &roots[0])?.refine(precision);
    let x = FieldElem::generator_of(&x0);
    let ((ny, dy), (nz, dz)) = elimination::solved_coordinates();
    let y = eval_in_field(&ny, &x).div(&eval_in_field(&dy, &x))?;
    let z = eval_in_field(&nz, &x).div(&eval_in_field(&dz, &x))?;
    let point = FrickePoint::exact(x, y, z)?;
    let certificate = in_teichmuller(&point, &default_tolerance(), DEFAULT_PRECISION_BITS)?;
    if !certificate.is_member() {
        return Err(FrickeError::Certification(
            "the solved point is not in Teichmüller space".into(),
        ));
    }
    Ok(SolvedPoint {
        quintic,
        real_roots,
        x0,
        point,
        certificate,
    })
}

/// Trace of `w` at the point.
pub fn trace_of(pt: &FrickePoint, w: &Word, bits: u32) -> Real {
    trace_of_with(&mut TraceCalculator::new(), pt, w, bits)
}

pub fn trace_of_with(calc: &mut TraceCalculator, pt: &FrickePoint, w: &Word, bits: u32) -> Real {
    pt.evaluate(&calc.trace(w), bits)
}

/// `2·arccosh(t/2) = 2·ln(t/2 + sqrt(t²/4 - 1))` over an enclosure with
/// lower endpoint above 2.
pub fn length_from_trace(t: &Interval, bits: u32) -> Option<Interval> {
    let h = t.scale(&BigRational::new(1.into(), 2.into()));
    let s = (&h.pow(2) - &Interval::from_int(1))
        .round(bits + 4)
        .sqrt(bits + 4)?;
    let l = (&h + &s).ln(bits + 4)?;
    Some(l.scale(&BigRational::from_integer(2.into())).round(bits))
}

/// `2·cosh(ℓ/2)`.
pub fn trace_from_length(l: &Interval, bits: u32) -> Interval {
    let half = l.scale(&BigRational::new(1.into(), 2.into()));
    (&half.exp(bits + 4) + &(-&half).exp(bits + 4)).round(bits)
}

/// Certified geodesic length of `w`, as an enclosure of width below
/// `precision`.
pub fn length_of(
    pt: &FrickePoint,
    w: &Word,
    precision: &BigRational,
) -> Result<Interval, FrickeError> {
    let two = BigRational::from_integer(2.into());
    let mut bits = bits_below(precision) + 8;
    let trace = trace_of(pt, w, bits);
    match trace.cmp_rational(&two) {
        Some(Ordering::Greater) => {}
        Some(_) => {
            return Err(FrickeError::NonHyperbolic {
                trace: alloc::format!("{trace}"),
            })
        }
        None => {
            return Err(FrickeError::Precision(alloc::format!(
                "cannot decide whether the trace {trace} exceeds 2"
            )))
        }
    }
    for _ in 0..16 {
        let t = trace.enclosure(bits);
        if let Some(l) = length_from_trace(&t, bits) {
            if &l.width() < precision {
                return Ok(l);
            }
        }
        if !trace.is_exact() {
            break;
        }
        bits += bits / 2 + 16;
    }
    Err(FrickeError::Precision(alloc::format!(
        "length enclosure did not reach width {}",
        crate::interval::format_sci(precision, 3)
    )))
}

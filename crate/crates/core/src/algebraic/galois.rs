//! Dedekind cycle-type sampling.
//!
//! Modulo a prime `q` dividing neither the leading coefficient nor the
//! discriminant, the factor degrees of `f` are the cycle type of a
//! Frobenius element of the Galois group. A transitive group of prime
//! degree `n` containing an `n`-cycle and a transposition is `S_n`; for
//! general `n` an `(n-1)`-cycle replaces the `n`-cycle.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::AlgebraicError;
use crate::poly::{
    discriminant, factor_degrees_mod_p, irreducible_over_q, is_prime, primes_up_to, Irreducibility,
    PolyError, UniPoly,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GaloisConclusion {
    FullSymmetric(usize),
    ContainsNCycle(usize),
    Unknown,
}

impl fmt::Display for GaloisConclusion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GaloisConclusion::FullSymmetric(n) => write!(f, "FullSymmetric({n})"),
            GaloisConclusion::ContainsNCycle(n) => write!(f, "ContainsNCycle({n})"),
            GaloisConclusion::Unknown => f.write_str("Unknown"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaloisCertificate {
    pub polynomial: UniPoly,
    pub irreducibility: Irreducibility,
    pub discriminant: BigInt,
    /// `(prime, factor degrees in descending order)`.
    pub cycle_samples: Vec<(u64, Vec<usize>)>,
    pub n_cycle_prime: Option<u64>,
    pub transposition_prime: Option<u64>,
    pub conclusion: GaloisConclusion,
    pub notes: Vec<String>,
}

impl GaloisCertificate {
    pub fn irreducibility_witness(&self) -> Option<u64> {
        match self.irreducibility {
            Irreducibility::IrreducibleWitness(q) => Some(q),
            _ => None,
        }
    }
}

impl fmt::Display for GaloisCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "polynomial: {}", self.polynomial.pretty("x"))?;
        writeln!(f, "discriminant: {}", self.discriminant)?;
        match &self.irreducibility {
            Irreducibility::IrreducibleWitness(q) => writeln!(f, "irreducible: witness prime {q}")?,
            Irreducibility::RationalRootFound(r) => writeln!(f, "reducible: rational root {r}")?,
            Irreducibility::Inconclusive => writeln!(f, "irreducible: inconclusive")?,
        }
        writeln!(f, "unramified primes sampled: {}", self.cycle_samples.len())?;
        let mut seen: Vec<&Vec<usize>> = Vec::new();
        for (q, pattern) in &self.cycle_samples {
            if !seen.contains(&pattern) {
                seen.push(pattern);
                writeln!(f, "pattern {} first at prime {q}", format_pattern(pattern))?;
            }
        }
        for note in &self.notes {
            writeln!(f, "note: {note}")?;
        }
        write!(f, "verdict: {}", self.conclusion)
    }
}

pub(crate) fn format_pattern(p: &[usize]) -> String {
    let parts: Vec<String> = p.iter().map(|d| alloc::format!("{d}")).collect();
    alloc::format!("{{{}}}", parts.join(","))
}

/// A cube or other odd power of this cycle type is a transposition.
fn forces_transposition(pattern: &[usize]) -> bool {
    pattern.iter().filter(|&&d| d == 2).count() == 1
        && pattern.iter().all(|&d| d == 2 || d % 2 == 1)
}

/// Samples Frobenius cycle types at every unramified prime up to
/// `prime_bound`.
pub fn galois_cycle_types(
    p: &UniPoly,
    prime_bound: u64,
) -> Result<GaloisCertificate, AlgebraicError> {
    let n = p.degree().ok_or(PolyError::ZeroPolynomial)?;
    if n == 0 {
        return Err(AlgebraicError::Domain("constant polynomial".into()));
    }
    let f = p.primitive_part();
    let irreducibility = irreducible_over_q(&f, prime_bound)?;
    let disc = discriminant(&f)?;
    let mut notes = Vec::new();
    let mut samples = Vec::new();
    if disc.is_zero() {
        notes.push("discriminant is zero: the polynomial is not square-free".into());
    } else {
        let bad = &disc * f.leading();
        for q in primes_up_to(prime_bound) {
            if bad.is_multiple_of(&BigInt::from(q)) {
                continue;
            }
            let mut pattern: Vec<usize> = factor_degrees_mod_p(&f, q)?
                .into_iter()
                .flat_map(|(d, m)| core::iter::repeat_n(d, m))
                .collect();
            pattern.sort_unstable_by(|a, b| b.cmp(a));
            samples.push((q, pattern));
        }
    }
    let first = |pred: &dyn Fn(&[usize]) -> bool| {
        samples.iter().find(|(_, pat)| pred(pat)).map(|(q, _)| *q)
    };
    let n_cycle = first(&|pat| pat == [n]);
    let n_minus_one = first(&|pat| n >= 2 && pat == [n - 1, 1]);
    let transposition = first(&|pat| forces_transposition(pat));

    let irreducible = matches!(irreducibility, Irreducibility::IrreducibleWitness(_));
    let conclusion = if n == 1 {
        GaloisConclusion::FullSymmetric(1)
    } else if !irreducible {
        notes.push("irreducibility was not established, so transitivity is unknown".into());
        GaloisConclusion::Unknown
    } else if transposition.is_some()
        && ((is_prime(n as u64) && n_cycle.is_some()) || n_minus_one.is_some())
    {
        GaloisConclusion::FullSymmetric(n)
    } else if n_cycle.is_some() {
        GaloisConclusion::ContainsNCycle(n)
    } else {
        GaloisConclusion::Unknown
    };
    if samples.is_empty() && !disc.is_zero() {
        notes.push(alloc::format!("no unramified primes up to {prime_bound}"));
    }
    Ok(GaloisCertificate {
        polynomial: f,
        irreducibility,
        discriminant: disc,
        cycle_samples: samples,
        n_cycle_prime: n_cycle,
        transposition_prime: transposition,
        conclusion,
        notes,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithmeticityVerdict {
    NonArithmetic,
    Silent,
    NotCertified,
}

impl ArithmeticityVerdict {
    pub fn token(&self) -> &'static str {
        match self {
            ArithmeticityVerdict::NonArithmetic => "NonArithmetic",
            ArithmeticityVerdict::Silent => "Silent",
            ArithmeticityVerdict::NotCertified => "NotCertified",
        }
    }
}

/// Line-oriented report ending in `verdict: <token>`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArithmeticityReport {
    pub certificate: Option<GaloisCertificate>,
    pub lines: Vec<String>,
    pub verdict: ArithmeticityVerdict,
}

impl fmt::Display for ArithmeticityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for line in &self.lines {
            writeln!(f, "{line}")?;
        }
        write!(f, "verdict: {}", self.verdict.token())
    }
}

/// Turns an `S_n` certificate (`n ≥ 5`) for a trace's minimal polynomial
/// into the obstruction to arithmeticity: traces of a group commensurable
/// with the modular group are expressible by radicals.
pub fn non_arithmeticity_report(
    p: &UniPoly,
    prime_bound: u64,
) -> Result<ArithmeticityReport, AlgebraicError> {
    let n = p.degree().ok_or(PolyError::ZeroPolynomial)?;
    let mut lines = Vec::new();
    if n <= 1 {
        lines.push("rational trace; test silent".into());
        return Ok(ArithmeticityReport {
            certificate: None,
            lines,
            verdict: ArithmeticityVerdict::Silent,
        });
    }
    let cert = galois_cycle_types(p, prime_bound)?;
    match &cert.irreducibility {
        Irreducibility::IrreducibleWitness(q) => {
            lines.push(alloc::format!("irreducible over Q (witness prime {q})"))
        }
        Irreducibility::RationalRootFound(r) => {
            lines.push(alloc::format!("reducible over Q (rational root {r})"))
        }
        Irreducibility::Inconclusive => lines.push("irreducibility inconclusive".into()),
    }
    lines.push(alloc::format!("Galois group: {}", cert.conclusion));
    let verdict = match cert.conclusion {
        GaloisConclusion::FullSymmetric(k) if k >= 5 => {
            lines.push(alloc::format!(
                "S_{k} is not solvable, so the root is not expressible by radicals"
            ));
            lines.push(
                "a trace lambda + 1/lambda with lambda a radical expression is therefore impossible"
                    .into(),
            );
            lines.push("the surface is not commensurable with the modular group".into());
            lines.push("non-arithmetic: certified".into());
            ArithmeticityVerdict::NonArithmetic
        }
        _ if n <= 4 && cert.irreducibility_witness().is_some() => {
            lines.push("solvable Galois group; this test is silent".into());
            ArithmeticityVerdict::Silent
        }
        _ => {
            lines.push("non-arithmeticity NOT certified".into());
            ArithmeticityVerdict::NotCertified
        }
    };
    Ok(ArithmeticityReport {
        certificate: Some(cert),
        lines,
        verdict,
    })
}

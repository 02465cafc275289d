use fricke_core::algebraic::{
    galois_cycle_types, inverse_salem_transform, is_geometric_salem_with, is_salem,
    non_arithmeticity_report, salem_transform, ArithmeticityVerdict, GaloisConclusion, Real,
    SalemStatus, SalemVerdict,
};
use fricke_core::fricke::{
    eliminate_by_resultants, eliminate_paper_system, length_of, solve_paper_system, trace_of,
};
use fricke_core::interval::Interval;
use fricke_core::poly::UniPoly;
use fricke_core::tracering::trace_polynomial;
use fricke_core::variety::{
    numeric_member, symbolic_residual, theorem_a_check, trace_identity_suite,
    trace_identity_suite_with, Membership, VarietyPolynomial, WordTuple,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::cli::{Command, VarietyCommand};
use crate::config::RunConfig;
use crate::error::LabError;
use crate::inputs::{read_minpolys, read_point, read_poly_tokens, read_word, read_words};
use crate::oracle::matrix_trace_oracle;
use crate::verify::verify_paper;

/// Printed output plus exit status.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub code: u8,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, code: 0 }
    }

    fn with_status(stdout: String, certified: bool) -> Self {
        Outcome {
            stdout,
            code: if certified { 0 } else { 1 },
        }
    }
}

fn line(s: impl std::fmt::Display) -> String {
    format!("{s}\n")
}

fn last_line(report: &str) -> String {
    line(report.lines().last().unwrap_or_default())
}

/// Full report in text mode, only the `verdict:` line in machine mode.
fn report(cfg: &RunConfig, full: String) -> String {
    if cfg.machine() {
        last_line(&full)
    } else {
        line(full)
    }
}

fn format_interval(cfg: &RunConfig, i: &Interval) -> String {
    if cfg.raw || cfg.machine() {
        i.format_raw((cfg.precision_bits as usize * 3) / 10)
    } else {
        i.format_mid_rad()
    }
}

fn format_real(cfg: &RunConfig, r: &Real) -> String {
    format_interval(cfg, &r.enclosure(cfg.precision_bits))
}

pub fn execute(cmd: &Command, cfg: &RunConfig) -> Result<Outcome, LabError> {
    match cmd {
        Command::Trace { word, point } => trace(cfg, word, point.as_deref()),
        Command::Length { word, point } => length(cfg, word, point),
        Command::Quintic => quintic(),
        Command::Solve => solve(cfg),
        Command::Galois(p) => galois(cfg, &read_poly_tokens(&p.poly)?),
        Command::Nonarith(p) => nonarith(cfg, &read_poly_tokens(&p.poly)?),
        Command::Salem(p) => Ok(salem_outcome(cfg, is_salem(&read_poly_tokens(&p.poly)?)?)),
        Command::Geosalem(p) => Ok(salem_outcome(
            cfg,
            is_geometric_salem_with(&read_poly_tokens(&p.poly)?, cfg.prime_bound)?,
        )),
        Command::SalemTransform { poly, inverse } => {
            let p = read_poly_tokens(&poly.poly)?;
            let out = if *inverse {
                inverse_salem_transform(&p).ok_or_else(|| {
                    LabError::Usage(format!("{p} is not palindromic of even degree"))
                })?
            } else {
                salem_transform(&p)
            };
            Ok(Outcome::ok(line(out)))
        }
        Command::Oracle { n, maxlen } => oracle(cfg, *n, *maxlen),
        Command::Variety(v) => variety(cfg, v),
        Command::VerifyPaper => {
            let r = verify_paper(cfg);
            Ok(Outcome::with_status(r.render(cfg.machine()), r.passed()))
        }
    }
}

fn trace(cfg: &RunConfig, word: &str, point: Option<&str>) -> Result<Outcome, LabError> {
    let w = read_word(word)?;
    let poly = trace_polynomial(&w);
    let Some(point) = point else {
        return Ok(Outcome::ok(line(poly)));
    };
    let pt = read_point(point)?;
    let value = trace_of(&pt, &w, cfg.precision_bits);
    let shown = format_real(cfg, &value);
    Ok(Outcome::ok(if cfg.machine() {
        line(format!("trace: {shown}"))
    } else {
        format!("tr({w}) = {poly}\nvalue: {shown}\n")
    }))
}

fn length(cfg: &RunConfig, word: &str, point: &str) -> Result<Outcome, LabError> {
    let w = read_word(word)?;
    let pt = read_point(point)?;
    let l = length_of(&pt, &w, &cfg.precision())?;
    let shown = format_interval(cfg, &l);
    Ok(Outcome::ok(if cfg.machine() {
        line(format!("length: {shown}"))
    } else {
        format!("length({w}) = {shown}\n")
    }))
}

fn quintic() -> Result<Outcome, LabError> {
    let sub = eliminate_paper_system();
    let res = eliminate_by_resultants();
    if sub != res {
        return Err(LabError::Certification(format!(
            "elimination routes disagree: substitution {sub}, resultants {res}"
        )));
    }
    Ok(Outcome::ok(line(sub)))
}

fn solve(cfg: &RunConfig) -> Result<Outcome, LabError> {
    let s = solve_paper_system(&cfg.precision())?;
    let digits = (cfg.precision_bits as usize * 3) / 10;
    let z = s.point.z().enclosure(cfg.precision_bits);
    let zs = format_interval(cfg, &z);
    let xs = format_interval(cfg, &s.point.x().enclosure(cfg.precision_bits));
    let member = s.certificate.is_member();
    let out = if cfg.machine() {
        format!(
            "x0: {xs}\ny0: {xs}\nz0: {zs}\nteichmuller: {}\n",
            if member { "pass" } else { "fail" }
        )
    } else {
        format!(
            "quintic: {}\nreal roots: {}\nx0 = y0 = {}\nz0 = {}\nx0 isolating interval: {}\nMarkov residual: {:?}\nin Teichmuller space: {}\n",
            s.quintic.pretty("x"),
            s.real_roots,
            s.x0.to_decimal(digits),
            zs,
            Interval::new(s.x0.isolating().lo.clone(), s.x0.isolating().hi.clone()).format_raw(digits),
            s.certificate.residual,
            if member { "certified" } else { "no" }
        )
    };
    Ok(Outcome::with_status(out, member))
}

fn galois(cfg: &RunConfig, p: &UniPoly) -> Result<Outcome, LabError> {
    let cert = galois_cycle_types(p, cfg.prime_bound)?;
    let known = cert.conclusion != GaloisConclusion::Unknown;
    Ok(Outcome::with_status(report(cfg, cert.to_string()), known))
}

fn nonarith(cfg: &RunConfig, p: &UniPoly) -> Result<Outcome, LabError> {
    let r = non_arithmeticity_report(p, cfg.prime_bound)?;
    let decided = r.verdict != ArithmeticityVerdict::NotCertified;
    Ok(Outcome::with_status(report(cfg, r.to_string()), decided))
}

fn salem_outcome(cfg: &RunConfig, v: SalemVerdict) -> Outcome {
    let decided = !matches!(v.status, SalemStatus::Inconclusive(_));
    Outcome::with_status(report(cfg, v.to_string()), decided)
}

fn oracle(cfg: &RunConfig, n: usize, maxlen: usize) -> Result<Outcome, LabError> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let r = matrix_trace_oracle(&mut rng, n, maxlen, 1e-9);
    let mut out = String::new();
    if !cfg.machine() {
        out.push_str(&format!("samples: {}\n", r.samples));
        out.push_str(&format!(
            "max relative error: {:.3e}\n",
            r.max_relative_error
        ));
        out.push_str(&format!("mismatches: {}\n", r.mismatches.len()));
        if let Some(m) = r.mismatches.first() {
            out.push_str(&format!(
                "first mismatch: {} symbolic {} numeric {}\n",
                m.word, m.symbolic, m.numeric
            ));
        }
        out.push_str(&format!(
            "tr(abAB) = X^2 + Y^2 + Z^2 - X*Y*Z - 2: {}\n",
            if r.commutator_symbolic { "yes" } else { "no" }
        ));
    }
    out.push_str(&format!(
        "verdict: {}\n",
        if r.passed() { "pass" } else { "fail" }
    ));
    Ok(Outcome::with_status(out, r.passed()))
}

fn variety(cfg: &RunConfig, cmd: &VarietyCommand) -> Result<Outcome, LabError> {
    match cmd {
        VarietyCommand::Check { poly, words, point } => {
            let f = VarietyPolynomial::parse(poly)?;
            let tuple = WordTuple(read_words(words)?);
            let residual = symbolic_residual(&f, &tuple)?;
            let mut out = String::new();
            if !cfg.machine() {
                out.push_str(&format!("polynomial: {f}\ntuple: {tuple}\n"));
                out.push_str(&format!("symbolic residual: {residual}\n"));
            }
            let symbolic = if residual.is_zero() {
                "zero"
            } else {
                "nonzero"
            };
            out.push_str(&format!("identity: {symbolic}\n"));
            let mut decided = true;
            if let Some(p) = point {
                let pt = read_point(p)?;
                let m = numeric_member(&f, &tuple, &pt, &cfg.numeric())?;
                decided = m != Membership::Undecided;
                out.push_str(&format!("verdict: {m}\n"));
            }
            Ok(Outcome::with_status(out, decided))
        }
        VarietyCommand::IdentitySuite { n, maxlen, poly } => {
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
            let r = match poly {
                Some(text) => {
                    let f = VarietyPolynomial::parse_with_arity(text, 4)?;
                    trace_identity_suite_with(&f, &mut rng, *n, *maxlen)?
                }
                None => trace_identity_suite(&mut rng, *n, *maxlen),
            };
            Ok(Outcome::with_status(report(cfg, r.to_string()), r.passed()))
        }
        VarietyCommand::ThmA {
            gens,
            minpoly,
            point,
        } => {
            let gens = read_words(gens)?;
            let minpolys = read_minpolys(minpoly)?;
            let pt = read_point(point)?;
            let r = theorem_a_check(&gens, &minpolys, &pt, &cfg.numeric(), cfg.prime_bound)?;
            Ok(Outcome::with_status(
                report(cfg, r.to_string()),
                r.satisfied(),
            ))
        }
    }
}

//! The end-to-end reproduction behind `verify-paper`.

use std::cmp::Ordering;

use fricke_core::algebraic::{
    galois_cycle_types, non_arithmeticity_report, ArithmeticityVerdict, GaloisConclusion,
};
use fricke_core::fricke::{
    eliminate_by_resultants, eliminate_paper_system, in_teichmuller, solve_paper_system,
    FrickePoint, SolvedPoint, ResidualCheck,
};
use fricke_core::interval::decimal_floor;
use fricke_core::poly::{irreducible_over_q, Irreducibility, UniPoly, PATTERN_QUINTIC};
use fricke_core::variety::{pattern_member, trace_identity_suite, Membership, NumericConfig};
use fricke_core::words::{parse_word, Word};
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::config::RunConfig;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Stage {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub stages: Vec<Stage>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.stages.iter().all(|s| s.passed)
    }

    pub fn failed(&self) -> Vec<&'static str> {
        self.stages
            .iter()
            .filter(|s| !s.passed)
            .map(|s| s.name)
            .collect()
    }

    pub fn render(&self, machine: bool) -> String {
        let mut out = String::new();
        for s in &self.stages {
            let status = if s.passed { "pass" } else { "fail" };
            if machine {
                out.push_str(&format!("{}: {status}\n", s.name));
            } else {
                out.push_str(&format!("[{status}] {}: {}\n", s.name, s.detail));
            }
        }
        let verdict = if self.passed() { "pass" } else { "fail" };
        if !machine {
            if self.passed() {
                out.push_str(&format!("all {} stages certified\n", self.stages.len()));
            } else {
                out.push_str(&format!("failing stages: {}\n", self.failed().join(", ")));
            }
        }
        out.push_str(&format!("verdict: {verdict}\n"));
        out
    }
}

fn stage(name: &'static str, passed: bool, detail: impl Into<String>) -> Stage {
    Stage {
        name,
        passed,
        detail: detail.into(),
    }
}

fn word(s: &str) -> Word {
    parse_word(s).expect("literal word")
}

/// The two defining memberships `(a, b)` and `(a², a²b)`.
pub fn defining_patterns(pt: &FrickePoint, cfg: &NumericConfig) -> [Membership; 2] {
    [
        pattern_member(&word("a"), &word("b"), pt, cfg),
        pattern_member(&word("aa"), &word("aab"), pt, cfg),
    ]
}

/// Random exact points on the Markov surface with all coordinates above 2:
/// `x, y` are eighths in `(2, 10)`, `z` the larger Markov root, and every
/// second point has `y = x` so that the first pattern holds.
pub fn sample_markov_points<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Vec<FrickePoint> {
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let x = BigRational::new(rng.gen_range(17..80).into(), 8.into());
        let y = if out.len() % 2 == 0 {
            x.clone()
        } else {
            BigRational::new(rng.gen_range(17..80).into(), 8.into())
        };
        if let Ok(p) = FrickePoint::markov(&x, &y) {
            out.push(p);
        }
    }
    out
}

fn cross_check(solution: &SolvedPoint, cfg: &RunConfig) -> Stage {
    let bits = cfg.precision_bits;
    let enclosed = solution.point.enclose(bits);
    match in_teichmuller(&enclosed, &cfg.numeric().tolerance, bits) {
        Ok(cert) => match cert.residual {
            ResidualCheck::WithinTolerance { width } if cert.is_member() => stage(
                "numeric-cross-check",
                true,
                format!(
                    "{bits}-bit enclosure: coordinates > 2, residual width {} within 2^-96",
                    fricke_core::interval::format_sci(&width, 3)
                ),
            ),
            other => stage(
                "numeric-cross-check",
                false,
                format!("{bits}-bit enclosure rejected: {other:?}"),
            ),
        },
        Err(e) => stage(
            "numeric-cross-check",
            false,
            format!("{bits}-bit enclosure: {e}"),
        ),
    }
}

/// Runs every stage in a fixed order; stages after a failed solve report
/// the missing prerequisite instead of aborting.
pub fn verify_paper(cfg: &RunConfig) -> VerifyReport {
    let mut stages = Vec::new();
    let expected = UniPoly::from_i64s(&PATTERN_QUINTIC);

    let sub = eliminate_paper_system();
    let res = eliminate_by_resultants();
    stages.push(stage(
        "elimination",
        sub == expected && res == expected,
        format!(
            "substitution {sub}, resultants {res}; expected {}",
            expected.pretty("x")
        ),
    ));

    let solution = solve_paper_system(&cfg.precision());
    match &solution {
        Ok(s) => {
            stages.push(stage(
                "sturm-uniqueness",
                s.real_roots == 1,
                format!("{} real root(s) over (-inf, inf)", s.real_roots),
            ));
            let fine = s.x0.refine(&BigRational::new(1.into(), 1_000_000.into()));
            let iv = fine.isolating();
            let (lo, hi) = (decimal_floor(&iv.lo, 5), decimal_floor(&iv.hi, 5));
            stages.push(stage(
                "root-value",
                lo == "2.91330" && hi == "2.91330",
                format!(
                    "x0 in [{}, {}]",
                    decimal_floor(&iv.lo, 8),
                    decimal_floor(&iv.hi, 8)
                ),
            ));
            let y_is_x = s.point.x() == s.point.y();
            stages.push(stage(
                "teichmuller",
                y_is_x
                    && s.certificate.is_member()
                    && s.certificate.residual == ResidualCheck::ExactZero,
                format!(
                    "y0 = x0 = {} > 2, z0 = {} > 2, Markov residual exactly zero",
                    s.x0.to_decimal(12),
                    z_decimal(&s.point)
                ),
            ));
            stages.push(cross_check(s, cfg));
        }
        Err(e) => {
            for name in [
                "sturm-uniqueness",
                "root-value",
                "teichmuller",
                "numeric-cross-check",
            ] {
                stages.push(stage(name, false, format!("solve failed: {e}")));
            }
        }
    }

    let irr = irreducible_over_q(&expected, cfg.prime_bound);
    stages.push(match &irr {
        Ok(Irreducibility::IrreducibleWitness(p)) => {
            stage("irreducibility", true, format!("irreducible mod {p}"))
        }
        Ok(other) => stage(
            "irreducibility",
            false,
            format!("no witness up to {}: {other:?}", cfg.prime_bound),
        ),
        Err(e) => stage("irreducibility", false, e.to_string()),
    });

    stages.push(match galois_cycle_types(&expected, cfg.prime_bound) {
        Ok(c) => {
            let detail = format!(
                "{} (5-cycle mod {}, transposition pattern mod {})",
                c.conclusion,
                opt(c.n_cycle_prime),
                opt(c.transposition_prime)
            );
            stage(
                "galois",
                c.conclusion == GaloisConclusion::FullSymmetric(5),
                detail,
            )
        }
        Err(e) => stage("galois", false, e.to_string()),
    });

    stages.push(match non_arithmeticity_report(&expected, cfg.prime_bound) {
        Ok(r) => stage(
            "non-arithmeticity",
            r.verdict == ArithmeticityVerdict::NonArithmetic,
            r.lines.last().cloned().unwrap_or_default(),
        ),
        Err(e) => stage("non-arithmeticity", false, e.to_string()),
    });

    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let suite = trace_identity_suite(&mut rng, 200, 10);
    stages.push(stage(
        "trace-identity",
        suite.passed(),
        format!(
            "X1*X2 - X3 - X4 on (u, v, uv, uv^-1): {} samples, {} failures (seed {})",
            suite.samples,
            suite.failures.len(),
            cfg.seed
        ),
    ));

    match &solution {
        Ok(s) => {
            let numeric = cfg.numeric();
            let [m1, m2] = defining_patterns(&s.point, &numeric);
            stages.push(stage(
                "patterns",
                m1 == Membership::In && m2 == Membership::In,
                format!("(a, b): {m1}, (a^2, a^2 b): {m2}"),
            ));
            let points = sample_markov_points(&mut rng, 100);
            let satisfied = points
                .iter()
                .filter(|p| defining_patterns(p, &numeric) == [Membership::In, Membership::In])
                .count();
            stages.push(stage(
                "uniqueness-sampling",
                satisfied == 0,
                format!(
                    "{satisfied} of {} other Markov points satisfy both patterns",
                    points.len()
                ),
            ));
        }
        Err(e) => {
            for name in ["patterns", "uniqueness-sampling"] {
                stages.push(stage(name, false, format!("solve failed: {e}")));
            }
        }
    }

    VerifyReport { stages }
}

fn opt(p: Option<u64>) -> String {
    p.map_or_else(|| "-".into(), |p| p.to_string())
}

fn z_decimal(pt: &FrickePoint) -> String {
    let z = pt.z().enclosure(60);
    match z.cmp_rational(&BigRational::from_integer(2.into())) {
        Some(Ordering::Greater) => decimal_floor(&z.lo().clone(), 12),
        _ => format!("{z}"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn samples_have_the_requested_shape() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let pts = sample_markov_points(&mut rng, 6);
        assert_eq!(pts.len(), 6);
        assert_eq!(pts[0].x(), pts[0].y());
    }
}

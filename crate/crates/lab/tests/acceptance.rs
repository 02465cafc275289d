//! One line per acceptance criterion: `criterion N: pass|fail (...)`.
//! Exits nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use fricke_core::algebraic::{
    galois_cycle_types, inverse_salem_transform, is_geometric_salem, is_salem,
    non_arithmeticity_report, salem_transform, ArithmeticityVerdict, GaloisConclusion, SalemStatus,
};
use fricke_core::fricke::{
    eliminate_by_resultants, eliminate_paper_system, in_teichmuller, solve_paper_system,
    ResidualCheck,
};
use fricke_core::interval::{decimal_floor, pow2};
use fricke_core::poly::{
    irreducible_over_q, sturm_count, Bound, Irreducibility, UniPoly, PATTERN_QUINTIC,
};
use fricke_core::variety::{
    trace_identity_suite, trace_identity_suite_with, Membership, NumericConfig, VarietyPolynomial,
};
use fricke_lab::oracle::matrix_trace_oracle;
use fricke_lab::verify::{defining_patterns, sample_markov_points};
use fricke_lab::{run, RunConfig};
use num_rational::BigRational;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

struct Outcome {
    passed: bool,
    detail: String,
    budget: Option<Duration>,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        passed,
        detail: detail.into(),
        budget: None,
    }
}

impl Outcome {
    fn within(mut self, secs: u64) -> Self {
        self.budget = Some(Duration::from_secs(secs));
        self
    }
}

fn quintic() -> UniPoly {
    UniPoly::from_i64s(&PATTERN_QUINTIC)
}

fn criterion_1() -> Outcome {
    let sub = eliminate_paper_system();
    let res = eliminate_by_resultants();
    let mut out = Vec::new();
    let code = run(["fricke-lab", "quintic"], &mut out, &mut Vec::new());
    let printed = String::from_utf8(out).unwrap();
    outcome(
        sub == quintic() && res == quintic() && code == 0 && printed == "poly: -4 4 3 -4 -2 1\n",
        format!("quintic prints {}", printed.trim()),
    )
    .within(1)
}

fn criterion_2() -> Outcome {
    let q = quintic();
    let count = sturm_count(&q, &Bound::NegInf, &Bound::PosInf).unwrap();
    let s = solve_paper_system(&BigRational::new(1.into(), 1_000_000.into())).unwrap();
    let iv = s.x0.isolating();
    let ok = count == 1
        && decimal_floor(&iv.lo, 5) == "2.91330"
        && decimal_floor(&iv.hi, 5) == "2.91330";
    outcome(
        ok,
        format!(
            "{count} real root, x0 in [{}, {}]",
            decimal_floor(&iv.lo, 7),
            decimal_floor(&iv.hi, 7)
        ),
    )
    .within(1)
}

fn criterion_3() -> Outcome {
    let s = solve_paper_system(&pow2(-128)).unwrap();
    let exact = s.certificate.is_member()
        && s.certificate.residual == ResidualCheck::ExactZero
        && s.point.x() == s.point.y();
    let enclosed = in_teichmuller(&s.point.enclose(128), &pow2(-96), 128);
    let (numeric, width) = match &enclosed {
        Ok(c) => match &c.residual {
            ResidualCheck::WithinTolerance { width } => {
                (c.is_member() && width < &pow2(-96), width.clone())
            }
            _ => (false, pow2(0)),
        },
        Err(_) => (false, pow2(0)),
    };
    outcome(
        exact && numeric,
        format!(
            "y0 = x0 > 2, z0 > 2, exact residual 0, 128-bit residual width {}",
            fricke_core::interval::format_sci(&width, 3)
        ),
    )
}

fn criterion_4() -> Outcome {
    let q = quintic();
    let witness = irreducible_over_q(&q, 200).unwrap();
    let cert = galois_cycle_types(&q, 500).unwrap();
    let report = non_arithmeticity_report(&q, 500).unwrap();
    let ok = matches!(witness, Irreducibility::IrreducibleWitness(p) if p <= 200)
        && cert.n_cycle_prime.is_some()
        && cert.transposition_prime.is_some()
        && cert.conclusion == GaloisConclusion::FullSymmetric(5)
        && report.verdict == ArithmeticityVerdict::NonArithmetic
        && report
            .lines
            .iter()
            .any(|l| l == "non-arithmetic: certified");
    outcome(
        ok,
        format!(
            "{witness:?}, 5-cycle mod {:?}, transposition pattern mod {:?}, {}",
            cert.n_cycle_prime, cert.transposition_prime, cert.conclusion
        ),
    )
    .within(5)
}

fn criterion_5() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let good = trace_identity_suite(&mut rng, 200, 10);
    let broken = VarietyPolynomial::parse_with_arity("X1*X2 - X3", 4).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let bad = trace_identity_suite_with(&broken, &mut rng, 200, 10).unwrap();
    outcome(
        good.passed() && !bad.passed(),
        format!(
            "{} samples with 0 failures; broken polynomial fails {} of {}",
            good.samples,
            bad.failures.len(),
            bad.samples
        ),
    )
    .within(30)
}

fn criterion_6() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let r = matrix_trace_oracle(&mut rng, 1000, 12, 1e-9);
    outcome(
        r.passed(),
        format!(
            "{} words, {} mismatches, max relative error {:.2e}, commutator identity {}",
            r.samples,
            r.mismatches.len(),
            r.max_relative_error,
            if r.commutator_symbolic {
                "holds"
            } else {
                "FAILS"
            }
        ),
    )
    .within(60)
}

fn criterion_7() -> Outcome {
    let cfg = NumericConfig::default();
    let s = solve_paper_system(&pow2(-64)).unwrap();
    let at_solution = defining_patterns(&s.point, &cfg);
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let points = sample_markov_points(&mut rng, 100);
    let above_two = points.iter().all(|p| {
        p.coordinates().iter().all(|c| {
            c.cmp_rational(&BigRational::from_integer(2.into()))
                == Some(std::cmp::Ordering::Greater)
        })
    });
    let both = points
        .iter()
        .filter(|p| defining_patterns(p, &cfg) == [Membership::In, Membership::In])
        .count();
    outcome(
        at_solution == [Membership::In, Membership::In] && above_two && both == 0,
        format!(
            "solved point: {:?}; {both} of {} sampled points satisfy both",
            at_solution,
            points.len()
        ),
    )
}

fn criterion_8() -> Outcome {
    let p = |c: &[i64]| UniPoly::from_i64s(c);
    let geo = is_geometric_salem(&p(&[-3, -1, 1])).unwrap().status;
    let transform = salem_transform(&p(&[-3, -1, 1]));
    let salem = is_salem(&transform).unwrap().status;
    let cyclo = is_salem(&p(&[1, 1, 1, 1, 1])).unwrap().status;
    let quint = is_geometric_salem(&quintic()).unwrap().status;
    let mut round_trips = 0;
    let mut round_trip_ok = true;
    for b in -9..=9 {
        for a in -9..=9 {
            for c in -9..=9 {
                if c == 0 {
                    continue;
                }
                let h = p(&[a, b, c]);
                if is_geometric_salem(&h).unwrap().status == SalemStatus::GeometricSalem {
                    round_trips += 1;
                    round_trip_ok &= inverse_salem_transform(&salem_transform(&h)) == Some(h);
                }
            }
        }
    }
    let ok = geo == SalemStatus::GeometricSalem
        && transform == p(&[1, -1, -1, -1, 1])
        && salem == SalemStatus::Salem
        && matches!(cyclo, SalemStatus::NotSalem(_))
        && matches!(quint, SalemStatus::NotSalem(_))
        && round_trip_ok
        && round_trips > 0;
    outcome(
        ok,
        format!(
            "x^2-x-3 {}, transform {}, cyclotomic {}, quintic {}, {round_trips} quadratic round trips",
            geo.token(),
            salem.token(),
            cyclo.token(),
            quint.token()
        ),
    )
}

fn criterion_9() -> Outcome {
    let args = ["fricke-lab", "--machine", "--seed", "42", "verify-paper"];
    let mut first = Vec::new();
    let mut second = Vec::new();
    let c1 = run(args, &mut first, &mut Vec::new());
    let c2 = run(args, &mut second, &mut Vec::new());
    let text = String::from_utf8(first.clone()).unwrap();
    let stages = text.lines().filter(|l| l.ends_with(": pass")).count();
    let all_pass = text.lines().all(|l| l.ends_with(": pass"));
    let default_cfg = RunConfig::default();
    outcome(
        c1 == 0 && c2 == 0 && first == second && all_pass,
        format!(
            "exit {c1}, {stages} lines passing, byte-identical reruns: {}, seed {}",
            first == second,
            default_cfg.seed
        ),
    )
}

fn main() -> ExitCode {
    let criteria: [(u32, fn() -> Outcome); 9] = [
        (1, criterion_1),
        (2, criterion_2),
        (3, criterion_3),
        (4, criterion_4),
        (5, criterion_5),
        (6, criterion_6),
        (7, criterion_7),
        (8, criterion_8),
        (9, criterion_9),
    ];
    let mut failures = 0;
    for (n, check) in criteria {
        let start = Instant::now();
        let o = check();
        let elapsed = start.elapsed();
        let in_budget = o.budget.is_none_or(|b| elapsed <= b);
        let passed = o.passed && in_budget;
        if !passed {
            failures += 1;
        }
        let budget = o
            .budget
            .map_or_else(String::new, |b| format!(" of {}s budget", b.as_secs()));
        println!(
            "criterion {n}: {} ({}; {:.3}s{budget})",
            if passed { "pass" } else { "fail" },
            o.detail,
            elapsed.as_secs_f64()
        );
    }
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

//! Acceptance criteria, one line each: `[PASS]` or `[FAIL]`, the measured
//! time against its budget, and a short detail. Exits nonzero if any fails.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use isospec::operators::closed_form::hermite_explicit;
use isospec::operators::{build_e2, preset_classical, ClassicalFamily};
use isospec::oracles::{reference_polynomial, FamilySpec};
use isospec::representations::{
    backward_difference, forward_difference, lattice_a, lattice_b, quasi_monomial, realize_lattice,
};
use isospec::scalar::int;
use isospec::spectral::{abs, eigen_residual, matrix_on_basis, substitute_quasi, Realization};
use isospec::verify::{run_suite, standard_deltas, Suite, SuiteReport, DEFAULT_SEED};
use isospec::{BasisTag, Poly, Rational, ShiftOperator};

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome { passed, detail: detail.into() }
}

fn from_suite(r: &SuiteReport, expected_checks: usize) -> Outcome {
    let failures: Vec<&str> = r.checks.iter().filter(|c| !c.passed).map(|c| c.name.as_str()).collect();
    let count_ok = r.checks.len() == expected_checks;
    let detail = if failures.is_empty() {
        format!("{}/{} checks", r.passed(), r.checks.len())
    } else {
        format!("{}/{} checks; first failure: {}", r.passed(), r.checks.len(), failures[0])
    };
    outcome(failures.is_empty() && count_ok, detail)
}

fn criterion(id: u32, title: &str, budget: Option<Duration>, f: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let o = f();
    let elapsed = start.elapsed();
    let in_budget = budget.is_none_or(|b| elapsed < b);
    let passed = o.passed && in_budget;
    let budget_text = budget.map_or(String::new(), |b| format!(" (limit {:.0} s)", b.as_secs_f64()));
    println!(
        "criterion {id:>2} [{}] {title}: {} | {:.3} s{budget_text}",
        if passed { "PASS" } else { "FAIL" },
        o.detail,
        elapsed.as_secs_f64()
    );
    passed
}

fn secs(s: u64) -> Option<Duration> {
    Some(Duration::from_secs(s))
}

fn heisenberg_commutator() -> Outcome {
    let ok = standard_deltas().into_iter().all(|d| {
        lattice_a(&d).commutator(&lattice_b(&d)).unwrap() == ShiftOperator::identity(d.clone())
    });
    outcome(ok, "[a,b] = 1 exactly for delta in {1, -1, 1/2, 3/7}")
}

fn difference_identity() -> Outcome {
    let ok = standard_deltas().into_iter().all(|d| {
        let (dp, dm) = (forward_difference(&d), backward_difference(&d));
        dp.sub(&dm).unwrap() == dm.compose(&dp).unwrap().scale(d.value())
    });
    outcome(ok, "D+ - D- = delta D- D+ exactly for all four grid steps")
}

fn ladder_actions() -> Outcome {
    let ok = standard_deltas().into_iter().all(|d| {
        let (a, b) = (lattice_a(&d), lattice_b(&d));
        (0..=20usize).all(|n| {
            let xn = quasi_monomial(n, &d);
            let lowered = if n == 0 { Poly::zero() } else { quasi_monomial(n - 1, &d).scale(&int(n as i64)) };
            a.apply(&xn) == lowered && b.apply(&xn) == quasi_monomial(n + 1, &d)
        })
    });
    outcome(ok, "a x^(n) = n x^(n-1), b x^(n) = x^(n+1) for n <= 20")
}

fn discrete_hermite() -> Outcome {
    let h = build_e2(&preset_classical::<Rational>(&ClassicalFamily::Hermite).unwrap());
    let spec = FamilySpec::from(&ClassicalFamily::<Rational>::Hermite);
    let m = matrix_on_basis(&Realization::Continuum(&h), &BasisTag::Monomial, 10, true).unwrap();
    let diag = m.diagonal();
    let mut ok = true;
    for d in standard_deltas() {
        let lattice = realize_lattice(&h, &d);
        ok &= lattice == hermite_explicit(&d);
        for (k, lambda) in diag.iter().enumerate() {
            let phi = substitute_quasi(&reference_polynomial(&spec, k).unwrap(), &d).to_monomial();
            ok &= eigen_residual(&lattice, &phi, lambda).is_zero();
            ok &= abs(lambda) == int::<Rational>(2 * k as i64);
        }
    }
    let signs: Vec<String> = diag.iter().take(4).map(|l| l.to_string()).collect();
    outcome(
        ok,
        format!(
            "stencil exact, H_k residual zero for k <= 10, |lambda_k| = 2k; computed lambda = {}, ... \
             (negative: the operator d^2 - 2x d has eigenvalue -2k, not +2k)",
            signs.join(", ")
        ),
    )
}

fn determinism() -> Outcome {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_isospec"))
            .args(["verify", "--suite", "all", "--seed", "7"])
            .env_remove("ISOSPEC_SEED")
            .output()
            .expect("binary runs")
    };
    let (first, second) = (run(), run());
    let same = first.stdout == second.stdout && !first.stdout.is_empty();
    let ok = same && first.status.success() && second.status.success();
    outcome(ok, format!("two runs, {} bytes each, identical = {same}", first.stdout.len()))
}

fn main() -> ExitCode {
    // The randomized suites run at their default draw counts: 20 (E2 closed
    // form), 20 per stencil family, 50 isospectral trials, 10 per spin.
    let seed = DEFAULT_SEED;
    let results = [
        criterion(1, "Heisenberg commutator on the lattice", secs(1), heisenberg_commutator),
        criterion(2, "D+ - D- = delta D- D+", None, difference_identity),
        criterion(3, "ladder actions n <= 20", None, ladder_actions),
        criterion(4, "five-point E2 closed form, 20 draws", secs(5), || {
            from_suite(&run_suite(Suite::E2ClosedForm, seed, None), 20)
        }),
        criterion(5, "stencil widths 5 / 7 / 3, 20 draws each", None, || {
            from_suite(&run_suite(Suite::Stencils, seed, None), 60)
        }),
        criterion(6, "isospectrality, 50 random E2, d = 12", secs(30), || {
            from_suite(&run_suite(Suite::Isospectral, seed, None), 50)
        }),
        criterion(7, "discrete Hermite", None, discrete_hermite),
        criterion(8, "Hahn / Meixner / Charlier presets vs reference, k <= 8", secs(10), || {
            let r = run_suite(Suite::Presets, seed, None);
            from_suite(&r, 32)
        }),
        criterion(9, "QES closure and block isospectrality, n = 1..6, 10 draws", None, || {
            from_suite(&run_suite(Suite::Qes, seed, None), 120)
        }),
        criterion(10, "verify --suite all --seed 7 is byte-identical", None, determinism),
    ];
    let passed = results.iter().filter(|&&p| p).count();
    println!("acceptance: {passed}/{} criteria passed", results.len());
    if passed == results.len() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

//! Verification suites over exact rationals: the structural identities of
//! both realizations, stencil shapes, isospectrality, the discrete Hermite
//! family, the discrete special-function presets and the quasi-exactly
//! solvable subspaces.
//!
//! Randomized trials draw from a ChaCha stream keyed by `(seed, suite,
//! trial)`, run in parallel, and are reported in trial order, so a given
//! seed always produces the same report.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{sl2_generator, AlgebraElement, Sl2Kind};
use crate::error::{Error, Result};
use crate::operators::closed_form::{e2_five_point, hermite_explicit, three_point_explicit};
use crate::operators::{
    build_e2, build_t2_qes, build_t_tilde_qes, build_three_point, preset_classical, preset_discrete,
    t_tilde_element, ClassicalFamily, DiscreteFamily, E2Params, QesQuadraticForm, ThreePointParams,
};
use crate::oracles::{projective_equal, recurrence_holds, reference_polynomial, reference_spec, FamilySpec};
use crate::poly::Poly;
use crate::representations::{
    apply_continuum, backward_difference, convert_basis, fock_vector, forward_difference, lattice_a,
    lattice_b, quasi_monomial, realize_lattice, BasisTag, GridStep, Polynomial, ShiftOperator,
};
use crate::scalar::{frac, int, ExactScalar};
use crate::spectral::{
    abs, eigen_residual, eigenpairs_triangular, invariant_subspace_check, isospectral_check,
    matrix_on_basis, stencil_extract, substitute_quasi, Realization,
};
use crate::Rational;

type Q = Rational;

pub const DEFAULT_SEED: u64 = 7;

/// Grid steps exercised by every lattice identity.
pub fn standard_deltas() -> Vec<GridStep<Q>> {
    [(1, 1), (-1, 1), (1, 2), (3, 7)]
        .iter()
        .map(|&(p, q)| GridStep::new(frac(p, q)).expect("nonzero"))
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Suite {
    Heisenberg,
    Representations,
    E2ClosedForm,
    Stencils,
    Isospectral,
    Hermite,
    Presets,
    Qes,
    Oracles,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Heisenberg,
        Suite::Representations,
        Suite::E2ClosedForm,
        Suite::Stencils,
        Suite::Isospectral,
        Suite::Hermite,
        Suite::Presets,
        Suite::Qes,
        Suite::Oracles,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Heisenberg => "heisenberg",
            Suite::Representations => "representations",
            Suite::E2ClosedForm => "e2",
            Suite::Stencils => "stencils",
            Suite::Isospectral => "isospectral",
            Suite::Hermite => "hermite",
            Suite::Presets => "presets",
            Suite::Qes => "qes",
            Suite::Oracles => "oracles",
        }
    }

    /// Number of random draws when the caller does not override it.
    pub fn default_trials(self) -> usize {
        match self {
            Suite::Isospectral => 50,
            Suite::E2ClosedForm | Suite::Stencils | Suite::Representations => 20,
            Suite::Qes => 10,
            _ => 0,
        }
    }

    fn stream(self) -> u64 {
        self as u64 + 1
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Suite selector accepted on the command line; `all` expands to every suite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteSelection(pub Vec<Suite>);

impl FromStr for SuiteSelection {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        if s == "all" {
            return Ok(SuiteSelection(Suite::ALL.to_vec()));
        }
        Suite::ALL
            .iter()
            .find(|x| x.name() == s)
            .map(|&x| SuiteSelection(vec![x]))
            .ok_or_else(|| Error::UnknownName(format!("suite {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl CheckResult {
    fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        CheckResult { name: name.into(), passed, detail: detail.into() }
    }

    fn from_result(name: impl Into<String>, r: Result<String>) -> Self {
        match r {
            Ok(detail) => Self::new(name, true, detail),
            Err(e) => Self::new(name, false, e.to_string()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub trials: usize,
    pub checks: Vec<CheckResult>,
}

impl SuiteReport {
    pub fn passed(&self) -> usize {
        self.checks.iter().filter(|c| c.passed).count()
    }

    pub fn failed(&self) -> usize {
        self.checks.len() - self.passed()
    }

    pub fn ok(&self) -> bool {
        self.failed() == 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifySummary {
    pub seed: u64,
    pub suites: Vec<SuiteReport>,
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub ok: bool,
}

pub fn run(selection: &SuiteSelection, seed: u64, trials: Option<usize>) -> VerifySummary {
    let suites: Vec<SuiteReport> = selection.0.iter().map(|&s| run_suite(s, seed, trials)).collect();
    let total = suites.iter().map(|s| s.checks.len()).sum();
    let passed = suites.iter().map(|s| s.passed()).sum();
    VerifySummary { seed, total, passed, failed: total - passed, ok: total == passed, suites }
}

pub fn run_suite(suite: Suite, seed: u64, trials: Option<usize>) -> SuiteReport {
    let n = trials.unwrap_or_else(|| suite.default_trials());
    let rng = |i: usize| trial_rng(seed, suite, i);
    let checks = match suite {
        Suite::Heisenberg => heisenberg_checks(),
        Suite::Representations => par_trials(n, |i| representation_trial(i, &mut rng(i))),
        Suite::E2ClosedForm => par_trials(n, |i| e2_closed_form_trial(i, &mut rng(i))),
        Suite::Stencils => par_trials(n, |i| stencil_trial(i, &mut rng(i))),
        Suite::Isospectral => par_trials(n, |i| vec![isospectral_trial(i, &mut rng(i))]),
        Suite::Hermite => hermite_checks(),
        Suite::Presets => preset_checks(),
        Suite::Qes => {
            let pairs: Vec<(u32, usize)> = (1..=6).flat_map(|spin| (0..n).map(move |t| (spin, t))).collect();
            pairs
                .par_iter()
                .enumerate()
                .map(|(i, &(spin, t))| qes_trial(spin, t, &mut rng(i)))
                .collect::<Vec<_>>()
                .into_iter()
                .flatten()
                .collect()
        }
        Suite::Oracles => oracle_checks(),
    };
    SuiteReport { suite: suite.name().into(), trials: n, checks }
}

fn trial_rng(seed: u64, suite: Suite, trial: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(suite.stream());
    rng.set_word_pos((trial as u128) << 20);
    rng
}

fn par_trials(n: usize, f: impl Fn(usize) -> Vec<CheckResult> + Sync + Send) -> Vec<CheckResult> {
    (0..n).into_par_iter().map(f).collect::<Vec<_>>().into_iter().flatten().collect()
}

fn show(q: &Q) -> String {
    q.to_fraction_string()
}

pub fn random_rational(rng: &mut impl Rng) -> Q {
    frac(rng.gen_range(-6..=6), rng.gen_range(1..=5))
}

pub fn random_nonzero(rng: &mut impl Rng) -> Q {
    loop {
        let q = random_rational(rng);
        if q != int(0) {
            return q;
        }
    }
}

/// E₂ parameters with every coefficient nonzero.
pub fn random_e2(rng: &mut impl Rng) -> E2Params<Q> {
    E2Params::from_array(std::array::from_fn(|_| random_nonzero(rng)))
}

pub fn random_qes_form(n: u32, rng: &mut impl Rng) -> QesQuadraticForm<Q> {
    QesQuadraticForm::from_array(n, std::array::from_fn(|_| random_nonzero(rng)))
}

pub fn random_three_point(delta: GridStep<Q>, rng: &mut impl Rng) -> ThreePointParams<Q> {
    ThreePointParams::from_array(std::array::from_fn(|_| random_nonzero(rng)), delta)
}

fn random_delta(rng: &mut impl Rng) -> GridStep<Q> {
    let ds = standard_deltas();
    ds[rng.gen_range(0..ds.len())].clone()
}

fn random_element(rng: &mut impl Rng, terms: usize, max_deg: u32) -> AlgebraElement<Q> {
    AlgebraElement::from_terms((0..terms).map(|_| {
        ((rng.gen_range(0..=max_deg), rng.gen_range(0..=max_deg)), random_rational(rng))
    }))
}

fn random_poly(rng: &mut impl Rng, deg: usize) -> Poly<Q> {
    Poly::from_coeffs((0..=deg).map(|_| random_rational(rng)).collect())
}

fn heisenberg_checks() -> Vec<CheckResult> {
    let mut out = Vec::new();
    for d in standard_deltas() {
        let dv = show(d.value());
        let comm = lattice_a(&d).commutator(&lattice_b(&d)).expect("same grid");
        out.push(CheckResult::new(
            format!("lattice [a,b] = 1, delta={dv}"),
            comm == ShiftOperator::identity(d.clone()),
            format!("{} term(s)", comm.point_count()),
        ));
        let (dp, dm) = (forward_difference(&d), backward_difference(&d));
        let lhs = dp.sub(&dm).expect("same grid");
        let rhs = dm.compose(&dp).expect("same grid").scale(d.value());
        out.push(CheckResult::new(format!("D+ - D- = delta D- D+, delta={dv}"), lhs == rhs, ""));
        let (a, b) = (lattice_a(&d), lattice_b(&d));
        let ladder = (0..=20usize).all(|n| {
            let xn = quasi_monomial(n, &d);
            let down = if n == 0 { Poly::zero() } else { quasi_monomial(n - 1, &d).scale(&int(n as i64)) };
            a.apply(&xn) == down && b.apply(&xn) == quasi_monomial(n + 1, &d)
        });
        out.push(CheckResult::new(format!("ladder actions n<=20, delta={dv}"), ladder, ""));
    }
    out.push(CheckResult::new(
        "continuum [a,b] = 1",
        AlgebraElement::<Q>::a().commutator(&AlgebraElement::b()) == AlgebraElement::one(),
        "",
    ));
    let sl2 = (0..=6u32).all(|n| {
        let g = |k| sl2_generator::<Q>(k, n);
        let (jp, j0, jm) = (g(Sl2Kind::Plus), g(Sl2Kind::Zero), g(Sl2Kind::Minus));
        j0.commutator(&jm) == -&jm && j0.commutator(&jp) == jp && jp.commutator(&jm) == j0.scale(&int(-2))
    });
    out.push(CheckResult::new("sl2 relations n=0..6", sl2, ""));
    out
}

fn representation_trial(i: usize, rng: &mut ChaCha8Rng) -> Vec<CheckResult> {
    let u = random_element(rng, 3, 3);
    let v = random_element(rng, 3, 3);
    let d = random_delta(rng);
    let uv = u.mul(&v);
    let p = random_poly(rng, 12);
    let continuum = apply_continuum(&uv, &p) == apply_continuum(&u, &apply_continuum(&v, &p));
    let (lu, lv, luv) = (realize_lattice(&u, &d), realize_lattice(&v, &d), realize_lattice(&uv, &d));
    let lattice = luv.apply(&p) == lu.apply(&lv.apply(&p));
    let quasi = Polynomial::new(BasisTag::QuasiMonomial(d.clone()), random_poly(rng, 15).into_coeffs());
    let round = convert_basis(&quasi, &BasisTag::Monomial)
        .and_then(|m| convert_basis(&m, quasi.basis()))
        .map(|back| back == quasi)
        .unwrap_or(false);
    let n = rng.gen_range(0..=15);
    let fock = fock_vector(n, &d) == quasi_monomial(n, &d);
    vec![
        CheckResult::new(format!("trial {i}: continuum product = composition"), continuum, ""),
        CheckResult::new(format!("trial {i}: lattice homomorphism, delta={}", show(d.value())), lattice, ""),
        CheckResult::new(format!("trial {i}: basis round trip"), round, ""),
        CheckResult::new(format!("trial {i}: fock vector b^{n}|0> = x^({n})"), fock, ""),
    ]
}

fn e2_closed_form_trial(i: usize, rng: &mut ChaCha8Rng) -> Vec<CheckResult> {
    let p = E2Params::from_array(std::array::from_fn(|_| random_rational(rng)));
    let d = random_delta(rng);
    let ok = realize_lattice(&build_e2(&p), &d) == e2_five_point(&p, &d);
    vec![CheckResult::new(
        format!("trial {i}: realized E2 = five-term closed form, delta={}", show(d.value())),
        ok,
        format!("params {:?}", p.to_array().iter().map(show).collect::<Vec<_>>()),
    )]
}

/// Shape of the quasi-exactly-solvable seven-point operator: the shift `−k`
/// coefficient vanishes on `{0, δ, …, (k−1)δ}` (divisible by `x^{(k)}`)
/// and degrees stay within `0, 1, 2, 3, 4, 4, 4` for shifts `+2 … −4`.
pub fn seven_point_structure(s: &ShiftOperator<Q>) -> bool {
    let d = s.delta();
    let max_deg = |k: i64| match k {
        2 => 0,
        1 => 1,
        0 => 2,
        -1 => 3,
        _ => 4,
    };
    s.terms().all(|(k, p)| {
        (-4..=2).contains(&k)
            && p.degree().unwrap_or(0) <= max_deg(k)
            && (0..(-k).max(0)).all(|j| p.eval(&d.times(j)) == int(0))
    })
}

fn stencil_trial(i: usize, rng: &mut ChaCha8Rng) -> Vec<CheckResult> {
    let d = random_delta(rng);
    let dv = show(d.value());
    let e2 = stencil_extract(&realize_lattice(&build_e2(&random_e2(rng)), &d));
    let n = rng.gen_range(0..=6);
    let t2op = realize_lattice(&build_t2_qes(&random_qes_form(n, rng)), &d);
    let t2 = stencil_extract(&t2op);
    let tp = random_three_point(d.clone(), rng);
    let three = build_three_point(&tp);
    let three_ok = three.shifts() == vec![-1, 0, 1] && three == three_point_explicit(&tp);
    vec![
        CheckResult::new(
            format!("trial {i}: generic E2 five points, delta={dv}"),
            e2.shifts == vec![-2, -1, 0, 1, 2],
            format!("shifts {:?}", e2.shifts),
        ),
        CheckResult::new(
            format!("trial {i}: generic T2 (n={n}) seven points, delta={dv}"),
            t2.shifts == vec![-4, -3, -2, -1, 0, 1, 2] && seven_point_structure(&t2op),
            format!("shifts {:?}", t2.shifts),
        ),
        CheckResult::new(
            format!("trial {i}: three-point operator, delta={dv}"),
            three_ok,
            format!("shifts {:?}", three.shifts()),
        ),
    ]
}

fn isospectral_trial(i: usize, rng: &mut ChaCha8Rng) -> CheckResult {
    let ds = standard_deltas();
    let d = ds[i % ds.len()].clone();
    let p = E2Params::from_array(std::array::from_fn(|_| random_rational(rng)));
    let e = build_e2(&p);
    CheckResult::from_result(
        format!("trial {i}: E2 continuum vs lattice, d=12, delta={}", show(d.value())),
        isospectral_check(&e, &d, 12).and_then(|c| {
            if c.verdict {
                Ok(format!("char poly degree {}", c.continuum_char_poly.degree().unwrap_or(0)))
            } else {
                Err(Error::InadmissibleParameter("characteristic polynomials differ".into()))
            }
        }),
    )
}

fn hermite_checks() -> Vec<CheckResult> {
    let h = build_e2(&preset_classical::<Q>(&ClassicalFamily::Hermite).expect("admissible"));
    let spec = FamilySpec::from(&ClassicalFamily::<Q>::Hermite);
    let mut out = Vec::new();
    for d in standard_deltas() {
        let dv = show(d.value());
        let lattice = realize_lattice(&h, &d);
        out.push(CheckResult::new(
            format!("lattice Hermite = explicit display, delta={dv}"),
            lattice == hermite_explicit(&d),
            format!("shifts {:?}", lattice.shifts()),
        ));
        let r = (|| -> Result<String> {
            let m = matrix_on_basis(&Realization::Continuum(&h), &BasisTag::Monomial, 10, true)?;
            let diag = m.diagonal();
            for (k, lambda) in diag.iter().enumerate() {
                let hk = reference_polynomial(&spec, k)?;
                let phi = substitute_quasi(&hk, &d).to_monomial();
                if !eigen_residual(&lattice, &phi, lambda).is_zero() {
                    return Err(Error::InadmissibleParameter(format!("residual nonzero at k={k}")));
                }
                if abs(lambda) != int::<Q>(2 * k as i64) {
                    return Err(Error::InadmissibleParameter(format!("|lambda_{k}| != {}", 2 * k)));
                }
            }
            Ok(format!(
                "eigenvalues {:?} (sign as computed; magnitude 2k)",
                diag.iter().map(show).collect::<Vec<_>>()
            ))
        })();
        out.push(CheckResult::from_result(format!("discrete Hermite k<=10, delta={dv}"), r));
    }
    out
}

/// The discrete preset grid used by the `presets` suite.
pub fn preset_cases() -> Vec<DiscreteFamily<Q>> {
    let mut v = Vec::new();
    for alpha in 0..=2 {
        for beta in 0..=2 {
            for n in 4..=6 {
                v.push(DiscreteFamily::Hahn { alpha: int(alpha), beta: int(beta), n });
            }
        }
    }
    for mu in [frac(1, 2), int(2)] {
        v.push(DiscreteFamily::Meixner { gamma: int(1), mu });
    }
    for mu in [int(1), int(3)] {
        v.push(DiscreteFamily::Charlier { mu });
    }
    v
}

/// Eigenvectors of the preset's lattice matrix against the reference family,
/// up to degree `min(8, N−1)`.
pub fn check_preset(family: &DiscreteFamily<Q>, params: &ThreePointParams<Q>) -> Result<String> {
    let spec = reference_spec(family)
        .ok_or_else(|| Error::InadmissibleParameter(format!("no reference for {}", family.name())))?;
    let d = spec.max_degree().map_or(8, |m| m.min(8));
    let op = build_three_point(params);
    let m = matrix_on_basis(&Realization::Lattice(&op), &BasisTag::QuasiMonomial(params.delta.clone()), d, true)?;
    for (k, (lambda, v)) in eigenpairs_triangular(&m)?.into_iter().enumerate() {
        if lambda != params.diagonal(k) {
            return Err(Error::InadmissibleParameter(format!("diagonal mismatch at k={k}")));
        }
        let r = reference_polynomial(&spec, k)?;
        if !projective_equal(&v.to_monomial(), &r) {
            return Err(Error::InadmissibleParameter(format!("eigenvector k={k} differs from reference")));
        }
    }
    Ok(format!("k=0..={d} projectively equal"))
}

fn describe(f: &DiscreteFamily<Q>) -> String {
    match f {
        DiscreteFamily::Hahn { alpha, beta, n } => format!("hahn alpha={} beta={} N={n}", show(alpha), show(beta)),
        DiscreteFamily::HahnContinued { mu, nu, n } => {
            format!("hahn-continued mu={} nu={} N={n}", show(mu), show(nu))
        }
        DiscreteFamily::Meixner { gamma, mu } => format!("meixner gamma={} mu={}", show(gamma), show(mu)),
        DiscreteFamily::Charlier { mu } => format!("charlier mu={}", show(mu)),
    }
}

fn preset_checks() -> Vec<CheckResult> {
    let mut out: Vec<CheckResult> = preset_cases()
        .par_iter()
        .map(|f| CheckResult::from_result(describe(f), check_preset(f, &preset_discrete(f))))
        .collect();
    let cont = DiscreteFamily::HahnContinued { mu: frac(1, 2), nu: frac(1, 3), n: 5 };
    let p = preset_discrete(&cont);
    let op = build_three_point(&p);
    let r = matrix_on_basis(&Realization::Lattice(&op), &BasisTag::QuasiMonomial(p.delta.clone()), 8, true)
        .and_then(|m| {
            let ok = op.shifts() == vec![-1, 0, 1]
                && m.is_upper_triangular()
                && (0..=8).all(|k| *m.entry(k, k) == p.diagonal(k));
            if ok {
                Ok("three points, triangular, diagonal A1 k^2/delta + A3 k + A5".into())
            } else {
                Err(Error::InadmissibleParameter("structure check failed".into()))
            }
        });
    out.push(CheckResult::from_result(format!("{} (structure)", describe(&cont)), r));
    out
}

fn qes_trial(spin: u32, t: usize, rng: &mut ChaCha8Rng) -> Vec<CheckResult> {
    let d = random_delta(rng);
    let dv = show(d.value());
    let n = spin as usize;
    let block_match = |e: &AlgebraElement<Q>, lattice: &ShiftOperator<Q>| -> Result<String> {
        let c = invariant_subspace_check(Realization::Continuum(e), n)?;
        let l = invariant_subspace_check(Realization::Lattice(lattice), n)?;
        if c.char_poly != l.char_poly {
            return Err(Error::InadmissibleParameter("block characteristic polynomials differ".into()));
        }
        Ok(format!("lattice stencil {:?}", lattice.shifts()))
    };
    let t2 = build_t2_qes(&random_qes_form(spin, rng));
    let t2_lattice = realize_lattice(&t2, &d);
    let a_plus = random_nonzero(rng);
    let tp = random_three_point(d.clone(), rng);
    let tt = t_tilde_element(&a_plus, &tp, spin);
    let tt_lattice = build_t_tilde_qes(&a_plus, &tp, spin);
    vec![
        CheckResult::from_result(
            format!("n={spin} trial {t}: T2 preserves degree<={spin}, blocks isospectral, delta={dv}"),
            block_match(&t2, &t2_lattice),
        ),
        CheckResult::from_result(
            format!("n={spin} trial {t}: T-tilde preserves degree<={spin}, blocks isospectral, delta={dv}"),
            block_match(&tt, &tt_lattice),
        ),
    ]
}

fn oracle_checks() -> Vec<CheckResult> {
    use crate::oracles::ReferenceFamily as F;
    let fams: Vec<F<Q>> = vec![
        F::Hermite,
        F::Laguerre { alpha: frac(1, 2) },
        F::Legendre,
        F::Jacobi { alpha: frac(1, 2), beta: frac(2, 3) },
        F::Hahn { alpha: int(1), beta: int(2), n: 14 },
        F::Meixner { gamma: int(1), mu: frac(1, 2) },
        F::Charlier { mu: int(3) },
    ];
    fams.iter()
        .map(|f| {
            let ok = (0..=12).all(|k| recurrence_holds(f, k).unwrap_or(false));
            CheckResult::new(format!("{} three-term recurrence k<=12", FamilySpec::new(f.clone()).name()), ok, "")
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn selection_parsing() {
        assert_eq!("all".parse::<SuiteSelection>().unwrap().0.len(), Suite::ALL.len());
        assert_eq!("qes".parse::<SuiteSelection>().unwrap().0, vec![Suite::Qes]);
        assert!("nope".parse::<SuiteSelection>().is_err());
    }

    #[test]
    fn heisenberg_suite_passes() {
        let r = run_suite(Suite::Heisenberg, DEFAULT_SEED, None);
        assert!(r.ok(), "{:#?}", r.checks);
    }

    #[test]
    fn trial_streams_are_reproducible() {
        let a: Vec<Q> = (0..5).map(|_| random_rational(&mut trial_rng(3, Suite::Qes, 2))).collect();
        let b: Vec<Q> = (0..5).map(|_| random_rational(&mut trial_rng(3, Suite::Qes, 2))).collect();
        assert_eq!(a, b);
        let c = random_rational(&mut trial_rng(3, Suite::Qes, 3));
        let d = random_rational(&mut trial_rng(4, Suite::Qes, 2));
        assert!(c != a[0] || d != a[0]);
    }
}

//! Matrices, characteristic polynomials, eigenpairs and family generation
//! against hand-computed values and a brute-force determinant.

use isospec::operators::{
    build_e2, build_three_point, preset_classical, preset_discrete, preset_discrete_as_printed,
    t_tilde_element, build_t_tilde_qes, ClassicalFamily, DiscreteFamily, E2Params, ThreePointParams,
};
use isospec::oracles::{projective_equal, reference_polynomial, FamilySpec};
use isospec::representations::realize_lattice;
use isospec::scalar::{frac, int};
use isospec::spectral::{
    char_poly, default_grid, discrete_family, eigen_residual, eigenpairs_triangular, invariant_subspace_check,
    isospectral_check, matrix_on_basis, substitute_quasi, verify_pointwise, OperatorMatrix, Realization,
};
use isospec::verify::{check_preset, preset_cases, random_e2, standard_deltas};
use isospec::{sl2_generator, AlgebraElement, BasisTag, Error, GridStep, Poly, Rational, Sl2Kind};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Q = Rational;

fn q(p: i64) -> Q {
    int(p)
}

fn hermite() -> AlgebraElement<Q> {
    build_e2(&preset_classical(&ClassicalFamily::Hermite).unwrap())
}

fn continuum_matrix(e: &AlgebraElement<Q>, d: usize) -> OperatorMatrix<Q> {
    matrix_on_basis(&Realization::Continuum(e), &BasisTag::Monomial, d, true).unwrap()
}

/// Cofactor expansion of det(λI − M), independent of the library's
/// division-free algorithm.
fn laplace_char_poly(m: &[Vec<Q>]) -> Poly<Q> {
    laplace_minor(m, 0, &(0..m.len()).collect::<Vec<_>>())
}

fn remove(cols: &[usize], j: usize) -> Vec<usize> {
    cols.iter().enumerate().filter(|&(i, _)| i != j).map(|(_, &c)| c).collect()
}

fn laplace_minor(m: &[Vec<Q>], row: usize, cols: &[usize]) -> Poly<Q> {
    if cols.is_empty() {
        return Poly::one();
    }
    let mut total = Poly::zero();
    for (j, &c) in cols.iter().enumerate() {
        let mut e = Poly::constant(-m[row][c].clone());
        if row == c {
            e = &e + &Poly::x();
        }
        let term = &e * &laplace_minor(m, row + 1, &remove(cols, j));
        total = if j % 2 == 0 { &total + &term } else { &total - &term };
    }
    total
}

fn rows(m: &OperatorMatrix<Q>) -> Vec<Vec<Q>> {
    (0..m.size()).map(|i| (0..m.size()).map(|j| m.entry(i, j).clone()).collect()).collect()
}

#[test]
fn hermite_matrix_on_monomials() {
    let m = continuum_matrix(&hermite(), 3);
    assert_eq!(m.diagonal(), vec![q(0), q(-2), q(-4), q(-6)]);
    assert_eq!(*m.entry(0, 2), q(2));
    assert_eq!(*m.entry(1, 3), q(6));
    let off: usize = (0..4).flat_map(|i| (0..4).map(move |j| (i, j))).filter(|&(i, j)| i != j && *m.entry(i, j) != q(0)).count();
    assert_eq!(off, 2);
}

#[test]
fn euler_operator_is_diagonal() {
    let m = continuum_matrix(&sl2_generator(Sl2Kind::Zero, 0), 4);
    assert_eq!(m.diagonal(), (0..5).map(q).collect::<Vec<_>>());
    for (k, (lambda, v)) in eigenpairs_triangular(&m).unwrap().into_iter().enumerate() {
        assert_eq!(lambda, q(k as i64));
        assert_eq!(v.to_monomial(), Poly::monomial(k, q(1)));
    }
}

#[test]
fn hermite_eigenpairs_degree_two() {
    let pairs = eigenpairs_triangular(&continuum_matrix(&hermite(), 2)).unwrap();
    let got: Vec<(Q, Poly<Q>)> = pairs.into_iter().map(|(l, v)| (l, v.to_monomial())).collect();
    assert_eq!(got[0], (q(0), Poly::one()));
    assert_eq!(got[1], (q(-2), Poly::x()));
    assert_eq!(got[2], (q(-4), Poly::from_coeffs(vec![frac(-1, 2), q(0), q(1)])));
    assert_eq!(got[2].1.scale(&q(4)), Poly::from_ints(&[-2, 0, 4]));
}

#[test]
fn char_poly_small_cases() {
    let diag = OperatorMatrix::<Q>::from_rows(
        BasisTag::Monomial,
        vec![vec![q(0), q(0), q(0)], vec![q(0), q(-2), q(0)], vec![q(0), q(0), q(-4)]],
    );
    assert_eq!(char_poly(&diag), Poly::from_ints(&[0, 8, 6, 1]));
    let zero = OperatorMatrix::<Q>::from_rows(BasisTag::Monomial, vec![vec![q(0); 2]; 2]);
    assert_eq!(char_poly(&zero), Poly::monomial(2, q(1)));
}

#[test]
fn char_poly_matches_cofactor_expansion() {
    let hahn = DiscreteFamily::Hahn { alpha: q(0), beta: q(0), n: 3 };
    let p = preset_discrete(&hahn);
    let op = build_three_point(&p);
    let m = matrix_on_basis(&Realization::Lattice(&op), &BasisTag::QuasiMonomial(p.delta.clone()), 2, true).unwrap();
    let product = m.diagonal().iter().fold(Poly::one(), |acc, l| &acc * &Poly::from_coeffs(vec![-l.clone(), q(1)]));
    assert_eq!(char_poly(&m), product);
    assert_eq!(char_poly(&m), laplace_char_poly(&rows(&m)));

    // Dense, non-triangular matrices.
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for n in 1..=5 {
        let entries: Vec<Vec<Q>> =
            (0..n).map(|_| (0..n).map(|_| isospec::verify::random_rational(&mut rng)).collect()).collect();
        let m = OperatorMatrix::from_rows(BasisTag::Monomial, entries.clone());
        assert_eq!(char_poly(&m), laplace_char_poly(&entries), "n={n}");
    }
}

#[test]
fn isospectrality_examples() {
    for d in standard_deltas() {
        assert!(isospectral_check(&hermite(), &d, 10).unwrap().verdict);
    }
    let c = isospectral_check(&AlgebraElement::<Q>::a(), &GridStep::new(q(1)).unwrap(), 5).unwrap();
    assert!(c.verdict);
    assert_eq!(c.continuum_char_poly, Poly::monomial(6, q(1)));
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let d = GridStep::new(frac(3, 7)).unwrap();
    assert!(isospectral_check(&build_e2(&random_e2(&mut rng)), &d, 12).unwrap().verdict);
}

#[test]
fn quasi_substitution() {
    let d = GridStep::new(q(1)).unwrap();
    assert_eq!(substitute_quasi(&Poly::one(), &d).to_monomial(), Poly::one());
    let h2 = substitute_quasi(&Poly::from_ints(&[-2, 0, 4]), &d);
    assert_eq!(h2.coeffs(), Poly::from_ints(&[-2, 0, 4]).coeffs());
    assert_eq!(h2.to_monomial(), Poly::from_ints(&[-2, -4, 4]));
    let half = GridStep::new(frac(1, 2)).unwrap();
    assert_eq!(substitute_quasi(&Poly::monomial(3, q(1)), &half).to_monomial(), Poly::from_coeffs(vec![q(0), frac(1, 2), frac(-3, 2), q(1)]));
}

#[test]
fn pointwise_eigen_check() {
    let d = GridStep::new(frac(1, 2)).unwrap();
    let lattice = realize_lattice(&hermite(), &d);
    let grid = default_grid(&d);
    assert_eq!(grid.len(), 21);
    let phi = substitute_quasi(&Poly::x(), &d).to_monomial();
    assert!(verify_pointwise(&lattice, &phi, &q(-2), &grid));
    assert!(!verify_pointwise(&lattice, &phi, &q(-1), &grid));
    assert!(verify_pointwise(&lattice, &Poly::zero(), &q(17), &grid));
}

#[test]
fn discrete_hermite_family() {
    let one = GridStep::new(q(1)).unwrap();
    let rows = discrete_family(&ClassicalFamily::Hermite, &one, 6).unwrap();
    assert!(rows.iter().all(|r| r.verified));
    assert_eq!(rows[0].discrete_monomial, Poly::one());
    assert_eq!(rows[2].discrete_monomial, Poly::from_ints(&[-2, -4, 4]));
    let half = discrete_family(&ClassicalFamily::Hermite, &GridStep::new(frac(1, 2)).unwrap(), 6).unwrap();
    assert_eq!(rows[3].discrete.coeffs(), half[3].discrete.coeffs());
    for r in &rows {
        assert_eq!(r.eigenvalue, q(-2 * r.k as i64));
    }
}

#[test]
fn classical_families_on_every_grid() {
    let fams = [
        ClassicalFamily::Hermite,
        ClassicalFamily::Laguerre { alpha: frac(1, 2) },
        ClassicalFamily::Legendre,
        ClassicalFamily::Jacobi { alpha: frac(1, 3), beta: q(2) },
    ];
    for f in &fams {
        let spec = FamilySpec::from(f);
        for d in standard_deltas() {
            let rows = discrete_family(f, &d, 8).unwrap();
            for r in &rows {
                assert!(r.verified, "{} k={}", f.name(), r.k);
                assert_eq!(r.continuum, reference_polynomial(&spec, r.k).unwrap(), "{} k={}", f.name(), r.k);
            }
        }
    }
}

#[test]
fn eigenfunction_correspondence_for_random_operators() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for (i, d) in standard_deltas().into_iter().cycle().take(12).enumerate() {
        let p = random_e2(&mut rng);
        let e = build_e2(&p);
        let m = continuum_matrix(&e, 8);
        for k in 0..=8 {
            assert_eq!(*m.entry(k, k), p.diagonal(k), "trial {i}");
        }
        let Ok(pairs) = eigenpairs_triangular(&m) else { continue };
        let lattice = realize_lattice(&e, &d);
        for (lambda, v) in pairs {
            let phi = substitute_quasi(&v.to_monomial(), &d).to_monomial();
            assert!(verify_pointwise(&lattice, &phi, &lambda, &default_grid(&d)));
            assert!(eigen_residual(&lattice, &phi, &lambda).is_zero());
        }
    }
}

#[test]
fn degenerate_spectrum_is_refused() {
    let e = build_e2(&E2Params::from_array([q(1), q(0), q(0), q(1), q(0), q(0)]));
    // diagonal −k(k−1) + k repeats: k=0 and k=2 both give 0.
    let m = continuum_matrix(&e, 3);
    assert!(matches!(eigenpairs_triangular(&m), Err(Error::DegenerateSpectrum { .. })));
}

#[test]
fn three_point_diagonal_and_triangularity() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for d in standard_deltas() {
        let p = isospec::verify::random_three_point(d.clone(), &mut rng);
        let op = build_three_point(&p);
        let m = matrix_on_basis(&Realization::Lattice(&op), &BasisTag::QuasiMonomial(d), 8, true).unwrap();
        assert!(m.is_upper_triangular());
        for k in 0..=8 {
            assert_eq!(*m.entry(k, k), p.diagonal(k));
        }
    }
}

#[test]
fn all_presets_are_triangular() {
    for f in [
        ClassicalFamily::Hermite,
        ClassicalFamily::Laguerre { alpha: q(0) },
        ClassicalFamily::Legendre,
        ClassicalFamily::Jacobi { alpha: q(1), beta: q(2) },
    ] {
        let e = build_e2(&preset_classical(&f).unwrap());
        assert!(continuum_matrix(&e, 10).is_upper_triangular());
        for d in standard_deltas() {
            let l = realize_lattice(&e, &d);
            let m = matrix_on_basis(&Realization::Lattice(&l), &BasisTag::QuasiMonomial(d), 10, true).unwrap();
            assert!(m.is_upper_triangular());
        }
    }
    let mut discrete = preset_cases();
    discrete.push(DiscreteFamily::HahnContinued { mu: frac(1, 2), nu: frac(1, 3), n: 5 });
    for f in &discrete {
        let p = preset_discrete(f);
        let op = build_three_point(&p);
        let m = matrix_on_basis(&Realization::Lattice(&op), &BasisTag::QuasiMonomial(p.delta.clone()), 10, true).unwrap();
        assert!(m.is_upper_triangular());
    }
}

#[test]
fn discrete_presets_match_reference_families() {
    for f in preset_cases() {
        check_preset(&f, &preset_discrete(&f)).unwrap_or_else(|e| panic!("{f:?}: {e}"));
    }
}

#[test]
fn printed_hahn_and_meixner_assignments_do_not_reproduce_the_families() {
    let hahn = DiscreteFamily::Hahn { alpha: q(1), beta: q(2), n: 6 };
    let meixner = DiscreteFamily::Meixner { gamma: q(1), mu: frac(1, 2) };
    assert!(check_preset(&hahn, &preset_discrete_as_printed(&hahn)).is_err());
    assert!(check_preset(&meixner, &preset_discrete_as_printed(&meixner)).is_err());
    let charlier = DiscreteFamily::Charlier { mu: q(2) };
    assert_eq!(preset_discrete_as_printed(&charlier), preset_discrete(&charlier));
}

#[test]
fn raising_generator_annihilates_top_vector() {
    let jp = sl2_generator::<Q>(Sl2Kind::Plus, 2);
    assert!(isospec::representations::apply_continuum(&jp, &Poly::monomial(2, q(1))).is_zero());
    assert!(invariant_subspace_check(Realization::Continuum(&jp), 2).is_ok());
    assert!(matches!(
        invariant_subspace_check(Realization::Continuum(&jp), 3),
        Err(Error::DegreeOverflow { .. })
    ));
    let jm = sl2_generator::<Q>(Sl2Kind::Minus, 4);
    for n in 0..6 {
        assert!(invariant_subspace_check(Realization::Continuum(&jm), n).is_ok());
    }
}

#[test]
fn t_tilde_closes_on_its_spin_subspace() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for d in standard_deltas() {
        let p: ThreePointParams<Q> = isospec::verify::random_three_point(d.clone(), &mut rng);
        let a_plus = frac(2, 3);
        let c = invariant_subspace_check(Realization::Continuum(&t_tilde_element(&a_plus, &p, 2)), 2).unwrap();
        let lattice = build_t_tilde_qes(&a_plus, &p, 2);
        let l = invariant_subspace_check(Realization::Lattice(&lattice), 2).unwrap();
        assert_eq!(c.char_poly, l.char_poly);
        assert!(lattice.shifts().iter().all(|s| (-2..=1).contains(s)));
    }
}

#[test]
fn hahn_eigenvectors_against_oracle_explicitly() {
    let f = DiscreteFamily::Hahn { alpha: frac(1, 2), beta: q(1), n: 7 };
    let p = preset_discrete(&f);
    let spec = isospec::oracles::reference_spec(&f).unwrap();
    let op = build_three_point(&p);
    let m = matrix_on_basis(&Realization::Lattice(&op), &BasisTag::QuasiMonomial(p.delta.clone()), 6, true).unwrap();
    for (k, (_, v)) in eigenpairs_triangular(&m).unwrap().into_iter().enumerate() {
        assert!(projective_equal(&v.to_monomial(), &reference_polynomial(&spec, k).unwrap()), "k={k}");
    }
    assert!(reference_polynomial(&spec, 7).is_err());
}

//! Spectra of realized operators: triangular eigen-solves, the isospectrality
//! certificate, stencils, pointwise checks and discrete polynomial families.

pub mod matrix;

use crate::algebra::AlgebraElement;
use crate::error::{Error, Result};
use crate::operators::{build_e2, preset_classical, ClassicalFamily};
use crate::poly::Poly;
use crate::representations::{realize_lattice, BasisTag, GridStep, Polynomial, ShiftOperator};
use crate::scalar::Scalar;

pub use matrix::{char_poly, matrix_on_basis, FnMap, OperatorMatrix, Overflow, PolyMap, Realization};

/// Eigenpairs of an upper-triangular matrix with pairwise distinct diagonal.
/// The degree-`k` eigenvector has leading coordinate one.
pub fn eigenpairs_triangular<T: Scalar>(m: &OperatorMatrix<T>) -> Result<Vec<(T, Polynomial<T>)>> {
    if let Some((row, col)) = m.below_diagonal_nonzero() {
        return Err(Error::NotTriangular { row, col });
    }
    let diag = m.diagonal();
    for i in 0..diag.len() {
        for j in i + 1..diag.len() {
            if diag[i] == diag[j] {
                return Err(Error::DegenerateSpectrum { first: i, second: j });
            }
        }
    }
    let pairs = diag
        .iter()
        .enumerate()
        .map(|(k, lambda)| {
            let mut v = vec![T::zero(); k + 1];
            v[k] = T::one();
            for i in (0..k).rev() {
                let s = (i + 1..=k).fold(T::zero(), |acc, j| acc + m.entry(i, j).clone() * &v[j]);
                v[i] = -s / (diag[i].clone() - lambda);
            }
            (lambda.clone(), Polynomial::new(m.basis.clone(), v))
        })
        .collect();
    Ok(pairs)
}

#[derive(Clone, Debug, PartialEq)]
pub struct SpectralReport<T> {
    pub matrix: OperatorMatrix<T>,
    pub char_poly: Poly<T>,
    pub eigenpairs: Option<Vec<(T, Polynomial<T>)>>,
    pub triangular: bool,
    pub notes: Vec<String>,
    pub warning: Option<String>,
}

/// Characteristic polynomial plus eigenpairs when the matrix allows them.
/// A degenerate or non-triangular matrix yields a report without eigenpairs
/// and a warning, not an error.
pub fn spectral_report<T: Scalar>(matrix: OperatorMatrix<T>) -> SpectralReport<T> {
    let cp = char_poly(&matrix);
    let triangular = matrix.is_upper_triangular();
    let (eigenpairs, warning) = match eigenpairs_triangular(&matrix) {
        Ok(p) => (Some(p), None),
        Err(e) => (None, Some(e.to_string())),
    };
    SpectralReport { matrix, char_poly: cp, eigenpairs, triangular, notes: Vec::new(), warning }
}

#[derive(Clone, Debug, PartialEq)]
pub struct IsospectralityCertificate<T> {
    pub continuum_char_poly: Poly<T>,
    pub lattice_char_poly: Poly<T>,
    pub verdict: bool,
    pub delta: GridStep<T>,
    pub degree_bound: usize,
    pub notes: Vec<String>,
}

/// Builds the continuum matrix (monomials) and the lattice matrix
/// (quasi-monomials on `δ`) independently and compares their characteristic
/// polynomials.
pub fn isospectral_check<T: Scalar>(
    e: &AlgebraElement<T>,
    delta: &GridStep<T>,
    d: usize,
) -> Result<IsospectralityCertificate<T>> {
    let cont = matrix_on_basis(&Realization::Continuum(e), &BasisTag::Monomial, d, true)?;
    let lattice_op = realize_lattice(e, delta);
    let latt = matrix_on_basis(
        &Realization::Lattice(&lattice_op),
        &BasisTag::QuasiMonomial(delta.clone()),
        d,
        true,
    )?;
    let c = char_poly(&cont);
    let l = char_poly(&latt);
    Ok(IsospectralityCertificate {
        verdict: c == l,
        continuum_char_poly: c,
        lattice_char_poly: l,
        delta: delta.clone(),
        degree_bound: d,
        notes: Vec::new(),
    })
}

/// `Σ αₖ xᵏ ↦ Σ αₖ x^{(k)}`: the same coefficients, retagged.
pub fn substitute_quasi<T: Scalar>(p: &Poly<T>, delta: &GridStep<T>) -> Polynomial<T> {
    Polynomial::new(BasisTag::QuasiMonomial(delta.clone()), p.coeffs().to_vec())
}

#[derive(Clone, Debug, PartialEq)]
pub struct Stencil<T> {
    /// Shifts `k` (the point `x + kδ`) in ascending order.
    pub shifts: Vec<i64>,
    pub coeffs: Vec<Poly<T>>,
}

impl<T> Stencil<T> {
    pub fn point_count(&self) -> usize {
        self.shifts.len()
    }
}

pub fn stencil_extract<T: Scalar>(s: &ShiftOperator<T>) -> Stencil<T> {
    let (shifts, coeffs) = s.terms().map(|(k, p)| (k, p.clone())).unzip();
    Stencil { shifts, coeffs }
}

/// `(s·φ)(x) − λφ(x)` as a polynomial.
pub fn eigen_residual<T: Scalar>(s: &ShiftOperator<T>, phi: &Poly<T>, lambda: &T) -> Poly<T> {
    &s.apply(phi) - &phi.scale(lambda)
}

/// `{jδ : j = −10..=10}`
pub fn default_grid<T: Scalar>(delta: &GridStep<T>) -> Vec<T> {
    (-10..=10).map(|j| delta.times(j)).collect()
}

/// Whether `(s·φ)(x) = λφ(x)` at every grid point.
pub fn verify_pointwise<T: Scalar>(s: &ShiftOperator<T>, phi: &Poly<T>, lambda: &T, grid: &[T]) -> bool {
    let r = eigen_residual(s, phi, lambda);
    grid.iter().all(|x| r.eval(x).is_zero())
}

#[derive(Clone, Debug, PartialEq)]
pub struct FamilyRow<T> {
    pub k: usize,
    pub eigenvalue: T,
    /// Continuum eigenfunction in the standard normalization.
    pub continuum: Poly<T>,
    /// The discrete polynomial, coefficients on the quasi-monomial basis.
    pub discrete: Polynomial<T>,
    /// The discrete polynomial expanded in monomials.
    pub discrete_monomial: Poly<T>,
    pub verified: bool,
}

/// Discrete analogues of a classical family on the grid `δ`: continuum
/// eigenfunctions with monomials replaced by quasi-monomials, each checked
/// against the lattice operator on [`default_grid`] and as a polynomial
/// identity.
pub fn discrete_family<T: Scalar>(
    family: &ClassicalFamily<T>,
    delta: &GridStep<T>,
    k_max: usize,
) -> Result<Vec<FamilyRow<T>>> {
    let e = build_e2(&preset_classical(family)?);
    let cont = matrix_on_basis(&Realization::Continuum(&e), &BasisTag::Monomial, k_max, true)?;
    let lattice = realize_lattice(&e, delta);
    let grid = default_grid(delta);
    eigenpairs_triangular(&cont)?
        .into_iter()
        .enumerate()
        .map(|(k, (lambda, v))| {
            let continuum = v.to_monomial().scale(&family.leading_coefficient(k));
            let discrete = substitute_quasi(&continuum, delta);
            let discrete_monomial = discrete.to_monomial();
            let verified = verify_pointwise(&lattice, &discrete_monomial, &lambda, &grid)
                && eigen_residual(&lattice, &discrete_monomial, &lambda).is_zero();
            Ok(FamilyRow { k, eigenvalue: lambda, continuum, discrete, discrete_monomial, verified })
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq)]
pub struct SubspaceReport<T> {
    pub n: usize,
    pub block: OperatorMatrix<T>,
    pub char_poly: Poly<T>,
}

/// Confirms that `op` maps polynomials of degree `≤ n` into themselves and
/// returns the `(n+1)×(n+1)` block in the realization's natural basis. A
/// closure violation comes back as [`Error::DegreeOverflow`] naming the
/// offending degree.
pub fn invariant_subspace_check<T: Scalar>(op: Realization<'_, T>, n: usize) -> Result<SubspaceReport<T>> {
    let block = matrix_on_basis(&op, &op.natural_basis(), n, true)?;
    let cp = char_poly(&block);
    Ok(SubspaceReport { n, block, char_poly: cp })
}

/// `|v|`
pub fn abs<T: Scalar>(v: &T) -> T {
    if *v < T::zero() {
        -v.clone()
    } else {
        v.clone()
    }
}

/// Note attached to Hermite reports: the operator `d² − 2x d` has
/// eigenvalue `−2k` on the degree-`k` polynomial.
pub const HERMITE_SIGN_NOTE: &str = "eigenvalues are reported as computed from h = d^2 - 2x d, i.e. -2k at degree k; \
     the frequently quoted 'lambda_k = 2k' holds for -h";

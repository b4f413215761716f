//! Grid steps, basis tags and the quasi-monomial basis
//! `x^{(n)} = x(x − δ)(x − 2δ)⋯(x − (n−1)δ)`.

use std::fmt;

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::scalar::{int, Scalar};

/// Lattice spacing `δ`. Never zero: the continuum is a separate representation.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GridStep<T>(pub(crate) T);

impl<T: Scalar> GridStep<T> {
    pub fn new(delta: T) -> Result<Self> {
        if delta.is_zero() {
            return Err(Error::ZeroGridStep);
        }
        Ok(GridStep(delta))
    }

    pub fn value(&self) -> &T {
        &self.0
    }

    /// `k·δ`
    pub fn times(&self, k: i64) -> T {
        self.0.clone() * int::<T>(k)
    }

    pub(crate) fn ensure_same(&self, other: &Self) -> Result<()> {
        if self != other {
            return Err(Error::GridMismatch(self.0.to_string(), other.0.to_string()));
        }
        Ok(())
    }
}

impl<T: fmt::Debug> fmt::Debug for GridStep<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "δ={:?}", self.0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum BasisTag<T> {
    Monomial,
    QuasiMonomial(GridStep<T>),
}

impl<T: Scalar> BasisTag<T> {
    pub fn label(&self) -> String {
        match self {
            BasisTag::Monomial => "monomial".into(),
            BasisTag::QuasiMonomial(d) => format!("quasi-monomial({})", d.value()),
        }
    }

    /// Basis element of degree `k`, expanded in monomials.
    pub fn element(&self, k: usize) -> Poly<T> {
        match self {
            BasisTag::Monomial => Poly::monomial(k, T::one()),
            BasisTag::QuasiMonomial(d) => quasi_monomial(k, d),
        }
    }

    /// Coordinates of a monomial-basis polynomial in this basis.
    pub fn coordinates(&self, p: &Poly<T>) -> Vec<T> {
        match self {
            BasisTag::Monomial => p.coeffs().to_vec(),
            BasisTag::QuasiMonomial(d) => monomial_to_quasi(p, d),
        }
    }
}

/// A polynomial expressed in a tagged graded basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial<T> {
    basis: BasisTag<T>,
    coeffs: Poly<T>,
}

impl<T: Scalar> Polynomial<T> {
    pub fn new(basis: BasisTag<T>, coeffs: Vec<T>) -> Self {
        Polynomial {
            basis,
            coeffs: Poly::from_coeffs(coeffs),
        }
    }

    pub fn monomial(p: Poly<T>) -> Self {
        Polynomial {
            basis: BasisTag::Monomial,
            coeffs: p,
        }
    }

    pub fn basis(&self) -> &BasisTag<T> {
        &self.basis
    }

    /// Coefficients with respect to [`Self::basis`].
    pub fn coeffs(&self) -> &[T] {
        self.coeffs.coeffs()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.degree()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_zero()
    }

    /// The same function expanded in monomials.
    pub fn to_monomial(&self) -> Poly<T> {
        match &self.basis {
            BasisTag::Monomial => self.coeffs.clone(),
            BasisTag::QuasiMonomial(d) => quasi_to_monomial(self.coeffs.coeffs(), d),
        }
    }

    /// Coefficient vector reinterpreted in another basis, without conversion.
    pub fn retag(self, basis: BasisTag<T>) -> Self {
        Polynomial { basis, ..self }
    }
}

/// Monomial expansion of `x^{(n)}`, built by `x^{(k+1)} = (x − kδ)·x^{(k)}`.
pub fn quasi_monomial<T: Scalar>(n: usize, delta: &GridStep<T>) -> Poly<T> {
    let mut p = Poly::one();
    for k in 0..n {
        let factor = Poly::from_coeffs(vec![-delta.times(k as i64), T::one()]);
        p = &p * &factor;
    }
    p
}

fn quasi_to_monomial<T: Scalar>(coeffs: &[T], delta: &GridStep<T>) -> Poly<T> {
    let mut out = Poly::zero();
    let mut basis = Poly::one();
    for (k, c) in coeffs.iter().enumerate() {
        if k > 0 {
            let factor = Poly::from_coeffs(vec![-delta.times(k as i64 - 1), T::one()]);
            basis = &basis * &factor;
        }
        if !c.is_zero() {
            out = &out + &basis.scale(c);
        }
    }
    out
}

fn monomial_to_quasi<T: Scalar>(p: &Poly<T>, delta: &GridStep<T>) -> Vec<T> {
    let Some(d) = p.degree() else {
        return Vec::new();
    };
    let mut rest = p.clone();
    let mut out = vec![T::zero(); d + 1];
    for k in (0..=d).rev() {
        let c = rest.coeff(k);
        if c.is_zero() {
            continue;
        }
        // x^{(k)} is monic of degree k
        rest = &rest - &quasi_monomial(k, delta).scale(&c);
        out[k] = c;
    }
    debug_assert!(rest.is_zero());
    out
}

/// Re-express `p` in `target`. Quasi-monomial bases on different grids are
/// rejected.
pub fn convert_basis<T: Scalar>(p: &Polynomial<T>, target: &BasisTag<T>) -> Result<Polynomial<T>> {
    if let (BasisTag::QuasiMonomial(a), BasisTag::QuasiMonomial(b)) = (&p.basis, target) {
        a.ensure_same(b)?;
    }
    if &p.basis == target {
        return Ok(p.clone());
    }
    let mono = p.to_monomial();
    Ok(Polynomial::new(target.clone(), target.coordinates(&mono)))
}

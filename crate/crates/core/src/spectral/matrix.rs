//! Matrices of polynomial operators on graded bases, and their exact
//! characteristic polynomials.

use crate::algebra::AlgebraElement;
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::representations::{apply_continuum, BasisTag, ShiftOperator};
use crate::scalar::Scalar;

/// Anything that maps polynomials (monomial basis) to polynomials.
pub trait PolyMap<T> {
    fn apply_to(&self, p: &Poly<T>) -> Poly<T>;
}

impl<T: Scalar> PolyMap<T> for ShiftOperator<T> {
    fn apply_to(&self, p: &Poly<T>) -> Poly<T> {
        self.apply(p)
    }
}

/// Either realization of an operator, each paired with its natural basis.
#[derive(Clone, Copy, Debug)]
pub enum Realization<'a, T> {
    /// `a = d/dx`, `b = x`, monomial basis.
    Continuum(&'a AlgebraElement<T>),
    /// Shift operator, quasi-monomial basis on its grid.
    Lattice(&'a ShiftOperator<T>),
}

impl<T: Scalar> Realization<'_, T> {
    pub fn natural_basis(&self) -> BasisTag<T> {
        match self {
            Realization::Continuum(_) => BasisTag::Monomial,
            Realization::Lattice(s) => BasisTag::QuasiMonomial(s.delta().clone()),
        }
    }
}

impl<T: Scalar> PolyMap<T> for Realization<'_, T> {
    fn apply_to(&self, p: &Poly<T>) -> Poly<T> {
        match self {
            Realization::Continuum(e) => apply_continuum(e, p),
            Realization::Lattice(s) => s.apply(p),
        }
    }
}

/// Wraps a closure as a [`PolyMap`].
pub struct FnMap<F>(pub F);

impl<T, F: Fn(&Poly<T>) -> Poly<T>> PolyMap<T> for FnMap<F> {
    fn apply_to(&self, p: &Poly<T>) -> Poly<T> {
        (self.0)(p)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Overflow {
    pub column: usize,
    pub image_degree: usize,
}

/// `(d+1)×(d+1)` matrix; column `j` holds the coordinates of the image of
/// the degree-`j` basis element. Stored row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct OperatorMatrix<T> {
    pub basis: BasisTag<T>,
    pub degree_bound: usize,
    pub entries: Vec<Vec<T>>,
    /// First column whose image left the space, if any.
    pub overflow: Option<Overflow>,
}

impl<T: Scalar> OperatorMatrix<T> {
    pub fn from_rows(basis: BasisTag<T>, entries: Vec<Vec<T>>) -> Self {
        let d = entries.len().saturating_sub(1);
        OperatorMatrix { basis, degree_bound: d, entries, overflow: None }
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn entry(&self, row: usize, col: usize) -> &T {
        &self.entries[row][col]
    }

    pub fn diagonal(&self) -> Vec<T> {
        (0..self.size()).map(|i| self.entries[i][i].clone()).collect()
    }

    /// First nonzero entry below the diagonal.
    pub fn below_diagonal_nonzero(&self) -> Option<(usize, usize)> {
        (0..self.size())
            .flat_map(|i| (0..i).map(move |j| (i, j)))
            .find(|&(i, j)| !self.entries[i][j].is_zero())
    }

    pub fn is_upper_triangular(&self) -> bool {
        self.below_diagonal_nonzero().is_none()
    }

    /// `M·v` for a coordinate vector.
    pub fn apply_vec(&self, v: &[T]) -> Vec<T> {
        self.entries
            .iter()
            .map(|row| {
                row.iter()
                    .zip(v)
                    .fold(T::zero(), |acc, (a, b)| acc + a.clone() * b)
            })
            .collect()
    }
}

/// Matrix of `op` on the basis elements of degree `0..=d`. With `strict`,
/// an image of degree `> d` is an error; otherwise it is flagged in
/// [`OperatorMatrix::overflow`] and only the in-range coordinates are kept.
#[allow(clippy::needless_range_loop)] // writes column j across rows
pub fn matrix_on_basis<T: Scalar>(
    op: &impl PolyMap<T>,
    basis: &BasisTag<T>,
    d: usize,
    strict: bool,
) -> Result<OperatorMatrix<T>> {
    let mut entries = vec![vec![T::zero(); d + 1]; d + 1];
    let mut overflow = None;
    for j in 0..=d {
        let image = op.apply_to(&basis.element(j));
        if let Some(deg) = image.degree().filter(|&deg| deg > d) {
            if strict {
                return Err(Error::DegreeOverflow { column: j, image_degree: deg, bound: d });
            }
            overflow.get_or_insert(Overflow { column: j, image_degree: deg });
        }
        for (i, c) in basis.coordinates(&image).into_iter().take(d + 1).enumerate() {
            entries[i][j] = c;
        }
    }
    Ok(OperatorMatrix { basis: basis.clone(), degree_bound: d, entries, overflow })
}

/// Monic `det(λI − M)` by the division-free Berkowitz recursion.
/// Coefficients ascend in `λ`.
pub fn char_poly<T: Scalar>(m: &OperatorMatrix<T>) -> Poly<T> {
    char_poly_rows(&m.entries)
}

pub(crate) fn char_poly_rows<T: Scalar>(a: &[Vec<T>]) -> Poly<T> {
    let n = a.len();
    // descending coefficients of the char poly of the leading r×r block
    let mut v: Vec<T> = vec![T::one()];
    for r in 0..n {
        // A_{r+1} = [[A_r, c], [row, a_rr]]
        let c: Vec<T> = (0..r).map(|i| a[i][r].clone()).collect();
        let row: Vec<T> = (0..r).map(|j| a[r][j].clone()).collect();
        let mut t = Vec::with_capacity(r + 2);
        t.push(T::one());
        t.push(-a[r][r].clone());
        // −row · A_r^k · c for k = 0..r-1
        let mut w = c;
        for _ in 0..r {
            let dot = row.iter().zip(&w).fold(T::zero(), |acc, (x, y)| acc + x.clone() * y);
            t.push(-dot);
            w = (0..r)
                .map(|i| (0..r).fold(T::zero(), |acc, j| acc + a[i][j].clone() * &w[j]))
                .collect();
        }
        // new v = Toeplitz(t) · v, lower triangular (r+2)×(r+1)
        let next: Vec<T> = (0..r + 2)
            .map(|i| {
                (0..=i.min(r)).fold(T::zero(), |acc, j| acc + t[i - j].clone() * &v[j])
            })
            .collect();
        v = next;
    }
    v.reverse();
    Poly::from_coeffs(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{frac, int};
    use crate::Rational;

    fn rows(v: &[&[i64]]) -> Vec<Vec<Rational>> {
        v.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()
    }

    #[test]
    fn triangular_determinant() {
        let m = OperatorMatrix::from_rows(BasisTag::Monomial, rows(&[&[0, 1, 5], &[0, -2, 7], &[0, 0, -4]]));
        // λ(λ+2)(λ+4) = λ³ + 6λ² + 8λ
        assert_eq!(char_poly(&m), Poly::from_ints(&[0, 8, 6, 1]));
    }

    #[test]
    fn zero_matrix() {
        let m = OperatorMatrix::from_rows(BasisTag::Monomial, rows(&[&[0, 0], &[0, 0]]));
        assert_eq!(char_poly(&m), Poly::from_ints(&[0, 0, 1]));
    }

    #[test]
    fn full_two_by_two() {
        // λ² − (a+d)λ + (ad − bc)
        let m = OperatorMatrix::from_rows(BasisTag::Monomial, rows(&[&[1, 2], &[3, 4]]));
        assert_eq!(char_poly(&m), Poly::from_ints(&[-2, -5, 1]));
        assert!(!m.is_upper_triangular());
        assert_eq!(m.below_diagonal_nonzero(), Some((1, 0)));
    }

    #[test]
    fn euler_operator_matrix() {
        let e = AlgebraElement::<Rational>::term(1, 1, int(1));
        let m = matrix_on_basis(&Realization::Continuum(&e), &BasisTag::Monomial, 4, true).unwrap();
        for i in 0..5 {
            for j in 0..5 {
                let expected = if i == j { int(i as i64) } else { int(0) };
                assert_eq!(m.entry(i, j), &expected);
            }
        }
    }

    #[test]
    fn overflow_is_flagged_or_rejected() {
        let b = AlgebraElement::<Rational>::b();
        let op = Realization::Continuum(&b);
        let err = matrix_on_basis(&op, &BasisTag::Monomial, 3, true).unwrap_err();
        assert_eq!(err, Error::DegreeOverflow { column: 3, image_degree: 4, bound: 3 });
        let m = matrix_on_basis(&op, &BasisTag::Monomial, 3, false).unwrap();
        assert_eq!(m.overflow, Some(Overflow { column: 3, image_degree: 4 }));
        assert_eq!(m.entry(3, 2), &int(1));
    }

    #[test]
    fn zero_operator_matrix() {
        let z = AlgebraElement::<Rational>::zero();
        let m = matrix_on_basis(&Realization::Continuum(&z), &BasisTag::Monomial, 2, true).unwrap();
        assert!(m.entries.iter().flatten().all(|c| *c == int(0)));
        assert_eq!(char_poly(&m), Poly::monomial(3, int(1)));
    }

    #[test]
    fn fractional_entries() {
        let m = OperatorMatrix::<Rational>::from_rows(
            BasisTag::Monomial,
            vec![vec![frac(1, 2), frac(1, 3)], vec![frac(1, 4), frac(1, 5)]],
        );
        // det = 1/10 − 1/12 = 1/60; trace = 7/10
        assert_eq!(char_poly(&m), Poly::from_coeffs(vec![frac(1, 60), frac(-7, 10), int(1)]));
    }
}

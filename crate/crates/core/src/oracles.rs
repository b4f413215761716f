//! Reference polynomial families from explicit hypergeometric sums.
//!
//! Used only to cross-check eigenvectors produced by the spectral engine;
//! nothing here touches the algebra or the lattice machinery.
//!
//! Conventions: Hermite `H_k` (physicists'), Laguerre `L_k^{(α)}`, Legendre
//! `P_k`, Jacobi `P_k^{(α,β)}`, Hahn `h_k^{(α,β)}(x, N)` with weight
//! `Γ(N+α−x)Γ(β+1+x)/(Γ(x+1)Γ(N−x))`, Meixner `₂F₁(−k, −x; γ; 1 − 1/μ)` and
//! Charlier `₂F₀(−k, −x; ; −1/μ)`.

use crate::error::{Error, Result};
use crate::operators::{ClassicalFamily, DiscreteFamily};
use crate::poly::Poly;
use crate::scalar::{int, Scalar};

#[derive(Clone, Debug, PartialEq)]
pub enum ReferenceFamily<T> {
    Hermite,
    Laguerre { alpha: T },
    Legendre,
    Jacobi { alpha: T, beta: T },
    Hahn { alpha: T, beta: T, n: u32 },
    Meixner { gamma: T, mu: T },
    Charlier { mu: T },
}

/// Change of variable `x ↦ scale·x + shift` applied to the reference family
/// before comparison.
#[derive(Clone, Debug, PartialEq)]
pub struct AffineVariable<T> {
    pub scale: T,
    pub shift: T,
}

impl<T: Scalar> AffineVariable<T> {
    pub fn identity() -> Self {
        AffineVariable { scale: T::one(), shift: T::zero() }
    }

    pub fn reflection() -> Self {
        AffineVariable { scale: -T::one(), shift: T::zero() }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct FamilySpec<T> {
    pub family: ReferenceFamily<T>,
    pub variable: AffineVariable<T>,
}

impl<T: Scalar> FamilySpec<T> {
    pub fn new(family: ReferenceFamily<T>) -> Self {
        FamilySpec { family, variable: AffineVariable::identity() }
    }

    pub fn name(&self) -> &'static str {
        match self.family {
            ReferenceFamily::Hermite => "hermite",
            ReferenceFamily::Laguerre { .. } => "laguerre",
            ReferenceFamily::Legendre => "legendre",
            ReferenceFamily::Jacobi { .. } => "jacobi",
            ReferenceFamily::Hahn { .. } => "hahn",
            ReferenceFamily::Meixner { .. } => "meixner",
            ReferenceFamily::Charlier { .. } => "charlier",
        }
    }

    /// Largest admissible degree, if the family is finite.
    pub fn max_degree(&self) -> Option<usize> {
        match self.family {
            ReferenceFamily::Hahn { n, .. } => Some(n.saturating_sub(1) as usize),
            _ => None,
        }
    }
}

impl<T: Scalar> From<&ClassicalFamily<T>> for FamilySpec<T> {
    fn from(f: &ClassicalFamily<T>) -> Self {
        FamilySpec::new(match f.clone() {
            ClassicalFamily::Hermite => ReferenceFamily::Hermite,
            ClassicalFamily::Laguerre { alpha } => ReferenceFamily::Laguerre { alpha },
            ClassicalFamily::Legendre => ReferenceFamily::Legendre,
            ClassicalFamily::Jacobi { alpha, beta } => ReferenceFamily::Jacobi { alpha, beta },
        })
    }
}

/// Oracle for a discrete preset. The Hahn preset lives on the `δ = −1` grid,
/// so its eigenfunctions are the Hahn polynomials in `−x`.
pub fn reference_spec<T: Scalar>(f: &DiscreteFamily<T>) -> Option<FamilySpec<T>> {
    match f.clone() {
        DiscreteFamily::Hahn { alpha, beta, n } => Some(FamilySpec {
            family: ReferenceFamily::Hahn { alpha, beta, n },
            variable: AffineVariable::reflection(),
        }),
        DiscreteFamily::Meixner { gamma, mu } => Some(FamilySpec::new(ReferenceFamily::Meixner { gamma, mu })),
        DiscreteFamily::Charlier { mu } => Some(FamilySpec::new(ReferenceFamily::Charlier { mu })),
        DiscreteFamily::HahnContinued { .. } => None,
    }
}

fn fact<T: Scalar>(n: usize) -> T {
    (1..=n).fold(T::one(), |acc, i| acc * int::<T>(i as i64))
}

/// Pochhammer `(a)_j`.
fn rising<T: Scalar>(a: &T, j: usize) -> T {
    (0..j).fold(T::one(), |acc, i| acc * (a.clone() + int::<T>(i as i64)))
}

/// `(−x)_j` as a polynomial in `x`.
fn rising_neg_x<T: Scalar>(j: usize) -> Poly<T> {
    (0..j).fold(Poly::one(), |acc, i| {
        &acc * &Poly::from_coeffs(vec![int::<T>(i as i64), -T::one()])
    })
}

/// `Σ_j weight(j)·(−x)_j`
fn hypergeometric_in_x<T: Scalar>(k: usize, weight: impl Fn(usize) -> T) -> Poly<T> {
    (0..=k).fold(Poly::zero(), |acc, j| &acc + &rising_neg_x::<T>(j).scale(&weight(j)))
}

fn raw_polynomial<T: Scalar>(f: &ReferenceFamily<T>, k: usize) -> Result<Poly<T>> {
    let neg_k = int::<T>(-(k as i64));
    Ok(match f {
        ReferenceFamily::Hermite => {
            let mut c = vec![T::zero(); k + 1];
            for m in 0..=k / 2 {
                let sign = if m % 2 == 0 { T::one() } else { -T::one() };
                let pow2 = (0..k - 2 * m).fold(T::one(), |acc, _| acc * int::<T>(2));
                c[k - 2 * m] = sign * pow2 * fact::<T>(k) / (fact::<T>(m) * fact::<T>(k - 2 * m));
            }
            Poly::from_coeffs(c)
        }
        ReferenceFamily::Laguerre { alpha } => Poly::from_coeffs(
            (0..=k)
                .map(|j| {
                    let sign = if j.is_multiple_of(2) { T::one() } else { -T::one() };
                    let a = alpha.clone() + int::<T>(j as i64 + 1);
                    sign * rising(&a, k - j) / (fact::<T>(k - j) * fact::<T>(j))
                })
                .collect(),
        ),
        ReferenceFamily::Legendre => raw_polynomial(
            &ReferenceFamily::Jacobi { alpha: T::zero(), beta: T::zero() },
            k,
        )?,
        ReferenceFamily::Jacobi { alpha, beta } => {
            let half = T::one() / int::<T>(2);
            let xm = Poly::from_coeffs(vec![-half.clone(), half.clone()]);
            let xp = Poly::from_coeffs(vec![half.clone(), half]);
            let pow = |p: &Poly<T>, e: usize| (0..e).fold(Poly::one(), |acc, _| &acc * p);
            (0..=k).fold(Poly::zero(), |acc, s| {
                let c1 = rising(&(alpha.clone() + int::<T>(s as i64 + 1)), k - s) / fact::<T>(k - s);
                let c2 = rising(&(beta.clone() + int::<T>((k - s) as i64 + 1)), s) / fact::<T>(s);
                &acc + &(&pow(&xm, s) * &pow(&xp, k - s)).scale(&(c1 * c2))
            })
        }
        ReferenceFamily::Hahn { alpha, beta, n } => {
            if k + 1 > *n as usize {
                return Err(Error::DegreeOutOfRange { family: "hahn".into(), degree: k });
            }
            let big_n = int::<T>(*n as i64);
            let b1 = beta.clone() + T::one();
            let top = alpha.clone() + beta + int::<T>(k as i64 + 1);
            let one_minus_n = T::one() - &big_n;
            let sum = hypergeometric_in_x(k, |j| {
                rising(&neg_k, j) * rising(&top, j) / (rising(&b1, j) * rising(&one_minus_n, j) * fact::<T>(j))
            });
            let sign = if k.is_multiple_of(2) { T::one() } else { -T::one() };
            let pref = sign * rising(&(big_n - int::<T>(k as i64)), k) * rising(&b1, k) / fact::<T>(k);
            sum.scale(&pref)
        }
        ReferenceFamily::Meixner { gamma, mu } => {
            let z = T::one() - T::one() / mu;
            let zp = |j: usize| (0..j).fold(T::one(), |acc, _| acc * &z);
            hypergeometric_in_x(k, |j| rising(&neg_k, j) * zp(j) / (rising(gamma, j) * fact::<T>(j)))
        }
        ReferenceFamily::Charlier { mu } => {
            let z = -(T::one() / mu);
            let zp = |j: usize| (0..j).fold(T::one(), |acc, _| acc * &z);
            hypergeometric_in_x(k, |j| rising(&neg_k, j) * zp(j) / fact::<T>(j))
        }
    })
}

/// Degree-`k` member of the family, in the monomial basis of the mapped variable.
pub fn reference_polynomial<T: Scalar>(spec: &FamilySpec<T>, k: usize) -> Result<Poly<T>> {
    let p = raw_polynomial(&spec.family, k)?;
    Ok(p.compose_affine(&spec.variable.scale, &spec.variable.shift))
}

/// Checks the family's three-term recurrence linking degrees `k−1, k, k+1`
/// (in the unmapped variable). Returns `Ok(false)` on a mismatch.
pub fn recurrence_holds<T: Scalar>(f: &ReferenceFamily<T>, k: usize) -> Result<bool> {
    let p = |j: usize| raw_polynomial(f, j);
    let x = Poly::<T>::x();
    let i = |v: i64| int::<T>(v);
    let kk = i(k as i64);
    let prev = if k == 0 { Poly::zero() } else { p(k - 1)? };
    let (cur, next) = (p(k)?, p(k + 1)?);
    let c = |v: T| Poly::constant(v);
    let (lhs, rhs) = match f {
        ReferenceFamily::Hermite => (
            next,
            &(&x * &cur).scale(&i(2)) - &prev.scale(&(i(2) * &kk)),
        ),
        ReferenceFamily::Laguerre { alpha } => (
            next.scale(&(kk.clone() + i(1))),
            &(&(&c(i(2) * &kk + i(1) + alpha) - &x) * &cur) - &prev.scale(&(kk.clone() + alpha)),
        ),
        ReferenceFamily::Legendre => (
            next.scale(&(kk.clone() + i(1))),
            &(&x * &cur).scale(&(i(2) * &kk + i(1))) - &prev.scale(&kk),
        ),
        ReferenceFamily::Jacobi { alpha, beta } => {
            if k == 0 {
                // P₁ = (α+1) + (α+β+2)(x−1)/2
                let half = T::one() / i(2);
                let ab2 = alpha.clone() + beta + i(2);
                let p1 = Poly::from_coeffs(vec![
                    alpha.clone() + i(1) - ab2.clone() * &half,
                    ab2 * &half,
                ]);
                (next, p1)
            } else {
                let s = i(2) * &kk + alpha + beta;
                let lead = i(2) * (kk.clone() + i(1)) * (kk.clone() + alpha + beta + i(1)) * &s;
                let mid_x = (s.clone() + i(1)) * (s.clone() + i(2)) * &s;
                let mid_c = (s.clone() + i(1)) * (alpha.clone() * alpha - beta.clone() * beta);
                let back = i(2) * (kk.clone() + alpha) * (kk.clone() + beta) * (s + i(2));
                (
                    next.scale(&lead),
                    &(&Poly::from_coeffs(vec![mid_c, mid_x]) * &cur) - &prev.scale(&back),
                )
            }
        }
        ReferenceFamily::Hahn { alpha, beta, n } => {
            // Normalized Q_j = h_j / pref_j satisfies
            // −x Q_k = A_k Q_{k+1} − (A_k + C_k) Q_k + C_k Q_{k−1}
            // with a = β, b = α, M = N − 1.
            let big_n = i(*n as i64);
            let pref = |j: usize| {
                let sign = if j.is_multiple_of(2) { T::one() } else { -T::one() };
                sign * rising(&(big_n.clone() - i(j as i64)), j) * rising(&(beta.clone() + i(1)), j) / fact::<T>(j)
            };
            let (a, b, m) = (beta.clone(), alpha.clone(), big_n.clone() - i(1));
            let ab = a.clone() + &b;
            let a_k = (kk.clone() + &ab + i(1)) * (kk.clone() + &a + i(1)) * (m.clone() - &kk)
                / ((i(2) * &kk + &ab + i(1)) * (i(2) * &kk + &ab + i(2)));
            let c_k = if k == 0 {
                T::zero()
            } else {
                kk.clone() * (kk.clone() + &ab + &m + i(1)) * (kk.clone() + &b)
                    / ((i(2) * &kk + &ab) * (i(2) * &kk + &ab + i(1)))
            };
            let q = |poly: Poly<T>, j: usize| poly.scale(&(T::one() / pref(j)));
            let qprev = if k == 0 { Poly::zero() } else { q(prev, k - 1) };
            let (qcur, qnext) = (q(cur, k), q(next, k + 1));
            (
                -(&x * &qcur),
                &(&qnext.scale(&a_k) - &qcur.scale(&(a_k.clone() + &c_k))) + &qprev.scale(&c_k),
            )
        }
        ReferenceFamily::Meixner { gamma, mu } => (
            (&x * &cur).scale(&(mu.clone() - i(1))),
            &(&next.scale(&(mu.clone() * (kk.clone() + gamma)))
                - &cur.scale(&(kk.clone() + (kk.clone() + gamma) * mu)))
                + &prev.scale(&kk),
        ),
        ReferenceFamily::Charlier { mu } => (
            -(&x * &cur),
            &(&next.scale(mu) - &cur.scale(&(kk.clone() + mu))) + &prev.scale(&kk),
        ),
    };
    Ok(lhs == rhs)
}

/// `p = c·q` for some nonzero `c`. Two zero polynomials are equal; zero is
/// never proportional to a nonzero polynomial.
pub fn projective_equal<T: Scalar>(p: &Poly<T>, q: &Poly<T>) -> bool {
    match (p.leading_coeff(), q.leading_coeff()) {
        (None, None) => true,
        (Some(lp), Some(lq)) => p.degree() == q.degree() && *p == q.scale(&(lp.clone() / lq)),
        _ => false,
    }
}

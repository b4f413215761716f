//! Named parameter assignments.
//!
//! Classical presets give `E₂` coefficients whose continuum eigenfunctions are
//! the Hermite, Laguerre, Legendre and Jacobi polynomials. Discrete presets
//! give three-point parameters whose lattice eigenfunctions are the Hahn,
//! Meixner and Charlier polynomials.

use crate::error::{Error, Result};
use crate::operators::{E2Params, ThreePointParams};
use crate::representations::GridStep;
use crate::scalar::{int, Scalar};

#[derive(Clone, Debug, PartialEq)]
pub enum ClassicalFamily<T> {
    Hermite,
    Laguerre { alpha: T },
    Legendre,
    Jacobi { alpha: T, beta: T },
}

impl<T: Scalar> ClassicalFamily<T> {
    pub fn name(&self) -> &'static str {
        match self {
            ClassicalFamily::Hermite => "hermite",
            ClassicalFamily::Laguerre { .. } => "laguerre",
            ClassicalFamily::Legendre => "legendre",
            ClassicalFamily::Jacobi { .. } => "jacobi",
        }
    }

    /// Looks a family up by name; `alpha`/`beta` default to zero.
    pub fn from_name(name: &str, alpha: Option<T>, beta: Option<T>) -> Result<Self> {
        let alpha = alpha.unwrap_or_else(T::zero);
        let beta = beta.unwrap_or_else(T::zero);
        match name.trim_start_matches("discrete-") {
            "hermite" => Ok(ClassicalFamily::Hermite),
            "laguerre" => Ok(ClassicalFamily::Laguerre { alpha }),
            "legendre" => Ok(ClassicalFamily::Legendre),
            "jacobi" => Ok(ClassicalFamily::Jacobi { alpha, beta }),
            other => Err(Error::UnknownName(format!("classical family {other:?}"))),
        }
    }

    fn check(&self) -> Result<()> {
        let above = |v: &T, what: &str| {
            if *v > -T::one() {
                Ok(())
            } else {
                Err(Error::InadmissibleParameter(format!("{what} must exceed -1, got {v}")))
            }
        };
        match self {
            ClassicalFamily::Laguerre { alpha } => above(alpha, "alpha"),
            ClassicalFamily::Jacobi { alpha, beta } => {
                above(alpha, "alpha")?;
                above(beta, "beta")
            }
            _ => Ok(()),
        }
    }

    /// Leading coefficient of the standard normalization at degree `k`.
    pub fn leading_coefficient(&self, k: usize) -> T {
        let fact = |n: usize| (1..=n).fold(T::one(), |acc, i| acc * int::<T>(i as i64));
        let two_k = (0..k).fold(T::one(), |acc, _| acc * int::<T>(2));
        match self {
            ClassicalFamily::Hermite => two_k,
            ClassicalFamily::Laguerre { .. } => {
                let sign = if k.is_multiple_of(2) { T::one() } else { -T::one() };
                sign / fact(k)
            }
            ClassicalFamily::Legendre => fact(2 * k) / (two_k * fact(k) * fact(k)),
            ClassicalFamily::Jacobi { alpha, beta } => {
                let s = alpha.clone() + beta + int::<T>(k as i64 + 1);
                let rising = (0..k).fold(T::one(), |acc, i| acc * (s.clone() + int::<T>(i as i64)));
                rising / (two_k * fact(k))
            }
        }
    }
}

/// `E₂` coefficients for a classical family.
///
/// Hermite uses `d² − 2x d`; the others are fixed so that the diagonal is
/// strictly monotone in the degree.
pub fn preset_classical<T: Scalar>(family: &ClassicalFamily<T>) -> Result<E2Params<T>> {
    family.check()?;
    let z = T::zero;
    let i = int::<T>;
    Ok(match family {
        ClassicalFamily::Hermite => E2Params::from_array([z(), z(), i(-1), i(-2), z(), z()]),
        // −x y'' + (x − α − 1) y' = k y
        ClassicalFamily::Laguerre { alpha } => {
            E2Params::from_array([z(), i(1), z(), i(1), -(alpha.clone() + i(1)), z()])
        }
        // (1 − x²) y'' − 2x y' = −k(k+1) y
        ClassicalFamily::Legendre => E2Params::from_array([i(1), z(), i(-1), i(-2), z(), z()]),
        // (1 − x²) y'' + (β − α − (α+β+2)x) y' = −k(k+α+β+1) y
        ClassicalFamily::Jacobi { alpha, beta } => E2Params::from_array([
            i(1),
            z(),
            i(-1),
            -(alpha.clone() + beta + i(2)),
            beta.clone() - alpha,
            z(),
        ]),
    })
}

#[derive(Clone, Debug, PartialEq)]
pub enum DiscreteFamily<T> {
    /// `h_k^{(α,β)}(x, N)` on the grid `δ = −1`.
    Hahn { alpha: T, beta: T, n: u32 },
    /// Analytically continued Hahn `h̃_k^{(μ,ν)}(x, N)`, `δ = −1`.
    HahnContinued { mu: T, nu: T, n: u32 },
    /// Meixner `m_k^{(γ,μ)}(x)`, `δ = 1`.
    Meixner { gamma: T, mu: T },
    /// Charlier `c_k^{(μ)}(x)`, `δ = 1`.
    Charlier { mu: T },
}

impl<T: Scalar> DiscreteFamily<T> {
    pub fn name(&self) -> &'static str {
        match self {
            DiscreteFamily::Hahn { .. } => "hahn",
            DiscreteFamily::HahnContinued { .. } => "hahn-continued",
            DiscreteFamily::Meixner { .. } => "meixner",
            DiscreteFamily::Charlier { .. } => "charlier",
        }
    }

    pub fn delta(&self) -> GridStep<T> {
        let d = match self {
            DiscreteFamily::Hahn { .. } | DiscreteFamily::HahnContinued { .. } => -T::one(),
            _ => T::one(),
        };
        GridStep::new(d).expect("nonzero")
    }
}

/// Parameters that reproduce the named family as lattice eigenfunctions.
///
/// Differs from [`preset_discrete_as_printed`] in two signs: Hahn uses
/// `A3 = α + β + 1` and Meixner uses `A2 = μ`. With those values the Hahn
/// preset equals (minus) the Hahn difference operator in the variable `−x`,
/// and the Meixner preset equals the Meixner difference operator.
pub fn preset_discrete<T: Scalar>(family: &DiscreteFamily<T>) -> ThreePointParams<T> {
    let mut p = preset_discrete_as_printed(family);
    match family {
        DiscreteFamily::Hahn { .. } => p.a3 = -p.a3,
        DiscreteFamily::Meixner { .. } => p.a2 = -p.a2,
        _ => {}
    }
    p
}

/// The assignments exactly as usually quoted alongside the three-point
/// operator (`A1 = −1, A2 = N − β − 2, A3 = −α − β − 1, …`).
pub fn preset_discrete_as_printed<T: Scalar>(family: &DiscreteFamily<T>) -> ThreePointParams<T> {
    let i = int::<T>;
    let z = T::zero;
    let a = match family {
        DiscreteFamily::Hahn { alpha, beta, n } => {
            let n = i(*n as i64);
            [
                i(-1),
                n.clone() - beta - i(2),
                -(alpha.clone() + beta + i(1)),
                (beta.clone() + i(1)) * (n - i(1)),
                z(),
            ]
        }
        DiscreteFamily::HahnContinued { mu, nu, n } => {
            let n = i(*n as i64);
            [
                i(1),
                i(2) - i(2) * &n - nu,
                i(1) - i(2) * &n - mu - nu,
                (n.clone() + nu - i(1)) * (n - i(1)),
                z(),
            ]
        }
        DiscreteFamily::Meixner { gamma, mu } => {
            [z(), -mu.clone(), mu.clone() - i(1), gamma.clone() * mu, z()]
        }
        DiscreteFamily::Charlier { mu } => [z(), z(), i(-1), mu.clone(), z()],
    };
    ThreePointParams::from_array(a, family.delta())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::frac;
    use crate::Rational;

    fn q(p: i64, d: i64) -> Rational {
        frac(p, d)
    }

    #[test]
    fn hermite_preset() {
        let p = preset_classical::<Rational>(&ClassicalFamily::Hermite).unwrap();
        assert_eq!(p.to_array(), [0, 0, -1, -2, 0, 0].map(int));
    }

    #[test]
    fn laguerre_alpha_zero() {
        let p = preset_classical(&ClassicalFamily::Laguerre { alpha: q(0, 1) }).unwrap();
        // −x d² + (x − 1) d
        assert_eq!(p.to_array(), [0, 1, 0, 1, -1, 0].map(int));
    }

    #[test]
    fn inadmissible_parameters() {
        assert!(preset_classical(&ClassicalFamily::Laguerre { alpha: q(-1, 1) }).is_err());
        assert!(preset_classical(&ClassicalFamily::Jacobi { alpha: q(0, 1), beta: q(-3, 2) }).is_err());
        assert!(ClassicalFamily::<Rational>::from_name("chebyshev", None, None).is_err());
    }

    #[test]
    fn printed_discrete_presets() {
        let h = preset_discrete_as_printed(&DiscreteFamily::Hahn { alpha: q(1, 1), beta: q(2, 1), n: 6 });
        assert_eq!(h.delta.value(), &q(-1, 1));
        assert_eq!([h.a1, h.a2, h.a3, h.a4, h.a5], [-1, 2, -4, 15, 0].map(int));

        let c = preset_discrete_as_printed(&DiscreteFamily::Charlier { mu: q(2, 1) });
        assert_eq!(c.delta.value(), &q(1, 1));
        assert_eq!([c.a1, c.a2, c.a3, c.a4, c.a5], [0, 0, -1, 2, 0].map(int));

        let m = preset_discrete_as_printed(&DiscreteFamily::Meixner { gamma: q(3, 1), mu: q(1, 2) });
        assert_eq!([m.a1, m.a2, m.a3, m.a4, m.a5], [q(0, 1), q(-1, 2), q(-1, 2), q(3, 2), q(0, 1)]);
    }

    #[test]
    fn corrected_presets_flip_one_sign() {
        let fam = DiscreteFamily::Hahn { alpha: q(1, 1), beta: q(2, 1), n: 6 };
        assert_eq!(preset_discrete(&fam).a3, int(4));
        let fam = DiscreteFamily::Meixner { gamma: q(1, 1), mu: q(2, 1) };
        assert_eq!(preset_discrete(&fam).a2, int(2));
        let fam = DiscreteFamily::Charlier { mu: q(3, 1) };
        assert_eq!(preset_discrete(&fam), preset_discrete_as_printed(&fam));
    }

    #[test]
    fn standard_leading_coefficients() {
        assert_eq!(ClassicalFamily::<Rational>::Hermite.leading_coefficient(3), int(8));
        assert_eq!(ClassicalFamily::<Rational>::Legendre.leading_coefficient(2), q(3, 2));
        assert_eq!(
            ClassicalFamily::Laguerre { alpha: q(0, 1) }.leading_coefficient(2),
            q(1, 2)
        );
        // Jacobi(0,0) is Legendre
        let j = ClassicalFamily::Jacobi { alpha: q(0, 1), beta: q(0, 1) };
        for k in 0..6 {
            assert_eq!(j.leading_coefficient(k), ClassicalFamily::<Rational>::Legendre.leading_coefficient(k));
        }
    }
}

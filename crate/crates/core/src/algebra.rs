//! Normal-ordered arithmetic in the universal enveloping algebra of the
//! Heisenberg algebra `[a, b] = 1`.
//!
//! Every element is stored as `Σ c_{mn} b^m a^n` (all `b`s to the left). The
//! product rule is the Weyl reordering
//! `a^n b^m = Σ_k k!·C(n,k)·C(m,k) · b^{m-k} a^{n-k}`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::scalar::{frac, int, Scalar};

/// `Σ c_{mn} b^m a^n` with no zero coefficients stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AlgebraElement<T> {
    terms: BTreeMap<(u32, u32), T>,
}

impl<T: Scalar> Default for AlgebraElement<T> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<T: Scalar> AlgebraElement<T> {
    pub fn zero() -> Self {
        AlgebraElement { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::scalar(T::one())
    }

    pub fn scalar(c: T) -> Self {
        Self::term(0, 0, c)
    }

    /// The annihilation generator `a`.
    pub fn a() -> Self {
        Self::term(0, 1, T::one())
    }

    /// The creation generator `b`.
    pub fn b() -> Self {
        Self::term(1, 0, T::one())
    }

    /// `c · b^m a^n`
    pub fn term(m: u32, n: u32, c: T) -> Self {
        let mut e = Self::zero();
        e.add_term(m, n, c);
        e
    }

    pub fn from_terms(terms: impl IntoIterator<Item = ((u32, u32), T)>) -> Self {
        let mut e = Self::zero();
        for ((m, n), c) in terms {
            e.add_term(m, n, c);
        }
        e
    }

    fn add_term(&mut self, m: u32, n: u32, c: T) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry((m, n)).or_insert_with(T::zero);
        *slot = slot.clone() + c;
        if slot.is_zero() {
            self.terms.remove(&(m, n));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending `(m, n)` order.
    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, &T)> {
        self.terms.iter().map(|(&(m, n), c)| (m, n, c))
    }

    pub fn coeff(&self, m: u32, n: u32) -> T {
        self.terms.get(&(m, n)).cloned().unwrap_or_else(T::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest power of `a` appearing (the differential order).
    pub fn order(&self) -> u32 {
        self.terms.keys().map(|&(_, n)| n).max().unwrap_or(0)
    }

    /// Largest `m - n`: how far the element can raise polynomial degree.
    pub fn degree_shift(&self) -> Option<i64> {
        self.terms.keys().map(|&(m, n)| m as i64 - n as i64).max()
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::from_terms(self.terms.iter().map(|(&k, v)| (k, v.clone() * c)))
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&(m, n), c) in &other.terms {
            out.add_term(m, n, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&(m, n), c) in &other.terms {
            out.add_term(m, n, -c.clone());
        }
        out
    }

    /// Normal-ordered product.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (&(m1, n1), c1) in &self.terms {
            for (&(m2, n2), c2) in &other.terms {
                let c = c1.clone() * c2;
                // b^{m1} (a^{n1} b^{m2}) a^{n2}
                let mut weight = T::one();
                for k in 0..=n1.min(m2) {
                    if k > 0 {
                        let num = (n1 - k + 1) as i64 * (m2 - k + 1) as i64;
                        weight = weight * frac::<T>(num, k as i64);
                    }
                    out.add_term(m1 + m2 - k, n1 + n2 - k, c.clone() * &weight);
                }
            }
        }
        out
    }

    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| acc.mul(self))
    }
}

/// The three spin-`n` generators of the finite-dimensional `sl₂`
/// representation on polynomials of degree `≤ n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sl2Kind {
    Plus,
    Zero,
    Minus,
}

impl Sl2Kind {
    pub const ALL: [Sl2Kind; 3] = [Sl2Kind::Plus, Sl2Kind::Zero, Sl2Kind::Minus];
}

/// `J⁺ₙ = b²a − n·b`, `J⁰ₙ = ba − n/2`, `J⁻ₙ = a`.
pub fn sl2_generator<T: Scalar>(kind: Sl2Kind, n: u32) -> AlgebraElement<T> {
    let n = n as i64;
    match kind {
        Sl2Kind::Plus => AlgebraElement::from_terms([((2, 1), T::one()), ((1, 0), int(-n))]),
        Sl2Kind::Zero => AlgebraElement::from_terms([((1, 1), T::one()), ((0, 0), frac(-n, 2))]),
        Sl2Kind::Minus => AlgebraElement::a(),
    }
}

impl<T: Scalar> Add for &AlgebraElement<T> {
    type Output = AlgebraElement<T>;
    fn add(self, rhs: Self) -> AlgebraElement<T> {
        AlgebraElement::add(self, rhs)
    }
}

impl<T: Scalar> Sub for &AlgebraElement<T> {
    type Output = AlgebraElement<T>;
    fn sub(self, rhs: Self) -> AlgebraElement<T> {
        AlgebraElement::sub(self, rhs)
    }
}

impl<T: Scalar> Mul for &AlgebraElement<T> {
    type Output = AlgebraElement<T>;
    fn mul(self, rhs: Self) -> AlgebraElement<T> {
        AlgebraElement::mul(self, rhs)
    }
}

impl<T: Scalar> Neg for &AlgebraElement<T> {
    type Output = AlgebraElement<T>;
    fn neg(self) -> AlgebraElement<T> {
        self.scale(&-T::one())
    }
}

impl<T: Scalar> fmt::Display for AlgebraElement<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&(m, n), c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})")?;
            match m {
                0 => {}
                1 => write!(f, "b")?,
                _ => write!(f, "b^{m}")?,
            }
            match n {
                0 => {}
                1 => write!(f, "a")?,
                _ => write!(f, "a^{n}")?,
            }
        }
        Ok(())
    }
}

impl<T: fmt::Debug> fmt::Debug for AlgebraElement<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    type E = AlgebraElement<Rational>;

    fn q(p: i64, d: i64) -> Rational {
        frac(p, d)
    }

    #[test]
    fn addition() {
        assert!((&E::a() + &E::a().scale(&int(-1))).is_zero());
        assert_eq!(&E::b() + &E::b(), E::term(1, 0, int(2)));
        let ba_plus_one = &E::term(1, 1, int(1)) + &E::one();
        assert_eq!(&ba_plus_one + &E::term(1, 1, int(-1)), E::one());
    }

    #[test]
    fn canonical_commutation() {
        assert_eq!(E::a().mul(&E::b()), E::from_terms([((1, 1), int(1)), ((0, 0), int(1))]));
        assert_eq!(E::b().mul(&E::a()), E::term(1, 1, int(1)));
        assert_eq!(E::a().commutator(&E::b()), E::one());
        assert!(E::b().commutator(&E::b()).is_zero());
    }

    #[test]
    fn euler_operator_commutes_to_minus_a() {
        let ba = E::term(1, 1, int(1));
        assert_eq!(ba.commutator(&E::a()), -&E::a());
    }

    #[test]
    fn a_squared_b_squared() {
        // Frozen from the continuum oracle in tests/algebra_props.rs.
        let lhs = E::a().pow(2).mul(&E::b().pow(2));
        let rhs = E::from_terms([((2, 2), int(1)), ((1, 1), int(4)), ((0, 0), int(2))]);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn generators() {
        assert_eq!(sl2_generator::<Rational>(Sl2Kind::Minus, 0), E::a());
        assert_eq!(sl2_generator::<Rational>(Sl2Kind::Zero, 0), E::term(1, 1, int(1)));
        assert_eq!(
            sl2_generator::<Rational>(Sl2Kind::Plus, 2),
            E::from_terms([((2, 1), int(1)), ((1, 0), int(-2))])
        );
        assert_eq!(
            sl2_generator::<Rational>(Sl2Kind::Zero, 3),
            E::from_terms([((1, 1), int(1)), ((0, 0), q(-3, 2))])
        );
    }

    #[test]
    fn sl2_relations() {
        for n in 0..=6 {
            let jp = sl2_generator::<Rational>(Sl2Kind::Plus, n);
            let j0 = sl2_generator::<Rational>(Sl2Kind::Zero, n);
            let jm = sl2_generator::<Rational>(Sl2Kind::Minus, n);
            assert_eq!(j0.commutator(&jm), -&jm, "n={n}");
            assert_eq!(j0.commutator(&jp), jp, "n={n}");
            assert_eq!(jp.commutator(&jm), j0.scale(&int(-2)), "n={n}");
        }
    }

    #[test]
    fn works_over_floats() {
        let a = AlgebraElement::<f64>::a();
        let b = AlgebraElement::<f64>::b();
        assert_eq!(a.commutator(&b), AlgebraElement::one());
    }
}

//! Finite sums `Σₖ pₖ(x)·Sₖ` of shift operators `Sₖ f(x) = f(x + kδ)` with
//! polynomial coefficients. Composition is the skew product
//! `Sₖ·p(x) = p(x + kδ)·Sₖ`.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::Result;
use crate::poly::Poly;
use crate::representations::basis::GridStep;
use crate::scalar::Scalar;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ShiftOperator<T> {
    delta: GridStep<T>,
    terms: BTreeMap<i64, Poly<T>>,
}

impl<T: Scalar> ShiftOperator<T> {
    pub fn zero(delta: GridStep<T>) -> Self {
        ShiftOperator {
            delta,
            terms: BTreeMap::new(),
        }
    }

    pub fn identity(delta: GridStep<T>) -> Self {
        Self::single(delta, 0, Poly::one())
    }

    /// `p(x)·Sₖ`
    pub fn single(delta: GridStep<T>, shift: i64, p: Poly<T>) -> Self {
        Self::from_terms(delta, [(shift, p)])
    }

    pub fn from_terms(delta: GridStep<T>, terms: impl IntoIterator<Item = (i64, Poly<T>)>) -> Self {
        let mut op = Self::zero(delta);
        for (k, p) in terms {
            op.add_term(k, &p);
        }
        op
    }

    fn add_term(&mut self, k: i64, p: &Poly<T>) {
        if p.is_zero() {
            return;
        }
        let sum = match self.terms.get(&k) {
            Some(q) => q + p,
            None => p.clone(),
        };
        if sum.is_zero() {
            self.terms.remove(&k);
        } else {
            self.terms.insert(k, sum);
        }
    }

    pub fn delta(&self) -> &GridStep<T> {
        &self.delta
    }

    /// `(shift, coefficient)` in ascending shift order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &Poly<T>)> {
        self.terms.iter().map(|(&k, p)| (k, p))
    }

    pub fn coeff(&self, k: i64) -> Poly<T> {
        self.terms.get(&k).cloned().unwrap_or_else(Poly::zero)
    }

    pub fn shifts(&self) -> Vec<i64> {
        self.terms.keys().copied().collect()
    }

    pub fn point_count(&self) -> usize {
        self.terms.len()
    }

    /// `max k − min k`, zero for the zero operator.
    pub fn width(&self) -> i64 {
        match (self.terms.keys().next(), self.terms.keys().next_back()) {
            (Some(lo), Some(hi)) => hi - lo,
            _ => 0,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.delta.ensure_same(&other.delta)?;
        let mut out = self.clone();
        for (&k, p) in &other.terms {
            out.add_term(k, p);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-T::one()))
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::from_terms(
            self.delta.clone(),
            self.terms.iter().map(|(&k, p)| (k, p.scale(c))),
        )
    }

    /// Operator product `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        self.delta.ensure_same(&other.delta)?;
        let mut out = Self::zero(self.delta.clone());
        for (&k, p) in &self.terms {
            let h = self.delta.times(k);
            for (&l, q) in &other.terms {
                out.add_term(k + l, &(p * &q.shift(&h)));
            }
        }
        Ok(out)
    }

    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.compose(other)?.sub(&other.compose(self)?)
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::identity(self.delta.clone()), |acc, _| {
            acc.compose(self).expect("same grid")
        })
    }

    /// `Σₖ pₖ(x)·f(x + kδ)` for a monomial-basis polynomial `f`.
    pub fn apply(&self, f: &Poly<T>) -> Poly<T> {
        self.terms.iter().fold(Poly::zero(), |acc, (&k, p)| {
            &acc + &(p * &f.shift(&self.delta.times(k)))
        })
    }
}

/// `[p₊₁]·S(+1) + [p₀]·S(0) + …`, highest shift first.
impl<T: Scalar> fmt::Display for ShiftOperator<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (k, p)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "[{p}]·S({k:+})")?;
        }
        Ok(())
    }
}

impl<T: fmt::Debug> fmt::Debug for ShiftOperator<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ShiftOperator")
            .field("delta", &self.delta.0)
            .field("terms", &self.terms)
            .finish()
    }
}

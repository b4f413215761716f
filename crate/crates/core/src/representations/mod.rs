//! Two realizations of the Heisenberg algebra on polynomials: the continuum
//! one (`a = d/dx`, `b = x`) and the lattice one (`a = D₊`, `b = x(1 − δD₋)
//! = x·S₋₁`) on the grid of spacing `δ`.

pub mod basis;
pub mod shift;

use crate::algebra::AlgebraElement;
use crate::poly::Poly;
use crate::scalar::Scalar;

pub use basis::{convert_basis, quasi_monomial, BasisTag, GridStep, Polynomial};
pub use shift::ShiftOperator;

/// Acts with `Σ c_{mn} b^m a^n` as `Σ c_{mn} x^m (d/dx)^n`.
pub fn apply_continuum<T: Scalar>(e: &AlgebraElement<T>, p: &Poly<T>) -> Poly<T> {
    let max_n = e.order() as usize;
    let mut derivs = Vec::with_capacity(max_n + 1);
    derivs.push(p.clone());
    for i in 0..max_n {
        let next = derivs[i].derivative();
        derivs.push(next);
    }
    e.terms().fold(Poly::zero(), |acc, (m, n, c)| {
        &acc + &derivs[n as usize].mul_x_pow(m as usize).scale(c)
    })
}

/// `D₊ = (S₊₁ − 1)/δ`
pub fn forward_difference<T: Scalar>(delta: &GridStep<T>) -> ShiftOperator<T> {
    let inv = T::one() / delta.value();
    ShiftOperator::from_terms(
        delta.clone(),
        [(1, Poly::constant(inv.clone())), (0, Poly::constant(-inv))],
    )
}

/// `D₋ = (1 − S₋₁)/δ`
pub fn backward_difference<T: Scalar>(delta: &GridStep<T>) -> ShiftOperator<T> {
    let inv = T::one() / delta.value();
    ShiftOperator::from_terms(
        delta.clone(),
        [(0, Poly::constant(inv.clone())), (-1, Poly::constant(-inv))],
    )
}

/// Lattice image of `a`.
pub fn lattice_a<T: Scalar>(delta: &GridStep<T>) -> ShiftOperator<T> {
    forward_difference(delta)
}

/// Lattice image of `b`, in the closed form `x·S₋₁`.
pub fn lattice_b<T: Scalar>(delta: &GridStep<T>) -> ShiftOperator<T> {
    ShiftOperator::single(delta.clone(), -1, Poly::x())
}

/// Substitutes `a → D₊`, `b → x·S₋₁` and multiplies out.
pub fn realize_lattice<T: Scalar>(e: &AlgebraElement<T>, delta: &GridStep<T>) -> ShiftOperator<T> {
    let a = lattice_a(delta);
    let b = lattice_b(delta);
    let mut a_pows = vec![ShiftOperator::identity(delta.clone())];
    let mut b_pows = vec![ShiftOperator::identity(delta.clone())];
    let mut out = ShiftOperator::zero(delta.clone());
    for (m, n, c) in e.terms() {
        let (m, n) = (m as usize, n as usize);
        while a_pows.len() <= n {
            let next = a_pows.last().unwrap().compose(&a).expect("same grid");
            a_pows.push(next);
        }
        while b_pows.len() <= m {
            let next = b_pows.last().unwrap().compose(&b).expect("same grid");
            b_pows.push(next);
        }
        let t = b_pows[m].compose(&a_pows[n]).expect("same grid").scale(c);
        out = out.add(&t).expect("same grid");
    }
    out
}

pub fn apply_lattice<T: Scalar>(s: &ShiftOperator<T>, p: &Poly<T>) -> Poly<T> {
    s.apply(p)
}

/// `bⁿ|0⟩` with the vacuum `|0⟩ = 1`, computed by applying the lattice `b`
/// `n` times. Equals `x^{(n)}`.
pub fn fock_vector<T: Scalar>(n: usize, delta: &GridStep<T>) -> Poly<T> {
    let b = lattice_b(delta);
    (0..n).fold(Poly::one(), |v, _| b.apply(&v))
}

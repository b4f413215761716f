//! Explicit shift-operator forms written directly from their coefficient
//! formulas. They share no code with [`crate::representations::realize_lattice`]
//! and serve as the second route for every lattice identity.

use crate::operators::{E2Params, ThreePointParams};
use crate::poly::Poly;
use crate::representations::{GridStep, ShiftOperator};
use crate::scalar::{int, Scalar};

/// `x(x − δ)`
fn x_falling2<T: Scalar>(d: &T) -> Poly<T> {
    Poly::from_coeffs(vec![T::zero(), -d.clone(), T::one()])
}

fn lin<T: Scalar>(c0: T, c1: T) -> Poly<T> {
    Poly::from_coeffs(vec![c0, c1])
}

/// Five-point form of the discretized `E₂` with `ã = a/δ²`, `b̃ = b/δ`:
///
/// ```text
///  S₊₂: −ã2
///  S₊₁: −ã1 x + (2ã2 + b̃1)
///  S₀ : −ã0 x(x−δ) + (2ã1 + b̃0) x − (ã2 + b̃1) + c0
///  S₋₁: 2ã0 x(x−δ) − (ã1 + b̃0) x
///  S₋₂: −ã0 x(x−δ)
/// ```
pub fn e2_five_point<T: Scalar>(p: &E2Params<T>, delta: &GridStep<T>) -> ShiftOperator<T> {
    let d = delta.value();
    let d2 = d.clone() * d;
    let (a0, a1, a2) = (p.a0.clone() / &d2, p.a1.clone() / &d2, p.a2.clone() / &d2);
    let (b0, b1) = (p.b0.clone() / d, p.b1.clone() / d);
    let two = int::<T>(2);
    let xx = x_falling2(d);
    ShiftOperator::from_terms(
        delta.clone(),
        [
            (2, Poly::constant(-a2.clone())),
            (1, lin(two.clone() * &a2 + &b1, -a1.clone())),
            (
                0,
                &xx.scale(&-a0.clone())
                    + &lin(p.c0.clone() - a2 - &b1, two.clone() * &a1 + &b0),
            ),
            (-1, &xx.scale(&(two * &a0)) + &lin(T::zero(), -(a1 + &b0))),
            (-2, xx.scale(&-a0)),
        ],
    )
}

/// Three-point form of `Ẽ`:
///
/// ```text
///  S₊₁: A4/δ + (A2/δ²) x + (A1/δ³) x²
///  S₀ : A5 − A4/δ + (A1/δ² − 2A2/δ² + A3/δ) x − 2(A1/δ³) x²
///  S₋₁: (−A1/δ² + A2/δ² − A3/δ) x + (A1/δ³) x²
/// ```
pub fn three_point_explicit<T: Scalar>(p: &ThreePointParams<T>) -> ShiftOperator<T> {
    let d = p.delta.value();
    let d2 = d.clone() * d;
    let d3 = d2.clone() * d;
    let two = int::<T>(2);
    let a1_3 = p.a1.clone() / &d3;
    let a1_2 = p.a1.clone() / &d2;
    let a2_2 = p.a2.clone() / &d2;
    let a3_1 = p.a3.clone() / d;
    let a4_1 = p.a4.clone() / d;
    ShiftOperator::from_terms(
        p.delta.clone(),
        [
            (1, Poly::from_coeffs(vec![a4_1.clone(), a2_2.clone(), a1_3.clone()])),
            (
                0,
                Poly::from_coeffs(vec![
                    p.a5.clone() - &a4_1,
                    a1_2.clone() - two.clone() * &a2_2 + &a3_1,
                    -(two * &a1_3),
                ]),
            ),
            (-1, Poly::from_coeffs(vec![T::zero(), -a1_2 + &a2_2 - &a3_1, a1_3])),
        ],
    )
}

/// The discrete Hermite operator written out pointwise:
/// `δ⁻² φ(x+2δ) − 2δ⁻² φ(x+δ) − δ⁻¹(2x − δ⁻¹) φ(x) + 2xδ⁻¹ φ(x−δ)`.
pub fn hermite_explicit<T: Scalar>(delta: &GridStep<T>) -> ShiftOperator<T> {
    let d = delta.value();
    let inv = T::one() / d;
    let inv2 = inv.clone() * &inv;
    let two = int::<T>(2);
    ShiftOperator::from_terms(
        delta.clone(),
        [
            (2, Poly::constant(inv2.clone())),
            (1, Poly::constant(-(two.clone() * &inv2))),
            (0, lin(inv2, -(two.clone() * &inv))),
            (-1, lin(T::zero(), two * &inv)),
        ],
    )
}

//! Constructors for the operator families: the hypergeometric operator `E₂`,
//! the quasi-exactly-solvable `T₂` built from spin-`n` generators, the
//! three-point family `Ẽ` and its quasi-exactly-solvable extension `T̃`.

pub mod closed_form;
pub mod presets;

use crate::algebra::{sl2_generator, AlgebraElement, Sl2Kind};
use crate::representations::{realize_lattice, GridStep, ShiftOperator};
use crate::scalar::{frac, Scalar};

pub use presets::{preset_classical, preset_discrete, preset_discrete_as_printed, ClassicalFamily, DiscreteFamily};

/// Coefficients of `E₂ = −Q₂(x) d²/dx² + Q₁(x) d/dx + Q₀` with
/// `Q₂ = a0 x² + a1 x + a2`, `Q₁ = b0 x + b1`, `Q₀ = c0`.
#[derive(Clone, Debug, PartialEq)]
pub struct E2Params<T> {
    pub a0: T,
    pub a1: T,
    pub a2: T,
    pub b0: T,
    pub b1: T,
    pub c0: T,
}

impl<T: Scalar> E2Params<T> {
    /// From `[a0, a1, a2, b0, b1, c0]`.
    pub fn from_array([a0, a1, a2, b0, b1, c0]: [T; 6]) -> Self {
        E2Params { a0, a1, a2, b0, b1, c0 }
    }

    pub fn to_array(&self) -> [T; 6] {
        [
            self.a0.clone(),
            self.a1.clone(),
            self.a2.clone(),
            self.b0.clone(),
            self.b1.clone(),
            self.c0.clone(),
        ]
    }

    /// Diagonal entry at degree `k`: `−a0·k(k−1) + b0·k + c0`.
    pub fn diagonal(&self, k: usize) -> T {
        let k = k as i64;
        -self.a0.clone() * frac::<T>(k * (k - 1), 1) + self.b0.clone() * frac::<T>(k, 1) + &self.c0
    }
}

/// `−(a0 b² + a1 b + a2) a² + (b0 b + b1) a + c0`, normal ordered.
pub fn build_e2<T: Scalar>(p: &E2Params<T>) -> AlgebraElement<T> {
    AlgebraElement::from_terms([
        ((2, 2), -p.a0.clone()),
        ((1, 2), -p.a1.clone()),
        ((0, 2), -p.a2.clone()),
        ((1, 1), p.b0.clone()),
        ((0, 1), p.b1.clone()),
        ((0, 0), p.c0.clone()),
    ])
}

/// Quadratic form in the spin-`n` generators `J⁺ₙ, J⁰ₙ, J⁻ₙ`:
///
/// `c_pp J⁺J⁺ + c_p0 J⁺J⁰ + c_pm J⁺J⁻ + c_00 J⁰J⁰ + c_0m J⁰J⁻ + c_mm J⁻J⁻
///  + c_p J⁺ + c_0 J⁰ + c_m J⁻ + c_const`.
#[derive(Clone, Debug, PartialEq)]
pub struct QesQuadraticForm<T> {
    pub n: u32,
    pub c_pp: T,
    pub c_p0: T,
    pub c_pm: T,
    pub c_00: T,
    pub c_0m: T,
    pub c_mm: T,
    pub c_p: T,
    pub c_0: T,
    pub c_m: T,
    pub c_const: T,
}

impl<T: Scalar> QesQuadraticForm<T> {
    pub fn zero(n: u32) -> Self {
        Self::from_array(n, std::array::from_fn(|_| T::zero()))
    }

    /// Coefficients in the order `pp, p0, pm, 00, 0m, mm, p, 0, m, const`.
    pub fn from_array(n: u32, c: [T; 10]) -> Self {
        let [c_pp, c_p0, c_pm, c_00, c_0m, c_mm, c_p, c_0, c_m, c_const] = c;
        QesQuadraticForm { n, c_pp, c_p0, c_pm, c_00, c_0m, c_mm, c_p, c_0, c_m, c_const }
    }

    fn quadratic_terms(&self) -> [(Sl2Kind, Sl2Kind, &T); 6] {
        use Sl2Kind::*;
        [
            (Plus, Plus, &self.c_pp),
            (Plus, Zero, &self.c_p0),
            (Plus, Minus, &self.c_pm),
            (Zero, Zero, &self.c_00),
            (Zero, Minus, &self.c_0m),
            (Minus, Minus, &self.c_mm),
        ]
    }

    fn linear_terms(&self) -> [(Sl2Kind, &T); 3] {
        [(Sl2Kind::Plus, &self.c_p), (Sl2Kind::Zero, &self.c_0), (Sl2Kind::Minus, &self.c_m)]
    }
}

/// The second-order quasi-exactly-solvable operator as a normal-ordered element.
pub fn build_t2_qes<T: Scalar>(q: &QesQuadraticForm<T>) -> AlgebraElement<T> {
    let gen = |k| sl2_generator::<T>(k, q.n);
    let mut out = AlgebraElement::scalar(q.c_const.clone());
    for (i, j, c) in q.quadratic_terms() {
        if !c.is_zero() {
            out = out.add(&gen(i).mul(&gen(j)).scale(c));
        }
    }
    for (i, c) in q.linear_terms() {
        if !c.is_zero() {
            out = out.add(&gen(i).scale(c));
        }
    }
    out
}

/// `A1..A5` and the grid of the three-point operator
/// `Ẽ = A1 J⁰J⁰(J⁻ + 1/δ) + A2 J⁰J⁻ + A3 J⁰ + A4 J⁻ + A5`.
#[derive(Clone, Debug, PartialEq)]
pub struct ThreePointParams<T> {
    pub a1: T,
    pub a2: T,
    pub a3: T,
    pub a4: T,
    pub a5: T,
    pub delta: GridStep<T>,
}

impl<T: Scalar> ThreePointParams<T> {
    pub fn from_array([a1, a2, a3, a4, a5]: [T; 5], delta: GridStep<T>) -> Self {
        ThreePointParams { a1, a2, a3, a4, a5, delta }
    }

    /// Diagonal entry at degree `k` in the quasi-monomial basis:
    /// `A1·k²/δ + A3·k + A5`.
    pub fn diagonal(&self, k: usize) -> T {
        let k2 = frac::<T>((k * k) as i64, 1);
        self.a1.clone() * k2 / self.delta.value() + self.a3.clone() * frac::<T>(k as i64, 1) + &self.a5
    }
}

/// Generator combination shared by [`build_three_point`] and [`build_t_tilde_qes`].
/// Works for both algebra elements and shift operators through the closures.
fn three_point_combination<X>(
    j0: &X,
    jm: &X,
    mul: impl Fn(&X, &X) -> X,
    add: impl Fn(&X, &X) -> X,
    scale: impl Fn(&X, usize) -> X,
    constant: impl Fn(usize) -> X,
) -> X {
    // index 0..4 → A1..A5, 5 → 1/δ
    let jm_shifted = add(jm, &constant(5));
    let t1 = scale(&mul(&mul(j0, j0), &jm_shifted), 0);
    let t2 = scale(&mul(j0, jm), 1);
    let t3 = scale(j0, 2);
    let t4 = scale(jm, 3);
    let t5 = constant(4);
    [t2, t3, t4, t5].iter().fold(t1, |acc, t| add(&acc, t))
}

fn three_point_scalar<T: Scalar>(p: &ThreePointParams<T>, idx: usize) -> T {
    match idx {
        0 => p.a1.clone(),
        1 => p.a2.clone(),
        2 => p.a3.clone(),
        3 => p.a4.clone(),
        4 => p.a5.clone(),
        _ => T::one() / p.delta.value(),
    }
}

fn three_point_element_with<T: Scalar>(p: &ThreePointParams<T>, n: u32) -> AlgebraElement<T> {
    let j0 = sl2_generator::<T>(Sl2Kind::Zero, n);
    let jm = sl2_generator::<T>(Sl2Kind::Minus, n);
    three_point_combination(
        &j0,
        &jm,
        |x, y| x.mul(y),
        |x, y| x.add(y),
        |x, i| x.scale(&three_point_scalar(p, i)),
        |i| AlgebraElement::scalar(three_point_scalar(p, i)),
    )
}

/// `Ẽ` as an algebra element (its `1/δ` is a plain scalar).
pub fn three_point_element<T: Scalar>(p: &ThreePointParams<T>) -> AlgebraElement<T> {
    three_point_element_with(p, 0)
}

/// `Ẽ` on the lattice, composed from the realized generators
/// `J⁰ = (x/δ)(1 − S₋₁)` and `J⁻ = (S₊₁ − 1)/δ`.
pub fn build_three_point<T: Scalar>(p: &ThreePointParams<T>) -> ShiftOperator<T> {
    three_point_lattice_with(p, 0)
}

fn three_point_lattice_with<T: Scalar>(p: &ThreePointParams<T>, n: u32) -> ShiftOperator<T> {
    let d = &p.delta;
    let j0 = realize_lattice(&sl2_generator::<T>(Sl2Kind::Zero, n), d);
    let jm = realize_lattice(&sl2_generator::<T>(Sl2Kind::Minus, n), d);
    three_point_combination(
        &j0,
        &jm,
        |x, y| x.compose(y).expect("same grid"),
        |x, y| x.add(y).expect("same grid"),
        |x, i| x.scale(&three_point_scalar(p, i)),
        |i| ShiftOperator::identity(d.clone()).scale(&three_point_scalar(p, i)),
    )
}

/// `T̃ = A₊(J⁺ₙ + δ J⁰ₙJ⁰ₙ) + A1 J⁰ₙJ⁰ₙ(J⁻ₙ + 1/δ) + A2 J⁰ₙJ⁻ₙ + A3 J⁰ₙ + A4 J⁻ₙ + A5`
/// as an algebra element.
pub fn t_tilde_element<T: Scalar>(a_plus: &T, p: &ThreePointParams<T>, n: u32) -> AlgebraElement<T> {
    let jp = sl2_generator::<T>(Sl2Kind::Plus, n);
    let j0 = sl2_generator::<T>(Sl2Kind::Zero, n);
    let raising = jp.add(&j0.mul(&j0).scale(p.delta.value())).scale(a_plus);
    raising.add(&three_point_element_with(p, n))
}

/// `T̃` on the lattice, with each spin-`n` generator realized before the
/// products are taken.
pub fn build_t_tilde_qes<T: Scalar>(a_plus: &T, p: &ThreePointParams<T>, n: u32) -> ShiftOperator<T> {
    let d = &p.delta;
    let jp = realize_lattice(&sl2_generator::<T>(Sl2Kind::Plus, n), d);
    let j0 = realize_lattice(&sl2_generator::<T>(Sl2Kind::Zero, n), d);
    let raising = jp
        .add(&j0.compose(&j0).expect("same grid").scale(d.value()))
        .expect("same grid")
        .scale(a_plus);
    raising.add(&three_point_lattice_with(p, n)).expect("same grid")
}

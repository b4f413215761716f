//! Turns the operator flags into an algebra element and its lattice form.

use clap::{Args, ValueEnum};
use isospec::operators::{
    build_e2, build_t2_qes, build_t_tilde_qes, build_three_point, preset_classical, preset_discrete,
    preset_discrete_as_printed, t_tilde_element, three_point_element, ClassicalFamily, DiscreteFamily, E2Params,
    QesQuadraticForm, ThreePointParams,
};
use isospec::representations::realize_lattice;
use isospec::spectral::HERMITE_SIGN_NOTE;
use isospec::{Error, ExactScalar, QAlgebraElement, QGridStep, QShiftOperator, Rational, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OpKind {
    Hermite,
    Laguerre,
    Legendre,
    Jacobi,
    /// Exactly solvable E₂; `--params a0,a1,a2,b0,b1,c0`.
    E2,
    /// Three-point operator; `--params A1,A2,A3,A4,A5` or `--preset`.
    ThreePoint,
    /// Quasi-exactly solvable T₂ on spin `--spin`;
    /// `--params c++,c+0,c+-,c00,c0-,c--,c+,c0,c-,c`.
    Qes,
    /// Three-point QES family; `--aplus` plus `--params A1,A2,A3,A4,A5`.
    QesThreePoint,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum PresetKind {
    Hahn,
    HahnContinued,
    Meixner,
    Charlier,
}

#[derive(Args, Debug, Clone)]
pub struct OperatorArgs {
    /// Operator to build.
    #[arg(long, value_enum)]
    pub op: OpKind,
    /// Comma-separated fractions, e.g. `0,0,-1,-2,0,0` or `1/2,-3`.
    #[arg(long, allow_hyphen_values = true)]
    pub params: Option<String>,
    /// Named parameter set for the three-point operator.
    #[arg(long, value_enum)]
    pub preset: Option<PresetKind>,
    /// Use the preset values exactly as usually quoted, without sign corrections.
    #[arg(long)]
    pub printed: bool,
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub beta: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub gamma: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub mu: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub nu: Option<String>,
    /// Grid size parameter of the Hahn presets.
    #[arg(long = "N", value_name = "N")]
    pub big_n: Option<u32>,
    /// Spin n of the quasi-exactly solvable operators.
    #[arg(long, default_value_t = 0)]
    pub spin: u32,
    /// Coefficient of J⁺ in the three-point QES family.
    #[arg(long, allow_hyphen_values = true, default_value = "1")]
    pub aplus: String,
    /// Grid step as a fraction; presets fix their own.
    #[arg(long, allow_hyphen_values = true)]
    pub delta: Option<String>,
}

/// A resolved operator: its lattice form and, where defined, the algebra
/// element it realizes.
pub struct Resolved {
    pub name: String,
    pub element: QAlgebraElement,
    pub lattice: QShiftOperator,
    pub delta: QGridStep,
    pub notes: Vec<String>,
}

pub fn fraction(s: &str) -> Result<Rational> {
    Rational::parse_fraction(s.trim())
}

fn optional(s: &Option<String>) -> Result<Option<Rational>> {
    s.as_deref().map(fraction).transpose()
}

fn required(s: &Option<String>, flag: &str) -> Result<Rational> {
    optional(s)?.ok_or_else(|| Error::Parse(format!("--{flag} is required")))
}

fn param_list<const N: usize>(s: &Option<String>) -> Result<[Rational; N]> {
    let text = s.as_deref().ok_or_else(|| Error::Parse(format!("--params with {N} values is required")))?;
    let values = text.split(',').map(fraction).collect::<Result<Vec<_>>>()?;
    let got = values.len();
    values.try_into().map_err(|_| Error::Parse(format!("--params expects {N} values, got {got}")))
}

/// `--delta`, defaulting to 1; zero is rejected as a usage error.
pub fn grid_step(s: &Option<String>) -> Result<QGridStep> {
    QGridStep::new(optional(s)?.unwrap_or_else(|| fraction("1").expect("literal")))
        .map_err(|_| Error::Parse("--delta must be a nonzero fraction".into()))
}

impl OperatorArgs {
    fn discrete_family(&self, kind: PresetKind) -> Result<DiscreteFamily<Rational>> {
        let n = || self.big_n.ok_or_else(|| Error::Parse("--N is required for the Hahn presets".into()));
        Ok(match kind {
            PresetKind::Hahn => DiscreteFamily::Hahn {
                alpha: optional(&self.alpha)?.unwrap_or_default(),
                beta: optional(&self.beta)?.unwrap_or_default(),
                n: n()?,
            },
            PresetKind::HahnContinued => DiscreteFamily::HahnContinued {
                mu: required(&self.mu, "mu")?,
                nu: required(&self.nu, "nu")?,
                n: n()?,
            },
            PresetKind::Meixner => DiscreteFamily::Meixner {
                gamma: required(&self.gamma, "gamma")?,
                mu: required(&self.mu, "mu")?,
            },
            PresetKind::Charlier => DiscreteFamily::Charlier { mu: required(&self.mu, "mu")? },
        })
    }

    fn three_point(&self, notes: &mut Vec<String>) -> Result<(String, ThreePointParams<Rational>)> {
        match self.preset {
            Some(kind) => {
                let family = self.discrete_family(kind)?;
                let p = if self.printed { preset_discrete_as_printed(&family) } else { preset_discrete(&family) };
                if let Some(d) = optional(&self.delta)? {
                    if &d != p.delta.value() {
                        return Err(Error::Parse(format!(
                            "--delta {} conflicts with the {} preset grid step {}",
                            d.to_fraction_string(),
                            family.name(),
                            p.delta.value().to_fraction_string()
                        )));
                    }
                }
                if matches!(family, DiscreteFamily::Hahn { .. }) {
                    notes.push("eigenfunctions are Hahn polynomials in the reflected variable -x".into());
                }
                if self.printed && matches!(family, DiscreteFamily::Hahn { .. } | DiscreteFamily::Meixner { .. }) {
                    notes.push("printed preset values: eigenfunctions do not match the named family".into());
                }
                Ok((family.name().to_string(), p))
            }
            None => Ok(("three-point".into(), ThreePointParams::from_array(param_list(&self.params)?, grid_step(&self.delta)?))),
        }
    }

    pub fn resolve(&self) -> Result<Resolved> {
        let mut notes = Vec::new();
        let classical = |family: ClassicalFamily<Rational>, notes: &mut Vec<String>| -> Result<Resolved> {
            if family == ClassicalFamily::Hermite {
                notes.push(HERMITE_SIGN_NOTE.to_string());
            }
            let e = build_e2(&preset_classical(&family)?);
            let d = grid_step(&self.delta)?;
            Ok(Resolved {
                name: family.name().into(),
                lattice: realize_lattice(&e, &d),
                element: e,
                delta: d,
                notes: std::mem::take(notes),
            })
        };
        let alpha = optional(&self.alpha)?;
        let beta = optional(&self.beta)?;
        match self.op {
            OpKind::Hermite => classical(ClassicalFamily::Hermite, &mut notes),
            OpKind::Laguerre => classical(ClassicalFamily::Laguerre { alpha: alpha.unwrap_or_default() }, &mut notes),
            OpKind::Legendre => classical(ClassicalFamily::Legendre, &mut notes),
            OpKind::Jacobi => classical(
                ClassicalFamily::Jacobi { alpha: alpha.unwrap_or_default(), beta: beta.unwrap_or_default() },
                &mut notes,
            ),
            OpKind::E2 => {
                let e = build_e2(&E2Params::from_array(param_list(&self.params)?));
                let d = grid_step(&self.delta)?;
                Ok(Resolved { name: "e2".into(), lattice: realize_lattice(&e, &d), element: e, delta: d, notes })
            }
            OpKind::Qes => {
                let e = build_t2_qes(&QesQuadraticForm::from_array(self.spin, param_list(&self.params)?));
                let d = grid_step(&self.delta)?;
                Ok(Resolved { name: "qes".into(), lattice: realize_lattice(&e, &d), element: e, delta: d, notes })
            }
            OpKind::ThreePoint => {
                let (name, p) = self.three_point(&mut notes)?;
                Ok(Resolved {
                    name,
                    element: three_point_element(&p),
                    lattice: build_three_point(&p),
                    delta: p.delta,
                    notes,
                })
            }
            OpKind::QesThreePoint => {
                let (_, p) = self.three_point(&mut notes)?;
                let a_plus = fraction(&self.aplus)?;
                Ok(Resolved {
                    name: "qes-three-point".into(),
                    element: t_tilde_element(&a_plus, &p, self.spin),
                    lattice: build_t_tilde_qes(&a_plus, &p, self.spin),
                    delta: p.delta,
                    notes,
                })
            }
        }
    }

    /// Natural degree bound when none is given: the spin for QES operators.
    pub fn default_degree(&self) -> usize {
        match self.op {
            OpKind::Qes | OpKind::QesThreePoint => self.spin as usize,
            _ => 4,
        }
    }
}

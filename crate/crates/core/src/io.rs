//! JSON and CSV forms. Every scalar crosses the boundary as a reduced
//! fraction string.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::algebra::AlgebraElement;
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::representations::{BasisTag, GridStep, Polynomial, ShiftOperator};
use crate::scalar::ExactScalar;
use crate::spectral::{FamilyRow, IsospectralityCertificate, OperatorMatrix, SpectralReport, Stencil};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraTermJson {
    pub m: u32,
    pub n: u32,
    pub coeff: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BasisJson {
    Monomial,
    Quasi(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolynomialJson {
    pub basis: BasisJson,
    pub coeffs: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShiftTermJson {
    pub shift: i64,
    pub coeffs: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShiftOperatorJson {
    pub delta: String,
    pub terms: Vec<ShiftTermJson>,
}

fn strings<T: ExactScalar>(cs: &[T]) -> Vec<String> {
    cs.iter().map(|c| c.to_fraction_string()).collect()
}

fn parse_all<T: ExactScalar>(cs: &[String]) -> Result<Vec<T>> {
    cs.iter().map(|c| T::parse_fraction(c)).collect()
}

fn parse_err(e: serde_json::Error) -> Error {
    Error::Parse(e.to_string())
}

pub fn algebra_to_json<T: ExactScalar>(e: &AlgebraElement<T>) -> Vec<AlgebraTermJson> {
    e.terms()
        .map(|(m, n, c)| AlgebraTermJson { m, n, coeff: c.to_fraction_string() })
        .collect()
}

pub fn algebra_from_json<T: ExactScalar>(terms: &[AlgebraTermJson]) -> Result<AlgebraElement<T>> {
    let parsed = terms
        .iter()
        .map(|t| Ok(((t.m, t.n), T::parse_fraction(&t.coeff)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(AlgebraElement::from_terms(parsed))
}

pub fn basis_to_json<T: ExactScalar>(b: &BasisTag<T>) -> BasisJson {
    match b {
        BasisTag::Monomial => BasisJson::Monomial,
        BasisTag::QuasiMonomial(d) => BasisJson::Quasi(d.value().to_fraction_string()),
    }
}

pub fn basis_from_json<T: ExactScalar>(b: &BasisJson) -> Result<BasisTag<T>> {
    Ok(match b {
        BasisJson::Monomial => BasisTag::Monomial,
        BasisJson::Quasi(d) => BasisTag::QuasiMonomial(GridStep::new(T::parse_fraction(d)?)?),
    })
}

pub fn polynomial_to_json<T: ExactScalar>(p: &Polynomial<T>) -> PolynomialJson {
    PolynomialJson { basis: basis_to_json(p.basis()), coeffs: strings(p.coeffs()) }
}

pub fn polynomial_from_json<T: ExactScalar>(p: &PolynomialJson) -> Result<Polynomial<T>> {
    Ok(Polynomial::new(basis_from_json(&p.basis)?, parse_all(&p.coeffs)?))
}

pub fn shift_operator_to_json<T: ExactScalar>(s: &ShiftOperator<T>) -> ShiftOperatorJson {
    ShiftOperatorJson {
        delta: s.delta().value().to_fraction_string(),
        terms: s
            .terms()
            .map(|(k, p)| ShiftTermJson { shift: k, coeffs: strings(p.coeffs()) })
            .collect(),
    }
}

pub fn shift_operator_from_json<T: ExactScalar>(s: &ShiftOperatorJson) -> Result<ShiftOperator<T>> {
    let delta = GridStep::new(T::parse_fraction(&s.delta)?)?;
    let terms = s
        .terms
        .iter()
        .map(|t| Ok((t.shift, Poly::from_coeffs(parse_all(&t.coeffs)?))))
        .collect::<Result<Vec<_>>>()?;
    Ok(ShiftOperator::from_terms(delta, terms))
}

/// Parses a shift operator document; extra fields (such as `stencil`) are ignored.
pub fn parse_shift_operator<T: ExactScalar>(text: &str) -> Result<ShiftOperator<T>> {
    let wire: ShiftOperatorJson = serde_json::from_str(text).map_err(parse_err)?;
    shift_operator_from_json(&wire)
}

pub fn parse_polynomial<T: ExactScalar>(text: &str) -> Result<Polynomial<T>> {
    let wire: PolynomialJson = serde_json::from_str(text).map_err(parse_err)?;
    polynomial_from_json(&wire)
}

pub fn parse_algebra<T: ExactScalar>(text: &str) -> Result<AlgebraElement<T>> {
    let wire: Vec<AlgebraTermJson> = serde_json::from_str(text).map_err(parse_err)?;
    algebra_from_json(&wire)
}

/// Shift operator plus its stencil summary.
pub fn discretization_json<T: ExactScalar>(s: &ShiftOperator<T>) -> Value {
    let mut v = serde_json::to_value(shift_operator_to_json(s)).expect("plain data");
    v["stencil"] = json!(s.shifts());
    v["points"] = json!(s.point_count());
    v["width"] = json!(s.width());
    v
}

pub fn stencil_json<T: ExactScalar>(s: &Stencil<T>, delta: &GridStep<T>) -> Value {
    json!({
        "delta": delta.value().to_fraction_string(),
        "points": s.point_count(),
        "shifts": s.shifts,
        "coeffs": s.coeffs.iter().map(|p| strings(p.coeffs())).collect::<Vec<_>>(),
    })
}

pub fn matrix_json<T: ExactScalar>(m: &OperatorMatrix<T>) -> Value {
    json!({
        "basis": basis_to_json(&m.basis),
        "degree_bound": m.degree_bound,
        "orientation": "row-major; column j holds the image of the degree-j basis element",
        "entries": m.entries.iter().map(|r| strings(r)).collect::<Vec<_>>(),
        "overflow": m.overflow.map(|o| json!({"column": o.column, "image_degree": o.image_degree})),
    })
}

pub fn spectral_report_json<T: ExactScalar>(r: &SpectralReport<T>) -> Value {
    json!({
        "matrix": matrix_json(&r.matrix),
        "triangular": r.triangular,
        "char_poly": strings(r.char_poly.coeffs()),
        "diagonal": strings(&r.matrix.diagonal()),
        "eigenpairs": r.eigenpairs.as_ref().map(|ps| ps.iter().map(|(l, v)| json!({
            "eigenvalue": l.to_fraction_string(),
            "eigenfunction": polynomial_to_json(v),
        })).collect::<Vec<_>>()),
        "notes": r.notes,
        "warning": r.warning,
    })
}

pub fn certificate_json<T: ExactScalar>(c: &IsospectralityCertificate<T>) -> Value {
    json!({
        "delta": c.delta.value().to_fraction_string(),
        "degree_bound": c.degree_bound,
        "continuum_char_poly": strings(c.continuum_char_poly.coeffs()),
        "lattice_char_poly": strings(c.lattice_char_poly.coeffs()),
        "verdict": c.verdict,
        "notes": c.notes,
    })
}

pub fn family_json<T: ExactScalar>(rows: &[FamilyRow<T>]) -> Value {
    json!(rows
        .iter()
        .map(|r| json!({
            "k": r.k,
            "eigenvalue": r.eigenvalue.to_fraction_string(),
            "continuum": strings(r.continuum.coeffs()),
            "quasi": polynomial_to_json(&r.discrete),
            "monomial": strings(r.discrete_monomial.coeffs()),
            "verified": r.verified,
        }))
        .collect::<Vec<_>>())
}

/// One row per degree: `k, eigenvalue, verified, m0..m_K, q0..q_K`
/// (monomial then quasi-monomial coefficients, zero padded).
pub fn family_csv<T: ExactScalar>(rows: &[FamilyRow<T>]) -> Result<String> {
    let width = rows.iter().map(|r| r.k + 1).max().unwrap_or(1);
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header = vec!["k".to_string(), "eigenvalue".into(), "verified".into()];
    header.extend((0..width).map(|i| format!("m{i}")));
    header.extend((0..width).map(|i| format!("q{i}")));
    w.write_record(&header).map_err(|e| Error::Parse(e.to_string()))?;
    for r in rows {
        let pad = |cs: &[T]| {
            (0..width)
                .map(|i| cs.get(i).map(|c| c.to_fraction_string()).unwrap_or_else(|| "0".into()))
                .collect::<Vec<_>>()
        };
        let mut rec = vec![r.k.to_string(), r.eigenvalue.to_fraction_string(), r.verified.to_string()];
        rec.extend(pad(r.discrete_monomial.coeffs()));
        rec.extend(pad(r.discrete.coeffs()));
        w.write_record(&rec).map_err(|e| Error::Parse(e.to_string()))?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Parse(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

/// Generic table of polynomials, one row per degree.
pub fn polynomials_csv<T: ExactScalar>(polys: &[Poly<T>]) -> Result<String> {
    let width = polys.iter().map(|p| p.coeffs().len()).max().unwrap_or(1).max(1);
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header = vec!["k".to_string()];
    header.extend((0..width).map(|i| format!("c{i}")));
    w.write_record(&header).map_err(|e| Error::Parse(e.to_string()))?;
    for (k, p) in polys.iter().enumerate() {
        let mut rec = vec![k.to_string()];
        rec.extend((0..width).map(|i| p.coeff(i).to_fraction_string()));
        w.write_record(&rec).map_err(|e| Error::Parse(e.to_string()))?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Parse(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

/// One row per stencil point: `shift, c0..c_K` (coefficients of the
/// shift's polynomial, zero padded).
pub fn stencil_csv<T: ExactScalar>(s: &Stencil<T>) -> Result<String> {
    let width = s.coeffs.iter().map(|p| p.coeffs().len()).max().unwrap_or(1).max(1);
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header = vec!["shift".to_string()];
    header.extend((0..width).map(|i| format!("c{i}")));
    w.write_record(&header).map_err(|e| Error::Parse(e.to_string()))?;
    for (k, p) in s.shifts.iter().zip(&s.coeffs) {
        let mut rec = vec![k.to_string()];
        rec.extend((0..width).map(|i| p.coeff(i).to_fraction_string()));
        w.write_record(&rec).map_err(|e| Error::Parse(e.to_string()))?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Parse(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{frac, int};
    use crate::Rational;

    #[test]
    fn algebra_wire_format() {
        let e = AlgebraElement::<Rational>::from_terms([((1, 1), int(1)), ((0, 0), frac(-3, 2))]);
        let text = serde_json::to_string(&algebra_to_json(&e)).unwrap();
        assert_eq!(text, r#"[{"m":0,"n":0,"coeff":"-3/2"},{"m":1,"n":1,"coeff":"1"}]"#);
        assert_eq!(parse_algebra::<Rational>(&text).unwrap(), e);
    }

    #[test]
    fn polynomial_wire_format() {
        let d = GridStep::new(frac::<Rational>(1, 2)).unwrap();
        let p = Polynomial::new(BasisTag::QuasiMonomial(d), vec![int(1), frac(2, 4)]);
        let text = serde_json::to_string(&polynomial_to_json(&p)).unwrap();
        assert_eq!(text, r#"{"basis":{"quasi":"1/2"},"coeffs":["1","1/2"]}"#);
        assert_eq!(parse_polynomial::<Rational>(&text).unwrap(), p);
        let m = Polynomial::<Rational>::new(BasisTag::Monomial, vec![int(0), int(3)]);
        let text = serde_json::to_string(&polynomial_to_json(&m)).unwrap();
        assert_eq!(text, r#"{"basis":"monomial","coeffs":["0","3"]}"#);
    }

    #[test]
    fn shift_operator_sorted_and_parsed_with_extras() {
        let d = GridStep::new(frac::<Rational>(3, 7)).unwrap();
        let s = ShiftOperator::from_terms(
            d,
            [(1, Poly::from_ints(&[1, 2])), (-2, Poly::x()), (0, Poly::constant(frac(-1, 3)))],
        );
        let v = discretization_json(&s);
        let shifts: Vec<i64> = v["terms"].as_array().unwrap().iter().map(|t| t["shift"].as_i64().unwrap()).collect();
        assert_eq!(shifts, vec![-2, 0, 1]);
        assert_eq!(v["points"], 3);
        let back = parse_shift_operator::<Rational>(&v.to_string()).unwrap();
        assert_eq!(back, s);
    }

    #[test]
    fn zero_delta_in_json_rejected() {
        let text = r#"{"delta":"0","terms":[]}"#;
        assert_eq!(parse_shift_operator::<Rational>(text).unwrap_err(), Error::ZeroGridStep);
        assert!(parse_shift_operator::<Rational>("{").is_err());
    }

    #[test]
    fn polynomial_table() {
        let csv = polynomials_csv(&[Poly::<Rational>::one(), Poly::from_coeffs(vec![int(0), frac(1, 2)])]).unwrap();
        assert_eq!(csv, "k,c0,c1\n0,1,0\n1,0,1/2\n");
    }

    #[test]
    fn stencil_table_and_text() {
        let d = GridStep::new(int::<Rational>(1)).unwrap();
        let s = ShiftOperator::from_terms(d, [(-1, Poly::x()), (1, Poly::constant(frac(1, 2)))]);
        let csv = stencil_csv(&crate::spectral::stencil_extract(&s)).unwrap();
        assert_eq!(csv, "shift,c0,c1\n-1,0,1\n1,1/2,0\n");
        assert_eq!(s.to_string(), "[1/2]·S(+1) + [x]·S(-1)");
    }
}

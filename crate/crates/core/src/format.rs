//! Text and JSON formats.
//!
//! * Field spec: `"p"` or `"p^m"`.
//! * Polynomial: ascending comma-separated coefficients, `"1,1,1"` is `1 + X + X^2`.
//!   Over an extension field a coefficient is an `m`-tuple in brackets, `"[0,1],[1,0],1"`;
//!   a bare integer is an element of the prime subfield.
//! * Elements in JSON: an integer for prime fields, an array of `m` coordinates otherwise.
//! * Matrix JSON: `{"rows", "cols", "q", "entries"}`.
//! * Code file: `{"q", "n", "codewords"}` with each codeword its list of RREF basis rows.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::algebra::{Field, FieldElement, Polynomial};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::subspace::{GrassmannianCode, Subspace};

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

pub fn parse_field_spec(spec: &str) -> Result<Field> {
    let spec = spec.trim();
    let (p, m) = match spec.split_once('^') {
        Some((p, m)) => (p.trim(), m.trim()),
        None => (spec, "1"),
    };
    let p: u64 = p
        .parse()
        .map_err(|_| parse_err(format!("bad field characteristic in {spec:?}")))?;
    let m: usize = m
        .parse()
        .map_err(|_| parse_err(format!("bad extension degree in {spec:?}")))?;
    Field::new(p, m)
}

fn split_top_level(s: &str) -> Result<Vec<&str>> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in s.char_indices() {
        match ch {
            '[' => depth += 1,
            ']' => {
                depth -= 1;
                if depth < 0 {
                    return Err(parse_err("unbalanced ']'"));
                }
            }
            ',' if depth == 0 => {
                out.push(s[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    if depth != 0 {
        return Err(parse_err("unbalanced '['"));
    }
    out.push(s[start..].trim());
    Ok(out)
}

fn parse_element(field: &Field, token: &str) -> Result<FieldElement> {
    if let Some(inner) = token.strip_prefix('[').and_then(|t| t.strip_suffix(']')) {
        let coords = inner
            .split(',')
            .map(|c| {
                c.trim()
                    .parse::<u64>()
                    .map_err(|_| parse_err(format!("bad coordinate {c:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        return field.from_coords(&coords);
    }
    let v: u64 = token
        .parse()
        .map_err(|_| parse_err(format!("bad coefficient {token:?}")))?;
    if v >= field.characteristic() {
        return Err(Error::ElementOutOfRange {
            value: v,
            q: field.characteristic(),
        });
    }
    field.element(v)
}

pub fn parse_polynomial(field: &Field, text: &str) -> Result<Polynomial> {
    let text = text.trim();
    if text.is_empty() {
        return Err(parse_err("empty polynomial"));
    }
    let coeffs = split_top_level(text)?
        .into_iter()
        .map(|tok| parse_element(field, tok))
        .collect::<Result<Vec<_>>>()?;
    Ok(Polynomial::new(field, coeffs))
}

fn format_element(field: &Field, e: FieldElement) -> String {
    if field.degree() == 1 {
        e.value().to_string()
    } else {
        let parts: Vec<String> = field.coords(e).iter().map(u64::to_string).collect();
        format!("[{}]", parts.join(","))
    }
}

/// Inverse of [`parse_polynomial`]; the zero polynomial prints as `"0"`.
pub fn format_polynomial(p: &Polynomial) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    p.coeffs()
        .iter()
        .map(|&c| format_element(p.field(), c))
        .collect::<Vec<_>>()
        .join(",")
}

pub fn element_to_json(field: &Field, e: FieldElement) -> Value {
    if field.degree() == 1 {
        Value::from(e.value())
    } else {
        Value::from(field.coords(e))
    }
}

pub fn element_from_json(field: &Field, v: &Value) -> Result<FieldElement> {
    match v {
        Value::Number(n) if field.degree() == 1 => {
            let v = n
                .as_u64()
                .ok_or_else(|| parse_err(format!("bad element {n}")))?;
            field.element(v)
        }
        Value::Array(items) if field.degree() > 1 => {
            let coords = items
                .iter()
                .map(|c| {
                    c.as_u64()
                        .ok_or_else(|| parse_err(format!("bad coordinate {c}")))
                })
                .collect::<Result<Vec<_>>>()?;
            field.from_coords(&coords)
        }
        other => Err(parse_err(format!(
            "element {other} does not match field {field}"
        ))),
    }
}

fn rows_to_json(field: &Field, m: &Matrix) -> Vec<Vec<Value>> {
    (0..m.rows())
        .map(|r| {
            m.row(r)
                .iter()
                .map(|&e| element_to_json(field, e))
                .collect()
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub rows: usize,
    pub cols: usize,
    pub q: String,
    pub entries: Vec<Vec<Value>>,
}

pub fn matrix_to_json(m: &Matrix) -> MatrixJson {
    MatrixJson {
        rows: m.rows(),
        cols: m.cols(),
        q: m.field().spec_string(),
        entries: rows_to_json(m.field(), m),
    }
}

pub fn matrix_from_json(doc: &MatrixJson) -> Result<Matrix> {
    let field = parse_field_spec(&doc.q)?;
    if doc.entries.len() != doc.rows {
        return Err(Error::DimensionMismatch {
            expected: doc.rows,
            found: doc.entries.len(),
        });
    }
    let rows = doc
        .entries
        .iter()
        .map(|r| {
            r.iter()
                .map(|v| element_from_json(&field, v))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Matrix::from_rows(&field, doc.cols, &rows)
}

/// On-disk form of a [`GrassmannianCode`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CodeFile {
    pub q: String,
    pub n: usize,
    pub codewords: Vec<Vec<Vec<Value>>>,
}

pub fn code_to_file(code: &GrassmannianCode) -> CodeFile {
    let field = code.field();
    CodeFile {
        q: field.spec_string(),
        n: code.ambient_dim(),
        codewords: code
            .codewords()
            .iter()
            .map(|c| rows_to_json(field, c.basis()))
            .collect(),
    }
}

pub fn code_from_file(file: &CodeFile) -> Result<GrassmannianCode> {
    let field = parse_field_spec(&file.q)?;
    let codewords = file
        .codewords
        .iter()
        .map(|rows| {
            let rows = rows
                .iter()
                .map(|r| {
                    r.iter()
                        .map(|v| element_from_json(&field, v))
                        .collect::<Result<Vec<_>>>()
                })
                .collect::<Result<Vec<_>>>()?;
            Subspace::from_vectors(&field, file.n, &rows)
        })
        .collect::<Result<Vec<_>>>()?;
    GrassmannianCode::new(&field, file.n, codewords)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::{construction_uniform_gcd, CaFamily};
    use proptest::prelude::*;

    #[test]
    fn field_specs() {
        assert_eq!(parse_field_spec("2").unwrap().order(), 2);
        assert_eq!(parse_field_spec("2^2").unwrap().order(), 4);
        assert_eq!(parse_field_spec("3^1").unwrap().spec_string(), "3");
        assert_eq!(parse_field_spec("4").unwrap_err(), Error::NotPrime(4));
        assert!(matches!(parse_field_spec("x"), Err(Error::Parse(_))));
    }

    #[test]
    fn polynomial_text() {
        let f2 = Field::new(2, 1).unwrap();
        let p = parse_polynomial(&f2, "1,1,1").unwrap();
        assert_eq!(p, Polynomial::from_ints(&f2, &[1, 1, 1]));
        assert_eq!(format_polynomial(&p), "1,1,1");
        assert!(parse_polynomial(&f2, "1,2").is_err());
        let f4 = Field::new(2, 2).unwrap();
        let p = parse_polynomial(&f4, "[0,1],[1,1],1").unwrap();
        assert_eq!(p.coeff(0), f4.generator());
        assert_eq!(format_polynomial(&p), "[0,1],[1,1],[1,0]");
        assert_eq!(parse_polynomial(&f4, &format_polynomial(&p)).unwrap(), p);
        assert!(parse_polynomial(&f4, "[1,1").is_err());
    }

    #[test]
    fn matrix_json_shape() {
        let f = Field::new(3, 1).unwrap();
        let m = Matrix::from_ints(&f, 2, &[vec![1, 2], vec![0, 1]]).unwrap();
        let doc = matrix_to_json(&m);
        let text = serde_json::to_string(&doc).unwrap();
        assert_eq!(
            text,
            r#"{"rows":2,"cols":2,"q":"3","entries":[[1,2],[0,1]]}"#
        );
        assert_eq!(matrix_from_json(&doc).unwrap(), m);
    }

    #[test]
    fn code_file_round_trip() {
        let f = Field::new(2, 1).unwrap();
        let polys = construction_uniform_gcd(3, &Polynomial::one(&f)).unwrap();
        let code = CaFamily::new(polys).unwrap().code().code;
        let file = code_to_file(&code);
        let text = serde_json::to_string(&file).unwrap();
        assert!(text.starts_with(r#"{"q":"2","n":6,"codewords":[[["#));
        let back: CodeFile = serde_json::from_str(&text).unwrap();
        assert_eq!(code_from_file(&back).unwrap(), code);
        assert_eq!(
            serde_json::to_string(&code_to_file(&code_from_file(&back).unwrap())).unwrap(),
            text
        );
    }

    proptest! {
        #[test]
        fn extension_code_files_round_trip(polys in prop::collection::btree_set(prop::collection::vec(0u64..4, 2), 1..4)) {
            let f = Field::new(2, 2).unwrap();
            let members: Vec<Polynomial> = polys
                .into_iter()
                .filter(|c| c[0] != 0)
                .map(|c| Polynomial::new(&f, vec![f.element(c[0]).unwrap(), f.element(c[1]).unwrap(), f.one()]))
                .collect();
            prop_assume!(!members.is_empty());
            let code = CaFamily::new(members).unwrap().code().code;
            let text = serde_json::to_string(&code_to_file(&code)).unwrap();
            let back = code_from_file(&serde_json::from_str(&text).unwrap()).unwrap();
            prop_assert_eq!(&back, &code);
            prop_assert_eq!(serde_json::to_string(&code_to_file(&back)).unwrap(), text);
        }
    }
}

//! Scalar interchange: rationals travel as `"p/q"` strings, floats as JSON numbers.

use serde_json::{Map, Value};
use spintor_core::forms::AltForm;
use spintor_core::{Matrix, Rational, Scalar, Spinor};

use crate::error::{CliError, Result};

/// A core scalar that can be written to a report.
pub trait JsonScalar: Scalar {
    fn from_rational(r: &Rational) -> Self;
    fn to_json(&self) -> Value;
}

impl JsonScalar for Rational {
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }

    fn to_json(&self) -> Value {
        Value::String(self.to_string())
    }
}

impl JsonScalar for f64 {
    fn from_rational(r: &Rational) -> Self {
        r.to_f64()
    }

    fn to_json(&self) -> Value {
        serde_json::Number::from_f64(*self).map_or(Value::Null, Value::Number)
    }
}

/// Reads `"p/q"`, an integer, or a finite decimal (string or number) exactly.
pub fn parse_rational(v: &Value) -> Result<Rational> {
    match v {
        Value::String(s) => parse_rational_str(s),
        Value::Number(n) => parse_rational_str(&n.to_string()),
        other => Err(CliError::input(format!(
            "expected a rational, found {other}"
        ))),
    }
}

pub fn parse_rational_str(s: &str) -> Result<Rational> {
    let t = s.trim().replace('\u{2212}', "-");
    if let Ok(r) = t.parse::<Rational>() {
        return Ok(r);
    }
    decimal(&t).ok_or_else(|| CliError::input(format!("not a rational: {s:?}")))
}

/// `[-]digits[.digits][e[-]digits]` as an exact fraction.
fn decimal(t: &str) -> Option<Rational> {
    let (mantissa, exp) = match t.find(['e', 'E']) {
        Some(k) => (&t[..k], t[k + 1..].parse::<i32>().ok()?),
        None => (t, 0),
    };
    let (sign, body) = match mantissa.strip_prefix('-') {
        Some(rest) => ("-", rest),
        None => ("", mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int, frac) = body.split_once('.').unwrap_or((body, ""));
    if int.is_empty() && frac.is_empty()
        || !int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit())
    {
        return None;
    }
    let shift = exp - i32::try_from(frac.len()).ok()?;
    if shift.unsigned_abs() > 4096 {
        return None;
    }
    let zeros = "0".repeat(shift.unsigned_abs() as usize);
    let text = if shift >= 0 {
        format!("{sign}{int}{frac}{zeros}/1")
    } else {
        format!("{sign}{int}{frac}/1{zeros}")
    };
    text.parse().ok()
}

pub fn parse_vector(values: &[Value], len: usize, what: &str) -> Result<Vec<Rational>> {
    if values.len() != len {
        return Err(CliError::input(format!(
            "{what} needs {len} entries, found {}",
            values.len()
        )));
    }
    values.iter().map(parse_rational).collect()
}

/// Rows of a square matrix; row `k` lists the `e_k` components of the images
/// of `e_1, …, e_n`.
pub fn parse_matrix(rows: &[Vec<Value>], n: usize, what: &str) -> Result<Matrix<Rational>> {
    if rows.len() != n {
        return Err(CliError::input(format!(
            "{what} needs {n} rows, found {}",
            rows.len()
        )));
    }
    let rows = rows
        .iter()
        .enumerate()
        .map(|(k, r)| parse_vector(r, n, &format!("{what} row {}", k + 1)))
        .collect::<Result<Vec<_>>>()?;
    Ok(Matrix::from_rows(rows))
}

pub fn parse_spinor(values: &[Value]) -> Result<Spinor<Rational>> {
    Ok(Spinor::from_slice(&parse_vector(values, 8, "spinor")?)?)
}

pub fn vector_json<T: JsonScalar>(v: &[T]) -> Value {
    Value::Array(v.iter().map(JsonScalar::to_json).collect())
}

pub fn matrix_json<T: JsonScalar>(m: &Matrix<T>) -> Value {
    Value::Array((0..m.rows()).map(|r| vector_json(m.row(r))).collect())
}

/// `{"1,3,5": c, …}` with 1-based increasing index tuples.
pub fn form_json<T: JsonScalar>(f: &AltForm<T>) -> Value {
    let map: Map<String, Value> = f
        .terms()
        .map(|(idx, c)| {
            (
                idx.iter()
                    .map(usize::to_string)
                    .collect::<Vec<_>>()
                    .join(","),
                c.to_json(),
            )
        })
        .collect();
    Value::Object(map)
}

/// Inverse of [`form_json`] for exact fixtures.
pub fn parse_form(v: &Value, degree: usize, dim: usize) -> Result<AltForm<Rational>> {
    let map = v
        .as_object()
        .ok_or_else(|| CliError::input("a form must be a JSON object"))?;
    let mut form = AltForm::zero(degree, dim);
    for (key, c) in map {
        let idx = key
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| CliError::input(format!("bad index tuple {key:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        form.add_term(&idx, parse_rational(c)?)?;
    }
    Ok(form)
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;
    use spintor_core::rat;

    #[test]
    fn rationals_round_trip() {
        for (text, want) in [
            ("-1/2", rat(-1, 2)),
            ("3", rat(3, 1)),
            ("\u{2212}1/4", rat(-1, 4)),
            ("6/4", rat(3, 2)),
        ] {
            assert_eq!(parse_rational(&json!(text)).unwrap(), want);
        }
        assert_eq!(rat(-1, 2).to_json(), json!("-1/2"));
        assert_eq!(rat(2, 1).to_json(), json!("2"));
    }

    #[test]
    fn decimals_are_exact() {
        assert_eq!(parse_rational(&json!("0.125")).unwrap(), rat(1, 8));
        assert_eq!(parse_rational(&json!(-2.5)).unwrap(), rat(-5, 2));
        assert_eq!(parse_rational(&json!("1e-3")).unwrap(), rat(1, 1000));
        assert_eq!(parse_rational(&json!("2.5E2")).unwrap(), rat(250, 1));
    }

    #[test]
    fn garbage_is_rejected() {
        for bad in [
            json!("x"),
            json!("1/0"),
            json!("."),
            json!(null),
            json!([1]),
        ] {
            assert!(parse_rational(&bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn forms_round_trip() {
        let mut f = AltForm::zero(3, 6);
        f.add_term(&[1, 3, 5], rat(1, 1)).unwrap();
        f.add_term(&[4, 1, 6], rat(1, 2)).unwrap();
        let v = form_json(&f);
        assert_eq!(v, json!({"1,3,5": "1", "1,4,6": "-1/2"}));
        assert_eq!(parse_form(&v, 3, 6).unwrap(), f);
    }
}

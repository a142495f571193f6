//! Canonical rendering. Objects go through `serde_json::Value`, whose map
//! keeps keys sorted, and every rational is a `"num/den"` string.

use grover_core::periodicity::PeriodicityVerdict;
use grover_core::scalar::render_rational;
use grover_core::{IntPoly, RatPoly, Rational};
use serde_json::{json, Value};

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

pub fn rational(r: &Rational) -> Value {
    Value::String(render_rational(r))
}

/// Coefficients in ascending degree order.
pub fn rat_poly(p: &RatPoly) -> Value {
    Value::Array(p.coeffs().iter().map(rational).collect())
}

pub fn int_poly(p: &IntPoly) -> Value {
    Value::Array(p.coeffs().iter().map(|c| Value::String(c.to_string())).collect())
}

pub fn verdict(v: &PeriodicityVerdict) -> Value {
    json!({
        "route": v.route.to_string(),
        "periodic": v.periodic,
        "period": v.period,
        "certificate": v.certificate.as_ref().map(|c| json!({
            "cyclotomic_indices": c.factors,
            "period": c.period,
        })),
        "failure_witness": v.failure_witness,
        "tested_polynomial": rat_poly(&v.tested_polynomial),
        "tested_polynomial_display": v.tested_polynomial.display_with("z"),
    })
}

pub fn to_json(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("values always serialize");
    s.push('\n');
    s
}

/// Header plus rows; cells are written verbatim.
pub fn to_csv(header: &[String], rows: &[Vec<String>]) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| CliError::Usage(format!("csv: {e}"));
    w.write_record(header).map_err(io)?;
    for r in rows {
        w.write_record(r).map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Usage(format!("csv: {e}")))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

/// Leaves of a JSON value as `path,value` pairs, in key order.
pub fn flatten(value: &Value) -> Vec<(String, String)> {
    fn walk(prefix: String, v: &Value, out: &mut Vec<(String, String)>) {
        let join = |k: &str| if prefix.is_empty() { k.to_string() } else { format!("{prefix}.{k}") };
        match v {
            Value::Object(m) => m.iter().for_each(|(k, v)| walk(join(k), v, out)),
            Value::Array(a) => a.iter().enumerate().for_each(|(i, v)| walk(join(&i.to_string()), v, out)),
            Value::String(s) => out.push((prefix, s.clone())),
            Value::Null => out.push((prefix, String::new())),
            other => out.push((prefix, other.to_string())),
        }
    }
    let mut out = Vec::new();
    walk(String::new(), value, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn keys_are_sorted() {
        let v = json!({"zeta": 1, "alpha": {"y": 2, "b": 3}});
        let s = to_json(&v);
        assert!(s.find("alpha").unwrap() < s.find("zeta").unwrap());
        assert!(s.find("\"b\"").unwrap() < s.find("\"y\"").unwrap());
    }

    #[test]
    fn flattens_leaves() {
        let v = json!({"a": [1, "x"], "b": null});
        let flat = flatten(&v);
        assert_eq!(
            flat,
            vec![
                ("a.0".to_string(), "1".to_string()),
                ("a.1".to_string(), "x".to_string()),
                ("b".to_string(), String::new()),
            ]
        );
    }

    #[test]
    fn rationals_keep_denominator() {
        assert_eq!(rational(&Rational::from_integer(3.into())), json!("3/1"));
    }
}

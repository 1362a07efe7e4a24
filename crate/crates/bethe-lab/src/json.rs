//! JSON encodings. Rationals are `"p/q"` strings (`"p"` when `q = 1`); a
//! matrix is `{"dim": d, "entries": [[row, col, value], …]}` with zero entries
//! omitted and the rest in row-major order.

use bethe_lab_core::exact::ring::format_rational;
use bethe_lab_core::verifier::{ConfigEcho, Residual, VerificationReport};
use bethe_lab_core::{BiSeries, Matrix, OperatorMatrix, Rational, Ring};
use serde_json::{json, Map, Value};

/// Ring elements that have a JSON form.
pub trait ToJson {
    fn to_json(&self) -> Value;
}

impl ToJson for Rational {
    fn to_json(&self) -> Value {
        Value::String(format_rational(self))
    }
}

impl<R: Ring + ToJson> ToJson for Matrix<R> {
    fn to_json(&self) -> Value {
        let entries: Vec<Value> = self.entries().map(|(r, c, v)| json!([r, c, v.to_json()])).collect();
        json!({ "dim": self.dim(), "entries": entries })
    }
}

pub fn rationals(values: &[Rational]) -> Value {
    Value::Array(values.iter().map(ToJson::to_json).collect())
}

/// `[{"i": i, "j": j, "value": c_ij}, …]` in row-major order.
pub fn series<R: Ring + ToJson>(s: &BiSeries<R>) -> Value {
    Value::Array(
        s.iter()
            .map(|(i, j, c)| json!({ "i": i, "j": j, "value": c.to_json() }))
            .collect(),
    )
}

pub fn operators(ms: &[OperatorMatrix]) -> Value {
    Value::Array(ms.iter().map(ToJson::to_json).collect())
}

pub fn config_echo(c: &ConfigEcho) -> Value {
    let mut m = Map::new();
    if let Some(v) = c.gl_n {
        m.insert("N".into(), json!(v));
    }
    if let Some(v) = c.sites {
        m.insert("n".into(), json!(v));
    }
    if let Some(v) = &c.k {
        m.insert("K".into(), rationals(v));
    }
    if let Some(v) = &c.z {
        m.insert("z".into(), rationals(v));
    }
    if let Some((i, j)) = c.orders {
        m.insert("orders".into(), json!([i, j]));
    }
    if let Some(s) = c.seed {
        m.insert("seed".into(), json!(s));
    }
    for (k, v) in &c.extra {
        m.insert(k.clone(), json!(v));
    }
    Value::Object(m)
}

fn residual(r: &Residual) -> Value {
    json!({
        "location": r.location,
        "entry": r.entry.map(|(a, b)| json!([a, b])),
        "value": r.value.as_ref().map(ToJson::to_json),
    })
}

/// A report; `elapsed_ms` is added only when timing was requested.
pub fn report(r: &VerificationReport, elapsed_ms: Option<f64>) -> Value {
    let mut v = json!({
        "check": r.check,
        "config": config_echo(&r.config),
        "status": if r.passed { "pass" } else { "fail" },
        "comparisons": r.comparisons,
        "first_residual": r.first_residual.as_ref().map(residual),
        "details": r.details,
    });
    if let Some(ms) = elapsed_ms {
        v["elapsed_ms"] = json!(ms);
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use bethe_lab_core::exact::ring::{rat, ratio};

    #[test]
    fn matrices_are_sparse_and_row_major() {
        let m = Matrix::from_dense((), vec![vec![rat(0), ratio(1, 2)], vec![rat(-3), rat(0)]]);
        assert_eq!(
            m.to_json(),
            json!({"dim": 2, "entries": [[0, 1, "1/2"], [1, 0, "-3"]]})
        );
    }

    #[test]
    fn nested_matrices() {
        let inner = Matrix::scalar(1, (), rat(2));
        let outer = Matrix::scalar(1, (1, ()), inner);
        assert_eq!(
            outer.to_json(),
            json!({"dim": 1, "entries": [[0, 0, {"dim": 1, "entries": [[0, 0, "2"]]}]]})
        );
    }
}

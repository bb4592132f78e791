use std::str::FromStr;

use num_rational::BigRational;
use serde_json::{json, Value};

use super::{Poly, RatFun};
use crate::error::{Error, Result};

/// Ascending coefficients as decimal-string rationals, e.g. `["-1","0","1"]`.
pub fn poly_to_json(p: &Poly) -> Value {
    Value::Array(p.coeffs().iter().map(|c| Value::String(c.to_string())).collect())
}

pub fn poly_from_json(v: &Value) -> Result<Poly> {
    let items = v
        .as_array()
        .ok_or_else(|| Error::Malformed("polynomial must be an array of coefficients".into()))?;
    let coeffs = items
        .iter()
        .map(|c| match c {
            Value::String(s) => BigRational::from_str(s.trim())
                .map_err(|_| Error::Malformed(format!("bad rational `{s}`"))),
            Value::Number(n) => n
                .as_i64()
                .map(super::rational)
                .ok_or_else(|| Error::Malformed(format!("non-integer number {n}; use a string"))),
            other => Err(Error::Malformed(format!("bad coefficient {other}"))),
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Poly::new(coeffs))
}

pub fn ratfun_to_json(r: &RatFun) -> Value {
    json!({"num": poly_to_json(r.num()), "den": poly_to_json(r.den())})
}

pub fn ratfun_from_json(v: &Value) -> Result<RatFun> {
    let part = |k: &str| {
        v.get(k)
            .ok_or_else(|| Error::Malformed(format!("rational function needs `{k}`")))
            .and_then(poly_from_json)
    };
    RatFun::new(part("num")?, part("den")?)
}

//! Canonical JSON for polynomials: an object from monomial keys
//! (`"p^2 x0^1 X^3"`, `"1"` for the constant) to `"num/den"` strings, with
//! keys in monomial order.

use serde_json::{Map, Value};

use super::poly::{Monomial, MultiPoly};
use super::ratfun::RationalFunction;
use super::rational::ExactRational;
use crate::error::{Error, Result};

pub fn poly_to_json(f: &MultiPoly) -> Value {
    let mut m = Map::new();
    for (mono, c) in f.terms() {
        m.insert(mono.key(), Value::String(c.to_ratio_string()));
    }
    Value::Object(m)
}

pub fn poly_from_json(v: &Value) -> Result<MultiPoly> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::Parse("polynomial must be a JSON object".into()))?;
    let mut terms = Vec::with_capacity(obj.len());
    for (k, c) in obj {
        let mono = Monomial::parse_key(k)?;
        let coeff: ExactRational = match c {
            Value::String(s) => s.parse()?,
            Value::Number(n) => n
                .as_i64()
                .map(ExactRational::from)
                .ok_or_else(|| Error::Parse(format!("non-integer number {n}")))?,
            other => return Err(Error::Parse(format!("bad coefficient {other}"))),
        };
        terms.push((mono, coeff));
    }
    Ok(MultiPoly::from_terms(terms))
}

/// `{"num": …, "den": …}`; polynomials are written with `den = {"1": "1/1"}`.
pub fn ratfun_to_json(f: &RationalFunction) -> Value {
    serde_json::json!({
        "num": poly_to_json(f.numer()),
        "den": poly_to_json(f.denom()),
    })
}

pub fn ratfun_from_json(v: &Value) -> Result<RationalFunction> {
    match (v.get("num"), v.get("den")) {
        (Some(n), Some(d)) => RationalFunction::new(poly_from_json(n)?, poly_from_json(d)?),
        _ => Ok(RationalFunction::from_poly(poly_from_json(v)?)),
    }
}

//! Strict JSON codecs for the command-line surface.
//!
//! Rationals travel as always-slashed `"num/den"` strings in lowest terms
//! with a positive denominator (`"1/1"`, `"-3/2"`); anything else — `"3/6"`,
//! `"2"`, `"4/-2"` — is rejected so that serialize ∘ parse is the identity
//! byte for byte. Polynomials are `{vars, terms: [{exps, coeff}]}` with the
//! emitted terms following the crate's monomial order; points are arrays of
//! rationals; curves are `{ambient, degree, components}`.

use serde_json::{Map, Value};
use xrank_core::curve::RationalCurve;
use xrank_core::error::{Error, Result};
use xrank_core::mpoly::MPoly;
use xrank_core::rat::Rational;

pub fn encode_rational(r: &Rational) -> Value {
    Value::String(format!("{}/{}", r.numer(), r.denom()))
}

pub fn decode_rational(v: &Value) -> Result<Rational> {
    let s = v
        .as_str()
        .ok_or_else(|| Error::invalid("rationals must be \"num/den\" strings"))?;
    let (num, den) = s
        .split_once('/')
        .ok_or_else(|| Error::invalid(format!("rational {s:?} must be written num/den")))?;
    let num = Rational::parse_canonical(num)
        .map_err(|_| Error::invalid(format!("rational {s:?} has a malformed numerator")))?;
    let den = Rational::parse_canonical(den)
        .map_err(|_| Error::invalid(format!("rational {s:?} has a malformed denominator")))?;
    if !num.is_integer() || !den.is_integer() {
        return Err(Error::invalid(format!("rational {s:?} must be a single fraction")));
    }
    let inv = den
        .recip()
        .map_err(|_| Error::invalid(format!("rational {s:?} has denominator zero")))?;
    let r = &num * &inv;
    if encode_rational(&r).as_str() != Some(s) {
        return Err(Error::invalid(format!(
            "rational {s:?} is not canonical (expected {}/{})",
            r.numer(),
            r.denom()
        )));
    }
    Ok(r)
}

pub fn encode_point(p: &[Rational]) -> Value {
    Value::Array(p.iter().map(encode_rational).collect())
}

pub fn decode_point(v: &Value) -> Result<Vec<Rational>> {
    let arr = v
        .as_array()
        .ok_or_else(|| Error::invalid("a point must be an array of rationals"))?;
    if arr.is_empty() {
        return Err(Error::invalid("a point needs at least one coordinate"));
    }
    arr.iter().map(decode_rational).collect()
}

fn as_object<'v>(v: &'v Value, what: &str, keys: &[&str]) -> Result<&'v Map<String, Value>> {
    let map = v
        .as_object()
        .ok_or_else(|| Error::invalid(format!("{what} must be a JSON object")))?;
    for k in map.keys() {
        if !keys.contains(&k.as_str()) {
            return Err(Error::invalid(format!("{what} has an unknown field {k:?}")));
        }
    }
    for k in keys {
        if !map.contains_key(*k) {
            return Err(Error::invalid(format!("{what} is missing the field {k:?}")));
        }
    }
    Ok(map)
}

fn small_uint(v: &Value, what: &str) -> Result<usize> {
    v.as_u64()
        .filter(|&n| n <= u32::MAX as u64)
        .map(|n| n as usize)
        .ok_or_else(|| Error::invalid(format!("{what} must be a small nonnegative integer")))
}

pub fn encode_poly(p: &MPoly) -> Value {
    let terms: Vec<Value> = p
        .terms()
        .iter()
        .map(|(m, c)| {
            let mut t = Map::new();
            t.insert(
                String::from("exps"),
                Value::Array(m.iter().map(|&e| Value::from(e)).collect()),
            );
            t.insert(String::from("coeff"), encode_rational(c));
            Value::Object(t)
        })
        .collect();
    let mut obj = Map::new();
    obj.insert(String::from("vars"), Value::from(p.nvars() as u64));
    obj.insert(String::from("terms"), Value::Array(terms));
    Value::Object(obj)
}

pub fn decode_poly(v: &Value) -> Result<MPoly> {
    let map = as_object(v, "a polynomial", &["vars", "terms"])?;
    let vars = small_uint(&map["vars"], "\"vars\"")?;
    if vars == 0 {
        return Err(Error::invalid("a polynomial needs at least one variable"));
    }
    let terms_json = map["terms"]
        .as_array()
        .ok_or_else(|| Error::invalid("\"terms\" must be an array"))?;
    let mut terms = Vec::with_capacity(terms_json.len());
    for t in terms_json {
        let tm = as_object(t, "a term", &["exps", "coeff"])?;
        let exps_json = tm["exps"]
            .as_array()
            .ok_or_else(|| Error::invalid("\"exps\" must be an array"))?;
        if exps_json.len() != vars {
            return Err(Error::invalid(format!(
                "a term has {} exponents but the polynomial declares {vars} variables",
                exps_json.len()
            )));
        }
        let exps = exps_json
            .iter()
            .map(|e| small_uint(e, "an exponent").map(|n| n as u32))
            .collect::<Result<Vec<u32>>>()?;
        terms.push((exps, decode_rational(&tm["coeff"])?));
    }
    if terms.is_empty() {
        return Ok(MPoly::zero(vars));
    }
    Ok(MPoly::from_terms(vars, terms))
}

pub fn encode_curve(x: &RationalCurve) -> Value {
    let mut obj = Map::new();
    obj.insert(String::from("ambient"), Value::from(x.ambient() as u64));
    obj.insert(String::from("degree"), Value::from(x.degree() as u64));
    obj.insert(
        String::from("components"),
        Value::Array(x.components().iter().map(encode_poly).collect()),
    );
    Value::Object(obj)
}

pub fn decode_curve(v: &Value) -> Result<RationalCurve> {
    let map = as_object(v, "a curve", &["ambient", "degree", "components"])?;
    let ambient = small_uint(&map["ambient"], "\"ambient\"")?;
    let degree = small_uint(&map["degree"], "\"degree\"")?;
    let comps_json = map["components"]
        .as_array()
        .ok_or_else(|| Error::invalid("\"components\" must be an array"))?;
    let mut comps = Vec::with_capacity(comps_json.len());
    for c in comps_json {
        let p = decode_poly(c)?;
        if p.nvars() != 2 {
            return Err(Error::invalid("curve components must be binary forms (vars = 2)"));
        }
        comps.push(p);
    }
    let x = RationalCurve::new(comps)?;
    if x.ambient() != ambient {
        return Err(Error::invalid(format!(
            "declared ambient {ambient} disagrees with the {} components",
            x.ambient() + 1
        )));
    }
    if x.degree() != degree {
        return Err(Error::invalid(format!(
            "declared degree {degree} disagrees with the computed degree {}",
            x.degree()
        )));
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn rational_codec_is_strict() {
        for good in ["0/1", "1/1", "-3/2", "10/3"] {
            let r = decode_rational(&Value::String(good.into())).unwrap();
            assert_eq!(encode_rational(&r).as_str().unwrap(), good);
        }
        for bad in ["3/6", "2", "/1", "4/-2", "1/0", "-0/1", "02/1", "1/2/3", ""] {
            assert!(decode_rational(&Value::String(bad.into())).is_err(), "{bad}");
        }
        assert!(decode_rational(&json!(2)).is_err());
    }

    #[test]
    fn poly_round_trip_in_monomial_order() {
        let f = json!({
            "vars": 2,
            "terms": [
                {"exps": [3, 0], "coeff": "1/1"},
                {"exps": [0, 3], "coeff": "-2/3"}
            ]
        });
        let p = decode_poly(&f).unwrap();
        let back = encode_poly(&p);
        assert_eq!(decode_poly(&back).unwrap(), p);
        // unknown fields and exponent mismatches are rejected
        assert!(decode_poly(&json!({"vars": 2, "terms": [], "extra": 1})).is_err());
        assert!(
            decode_poly(&json!({"vars": 2, "terms": [{"exps": [1], "coeff": "1/1"}]})).is_err()
        );
    }

    #[test]
    fn curve_codec_checks_declared_invariants() {
        let comp = |e0: u32, e1: u32| json!({"vars": 2, "terms": [{"exps": [e0, e1], "coeff": "1/1"}]});
        let good = json!({
            "ambient": 3,
            "degree": 3,
            "components": [comp(3, 0), comp(2, 1), comp(1, 2), comp(0, 3)]
        });
        let x = decode_curve(&good).unwrap();
        assert_eq!(x.ambient(), 3);
        let bad = json!({
            "ambient": 2,
            "degree": 3,
            "components": [comp(3, 0), comp(2, 1), comp(1, 2), comp(0, 3)]
        });
        assert!(decode_curve(&bad).is_err());
    }
}

//! JSON building and parsing helpers shared by the reports and the CLI.
//! Rationals are serialized as `{"num": "...", "den": "..."}` decimal
//! strings; lattice coordinates as plain integers. All maps are BTree-backed
//! so serialized output is byte-stable.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::exactlin::{LatticeVector, RatMatrix, RationalFunctional};
use crate::monoid::SharpFsMonoid;
use crate::ratio::{FaceChain, RatioChartPoint};

pub const SCHEMA: &str = "ratiospace/v1";

pub fn rational_value(r: &BigRational) -> Value {
    json!({ "num": r.numer().to_string(), "den": r.denom().to_string() })
}

pub fn int_value(i: &BigInt) -> Value {
    match i.to_i64() {
        Some(v) => json!(v),
        None => json!(i.to_string()),
    }
}

pub fn int_vec_value(v: &[BigInt]) -> Value {
    Value::Array(v.iter().map(int_value).collect())
}

pub fn rational_vec_value(v: &[BigRational]) -> Value {
    Value::Array(v.iter().map(rational_value).collect())
}

pub fn functional_value(f: &RationalFunctional) -> Value {
    rational_vec_value(f.coeffs())
}

pub fn matrix_value(m: &RatMatrix) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|r| Value::Array((0..m.cols()).map(|c| rational_value(m.get(r, c))).collect()))
            .collect(),
    )
}

pub fn chart_point_value(p: &RatioChartPoint) -> Value {
    Value::Array(p.functionals().iter().map(functional_value).collect())
}

/// Top-level report object carrying the schema version.
pub fn report(entries: Vec<(&str, Value)>) -> Value {
    let mut map = Map::new();
    map.insert("schema".into(), json!(SCHEMA));
    for (k, v) in entries {
        map.insert(k.into(), v);
    }
    Value::Object(map)
}

pub fn render(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report values serialize");
    s.push('\n');
    s
}

fn bad(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}

pub fn parse_bigint(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(BigInt::from(i))
            } else if let Some(u) = n.as_u64() {
                Ok(BigInt::from(u))
            } else {
                Err(bad(format!("expected an integer, got {n}")))
            }
        }
        Value::String(s) => s
            .trim()
            .parse::<BigInt>()
            .map_err(|_| bad(format!("expected an integer, got {s:?}"))),
        other => Err(bad(format!("expected an integer, got {other}"))),
    }
}

/// Accepts an integer, a string `"a"` or `"a/b"`, or `{"num": …, "den": …}`.
pub fn parse_rational(v: &Value) -> Result<BigRational> {
    match v {
        Value::Number(_) => Ok(BigRational::from_integer(parse_bigint(v)?)),
        Value::String(s) => {
            let (num, den) = match s.split_once('/') {
                Some((a, b)) => (a.trim(), b.trim()),
                None => (s.trim(), "1"),
            };
            let n = num
                .parse::<BigInt>()
                .map_err(|_| bad(format!("bad rational numerator {num:?}")))?;
            let d = den
                .parse::<BigInt>()
                .map_err(|_| bad(format!("bad rational denominator {den:?}")))?;
            if d == BigInt::from(0) {
                return Err(bad("rational denominator is zero"));
            }
            Ok(BigRational::new(n, d))
        }
        Value::Object(map) => {
            let n = map.get("num").ok_or_else(|| bad("rational object missing \"num\""))?;
            let d = map.get("den").ok_or_else(|| bad("rational object missing \"den\""))?;
            let num = parse_bigint(n)?;
            let den = parse_bigint(d)?;
            if den == BigInt::from(0) {
                return Err(bad("rational denominator is zero"));
            }
            Ok(BigRational::new(num, den))
        }
        other => Err(bad(format!("expected a rational, got {other}"))),
    }
}

pub fn parse_int_vec(v: &Value) -> Result<LatticeVector> {
    v.as_array()
        .ok_or_else(|| bad("expected an array of integers"))?
        .iter()
        .map(parse_bigint)
        .collect()
}

pub fn parse_usize_vec(v: &Value) -> Result<Vec<usize>> {
    v.as_array()
        .ok_or_else(|| bad("expected an array of indices"))?
        .iter()
        .map(|x| {
            x.as_u64()
                .map(|u| u as usize)
                .ok_or_else(|| bad(format!("expected an index, got {x}")))
        })
        .collect()
}

pub fn parse_functional(v: &Value) -> Result<RationalFunctional> {
    let coeffs = v
        .as_array()
        .ok_or_else(|| bad("expected an array of rationals"))?
        .iter()
        .map(parse_rational)
        .collect::<Result<Vec<_>>>()?;
    Ok(RationalFunctional::new(coeffs))
}

fn field<'a>(v: &'a Value, name: &str) -> Result<&'a Value> {
    v.get(name)
        .ok_or_else(|| bad(format!("missing field {name:?}")))
}

/// `{"dim": d, "generators": [[int, …], …]}`
pub fn parse_monoid(v: &Value) -> Result<SharpFsMonoid> {
    let dim = field(v, "dim")?
        .as_u64()
        .ok_or_else(|| bad("\"dim\" must be a nonnegative integer"))? as usize;
    let generators = field(v, "generators")?
        .as_array()
        .ok_or_else(|| bad("\"generators\" must be an array of vectors"))?
        .iter()
        .map(parse_int_vec)
        .collect::<Result<Vec<_>>>()?;
    SharpFsMonoid::new(dim, generators)
}

/// A chain as a list of generator-support sets, top first, e.g.
/// `[[0,1],[0],[]]`; optional explicit anchors.
pub fn parse_chain(m: &SharpFsMonoid, v: &Value, anchors: Option<&Value>) -> Result<FaceChain> {
    let faces = v
        .as_array()
        .ok_or_else(|| bad("\"chain\" must be an array of support sets"))?
        .iter()
        .map(|s| {
            let support = parse_usize_vec(s)?;
            m.face_by_support(&support)
        })
        .collect::<Result<Vec<_>>>()?;
    match anchors {
        None => FaceChain::new(m, faces),
        Some(a) => {
            let pts = a
                .as_array()
                .ok_or_else(|| bad("\"anchors\" must be an array of vectors"))?
                .iter()
                .map(parse_int_vec)
                .collect::<Result<Vec<_>>>()?;
            FaceChain::with_anchors(m, faces, pts)
        }
    }
}

pub fn parse_chart_point(v: &Value) -> Result<RatioChartPoint> {
    let functionals = v
        .as_array()
        .ok_or_else(|| bad("\"point\" must be an array of functionals"))?
        .iter()
        .map(parse_functional)
        .collect::<Result<Vec<_>>>()?;
    Ok(RatioChartPoint::new(functionals))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::{int_vec, rat_from_i64};
    use crate::monoid::free_monoid;

    #[test]
    fn rational_roundtrip_through_all_three_forms() {
        let r = rat_from_i64(-3, 4);
        let v = rational_value(&r);
        assert_eq!(parse_rational(&v).unwrap(), r);
        assert_eq!(parse_rational(&json!("-3/4")).unwrap(), r);
        assert_eq!(parse_rational(&json!(-3)).unwrap(), rat_from_i64(-3, 1));
        assert_eq!(parse_rational(&json!("7")).unwrap(), rat_from_i64(7, 1));
        assert!(parse_rational(&json!("1/0")).is_err());
        assert!(parse_rational(&json!(0.5)).is_err());
    }

    #[test]
    fn monoid_parsing_checks_shape() {
        let m = parse_monoid(&json!({"dim": 2, "generators": [[1,0],[0,1]]})).unwrap();
        assert_eq!(m.face_count(), 4);
        assert!(parse_monoid(&json!({"generators": []})).is_err());
        assert!(parse_monoid(&json!({"dim": 2, "generators": [[1,0],[-1,0]]})).is_err());
    }

    #[test]
    fn chain_parsing_uses_supports() {
        let m = free_monoid(2);
        let chain = parse_chain(&m, &json!([[0, 1], [0], []]), None).unwrap();
        assert_eq!(chain.len(), 2);
        assert_eq!(chain.anchor(0), int_vec(&[1, 1]));
        let explicit = parse_chain(
            &m,
            &json!([[0, 1], [0], []]),
            Some(&json!([[2, 1], [3, 0]])),
        )
        .unwrap();
        assert_eq!(explicit.anchor(1), int_vec(&[3, 0]));
        assert!(parse_chain(&m, &json!([[0], []]), None).is_err());
    }

    #[test]
    fn reports_carry_the_schema_tag_and_sorted_keys() {
        let r = report(vec![("zeta", json!(1)), ("alpha", json!(2))]);
        let s = render(&r);
        let alpha = s.find("\"alpha\"").unwrap();
        let schema = s.find("\"schema\"").unwrap();
        let zeta = s.find("\"zeta\"").unwrap();
        assert!(alpha < schema && schema < zeta);
        assert!(s.ends_with('\n'));
        assert!(s.contains("ratiospace/v1"));
    }

    #[test]
    fn big_integers_fall_back_to_strings() {
        let big: BigInt = "123456789012345678901234567890".parse().unwrap();
        let v = int_value(&big);
        assert!(v.is_string());
        assert_eq!(parse_bigint(&v).unwrap(), big);
    }
}

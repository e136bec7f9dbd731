//! JSON encodings. Objects keep insertion order, and every collection is
//! emitted in a canonical order, so output is byte-stable.

use demazure_core::{
    Failure, IdentityReport, QPoly, RootSystem, SchurSeries, SigmaFamily, TransitionTable, Weight,
};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};

/// Small integers as JSON numbers, anything wider as a decimal string.
pub fn int(c: &BigInt) -> Value {
    match c.to_i64() {
        Some(x) => Value::from(x),
        None => Value::String(c.to_string()),
    }
}

fn parse_int(v: &Value) -> Option<BigInt> {
    match v {
        Value::Number(n) => n.as_i64().map(BigInt::from),
        Value::String(s) => s.parse().ok(),
        _ => None,
    }
}

/// `{"exp": coef}` with exponents ascending.
pub fn qpoly(p: &QPoly) -> Value {
    let mut m = Map::new();
    for (e, c) in p.terms() {
        m.insert(e.to_string(), int(c));
    }
    Value::Object(m)
}

pub fn parse_qpoly(v: &Value) -> Option<QPoly> {
    let mut terms = Vec::new();
    for (k, c) in v.as_object()? {
        terms.push((k.parse::<i64>().ok()?, parse_int(c)?));
    }
    Some(QPoly::from_terms(terms))
}

pub fn weight(w: &Weight) -> Value {
    json!(w.coords())
}

pub fn parse_weight(rs: &RootSystem, v: &Value) -> Option<Weight> {
    let coords: Vec<i64> = v.as_array()?.iter().map(Value::as_i64).collect::<Option<_>>()?;
    rs.weight(&coords).ok()
}

pub fn series(s: &SchurSeries) -> Value {
    let terms: Vec<Value> =
        s.iter_desc().map(|(w, c)| json!({"weight": weight(w), "poly": qpoly(c)})).collect();
    json!({"n": s.rank(), "basis": "schur", "terms": terms})
}

pub fn parse_series(v: &Value) -> Option<SchurSeries> {
    let n = v.get("n")?.as_u64()? as usize;
    let rs = RootSystem::new(n).ok()?;
    let mut s = SchurSeries::zero(n);
    for t in v.get("terms")?.as_array()? {
        let w = parse_weight(&rs, t.get("weight")?)?;
        s.add(&w, &parse_qpoly(t.get("poly")?)?);
    }
    Some(s)
}

pub fn table(t: &TransitionTable) -> Value {
    let rows: Vec<Value> =
        t.rows().iter().map(|(mu, p)| json!({"mu": weight(mu), "poly": qpoly(p)})).collect();
    json!({"kind": t.kind().name(), "top": weight(t.top()), "rows": rows})
}

pub fn sigma(f: &SigmaFamily) -> Value {
    let sets: Vec<Value> = f
        .entries()
        .filter(|(_, _, ws)| !ws.is_empty())
        .map(|(s, r, ws)| {
            let ws: Vec<Value> = ws.iter().rev().map(weight).collect();
            json!({"s": s, "r": r, "weights": ws})
        })
        .collect();
    json!({"lambda": weight(f.source()), "sets": sets})
}

fn failure(f: &Failure) -> Value {
    json!({"params": f.params, "lhs": qpoly(&f.lhs), "rhs": qpoly(&f.rhs)})
}

pub fn report(r: &IdentityReport) -> Value {
    json!({
        "suite": r.suite.name(),
        "passed": r.passed(),
        "instances": r.instances,
        "skipped": r.skipped,
        "failures": r.failures.iter().map(failure).collect::<Vec<_>>(),
        "notes": r.notes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn qpoly_roundtrip_keeps_order() {
        let p = QPoly::from_terms([(-1, 3), (0, 1), (2, -5), (10, 1)]);
        let v = qpoly(&p);
        assert_eq!(v.to_string(), r#"{"-1":3,"0":1,"2":-5,"10":1}"#);
        assert_eq!(parse_qpoly(&v), Some(p));
    }

    #[test]
    fn wide_coefficients_become_strings() {
        let big: BigInt = "123456789012345678901234567890".parse().unwrap();
        assert_eq!(int(&big), Value::String(big.to_string()));
        assert_eq!(parse_int(&int(&big)), Some(big));
    }

    #[test]
    fn series_shape() {
        let rs = RootSystem::new(2).unwrap();
        let s = SchurSeries::unit(rs.weight(&[1, 1]).unwrap());
        assert_eq!(series(&s).to_string(), r#"{"n":2,"basis":"schur","terms":[{"weight":[1,1],"poly":{"0":1}}]}"#);
        assert_eq!(parse_series(&series(&s)), Some(s));
    }
}

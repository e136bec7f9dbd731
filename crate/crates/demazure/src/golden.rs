//! Checked-in reference expansions and the drift check against them.

use std::collections::BTreeMap;

use demazure_core::{Engine, QPoly, RootSystem, SchurSeries, Weight};
use serde_json::{json, Value};

use crate::json;

pub const FIXTURE: &str = include_str!("../fixtures/golden.json");

#[derive(Clone, Debug)]
pub struct Entry {
    pub id: String,
    pub n: usize,
    pub nu: Weight,
    pub lambda: Weight,
    pub admissible: bool,
    pub expected: SchurSeries,
}

#[derive(Clone, Debug)]
pub struct Outcome {
    pub entry: Entry,
    pub actual: SchurSeries,
    /// `(weight, expected, actual)` for every differing coefficient.
    pub mismatches: Vec<(Weight, QPoly, QPoly)>,
}

impl Outcome {
    pub fn matches(&self) -> bool {
        self.mismatches.is_empty()
    }
}

fn entry(v: &Value) -> Option<Entry> {
    let n = v.get("n")?.as_u64()? as usize;
    let rs = RootSystem::new(n).ok()?;
    Some(Entry {
        id: v.get("id")?.as_str()?.to_owned(),
        n,
        nu: json::parse_weight(&rs, v.get("nu")?)?,
        lambda: json::parse_weight(&rs, v.get("lambda")?)?,
        admissible: v.get("admissible")?.as_bool()?,
        expected: json::parse_series(v.get("series")?)?,
    })
}

pub fn parse(text: &str) -> Result<Vec<Entry>, String> {
    let v: Value = serde_json::from_str(text).map_err(|e| e.to_string())?;
    let entries = v.get("entries").and_then(Value::as_array).ok_or("missing `entries` array")?;
    entries
        .iter()
        .enumerate()
        .map(|(i, e)| entry(e).ok_or_else(|| format!("malformed golden entry {}", i)))
        .collect()
}

pub fn entries() -> Vec<Entry> {
    parse(FIXTURE).expect("checked-in fixture parses")
}

pub fn diff(expected: &SchurSeries, actual: &SchurSeries) -> Vec<(Weight, QPoly, QPoly)> {
    let mut keys: Vec<&Weight> = expected.terms().keys().chain(actual.terms().keys()).collect();
    keys.sort();
    keys.dedup();
    keys.into_iter()
        .rev()
        .filter_map(|w| {
            let (e, a) = (expected.coeff(w), actual.coeff(w));
            (e != a).then(|| (w.clone(), e, a))
        })
        .collect()
}

/// Recomputes every entry with one engine per rank.
pub fn check(entries: Vec<Entry>) -> Vec<Outcome> {
    let mut engines: BTreeMap<usize, Engine> = BTreeMap::new();
    entries
        .into_iter()
        .map(|entry| {
            let e = engines.entry(entry.n).or_insert_with(|| Engine::new(entry.n).expect("rank ≥ 1"));
            let actual = e.g_pair_series(&entry.nu, &entry.lambda);
            let mismatches = diff(&entry.expected, &actual);
            Outcome { entry, actual, mismatches }
        })
        .collect()
}

pub fn outcome_json(o: &Outcome, latex: String) -> Value {
    let mismatches: Vec<Value> = o
        .mismatches
        .iter()
        .map(|(w, e, a)| json!({"weight": json::weight(w), "expected": json::qpoly(e), "actual": json::qpoly(a)}))
        .collect();
    json!({
        "id": o.entry.id,
        "n": o.entry.n,
        "nu": json::weight(&o.entry.nu),
        "lambda": json::weight(&o.entry.lambda),
        "admissible": o.entry.admissible,
        "matches": o.matches(),
        "terms": o.actual.len(),
        "latex": latex,
        "mismatches": mismatches,
    })
}

//! JSON fragments shared by the job reports.

use serde_json::{json, Value};

use logbundle::exactpoly::{format_rational, HomogeneousPoly, Rational, RationalMatrix, UniPoly};
use logbundle::logres::{CohomologyTable, GradedMatrix};
use logbundle::torelli::{HypothesisLedger, IsoConditions, IsoVerdict, IsoWitness};

pub fn rational(q: &Rational) -> Value {
    Value::String(format_rational(q))
}

pub fn vector(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(rational).collect())
}

pub fn matrix(m: &RationalMatrix) -> Value {
    Value::Array(m.to_rows().iter().map(|r| vector(r)).collect())
}

/// Integers that overflow `i64` fall back to decimal strings.
pub fn integer(x: i128) -> Value {
    match i64::try_from(x) {
        Ok(v) => json!(v),
        Err(_) => Value::String(x.to_string()),
    }
}

pub fn poly(f: &HomogeneousPoly) -> Value {
    Value::String(f.to_string())
}

pub fn graded(m: &GradedMatrix) -> Value {
    json!({
        "row_twists": m.row_twists(),
        "col_twists": m.col_twists(),
        "entries": m.entries().iter().map(|r| r.iter().map(poly).collect::<Vec<_>>()).collect::<Vec<_>>(),
    })
}

pub fn univariate(p: &UniPoly) -> Value {
    vector(p.coeffs())
}

pub fn cohomology(t: &CohomologyTable) -> Value {
    Value::Array(t.entries.iter().map(|(&(i, t), &dim)| json!({"i": i, "t": t, "dim": dim})).collect())
}

pub fn ledger(h: &HypothesisLedger) -> Value {
    json!({
        "big_n": h.big_n,
        "enough_components": h.enough_components,
        "normal_crossings": h.normal_crossings,
        "lifted_normal_crossings": h.lifted_normal_crossings,
        "off_rnc": h.off_rnc,
        "all_hold": h.all_hold(),
        "warnings": h.warnings,
    })
}

pub fn verdict(v: IsoVerdict) -> &'static str {
    match v {
        IsoVerdict::Isomorphic => "isomorphic",
        IsoVerdict::NotIsomorphic => "not_isomorphic",
        IsoVerdict::OpenConditionDegenerate => "open_condition_degenerate",
    }
}

fn parameter(t: &Option<Rational>) -> Value {
    match t {
        Some(t) => rational(t),
        None => Value::String("infinity".into()),
    }
}

pub fn iso_conditions(c: &IsoConditions) -> Value {
    json!({
        "frame_diagonals": {"a": vector(&c.a), "b": vector(&c.b), "c": vector(&c.c), "d": vector(&c.d)},
        "residuals": {
            "first": vector(&c.first_residuals),
            "middle": rational(&c.middle_residual),
            "last": vector(&c.last_residuals),
        },
        "open_conditions": {"m1": rational(&c.open_m1), "m2": vector(&c.open_m2)},
        "t1": parameter(&c.t1),
        "t2": parameter(&c.t2),
        "predicted_q1": c.predicted_q1.as_deref().map(vector),
        "predicted_q2": c.predicted_q2.as_deref().map(vector),
        "verdict": verdict(c.verdict),
    })
}

pub fn witness(w: &IsoWitness, verified: bool) -> Value {
    let (det1, det2) = w.determinants();
    json!({
        "m1": matrix(&w.m1),
        "m2": graded(&w.m2),
        "det_m1": rational(&det1),
        "det_m2": rational(&det2),
        "verified": verified,
    })
}

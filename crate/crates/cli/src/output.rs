//! JSON encodings of core values and the plain-text table renderer.

use std::fmt::Write as _;

use coconvex::exactgeom::Halfspace;
use coconvex::verify::{Certificate, InstanceInput, VerificationReport};
use coconvex::{LatticePoint, NewtonRegion, Rational};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};

use coconvex::localalg::Poly;

/// Rationals are always strings, `"p/q"` or `"p"`.
pub fn q(r: &Rational) -> Value {
    Value::String(r.to_string())
}

/// Integers are numbers when they fit in an `i64`.
pub fn int(v: &BigInt) -> Value {
    match v.to_i64() {
        Some(x) => json!(x),
        None => Value::String(v.to_string()),
    }
}

pub fn point(p: &LatticePoint) -> Value {
    json!(p.0)
}

pub fn points(ps: &[LatticePoint]) -> Value {
    Value::Array(ps.iter().map(point).collect())
}

pub fn rat_point(p: &[Rational]) -> Value {
    Value::Array(p.iter().map(q).collect())
}

pub fn halfspace(h: &Halfspace) -> Value {
    json!({"normal": rat_point(h.normal.coeffs()), "offset": q(&h.offset)})
}

pub fn poly(p: &Poly) -> Value {
    let terms: Vec<Value> = p
        .terms()
        .map(|(e, c)| json!({"coeff": q(c), "exp": e.0}))
        .collect();
    json!({ "terms": terms })
}

pub fn region(r: &NewtonRegion) -> Value {
    json!({
        "cone_rays": points(r.cone().rays()),
        "ell": rat_point(r.ell().coeffs()),
        "generators": Value::Array(r.generators().iter().map(|g| rat_point(g)).collect()),
        "facets": Value::Array(r.facets().iter().map(halfspace).collect()),
        "threshold": q(r.threshold()),
    })
}

fn certificate(c: &Certificate) -> Value {
    let input = match &c.input {
        InstanceInput::Staircases(s) => {
            json!({"staircases": Value::Array(s.iter().map(|g| points(g)).collect())})
        }
        InstanceInput::Polynomials(p) => {
            json!({"polynomials": Value::Array(p.iter().map(poly).collect())})
        }
    };
    let mut values = Map::new();
    for (k, v) in &c.values {
        values.insert(k.clone(), q(v));
    }
    json!({
        "index": c.index,
        "homothetic": c.homothetic,
        "outcome": c.outcome.name(),
        "input": input,
        "values": Value::Object(values),
    })
}

pub fn report(r: &VerificationReport) -> Value {
    let cone = match &r.spec.cone {
        coconvex::verify::ConeChoice::Orthant => Value::String("orthant".into()),
        coconvex::verify::ConeChoice::Rays(rays) => points(rays),
    };
    json!({
        "suite": r.suite.name(),
        "spec": {
            "dim": r.spec.dim,
            "cone": cone,
            "min_generators": r.spec.min_generators,
            "max_generators": r.spec.max_generators,
            "exponent_bound": r.spec.exponent_bound,
            "seed": r.spec.seed,
        },
        "instances": r.instances(),
        "violations": r.violations(),
        "equalities": r.equalities(),
        "certificates": Value::Array(r.certificates.iter().map(certificate).collect()),
    })
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(items)
            if items
                .iter()
                .all(|i| scalar(i).is_some() || is_flat_array(i)) =>
        {
            let parts: Vec<String> = items.iter().map(inline).collect();
            Some(format!("[{}]", parts.join(", ")))
        }
        _ => None,
    }
}

fn is_flat_array(v: &Value) -> bool {
    matches!(v, Value::Array(items) if items.iter().all(|i| !i.is_array() && !i.is_object()))
}

fn inline(v: &Value) -> String {
    match v {
        Value::Array(items) => {
            let parts: Vec<String> = items.iter().map(inline).collect();
            format!("[{}]", parts.join(", "))
        }
        Value::Object(m) => {
            let parts: Vec<String> = m
                .iter()
                .map(|(k, v)| format!("{k}={}", inline(v)))
                .collect();
            parts.join(" ")
        }
        other => scalar(other).unwrap_or_default(),
    }
}

/// Renders a JSON object as aligned `key  value` lines; arrays of objects
/// become one row per element.
pub fn table(v: &Value) -> String {
    let mut out = String::new();
    render(v, 0, &mut out);
    out
}

fn render(v: &Value, depth: usize, out: &mut String) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(m) => {
            let width = m.keys().map(String::len).max().unwrap_or(0);
            for (k, val) in m {
                match scalar(val) {
                    Some(s) => {
                        let _ = writeln!(out, "{pad}{k:<width$}  {s}");
                    }
                    None => {
                        let _ = writeln!(out, "{pad}{k}");
                        render(val, depth + 1, out);
                    }
                }
            }
        }
        Value::Array(items) => {
            for item in items {
                let _ = writeln!(out, "{pad}{}", inline(item));
            }
        }
        other => {
            let _ = writeln!(out, "{pad}{}", inline(other));
        }
    }
}

//! Output discipline: every result is one self-describing record, printed
//! either as a JSON line or as a flat `record key=value …` text line.
//! Exact rationals are serialized as `"p/q"`, floats with 17 significant
//! digits, so re-running a command yields byte-identical output.

use num::rational::BigRational;
use serde_json::Value;

pub struct Emitter {
    json: bool,
}

impl Emitter {
    pub fn new(json: bool) -> Self {
        Emitter { json }
    }

    pub fn emit(&self, value: Value) {
        if self.json {
            println!("{value}");
        } else {
            println!("{}", render(&value));
        }
    }
}

fn render(value: &Value) -> String {
    let obj = match value.as_object() {
        Some(o) => o,
        None => return value.to_string(),
    };
    let mut out = String::new();
    if let Some(Value::String(kind)) = obj.get("record") {
        out.push_str(kind);
    }
    for (k, v) in obj {
        if k == "record" {
            continue;
        }
        out.push(' ');
        out.push_str(k);
        out.push('=');
        match v {
            Value::String(s) => out.push_str(s),
            Value::Array(items) => {
                let parts: Vec<String> = items
                    .iter()
                    .map(|x| match x {
                        Value::String(s) => s.clone(),
                        other => other.to_string(),
                    })
                    .collect();
                out.push('[');
                out.push_str(&parts.join("; "));
                out.push(']');
            }
            other => out.push_str(&other.to_string()),
        }
    }
    out
}

/// `p/q` in lowest terms, denominator always present.
pub fn rat(x: &BigRational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// 17 significant digits; enough to round-trip any f64.
pub fn f17(x: f64) -> String {
    format!("{x:.16e}")
}

//! Text, JSON and CSV renderings. All of them are byte-stable: JSON keys are
//! sorted and numbers are printed exactly, without locale formatting.

use std::fmt::Display;
use std::str::FromStr;

use num_bigint::BigUint;
use powercat_core::series::CountTriangle;
use serde::Serialize;
use serde_json::{Number, Value};

use crate::report::{Status, VerificationReport};

/// An exact JSON number, however large.
pub fn number(n: impl Display) -> Value {
    Value::Number(Number::from_str(&n.to_string()).expect("integers are valid JSON numbers"))
}

/// Serializes through `Value`, whose maps are ordered by key.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("plain data serializes");
    let mut s = serde_json::to_string(&v).expect("values serialize");
    s.push('\n');
    s
}

pub fn json_value(v: Value) -> String {
    to_json(&v)
}

/// Quotes a CSV field when needed.
pub fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn levels_text(counts: &[BigUint]) -> String {
    let parts: Vec<String> = counts.iter().map(|c| c.to_string()).collect();
    format!("{}\n", parts.join(","))
}

pub fn levels_json(counts: &[BigUint]) -> String {
    json_value(Value::Array(counts.iter().map(number).collect()))
}

/// Rows `n,value`, indexed from `first`.
pub fn levels_csv(counts: &[BigUint], first: usize) -> String {
    counts.iter().enumerate().map(|(i, c)| format!("{},{}\n", i + first, c)).collect()
}

/// One header-less row `n,k,value` per entry of rows `0..=n_max`.
pub fn triangle_csv(t: &CountTriangle) -> String {
    let mut out = String::new();
    for n in 0..=t.n_max() {
        for (k, c) in t.row(n).iter().enumerate() {
            out.push_str(&format!("{},{},{}\n", n, k, c));
        }
    }
    out
}

/// One line per row, entries separated by spaces.
pub fn triangle_text(t: &CountTriangle) -> String {
    (0..=t.n_max())
        .map(|n| {
            let row: Vec<String> = t.row(n).iter().map(|c| c.to_string()).collect();
            format!("{}\n", row.join(" "))
        })
        .collect()
}

pub fn triangle_json(t: &CountTriangle) -> String {
    json_value(Value::Array(
        (0..=t.n_max())
            .map(|n| Value::Array(t.row(n).iter().map(number).collect()))
            .collect(),
    ))
}

pub fn report_json(r: &VerificationReport) -> String {
    to_json(r)
}

pub fn report_csv(r: &VerificationReport) -> String {
    let mut out = String::from("name,status,sizes,informational,counterexample\n");
    for c in &r.checks {
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            csv_field(&c.name),
            c.status.as_str(),
            csv_field(&c.sizes),
            c.informational,
            csv_field(c.counterexample.as_deref().unwrap_or(""))
        ));
    }
    out
}

pub fn report_text(r: &VerificationReport) -> String {
    let mut out = String::new();
    for c in &r.checks {
        let tag = match (c.status, c.informational) {
            (Status::Pass, _) => "PASS",
            (Status::Fail, false) => "FAIL",
            (Status::Fail, true) => "DIFF",
        };
        out.push_str(&format!("{} {} [{}]", tag, c.name, c.sizes));
        if c.informational {
            out.push_str(" (informational)");
        }
        if let Some(ms) = c.elapsed_ms {
            out.push_str(&format!(" {}ms", ms));
        }
        out.push('\n');
        if let Some(x) = &c.counterexample {
            out.push_str(&format!("    counterexample: {}\n", x));
        }
    }
    let passed = r.checks.iter().filter(|c| c.status == Status::Pass).count();
    out.push_str(&format!(
        "{}: {} ({}/{} checks pass)\n",
        r.suite,
        r.status.as_str(),
        passed,
        r.checks.len()
    ));
    if let Some(note) = &r.note {
        out.push_str(&format!("note: {}\n", note));
    }
    out
}

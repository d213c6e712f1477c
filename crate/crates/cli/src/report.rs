//! JSON rendering of exact results and the error envelope.

use std::io::Write;
use std::process::ExitCode;

use cevian_core::{Check, DilatationClass, Error, PPoint, Scalar};
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};

pub fn lit(s: &Scalar) -> Value {
    Value::String(s.to_string())
}

pub fn rational(r: &BigRational) -> Value {
    lit(&Scalar::from_rational(r.clone()))
}

pub fn point(p: &PPoint) -> Value {
    Value::Array(p.coords().iter().map(lit).collect())
}

pub fn opt_point(p: Option<&PPoint>) -> Value {
    p.map_or(Value::Null, point)
}

pub fn approx(s: &Scalar) -> f64 {
    let f = |r: &BigRational| r.to_f64().unwrap_or(f64::NAN);
    f(s.rational_part()) + f(s.radical_part()) * (s.disc() as f64).sqrt()
}

pub fn approx_point(p: &PPoint) -> Value {
    json!(p.coords().iter().map(approx).collect::<Vec<_>>())
}

pub fn checks(list: &[Check]) -> Value {
    Value::Object(list.iter().map(|c| (c.key.clone(), Value::Bool(c.holds))).collect())
}

pub fn classification(c: &DilatationClass) -> Value {
    let mut out = Map::new();
    out.insert("kind".into(), json!(c.name()));
    out.insert("ratio".into(), c.ratio().as_ref().map_or(Value::Null, lit));
    out.insert("center".into(), opt_point(c.center()));
    if let DilatationClass::Translation(dir) = c {
        out.insert("direction".into(), point(dir));
    }
    Value::Object(out)
}

/// A command failure with its exit code.
#[derive(Debug)]
pub enum Failure {
    /// Bad input or a violated precondition: exit 2.
    Input { kind: String, message: String, detail: Value },
    /// An invariant that must hold did not: exit 3.
    Internal(String),
}

impl Failure {
    pub fn input(kind: &str, message: impl Into<String>) -> Self {
        Failure::Input { kind: kind.into(), message: message.into(), detail: Value::Null }
    }

    pub fn with_detail(self, detail: Value) -> Self {
        match self {
            Failure::Input { kind, message, .. } => Failure::Input { kind, message, detail },
            other => other,
        }
    }
}

fn kebab(name: &str) -> String {
    let mut out = String::new();
    for (i, ch) in name.chars().enumerate() {
        if ch.is_uppercase() {
            if i > 0 {
                out.push('-');
            }
            out.extend(ch.to_lowercase());
        } else {
            out.push(ch);
        }
    }
    out
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Internal(msg) => Failure::Internal(msg),
            other => {
                let debug = format!("{other:?}");
                let name = debug.split('(').next().unwrap_or(&debug);
                Failure::input(&kebab(name), other.to_string())
            }
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::input("io", e.to_string())
    }
}

/// Finished command output: the report object and whether every internal
/// invariant held.
pub struct Outcome {
    pub report: Map<String, Value>,
    pub consistent: bool,
}

pub fn emit(command: &str, result: Result<Outcome, Failure>, timing_ms: Option<f64>) -> ExitCode {
    let (mut body, code) = match result {
        Ok(Outcome { report, consistent }) => (report, if consistent { 0 } else { 3 }),
        Err(Failure::Input { kind, message, detail }) => {
            let mut err = Map::new();
            err.insert("kind".into(), json!(kind));
            err.insert("message".into(), json!(message));
            if !detail.is_null() {
                err.insert("detail".into(), detail);
            }
            let mut body = Map::new();
            body.insert("error".into(), Value::Object(err));
            (body, 2)
        }
        Err(Failure::Internal(message)) => {
            let mut body = Map::new();
            body.insert("error".into(), json!({ "kind": "internal", "message": message }));
            (body, 3)
        }
    };
    if body.is_empty() {
        if let Some(ms) = timing_ms {
            eprintln!("timing_ms: {ms:.3}");
        }
        return ExitCode::from(code);
    }
    body.insert("command".into(), json!(command));
    if let Some(ms) = timing_ms {
        body.insert("timing_ms".into(), json!((ms * 1000.0).round() / 1000.0));
    }
    let text = serde_json::to_string_pretty(&Value::Object(body)).expect("json values serialize");
    // a closed pipe downstream is not a failure of the command
    let _ = writeln!(std::io::stdout().lock(), "{text}");
    ExitCode::from(code)
}

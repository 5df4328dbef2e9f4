use serde::Serialize;
use serde_json::{json, Map, Value};
use thiserror::Error;

use subspace_ca::format::parse_field_spec;

#[derive(Debug, Serialize)]
pub struct Manifest {
    pub subcommand: &'static str,
    pub flags: Value,
    pub field: Option<String>,
    pub version: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

impl Manifest {
    pub fn new(
        subcommand: &'static str,
        flags: &impl Serialize,
        q: Option<&str>,
        seed: Option<u64>,
    ) -> Manifest {
        let field = q.map(|q| {
            parse_field_spec(q)
                .map(|f| f.spec_string())
                .unwrap_or_else(|_| q.to_string())
        });
        Manifest {
            subcommand,
            flags: serde_json::to_value(flags).expect("flags serialize"),
            field,
            version: env!("CARGO_PKG_VERSION"),
            seed,
        }
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Domain(#[from] subspace_ca::Error),
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    #[error("invalid JSON: {0}")]
    Json(String),
    #[error("this subcommand has no table for --csv")]
    NoTable,
}

impl CliError {
    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Domain(e) => e.kind(),
            CliError::Io { .. } => "Io",
            CliError::Json(_) => "Json",
            CliError::NoTable => "NoTable",
        }
    }
}

/// Pretty JSON plus a trailing newline.
pub fn to_line(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

/// The manifest followed by the fields of `body`.
pub fn render(manifest: &Manifest, body: &Value) -> String {
    let mut doc = Map::new();
    doc.insert(
        "manifest".into(),
        serde_json::to_value(manifest).expect("manifest serializes"),
    );
    if let Value::Object(fields) = body {
        for (k, v) in fields {
            doc.insert(k.clone(), v.clone());
        }
    }
    to_line(&Value::Object(doc))
}

pub fn render_error(manifest: &Manifest, err: &CliError) -> String {
    let doc = json!({
        "manifest": serde_json::to_value(manifest).expect("manifest serializes"),
        "error": { "kind": err.kind(), "message": err.to_string() },
    });
    to_line(&doc)
}

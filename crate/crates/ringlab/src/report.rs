//! Machine-readable reports.
//!
//! Reports serialize with sorted keys, so identical computations
//! render byte-identically; the only run-dependent field is
//! `timing_ms`, which [`strip_timing`] removes for comparisons.

use ringlab_core::algebra::{Element, FiniteAlgebra};
use ringlab_core::linalg::Mat;
use ringlab_core::modules::Submodule;
use serde_json::{json, Value};

#[derive(Debug)]
pub struct Report {
    pub command: &'static str,
    pub ring: Value,
    pub payload: Value,
    pub verification: Value,
    pub timing_ms: f64,
}

impl Report {
    pub fn to_value(&self) -> Value {
        json!({
            "command": self.command,
            "ring": self.ring,
            "result": self.payload,
            "verification": self.verification,
            "timing_ms": self.timing_ms,
        })
    }

    pub fn render_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(&self.to_value()).expect("reports serialize");
        out.push('\n');
        out
    }
}

/// Ring identification block shared by every report.
pub fn ring_info(alg: &FiniteAlgebra, source: &str) -> Value {
    json!({
        "source": source,
        "p": alg.field().modulus(),
        "dim": alg.dim(),
        "elements": alg.element_count(),
        "fingerprint": format!("{:016x}", alg.fingerprint()),
    })
}

pub fn coords_value(e: &Element) -> Value {
    json!(e.coords())
}

/// RREF basis rows of a matrix, one integer row per basis vector.
pub fn mat_rows(m: &Mat) -> Value {
    let rows: Vec<Vec<u32>> = (0..m.rows()).map(|r| m.row(r).to_vec()).collect();
    json!(rows)
}

pub fn submodule_value(s: &Submodule) -> Value {
    json!({
        "dim": s.dim(),
        "basis": mat_rows(s.basis()),
    })
}

/// Drops the `timing_ms` lines so two renderings can be compared
/// byte for byte.
pub fn strip_timing(rendered: &str) -> String {
    rendered
        .lines()
        .filter(|line| !line.trim_start().starts_with("\"timing_ms\""))
        .collect::<Vec<_>>()
        .join("\n")
}

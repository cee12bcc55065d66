//! Report builders behind each CLI command.
//!
//! Error contract: [`CliError::Usage`] maps to exit code 2 (bad
//! arguments, unparsable input), [`CliError::Math`] to exit code 1 (a
//! computation ran and failed verification or rejected the element);
//! success is exit 0. Math errors may carry a report describing the
//! failure, which still gets printed.

use std::path::Path;
use std::time::Instant;

use ringlab_core::algebra::{preset, FiniteAlgebra, Preset};
use ringlab_core::modules::{
    principal_right_ideal, quotient, realize, regular_representation, right_annihilator,
};
use ringlab_core::regularity::{
    classify_range, idempotent_power_split, profile_is_consistent, sr1_context, sr1_scan_range,
    verify_split, ClassifySummary, Sr1Options, Sr1Outcome, Trilean,
};
use ringlab_core::theorems::{
    build_chain, default_level_count, unit_witness, verify_chain, ChainError, ChainVariant,
    DecompositionChain,
};
use serde_json::{json, Value};

use crate::expr::parse_element;
use crate::report::{coords_value, mat_rows, ring_info, submodule_value, Report};
use crate::ringspec::parse_ring_spec;

#[derive(Debug)]
pub enum CliError {
    /// Bad invocation or unparsable input; exit code 2.
    Usage(String),
    /// The computation rejected its input or failed verification;
    /// exit code 1. The report, when present, is still printed.
    Math {
        message: String,
        report: Option<Report>,
    },
}

impl CliError {
    fn math(message: impl Into<String>, report: Option<Report>) -> Self {
        CliError::Math {
            message: message.into(),
            report,
        }
    }
}

pub struct RingHandle {
    pub alg: FiniteAlgebra,
    pub source: String,
}

/// Resolves `--ring NAME` or `--ring-file PATH` into a built ring.
pub fn load_ring(ring: Option<&str>, ring_file: Option<&Path>) -> Result<RingHandle, CliError> {
    match (ring, ring_file) {
        (Some(_), Some(_)) => Err(CliError::Usage(String::from(
            "give either --ring or --ring-file, not both",
        ))),
        (None, None) => Err(CliError::Usage(String::from(
            "a ring is required: --ring NAME or --ring-file PATH",
        ))),
        (Some(name), None) => {
            let parsed =
                Preset::parse(name).map_err(|e| CliError::Usage(format!("bad ring name: {e}")))?;
            let alg = preset(name).map_err(|e| CliError::Usage(format!("bad ring: {e}")))?;
            Ok(RingHandle {
                alg,
                source: parsed.to_string(),
            })
        }
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path).map_err(|e| {
                CliError::Usage(format!("cannot read {}: {e}", path.display()))
            })?;
            let spec = parse_ring_spec(&text).map_err(|e| CliError::Usage(e.to_string()))?;
            let alg = spec.build().map_err(|e| CliError::Usage(e.to_string()))?;
            Ok(RingHandle {
                alg,
                source: spec.source_name(),
            })
        }
    }
}

/// Splits `0..count` into at most `jobs` contiguous ranges.
pub fn partition(count: u64, jobs: usize) -> Vec<std::ops::Range<u64>> {
    let jobs = jobs.max(1) as u64;
    let chunk = count.div_ceil(jobs).max(1);
    let mut out = Vec::new();
    let mut start = 0;
    while start < count {
        let end = (start + chunk).min(count);
        out.push(start..end);
        start = end;
    }
    out
}

fn require_jobs(jobs: usize) -> Result<(), CliError> {
    if jobs == 0 {
        return Err(CliError::Usage(String::from("--jobs must be at least 1")));
    }
    Ok(())
}

fn require_enumerable(h: &RingHandle) -> Result<u64, CliError> {
    h.alg.element_count().ok_or_else(|| {
        CliError::Usage(format!(
            "ring has p^{} elements, beyond the exhaustive cap",
            h.alg.dim()
        ))
    })
}

pub fn describe_report(h: &RingHandle) -> Report {
    let start = Instant::now();
    let alg = &h.alg;
    let d = alg.dim();
    let commutative = (0..d).all(|i| {
        (i + 1..d).all(|j| alg.commutes(&alg.basis_element(i), &alg.basis_element(j)))
    });
    let payload = json!({
        "labels": alg.labels(),
        "one": coords_value(&alg.one()),
        "commutative": commutative,
    });
    Report {
        command: "describe",
        ring: ring_info(alg, &h.source),
        payload,
        verification: json!({"all_pass": true}),
        timing_ms: start.elapsed().as_secs_f64() * 1e3,
    }
}

fn trilean_str(t: Trilean) -> &'static str {
    match t {
        Trilean::True => "true",
        Trilean::False => "false",
        Trilean::Unknown => "unknown",
    }
}

pub fn classify_report(h: &RingHandle, jobs: usize) -> Result<Report, CliError> {
    require_jobs(jobs)?;
    let start = Instant::now();
    let alg = &h.alg;
    let count = require_enumerable(h)?;
    let ranges = partition(count, jobs);
    let profiles = std::thread::scope(|scope| {
        let handles: Vec<_> = ranges
            .iter()
            .map(|r| scope.spawn(|| classify_range(alg, r.start, r.end)))
            .collect();
        let mut all = Vec::with_capacity(count as usize);
        for handle in handles {
            all.extend(handle.join().expect("classification worker"));
        }
        all
    });
    let mut summary = ClassifySummary::default();
    let mut consistent = true;
    for p in &profiles {
        summary.absorb(p);
        consistent &= profile_is_consistent(alg, p);
    }
    let profile_values: Vec<Value> = profiles
        .iter()
        .map(|p| {
            json!({
                "index": p.index,
                "element": coords_value(&p.element),
                "formatted": alg.format_element(&p.element),
                "unit": p.is_unit,
                "idempotent": p.is_idempotent,
                "nilpotent": p.is_nilpotent,
                "nilpotency_index": p.nilpotency_index,
                "spr_index": p.spr_index,
                "regular": p.is_regular,
                "unit_regular": trilean_str(p.is_unit_regular),
                "ideal_dim": p.ideal_dim,
                "annihilator_dim": p.annihilator_dim,
            })
        })
        .collect();
    let payload = json!({
        "summary": {
            "total": summary.total,
            "units": summary.units,
            "idempotents": summary.idempotents,
            "nilpotents": summary.nilpotents,
            "regular": summary.regular,
            "unit_regular": summary.unit_regular,
            "unit_regular_unknown": summary.unit_regular_unknown,
        },
        "profiles": profile_values,
    });
    let report = Report {
        command: "classify",
        ring: ring_info(alg, &h.source),
        payload,
        verification: json!({"all_pass": consistent, "profiles_consistent": consistent}),
        timing_ms: start.elapsed().as_secs_f64() * 1e3,
    };
    if !consistent {
        return Err(CliError::math(
            "classification produced inconsistent profiles",
            Some(report),
        ));
    }
    Ok(report)
}

pub fn split_report(h: &RingHandle, element_text: &str) -> Result<Report, CliError> {
    let start = Instant::now();
    let alg = &h.alg;
    let a = parse_element(alg, element_text).map_err(|e| CliError::Usage(e.to_string()))?;
    let split = idempotent_power_split(alg, &a);
    let verified = verify_split(alg, &a, &split);
    let payload = json!({
        "element": coords_value(&a),
        "element_text": element_text,
        "exponent": split.exponent,
        "idempotent": coords_value(&split.idempotent),
        "idempotent_formatted": alg.format_element(&split.idempotent),
        "unit_corner_dim": split.unit_corner.dim(),
        "nil_corner_dim": split.nil_corner.dim(),
        "unit_part": coords_value(&split.unit_part),
        "nil_part": coords_value(&split.nil_part),
        "unit_part_embedded": coords_value(&split.unit_corner.embed(&split.unit_part)),
        "nil_part_embedded": coords_value(&split.nil_corner.embed(&split.nil_part)),
    });
    let report = Report {
        command: "split",
        ring: ring_info(alg, &h.source),
        payload,
        verification: json!({"all_pass": verified, "split_verified": verified}),
        timing_ms: start.elapsed().as_secs_f64() * 1e3,
    };
    if !verified {
        return Err(CliError::math("splitting failed verification", Some(report)));
    }
    Ok(report)
}

pub fn variant_for_flag(theorem: u8) -> Result<ChainVariant, CliError> {
    match theorem {
        2 => Ok(ChainVariant::Exchange),
        4 => Ok(ChainVariant::RegularPowers),
        other => Err(CliError::Usage(format!(
            "--theorem must be 2 (exchange route) or 4 (regular-powers route), got {other}"
        ))),
    }
}

fn chain_error_code(e: &ChainError) -> &'static str {
    match e {
        ChainError::NotRegular => "NotRegular",
        ChainError::PowersNotRegular { .. } => "PowersNotRegular",
        ChainError::ZeroLevels => "ZeroLevels",
        ChainError::NotNilpotentAtLevel { .. } => "NotNilpotentAtThisLevel",
        ChainError::Module(_) => "Module",
        ChainError::Verification(_) => "VerificationFailure",
    }
}

fn variant_name(v: ChainVariant) -> &'static str {
    match v {
        ChainVariant::Exchange => "exchange",
        ChainVariant::RegularPowers => "regular_powers",
    }
}

fn chain_payload(alg: &FiniteAlgebra, chain: &DecompositionChain, element_text: &str) -> Value {
    let levels: Vec<Value> = chain
        .levels
        .iter()
        .map(|l| {
            json!({
                "index": l.index,
                "a_part": submodule_value(&l.a_part),
                "a_prime": submodule_value(&l.a_prime),
                "y_part": submodule_value(&l.y_part),
                "e_part": submodule_value(&l.e_part),
                "iso": mat_rows(l.iso.matrix()),
            })
        })
        .collect();
    json!({
        "element": coords_value(&chain.element),
        "element_text": element_text,
        "element_formatted": alg.format_element(&chain.element),
        "route": variant_name(chain.variant),
        "inner_inverse": coords_value(&chain.inner_inverse),
        "annihilator": submodule_value(&chain.annihilator),
        "quotient_dim": chain.quotient_dim,
        "levels": levels,
    })
}

pub fn chain_report(
    h: &RingHandle,
    element_text: &str,
    theorem: u8,
    levels: Option<u64>,
) -> Result<Report, CliError> {
    let start = Instant::now();
    let alg = &h.alg;
    let variant = variant_for_flag(theorem)?;
    let a = parse_element(alg, element_text).map_err(|e| CliError::Usage(e.to_string()))?;
    let levels = match levels {
        Some(n) => n,
        None => default_level_count(alg, &a).ok_or_else(|| {
            CliError::Usage(String::from(
                "element is not nilpotent, so the level count cannot be inferred; give --levels N",
            ))
        })?,
    };
    if levels == 0 {
        return Err(CliError::Usage(String::from("--levels must be at least 1")));
    }
    let chain = match build_chain(alg, &a, variant, levels) {
        Ok(c) => c,
        Err(e) => {
            let mut payload = json!({
                "element": coords_value(&a),
                "element_text": element_text,
                "route": variant_name(variant),
                "error": chain_error_code(&e),
                "message": e.to_string(),
            });
            if let ChainError::PowersNotRegular { exponent } = &e {
                payload["exponent"] = json!(exponent);
            }
            let report = Report {
                command: "chain",
                ring: ring_info(alg, &h.source),
                payload,
                verification: json!({"all_pass": false}),
                timing_ms: start.elapsed().as_secs_f64() * 1e3,
            };
            return Err(CliError::math(e.to_string(), Some(report)));
        }
    };
    let check_report = verify_chain(alg, &chain);
    let checks: Vec<Value> = check_report
        .checks
        .iter()
        .map(|c| json!({"name": c.name, "pass": c.pass}))
        .collect();
    let mut payload = chain_payload(alg, &chain, element_text);
    let mut all_pass = check_report.all_pass();
    let mut witness_verified = Value::Null;
    if alg.pow(&a, levels).is_zero() {
        match unit_witness(alg, &chain) {
            Ok(w) => {
                let aua_ok = alg.mul(&alg.mul(&a, &w.unit), &a) == a;
                payload["witness"] = json!({
                    "unit": coords_value(&w.unit),
                    "unit_formatted": alg.format_element(&w.unit),
                    "unit_inverse": coords_value(&w.unit_inverse),
                    "annihilator_iso": mat_rows(w.iso.matrix()),
                });
                witness_verified = json!(aua_ok && alg.is_unit(&w.unit));
                all_pass &= aua_ok;
            }
            Err(e) => {
                payload["witness"] = Value::Null;
                payload["witness_error"] = json!(e.to_string());
                witness_verified = json!(false);
                all_pass = false;
            }
        }
    } else {
        payload["witness"] = Value::Null;
        payload["witness_note"] =
            json!(format!("element is nonzero at power {levels}; no unit extracted"));
    }
    let report = Report {
        command: "chain",
        ring: ring_info(alg, &h.source),
        payload,
        verification: json!({
            "all_pass": all_pass,
            "checks": checks,
            "witness_verified": witness_verified,
        }),
        timing_ms: start.elapsed().as_secs_f64() * 1e3,
    };
    if !all_pass {
        return Err(CliError::math("chain failed verification", Some(report)));
    }
    Ok(report)
}

/// Runs the stable-range scan, partitioned across `jobs` workers;
/// worker results merge in index order, so the outcome does not depend
/// on scheduling.
pub fn sr1_outcome(alg: &FiniteAlgebra, jobs: usize) -> Result<(u64, Sr1Outcome), CliError> {
    let ctx = sr1_context(alg).map_err(|e| CliError::Usage(e.to_string()))?;
    let count = ctx.element_count();
    let ranges = partition(count, jobs);
    let merged = std::thread::scope(|scope| {
        let handles: Vec<_> = ranges
            .iter()
            .map(|r| {
                let ctx = &ctx;
                scope.spawn(move || sr1_scan_range(alg, ctx, r.clone(), &Sr1Options::default()))
            })
            .collect();
        let mut merged = Sr1Outcome::default();
        for handle in handles {
            merged.merge(handle.join().expect("scan worker"));
        }
        merged
    });
    Ok((count, merged))
}

pub fn sr1_report(h: &RingHandle, jobs: usize) -> Result<Report, CliError> {
    require_jobs(jobs)?;
    let start = Instant::now();
    let alg = &h.alg;
    let (count, outcome) = sr1_outcome(alg, jobs)?;
    let holds = outcome.counterexample.is_none();
    let counterexample = match &outcome.counterexample {
        None => Value::Null,
        Some(c) => json!({
            "a": coords_value(&c.a),
            "b": coords_value(&c.b),
            "a_formatted": alg.format_element(&c.a),
            "b_formatted": alg.format_element(&c.b),
        }),
    };
    let payload = json!({
        "holds": holds,
        "elements": count,
        "pairs_scanned": outcome.pairs_scanned,
        "comaximal_pairs": outcome.comaximal_pairs,
        "counterexample": counterexample,
    });
    let report = Report {
        command: "sr1",
        ring: ring_info(alg, &h.source),
        payload,
        verification: json!({"all_pass": holds}),
        timing_ms: start.elapsed().as_secs_f64() * 1e3,
    };
    if !holds {
        return Err(CliError::math(
            "found a comaximal pair without a unit translate",
            Some(report),
        ));
    }
    Ok(report)
}

/// Re-derives the end-of-chain isomorphism with the generic
/// module-isomorphism search, independent of the chain construction.
pub fn independent_iso_check(alg: &FiniteAlgebra, a: &ringlab_core::algebra::Element) -> bool {
    use ringlab_core::modules::{find_isomorphism, IsoSearch};
    let rr = regular_representation(alg);
    let k = realize(&rr, &right_annihilator(alg, a)).module;
    let q = quotient(&rr, &principal_right_ideal(alg, a)).module;
    match find_isomorphism(&k, &q) {
        IsoSearch::Found(map) => {
            map.is_module_map(&k, &q) && map.is_bijective(alg.field())
        }
        _ => false,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

pub fn render(report: &Report, format: Format) -> String {
    match format {
        Format::Json => report.render_json(),
        Format::Text => render_text(report),
    }
}

fn scalar_text(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some(String::from("null")),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(items) => {
            let scalars: Option<Vec<String>> = items.iter().map(scalar_text).collect();
            scalars.map(|s| format!("[{}]", s.join(", ")))
        }
        Value::Object(_) => None,
    }
}

fn value_text(v: &Value, indent: usize, out: &mut String) {
    let pad = " ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (key, val) in map {
                match scalar_text(val) {
                    Some(s) => out.push_str(&format!("{pad}{key}: {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}{key}:\n"));
                        value_text(val, indent + 2, out);
                    }
                }
            }
        }
        Value::Array(items) => {
            for item in items {
                match scalar_text(item) {
                    Some(s) => out.push_str(&format!("{pad}- {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}-\n"));
                        value_text(item, indent + 2, out);
                    }
                }
            }
        }
        other => {
            let s = scalar_text(other).expect("non-container values render");
            out.push_str(&format!("{pad}{s}\n"));
        }
    }
}

fn render_text(report: &Report) -> String {
    let mut out = format!("command: {}\n", report.command);
    let ring = &report.ring;
    out.push_str(&format!(
        "ring: {} (p={}, dim={}, fingerprint={})\n",
        ring["source"].as_str().unwrap_or("?"),
        ring["p"],
        ring["dim"],
        ring["fingerprint"].as_str().unwrap_or("?"),
    ));
    out.push_str("result:\n");
    value_text(&report.payload, 2, &mut out);
    match report.verification.get("checks").and_then(Value::as_array) {
        Some(checks) => {
            let passed = checks
                .iter()
                .filter(|c| c["pass"].as_bool() == Some(true))
                .count();
            out.push_str(&format!(
                "verification: {passed}/{} checks pass\n",
                checks.len()
            ));
            for c in checks {
                if c["pass"].as_bool() != Some(true) {
                    out.push_str(&format!("  FAIL {}\n", c["name"].as_str().unwrap_or("?")));
                }
            }
        }
        None => {
            out.push_str(&format!(
                "verification: all_pass={}\n",
                report.verification["all_pass"]
            ));
        }
    }
    out.push_str(&format!("timing_ms: {:.3}\n", report.timing_ms));
    out
}

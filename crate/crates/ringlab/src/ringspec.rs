//! JSON ring specifications.
//!
//! A spec file carries exactly one of
//!
//! * `"preset"`: a catalog name such as `"M(3,2)"`, `"T(2,3)"`,
//!   `"FpC(2,2)"`, or `"prod(M(2,2),T(2,2))"`;
//! * `"explicit"`: a full structure-constant description
//!   `{p, dim, one, mul, labels?}` where `mul[i][j]` lists the
//!   coordinates of the basis product `b_i * b_j`.
//!
//! Parsing is strict: unknown keys are rejected, and the resulting
//! table must pass the algebra axioms (unit laws, associativity).

use ringlab_core::algebra::{preset, AlgebraError, FiniteAlgebra, Preset};
use ringlab_core::linalg::PrimeField;
use serde::Deserialize;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingSpecFile {
    #[serde(default)]
    pub preset: Option<String>,
    #[serde(default)]
    pub explicit: Option<ExplicitSpec>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExplicitSpec {
    pub p: u32,
    pub dim: usize,
    pub one: Vec<u32>,
    /// `mul[i][j]` holds the coordinates of `b_i * b_j`.
    pub mul: Vec<Vec<Vec<u32>>>,
    #[serde(default)]
    pub labels: Option<Vec<String>>,
}

#[derive(Debug)]
pub enum SpecError {
    Json {
        line: usize,
        column: usize,
        message: String,
    },
    Shape(String),
    Algebra(AlgebraError),
}

impl std::fmt::Display for SpecError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SpecError::Json {
                line,
                column,
                message,
            } => {
                write!(f, "ring spec syntax error at line {line}, column {column}: {message}")
            }
            SpecError::Shape(s) => write!(f, "ring spec shape error: {s}"),
            SpecError::Algebra(e) => write!(f, "ring spec failed validation: {e}"),
        }
    }
}

impl std::error::Error for SpecError {}

/// Strict parse of the JSON text; does not build the ring yet.
pub fn parse_ring_spec(text: &str) -> Result<RingSpecFile, SpecError> {
    serde_json::from_str(text).map_err(|e| SpecError::Json {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })
}

impl RingSpecFile {
    /// Builds and validates the described ring.
    pub fn build(&self) -> Result<FiniteAlgebra, SpecError> {
        match (&self.preset, &self.explicit) {
            (Some(_), Some(_)) => Err(SpecError::Shape(String::from(
                "give either \"preset\" or \"explicit\", not both",
            ))),
            (None, None) => Err(SpecError::Shape(String::from(
                "spec needs a \"preset\" name or an \"explicit\" table",
            ))),
            (Some(name), None) => preset(name).map_err(SpecError::Algebra),
            (None, Some(e)) => e.build(),
        }
    }

    /// Short provenance label for reports.
    pub fn source_name(&self) -> String {
        match (&self.preset, &self.explicit) {
            (Some(name), _) => Preset::parse(name)
                .map(|p| p.to_string())
                .unwrap_or_else(|_| name.clone()),
            _ => String::from("explicit"),
        }
    }
}

impl ExplicitSpec {
    pub fn build(&self) -> Result<FiniteAlgebra, SpecError> {
        let field = PrimeField::new(self.p).map_err(|e| SpecError::Shape(e.to_string()))?;
        let d = self.dim;
        if self.mul.len() != d {
            return Err(SpecError::Shape(format!(
                "mul must have {d} rows, got {}",
                self.mul.len()
            )));
        }
        let mut table = Vec::with_capacity(d * d * d);
        for (i, row) in self.mul.iter().enumerate() {
            if row.len() != d {
                return Err(SpecError::Shape(format!(
                    "mul[{i}] must have {d} entries, got {}",
                    row.len()
                )));
            }
            for (j, cell) in row.iter().enumerate() {
                if cell.len() != d {
                    return Err(SpecError::Shape(format!(
                        "mul[{i}][{j}] must have {d} coordinates, got {}",
                        cell.len()
                    )));
                }
                table.extend_from_slice(cell);
            }
        }
        FiniteAlgebra::new(field, d, table, self.one.clone(), self.labels.clone())
            .map_err(SpecError::Algebra)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn preset_spec_builds() {
        let spec = parse_ring_spec(r#"{"preset":"M(2,2)"}"#).unwrap();
        let alg = spec.build().unwrap();
        assert_eq!(alg.dim(), 4);
        assert_eq!(spec.source_name(), "M(2,2)");
    }

    #[test]
    fn explicit_group_algebra_matches_its_preset() {
        let text = r#"{
            "explicit": {
                "p": 2, "dim": 2,
                "one": [1, 0],
                "mul": [[[1,0],[0,1]],[[0,1],[1,0]]],
                "labels": ["g0", "g1"]
            }
        }"#;
        let alg = parse_ring_spec(text).unwrap().build().unwrap();
        let reference = preset("FpC(2,2)").unwrap();
        assert_eq!(alg.fingerprint(), reference.fingerprint());
        assert_eq!(alg.labels(), reference.labels());
    }

    #[test]
    fn unknown_keys_are_rejected() {
        assert!(matches!(
            parse_ring_spec(r#"{"preset":"M(2,2)","seed":1}"#),
            Err(SpecError::Json { .. })
        ));
    }

    #[test]
    fn wrong_table_arity_is_rejected() {
        let text = r#"{"explicit":{"p":2,"dim":2,"one":[1,0],"mul":[[[1,0],[0,1]]]}}"#;
        let err = parse_ring_spec(text).unwrap().build().unwrap_err();
        assert!(matches!(err, SpecError::Shape(_)), "{err}");
    }

    #[test]
    fn both_or_neither_source_is_rejected() {
        let both = r#"{"preset":"M(2,2)","explicit":{"p":2,"dim":1,"one":[1],"mul":[[[1]]]}}"#;
        assert!(parse_ring_spec(both).unwrap().build().is_err());
        assert!(parse_ring_spec("{}").unwrap().build().is_err());
    }

    #[test]
    fn invalid_algebra_is_rejected() {
        // one = 0 violates the unit law for dim > 0
        let text = r#"{"explicit":{"p":2,"dim":1,"one":[0],"mul":[[[1]]]}}"#;
        let err = parse_ring_spec(text).unwrap().build().unwrap_err();
        assert!(matches!(err, SpecError::Algebra(_)));
    }
}

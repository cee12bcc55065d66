//! Command-line front end for the `ringlab-core` machinery: ring-spec
//! ingestion, element literals, JSON reports, and the self-test suite.
//!
//! The binary in `main.rs` is a thin shell over this crate so that the
//! integration tests can drive the same code paths in-process.

pub mod commands;
pub mod expr;
pub mod report;
pub mod ringspec;
pub mod selftest;

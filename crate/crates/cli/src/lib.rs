//! Verification suites, tables and JSON output behind the `arboreal` binary.

pub mod output;
pub mod suites;
pub mod tables;

//! Experiment harness: instance parsing, built-in generators, multi-seed
//! orchestration, diagnostics reports, and the verification suites behind the
//! `gsemo` command-line tool.

pub mod diagnose;
pub mod experiment;
pub mod instances;
pub mod io;
pub mod verify;

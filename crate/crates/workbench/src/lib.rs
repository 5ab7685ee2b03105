//! Batch runner for the identity checks of `workbench-core`: matrix and
//! config files, a registry of named checks, a parallel suite runner and
//! canonical JSON reports.

pub mod config;
pub mod error;
pub mod export;
pub mod input;
pub mod registry;
pub mod report;
pub mod runner;

pub use config::{CheckParams, CheckSpec, SuiteConfig};
pub use error::RunError;
pub use runner::{run_suite, run_with, SuiteOutcome};

/// Process exit codes.
pub mod exit {
    pub const PASS: i32 = 0;
    pub const FAIL: i32 = 1;
    pub const USAGE: i32 = 2;
}

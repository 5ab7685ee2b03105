//! Suite execution. Checks run on a rayon pool; the merged report is sorted,
//! so the body does not depend on scheduling.

use std::time::{Duration, Instant};

use rayon::prelude::*;
use workbench_core::CheckReport;

use crate::config::SuiteConfig;
use crate::error::RunError;
use crate::registry::{run_check, Resolved};
use crate::report::sort_reports;

pub const THREADS_VAR: &str = "WORKBENCH_THREADS";

#[derive(Debug)]
pub struct SuiteOutcome {
    pub reports: Vec<CheckReport>,
    pub total: Duration,
}

impl SuiteOutcome {
    pub fn all_passed(&self) -> bool {
        self.reports.iter().all(|r| r.passed)
    }
}

/// `WORKBENCH_THREADS` wins over the configured degree; unset means one
/// thread per core.
pub fn degree(cfg: &SuiteConfig) -> Result<usize, RunError> {
    match std::env::var(THREADS_VAR) {
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(d) if d > 0 => Ok(d),
            _ => Err(RunError::param("suite", format!("{THREADS_VAR} = `{v}` is not a positive integer"))),
        },
        Err(_) => Ok(cfg.parallelism.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |d| d.get()))),
    }
}

fn timed(r: &Resolved) -> Result<Vec<CheckReport>, RunError> {
    let start = Instant::now();
    let mut reps = run_check(r)?;
    let each = start.elapsed() / reps.len().max(1) as u32;
    for rep in &mut reps {
        rep.elapsed = Some(each);
    }
    Ok(reps)
}

/// Runs every check with the given degree of parallelism.
pub fn run_with(cfg: &SuiteConfig, threads: usize) -> Result<SuiteOutcome, RunError> {
    cfg.validate()?;
    let start = Instant::now();
    let jobs: Vec<Resolved> = cfg
        .checks
        .iter()
        .map(|c| Resolved::new(&c.name, &c.params, &cfg.inputs, &cfg.defaults, cfg.base_dir.as_deref()))
        .collect();
    let results: Vec<Result<Vec<CheckReport>, RunError>> = if threads <= 1 {
        jobs.iter().map(timed).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .map_err(|e| RunError::param("suite", e.to_string()))?;
        pool.install(|| jobs.par_iter().map(timed).collect())
    };
    let mut reports = Vec::new();
    for r in results {
        reports.extend(r?);
    }
    sort_reports(&mut reports);
    Ok(SuiteOutcome { reports, total: start.elapsed() })
}

pub fn run_suite(cfg: &SuiteConfig) -> Result<SuiteOutcome, RunError> {
    run_with(cfg, degree(cfg)?)
}

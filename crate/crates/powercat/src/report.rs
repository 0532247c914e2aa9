use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

type CheckFn = Box<dyn Fn() -> Result<(), String> + Send + Sync>;

/// One named cross-check. `Err` carries the serialized counterexample.
pub struct Check {
    pub name: String,
    pub sizes: String,
    /// Reported but never counted against the suite status.
    pub informational: bool,
    run: CheckFn,
}

impl Check {
    pub fn new(
        name: impl Into<String>,
        sizes: impl Into<String>,
        run: impl Fn() -> Result<(), String> + Send + Sync + 'static,
    ) -> Self {
        Check {
            name: name.into(),
            sizes: sizes.into(),
            informational: false,
            run: Box::new(run),
        }
    }

    pub fn informational(mut self) -> Self {
        self.informational = true;
        self
    }

    pub fn execute(&self) -> CheckResult {
        let start = Instant::now();
        let outcome = (self.run)();
        CheckResult {
            name: self.name.clone(),
            status: if outcome.is_ok() { Status::Pass } else { Status::Fail },
            sizes: self.sizes.clone(),
            informational: self.informational,
            counterexample: outcome.err(),
            elapsed_ms: Some(start.elapsed().as_millis() as u64),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub status: Status,
    pub sizes: String,
    pub informational: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    pub checks: Vec<CheckResult>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// Drops the timings, which are the only run-dependent field.
    pub fn without_timings(mut self) -> Self {
        for c in &mut self.checks {
            c.elapsed_ms = None;
        }
        self
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| c.status == Status::Fail && !c.informational)
    }
}

/// Runs the checks on `jobs` threads (0 = rayon's default). Results keep the
/// declaration order whatever the completion order.
pub fn run_suite(suite: &str, checks: Vec<Check>, jobs: usize, progress: bool) -> VerificationReport {
    let total = checks.len();
    let done = std::sync::atomic::AtomicUsize::new(0);
    let exec = || {
        checks
            .par_iter()
            .map(|c| {
                let r = c.execute();
                if progress {
                    let k = done.fetch_add(1, std::sync::atomic::Ordering::Relaxed) + 1;
                    eprintln!("[{}/{}] {} {}", k, total, r.status.as_str(), r.name);
                }
                r
            })
            .collect::<Vec<_>>()
    };
    let results = match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
        Ok(pool) => pool.install(exec),
        Err(_) => exec(),
    };
    let status = if results.iter().any(|c| c.status == Status::Fail && !c.informational) {
        Status::Fail
    } else {
        Status::Pass
    };
    VerificationReport {
        suite: suite.to_string(),
        status,
        note: None,
        checks: results,
    }
}

//! Serializable verification reports.
//!
//! Reports are byte-identical across re-runs with the same configuration:
//! timings are shown on the console but zeroed in the serialized form.

use citer_core::quad::QuadratureConfig;
use citer_core::report::{CheckResult, CheckStatus};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ReportEntry {
    pub name: String,
    pub computed: [f64; 2],
    pub expected: [f64; 2],
    pub abs_error: f64,
    pub tolerance: f64,
    pub status: String,
    pub runtime_ms: f64,
    pub provenance: String,
}

impl ReportEntry {
    pub fn from_check(c: &CheckResult) -> Self {
        Self {
            name: c.name.clone(),
            computed: [c.computed.re, c.computed.im],
            expected: [c.expected.re, c.expected.im],
            abs_error: c.abs_error,
            tolerance: c.tolerance,
            status: match c.status {
                CheckStatus::Pass => "pass".into(),
                CheckStatus::Fail => "fail".into(),
                CheckStatus::Skipped => "skipped".into(),
            },
            // timings stay out of the serialized report so that re-runs
            // are bit-identical
            runtime_ms: 0.0,
            provenance: c.provenance.clone(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ConfigEcho {
    pub rel_tol: f64,
    pub max_level: u32,
    pub tail_cutoff: f64,
    pub circle_radius: f64,
    pub circle_points: usize,
}

impl ConfigEcho {
    pub fn from_cfg(cfg: &QuadratureConfig) -> Self {
        Self {
            rel_tol: cfg.rel_tol,
            max_level: cfg.max_level,
            tail_cutoff: cfg.tail_cutoff,
            circle_radius: cfg.circle_radius,
            circle_points: cfg.circle_points,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub results: Vec<ReportEntry>,
    pub config: ConfigEcho,
    pub versions: Versions,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Versions {
    pub engine: String,
    pub cli: String,
}

impl Versions {
    pub fn current() -> Self {
        Self {
            engine: format!("citer-core {}", env!("CARGO_PKG_VERSION")),
            cli: format!("citer-cli {}", env!("CARGO_PKG_VERSION")),
        }
    }
}

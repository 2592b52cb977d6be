//! Check results produced by the verification-style operations.

use num_complex::Complex64;

/// Outcome of one identity check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

/// One computed-vs-expected comparison with its tolerance.
#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: String,
    pub computed: Complex64,
    pub expected: Complex64,
    pub abs_error: f64,
    pub tolerance: f64,
    pub status: CheckStatus,
    pub runtime_ms: f64,
    /// Which identity the check exercises (human-readable).
    pub provenance: String,
}

impl CheckResult {
    /// Status comes from the error/tolerance comparison alone.
    pub fn compare(
        name: impl Into<String>,
        computed: Complex64,
        expected: Complex64,
        tolerance: f64,
        provenance: impl Into<String>,
    ) -> Self {
        let abs_error = (computed - expected).norm();
        Self {
            name: name.into(),
            computed,
            expected,
            abs_error,
            tolerance,
            status: if abs_error <= tolerance {
                CheckStatus::Pass
            } else {
                CheckStatus::Fail
            },
            runtime_ms: 0.0,
            provenance: provenance.into(),
        }
    }

    pub fn skipped(
        name: impl Into<String>,
        computed: Complex64,
        expected: Complex64,
        tolerance: f64,
        provenance: impl Into<String>,
    ) -> Self {
        Self {
            name: name.into(),
            computed,
            expected,
            abs_error: (computed - expected).norm(),
            tolerance,
            status: CheckStatus::Skipped,
            runtime_ms: 0.0,
            provenance: provenance.into(),
        }
    }

    pub fn failed_with(
        name: impl Into<String>,
        tolerance: f64,
        provenance: impl Into<String>,
    ) -> Self {
        Self {
            name: name.into(),
            computed: Complex64::new(f64::NAN, f64::NAN),
            expected: Complex64::new(f64::NAN, f64::NAN),
            abs_error: f64::INFINITY,
            tolerance,
            status: CheckStatus::Fail,
            runtime_ms: 0.0,
            provenance: provenance.into(),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == CheckStatus::Pass
    }
}

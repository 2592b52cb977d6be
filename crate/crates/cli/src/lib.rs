//! Command implementations for the `citer` binary.
//!
//! Exit codes: 0 success (all checks pass for `verify`), 2 input error,
//! 3 numeric or precondition error, 4 internal error.

pub mod config;
pub mod oracles;
pub mod report;
pub mod spec_json;
pub mod suites;

use std::io::Write;
use std::time::Instant;

use citer_core::continuation::{continue_l, w_truncated_continuation, ContourSpec};
use citer_core::monodromy::{monodromy_defect, MonodromyScenario};
use citer_core::quad::QuadratureConfig;
use citer_core::report::CheckStatus;
use citer_core::zeta;
use citer_core::{Complex64, Error};
use serde_json::json;

use report::{ConfigEcho, ReportEntry, VerificationReport, Versions};
use spec_json::{from_complex, PathSpec, SeriesSpec};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_NUMERIC: i32 = 3;
pub const EXIT_INTERNAL: i32 = 4;

/// A CLI-level failure with its exit code.
#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    pub fn input(msg: impl Into<String>) -> Self {
        Self {
            code: EXIT_INPUT,
            message: msg.into(),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InvalidRational(_)
            | Error::TrivialCharacter
            | Error::NotPrime(_)
            | Error::InvalidCharacter(_)
            | Error::UnsupportedField(_)
            | Error::InvalidConfig(_)
            | Error::CapExceeded { .. }
            | Error::DiscontinuousConcat(_, _) => EXIT_INPUT,
            _ => EXIT_NUMERIC,
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

pub type CliResult = Result<serde_json::Value, CliError>;

/// Parse a complex scalar: `2`, `2.5`, `-1`, `2+3i`, `0.4-0.2i`, `3i`.
pub fn parse_complex(text: &str) -> Result<Complex64, CliError> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(CliError::input("empty complex literal"));
    }
    if let Ok(re) = s.parse::<f64>() {
        return Ok(Complex64::new(re, 0.0));
    }
    // trailing i: split the imaginary part off at the last +/- that is not
    // an exponent sign and not the leading sign
    if let Some(body) = s.strip_suffix('i') {
        let bytes = body.as_bytes();
        let mut split = None;
        for idx in (1..bytes.len()).rev() {
            let c = bytes[idx] as char;
            if (c == '+' || c == '-') && !matches!(bytes[idx - 1] as char, 'e' | 'E') {
                split = Some(idx);
                break;
            }
        }
        let (re_part, im_part) = match split {
            Some(idx) => (&body[..idx], &body[idx..]),
            None => ("0", body),
        };
        let re: f64 = if re_part.is_empty() {
            0.0
        } else {
            re_part
                .parse()
                .map_err(|e| CliError::input(format!("bad real part '{re_part}': {e}")))?
        };
        let im: f64 = match im_part {
            "" | "+" => 1.0,
            "-" => -1.0,
            other => other
                .parse()
                .map_err(|e| CliError::input(format!("bad imaginary part '{other}': {e}")))?,
        };
        return Ok(Complex64::new(re, im));
    }
    Err(CliError::input(format!("cannot parse complex number '{s}'")))
}

/// Parse a comma-separated tuple of complex scalars.
pub fn parse_complex_tuple(text: &str) -> Result<Vec<Complex64>, CliError> {
    text.split(',')
        .map(|part| parse_complex(part.trim()))
        .collect()
}

fn parse_series(text: &str) -> Result<SeriesSpec, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::input(format!("series spec: {e}")))
}

fn parse_path(text: &str) -> Result<PathSpec, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::input(format!("path spec: {e}")))
}

fn value_json(value: Complex64, error_estimate: f64, started: Instant) -> serde_json::Value {
    json!({
        "value": from_complex(value),
        "error_estimate": error_estimate,
        "runtime_ms": started.elapsed().as_secs_f64() * 1e3,
    })
}

// ---------------------------------------------------------------------------

/// `citer eval <kind> …`
pub fn cmd_eval(
    kind: &str,
    s_tuple: &str,
    series: Option<&str>,
    w: Option<&str>,
    z: Option<&str>,
    path: Option<&str>,
    cfg: &QuadratureConfig,
) -> CliResult {
    let started = Instant::now();
    let s = parse_complex_tuple(s_tuple)?;
    let first = *s
        .first()
        .ok_or_else(|| CliError::input("--s must carry at least one exponent"))?;
    let q = match kind {
        "zeta" | "riemann" => zeta::zeta(first, cfg)?,
        "completed" => zeta::completed_z(first, cfg)?,
        "dirichlet" => {
            let spec = parse_series(series.ok_or_else(|| {
                CliError::input("dirichlet evaluation needs --series with a character spec")
            })?)?;
            let table = spec
                .character_table()
                .ok_or_else(|| CliError::input("--series must be a character spec"))?
                .map_err(CliError::from)?;
            zeta::dirichlet_l(first, &table, cfg)?
        }
        "hurwitz" => {
            let zv = parse_complex(z.ok_or_else(|| CliError::input("hurwitz needs --z"))?)?;
            zeta::hurwitz_mzv(&s, zv, cfg)?
        }
        "mzv" => zeta::mzv(&s, &cfg.relaxed(100.0))?,
        "polylog" => {
            let wv = parse_complex(w.ok_or_else(|| CliError::input("polylog needs --w"))?)?;
            match path {
                Some(p) => {
                    let path = parse_path(p)?.build()?;
                    citer_core::engine::polylog_integral(first, wv, &path, cfg)?
                }
                None => zeta::polylog(first, wv, cfg)?,
            }
        }
        "dedekind" => {
            let spec = parse_series(series.ok_or_else(|| {
                CliError::input("dedekind evaluation needs --series with an ideal-count spec")
            })?)?;
            match spec {
                SeriesSpec::IdealCount { discriminant } => {
                    zeta::dedekind_zeta_transform(discriminant, first, cfg)?
                }
                _ => return Err(CliError::input("--series must be an ideal-count spec")),
            }
        }
        "ltransform" => {
            let spec = parse_series(
                series.ok_or_else(|| CliError::input("ltransform needs --series"))?,
            )?;
            let model = spec.build()?;
            citer_core::engine::power_iterated_integral(&model, first, 0.0, cfg)?
        }
        other => {
            return Err(CliError::input(format!(
                "unknown kind '{other}' (expected zeta|completed|dirichlet|hurwitz|mzv|polylog|dedekind|ltransform)"
            )))
        }
    };
    Ok(value_json(q.value, q.error, started))
}

/// `citer continue …`
pub fn cmd_continue(
    series: &str,
    k: Option<u32>,
    s: Option<&str>,
    w: Option<f64>,
    cfg: &QuadratureConfig,
    contour: &ContourSpec,
) -> CliResult {
    let started = Instant::now();
    let model = parse_series(series)?.build()?;
    let result = match (k, s, w) {
        (Some(k), None, None) => {
            citer_core::continuation::value_at_negative_integer(&model, k, contour, cfg)?
        }
        (Some(k), None, Some(wv)) => w_truncated_continuation(&model, wv, k, contour, cfg)?,
        (None, Some(stext), None) => {
            let sv = parse_complex(stext)?;
            continue_l(&model, sv, contour, cfg)?
        }
        _ => {
            return Err(CliError::input(
                "pass exactly one of --k (value at −k, optionally with --w) or --s",
            ))
        }
    };
    Ok(json!({
        "value": from_complex(result.value),
        "route": result.route.to_string(),
        "error_estimate": result.error_estimate,
        "runtime_ms": started.elapsed().as_secs_f64() * 1e3,
    }))
}

/// `citer transform …` (gap-transform evaluation).
pub fn cmd_transform(series: &str, s: &str, z: f64) -> CliResult {
    let started = Instant::now();
    let model = parse_series(series)?.build()?;
    let sv = parse_complex(s)?;
    let v = model.s_gap_eval(sv, z)?;
    Ok(value_json(v, 1e-14 * v.norm().max(1.0), started))
}

/// `citer monodromy …`
pub fn cmd_monodromy(
    s: &str,
    w: &str,
    eta: f64,
    epsilon: f64,
    n_terms: u32,
    cfg: &QuadratureConfig,
) -> CliResult {
    let started = Instant::now();
    let sv = parse_complex(s)?;
    let wv = parse_complex(w)?;
    let scenario = MonodromyScenario::new(sv, wv, eta, epsilon, n_terms)?;
    let d = monodromy_defect(&scenario, cfg)?;
    Ok(json!({
        "direct": from_complex(d.direct),
        "looped": from_complex(d.looped),
        "defect": from_complex(d.defect),
        "predicted": from_complex(d.predicted),
        "matched_branch": d.matched_branch,
        "error_budget": d.error_budget,
        "runtime_ms": started.elapsed().as_secs_f64() * 1e3,
    }))
}

// ---------------------------------------------------------------------------

/// `citer verify <suite>`: run the named suites, print one line per check,
/// optionally write the (timing-free, reproducible) JSON report.
pub fn cmd_verify(
    suite: &str,
    cfg: &QuadratureConfig,
    tol: Option<f64>,
    json_path: Option<&std::path::Path>,
    quiet: bool,
    writer: &mut dyn Write,
) -> Result<i32, CliError> {
    let groups = suites::run_suite(suite, cfg, tol).ok_or_else(|| {
        CliError::input(format!(
            "unknown suite '{suite}' (expected all|core|comult|continuation|monodromy|zeta)"
        ))
    })?;
    let mut entries = Vec::new();
    let mut all_pass = true;
    for (group, checks) in &groups {
        for c in checks {
            let status = match c.status {
                CheckStatus::Pass => "pass",
                CheckStatus::Fail => {
                    all_pass = false;
                    "FAIL"
                }
                CheckStatus::Skipped => "skip",
            };
            if !quiet {
                writeln!(
                    writer,
                    "[{status}] {group} :: {}  (err {:.3e}, tol {:.3e})",
                    c.name, c.abs_error, c.tolerance
                )
                .ok();
                if c.status != CheckStatus::Pass {
                    writeln!(writer, "       note: {}", c.provenance).ok();
                }
            }
            let mut entry = ReportEntry::from_check(c);
            entry.name = format!("{group} :: {}", c.name);
            entries.push(entry);
        }
    }
    let report = VerificationReport {
        suite: suite.to_string(),
        results: entries,
        config: ConfigEcho::from_cfg(cfg),
        versions: Versions::current(),
    };
    if let Some(path) = json_path {
        let body = serde_json::to_string_pretty(&report)
            .map_err(|e| CliError::input(format!("serializing report: {e}")))?;
        std::fs::write(path, body)
            .map_err(|e| CliError::input(format!("writing {}: {e}", path.display())))?;
    }
    if !quiet {
        let n_pass = report.results.iter().filter(|r| r.status == "pass").count();
        let n_fail = report.results.iter().filter(|r| r.status == "fail").count();
        let n_skip = report.results.iter().filter(|r| r.status == "skipped").count();
        writeln!(
            writer,
            "{} checks: {n_pass} passed, {n_fail} failed, {n_skip} skipped",
            report.results.len()
        )
        .ok();
    }
    Ok(if all_pass { EXIT_OK } else { 1 })
}

/// Serialize a verification report to its canonical JSON (used by the
/// determinism tests).
pub fn report_json(suite: &str, cfg: &QuadratureConfig, tol: Option<f64>) -> Option<String> {
    let groups = suites::run_suite(suite, cfg, tol)?;
    let mut entries = Vec::new();
    for (group, checks) in &groups {
        for c in checks {
            let mut entry = ReportEntry::from_check(c);
            entry.name = format!("{group} :: {}", c.name);
            entries.push(entry);
        }
    }
    let report = VerificationReport {
        suite: suite.to_string(),
        results: entries,
        config: ConfigEcho::from_cfg(cfg),
        versions: Versions::current(),
    };
    serde_json::to_string_pretty(&report).ok()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_parsing() {
        assert_eq!(parse_complex("2").unwrap(), Complex64::new(2.0, 0.0));
        assert_eq!(parse_complex("2.5").unwrap(), Complex64::new(2.5, 0.0));
        assert_eq!(parse_complex("-1").unwrap(), Complex64::new(-1.0, 0.0));
        assert_eq!(parse_complex("2+3i").unwrap(), Complex64::new(2.0, 3.0));
        assert_eq!(parse_complex("0.4-0.2i").unwrap(), Complex64::new(0.4, -0.2));
        assert_eq!(parse_complex("3i").unwrap(), Complex64::new(0.0, 3.0));
        assert_eq!(parse_complex("-i").unwrap(), Complex64::new(0.0, -1.0));
        assert_eq!(parse_complex("1e-3+2e-4i").unwrap(), Complex64::new(1e-3, 2e-4));
        assert!(parse_complex("bogus").is_err());
        let t = parse_complex_tuple("2, 1").unwrap();
        assert_eq!(t.len(), 2);
    }

    #[test]
    fn eval_zeta_roundtrip() {
        let cfg = QuadratureConfig::default();
        let v = cmd_eval("zeta", "2", None, None, None, None, &cfg).unwrap();
        let re = v["value"][0].as_f64().unwrap();
        assert!((re - std::f64::consts::PI.powi(2) / 6.0).abs() < 1e-8);
    }
}

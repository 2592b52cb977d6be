//! Configuration assembly: defaults, then a key=value config file
//! (`--config` or the `CITER_CONFIG` environment variable), then flags.

use citer_core::continuation::ContourSpec;
use citer_core::quad::QuadratureConfig;

#[derive(Debug, Clone, Default)]
pub struct FileConfig {
    pub tol: Option<f64>,
    pub max_level: Option<u32>,
    pub tail_cutoff: Option<f64>,
    pub circle_radius: Option<f64>,
    pub circle_points: Option<usize>,
    pub delta: Option<f64>,
    pub x_max: Option<f64>,
}

impl FileConfig {
    /// Parse simple `key = value` lines; `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self, String> {
        let mut out = Self::default();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| format!("line {}: expected key = value", lineno + 1))?;
            let key = key.trim();
            let value = value.trim();
            let bad = |e: std::num::ParseFloatError| format!("line {}: {e}", lineno + 1);
            match key {
                "tol" => out.tol = Some(value.parse().map_err(bad)?),
                "max_level" => {
                    out.max_level = Some(value.parse().map_err(|e| format!("line {}: {e}", lineno + 1))?)
                }
                "tail_cutoff" => out.tail_cutoff = Some(value.parse().map_err(bad)?),
                "circle_radius" => out.circle_radius = Some(value.parse().map_err(bad)?),
                "circle_points" => {
                    out.circle_points =
                        Some(value.parse().map_err(|e| format!("line {}: {e}", lineno + 1))?)
                }
                "delta" => out.delta = Some(value.parse().map_err(bad)?),
                "x_max" => out.x_max = Some(value.parse().map_err(bad)?),
                other => return Err(format!("line {}: unknown key '{other}'", lineno + 1)),
            }
        }
        Ok(out)
    }
}

/// Flags > config file > defaults.
pub fn assemble(
    file: &FileConfig,
    flag_tol: Option<f64>,
    flag_max_level: Option<u32>,
) -> (QuadratureConfig, ContourSpec) {
    let mut cfg = QuadratureConfig::default();
    let mut contour = ContourSpec::default();
    if let Some(v) = file.tol {
        cfg.rel_tol = v;
    }
    if let Some(v) = file.max_level {
        cfg.max_level = v;
    }
    if let Some(v) = file.tail_cutoff {
        cfg.tail_cutoff = v;
    }
    if let Some(v) = file.circle_radius {
        cfg.circle_radius = v;
    }
    if let Some(v) = file.circle_points {
        cfg.circle_points = v;
    }
    if let Some(v) = file.delta {
        contour.delta = v;
    }
    if let Some(v) = file.x_max {
        contour.x_max = v;
    }
    if let Some(v) = flag_tol {
        cfg.rel_tol = v;
    }
    if let Some(v) = flag_max_level {
        cfg.max_level = v;
    }
    (cfg, contour)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_precedence() {
        let f = FileConfig::parse("tol = 1e-8\nmax_level = 10 # comment\n\n# blank above\n").unwrap();
        assert_eq!(f.tol, Some(1e-8));
        assert_eq!(f.max_level, Some(10));
        let (cfg, _) = assemble(&f, Some(1e-6), None);
        assert_eq!(cfg.rel_tol, 1e-6); // flag wins
        assert_eq!(cfg.max_level, 10); // file wins over default
    }

    #[test]
    fn unknown_keys_rejected() {
        assert!(FileConfig::parse("nope = 3").is_err());
    }
}

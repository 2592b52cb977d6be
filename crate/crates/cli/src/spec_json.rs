//! JSON wire formats for series and path specifications.
//!
//! Complex numbers are always `[re, im]` pairs.

use citer_core::character::CharacterTable;
use citer_core::path::{Path, PathSegment};
use citer_core::series::{
    self, SeriesModel,
};
use citer_core::Complex64;
use serde::{Deserialize, Serialize};

/// `[re, im]` pair.
pub type ComplexPair = [f64; 2];

pub fn to_complex(p: ComplexPair) -> Complex64 {
    Complex64::new(p[0], p[1])
}

pub fn from_complex(z: Complex64) -> ComplexPair {
    [z.re, z.im]
}

/// A series specification as accepted on the command line.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case", deny_unknown_fields)]
pub enum SeriesSpec {
    Rational {
        num: Vec<i64>,
        den: Vec<i64>,
    },
    Character {
        modulus: u32,
        values: Vec<ComplexPair>,
    },
    CharacterPrime {
        modulus: u64,
        /// χ(g) = exp(2πi·index/(modulus−1)); defaults to the quadratic
        /// character.
        #[serde(default)]
        index: Option<u32>,
    },
    IdealCount {
        discriminant: i64,
    },
    Katz {
        a: u32,
    },
    Moebius {
        #[serde(default)]
        cap: Option<usize>,
    },
    PrimeIndicator {
        #[serde(default)]
        cap: Option<usize>,
    },
    Coeffs {
        /// values[i] = a_{i+1} (a₀ is always 0).
        values: Vec<ComplexPair>,
        bieberbach_k: f64,
    },
}

impl SeriesSpec {
    pub fn build(&self) -> citer_core::Result<SeriesModel> {
        match self {
            SeriesSpec::Rational { num, den } => series::from_rational(num, den),
            SeriesSpec::Character { modulus, values } => {
                let table = CharacterTable::new(
                    *modulus,
                    values.iter().map(|&p| to_complex(p)).collect(),
                    false,
                )?;
                series::from_character(&table)
            }
            SeriesSpec::CharacterPrime { modulus, index } => {
                let table = match index {
                    Some(j) => CharacterTable::from_prime_modulus(*modulus, *j)?,
                    None => CharacterTable::legendre(*modulus)?,
                };
                series::from_character(&table)
            }
            SeriesSpec::IdealCount { discriminant } => series::ideal_count_series(*discriminant),
            SeriesSpec::Katz { a } => series::katz_psi(*a),
            SeriesSpec::Moebius { cap } => Ok(series::moebius_series(*cap)),
            SeriesSpec::PrimeIndicator { cap } => Ok(series::prime_indicator_series(*cap)),
            SeriesSpec::Coeffs {
                values,
                bieberbach_k,
            } => series::from_coefficients(
                values.iter().map(|&p| to_complex(p)).collect(),
                *bieberbach_k,
            ),
        }
    }

    /// The character table alone (for Dirichlet L evaluations).
    pub fn character_table(&self) -> Option<citer_core::Result<CharacterTable>> {
        match self {
            SeriesSpec::Character { modulus, values } => Some(CharacterTable::new(
                *modulus,
                values.iter().map(|&p| to_complex(p)).collect(),
                false,
            )),
            SeriesSpec::CharacterPrime { modulus, index } => Some(match index {
                Some(j) => CharacterTable::from_prime_modulus(*modulus, *j),
                None => CharacterTable::legendre(*modulus),
            }),
            _ => None,
        }
    }
}

/// One path segment on the wire.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", deny_unknown_fields)]
pub enum SegmentSpec {
    #[serde(rename = "line")]
    Line(ComplexPair, ComplexPair),
    #[serde(rename = "arc")]
    Arc {
        center: ComplexPair,
        radius: f64,
        from: f64,
        to: f64,
    },
}

/// `{"segments": [...]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PathSpec {
    pub segments: Vec<SegmentSpec>,
}

impl PathSpec {
    pub fn build(&self) -> citer_core::Result<Path> {
        let segments = self
            .segments
            .iter()
            .map(|s| match s {
                SegmentSpec::Line(a, b) => PathSegment::line(to_complex(*a), to_complex(*b)),
                SegmentSpec::Arc {
                    center,
                    radius,
                    from,
                    to,
                } => PathSegment::arc(to_complex(*center), *radius, *from, *to),
            })
            .collect();
        Path::new(segments)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_rational_spec() {
        let s: SeriesSpec =
            serde_json::from_str(r#"{"type":"rational","num":[0,1],"den":[1,-1]}"#).unwrap();
        let m = s.build().unwrap();
        assert!((m.coefficient(3).unwrap() - Complex64::new(1.0, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn parse_character_spec() {
        let s: SeriesSpec = serde_json::from_str(
            r#"{"type":"character","modulus":4,"values":[[1,0],[0,0],[-1,0],[0,0]]}"#,
        )
        .unwrap();
        assert!(s.build().is_ok());
    }

    #[test]
    fn parse_path_spec() {
        let p: PathSpec = serde_json::from_str(
            r#"{"segments":[{"line":[[0.0,0.0],[0.5,0.0]]},{"arc":{"center":[1.0,0.0],"radius":0.5,"from":3.14159,"to":9.42477}}]}"#,
        )
        .unwrap();
        // the line ends at 0.5, the arc starts at 1 − 0.5 = 0.5
        assert!(p.build().is_ok());
    }

    #[test]
    fn unknown_fields_are_rejected() {
        let r: Result<SeriesSpec, _> =
            serde_json::from_str(r#"{"type":"katz","a":2,"extra":1}"#);
        assert!(r.is_err());
    }
}

//! The curve-system input file.

use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};
use twistfree_core::{CurveSystem, Slope};

/// Largest accepted number of curves.
pub const MAX_CURVES: usize = 16;
/// Largest accepted intersection number. Region checks multiply up to four
/// such quantities with two rational parameters, which stays far inside `i128`.
pub const MAX_INTERSECTION: u64 = 1_000_000;
/// Largest accepted slope coordinate.
pub const MAX_SLOPE_ENTRY: i64 = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurveSystemFile {
    pub h: usize,
    pub intersection: Vec<Vec<u64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub torus_slopes: Option<Vec<[i64; 2]>>,
    #[serde(default)]
    pub punctured: bool,
    /// Defaults to true for distinct torus slopes and to false otherwise.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pairwise_filling: Option<bool>,
}

/// Where a bad input file went wrong.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InputError {
    pub line: Option<usize>,
    pub column: Option<usize>,
    pub field: Option<String>,
    pub message: String,
}

impl InputError {
    fn field(field: impl Into<String>, message: impl Into<String>) -> Self {
        Self { line: None, column: None, field: Some(field.into()), message: message.into() }
    }
}

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let (Some(l), Some(c)) = (self.line, self.column) {
            write!(f, "line {l}, column {c}: ")?;
        }
        if let Some(field) = &self.field {
            write!(f, "field `{field}`: ")?;
        }
        f.write_str(&self.message)
    }
}

impl std::error::Error for InputError {}

impl CurveSystemFile {
    pub fn from_json(text: &str) -> Result<Self, InputError> {
        serde_json::from_str(text).map_err(|e| InputError {
            line: Some(e.line()),
            column: Some(e.column()),
            field: None,
            message: e.to_string(),
        })
    }

    pub fn read(path: &Path) -> Result<Self, InputError> {
        let text = std::fs::read_to_string(path).map_err(|e| InputError {
            line: None,
            column: None,
            field: None,
            message: format!("cannot read {}: {e}", path.display()),
        })?;
        Self::from_json(&text)
    }

    pub fn from_system(system: &CurveSystem) -> Self {
        Self {
            h: system.h(),
            intersection: system.intersections().to_vec(),
            torus_slopes: system.torus_slopes().map(|s| s.iter().map(|x| [x.p(), x.q()]).collect()),
            punctured: system.punctured(),
            pairwise_filling: Some(system.pairwise_filling()),
        }
    }

    /// Checks sizes and invariants and builds the system.
    pub fn to_system(&self) -> Result<CurveSystem, InputError> {
        if self.h < 2 || self.h > MAX_CURVES {
            return Err(InputError::field("h", format!("must be between 2 and {MAX_CURVES}, got {}", self.h)));
        }
        if self.intersection.len() != self.h {
            return Err(InputError::field(
                "intersection",
                format!("expected {} rows, found {}", self.h, self.intersection.len()),
            ));
        }
        for (i, row) in self.intersection.iter().enumerate() {
            if row.len() != self.h {
                return Err(InputError::field(
                    format!("intersection[{i}]"),
                    format!("expected {} entries, found {}", self.h, row.len()),
                ));
            }
            if let Some((j, v)) = row.iter().enumerate().find(|(_, &v)| v > MAX_INTERSECTION) {
                return Err(InputError::field(
                    format!("intersection[{i}][{j}]"),
                    format!("{v} exceeds the limit {MAX_INTERSECTION}"),
                ));
            }
        }
        let system = match &self.torus_slopes {
            None => CurveSystem::from_intersections(
                self.intersection.clone(),
                self.punctured,
                self.pairwise_filling.unwrap_or(false),
            ),
            Some(raw) => {
                if raw.len() != self.h {
                    return Err(InputError::field(
                        "torus_slopes",
                        format!("expected {} slopes, found {}", self.h, raw.len()),
                    ));
                }
                let mut slopes = Vec::with_capacity(raw.len());
                for (i, &[p, q]) in raw.iter().enumerate() {
                    if p.abs() > MAX_SLOPE_ENTRY || q.abs() > MAX_SLOPE_ENTRY {
                        return Err(InputError::field(
                            format!("torus_slopes[{i}]"),
                            format!("entries are limited to {MAX_SLOPE_ENTRY} in absolute value"),
                        ));
                    }
                    slopes.push(
                        Slope::new(p, q).map_err(|e| InputError::field(format!("torus_slopes[{i}]"), e.to_string()))?,
                    );
                }
                CurveSystem::realized(self.intersection.clone(), slopes, self.punctured, self.pairwise_filling)
            }
        };
        system.map_err(|e| InputError::field("intersection", e.to_string()))
    }
}

/// Parses `"3,3,4"` into exponents; each must be a positive integer.
pub fn parse_exponents(s: &str) -> Result<Vec<u32>, String> {
    s.split(',')
        .map(|t| {
            let t = t.trim();
            match t.parse::<u32>() {
                Ok(0) => Err("exponents must be positive".to_string()),
                Ok(n) => Ok(n),
                Err(_) => Err(format!("cannot parse exponent {t:?}")),
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reads_torus_and_abstract_systems() {
        let f = CurveSystemFile::from_json(
            r#"{"h": 3, "intersection": [[0,1,1],[1,0,1],[1,1,0]], "torus_slopes": [[1,0],[0,1],[1,1]]}"#,
        )
        .unwrap();
        let s = f.to_system().unwrap();
        assert!(s.pairwise_filling());
        assert_eq!(s.torus_slopes().unwrap().len(), 3);
        assert_eq!(CurveSystemFile::from_system(&s).to_system().unwrap(), s);

        let f = CurveSystemFile::from_json(r#"{"h": 2, "intersection": [[0,4],[4,0]]}"#).unwrap();
        let s = f.to_system().unwrap();
        assert!(s.torus_slopes().is_none());
        assert!(!s.pairwise_filling());
    }

    #[test]
    fn diagnostics_name_the_problem() {
        let e = CurveSystemFile::from_json("{\"h\": 2,\n \"intersection\": [[0,1],[1,0]], \"extra\": 1}").unwrap_err();
        assert_eq!(e.line, Some(2));
        assert!(e.message.contains("extra"));

        let f = CurveSystemFile::from_json(r#"{"h": 2, "intersection": [[0,1],[2,0]]}"#).unwrap();
        assert_eq!(f.to_system().unwrap_err().field.as_deref(), Some("intersection"));

        let f = CurveSystemFile::from_json(r#"{"h": 2, "intersection": [[0,1],[1,0]], "torus_slopes": [[1,0],[2,2]]}"#)
            .unwrap();
        assert_eq!(f.to_system().unwrap_err().field.as_deref(), Some("torus_slopes[1]"));

        let f = CurveSystemFile::from_json(r#"{"h": 2, "intersection": [[0,1],[1,0]], "torus_slopes": [[1,0],[1,2]]}"#)
            .unwrap();
        assert!(f.to_system().unwrap_err().message.contains("meet 2 times"));

        let f = CurveSystemFile::from_json(r#"{"h": 2, "intersection": [[0,5000000],[5000000,0]]}"#).unwrap();
        assert_eq!(f.to_system().unwrap_err().field.as_deref(), Some("intersection[0][1]"));

        let f = CurveSystemFile::from_json(r#"{"h": 3, "intersection": [[0,1],[1,0]]}"#).unwrap();
        assert!(f.to_system().is_err());
    }

    #[test]
    fn exponent_lists() {
        assert_eq!(parse_exponents("3, 3,4"), Ok(vec![3, 3, 4]));
        assert!(parse_exponents("3,0").is_err());
        assert!(parse_exponents("3,x").is_err());
        assert!(parse_exponents("").is_err());
    }
}

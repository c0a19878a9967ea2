//! Stable interchange formats.
//!
//! Everything the tool emits is exact: rationals as "p/q" strings
//! (plain integers when the denominator is 1), series as a precision
//! plus the full coefficient list, lattice vectors as their eight
//! doubled coordinates behind a `"doubled": true` marker. The field
//! names here are part of the output contract.

use crate::e8::E8Vector;
use crate::qseries::{QSeries, Rational};
use crate::severi::DegreeRow;
use serde::{Deserialize, Serialize};
use std::str::FromStr;

/// Errors from parsing the interchange formats.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FormatError {
    #[error("not a rational number: {0:?}")]
    BadRational(String),
    #[error("zero denominator in {0:?}")]
    ZeroDenominator(String),
    #[error("not a lattice vector: {0}")]
    BadVector(String),
    #[error("coordinate list must mark doubled = true")]
    NotDoubled,
}

/// Renders a rational exactly: "p/q", or just "p" for integers.
pub fn rational_string(r: &Rational) -> String {
    r.to_string()
}

/// Parses "p" or "p/q" into an exact rational.
pub fn parse_rational(s: &str) -> Result<Rational, FormatError> {
    if s.split('/').nth(1).is_some_and(|d| {
        d.trim().chars().all(|c| c == '0') && !d.trim().is_empty()
    }) {
        return Err(FormatError::ZeroDenominator(s.to_string()));
    }
    Rational::from_str(s.trim()).map_err(|_| FormatError::BadRational(s.to_string()))
}

/// A q-series on the wire: `{"precision": N, "coeffs": ["p/q", ...]}`
/// with exactly N + 1 coefficient strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesPayload {
    pub precision: usize,
    pub coeffs: Vec<String>,
}

impl SeriesPayload {
    pub fn from_series(series: &QSeries) -> Self {
        SeriesPayload {
            precision: series.precision(),
            coeffs: series.coeffs().iter().map(rational_string).collect(),
        }
    }

    pub fn to_series(&self) -> Result<QSeries, FormatError> {
        if self.coeffs.len() != self.precision + 1 {
            return Err(FormatError::BadRational(format!(
                "expected {} coefficients, found {}",
                self.precision + 1,
                self.coeffs.len()
            )));
        }
        let coeffs = self
            .coeffs
            .iter()
            .map(|s| parse_rational(s))
            .collect::<Result<Vec<_>, _>>()?;
        QSeries::from_coeffs(coeffs).map_err(|e| FormatError::BadRational(e.to_string()))
    }
}

/// A lattice vector on the wire: its doubled coordinates, marked as
/// such so the halves convention can never be misread.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VectorPayload {
    pub doubled: bool,
    pub coords: [i32; 8],
}

impl VectorPayload {
    pub fn from_vector(v: &E8Vector) -> Self {
        VectorPayload {
            doubled: true,
            coords: v.doubled(),
        }
    }

    pub fn to_vector(&self) -> Result<E8Vector, FormatError> {
        if !self.doubled {
            return Err(FormatError::NotDoubled);
        }
        E8Vector::from_doubled(self.coords).map_err(|e| FormatError::BadVector(e.to_string()))
    }
}

/// A degree-table row on the wire. Counts are decimal strings so rows
/// survive any integer width; `nonsimple` is indexed by m starting at 1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeRowPayload {
    pub g: u64,
    #[serde(rename = "type")]
    pub kind: String,
    pub degree: String,
    pub simple: String,
    pub nonsimple: Vec<String>,
    pub bound: String,
    pub genus_bound: String,
}

impl DegreeRowPayload {
    pub fn from_row(row: &DegreeRow) -> Self {
        DegreeRowPayload {
            g: row.g,
            kind: row.kind.to_string(),
            degree: row.conjectural_degree.to_string(),
            simple: row.simple_telltales.to_string(),
            nonsimple: row
                .nonsimple_telltales
                .iter()
                .map(|(_, c)| c.to_string())
                .collect(),
            bound: row.rigorous_degree_bound.to_string(),
            genus_bound: row.genus_bound.to_string(),
        }
    }
}

/// CSV header for a degree table wide enough for `max_m` multiplicity
/// columns.
pub fn degree_csv_header(max_m: usize) -> String {
    let mut cols = vec!["g".to_string(), "type".to_string(), "degree".to_string(), "simple".to_string()];
    for m in 1..=max_m {
        cols.push(format!("nonsimple[m={m}]"));
    }
    cols.push("bound".to_string());
    cols.push("genus_bound".to_string());
    cols.join(",")
}

/// One CSV row matching [`degree_csv_header`]; short rows pad with
/// empty cells.
pub fn degree_csv_row(payload: &DegreeRowPayload, max_m: usize) -> String {
    let mut cols = vec![
        payload.g.to_string(),
        payload.kind.clone(),
        payload.degree.clone(),
        payload.simple.clone(),
    ];
    for m in 0..max_m {
        cols.push(payload.nonsimple.get(m).cloned().unwrap_or_default());
    }
    cols.push(payload.bound.clone());
    cols.push(payload.genus_bound.clone());
    cols.join(",")
}

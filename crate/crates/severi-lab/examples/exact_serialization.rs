//! The stable interchange formats: series, vectors, and degree rows as
//! JSON and CSV, with every number an exact rational string.
//!
//! Run with: cargo run --example exact_serialization

use severi_lab::e8::roots;
use severi_lab::format::{
    degree_csv_header, degree_csv_row, parse_rational, rational_string, DegreeRowPayload,
    SeriesPayload, VectorPayload,
};
use severi_lab::qseries::ratio;
use severi_lab::severi::{degree_row, nl_series_phi, BisectionKind};

fn main() {
    // A q-series travels as {"precision": N, "coeffs": ["p/q", ...]}.
    let phi = nl_series_phi(3);
    let payload = SeriesPayload::from_series(&phi);
    let json = serde_json::to_string(&payload).unwrap();
    println!("phi as JSON: {json}");
    assert_eq!(json, r#"{"precision":3,"coeffs":["-1","24","73512","3621216"]}"#);

    // And back, exactly.
    let parsed: SeriesPayload = serde_json::from_str(&json).unwrap();
    assert_eq!(parsed.to_series().unwrap(), phi);

    // Rationals render as "p/q", or plain "p" for integers; parsing
    // normalizes to lowest terms.
    assert_eq!(rational_string(&ratio(-355, 113)), "-355/113");
    assert_eq!(parse_rational("6/4").unwrap(), ratio(3, 2));
    println!("rationals: 6/4 parses to {}", parse_rational("6/4").unwrap());

    // Lattice vectors travel in doubled coordinates behind an explicit
    // marker, so the half-integer convention can never be misread.
    let root = roots()[0];
    let vector_json = serde_json::to_string(&VectorPayload::from_vector(&root)).unwrap();
    println!("root as JSON: {vector_json}");
    assert!(vector_json.starts_with(r#"{"doubled":true,"coords":["#));
    let back: VectorPayload = serde_json::from_str(&vector_json).unwrap();
    assert_eq!(back.to_vector().unwrap(), root);

    // Degree rows serialize to JSON objects and to CSV with one
    // nonsimple[m=..] column per multiplicity.
    let row = DegreeRowPayload::from_row(&degree_row(2, BisectionKind::Weierstrass).unwrap());
    println!("\n{}", degree_csv_header(2));
    println!("{}", degree_csv_row(&row, 2));
    assert_eq!(degree_csv_row(&row, 2), "2,weierstrass,198,120,0,12,55719,1552219903");
}

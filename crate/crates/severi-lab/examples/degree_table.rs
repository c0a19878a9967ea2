//! The per-genus degree table: conjectural Severi degrees, telltale
//! counts, rigorous bounds, and the consistency identity tying them
//! together.
//!
//! Run with: cargo run --release --example degree_table

use num_bigint::BigUint;
use severi_lab::severi::{
    conjectural_degree, degree_table, height_degree_sum_check, multiplicity,
    nonsimple_telltale_count, simple_telltale_count, verify_degree_consistency, BisectionKind,
};

fn main() {
    // One row per admissible (genus, kind): Weierstrass bundles exist
    // only in even genus.
    println!("g  kind         degree   simple  bound        genus_bound");
    for row in degree_table(6).unwrap() {
        println!(
            "{}  {:<12} {:<8} {:<7} {:<12} {}",
            row.g,
            row.kind.to_string(),
            row.conjectural_degree,
            row.simple_telltales,
            row.rigorous_degree_bound,
            row.genus_bound
        );
    }

    // Pinned anchor values: the genus-0 ordinary degree is 4 (rational
    // quartics), genus-1 ordinary is 40, genus-2 Weierstrass is 198.
    assert_eq!(
        conjectural_degree(0, BisectionKind::Ordinary).unwrap(),
        BigUint::from(4u32)
    );
    assert_eq!(
        conjectural_degree(1, BisectionKind::Ordinary).unwrap(),
        BigUint::from(40u32)
    );
    assert_eq!(
        conjectural_degree(2, BisectionKind::Weierstrass).unwrap(),
        BigUint::from(198u32)
    );

    // The degree coefficient decomposes as (g + 1) x simple telltales
    // plus multiplicity-weighted non-simple ones. At g = 1 (ordinary):
    // 2 x 40 = 80 = 2 x 28 + 2 x 12.
    let simple = simple_telltale_count(1, BisectionKind::Ordinary).unwrap();
    let nonsimple = nonsimple_telltale_count(1, 1, BisectionKind::Ordinary).unwrap();
    let mult = multiplicity(1, false).unwrap();
    println!(
        "\ng = 1 accounting: 2 x 40 = (1 + 1) x {simple} + {mult} x {nonsimple} = {}",
        BigUint::from(2u32) * &simple + &mult * &nonsimple
    );
    assert_eq!(
        BigUint::from(2u32) * simple + mult * nonsimple,
        BigUint::from(80u32)
    );

    // The identity holds for every genus within precision, both kinds.
    let consistency = verify_degree_consistency(BisectionKind::Ordinary, 40);
    println!("\n{consistency}");
    assert!(consistency.passed());

    // Independent cross-check: quarter section-series coefficients are
    // sums of class counts times degrees over all genera of one height.
    for n in 0..=3 {
        let report = height_degree_sum_check(n);
        println!("{report}");
        assert!(report.passed());
    }
}

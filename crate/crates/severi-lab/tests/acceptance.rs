//! Acceptance battery: twelve exact criteria covering the whole pipeline,
//! one test per criterion. Each prints a single `criterion NN pass` line
//! (visible with `--nocapture`) and enforces its runtime budget; every
//! equality is exact.

use num_bigint::{BigInt, BigUint};
use severi_lab::e8::{count_bisection_classes, ClassFilter};
use severi_lab::qseries::{eisenstein, rational, ratio};
use severi_lab::severi::{
    conjectural_degree, degree_series, nl_series_phi, section_series, simple_telltale_count,
    verify_e4inf_class_identity, verify_phi_decomposition, verify_telltales_against_lattice,
    BisectionKind,
};
use severi_lab::suite::run_check;
use severi_lab::Config;
use std::time::{Duration, Instant};

fn finish(number: u32, budget: Duration, start: Instant, summary: &str) {
    let elapsed = start.elapsed();
    assert!(
        elapsed < budget,
        "criterion {number:02} exceeded its {budget:?} budget: took {elapsed:?}"
    );
    println!("criterion {number:02} pass ({elapsed:.2?}): {summary}");
}

fn default_config() -> Config {
    Config {
        precision: 200,
        norm_cap: 60,
    }
}

#[test]
fn criterion_01_phi_expansion() {
    let start = Instant::now();
    let phi = nl_series_phi(3);
    for (n, want) in [-1i64, 24, 73512, 3621216].into_iter().enumerate() {
        assert_eq!(phi.coeff(n).unwrap(), &rational(want));
    }
    finish(
        1,
        Duration::from_secs(1),
        start,
        "phi = -1 + 24q + 73512q^2 + 3621216q^3 + ...",
    );
}

#[test]
fn criterion_02_ramanujan_identity() {
    let start = Instant::now();
    let precision = 200;
    let e2 = eisenstein(2, precision).unwrap();
    let e4 = eisenstein(4, precision).unwrap();
    let e6 = eisenstein(6, precision).unwrap();
    let lhs = e4.derive();
    let rhs = (&(&e2 * &e4) - &e6).scale(&ratio(1, 3));
    assert_eq!(lhs.first_difference(&rhs), None);
    let report = run_check("ramanujan", &default_config()).unwrap();
    assert!(report.passed(), "{report}");
    finish(
        2,
        Duration::from_secs(1),
        start,
        "D E4 = (E2 E4 - E6) / 3 to precision 200",
    );
}

#[test]
fn criterion_03_theta_equals_e4() {
    let start = Instant::now();
    let report = run_check("theta_e4", &default_config()).unwrap();
    assert!(report.passed(), "{report}");
    assert_eq!(report.precision, 60);
    finish(
        3,
        Duration::from_secs(120),
        start,
        "enumeration counts equal 240 sigma_3(n) for norms 2..=60",
    );
}

#[test]
fn criterion_04_root_system_facts() {
    let start = Instant::now();
    // Covers: 240 roots, 2160 norm-4 vectors, each a sum of two roots,
    // reflection orbits of sizes exactly 240 and 2160.
    let report = run_check("transitivity", &default_config()).unwrap();
    assert!(report.passed(), "{report}");
    finish(
        4,
        Duration::from_secs(10),
        start,
        "240 roots, 2160 norm-4 vectors, orbits transitive, sums of two roots",
    );
}

#[test]
fn criterion_05_class_partition_and_uniformity() {
    let start = Instant::now();
    let report = run_check("class_uniformity", &default_config()).unwrap();
    assert!(report.passed(), "{report}");
    finish(
        5,
        Duration::from_secs(60),
        start,
        "256 classes = 1 + 120 + 135; censuses uniform within kind for norms 2..=60",
    );
}

#[test]
fn criterion_06_telltales_vs_lattice() {
    let start = Instant::now();
    let ordinary = verify_telltales_against_lattice(10, BisectionKind::Ordinary);
    assert!(ordinary.passed(), "{ordinary}");
    let weierstrass = verify_telltales_against_lattice(10, BisectionKind::Weierstrass);
    assert!(weierstrass.passed(), "{weierstrass}");
    assert_eq!(
        simple_telltale_count(1, BisectionKind::Ordinary).unwrap(),
        BigUint::from(28u32)
    );
    assert_eq!(
        simple_telltale_count(2, BisectionKind::Weierstrass).unwrap(),
        BigUint::from(120u32)
    );
    finish(
        6,
        Duration::from_secs(120),
        start,
        "simple telltales match pair decompositions for g <= 10, both kinds (28 at g=1, 120 at g=2 W)",
    );
}

#[test]
fn criterion_07_e4inf_class_identity() {
    let start = Instant::now();
    let report = verify_e4inf_class_identity(200);
    assert!(report.passed(), "{report}");
    finish(
        7,
        Duration::from_secs(1),
        start,
        "2 E4inf = (E4 - E4(q^4))_odd / 120 + (E4 - E4(q^4))_even / 135 to precision 200",
    );
}

#[test]
fn criterion_08_phi_even_part_decomposition() {
    let start = Instant::now();
    let report = verify_phi_decomposition(100);
    assert!(report.passed(), "{report}");
    finish(
        8,
        Duration::from_secs(5),
        start,
        "phi(q^2) matches its two-term decomposition on even exponents to q^100",
    );
}

#[test]
fn criterion_09_degree_pipeline() {
    let start = Instant::now();
    assert_eq!(
        conjectural_degree(0, BisectionKind::Ordinary).unwrap(),
        BigUint::from(4u32)
    );
    // The q^2 coefficient of the ordinary degree series is 8 = (g+1) * 8
    // at g = 0: one simple telltale count of 8 per singular fiber.
    let series = degree_series(BisectionKind::Ordinary, 2);
    assert_eq!(series.coeff(2).unwrap(), &rational(8));
    let simple = simple_telltale_count(0, BisectionKind::Ordinary).unwrap();
    assert_eq!(simple, BigUint::from(8u32));
    assert_eq!(BigUint::from(1u32) * &simple, BigUint::from(8u32));
    finish(
        9,
        Duration::from_secs(1),
        start,
        "degree(0, ordinary) = 4; coefficient 8 = (0+1) x 8 simple telltales",
    );
}

#[test]
fn criterion_10_height_sum_decompositions() {
    let start = Instant::now();
    let series = section_series(8);
    let quarter = |n: usize| {
        let c = series.coeff(n).unwrap() / &rational(4);
        assert!(c.is_integer());
        c.to_integer()
    };
    // Height 0 (q^2): 18438 = 2160*4 + 240*40 + 198.
    assert_eq!(quarter(2), BigInt::from(2160 * 4 + 240 * 40 + 198));
    // Height 1 (q^3): 903864 = 17280*4 + 6720*40 + 2160*192 + 240*624 + 1464.
    assert_eq!(
        quarter(3),
        BigInt::from(17280 * 4 + 6720 * 40 + 2160 * 192 + 240 * 624 + 1464)
    );
    // The factors really are class counts times conjectural degrees.
    let count = |g: u64, n: i64, filter| count_bisection_classes(g, n, filter).unwrap();
    assert_eq!(count(0, 0, ClassFilter::Ordinary), BigUint::from(2160u32));
    assert_eq!(count(1, 0, ClassFilter::Ordinary), BigUint::from(240u32));
    assert_eq!(count(2, 0, ClassFilter::Weierstrass), BigUint::from(1u32));
    assert_eq!(
        conjectural_degree(2, BisectionKind::Weierstrass).unwrap(),
        BigUint::from(198u32)
    );
    assert_eq!(count(0, 1, ClassFilter::Ordinary), BigUint::from(17280u32));
    assert_eq!(count(2, 1, ClassFilter::Ordinary), BigUint::from(2160u32));
    assert_eq!(
        conjectural_degree(4, BisectionKind::Weierstrass).unwrap(),
        BigUint::from(1464u32)
    );
    // Extended to every height n <= 6.
    let report = run_check("height_sums", &default_config()).unwrap();
    assert!(report.passed(), "{report}");
    finish(
        10,
        Duration::from_secs(60),
        start,
        "quarter section coefficients decompose as class counts x degrees for n <= 6",
    );
}

#[test]
fn criterion_11_bound_dominance() {
    let start = Instant::now();
    let report = run_check("bound_dominance", &default_config()).unwrap();
    assert!(report.passed(), "{report}");
    finish(
        11,
        Duration::from_secs(10),
        start,
        "conjectural degree <= rigorous bound for all admissible g <= 40",
    );
}

#[test]
fn criterion_12_asymptotic_reported_not_asserted() {
    let start = Instant::now();
    // The O(g^{12+eps}) headline is not a finite check; the substituted
    // property is a report: the suite computes the explicit constant C
    // with genus_bound(g) <= C g^12 on g <= 40 and reports it.
    let report = run_check("asymptotic_report", &default_config()).unwrap();
    assert!(report.passed(), "{report}");
    let notes = report.notes.as_deref().unwrap_or("");
    assert!(
        notes.contains("C = 1552219903/4096"),
        "report must carry the explicit constant, got: {notes}"
    );
    println!("criterion 12 report: {notes}");
    finish(
        12,
        Duration::from_secs(60),
        start,
        "genus_bound(g) <= C g^12 reported with explicit C (not asserted as a theorem)",
    );
}

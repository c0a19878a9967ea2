//! The named verification battery.
//!
//! [`CHECK_NAMES`] lists every check in its canonical order; [`run_check`]
//! dispatches one by name and [`run_all`] runs the whole battery. The checks
//! marry the two halves of the crate: q-series identities are compared
//! coefficient by coefficient, lattice facts are established by brute-force
//! enumeration, and the headline counts are validated by playing one side
//! against the other. Every comparison is exact.
//!
//! Checks read their working sizes from [`Config`]: `precision` truncates the
//! series-level identities, `norm_cap` bounds the lattice sweeps. Two checks
//! (`bound_dominance`, `asymptotic_report`) sample fixed genus/exponent
//! ranges so their reported constants are stable across configurations.

use crate::e8::{
    class_census, classify_classes, count_norm, kind_of_bits, norm4_shapes_check, norm4_vectors,
    orbit, roots, ClassKind,
};
use crate::qseries::{divisor_sum, eisenstein, ratio, Rational};
use crate::report::CheckReport;
use crate::severi::{
    self, conjectural_degree, genus_bound, nl_series_phi, rigorous_degree_bound, section_series,
    BisectionKind,
};
use crate::Config;
use num_bigint::{BigInt, BigUint};

/// Every check, in canonical execution and output order.
pub const CHECK_NAMES: [&str; 12] = [
    "ramanujan",
    "theta_e4",
    "class_uniformity",
    "transitivity",
    "e4inf_identity",
    "phi_expansion",
    "phi_decomposition",
    "degree_consistency",
    "telltales_vs_lattice",
    "height_sums",
    "bound_dominance",
    "asymptotic_report",
];

/// Runs one named check, or `None` when the name is not registered.
pub fn run_check(name: &str, config: &Config) -> Option<CheckReport> {
    let report = match name {
        "ramanujan" => check_ramanujan(config.precision),
        "theta_e4" => check_theta_e4(config.norm_cap),
        "class_uniformity" => check_class_uniformity(config.norm_cap),
        "transitivity" => check_transitivity(),
        "e4inf_identity" => severi::verify_e4inf_class_identity(config.precision),
        "phi_expansion" => check_phi_expansion(),
        "phi_decomposition" => severi::verify_phi_decomposition(config.precision),
        "degree_consistency" => check_degree_consistency(config.precision),
        "telltales_vs_lattice" => check_telltales_vs_lattice(config.norm_cap),
        "height_sums" => check_height_sums(),
        "bound_dominance" => check_bound_dominance(),
        "asymptotic_report" => check_asymptotic_report(),
        _ => return None,
    };
    Some(report)
}

/// Runs the full battery in [`CHECK_NAMES`] order.
pub fn run_all(config: &Config) -> Vec<CheckReport> {
    CHECK_NAMES
        .iter()
        .map(|name| run_check(name, config).expect("every registered name dispatches"))
        .collect()
}

/// D E4 = (E2 E4 - E6) / 3, coefficientwise to the precision.
fn check_ramanujan(precision: usize) -> CheckReport {
    const NAME: &str = "ramanujan";
    let e2 = eisenstein(2, precision).expect("weight 2 is supported");
    let e4 = eisenstein(4, precision).expect("weight 4 is supported");
    let e6 = eisenstein(6, precision).expect("weight 6 is supported");
    let lhs = e4.derive();
    let rhs = (&(&e2 * &e4) - &e6).scale(&ratio(1, 3));
    match lhs.first_difference(&rhs) {
        None => CheckReport::pass(NAME, precision as u64).with_notes("D E4 = (E2 E4 - E6) / 3"),
        Some(n) => CheckReport::fail(
            NAME,
            precision as u64,
            n as u64,
            lhs.coeff(n).expect("within precision"),
            rhs.coeff(n).expect("within precision"),
        ),
    }
}

/// The theta series of the lattice is E4: the number of vectors of norm
/// 2n equals the q^n coefficient of E4, checked for all norms up to the
/// cap by brute-force enumeration.
fn check_theta_e4(norm_cap: i64) -> CheckReport {
    const NAME: &str = "theta_e4";
    let cap = norm_cap.max(0);
    let half_cap = (cap / 2) as usize;
    let e4 = eisenstein(4, half_cap).expect("weight 4 is supported");
    for n in 0..=half_cap {
        let norm = 2 * n as i64;
        let counted = count_norm(norm).expect("even nonnegative norm");
        let predicted = e4.coeff(n).expect("within precision");
        if predicted != &Rational::from(BigInt::from(counted)) {
            return CheckReport::fail(NAME, cap as u64, norm as u64, predicted, counted)
                .with_notes("lattice theta series vs E4");
        }
    }
    CheckReport::pass(NAME, cap as u64).with_notes(format!(
        "vector counts equal E4 coefficients for norms 0..={}",
        2 * half_cap
    ))
}

/// The 256 classes split 1 + 120 + 135 by kind, and on every norm sphere
/// up to the cap the census is uniform within each kind: the zero class
/// holds exactly the doubled vectors, the 120 root-type classes share one
/// count, the 135 norm4-type classes share another, and the counts total
/// the full sphere.
fn check_class_uniformity(norm_cap: i64) -> CheckReport {
    const NAME: &str = "class_uniformity";
    let cap = norm_cap.max(0) as u64;
    let partition = classify_classes().expect("class partition is computable");
    if partition != (1, 120, 135) {
        return CheckReport::fail(NAME, cap, 0, "(1, 120, 135)", format!("{partition:?}"))
            .with_notes("class partition by kind");
    }
    let mut norm = 2i64;
    while norm <= norm_cap {
        let census = class_census(norm).expect("even nonnegative norm");
        let mut seen: [Option<u64>; 2] = [None, None];
        for bits in 0..=255u8 {
            let value = census[bits as usize];
            let slot = match kind_of_bits(bits) {
                ClassKind::Zero => {
                    // The zero class consists of doubled vectors 2u, so it
                    // holds count_norm(norm / 4) vectors when norm / 4 is an
                    // even integer and none otherwise.
                    let doubled = if norm % 8 == 0 {
                        count_norm(norm / 4).expect("even nonnegative norm")
                    } else {
                        0
                    };
                    if value != doubled {
                        return CheckReport::fail(NAME, cap, norm as u64, doubled, value)
                            .with_notes("zero-class census");
                    }
                    continue;
                }
                ClassKind::RootType => 0,
                ClassKind::Norm4Type => 1,
            };
            match seen[slot] {
                None => seen[slot] = Some(value),
                Some(previous) if previous != value => {
                    let kind = if slot == 0 { "root-type" } else { "norm4-type" };
                    return CheckReport::fail(NAME, cap, norm as u64, previous, value)
                        .with_notes(format!("non-uniform census among {kind} classes"));
                }
                Some(_) => {}
            }
        }
        let total: u64 = census.iter().sum();
        let expected = BigUint::from(240u32) * divisor_sum(3, (norm / 2) as u64);
        if BigUint::from(total) != expected {
            return CheckReport::fail(NAME, cap, norm as u64, expected, total)
                .with_notes("census total vs 240 sigma_3(norm / 2)");
        }
        norm += 2;
    }
    CheckReport::pass(NAME, cap).with_notes(format!(
        "256 classes split 1 + 120 + 135; censuses uniform within kind for norms 2..={norm_cap}"
    ))
}

/// Reflections in roots act transitively on the 240 roots and on the
/// 2160 norm-4 vectors, the roots split 112 integral + 128 half-integral,
/// the norm-4 shape census is exactly the eight expected shapes, and
/// every norm-4 vector is a sum of two roots.
fn check_transitivity() -> CheckReport {
    const NAME: &str = "transitivity";
    let all_roots = roots();
    if all_roots.len() != 240 {
        return CheckReport::fail(NAME, 4, 2, 240u64, all_roots.len()).with_notes("root count");
    }
    let half = all_roots
        .iter()
        .filter(|r| r.doubled()[0] % 2 != 0)
        .count();
    let integral = all_roots.len() - half;
    if (integral, half) != (112, 128) {
        return CheckReport::fail(NAME, 4, 2, "(112, 128)", format!("({integral}, {half})"))
            .with_notes("integral vs half-integral roots");
    }
    let root_orbit = orbit(&all_roots[0], all_roots).expect("generators are roots");
    if root_orbit.len() != 240 {
        return CheckReport::fail(NAME, 4, 2, 240u64, root_orbit.len())
            .with_notes("reflection orbit of a root");
    }
    let norm4 = norm4_vectors();
    let norm4_orbit = orbit(&norm4[0], all_roots).expect("generators are roots");
    if norm4.len() != 2160 || norm4_orbit.len() != 2160 {
        return CheckReport::fail(NAME, 4, 4, 2160u64, norm4_orbit.len())
            .with_notes("reflection orbit of a norm-4 vector");
    }
    let shapes = norm4_shapes_check();
    if !shapes.passed() {
        let mut renamed = shapes;
        renamed.name = NAME.to_string();
        return renamed;
    }
    CheckReport::pass(NAME, 4).with_notes(
        "reflections are transitive on the 240 roots and the 2160 norm-4 vectors; \
         every norm-4 vector is a sum of two roots",
    )
}

/// The leading coefficients of phi are -1, 24, 73512, 3621216, 53488968.
fn check_phi_expansion() -> CheckReport {
    const NAME: &str = "phi_expansion";
    const EXPECTED: [i64; 5] = [-1, 24, 73512, 3621216, 53488968];
    let precision = (EXPECTED.len() - 1) as u64;
    let phi = nl_series_phi(EXPECTED.len() - 1);
    for (n, &want) in EXPECTED.iter().enumerate() {
        let got = phi.coeff(n).expect("within precision");
        if got != &Rational::from(BigInt::from(want)) {
            return CheckReport::fail(NAME, precision, n as u64, want, got);
        }
    }
    CheckReport::pass(NAME, precision)
        .with_notes("leading coefficients -1, 24, 73512, 3621216, 53488968")
}

/// Combines the ordinary and Weierstrass runs of a per-kind check: the
/// first failure wins; two passes merge into one with both notes.
fn merge_kinds(ordinary: CheckReport, weierstrass: CheckReport) -> CheckReport {
    if !ordinary.passed() {
        return ordinary;
    }
    if !weierstrass.passed() {
        return weierstrass;
    }
    let notes = match (&ordinary.notes, &weierstrass.notes) {
        (Some(a), Some(b)) => Some(format!("{a}; {b}")),
        (Some(a), None) => Some(a.clone()),
        (None, Some(b)) => Some(b.clone()),
        (None, None) => None,
    };
    CheckReport { notes, ..ordinary }
}

/// Degree coefficients reassemble from weighted telltale counts, for
/// both bundle kinds.
fn check_degree_consistency(precision: usize) -> CheckReport {
    merge_kinds(
        severi::verify_degree_consistency(BisectionKind::Ordinary, precision),
        severi::verify_degree_consistency(BisectionKind::Weierstrass, precision),
    )
}

/// Simple-telltale counts match brute-force pair-decomposition counts on
/// the lattice, for both bundle kinds. Genus g needs the norm 2g + 4
/// sphere, so the range is clipped to the enumeration cap (and to the
/// g <= 10 window the counts are tabulated for).
fn check_telltales_vs_lattice(norm_cap: i64) -> CheckReport {
    let g_max = ((norm_cap.max(4) - 4) / 2).min(10) as u64;
    merge_kinds(
        severi::verify_telltales_against_lattice(g_max, BisectionKind::Ordinary),
        severi::verify_telltales_against_lattice(g_max, BisectionKind::Weierstrass),
    )
}

/// Height-weighted sums of class counts times conjectural degrees equal
/// the section-series coefficients, for heights 0 through 6.
fn check_height_sums() -> CheckReport {
    const NAME: &str = "height_sums";
    let mut precision = 2;
    for n in 0..=6u64 {
        let report = severi::height_degree_sum_check(n);
        if !report.passed() {
            return report;
        }
        precision = report.precision;
    }
    CheckReport::pass(NAME, precision).with_notes("heights 0..=6 against conjectural degrees")
}

/// The conjectural degree never exceeds the rigorous bound, for every
/// admissible genus up to 40 and both bundle kinds.
fn check_bound_dominance() -> CheckReport {
    const NAME: &str = "bound_dominance";
    const G_MAX: u64 = 40;
    for g in 0..=G_MAX {
        let kinds: &[BisectionKind] = if g % 2 == 0 {
            &[BisectionKind::Ordinary, BisectionKind::Weierstrass]
        } else {
            &[BisectionKind::Ordinary]
        };
        for &kind in kinds {
            let degree = match conjectural_degree(g, kind) {
                Ok(d) => d,
                Err(e) => {
                    return CheckReport::fail(
                        NAME,
                        G_MAX,
                        g,
                        "a conjectural degree",
                        format!("error: {e}"),
                    )
                    .with_notes(format!("{kind} bundles"))
                }
            };
            let bound = match rigorous_degree_bound(g, kind) {
                Ok(b) => b,
                Err(e) => {
                    return CheckReport::fail(
                        NAME,
                        G_MAX,
                        g,
                        "a rigorous bound",
                        format!("error: {e}"),
                    )
                    .with_notes(format!("{kind} bundles"))
                }
            };
            if degree > bound {
                return CheckReport::fail(NAME, G_MAX, g, format!("<= {bound}"), degree)
                    .with_notes(format!("{kind} bundles"));
            }
        }
    }
    CheckReport::pass(NAME, G_MAX)
        .with_notes("conjectural degree <= rigorous bound for g <= 40, both bundle kinds")
}

/// Reports (never fails) the growth constants behind the bounds: the
/// smallest C with genus_bound(g) <= C g^12 on 1 <= g <= 40, and the peak
/// of the section-series coefficient against n^9 for n <= 60. Both are
/// exact rationals with the argument where the maximum is attained.
fn check_asymptotic_report() -> CheckReport {
    const NAME: &str = "asymptotic_report";
    const G_MAX: u64 = 40;
    const N_MAX: u64 = 60;
    let mut best_genus: Option<(Rational, u64, BisectionKind)> = None;
    for g in 1..=G_MAX {
        let kinds: &[BisectionKind] = if g % 2 == 0 {
            &[BisectionKind::Ordinary, BisectionKind::Weierstrass]
        } else {
            &[BisectionKind::Ordinary]
        };
        for &kind in kinds {
            let bound = match genus_bound(g, kind) {
                Ok(b) => b,
                Err(e) => {
                    return CheckReport::fail(NAME, G_MAX, g, "a genus bound", format!("error: {e}"))
                        .with_notes(format!("{kind} bundles"))
                }
            };
            let value = Rational::new(BigInt::from(bound), BigInt::from(g).pow(12));
            if best_genus.as_ref().is_none_or(|(best, _, _)| &value > best) {
                best_genus = Some((value, g, kind));
            }
        }
    }
    let sections = section_series(N_MAX as usize);
    let mut best_section: Option<(Rational, u64)> = None;
    for n in 1..=N_MAX {
        let coefficient = sections.coeff(n as usize).expect("within precision");
        let value = coefficient / &Rational::from(BigInt::from(n).pow(9));
        if best_section.as_ref().is_none_or(|(best, _)| &value > best) {
            best_section = Some((value, n));
        }
    }
    let (genus_ratio, g_at, kind_at) = best_genus.expect("nonempty genus range");
    let (section_ratio, n_at) = best_section.expect("nonempty exponent range");
    CheckReport::pass(NAME, G_MAX).with_notes(format!(
        "genus_bound(g) <= C g^12 for g <= {G_MAX} with C = {genus_ratio} attained at \
         g = {g_at} ({kind_at}); section coefficient [q^n] / n^9 peaks at {section_ratio} \
         (n = {n_at}) for n <= {N_MAX}"
    ))
}

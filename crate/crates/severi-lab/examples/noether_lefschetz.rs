//! The Noether-Lefschetz series phi and its exact decomposition into
//! excess, nodal, and section-counting parts, plus the two structural
//! identities that tie it to the lattice.
//!
//! Run with: cargo run --example noether_lefschetz

use severi_lab::qseries::rational;
use severi_lab::severi::{
    excess_correction, nl_series_phi, nodal_correction, section_series,
    verify_e4inf_class_identity, verify_phi_decomposition,
};

fn main() {
    let precision = 10;

    // phi = -(1/3) E2 E4^2 - (2/3) E4 E6, a weight-10 quasi-modular form.
    let phi = nl_series_phi(precision);
    println!("phi     = {phi}");
    assert_eq!(phi.coeff(0).unwrap(), &rational(-1));
    assert_eq!(phi.coeff(1).unwrap(), &rational(24));
    assert_eq!(phi.coeff(2).unwrap(), &rational(73512));
    assert_eq!(phi.coeff(3).unwrap(), &rational(3621216));

    // Its geometric pieces: excess intersections, nodal-fiber walls, and
    // the section-counting remainder. They reassemble phi exactly:
    // phi = -1 + psi_ex + psi_no + psi_sec.
    let psi_ex = excess_correction(precision);
    let psi_no = nodal_correction(precision);
    let psi_sec = section_series(precision);
    println!("psi_ex  = {psi_ex}");
    println!("psi_no  = {psi_no}");
    println!("psi_sec = {psi_sec}");

    let reassembled = &(&psi_ex + &psi_no) + &psi_sec;
    let shifted = phi.add(&severi_lab::qseries::QSeries::one(precision));
    assert_eq!(shifted.first_difference(&reassembled), None);
    println!("\nphi + 1 = psi_ex + psi_no + psi_sec, verified to precision {precision}");

    // Every psi_sec coefficient is a nonnegative integer multiple of 4
    // (it counts weighted configurations with a four-fold symmetry).
    for n in 0..=precision {
        let quarter = psi_sec.coeff(n).unwrap() / &rational(4);
        assert!(quarter.is_integer());
        assert!(quarter >= rational(0));
    }

    // Two identities connect the series side to the lattice side; both
    // are checked coefficientwise and report exactly where they first
    // fail (nowhere, here).
    let class_identity = verify_e4inf_class_identity(60);
    println!("\n{class_identity}");
    assert!(class_identity.passed());

    let decomposition = verify_phi_decomposition(60);
    println!("{decomposition}");
    assert!(decomposition.passed());
}

//! Exact q-series arithmetic: Eisenstein series, theta, and the
//! Ramanujan derivative identity, all over arbitrary-precision rationals.
//!
//! Run with: cargo run --example eisenstein_basics

use severi_lab::qseries::{e4_infinity, eisenstein, ratio, rational, theta};

fn main() {
    let precision = 12;
    let e2 = eisenstein(2, precision).unwrap();
    let e4 = eisenstein(4, precision).unwrap();
    let e6 = eisenstein(6, precision).unwrap();
    let theta = theta(precision);

    println!("E2    = {e2}");
    println!("E4    = {e4}");
    println!("E6    = {e6}");
    println!("theta = {theta}");

    // Coefficients are exact BigRationals; these are the classical values.
    assert_eq!(e2.coeff(1).unwrap(), &rational(-24));
    assert_eq!(e4.coeff(1).unwrap(), &rational(240));
    assert_eq!(e4.coeff(2).unwrap(), &rational(2160));
    assert_eq!(e6.coeff(1).unwrap(), &rational(-504));
    assert_eq!(theta.coeff(9).unwrap(), &rational(2)); // 9 is a square
    assert_eq!(theta.coeff(10).unwrap(), &rational(0)); // 10 is not

    // D = q d/dq sends sum a_n q^n to sum n a_n q^n. Ramanujan's identity
    // D E4 = (E2 E4 - E6) / 3 holds exactly, coefficient by coefficient.
    let lhs = e4.derive();
    let rhs = (&(&e2 * &e4) - &e6).scale(&ratio(1, 3));
    assert_eq!(lhs.first_difference(&rhs), None);
    println!("\nD E4 = (E2 E4 - E6) / 3 verified to precision {precision}");

    // Substitution q -> q^2 and parity projections are exact too:
    // E4(q) - E4(q^2) has the odd part of E4 plus corrected even terms,
    // and dividing by 240 gives the series E4inf with coefficient
    // sigma_3(n) - sigma_3(n/2) (second term only for even n).
    let diff = &e4 - &e4.substitute_power(2).unwrap();
    let scaled = diff.scale(&ratio(1, 240));
    let e4inf = e4_infinity(precision);
    assert_eq!(scaled.first_difference(&e4inf), None);
    println!("(E4(q) - E4(q^2)) / 240 = E4inf, with E4inf = {e4inf}");
}

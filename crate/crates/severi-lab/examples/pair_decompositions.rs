//! Pair decompositions in E8: counting the ways to split a vector as a
//! sum of two lattice vectors with a prescribed inner product, explicit
//! witnesses, and the bisection-class counts built from them.
//!
//! Run with: cargo run --release --example pair_decompositions

use severi_lab::e8::{
    count_bisection_classes, count_pair_decompositions, decomposition_witness, min_height_delta,
    roots, BisectionKind, ClassFilter, E8Vector, LatticeError,
};
use num_bigint::BigUint;

fn main() {
    // count_pair_decompositions(w, m) counts unordered pairs {u1, u2}
    // with u1 + u2 = w and 4 dot(u1, u2) = norm(w) - 2m. The change of
    // variables x = u1 - u2 turns this into counting x with norm 2m in
    // the class of w mod 2E8, halved.
    let w = roots()[0];
    println!("w = {w} (a root)");
    for m in 1..=6u64 {
        println!("  m = {m}: {} pairs", count_pair_decompositions(&w, m));
    }
    assert_eq!(count_pair_decompositions(&w, 3), 28);
    assert_eq!(count_pair_decompositions(&w, 2), 0); // parity obstruction

    let zero = E8Vector::zero();
    assert_eq!(count_pair_decompositions(&zero, 4), 120); // pairs {u, -u}, norm(u) = 2
    println!("w = 0: m = 4 gives {} pairs", count_pair_decompositions(&zero, 4));

    // decomposition_witness returns one explicit pair, searching by
    // increasing norm in canonical order (deterministic), or a typed
    // error when no decomposition exists.
    let (v1, v2) = decomposition_witness(&w, 1).unwrap();
    println!("witness for (w, m = 1): {v1} + {v2}");
    assert_eq!(v1.add(&v2), w);
    assert_eq!(4 * v1.dot(&v2), w.norm() - 2);

    match decomposition_witness(&zero, 2) {
        Err(LatticeError::NoDecomposition { m }) => {
            println!("(0, m = {m}): no decomposition exists (2-divisible w needs 4 | m)");
        }
        other => panic!("expected NoDecomposition, got {other:?}"),
    }

    // Bisection classes of genus g and height n correspond to lattice
    // vectors of norm 2(2n + 2 - g); the Weierstrass ones are the
    // 2-divisible vectors.
    let all = count_bisection_classes(1, 1, ClassFilter::All).unwrap();
    println!("\ngenus 1, height 1: {all} bisection classes (240 sigma_3(3))");
    assert_eq!(all, BigUint::from(6720u32));
    let wei = count_bisection_classes(0, 1, ClassFilter::Weierstrass).unwrap();
    let ord = count_bisection_classes(0, 1, ClassFilter::Ordinary).unwrap();
    println!("genus 0, height 1: {ord} ordinary + {wei} Weierstrass");
    assert_eq!(wei, BigUint::from(240u32));

    // The minimal height of a genus-g class: delta = 1 exactly when
    // g = 0 mod 4 with a Weierstrass bundle; the witness vector realizes
    // the minimal norm 2g + 4 - 4 delta.
    for (g, kind) in [
        (3u64, BisectionKind::Ordinary),
        (4, BisectionKind::Weierstrass),
        (2, BisectionKind::Weierstrass),
    ] {
        let (delta, witness) = min_height_delta(g, kind).unwrap();
        println!(
            "min height delta(g = {g}, {kind}) = {delta}, witness {witness} of norm {}",
            witness.norm()
        );
        assert_eq!(witness.norm(), 2 * g as i64 + 4 - 4 * delta as i64);
    }
}

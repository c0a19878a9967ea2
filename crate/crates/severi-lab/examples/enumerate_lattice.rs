//! Brute-force E8 lattice enumeration: vectors by norm, the theta-series
//! identity against E4, roots, and the norm-4 shape census.
//!
//! Run with: cargo run --release --example enumerate_lattice

use severi_lab::e8::{count_norm, enumerate_norm, norm4_shapes_check, roots, E8Vector};
use severi_lab::qseries::{divisor_sum, eisenstein};
use num_bigint::BigUint;

fn main() {
    // Vectors are stored in doubled coordinates (d_i = 2 v_i) so the
    // half-integer vectors of E8 stay integral. Display shows the true
    // coordinates.
    let root = E8Vector::from_doubled([1, 1, 1, 1, 1, 1, 1, 1]).unwrap();
    println!("the all-halves root: {root}, norm {}", root.norm());
    assert_eq!(root.norm(), 2);

    // Counting by enumeration reproduces the E4 coefficients: the theta
    // series of E8 is the weight-4 Eisenstein series.
    let e4 = eisenstein(4, 10).unwrap();
    println!("\nnorm  count      240 sigma_3(n)");
    for n in 1..=10i64 {
        let count = count_norm(2 * n).unwrap();
        let sigma = BigUint::from(240u32) * divisor_sum(3, n as u64);
        println!("{:>4}  {:>9}  {}", 2 * n, count, sigma);
        assert_eq!(BigUint::from(count), sigma);
        assert_eq!(
            e4.coeff(n as usize).unwrap().to_integer(),
            BigUint::from(count).into()
        );
    }

    // The 240 roots come back in canonical (lexicographic on doubled
    // coordinates) order: 112 integral, 128 half-integral.
    let all_roots = roots();
    let half = all_roots
        .iter()
        .filter(|r| r.doubled()[0] % 2 != 0)
        .count();
    println!(
        "\n{} roots: {} integral + {} half-integral",
        all_roots.len(),
        all_roots.len() - half,
        half
    );
    assert_eq!((all_roots.len(), half), (240, 128));
    println!("first three: {}, {}, {}", all_roots[0], all_roots[1], all_roots[2]);

    // Enumeration is deterministic and duplicate-free; the norm-4 sphere
    // has 2160 vectors falling into exactly eight shapes up to coordinate
    // permutation and global sign, each one a sum of two roots.
    let norm4 = enumerate_norm(4).unwrap();
    assert_eq!(norm4.len(), 2160);
    let shapes = norm4_shapes_check();
    assert!(shapes.passed());
    println!("\n{shapes}");
}

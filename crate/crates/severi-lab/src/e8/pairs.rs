//! Pair decompositions, bisection-class counts, and minimal-height data.
//!
//! These are the lattice quantities behind the telltale and degree
//! formulas. The source statements live in a negative-definite form;
//! everything here is phrased in the positive-definite convention, with
//! norms negated at that boundary.

use super::{
    class_id, count_norm_in_class, enumerate_norm, norm4_vectors, roots, E8Vector, LatticeError,
};
use crate::qseries::divisor_sum;
use num_bigint::BigUint;
use num_traits::{One, Zero};
use std::fmt;

/// Whether a bisection class (equivalently a bundle) is ordinary or
/// Weierstrass: Weierstrass means the defining vector is 2-divisible.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BisectionKind {
    Ordinary,
    Weierstrass,
}

impl fmt::Display for BisectionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BisectionKind::Ordinary => write!(f, "ordinary"),
            BisectionKind::Weierstrass => write!(f, "weierstrass"),
        }
    }
}

/// Selector for bisection-class counting.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClassFilter {
    All,
    Ordinary,
    Weierstrass,
}

/// Counts unordered pairs {u1, u2} in E8 with u1 + u2 = w and
/// 4 dot(u1, u2) = norm(w) - 2m.
///
/// The change of variables x = u1 - u2 turns the condition into
/// norm(x) = 2m with x = w mod 2E8, so for m > 0 the count is half the
/// number of norm-2m vectors in the class of w (x and -x give the same
/// unordered pair, and x = 0 is impossible). For m = 0 the only candidate
/// is the fixed point x = 0, giving one pair exactly when w is
/// 2-divisible.
///
/// A parity mismatch (norm(w) != 2m mod 4) is not an error: the count is
/// simply zero, because norms within a class agree mod 4.
pub fn count_pair_decompositions(w: &E8Vector, m: u64) -> u64 {
    if (w.norm() - 2 * m as i64).rem_euclid(4) != 0 {
        return 0;
    }
    if m == 0 {
        return u64::from(w.is_two_divisible());
    }
    let half_count = count_norm_in_class(2 * m as i64, &class_id(w))
        .expect("2m is a valid even norm");
    debug_assert_eq!(half_count % 2, 0, "x and -x pair up for m > 0");
    half_count / 2
}

/// Finds one explicit pair (v, w) with v + w = u and
/// 4 dot(v, w) = norm(u) - 2m.
///
/// The search runs over v in increasing norm, canonical order within each
/// norm, and returns the first hit; since
/// norm(v) + norm(w) = (norm(u) + 2m)/2, the smaller summand has norm at
/// most a quarter of that, so the sweep is bounded.
///
/// Despite the source statement, a decomposition does not always exist
/// when the parity condition holds: a 2-divisible u needs m divisible by
/// 4 (or m = 0), and a 2-primitive u needs m > 0. Those cases return
/// [`LatticeError::NoDecomposition`] rather than a wrong pair.
pub fn decomposition_witness(
    u: &E8Vector,
    m: u64,
) -> Result<(E8Vector, E8Vector), LatticeError> {
    let nu = u.norm();
    let two_m = 2 * m as i64;
    if (nu - two_m).rem_euclid(4) != 0 {
        return Err(LatticeError::ParityMismatch {
            norm: nu,
            two_m: 2 * m,
        });
    }
    if m == 0 {
        return match u.half() {
            Some(h) => Ok((h, h)),
            None => Err(LatticeError::NoDecomposition { m }),
        };
    }
    if count_pair_decompositions(u, m) == 0 {
        return Err(LatticeError::NoDecomposition { m });
    }
    let target = nu - two_m;
    let budget = (nu + two_m) / 4;
    let mut t = 0i64;
    while t <= budget {
        for v in enumerate_norm(t).expect("even nonnegative norm") {
            let w = u.sub(&v);
            if 4 * v.dot(&w) == target {
                return Ok((v, w));
            }
        }
        t += 2;
    }
    Err(LatticeError::NoDecomposition { m })
}

/// Counts the bisection classes of a genus-g curve in the linear system
/// indexed by n: vectors of norm 2(2n + 2 - g), split into Weierstrass
/// (2-divisible) and ordinary (the rest).
///
/// For exponent e = 2n + 2 - g > 0 the total is 240 sigma_3(e); the
/// Weierstrass part counts vectors 2x with norm(x) = e/2 and is zero
/// unless 4 divides e. At e = 0 the single class (the zero vector) is
/// Weierstrass.
pub fn count_bisection_classes(
    g: u64,
    n: i64,
    filter: ClassFilter,
) -> Result<BigUint, LatticeError> {
    let e = 2 * n + 2 - g as i64;
    if e < 0 {
        return Err(LatticeError::NegativeExponent { exponent: e });
    }
    let all = if e == 0 {
        BigUint::one()
    } else {
        BigUint::from(240u32) * divisor_sum(3, e as u64)
    };
    let wei = if e == 0 {
        BigUint::one()
    } else if e % 4 == 0 {
        BigUint::from(240u32) * divisor_sum(3, (e / 4) as u64)
    } else {
        BigUint::zero()
    };
    Ok(match filter {
        ClassFilter::All => all,
        ClassFilter::Weierstrass => wei,
        ClassFilter::Ordinary => all - wei,
    })
}

/// The minimal-height defect delta and a witness vector.
///
/// delta = 1 exactly when g = 0 mod 4 and the bundle is Weierstrass;
/// otherwise 0. The witness lies in the class of a representative bundle
/// vector and has norm 2g + 4 - 4 delta: for ordinary bundles it is the
/// first vector of that norm (canonical order) in the representative
/// 2-primitive class (a root class for odd g, a norm-4 class for even g);
/// for Weierstrass bundles it is 2x for the first x of norm
/// (g + 2 - 2 delta)/2.
pub fn min_height_delta(
    g: u64,
    kind: BisectionKind,
) -> Result<(u8, E8Vector), LatticeError> {
    match kind {
        BisectionKind::Ordinary => {
            let rep = if g % 2 == 1 {
                roots()[0]
            } else {
                norm4_vectors()[0]
            };
            let bits = super::class_bits(&rep);
            let target = 2 * g as i64 + 4;
            let witness = enumerate_norm(target)?
                .into_iter()
                .find(|v| super::class_bits(v) == bits)
                .expect("every matching-parity class is hit at every norm");
            Ok((0, witness))
        }
        BisectionKind::Weierstrass => {
            if !g.is_multiple_of(2) {
                return Err(LatticeError::OddWeierstrassGenus(g));
            }
            let delta = u8::from(g.is_multiple_of(4));
            let half_norm = (g as i64 + 2 - 2 * delta as i64) / 2;
            let x = enumerate_norm(half_norm)?
                .into_iter()
                .next()
                .expect("nonempty: half_norm is a realized even norm");
            let witness = x.double();
            debug_assert_eq!(witness.norm(), 2 * g as i64 + 4 - 4 * delta as i64);
            Ok((delta, witness))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::count_norm;
    use super::*;
    use num_traits::ToPrimitive;

    fn ints(v: [i32; 8]) -> E8Vector {
        E8Vector::from_integers(v).unwrap()
    }

    #[test]
    fn pair_counts_match_direct_enumeration() {
        // Direct O(N^2)-free check: enumerate u1 over small norms and count
        // pairs for a root w at m = 3. u1 + u2 = w with
        // norm(u1) + norm(u2) = (2 + 6)/2 = 4, so norm(u1) <= 4.
        let w = roots()[0];
        let mut direct = 0u64;
        for t in [0i64, 2, 4] {
            for u1 in enumerate_norm(t).unwrap() {
                let u2 = w.sub(&u1);
                if 4 * u1.dot(&u2) == w.norm() - 6 && u1 <= u2 {
                    direct += 1;
                }
            }
        }
        assert_eq!(direct, 28);
        assert_eq!(count_pair_decompositions(&w, 3), 28);
    }

    #[test]
    fn pair_count_examples() {
        let root = roots()[0];
        assert_eq!(count_pair_decompositions(&root, 3), 28);
        assert_eq!(count_pair_decompositions(&root, 2), 0, "parity obstruction");
        assert_eq!(count_pair_decompositions(&root, 1), 1);
        let zero = E8Vector::zero();
        assert_eq!(count_pair_decompositions(&zero, 4), 120);
        assert_eq!(count_pair_decompositions(&zero, 2), 0);
        assert_eq!(count_pair_decompositions(&zero, 0), 1);
        let n4 = norm4_vectors()[0];
        assert_eq!(count_pair_decompositions(&n4, 2), 8);
        assert_eq!(count_pair_decompositions(&n4, 0), 0);
    }

    #[test]
    fn witness_satisfies_the_equation() {
        let cases = [
            (roots()[0], 1u64),
            (roots()[5], 3),
            (norm4_vectors()[0], 2),
            (E8Vector::zero(), 4),
            (ints([2, 0, 0, 0, 0, 0, 0, 0]), 2),
            (ints([1, 1, 1, 1, 0, 0, 0, 0]), 4),
        ];
        for (u, m) in cases {
            let (v, w) = decomposition_witness(&u, m).unwrap();
            assert_eq!(v.add(&w), u, "u = {u}, m = {m}");
            assert_eq!(
                4 * v.dot(&w),
                u.norm() - 2 * m as i64,
                "u = {u}, m = {m}"
            );
        }
    }

    #[test]
    fn witness_trivial_and_searched_cases() {
        let u = roots()[0];
        let (v, w) = decomposition_witness(&u, 1).unwrap();
        // First hit in increasing-norm order is (0, u).
        assert_eq!(v, E8Vector::zero());
        assert_eq!(w, u);
        // Target 4 dot(v, w) = 0; the first hit in increasing-norm order
        // is v = 0, since norm(-u) = 2m already puts 0 in the sphere.
        let two = ints([2, 0, 0, 0, 0, 0, 0, 0]);
        let (v, w) = decomposition_witness(&two, 2).unwrap();
        assert_eq!(v, E8Vector::zero());
        assert_eq!(w, two);
        assert_eq!(4 * v.dot(&w), two.norm() - 4);
    }

    #[test]
    fn witness_impossible_cases_are_typed() {
        // 2-divisible u with m not divisible by 4: no solution even though
        // the parity condition holds.
        assert_eq!(
            decomposition_witness(&E8Vector::zero(), 2),
            Err(LatticeError::NoDecomposition { m: 2 })
        );
        let two = ints([2, 2, 0, 0, 0, 0, 0, 0]).double();
        assert!(matches!(
            decomposition_witness(&two, 2),
            Err(LatticeError::NoDecomposition { .. })
        ));
        // 2-primitive u of norm divisible by 4 with m = 0: parity holds
        // but u/2 is not a lattice vector.
        assert_eq!(
            decomposition_witness(&ints([1, 1, 1, 1, 0, 0, 0, 0]), 0),
            Err(LatticeError::NoDecomposition { m: 0 })
        );
        // Parity mismatch is a distinct error.
        assert!(matches!(
            decomposition_witness(&roots()[0], 2),
            Err(LatticeError::ParityMismatch { .. })
        ));
        assert!(matches!(
            decomposition_witness(&roots()[0], 0),
            Err(LatticeError::ParityMismatch { .. })
        ));
    }

    #[test]
    fn bisection_class_counts() {
        let all = |g, n| {
            count_bisection_classes(g, n, ClassFilter::All)
                .unwrap()
                .to_u64()
                .unwrap()
        };
        let wei = |g, n| {
            count_bisection_classes(g, n, ClassFilter::Weierstrass)
                .unwrap()
                .to_u64()
                .unwrap()
        };
        let ord = |g, n| {
            count_bisection_classes(g, n, ClassFilter::Ordinary)
                .unwrap()
                .to_u64()
                .unwrap()
        };
        assert_eq!(all(1, 1), 6720);
        assert_eq!(all(4, 1), 1, "exponent 0");
        assert_eq!(wei(4, 1), 1);
        assert_eq!(ord(4, 1), 0);
        assert_eq!(wei(0, 1), 240, "exponent 4: doubles of roots");
        assert_eq!(all(0, 1), 240 * 73, "sigma_3(4) = 73");
        assert_eq!(ord(0, 1), 240 * 73 - 240);
        assert_eq!(wei(1, 1), 0, "exponent 3 not divisible by 4");
        assert!(count_bisection_classes(5, 1, ClassFilter::All).is_err());
    }

    #[test]
    fn bisection_counts_agree_with_enumeration() {
        // Exponent e vectors of norm 2e; check the 2-divisible split.
        for e in [1i64, 2, 3, 4, 8] {
            let g = 2; // e = 2n + 2 - g, so n = (e + g - 2)/2 = e/2 when g = 2
            if e % 2 != 0 {
                continue;
            }
            let n = e / 2;
            let total = count_norm(2 * e).unwrap();
            let twodiv = enumerate_norm(2 * e)
                .unwrap()
                .iter()
                .filter(|v| v.is_two_divisible())
                .count() as u64;
            assert_eq!(
                count_bisection_classes(g, n, ClassFilter::All)
                    .unwrap()
                    .to_u64()
                    .unwrap(),
                total
            );
            assert_eq!(
                count_bisection_classes(g, n, ClassFilter::Weierstrass)
                    .unwrap()
                    .to_u64()
                    .unwrap(),
                twodiv,
                "e = {e}"
            );
        }
    }

    #[test]
    fn min_height_rule() {
        let (d, w) = min_height_delta(3, BisectionKind::Ordinary).unwrap();
        assert_eq!(d, 0);
        assert_eq!(w.norm(), 10);
        let (d, w) = min_height_delta(4, BisectionKind::Weierstrass).unwrap();
        assert_eq!(d, 1);
        assert_eq!(w.norm(), 8);
        assert!(w.is_two_divisible());
        let (d, w) = min_height_delta(2, BisectionKind::Weierstrass).unwrap();
        assert_eq!(d, 0);
        assert_eq!(w.norm(), 8);
        let (d, w) = min_height_delta(8, BisectionKind::Ordinary).unwrap();
        assert_eq!(d, 0);
        assert_eq!(w.norm(), 20);
        assert!(min_height_delta(3, BisectionKind::Weierstrass).is_err());
        let (d, w) = min_height_delta(0, BisectionKind::Weierstrass).unwrap();
        assert_eq!(d, 1);
        assert_eq!(w, E8Vector::zero());
    }

    #[test]
    fn ordinary_witness_class_matches_parity() {
        use super::super::{class_id, ClassKind};
        let (_, w) = min_height_delta(5, BisectionKind::Ordinary).unwrap();
        assert_eq!(class_id(&w).kind(), ClassKind::RootType);
        let (_, w) = min_height_delta(6, BisectionKind::Ordinary).unwrap();
        assert_eq!(class_id(&w).kind(), ClassKind::Norm4Type);
    }
}

//! Exhaustive enumeration of E8 vectors of a given norm.
//!
//! The kernel is a depth-first search over doubled coordinates. Branches
//! split on the shared parity (integer vs half-integer vectors), prune on
//! the remaining sum of squares, and solve the last coordinate directly.
//! Vectors are emitted in ascending lexicographic order on doubled
//! coordinates, the crate's canonical order.

use super::{isqrt, E8Vector, LatticeError};
use crate::report::CheckReport;
use rayon::prelude::*;
use std::sync::OnceLock;

/// Squares modulo 256, for cheap rejection before an exact isqrt.
const SQUARE_MOD_256: [bool; 256] = {
    let mut m = [false; 256];
    let mut i = 0usize;
    while i < 256 {
        m[(i * i) % 256] = true;
        i += 1;
    }
    m
};

fn is_square(n: i64) -> Option<i64> {
    if n < 0 || !SQUARE_MOD_256[(n % 256) as usize] {
        return None;
    }
    let s = isqrt(n);
    (s * s == n).then_some(s)
}

/// Depth-first search over coordinates `idx..8` in doubled form.
///
/// `rem` is the remaining sum of squares, `sum` the running coordinate sum,
/// `parity` the shared coordinate parity (0 or 1). The last coordinate is
/// solved, not scanned. Calls `visit` once per completed array, with
/// coordinates filled in ascending order at every level.
fn dfs(
    d: &mut [i32; 8],
    idx: usize,
    rem: i64,
    sum: i64,
    parity: i64,
    visit: &mut impl FnMut(&[i32; 8]),
) {
    if idx == 7 {
        let Some(s) = is_square(rem) else { return };
        if s % 2 != parity {
            return;
        }
        let candidates: &[i64] = if s == 0 { &[0] } else { &[-s, s] };
        for &c in candidates {
            if (sum + c).rem_euclid(4) == 0 {
                d[7] = c as i32;
                visit(d);
            }
        }
        return;
    }
    let left = (8 - idx) as i64;
    // Each odd doubled coordinate contributes at least 1 to the sum of
    // squares; the even branch only needs rem >= 0.
    if parity == 1 && rem < left {
        return;
    }
    let mut hi = isqrt(rem);
    if hi % 2 != parity {
        hi -= 1;
    }
    let mut c = -hi;
    while c <= hi {
        d[idx] = c as i32;
        dfs(d, idx + 1, rem - c * c, sum + c, parity, visit);
        c += 2;
    }
}

/// The admissible first coordinates for target doubled norm `s`, ascending.
fn first_coordinates(s: i64) -> Vec<i64> {
    let hi = isqrt(s);
    (-hi..=hi)
        .filter(|&c| {
            let parity = c.rem_euclid(2);
            let rem = s - c * c;
            parity == 0 || rem >= 7
        })
        .collect()
}

fn check_target(norm: i64) -> Result<(), LatticeError> {
    if norm < 0 || norm % 2 != 0 {
        return Err(LatticeError::BadNorm(norm));
    }
    Ok(())
}

/// Partition points for parallel sweeps over a validated doubled norm.
pub(crate) fn first_coordinates_for_census(s: i64) -> Vec<i64> {
    first_coordinates(s)
}

/// Runs one first-coordinate branch of the search for doubled norm `s`,
/// feeding completed doubled-coordinate arrays to `visit`.
pub(crate) fn census_branch(s: i64, c: i64, visit: &mut impl FnMut(&[i32; 8])) {
    let mut d = [0i32; 8];
    d[0] = c as i32;
    dfs(&mut d, 1, s - c * c, c, c.rem_euclid(2), visit);
}

/// Visits every E8 vector of the given even norm, in canonical order.
pub fn for_each_norm(
    norm: i64,
    mut visit: impl FnMut(&E8Vector),
) -> Result<(), LatticeError> {
    check_target(norm)?;
    if norm == 0 {
        visit(&E8Vector::zero());
        return Ok(());
    }
    let s = 4 * norm;
    let mut d = [0i32; 8];
    for c in first_coordinates(s) {
        d[0] = c as i32;
        dfs(&mut d, 1, s - c * c, c, c.rem_euclid(2), &mut |arr| {
            visit(&E8Vector::from_doubled_unchecked(*arr))
        });
    }
    Ok(())
}

/// All E8 vectors of the given even norm, in canonical order.
pub fn enumerate_norm(norm: i64) -> Result<Vec<E8Vector>, LatticeError> {
    let mut out = Vec::new();
    for_each_norm(norm, |v| out.push(*v))?;
    Ok(out)
}

/// The number of E8 vectors of the given even norm.
///
/// Counts in parallel by partitioning on the first coordinate; per-branch
/// counts are summed, so the result does not depend on thread count.
pub fn count_norm(norm: i64) -> Result<u64, LatticeError> {
    check_target(norm)?;
    if norm == 0 {
        return Ok(1);
    }
    let s = 4 * norm;
    let total = first_coordinates(s)
        .into_par_iter()
        .map(|c| {
            let mut d = [0i32; 8];
            d[0] = c as i32;
            let mut count = 0u64;
            dfs(&mut d, 1, s - c * c, c, c.rem_euclid(2), &mut |_| {
                count += 1
            });
            count
        })
        .sum();
    Ok(total)
}

/// The 240 roots (norm 2), cached, in canonical order.
pub fn roots() -> &'static [E8Vector] {
    static ROOTS: OnceLock<Vec<E8Vector>> = OnceLock::new();
    ROOTS.get_or_init(|| enumerate_norm(2).expect("norm 2 is a valid target"))
}

/// The 2160 vectors of norm 4, cached, in canonical order.
pub fn norm4_vectors() -> &'static [E8Vector] {
    static NORM4: OnceLock<Vec<E8Vector>> = OnceLock::new();
    NORM4.get_or_init(|| enumerate_norm(4).expect("norm 4 is a valid target"))
}

/// The eight norm-4 coordinate shapes, up to permutation and global sign,
/// keyed by doubled coordinates sorted descending after sign
/// normalization. Expected counts follow from permutation and sign
/// combinatorics.
const NORM4_SHAPES: [(&str, [i32; 8], u64); 8] = [
    ("(2, 0^7)", [4, 0, 0, 0, 0, 0, 0, 0], 16),
    ("(1^4, 0^4)", [2, 2, 2, 2, 0, 0, 0, 0], 140),
    ("(1^3, -1, 0^4)", [2, 2, 2, 0, 0, 0, 0, -2], 560),
    ("(1^2, -1^2, 0^4)", [2, 2, 0, 0, 0, 0, -2, -2], 420),
    ("(3/2, 1/2^6, -1/2)", [3, 1, 1, 1, 1, 1, 1, -1], 112),
    ("(3/2, 1/2^4, -1/2^3)", [3, 1, 1, 1, 1, -1, -1, -1], 560),
    ("(3/2, 1/2^2, -1/2^5)", [3, 1, 1, -1, -1, -1, -1, -1], 336),
    ("(3/2, -1/2^7)", [3, -1, -1, -1, -1, -1, -1, -1], 16),
];

/// The shape key of a vector: coordinates sorted descending, taken from
/// whichever of v, -v sorts lexicographically larger.
fn shape_key(v: &E8Vector) -> [i32; 8] {
    let mut a = v.doubled();
    a.sort_unstable_by(|x, y| y.cmp(x));
    let mut b = v.neg().doubled();
    b.sort_unstable_by(|x, y| y.cmp(x));
    a.max(b)
}

/// Verifies the two structure facts about norm-4 vectors: each is, up to
/// permutation and global sign, one of the eight known shapes (with the
/// expected census), and each is a sum of two roots (witness found by
/// exhaustive search over the root pairing).
pub fn norm4_shapes_check() -> CheckReport {
    const NAME: &str = "norm4_shapes";
    let mut counts = [0u64; 8];
    for v in norm4_vectors() {
        let key = shape_key(v);
        let Some(idx) = NORM4_SHAPES.iter().position(|(_, k, _)| *k == key) else {
            return CheckReport::fail(NAME, 4, 4, "one of the 8 shapes", v);
        };
        counts[idx] += 1;
        // v = r + (v - r) with both roots forces dot(v, r) = 2.
        let decomposes = roots()
            .iter()
            .any(|r| v.dot(r) == 2 && v.sub(r).norm() == 2);
        if !decomposes {
            return CheckReport::fail(NAME, 4, 4, "a sum of two roots", v);
        }
    }
    for (idx, (label, _, expected)) in NORM4_SHAPES.iter().enumerate() {
        if counts[idx] != *expected {
            return CheckReport::fail(NAME, 4, 4, format!("{expected} of {label}"), counts[idx]);
        }
    }
    let census: Vec<String> = NORM4_SHAPES
        .iter()
        .zip(counts.iter())
        .map(|((label, _, _), c)| format!("{label}: {c}"))
        .collect();
    CheckReport::pass(NAME, 4).with_notes(format!(
        "2160 vectors, all sums of two roots; census {}",
        census.join(", ")
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qseries::divisor_sum;
    use num_traits::ToPrimitive;

    #[test]
    fn rejects_bad_targets() {
        assert!(enumerate_norm(-2).is_err());
        assert!(enumerate_norm(3).is_err());
        assert!(count_norm(7).is_err());
    }

    #[test]
    fn norm_zero_is_the_origin() {
        assert_eq!(enumerate_norm(0).unwrap(), vec![E8Vector::zero()]);
        assert_eq!(count_norm(0).unwrap(), 1);
    }

    #[test]
    fn root_census() {
        let r = roots();
        assert_eq!(r.len(), 240);
        let integer = r.iter().filter(|v| v.doubled()[0] % 2 == 0).count();
        assert_eq!(integer, 112);
        assert_eq!(r.len() - integer, 128);
        assert!(r.iter().all(|v| v.norm() == 2));
    }

    #[test]
    fn norm4_census() {
        assert_eq!(norm4_vectors().len(), 2160);
        assert_eq!(count_norm(4).unwrap(), 2160);
    }

    #[test]
    fn shape_check_passes() {
        let report = norm4_shapes_check();
        assert!(report.passed(), "{report}");
        let notes = report.notes.unwrap();
        assert!(notes.contains("(1^2, -1^2, 0^4): 420"), "{notes}");
        assert!(notes.contains("(3/2, 1/2^6, -1/2): 112"), "{notes}");
    }

    #[test]
    fn shape_keys_are_sign_normalized() {
        let v = E8Vector::from_integers([0, 0, 0, 0, -1, -1, -1, -1]).unwrap();
        assert_eq!(shape_key(&v), [2, 2, 2, 2, 0, 0, 0, 0]);
        let w = E8Vector::from_doubled([1, 1, 1, 1, 1, 1, 1, -3]).unwrap();
        assert_eq!(shape_key(&w), [3, -1, -1, -1, -1, -1, -1, -1]);
    }

    #[test]
    fn enumeration_is_sorted_and_duplicate_free() {
        for norm in [2i64, 4, 6, 8, 10] {
            let v = enumerate_norm(norm).unwrap();
            assert!(v.windows(2).all(|w| w[0] < w[1]), "norm {norm}");
            assert!(v.iter().all(|x| x.norm() == norm), "norm {norm}");
        }
    }

    #[test]
    fn counts_follow_the_theta_coefficients() {
        // Number of vectors of norm 2n is 240 sigma_3(n).
        for n in 1..=8u64 {
            let expected = 240 * divisor_sum(3, n).to_u64().unwrap();
            assert_eq!(count_norm(2 * n as i64).unwrap(), expected, "n = {n}");
        }
    }

    #[test]
    fn count_agrees_with_enumeration() {
        for norm in [2i64, 4, 6, 8, 12] {
            assert_eq!(
                count_norm(norm).unwrap() as usize,
                enumerate_norm(norm).unwrap().len()
            );
        }
    }

    #[test]
    fn closed_under_negation() {
        for v in enumerate_norm(6).unwrap() {
            assert_eq!(v.neg().norm(), 6);
            assert!(enumerate_norm(6).unwrap().binary_search(&v.neg()).is_ok());
        }
    }
}

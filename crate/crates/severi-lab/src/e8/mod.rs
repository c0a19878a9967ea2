//! The E8 lattice by brute force: vectors, reflections, orbits, the 256
//! classes of E8/2E8, and the pair-decomposition counts used by the telltale
//! formulas.
//!
//! Vectors are stored in *doubled coordinates* d_i = 2 v_i, so the
//! half-integer vectors of E8 stay integral. In doubled form, membership
//! means: all d_i share one parity, sum d_i = 0 mod 4, and sum d_i^2 = 0
//! mod 8 (the norm (sum d_i^2)/4 is even; E8 is an even lattice).
//!
//! Everything here uses the positive-definite convention. The negative
//! definite form E8(-1) that intersection theory produces is obtained by
//! negating norms at the boundary; operations that mirror a formula stated
//! in E8(-1) say so in their docs.

mod classes;
mod enumerate;
mod pairs;

pub use classes::{
    basis, class_bits, class_census, class_id, classify_classes, coordinates,
    count_norm_in_class, kind_of_bits, ClassId, ClassKind,
};
pub use enumerate::{
    count_norm, enumerate_norm, for_each_norm, norm4_shapes_check, norm4_vectors, roots,
};
pub use pairs::{
    count_bisection_classes, count_pair_decompositions, decomposition_witness, min_height_delta,
    BisectionKind, ClassFilter,
};

use std::fmt;

/// Errors from lattice construction and queries.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LatticeError {
    /// The coordinate array violates an E8 membership condition.
    #[error("not an E8 vector ({reason}): doubled coordinates {coords:?}")]
    InvalidVector {
        coords: [i32; 8],
        reason: &'static str,
    },
    /// Enumeration targets must be even (E8 is an even lattice).
    #[error("norm {0} is not an even nonnegative integer; E8 norms are")]
    BadNorm(i64),
    /// Reflection mirrors must be roots (norm 2).
    #[error("reflection mirror must have norm 2, got norm {0}")]
    NotARoot(i64),
    /// norm(u) != 2m mod 4 leaves no room for a decomposition.
    #[error("no decomposition: norm {norm} and 2m = {two_m} differ mod 4")]
    ParityMismatch { norm: i64, two_m: u64 },
    /// The decomposition target is unreachable (2-divisible u needs 4 | m).
    #[error("no decomposition of the given vector exists for m = {m}")]
    NoDecomposition { m: u64 },
    /// Bisection-class exponent 2n + 2 - g must be nonnegative.
    #[error("no bisection classes: exponent 2n + 2 - g = {exponent} is negative")]
    NegativeExponent { exponent: i64 },
    /// Weierstrass data requires even genus.
    #[error("Weierstrass bundles require even genus, got g = {0}")]
    OddWeierstrassGenus(u64),
}

/// An E8 lattice vector in doubled coordinates (d_i = 2 v_i).
///
/// The derived ordering is lexicographic on the doubled coordinates; it is
/// the canonical enumeration order used throughout.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct E8Vector {
    d: [i32; 8],
}

impl E8Vector {
    /// Validates the three doubled-coordinate membership conditions.
    pub fn from_doubled(d: [i32; 8]) -> Result<Self, LatticeError> {
        let parity = d[0] & 1;
        if d.iter().any(|&x| (x & 1) != parity) {
            return Err(LatticeError::InvalidVector {
                coords: d,
                reason: "mixed integer and half-integer coordinates",
            });
        }
        let sum: i64 = d.iter().map(|&x| x as i64).sum();
        if sum.rem_euclid(4) != 0 {
            return Err(LatticeError::InvalidVector {
                coords: d,
                reason: "coordinate sum not divisible by 4",
            });
        }
        let sq: i64 = d.iter().map(|&x| (x as i64) * (x as i64)).sum();
        if sq % 8 != 0 {
            return Err(LatticeError::InvalidVector {
                coords: d,
                reason: "odd norm",
            });
        }
        Ok(E8Vector { d })
    }

    /// Wraps coordinates the caller has already proven valid (enumeration
    /// output, integer combinations of lattice vectors).
    pub(crate) fn from_doubled_unchecked(d: [i32; 8]) -> Self {
        debug_assert!(E8Vector::from_doubled(d).is_ok());
        E8Vector { d }
    }

    /// An integer-coordinate vector (doubles each entry).
    pub fn from_integers(v: [i32; 8]) -> Result<Self, LatticeError> {
        Self::from_doubled(v.map(|x| x * 2))
    }

    /// The zero vector.
    pub fn zero() -> Self {
        E8Vector { d: [0; 8] }
    }

    /// The doubled coordinates d_i = 2 v_i.
    pub fn doubled(&self) -> [i32; 8] {
        self.d
    }

    /// norm(v) = sum v_i^2, always an even nonnegative integer.
    pub fn norm(&self) -> i64 {
        let sq: i64 = self.d.iter().map(|&x| (x as i64) * (x as i64)).sum();
        debug_assert_eq!(sq % 4, 0);
        sq / 4
    }

    /// The Euclidean pairing sum v_i w_i; always an integer on E8.
    pub fn dot(&self, other: &E8Vector) -> i64 {
        let s: i64 = self
            .d
            .iter()
            .zip(other.d.iter())
            .map(|(&a, &b)| (a as i64) * (b as i64))
            .sum();
        assert_eq!(s % 4, 0, "pairing of E8 vectors is integral");
        s / 4
    }

    /// Componentwise sum (E8 is closed under addition).
    pub fn add(&self, other: &E8Vector) -> E8Vector {
        let d = std::array::from_fn(|i| self.d[i] + other.d[i]);
        E8Vector::from_doubled_unchecked(d)
    }

    /// Componentwise difference.
    pub fn sub(&self, other: &E8Vector) -> E8Vector {
        let d = std::array::from_fn(|i| self.d[i] - other.d[i]);
        E8Vector::from_doubled_unchecked(d)
    }

    /// Negation.
    pub fn neg(&self) -> E8Vector {
        E8Vector {
            d: self.d.map(|x| -x),
        }
    }

    /// Integer scalar multiple.
    pub fn scale(&self, k: i32) -> E8Vector {
        E8Vector::from_doubled_unchecked(self.d.map(|x| x * k))
    }

    /// True if v = 2u for some u in E8 (the class of v in E8/2E8 is zero).
    pub fn is_two_divisible(&self) -> bool {
        self.half().is_some()
    }

    /// v/2 when that is again a lattice vector.
    pub fn half(&self) -> Option<E8Vector> {
        if self.d.iter().any(|&x| x % 2 != 0) {
            return None;
        }
        E8Vector::from_doubled(self.d.map(|x| x / 2)).ok()
    }

    /// 2v.
    pub fn double(&self) -> E8Vector {
        self.scale(2)
    }

    /// Reflection in the hyperplane orthogonal to a root r:
    /// v - (v.r) r, using norm(r) = 2. An isometry fixing r-perp.
    pub fn reflect(&self, root: &E8Vector) -> Result<E8Vector, LatticeError> {
        if root.norm() != 2 {
            return Err(LatticeError::NotARoot(root.norm()));
        }
        let c = self.dot(root) as i32;
        let d = std::array::from_fn(|i| self.d[i] - c * root.d[i]);
        Ok(E8Vector::from_doubled_unchecked(d))
    }
}

impl fmt::Display for E8Vector {
    /// Prints true coordinates: integers when the vector is integral,
    /// halves like 1/2 otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let integral = self.d[0] % 2 == 0;
        write!(f, "(")?;
        for (i, &x) in self.d.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            if integral {
                write!(f, "{}", x / 2)?;
            } else {
                write!(f, "{x}/2")?;
            }
        }
        write!(f, ")")
    }
}

/// Breadth-first closure of a seed vector under reflections in the given
/// roots. Returns the orbit sorted in canonical (lexicographic) order.
pub fn orbit(seed: &E8Vector, generators: &[E8Vector]) -> Result<Vec<E8Vector>, LatticeError> {
    for r in generators {
        if r.norm() != 2 {
            return Err(LatticeError::NotARoot(r.norm()));
        }
    }
    let mut seen = std::collections::HashSet::new();
    seen.insert(*seed);
    let mut frontier = vec![*seed];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for v in &frontier {
            for r in generators {
                let w = v.reflect(r)?;
                if seen.insert(w) {
                    next.push(w);
                }
            }
        }
        frontier = next;
    }
    let mut out: Vec<E8Vector> = seen.into_iter().collect();
    out.sort_unstable();
    Ok(out)
}

/// Floor of the square root, in pure integer arithmetic.
pub(crate) fn isqrt(n: i64) -> i64 {
    assert!(n >= 0);
    if n < 2 {
        return n;
    }
    let mut x = n;
    let mut y = (x + 1) / 2;
    while y < x {
        x = y;
        y = (x + n / x) / 2;
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: [i32; 8]) -> E8Vector {
        E8Vector::from_integers(v).unwrap()
    }

    #[test]
    fn membership_conditions() {
        assert!(E8Vector::from_doubled([2, 2, 0, 0, 0, 0, 0, 0]).is_ok());
        assert!(E8Vector::from_doubled([1, 1, 1, 1, 1, 1, 1, 1]).is_ok());
        assert!(E8Vector::from_doubled([-1; 8]).is_ok());
        // Mixed parity.
        assert!(E8Vector::from_doubled([2, 1, 1, 1, 1, 1, 1, 1]).is_err());
        // Sum 2 mod 4 (a single integer unit vector is not in E8).
        assert!(E8Vector::from_doubled([2, 0, 0, 0, 0, 0, 0, 0]).is_err());
        // Odd true-coordinate sum of halves (3 and 5 respectively).
        assert!(E8Vector::from_doubled([1, 1, 1, 1, 1, 1, 1, -1]).is_err());
        assert!(E8Vector::from_doubled([3, 1, 1, 1, 1, 1, 1, 1]).is_err());
    }

    #[test]
    fn norms_and_dots() {
        assert_eq!(ints([1, 1, 0, 0, 0, 0, 0, 0]).norm(), 2);
        assert_eq!(E8Vector::zero().norm(), 0);
        assert_eq!(E8Vector::from_doubled([1; 8]).unwrap().norm(), 2);
        assert_eq!(ints([2, 0, 0, 0, 0, 0, 0, 0]).norm(), 4);
        let a = ints([1, 1, 0, 0, 0, 0, 0, 0]);
        let b = ints([1, -1, 0, 0, 0, 0, 0, 0]);
        assert_eq!(a.dot(&b), 0);
        assert_eq!(a.dot(&a), 2);
        let h = E8Vector::from_doubled([1; 8]).unwrap();
        assert_eq!(a.dot(&h), 1);
    }

    #[test]
    fn reflection_formula() {
        let r = ints([1, -1, 0, 0, 0, 0, 0, 0]);
        let v = ints([2, 0, 0, 0, 0, 0, 0, 0]);
        assert_eq!(v.reflect(&r).unwrap(), ints([0, 2, 0, 0, 0, 0, 0, 0]));
        assert_eq!(r.reflect(&r).unwrap(), r.neg());
        let w = ints([1, 1, 0, 0, 0, 0, 0, 0]);
        assert_eq!(w.reflect(&r).unwrap(), w, "fixed hyperplane");
        let not_root = ints([2, 0, 0, 0, 0, 0, 0, 0]);
        assert!(v.reflect(&not_root).is_err());
    }

    #[test]
    fn two_divisibility() {
        let v = ints([2, 2, 0, 0, 0, 0, 0, 0]);
        assert!(v.is_two_divisible());
        assert_eq!(v.half().unwrap(), ints([1, 1, 0, 0, 0, 0, 0, 0]));
        assert!(!ints([1, 1, 0, 0, 0, 0, 0, 0]).is_two_divisible());
        // All doubled coordinates even, but the half is not in E8.
        assert!(!ints([1, 1, 1, 1, 0, 0, 0, 0]).is_two_divisible());
        assert!(E8Vector::zero().is_two_divisible());
    }

    #[test]
    fn display_shows_true_coordinates() {
        assert_eq!(
            ints([1, -1, 0, 0, 0, 0, 0, 0]).to_string(),
            "(1, -1, 0, 0, 0, 0, 0, 0)"
        );
        assert_eq!(
            E8Vector::from_doubled([1; 8]).unwrap().to_string(),
            "(1/2, 1/2, 1/2, 1/2, 1/2, 1/2, 1/2, 1/2)"
        );
    }

    #[test]
    fn isqrt_is_exact() {
        for n in 0..2000i64 {
            let s = isqrt(n);
            assert!(s * s <= n && (s + 1) * (s + 1) > n, "n = {n}");
        }
    }

    #[test]
    fn orbit_of_zero_is_trivial() {
        let roots: Vec<E8Vector> = enumerate_norm(2).unwrap();
        let o = orbit(&E8Vector::zero(), &roots).unwrap();
        assert_eq!(o, vec![E8Vector::zero()]);
    }
}

//! The 256 classes of E8/2E8.
//!
//! A class is identified by the mod-2 coordinate vector of its members in a
//! fixed basis. The nonzero classes split into 120 containing roots (all
//! their vectors have norm = 2 mod 4) and 135 containing norm-4 vectors
//! (all norms = 0 mod 4); negation acts trivially on E8/2E8, which is why
//! the counts are half of 240 and 2160/16 respectively.

use super::{count_norm, for_each_norm, norm4_vectors, roots, E8Vector, LatticeError};
use rayon::prelude::*;

/// A fixed basis of E8 in doubled coordinates: the simple-root chain
/// e_i - e_{i+1} (i = 1..6), then e_6 + e_7, then the half vector
/// -(e_1 + ... + e_8)/2. Its Gram determinant is 1.
const BASIS_DOUBLED: [[i32; 8]; 8] = [
    [2, -2, 0, 0, 0, 0, 0, 0],
    [0, 2, -2, 0, 0, 0, 0, 0],
    [0, 0, 2, -2, 0, 0, 0, 0],
    [0, 0, 0, 2, -2, 0, 0, 0],
    [0, 0, 0, 0, 2, -2, 0, 0],
    [0, 0, 0, 0, 0, 2, -2, 0],
    [0, 0, 0, 0, 0, 2, 2, 0],
    [-1, -1, -1, -1, -1, -1, -1, -1],
];

/// Rows T_i with coordinates(v)_i = -(T_i . d)/4 for doubled coordinates d.
/// This is the inverse of the doubled basis matrix, cleared of the common
/// denominator: the basis matrix has determinant -256 and adjugate 64 T.
const COORD_ROWS: [[i64; 8]; 8] = [
    [-2, 0, 0, 0, 0, 0, 0, 2],
    [-2, -2, 0, 0, 0, 0, 0, 4],
    [-2, -2, -2, 0, 0, 0, 0, 6],
    [-2, -2, -2, -2, 0, 0, 0, 8],
    [-2, -2, -2, -2, -2, 0, 0, 10],
    [-1, -1, -1, -1, -1, -1, 1, 5],
    [-1, -1, -1, -1, -1, -1, -1, 7],
    [0, 0, 0, 0, 0, 0, 0, 4],
];

/// The fixed basis as vectors.
pub fn basis() -> [E8Vector; 8] {
    BASIS_DOUBLED.map(|d| E8Vector::from_doubled(d).expect("basis vectors lie in E8"))
}

/// Integer coordinates of `v` in the fixed basis.
pub fn coordinates(v: &E8Vector) -> [i64; 8] {
    let d = v.doubled();
    let mut c = [0i64; 8];
    for i in 0..8 {
        let t: i64 = COORD_ROWS[i]
            .iter()
            .zip(d.iter())
            .map(|(&a, &b)| a * (b as i64))
            .sum();
        debug_assert_eq!(t % 4, 0);
        c[i] = -t / 4;
    }
    c
}

/// The class of `v` in E8/2E8 as a bit pattern: bit i is coordinate i
/// mod 2. Classes are equal exactly when the bit patterns are.
pub fn class_bits(v: &E8Vector) -> u8 {
    let c = coordinates(v);
    let mut bits = 0u8;
    for (i, x) in c.iter().enumerate() {
        bits |= ((x.rem_euclid(2)) as u8) << i;
    }
    bits
}

/// Same computation directly from doubled coordinates, for the hot
/// enumeration paths.
fn class_bits_of_doubled(d: &[i32; 8]) -> u8 {
    let mut bits = 0u8;
    for (i, row) in COORD_ROWS.iter().enumerate() {
        let t: i64 = row
            .iter()
            .zip(d.iter())
            .map(|(&a, &b)| a * (b as i64))
            .sum();
        bits |= (((t / 4).rem_euclid(2)) as u8) << i;
    }
    bits
}

/// What kind of vectors a class contains.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClassKind {
    /// The class of 2E8 itself: norms = 0 mod 4, contains 0.
    Zero,
    /// Contains roots; all norms = 2 mod 4.
    RootType,
    /// Contains norm-4 vectors; all norms = 0 mod 4.
    Norm4Type,
}

/// A class of E8/2E8: its coordinate bit pattern plus its kind.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ClassId {
    bits: u8,
    kind: ClassKind,
}

impl ClassId {
    pub fn bits(&self) -> u8 {
        self.bits
    }

    pub fn kind(&self) -> ClassKind {
        self.kind
    }
}

/// The distinguished representative sum of basis vectors with set bits.
fn bit_representative(bits: u8) -> E8Vector {
    let mut v = E8Vector::zero();
    for (i, b) in basis().iter().enumerate() {
        if bits & (1 << i) != 0 {
            v = v.add(b);
        }
    }
    v
}

/// The kind of the class with the given bit pattern, decided by the norm
/// of its distinguished representative mod 4.
pub fn kind_of_bits(bits: u8) -> ClassKind {
    if bits == 0 {
        ClassKind::Zero
    } else if bit_representative(bits).norm() % 4 == 2 {
        ClassKind::RootType
    } else {
        ClassKind::Norm4Type
    }
}

/// The class of a vector.
pub fn class_id(v: &E8Vector) -> ClassId {
    let bits = class_bits(v);
    ClassId {
        bits,
        kind: kind_of_bits(bits),
    }
}

/// Partitions all 256 classes by kind and returns
/// (zero, root-type, norm4-type) counts. Verifies along the way that the
/// roots land in exactly the root-type classes (2 roots each, a pair +-v)
/// and the norm-4 vectors in exactly the norm4-type classes (16 each).
pub fn classify_classes() -> Result<(u64, u64, u64), LatticeError> {
    let mut kind_count = [0u64; 3];
    let mut root_hits = [0u32; 256];
    let mut norm4_hits = [0u32; 256];
    for bits in 0u16..256 {
        match kind_of_bits(bits as u8) {
            ClassKind::Zero => kind_count[0] += 1,
            ClassKind::RootType => kind_count[1] += 1,
            ClassKind::Norm4Type => kind_count[2] += 1,
        }
    }
    for r in roots() {
        root_hits[class_bits(r) as usize] += 1;
    }
    for v in norm4_vectors() {
        norm4_hits[class_bits(v) as usize] += 1;
    }
    for bits in 0usize..256 {
        let expected = match kind_of_bits(bits as u8) {
            ClassKind::Zero => (0, 0),
            ClassKind::RootType => (2, 0),
            ClassKind::Norm4Type => (0, 16),
        };
        if (root_hits[bits], norm4_hits[bits]) != expected {
            return Err(LatticeError::InvalidVector {
                coords: bit_representative(bits as u8).doubled(),
                reason: "class census does not match its kind",
            });
        }
    }
    Ok((kind_count[0], kind_count[1], kind_count[2]))
}

/// Counts vectors of the given norm in each of the 256 classes,
/// indexed by bit pattern. Parallel over the first coordinate; the merge
/// is an elementwise sum, so the histogram is thread-count independent.
pub fn class_census(norm: i64) -> Result<[u64; 256], LatticeError> {
    // Reuse the sequential path for trivial targets.
    if norm <= 0 {
        let mut hist = [0u64; 256];
        for_each_norm(norm, |v| hist[class_bits(v) as usize] += 1)?;
        return Ok(hist);
    }
    count_norm(norm)?; // validate the target once
    let s = 4 * norm;
    let hist = super::enumerate::first_coordinates_for_census(s)
        .into_par_iter()
        .map(|c| {
            let mut hist = [0u64; 256];
            super::enumerate::census_branch(s, c, &mut |d| {
                hist[class_bits_of_doubled(d) as usize] += 1
            });
            hist
        })
        .reduce(
            || [0u64; 256],
            |mut a, b| {
                for (x, y) in a.iter_mut().zip(b.iter()) {
                    *x += y;
                }
                a
            },
        );
    Ok(hist)
}

/// The number of vectors of the given norm in the given class.
pub fn count_norm_in_class(norm: i64, class: &ClassId) -> Result<u64, LatticeError> {
    // Parity obstruction: root-type classes hold norms = 2 mod 4 only,
    // the others norms = 0 mod 4 only.
    let residue = norm.rem_euclid(4);
    let possible = match class.kind() {
        ClassKind::RootType => residue == 2,
        ClassKind::Zero | ClassKind::Norm4Type => residue == 0,
    };
    if norm >= 0 && norm % 2 == 0 && !possible {
        return Ok(0);
    }
    if class.bits() == 0 {
        // Vectors 2u of norm 4 u^2: count vectors of norm/4, which must
        // itself be an even norm, so the class is empty unless 8 | norm.
        if norm % 8 != 0 {
            return Ok(0);
        }
        return count_norm(norm / 4);
    }
    Ok(class_census(norm)?[class.bits() as usize])
}

//! The 256 classes of E8/2E8: the 1 + 120 + 135 partition, reflection
//! orbits, and the uniform distribution of each norm sphere over classes.
//!
//! Run with: cargo run --release --example lattice_classes

use severi_lab::e8::{
    class_census, class_id, classify_classes, count_norm_in_class, kind_of_bits, norm4_vectors,
    orbit, roots, ClassKind,
};

fn main() {
    // Reduction mod 2E8 in a fixed integral basis packs each vector into
    // 8 bits. The 255 nonzero classes split by the norm (mod 4) of their
    // minimal representatives: 120 root-type classes (2 roots each) and
    // 135 norm4-type classes (16 norm-4 vectors each).
    let (zero, root_type, norm4_type) = classify_classes().unwrap();
    println!("classes: {zero} zero + {root_type} root-type + {norm4_type} norm4-type");
    assert_eq!((zero, root_type, norm4_type), (1, 120, 135));

    // Reflections in the 240 roots act transitively on each sphere.
    let root_orbit = orbit(&roots()[0], roots()).unwrap();
    let norm4_orbit = orbit(&norm4_vectors()[0], roots()).unwrap();
    println!(
        "reflection orbits: root -> {} vectors, norm-4 -> {} vectors",
        root_orbit.len(),
        norm4_orbit.len()
    );
    assert_eq!((root_orbit.len(), norm4_orbit.len()), (240, 2160));

    // A class is identified by its bit pattern; opposite vectors share a
    // class, and the class kind alternates with norm mod 4.
    let r = roots()[0];
    assert_eq!(class_id(&r), class_id(&r.neg()));
    assert_eq!(class_id(&r).kind(), ClassKind::RootType);
    assert_eq!(class_id(&norm4_vectors()[0]).kind(), ClassKind::Norm4Type);

    // On every norm sphere the census is uniform within each kind: for
    // norm = 2 mod 4 the root-type classes share the count and the
    // norm4-type classes are empty, and vice versa. The query form
    // count_norm_in_class answers one (norm, class) cell directly.
    for norm in [2i64, 4, 6, 8, 10, 12] {
        let census = class_census(norm).unwrap();
        let mut per_kind = [0u64; 2];
        for bits in 0..=255u8 {
            match kind_of_bits(bits) {
                ClassKind::Zero => {}
                ClassKind::RootType => per_kind[0] = per_kind[0].max(census[bits as usize]),
                ClassKind::Norm4Type => per_kind[1] = per_kind[1].max(census[bits as usize]),
            }
        }
        println!(
            "norm {norm:>2}: root-type classes hold {:>4} each, norm4-type {:>4} each",
            per_kind[0], per_kind[1]
        );
    }

    let per_root_class = count_norm_in_class(6, &class_id(&roots()[0])).unwrap();
    assert_eq!(per_root_class, 56); // 6720 vectors / 120 classes
    let per_norm4_class = count_norm_in_class(4, &class_id(&norm4_vectors()[0])).unwrap();
    assert_eq!(per_norm4_class, 16); // 2160 vectors / 135 classes
    let obstructed = count_norm_in_class(2, &class_id(&norm4_vectors()[0])).unwrap();
    assert_eq!(obstructed, 0); // parity obstruction
    println!("\ncount_norm_in_class: (6, root-type) = {per_root_class}, (4, norm4-type) = {per_norm4_class}, (2, norm4-type) = {obstructed}");
}

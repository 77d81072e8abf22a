//! Nucleus and center dimensions over small finite fields, counted by brute
//! force from the associator and commutator alone (no linear algebra), and
//! compared with the nullspace computation.

mod common;

use altring::algebra::StructureConstants;
use altring::analysis::{center, nucleus};

/// `(|N|, |C|)` by testing every element against all basis pairs.
fn count_nucleus_and_center(a: &StructureConstants) -> (u128, u128) {
    let basis: Vec<_> = (0..a.dim()).map(|i| a.basis(i)).collect();
    let (mut nuclear, mut central) = (0, 0);
    for idx in 0..a.cardinality().unwrap() {
        let n = a.element_from_index(idx).unwrap();
        let in_nucleus = basis.iter().all(|x| {
            basis.iter().all(|y| {
                a.associator(&n, x, y).unwrap().is_zero()
                    && a.associator(x, &n, y).unwrap().is_zero()
                    && a.associator(x, y, &n).unwrap().is_zero()
            })
        });
        if in_nucleus {
            nuclear += 1;
            if basis.iter().all(|x| a.commutator(&n, x).unwrap().is_zero()) {
                central += 1;
            }
        }
    }
    (nuclear, central)
}

fn log(q: u128, mut v: u128) -> usize {
    let mut k = 0;
    while v > 1 {
        assert_eq!(v % q, 0, "subgroup order must be a power of q");
        v /= q;
        k += 1;
    }
    k
}

#[test]
fn brute_force_agrees_with_nullspace() {
    // Frozen after the first verified run: split octonions are central simple.
    let expected = [
        ("zorn_gf2", 2, (1, 1)),
        ("zorn_gf3", 3, (1, 1)),
        ("octonion_gf3", 3, (1, 1)),
        ("octonion_gf2", 2, (8, 8)),
    ];
    for (name, q, dims) in expected {
        let a = common::load(name);
        let (n, c) = count_nucleus_and_center(&a);
        let counted = (log(q, n), log(q, c));
        assert_eq!(counted, dims, "{name}: brute-force count");
        assert_eq!(
            (nucleus(&a).unwrap().dim(), center(&a).unwrap().dim()),
            dims,
            "{name}: nullspace"
        );
    }
}

//! Exhaustive structural checks of the three arrangement families against
//! closed-form counts and the monoid and lattice axioms.

use num_bigint::BigInt;
use polytope_algebra::{Arrangement, ArrangementKind};

fn kinds(d: usize) -> [ArrangementKind; 3] {
    [
        ArrangementKind::BraidA(d),
        ArrangementKind::TypeB(d),
        ArrangementKind::Coordinate(d),
    ]
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

#[test]
fn face_flat_and_chamber_counts() {
    // Ordered set partitions, A080253, and 3^d faces.
    let fubini = [1, 1, 3, 13, 75, 541];
    let b_faces = [1, 3, 17, 147, 1697];
    // Bell numbers and Dowling numbers of the sign group.
    let bell = [1, 1, 2, 5, 15, 52];
    let dowling = [1, 2, 6, 24, 116];
    for d in 1..=5 {
        let a = Arrangement::new(ArrangementKind::BraidA(d)).unwrap();
        assert_eq!(
            (a.num_faces(), a.num_flats(), a.num_chambers()),
            (fubini[d], bell[d], factorial(d)),
            "A{d}"
        );
        let c = Arrangement::new(ArrangementKind::Coordinate(d)).unwrap();
        assert_eq!(
            (c.num_faces(), c.num_flats(), c.num_chambers()),
            (3usize.pow(d as u32), 1 << d, 1 << d)
        );
    }
    for d in 1..=4 {
        let b = Arrangement::new(ArrangementKind::TypeB(d)).unwrap();
        assert_eq!(
            (b.num_faces(), b.num_flats(), b.num_chambers()),
            (b_faces[d], dowling[d], factorial(d) << d),
            "B{d}"
        );
    }
}

#[test]
fn zaslavsky_chamber_count() {
    for d in 1..=4 {
        for kind in kinds(d) {
            let arr = Arrangement::new(kind).unwrap();
            let chi = kind.characteristic_polynomial(None).unwrap();
            let at_minus_one: BigInt = chi
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 0 { c.clone() } else { -c.clone() })
                .sum();
            let abs = if at_minus_one < BigInt::from(0) {
                -at_minus_one
            } else {
                at_minus_one
            };
            assert_eq!(abs, BigInt::from(arr.num_chambers()), "{kind:?}");
        }
    }
}

#[test]
fn face_monoid_axioms() {
    for d in 1..=3 {
        for kind in kinds(d) {
            let arr = Arrangement::new(kind).unwrap();
            let n = arr.num_faces();
            let o = arr.central();
            for f in 0..n {
                assert_eq!(arr.product(f, f), f);
                assert_eq!(arr.product(o, f), f);
                assert_eq!(arr.product(f, o), f);
                for g in 0..n {
                    let fg = arr.product(f, g);
                    assert_eq!(arr.product(fg, f), fg, "left regular band");
                    assert!(arr.face_leq(f, fg));
                    assert_eq!(
                        arr.support(fg),
                        arr.flat_join(arr.support(f), arr.support(g))
                    );
                    for h in 0..n {
                        assert_eq!(arr.product(fg, h), arr.product(f, arr.product(g, h)));
                    }
                }
            }
            for &c in arr.chambers() {
                assert!((0..n).all(|g| arr.product(c, g) == c));
            }
        }
    }
}

#[test]
fn face_dimensions_match_supports() {
    for d in 1..=4 {
        for kind in kinds(d) {
            let arr = Arrangement::new(kind).unwrap();
            for f in 0..arr.num_faces() {
                assert_eq!(arr.face_dim(f), arr.flat_dim(arr.support(f)));
                assert_eq!(&kind.face_of_point(arr.interior_point(f)), arr.face(f));
            }
        }
    }
}

#[test]
fn mobius_sums_vanish() {
    for d in 1..=4 {
        for kind in kinds(d) {
            let arr = Arrangement::new(kind).unwrap();
            let n = arr.num_flats();
            for x in 0..n {
                for y in 0..n {
                    if x != y && arr.flat_leq(x, y) {
                        let s: i64 = (0..n)
                            .filter(|&z| arr.flat_leq(x, z) && arr.flat_leq(z, y))
                            .map(|z| arr.mobius(x, z))
                            .sum();
                        assert_eq!(s, 0, "{kind:?}");
                    }
                }
            }
        }
    }
}

#[test]
fn encodings_round_trip_exhaustively() {
    for d in 1..=4 {
        for kind in kinds(d) {
            let arr = Arrangement::new(kind).unwrap();
            for f in 0..arr.num_faces() {
                assert_eq!(arr.parse_face_index(&arr.face_string(f)).unwrap(), f);
            }
            for x in 0..arr.num_flats() {
                assert_eq!(arr.parse_flat_index(&arr.flat_string(x)).unwrap(), x);
            }
        }
    }
}

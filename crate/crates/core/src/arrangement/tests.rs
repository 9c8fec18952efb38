use super::*;
use crate::rational::q;

fn comp(blocks: &[&[i32]]) -> Face {
    Face::Composition(blocks.iter().map(|b| b.to_vec()).collect())
}

#[test]
fn face_counts() {
    let a2 = ArrangementKind::BraidA(2).enumerate_faces(None);
    assert_eq!(
        a2,
        vec![comp(&[&[1, 2]]), comp(&[&[1], &[2]]), comp(&[&[2], &[1]])]
    );
    assert_eq!(ArrangementKind::BraidA(3).enumerate_faces(None).len(), 13);
    assert_eq!(ArrangementKind::BraidA(4).enumerate_faces(None).len(), 75);
    assert_eq!(
        ArrangementKind::Coordinate(2).enumerate_faces(None).len(),
        9
    );
    let b: Vec<usize> = (1..=3)
        .map(|d| ArrangementKind::TypeB(d).enumerate_faces(None).len())
        .collect();
    assert_eq!(b, vec![3, 17, 147]);
}

#[test]
fn flat_counts() {
    assert_eq!(ArrangementKind::BraidA(3).enumerate_flats().len(), 5);
    assert_eq!(ArrangementKind::TypeB(2).enumerate_flats().len(), 6);
    assert_eq!(ArrangementKind::TypeB(3).enumerate_flats().len(), 24);
    assert_eq!(ArrangementKind::Coordinate(3).enumerate_flats().len(), 8);
}

#[test]
fn refinement_chain_in_a8() {
    let k = ArrangementKind::BraidA(8);
    let bot = k.bottom();
    let x = k.parse_flat("{13,2568,4,7}").unwrap();
    let y = k.parse_flat("{1,28,3,4,56,7}").unwrap();
    assert!(k.leq(&bot, &x));
    assert!(k.leq(&x, &y));
    assert!(!k.leq(&y, &x));
    assert_eq!(k.mobius(&bot, &x).unwrap(), BigInt::from(-6));
}

#[test]
fn supports() {
    let k = ArrangementKind::BraidA(8);
    let f = k.parse_face("13|4|2568|7").unwrap();
    assert_eq!(k.flat_to_string(&k.support(&f)), "{13,2568,4,7}");
    let b = ArrangementKind::TypeB(7);
    let f = b
        .parse_face("6 7|-2 4 -5|0:1 -1 3 -3|2 -4 5|-6 -7")
        .unwrap();
    let x = b.support(&f);
    let want = b
        .parse_flat("{0:1 -1 3 -3,2 -4 5,-2 4 -5,6 7,-6 -7}")
        .unwrap();
    assert_eq!(x, want);
    assert_eq!(b.flat_dim(&x), 2);
    for k in [
        ArrangementKind::BraidA(3),
        ArrangementKind::TypeB(2),
        ArrangementKind::Coordinate(2),
    ] {
        assert_eq!(k.support(&k.central_face()), k.bottom());
    }
}

#[test]
fn products() {
    let k = ArrangementKind::BraidA(3);
    let f = comp(&[&[1, 3], &[2]]);
    let g = comp(&[&[2], &[1, 3]]);
    assert_eq!(k.tits_product(&f, &g), f);
    assert_eq!(k.tits_product_geometric(&f, &g), f);
    let c = ArrangementKind::Coordinate(2);
    let f = c.parse_face("0+").unwrap();
    let g = c.parse_face("--").unwrap();
    assert_eq!(c.face_to_string(&c.tits_product(&f, &g)), "-+");
    assert_eq!(c.face_to_string(&c.tits_product_geometric(&f, &g)), "-+");
}

#[test]
fn mobius_values() {
    let b = ArrangementKind::TypeB(3);
    let x = b.parse_flat("{0:3 -3,1,-1,2,-2}").unwrap();
    assert_eq!(b.mobius(&b.bottom(), &x).unwrap(), BigInt::from(3));
    let y = b.parse_flat("{1 2,-1 -2,3,-3}").unwrap();
    assert_eq!(b.mobius(&b.bottom(), &y).unwrap(), BigInt::from(3));
    assert!(b.mobius(&x, &y).is_err());
    assert_eq!(b.mobius(&x, &x).unwrap(), BigInt::from(1));
}

#[test]
fn characteristic_polynomials() {
    let a3 = ArrangementKind::BraidA(3);
    let p = a3.characteristic_polynomial(None).unwrap();
    assert_eq!(p, [0, 2, -3, 1].map(BigInt::from).to_vec());
    let c1 = ArrangementKind::Coordinate(1);
    assert_eq!(
        c1.characteristic_polynomial(None).unwrap(),
        [-1, 1].map(BigInt::from).to_vec()
    );
    let t = a3.top();
    assert_eq!(
        a3.characteristic_polynomial(Some(&t)).unwrap(),
        [0, 2, -3, 1].map(BigInt::from).to_vec()
    );
    let bot = a3.bottom();
    assert_eq!(
        a3.characteristic_polynomial(Some(&bot)).unwrap(),
        [0, 1].map(BigInt::from).to_vec()
    );
}

#[test]
fn interior_points() {
    let a3 = ArrangementKind::BraidA(3);
    assert_eq!(
        a3.interior_point(&comp(&[&[1, 3], &[2]])),
        vec![q(1), q(0), q(1)]
    );
    assert_eq!(
        a3.interior_point(&a3.central_face()),
        vec![q(0), q(0), q(0)]
    );
    let b2 = ArrangementKind::TypeB(2);
    let f = b2.parse_face("2|0:1 -1|-2").unwrap();
    assert_eq!(b2.interior_point(&f), vec![q(0), q(1)]);
}

#[test]
fn encodings_round_trip() {
    for k in [
        ArrangementKind::BraidA(3),
        ArrangementKind::TypeB(2),
        ArrangementKind::TypeB(3),
        ArrangementKind::Coordinate(3),
    ] {
        for f in k.enumerate_faces(None) {
            let s = k.face_to_string(&f);
            assert_eq!(k.parse_face(&s).unwrap(), f, "{s}");
        }
        for x in k.enumerate_flats() {
            let s = k.flat_to_string(&x);
            assert_eq!(k.parse_flat(&s).unwrap(), x, "{s}");
        }
    }
}

#[test]
fn malformed_strings_rejected() {
    let a = ArrangementKind::BraidA(3);
    assert!(a.parse_face("12|2|3").is_err());
    assert!(a.parse_flat("{12,3").is_err());
    let b = ArrangementKind::TypeB(2);
    assert!(b.parse_face("1|0:|2").is_err());
    assert!(b.parse_face("1 -1|2").is_err());
}

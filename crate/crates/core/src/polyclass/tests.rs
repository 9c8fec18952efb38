use super::*;
use crate::arrangement::Face;
use crate::gfseries::{eulerian_a, eulerian_b};
use crate::rational::qr;
use crate::titsalgebra::TitsElement;

fn arr(kind: ArrangementKind) -> Arrangement {
    Arrangement::new(kind).unwrap()
}

fn pt(v: &[i64]) -> Vec<Q> {
    v.iter().map(|&x| q(x)).collect()
}

#[test]
fn vertex_counts() {
    for d in 1..=4 {
        let a = arr(ArrangementKind::BraidA(d));
        assert_eq!(
            permutahedron(&a).unwrap().num_vertices(),
            (1..=d).product::<usize>()
        );
        let b = arr(ArrangementKind::TypeB(d));
        assert_eq!(
            type_b_permutahedron(&b).unwrap().num_vertices(),
            (1..=d).product::<usize>() << d
        );
        let c = arr(ArrangementKind::Coordinate(d));
        assert_eq!(cube(&c).unwrap().num_vertices(), 1 << d);
    }
}

#[test]
fn octagon_vertices() {
    let b = arr(ArrangementKind::TypeB(2));
    let p = type_b_permutahedron(&b).unwrap();
    let mut want = Vec::new();
    for (x, y) in [(1, 2), (2, 1)] {
        for (sx, sy) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
            want.push(pt(&[sx * x, sy * y]));
        }
    }
    want.sort();
    assert_eq!(p.vertices(), want.as_slice());
}

#[test]
fn simplices_and_bad_sets() {
    let b = arr(ArrangementKind::TypeB(2));
    let s = simplex0(&b, &[1]).unwrap();
    assert_eq!(s.vertices(), &[pt(&[0, 0]), pt(&[1, 0])]);
    assert!(simplex(&b, &[1, -1]).is_err());
    assert!(simplex(&b, &[3]).is_err());
    let a = arr(ArrangementKind::BraidA(3));
    assert!(simplex(&a, &[-1, 2]).is_err());
    // a segment along a coordinate axis is not a braid deformation
    assert!(matches!(
        segment(&a, &pt(&[1, 0, 0])),
        Err(Error::NotDeformation(_))
    ));
}

#[test]
fn minkowski_identities() {
    let a = arr(ArrangementKind::BraidA(3));
    let d12 = simplex(&a, &[1, 2]).unwrap();
    let two = d12.minkowski(&a, &d12).unwrap();
    assert_eq!(two, d12.dilate(&a, &q(2)).unwrap());
    assert_eq!(two.vertices(), &[pt(&[0, 2, 0]), pt(&[2, 0, 0])]);
    let z = simplex(&a, &[1, 2])
        .unwrap()
        .minkowski(&a, &simplex(&a, &[1, 3]).unwrap())
        .unwrap()
        .minkowski(&a, &simplex(&a, &[2, 3]).unwrap())
        .unwrap();
    let p = permutahedron(&a).unwrap();
    assert!(z.is_translate_of(&p));
    assert_eq!(
        FaceLattice::new(&a, &z).f_vector(),
        FaceLattice::new(&a, &p).f_vector()
    );
}

#[test]
fn face_max_of_simplices() {
    let a = arr(ArrangementKind::BraidA(4));
    let j = [1, 3, 4];
    let dj = simplex(&a, &j).unwrap();
    for f in 0..a.num_faces() {
        let Face::Composition(blocks) = a.face(f) else {
            unreachable!()
        };
        let first: Vec<i32> = blocks
            .iter()
            .map(|b| {
                b.iter()
                    .copied()
                    .filter(|e| j.contains(e))
                    .collect::<Vec<_>>()
            })
            .find(|v: &Vec<i32>| !v.is_empty())
            .unwrap();
        assert_eq!(dj.face_max(&a, f).unwrap(), simplex(&a, &first).unwrap());
    }
    assert_eq!(dj.face_max(&a, a.central()).unwrap(), dj);
}

#[test]
fn face_max_is_associative_on_pi3() {
    let a = arr(ArrangementKind::BraidA(3));
    let p = permutahedron(&a).unwrap();
    for f in 0..a.num_faces() {
        let pf = p.face_max(&a, f).unwrap();
        for g in 0..a.num_faces() {
            assert_eq!(
                pf.face_max(&a, g).unwrap(),
                p.face_max(&a, a.product(f, g)).unwrap()
            );
        }
    }
}

#[test]
fn h_polynomials() {
    let a = arr(ArrangementKind::BraidA(3));
    let lat = FaceLattice::new(&a, &permutahedron(&a).unwrap());
    assert_eq!(lat.f_vector(), vec![6, 6, 1]);
    assert_eq!(lat.h_polynomial(), eulerian_a(3));
    let b = arr(ArrangementKind::TypeB(2));
    let lat = FaceLattice::new(&b, &type_b_permutahedron(&b).unwrap());
    assert_eq!(lat.h_polynomial(), eulerian_b(2));
    let lat = FaceLattice::new(&a, &VPolytope::origin(&a));
    assert_eq!(lat.f_vector(), vec![1]);
    assert_eq!(lat.h_polynomial(), crate::gfseries::RatPoly::one());
}

#[test]
fn lattice_volumes() {
    let b = arr(ArrangementKind::TypeB(2));
    assert_eq!(
        lattice_volume(&b, &segment(&b, &pt(&[1, 1])).unwrap()),
        q(1)
    );
    assert_eq!(
        lattice_volume(&b, &segment(&b, &pt(&[2, 2])).unwrap()),
        q(2)
    );
    let c = arr(ArrangementKind::Coordinate(2));
    assert_eq!(lattice_volume(&c, &cube(&c).unwrap()), q(1));
    // the hexagon is three unit rhombi of the root lattice
    let a = arr(ArrangementKind::BraidA(3));
    assert_eq!(lattice_volume(&a, &permutahedron(&a).unwrap()), q(3));
    let b3 = arr(ArrangementKind::TypeB(3));
    let c3 = simplex0(&b3, &[1, 2, 3]).unwrap();
    assert_eq!(lattice_volume(&b3, &c3), qr(1, 6));
    assert_eq!(
        lattice_volume(&b3, &c3.dilate(&b3, &qr(3, 2)).unwrap()),
        qr(27, 48)
    );
}

#[test]
fn phi_of_segment_minus_one() {
    let c = arr(ArrangementKind::Coordinate(1));
    let x = PiElement::class(&segment(&c, &[q(5)]).unwrap())
        .sub(&PiElement::one(&c))
        .unwrap();
    let w = phi(&c, &x).unwrap();
    assert_eq!(w.get(c.central()), q(5));
    for &ch in c.chambers() {
        assert_eq!(w.get(ch), q(0));
    }
}

#[test]
fn phi_of_log_simplex0_b2() {
    let b = arr(ArrangementKind::TypeB(2));
    let x = log_class(&b, &simplex0(&b, &[1]).unwrap()).unwrap();
    let w = phi(&b, &x).unwrap();
    let rays: Vec<usize> = w.terms().map(|(f, _)| f).collect();
    assert_eq!(rays.len(), 2);
    for (f, c) in w.terms() {
        assert_eq!(*c, q(1));
        assert_eq!(b.face_dim(f), 1);
        let Face::Signed { zero, .. } = b.face(f) else {
            unreachable!()
        };
        assert_eq!(zero, &vec![1]);
    }
}

#[test]
fn log_and_exp() {
    let a = arr(ArrangementKind::BraidA(3));
    assert!(log_class(&a, &simplex(&a, &[2]).unwrap())
        .unwrap()
        .is_zero());
    let l = simplex(&a, &[1, 3]).unwrap();
    let want = PiElement::class(&l).sub(&PiElement::one(&a)).unwrap();
    assert_eq!(log_class(&a, &l).unwrap(), want);
    let p = permutahedron(&a).unwrap();
    let lp = log_class(&a, &p).unwrap();
    let back = exp_class(&a, &lp).unwrap();
    assert_eq!(
        phi(&a, &back).unwrap(),
        phi(&a, &PiElement::class(&p)).unwrap()
    );
    assert!(exp_class(&a, &PiElement::one(&a)).is_err());
}

#[test]
fn dilation_scales_degree_one() {
    let a = arr(ArrangementKind::BraidA(3));
    let x = log_class(&a, &simplex(&a, &[1, 2]).unwrap()).unwrap();
    let lhs = phi(&a, &x.dilate(&a, &q(2)).unwrap()).unwrap();
    assert_eq!(lhs, phi(&a, &x).unwrap().scale(&q(2)));
}

#[test]
fn graded_components_sum_to_whole() {
    let a = arr(ArrangementKind::BraidA(3));
    let x = PiElement::class(&permutahedron(&a).unwrap());
    let mut total = ConeWeights::zero(a.kind());
    for r in 0..=3 {
        let xr = graded_component(&a, &x, r).unwrap();
        let w = phi(&a, &xr).unwrap();
        for (f, _) in w.terms() {
            assert_eq!(a.face_dim(f) + r, 3);
        }
        total = total.add(&w);
    }
    assert_eq!(total, phi(&a, &x).unwrap());
}

#[test]
fn valuation_relations_vanish() {
    let a = arr(ArrangementKind::BraidA(3));
    let p = permutahedron(&a).unwrap();
    let s = slice(&a, &p, &pt(&[1, 0, 0]), &q(2)).unwrap();
    let v = valuation_element(&a, &p, &s).unwrap();
    assert!(phi(&a, &v).unwrap().is_zero());
    let c1 = arr(ArrangementKind::Coordinate(1));
    let l = segment(&c1, &[q(2)]).unwrap();
    let s = slice(&c1, &l, &[q(1)], &q(1)).unwrap();
    assert!(phi(&c1, &valuation_element(&c1, &l, &s).unwrap())
        .unwrap()
        .is_zero());
    let c2 = arr(ArrangementKind::Coordinate(2));
    let sq = cube(&c2).unwrap();
    let s = slice(&c2, &sq, &pt(&[1, 0]), &qr(1, 2)).unwrap();
    assert!(phi(&c2, &valuation_element(&c2, &sq, &s).unwrap())
        .unwrap()
        .is_zero());
    assert!(slice(&c2, &sq, &pt(&[1, 0]), &q(1)).is_err());
}

#[test]
fn root_difference_cut_is_not_a_deformation() {
    let a = arr(ArrangementKind::BraidA(3));
    let p = permutahedron(&a).unwrap();
    assert!(matches!(
        slice(&a, &p, &pt(&[1, -1, 0]), &q(0)),
        Err(Error::NotDeformation(_))
    ));
}

#[test]
fn module_axioms_on_pi3() {
    let a = arr(ArrangementKind::BraidA(3));
    let x = PiElement::class(&permutahedron(&a).unwrap());
    assert_eq!(module_act(&a, &x, &TitsElement::unit(&a)).unwrap(), x);
    for f in 0..a.num_faces() {
        let hf = TitsElement::basis(&a, f);
        let xf = module_act(&a, &x, &hf).unwrap();
        for g in 0..a.num_faces() {
            let hg = TitsElement::basis(&a, g);
            let lhs = module_act(&a, &xf, &hg).unwrap();
            let rhs = module_act(&a, &x, &TitsElement::basis(&a, a.product(f, g))).unwrap();
            assert_eq!(lhs, rhs);
        }
        assert_eq!(phi_act(&a, &x, &hf).unwrap(), phi(&a, &xf).unwrap());
    }
}

#[test]
fn zonotope_faces_are_summands() {
    for kind in [
        ArrangementKind::BraidA(3),
        ArrangementKind::TypeB(2),
        ArrangementKind::Coordinate(3),
    ] {
        let a = arr(kind);
        let z = zonotope_of(&a).unwrap();
        for f in 0..a.num_faces() {
            let zx = zonotope_of_flat(&a, a.support(f)).unwrap();
            assert!(z.face_max(&a, f).unwrap().is_translate_of(&zx));
        }
    }
}

#[test]
fn polytope_json_round_trip() {
    let b = arr(ArrangementKind::TypeB(2));
    let p = simplex0(&b, &[1, -2])
        .unwrap()
        .dilate(&b, &qr(1, 2))
        .unwrap();
    let (kind, pts) = parse_polytope_json(&p.to_json().to_string()).unwrap();
    assert_eq!(kind, b.kind());
    assert_eq!(VPolytope::from_points(&b, &pts).unwrap(), p);
    assert!(parse_polytope_json("{\"arrangement\": \"A\"}").is_err());
    assert!(parse_polytope_json("not json").is_err());
}

#[test]
fn from_points_rejects_points_outside_the_deformation() {
    let a = arr(ArrangementKind::BraidA(3));
    let off = VPolytope::from_points(&a, &[pt(&[0, 0, 0]), pt(&[2, 1, 0])]);
    assert!(matches!(off, Err(Error::NotDeformation(_))));
    let c = arr(ArrangementKind::Coordinate(2));
    let square = [pt(&[0, 0]), pt(&[1, 0]), pt(&[0, 1]), pt(&[1, 1])];
    let mut with_interior = square.to_vec();
    with_interior.push(vec![qr(1, 2), qr(1, 3)]);
    let p = VPolytope::from_points(&c, &with_interior).unwrap();
    assert_eq!(p.num_vertices(), 4);
    let mut with_far = square.to_vec();
    with_far.push(pt(&[3, -5]));
    assert!(VPolytope::from_points(&c, &with_far).is_err());
}

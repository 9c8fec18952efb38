//! Randomized invariants: face monoid laws, valuation and logarithm
//! identities on random deformations, exact decomposition recovery, and the
//! permutation bijections.

use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng as _, SeedableRng};
use rand_chacha::ChaCha8Rng;

use polytope_algebra::permstat::{forest_of, perm_of, Permutation, SignedPermutation};
use polytope_algebra::polyclass::{
    exp_class, lattice_volume, log_class, phi, random_deformation, simplex, FaceLattice, PiElement,
    VPolytope,
};
use polytope_algebra::rational::{fmt_q, parse_q, q, qr};
use polytope_algebra::spectra::a_decompose;
use polytope_algebra::{Arrangement, ArrangementKind};

fn arr_of(which: u8) -> Arrangement {
    let kind = match which % 4 {
        0 => ArrangementKind::BraidA(3),
        1 => ArrangementKind::TypeB(2),
        2 => ArrangementKind::Coordinate(3),
        _ => ArrangementKind::BraidA(4),
    };
    Arrangement::new(kind).unwrap()
}

fn deformation(arr: &Arrangement, seed: u64) -> VPolytope {
    random_deformation(arr, &mut ChaCha8Rng::seed_from_u64(seed)).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn face_products_form_a_left_regular_band(which in 0u8..3, a in any::<u32>(), b in any::<u32>(), c in any::<u32>()) {
        let kind = [ArrangementKind::BraidA(5), ArrangementKind::TypeB(3), ArrangementKind::Coordinate(5)][which as usize];
        let arr = Arrangement::new(kind).unwrap();
        let n = arr.num_faces() as u32;
        let (f, g, h) = ((a % n) as usize, (b % n) as usize, (c % n) as usize);
        prop_assert_eq!(arr.product(arr.product(f, g), h), arr.product(f, arr.product(g, h)));
        prop_assert_eq!(arr.product(arr.product(f, g), f), arr.product(f, g));
        prop_assert_eq!(arr.support(arr.product(f, g)), arr.flat_join(arr.support(f), arr.support(g)));
        prop_assert_eq!(arr.product(f, g), arr.face_index(&kind.tits_product_geometric(arr.face(f), arr.face(g))).unwrap());
    }

    #[test]
    fn log_is_additive_and_exp_inverts_it(which in 0u8..3, s1 in any::<u64>(), s2 in any::<u64>()) {
        let arr = arr_of(which);
        let (p, r) = (deformation(&arr, s1), deformation(&arr, s2));
        let sum = p.minkowski(&arr, &r).unwrap();
        let lhs = phi(&arr, &log_class(&arr, &sum).unwrap()).unwrap();
        let rhs = phi(&arr, &log_class(&arr, &p).unwrap()).unwrap().add(&phi(&arr, &log_class(&arr, &r).unwrap()).unwrap());
        prop_assert_eq!(lhs, rhs);
        let back = exp_class(&arr, &log_class(&arr, &p).unwrap()).unwrap();
        prop_assert_eq!(phi(&arr, &back).unwrap(), phi(&arr, &PiElement::class(&p)).unwrap());
    }

    #[test]
    fn euler_relation_and_volume_scaling(which in 0u8..4, seed in any::<u64>(), lambda in 1i64..4) {
        let arr = arr_of(which);
        let p = deformation(&arr, seed);
        let f = FaceLattice::new(&arr, &p).f_vector();
        let chi: i64 = f.iter().enumerate().map(|(k, &x)| if k % 2 == 0 { x as i64 } else { -(x as i64) }).sum();
        prop_assert_eq!(chi, 1);
        let scaled = p.dilate(&arr, &q(lambda)).unwrap();
        let want = lattice_volume(&arr, &p) * q(lambda.pow(p.dim() as u32));
        prop_assert_eq!(lattice_volume(&arr, &scaled), want);
    }

    #[test]
    fn braid_decomposition_recovers_integer_coefficients(seed in any::<u64>(), terms in 1usize..5) {
        let arr = Arrangement::new(ArrangementKind::BraidA(4)).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut p = VPolytope::origin(&arr);
        let mut want = std::collections::BTreeMap::new();
        for _ in 0..terms {
            let mut s: Vec<i32> = (1..=4).collect();
            s.shuffle(&mut rng);
            let k = rng.gen_range(2..=4);
            let mut s = s[..k].to_vec();
            s.sort_unstable();
            let c = rng.gen_range(1..=3i64);
            let label = format!("D[{}]", s.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(","));
            *want.entry(label).or_insert(0i64) += c;
            p = p.minkowski(&arr, &simplex(&arr, &s).unwrap().dilate(&arr, &q(c)).unwrap()).unwrap();
        }
        let dec = a_decompose(&arr, &p).unwrap();
        prop_assert!(dec.unique() && dec.reconstructed);
        let got: std::collections::BTreeMap<String, i64> =
            dec.nonzero().into_iter().map(|(l, c)| (l, c.to_integer().try_into().unwrap())).collect();
        prop_assert_eq!(got, want);
    }

    #[test]
    fn rationals_round_trip(n in -10_000i64..10_000, d in 1i64..500) {
        let x = qr(n, d);
        prop_assert_eq!(parse_q(&fmt_q(&x)).unwrap(), x);
    }

    #[test]
    fn forest_bijection_round_trips(seed in any::<u64>(), d in 1usize..11) {
        let mut img: Vec<u32> = (1..=d as u32).collect();
        img.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        let s = Permutation::from_images(img).unwrap();
        let t = forest_of(&s);
        prop_assert_eq!(t.num_leaves(), s.exc());
        prop_assert_eq!(perm_of(&t, d).unwrap(), s);
    }

    #[test]
    fn b_excedance_formula(seed in any::<u64>(), d in 1usize..8) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut img: Vec<i32> = (1..=d as i32).collect();
        img.shuffle(&mut rng);
        let img: Vec<i32> = img.into_iter().map(|v| if rng.gen_bool(0.5) { v } else { -v }).collect();
        let fneg = img.iter().filter(|&&v| v < 0).count();
        let exc = img.iter().enumerate().filter(|(i, &v)| v > *i as i32 + 1).count();
        let s = SignedPermutation::from_images(img).unwrap();
        prop_assert_eq!(s.fneg(), fneg);
        prop_assert_eq!(s.exc_b(), exc + (fneg + 1) / 2);
    }
}

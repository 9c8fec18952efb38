//! Randomized and exhaustive checks of `Φ` and of the Tits algebra action.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use super::{
    graded_component, log_class, module_act, phi, pi_multiply, random_ray_slice, simplex, simplex0,
    valuation_element, zonotope_of_flat, PiElement, VPolytope,
};
use crate::arrangement::{Arrangement, ArrangementKind};
use crate::error::{Error, Result};
use crate::rational::{q, qr, Q};
use crate::report::{Check, Report};
use crate::titsalgebra::TitsElement;

/// A random deformation: a translate of a sum of dilated flat zonotopes and,
/// for types A and B, a simplex.
pub fn random_deformation<R: Rng>(arr: &Arrangement, rng: &mut R) -> Result<VPolytope> {
    let d = arr.d();
    let mut p = VPolytope::point(arr, (0..d).map(|_| q(rng.gen_range(-2..=2))).collect());
    for _ in 0..rng.gen_range(1..=2) {
        let x = rng.gen_range(0..arr.num_flats());
        let z = zonotope_of_flat(arr, x)?.dilate(arr, &q(rng.gen_range(1..=2)))?;
        p = p.minkowski(arr, &z)?;
    }
    let extra = match arr.kind() {
        ArrangementKind::BraidA(_) if d >= 2 => {
            let mut s: Vec<i32> = (1..=d as i32).collect();
            s.shuffle(rng);
            s.truncate(rng.gen_range(2..=d));
            Some(simplex(arr, &s)?)
        }
        ArrangementKind::TypeB(_) => {
            let s: Vec<i32> = (1..=d as i32)
                .filter_map(|i| match rng.gen_range(0..3) {
                    0 => None,
                    1 => Some(i),
                    _ => Some(-i),
                })
                .collect();
            match s.first() {
                Some(&first) => {
                    let s: Vec<i32> = s.iter().map(|&i| if first < 0 { -i } else { i }).collect();
                    Some(simplex0(arr, &s)?)
                }
                None => None,
            }
        }
        _ => None,
    };
    if let Some(e) = extra {
        p = p.minkowski(arr, &e)?;
    }
    Ok(p)
}

/// `Φ` vanishes on `slices` valuation relations from random ray cuts and on
/// `translations` relations `[p + t] - [p]`, and sends the degree-`r`
/// component of random classes to weights on faces of dimension `d - r`.
pub fn phi_soundness_check(
    arr: &Arrangement,
    slices: usize,
    translations: usize,
    seed: u64,
) -> Result<Report> {
    let tag = format!("{}{}", arr.kind().letter(), arr.d());
    let d = arr.d();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut slice_fail = None;
    let mut found = 0;
    let mut tries = 0;
    while found < slices {
        tries += 1;
        if tries > 50 * slices.max(1) {
            return Err(Error::Internal(format!(
                "{tag}: found {found} of {slices} valid cuts"
            )));
        }
        let p = random_deformation(arr, &mut rng)?;
        if p.dim() == 0 {
            continue;
        }
        let (form, c, s) = match random_ray_slice(arr, &p, &mut rng, 20) {
            Ok(x) => x,
            Err(Error::NotDeformation(_)) => continue,
            Err(e) => return Err(e),
        };
        found += 1;
        if !phi(arr, &valuation_element(arr, &p, &s)?)?.is_zero() && slice_fail.is_none() {
            slice_fail = Some(format!(
                "cut {form:?} = {c} of a polytope with {} vertices",
                p.num_vertices()
            ));
        }
    }
    let mut trans_fail = None;
    for k in 0..translations {
        let p = random_deformation(arr, &mut rng)?;
        let t: Vec<Q> = (0..d)
            .map(|_| qr(rng.gen_range(-6..=6), rng.gen_range(1..=3)))
            .collect();
        let rel = PiElement::from_terms(arr, [(p.translate(&t), q(1)), (p.clone(), q(-1))])?;
        let moved = PiElement::class(&p.translate(&t)).sub(&PiElement::class(&p))?;
        if (!phi(arr, &rel)?.is_zero() || !moved.is_zero()) && trans_fail.is_none() {
            trans_fail = Some(format!("translation relation {k}"));
        }
    }
    let mut graded_fail = None;
    for k in 0..5 {
        let x = PiElement::class(&random_deformation(arr, &mut rng)?);
        for r in 0..=d {
            let w = phi(arr, &graded_component(arr, &x, r)?)?;
            if w.terms().any(|(f, _)| arr.face_dim(f) + r != d) && graded_fail.is_none() {
                graded_fail = Some(format!("sample {k}, degree {r}"));
            }
        }
    }
    let mut rep = Report::new();
    rep.push(
        Check::new(format!("{tag}/phi_kills_slice_relations"), true)
            .mismatch(slice_fail)
            .with_detail(json!({"relations": slices, "seed": seed})),
    );
    rep.push(
        Check::new(format!("{tag}/phi_kills_translation_relations"), true)
            .mismatch(trans_fail)
            .with_detail(json!({"relations": translations, "seed": seed})),
    );
    rep.push(
        Check::new(format!("{tag}/phi_degree_r_on_codimension_r_faces"), true)
            .mismatch(graded_fail),
    );
    Ok(rep)
}

/// `(x · H_F) · H_G = x · H_{FG}` over all face pairs for `[base]`,
/// `log[base]` and `[base] - 1`; `H_F` acts multiplicatively on `pairs`
/// random class pairs; dilation commutes with every `H_F`.
pub fn module_axiom_check(
    arr: &Arrangement,
    base: &VPolytope,
    pairs: usize,
    seed: u64,
) -> Result<Report> {
    let tag = format!("{}{}", arr.kind().letter(), arr.d());
    let cls = PiElement::class(base);
    let xs = [
        cls.clone(),
        log_class(arr, base)?,
        cls.sub(&PiElement::one(arr))?,
    ];
    let n = arr.num_faces();
    let mut assoc = None;
    let mut unit = None;
    for (i, x) in xs.iter().enumerate() {
        if &module_act(arr, x, &TitsElement::unit(arr))? != x && unit.is_none() {
            unit = Some(format!("class {i}"));
        }
        for f in 0..n {
            let xf = module_act(arr, x, &TitsElement::basis(arr, f))?;
            for g in 0..n {
                let lhs = module_act(arr, &xf, &TitsElement::basis(arr, g))?;
                let rhs = module_act(arr, x, &TitsElement::basis(arr, arr.product(f, g)))?;
                if (lhs != rhs || phi(arr, &lhs)? != phi(arr, &rhs)?) && assoc.is_none() {
                    assoc = Some(format!(
                        "class {i}, F = {}, G = {}",
                        arr.face_string(f),
                        arr.face_string(g)
                    ));
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut mult = None;
    let mut dil = None;
    for k in 0..pairs {
        let x = PiElement::class(&random_deformation(arr, &mut rng)?);
        let y = log_class(arr, &random_deformation(arr, &mut rng)?)?;
        let hf = TitsElement::basis(arr, rng.gen_range(0..n));
        let lhs = module_act(arr, &pi_multiply(arr, &x, &y)?, &hf)?;
        let rhs = pi_multiply(arr, &module_act(arr, &x, &hf)?, &module_act(arr, &y, &hf)?)?;
        if phi(arr, &lhs)? != phi(arr, &rhs)? && mult.is_none() {
            mult = Some(format!("pair {k}"));
        }
        let lambda = [q(2), q(3), qr(1, 2), qr(5, 3)]
            .choose(&mut rng)
            .expect("nonempty")
            .clone();
        let a = module_act(arr, &x.dilate(arr, &lambda)?, &hf)?;
        let b = module_act(arr, &x, &hf)?.dilate(arr, &lambda)?;
        if phi(arr, &a)? != phi(arr, &b)? && dil.is_none() {
            dil = Some(format!("pair {k}, λ = {lambda}"));
        }
    }
    let mut rep = Report::new();
    rep.push(Check::new(format!("{tag}/unit_acts_trivially"), true).mismatch(unit));
    rep.push(
        Check::new(format!("{tag}/action_is_associative"), true)
            .mismatch(assoc)
            .with_detail(json!({"face_pairs": n * n, "classes": xs.len()})),
    );
    rep.push(
        Check::new(format!("{tag}/action_is_multiplicative"), true)
            .mismatch(mult)
            .with_detail(json!({"pairs": pairs, "seed": seed})),
    );
    rep.push(Check::new(format!("{tag}/dilation_commutes_with_action"), true).mismatch(dil));
    Ok(rep)
}

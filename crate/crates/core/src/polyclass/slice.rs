//! Cutting a deformation by a hyperplane to produce valuation relations
//! `[p≤] + [p≥] - [p] - [p=]`.
//!
//! The cutting forms are ray directions of the arrangement fan. A cut whose
//! pieces are not deformations is reported as `NotDeformation`, and the
//! random generator then tries another form.

use rand::seq::SliceRandom;
use rand::Rng;

use super::lattice::FaceLattice;
use super::{PiElement, VPolytope};
use crate::arrangement::{Arrangement, ArrangementKind};
use crate::error::{input, Error, Result};
use crate::rational::{fmt_q, q, Q};

/// The three pieces of a cut `ℓ = c`.
#[derive(Debug, Clone, PartialEq)]
pub struct Slice {
    pub le: VPolytope,
    pub ge: VPolytope,
    pub eq: VPolytope,
}

fn dot(a: &[Q], b: &[Q]) -> Q {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Cuts `p` by `⟨form, x⟩ = c`, where `c` lies strictly between the minimum
/// and maximum of the form on `p`.
pub fn slice(arr: &Arrangement, p: &VPolytope, form: &[Q], c: &Q) -> Result<Slice> {
    let vals: Vec<Q> = p.vertices().iter().map(|v| dot(v, form)).collect();
    let lo = vals.iter().min().expect("nonempty");
    let hi = vals.iter().max().expect("nonempty");
    if !(lo < c && c < hi) {
        return input(format!(
            "cut value {} is not strictly between {} and {}",
            fmt_q(c),
            fmt_q(lo),
            fmt_q(hi)
        ));
    }
    let mut crossings = Vec::new();
    for (a, b) in FaceLattice::new(arr, p).edges() {
        let (va, vb) = (&vals[a as usize], &vals[b as usize]);
        if (va < c && c < vb) || (vb < c && c < va) {
            let t = (c - va) / (vb - va);
            let pa = &p.vertices()[a as usize];
            let pb = &p.vertices()[b as usize];
            crossings.push(
                pa.iter()
                    .zip(pb)
                    .map(|(x, y)| x + &t * (y - x))
                    .collect::<Vec<Q>>(),
            );
        }
    }
    let pick = |keep: &dyn Fn(&Q) -> bool| -> Vec<Vec<Q>> {
        p.vertices()
            .iter()
            .zip(&vals)
            .filter(|(_, v)| keep(v))
            .map(|(x, _)| x.clone())
            .chain(crossings.iter().cloned())
            .collect()
    };
    Ok(Slice {
        le: VPolytope::from_points(arr, &pick(&|v| v <= c))?,
        ge: VPolytope::from_points(arr, &pick(&|v| v >= c))?,
        eq: VPolytope::from_points(arr, &pick(&|v| v == c))?,
    })
}

/// Ray directions of the arrangement fan, used as cutting forms.
pub fn ray_forms(arr: &Arrangement) -> Vec<Vec<Q>> {
    let ray_dim = match arr.kind() {
        ArrangementKind::BraidA(_) => 2,
        _ => 1,
    };
    (0..arr.num_faces())
        .filter(|&f| arr.face_dim(f) == ray_dim)
        .map(|f| arr.interior_point(f).to_vec())
        .collect()
}

/// A random valid cut of `p` by a ray form, retrying up to `attempts` times.
pub fn random_ray_slice<R: Rng>(
    arr: &Arrangement,
    p: &VPolytope,
    rng: &mut R,
    attempts: usize,
) -> Result<(Vec<Q>, Q, Slice)> {
    let forms = ray_forms(arr);
    for _ in 0..attempts {
        let form = forms.choose(rng).expect("arrangement has rays").clone();
        let vals: Vec<Q> = p.vertices().iter().map(|v| dot(v, &form)).collect();
        let lo = vals.iter().min().expect("nonempty").clone();
        let hi = vals.iter().max().expect("nonempty").clone();
        if lo == hi {
            continue;
        }
        let m = rng.gen_range(2..=4i64);
        let k = rng.gen_range(1..m);
        let c = &lo + (&hi - &lo) * q(k) / q(m);
        match slice(arr, p, &form, &c) {
            Ok(s) => return Ok((form, c, s)),
            Err(Error::NotDeformation(_)) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::NotDeformation(format!(
        "no valid ray cut found in {attempts} attempts"
    )))
}

/// `[p≤] + [p≥] - [p] - [p=]`.
pub fn valuation_element(arr: &Arrangement, p: &VPolytope, s: &Slice) -> Result<PiElement> {
    PiElement::from_terms(
        arr,
        [
            (s.le.clone(), q(1)),
            (s.ge.clone(), q(1)),
            (p.clone(), q(-1)),
            (s.eq.clone(), q(-1)),
        ],
    )
}

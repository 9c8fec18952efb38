//! The Hopf monoid of generalized permutahedra: Cartesian product,
//! restriction/contraction coproduct, the Euler map and antipode on classes,
//! and checks of the bimonoid, antipode, coideal and (2,1)-monoid identities.
//!
//! A polytope over a label set `I` lives in `R^I`, stored with coordinates in
//! increasing label order over the braid arrangement of rank `|I|`. The empty
//! label set carries the single point of `R^∅`.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::rc::Rc;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::arrangement::{Arrangement, ArrangementKind, Face};
use crate::error::{input, Error, Result};
use crate::polyclass::{
    permutahedron, phi, random_ray_slice, simplex, ConeWeights, FaceLattice, PiElement, VPolytope,
};
use crate::rational::{q, Q};
use crate::report::{Check, Report};

thread_local! {
    static BRAID: RefCell<HashMap<usize, Rc<Arrangement>>> = RefCell::new(HashMap::new());
}

/// The braid arrangement of rank `n`, built once per thread.
pub fn braid(n: usize) -> Result<Rc<Arrangement>> {
    if let Some(a) = BRAID.with(|c| c.borrow().get(&n).cloned()) {
        return Ok(a);
    }
    let a = Rc::new(Arrangement::new(ArrangementKind::BraidA(n))?);
    BRAID.with(|c| c.borrow_mut().insert(n, a.clone()));
    Ok(a)
}

/// A generalized permutahedron in `R^I`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LabeledGP {
    labels: Vec<u32>,
    verts: Vec<Vec<Q>>,
}

impl LabeledGP {
    /// Convex hull of `points`, whose coordinates follow the order of
    /// `labels`. Labels are sorted and coordinates permuted to match.
    pub fn new(labels: &[u32], points: &[Vec<Q>]) -> Result<Self> {
        let mut order: Vec<usize> = (0..labels.len()).collect();
        order.sort_by_key(|&i| labels[i]);
        let sorted: Vec<u32> = order.iter().map(|&i| labels[i]).collect();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return input("repeated label");
        }
        if points.iter().any(|p| p.len() != labels.len()) {
            return input("point dimension differs from the number of labels");
        }
        let pts: Vec<Vec<Q>> = points
            .iter()
            .map(|p| order.iter().map(|&i| p[i].clone()).collect())
            .collect();
        if sorted.is_empty() {
            return Ok(Self::unit());
        }
        let p = VPolytope::from_points(&*braid(sorted.len())?, &pts)?;
        Ok(Self {
            labels: sorted,
            verts: p.vertices().to_vec(),
        })
    }

    /// `p` over the labels `1..=n`.
    pub fn from_polytope(p: &VPolytope) -> Self {
        Self {
            labels: (1..=p.d() as u32).collect(),
            verts: p.vertices().to_vec(),
        }
    }

    /// The point of `R^∅`.
    pub fn unit() -> Self {
        Self {
            labels: Vec::new(),
            verts: vec![Vec::new()],
        }
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    /// Vertices in lexicographic order.
    pub fn vertices(&self) -> &[Vec<Q>] {
        &self.verts
    }

    /// The polytope over `BraidA(|I|)`, `None` for the empty label set.
    pub fn polytope(&self) -> Result<Option<VPolytope>> {
        if self.labels.is_empty() {
            return Ok(None);
        }
        Ok(Some(VPolytope::from_points(
            &*braid(self.n())?,
            &self.verts,
        )?))
    }

    pub fn dim(&self) -> Result<usize> {
        Ok(self.polytope()?.map_or(0, |p| p.dim()))
    }

    fn same_labels(&self, o: &Self) -> Result<()> {
        if self.labels == o.labels {
            Ok(())
        } else {
            input(format!(
                "label sets differ: {:?} vs {:?}",
                self.labels, o.labels
            ))
        }
    }

    pub fn minkowski(&self, o: &Self) -> Result<Self> {
        self.same_labels(o)?;
        match (self.polytope()?, o.polytope()?) {
            (Some(a), Some(b)) => Ok(Self {
                labels: self.labels.clone(),
                verts: a.minkowski(&*braid(self.n())?, &b)?.vertices().to_vec(),
            }),
            _ => Ok(Self::unit()),
        }
    }

    /// Image under a bijection of labels.
    pub fn relabel(&self, map: &BTreeMap<u32, u32>) -> Result<Self> {
        let new: Vec<u32> = self
            .labels
            .iter()
            .map(|l| {
                map.get(l)
                    .copied()
                    .ok_or_else(|| Error::Input(format!("label {l} is not mapped")))
            })
            .collect::<Result<_>>()?;
        Self::new(&new, &self.verts)
    }

    /// `[p]` in the polytope algebra of `R^I`.
    pub fn class(&self) -> Result<Option<PiElement>> {
        Ok(self.polytope()?.map(|p| PiElement::class(&p)))
    }

    /// All nonempty faces with their dimensions.
    pub fn faces(&self) -> Result<Vec<(LabeledGP, usize)>> {
        let Some(p) = self.polytope()? else {
            return Ok(vec![(Self::unit(), 0)]);
        };
        let arr = braid(self.n())?;
        let lat = FaceLattice::new(&arr, &p);
        (0..lat.num_faces())
            .map(|i| {
                let f = p.face_max(&arr, lat.representative(i))?;
                Ok((
                    Self {
                        labels: self.labels.clone(),
                        verts: f.vertices().to_vec(),
                    },
                    lat.dim(i),
                ))
            })
            .collect()
    }
}

/// `p × q` over `S ⊔ T`.
pub fn gp_product(p: &LabeledGP, q: &LabeledGP) -> Result<LabeledGP> {
    if p.labels.iter().any(|l| q.labels.contains(l)) {
        return input("label sets overlap");
    }
    let labels: Vec<u32> = p.labels.iter().chain(&q.labels).copied().collect();
    let mut pts = Vec::with_capacity(p.verts.len() * q.verts.len());
    for a in &p.verts {
        for b in &q.verts {
            pts.push(a.iter().chain(b).cloned().collect::<Vec<Q>>());
        }
    }
    LabeledGP::new(&labels, &pts)
}

fn project(p: &[Vec<Q>], pos: &[usize]) -> Vec<Vec<Q>> {
    let mut out: Vec<Vec<Q>> = p
        .iter()
        .map(|v| pos.iter().map(|&i| v[i].clone()).collect())
        .collect();
    out.sort();
    out.dedup();
    out
}

/// `(p|_S, p/_S)`: the face of `p` maximizing `Σ_{j ∈ S} x_j`, which is
/// `p|_S × p/_S`, split into its two factors.
pub fn gp_coproduct(p: &LabeledGP, s: &[u32]) -> Result<(LabeledGP, LabeledGP)> {
    if let Some(l) = s.iter().find(|l| !p.labels.contains(l)) {
        return input(format!("label {l} is not in the label set"));
    }
    let in_s: Vec<bool> = p.labels.iter().map(|l| s.contains(l)).collect();
    let s_pos: Vec<usize> = (0..p.n()).filter(|&i| in_s[i]).collect();
    let t_pos: Vec<usize> = (0..p.n()).filter(|&i| !in_s[i]).collect();
    if s_pos.is_empty() {
        return Ok((LabeledGP::unit(), p.clone()));
    }
    if t_pos.is_empty() {
        return Ok((p.clone(), LabeledGP::unit()));
    }
    let arr = braid(p.n())?;
    let poly = p.polytope()?.expect("nonempty label set");
    let block = |pos: &[usize]| pos.iter().map(|&i| i as i32 + 1).collect::<Vec<i32>>();
    let f = arr
        .face_index(&Face::Composition(vec![block(&s_pos), block(&t_pos)]))
        .ok_or_else(|| Error::Internal("composition (S, T) is not a face".into()))?;
    let face = poly.face_max(&arr, f)?;
    let pick = |pos: &[usize]| -> Result<LabeledGP> {
        let labels: Vec<u32> = pos.iter().map(|&i| p.labels[i]).collect();
        LabeledGP::new(&labels, &project(face.vertices(), pos))
    };
    Ok((pick(&s_pos)?, pick(&t_pos)?))
}

/// `[p]^* = Σ_{q ≤ p} (-1)^{dim q} [q]`, extended linearly.
pub fn euler_map(arr: &Arrangement, x: &PiElement) -> Result<PiElement> {
    let mut out = PiElement::zero(arr);
    for (p, c) in x.terms() {
        for (f, dim) in LabeledGP::from_polytope(p).faces()? {
            let sign = if dim % 2 == 0 { 1 } else { -1 };
            let fp = f.polytope()?.expect("nonempty label set");
            out = out.add(&PiElement::class(&fp).scale(&(c * q(sign))))?;
        }
    }
    Ok(out)
}

/// `s_I = (-1)^{|I|}` times the Euler map.
pub fn antipode_class(arr: &Arrangement, x: &PiElement) -> Result<PiElement> {
    let sign = if arr.d() % 2 == 0 { 1 } else { -1 };
    Ok(euler_map(arr, x)?.scale(&q(sign)))
}

/// Subsets of a label set, by bit mask over its positions.
fn subsets(labels: &[u32]) -> Vec<Vec<u32>> {
    (0u32..(1 << labels.len()))
        .map(|m| {
            labels
                .iter()
                .enumerate()
                .filter(|(i, _)| m >> i & 1 == 1)
                .map(|(_, &l)| l)
                .collect()
        })
        .collect()
}

/// Deterministic sample of deformations of `π_n`: every `Δ_S`, `π_n`,
/// Minkowski sums of up to three dilated simplices, and slice pieces.
pub fn samples(n: usize, extra: usize, seed: u64) -> Result<Vec<LabeledGP>> {
    let arr = braid(n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let all: Vec<u32> = (1..=n as u32).collect();
    let sets: Vec<Vec<i32>> = subsets(&all)
        .into_iter()
        .filter(|s| !s.is_empty())
        .map(|s| s.iter().map(|&x| x as i32).collect())
        .collect();
    let mut out = Vec::new();
    for s in &sets {
        out.push(simplex(&arr, s)?);
    }
    let pi = permutahedron(&arr)?;
    out.push(pi.clone());
    for _ in 0..extra {
        let mut p = VPolytope::origin(&arr);
        for _ in 0..rng.gen_range(1..=3) {
            let s = &sets[rng.gen_range(0..sets.len())];
            p = p.minkowski(
                &arr,
                &simplex(&arr, s)?.dilate(&arr, &q(rng.gen_range(1..=2)))?,
            )?;
        }
        out.push(p);
    }
    if n >= 2 {
        for _ in 0..extra.min(3) {
            let (_, _, sl) = random_ray_slice(&arr, &pi, &mut rng, 50)?;
            out.extend([sl.le, sl.ge, sl.eq]);
        }
    }
    Ok(out.iter().map(LabeledGP::from_polytope).collect())
}

fn first<T>(slot: &mut Option<T>, v: T) {
    if slot.is_none() {
        *slot = Some(v);
    }
}

/// `Φ` of a labelled class; the empty label set maps to the scalar 1.
fn phi_labeled(p: &LabeledGP) -> Result<ConeWeights> {
    match p.polytope()? {
        None => {
            let a = braid(1)?;
            Ok(phi(&a, &PiElement::one(&a))?)
        }
        Some(poly) => phi(&*braid(p.n())?, &PiElement::class(&poly)),
    }
}

/// Sparse tensor `Σ c Φ(a) ⊗ Φ(b)`.
type Tensor = BTreeMap<(usize, usize), Q>;

fn add_tensor(acc: &mut Tensor, c: &Q, a: &ConeWeights, b: &ConeWeights) {
    for (f, x) in a.terms() {
        for (g, y) in b.terms() {
            let e = acc.entry((f, g)).or_insert_with(Q::zero);
            *e += c * x * y;
        }
    }
    acc.retain(|_, v| !v.is_zero());
}

/// Coassociativity, product/coproduct compatibility, relabelling
/// naturality, the antipode axiom in `Π` (for `n ≤ 3`), and `s ∘ s = id`
/// on classes, over the deterministic sample.
pub fn hopf_axiom_check(n: usize, seed: u64) -> Result<Report> {
    let smp = samples(n, 6, seed)?;
    let all: Vec<u32> = (1..=n as u32).collect();
    let mut rep = Report::new();

    let mut coassoc = None;
    let mut natural = None;
    let shift: BTreeMap<u32, u32> = all.iter().map(|&l| (l, n as u32 + 1 - l + 10)).collect();
    for (k, p) in smp.iter().enumerate() {
        for st in subsets(&all) {
            let (left, right) = gp_coproduct(p, &st)?;
            for s in subsets(&st) {
                let (ls, lt) = gp_coproduct(&left, &s)?;
                let (ps, pt) = gp_coproduct(p, &s)?;
                let (rt, ru) = gp_coproduct(
                    &pt,
                    &st.iter()
                        .copied()
                        .filter(|l| !s.contains(l))
                        .collect::<Vec<_>>(),
                )?;
                if (ls != ps || lt != rt || right != ru) && coassoc.is_none() {
                    coassoc = Some(format!("sample {k}, S={s:?}, S⊔T={st:?}"));
                }
            }
            let (a, b) = gp_coproduct(
                &p.relabel(&shift)?,
                &st.iter().map(|l| shift[l]).collect::<Vec<_>>(),
            )?;
            if (a != left.relabel(&shift)? || b != right.relabel(&shift)?) && natural.is_none() {
                natural = Some(format!("sample {k}, S={st:?}"));
            }
        }
    }
    rep.push(
        Check::new(format!("n={n}/coassociativity"), true)
            .mismatch(coassoc)
            .with_detail(json!({"samples": smp.len()})),
    );
    rep.push(Check::new(format!("n={n}/relabel_naturality"), true).mismatch(natural));

    let mut compat = None;
    for split in 1..n {
        let (ls, rs): (Vec<u32>, Vec<u32>) = (all[..split].to_vec(), all[split..].to_vec());
        let left = samples(split, 2, seed + 1)?;
        let right = samples(n - split, 2, seed + 2)?;
        let right: Vec<LabeledGP> = right
            .iter()
            .map(|r| r.relabel(&(1..=rs.len() as u32).zip(rs.iter().copied()).collect()))
            .collect::<Result<_>>()?;
        for (i, a) in left.iter().enumerate().step_by(2) {
            for (j, b) in right.iter().enumerate().step_by(2) {
                let prod = gp_product(a, b)?;
                for s in subsets(&all) {
                    let (pa, pb) = gp_coproduct(&prod, &s)?;
                    let sa: Vec<u32> = s.iter().copied().filter(|l| ls.contains(l)).collect();
                    let sb: Vec<u32> = s.iter().copied().filter(|l| rs.contains(l)).collect();
                    let (a1, a2) = gp_coproduct(a, &sa)?;
                    let (b1, b2) = gp_coproduct(b, &sb)?;
                    if (pa != gp_product(&a1, &b1)? || pb != gp_product(&a2, &b2)?)
                        && compat.is_none()
                    {
                        compat = Some(format!("split {split}, pair ({i},{j}), S={s:?}"));
                    }
                }
            }
        }
    }
    rep.push(Check::new(format!("n={n}/product_coproduct_compatibility"), true).mismatch(compat));

    if n <= 3 {
        let arr = braid(n)?;
        let mut anti = None;
        for (k, p) in smp.iter().enumerate() {
            let mut sum = PiElement::zero(&arr);
            for s in subsets(&all) {
                let (ps, pt) = gp_coproduct(p, &s)?;
                let sign = if s.len() % 2 == 0 { 1 } else { -1 };
                for (f, dim) in ps.faces()? {
                    let fs = if dim % 2 == 0 { sign } else { -sign };
                    let prod = gp_product(&f, &pt)?
                        .polytope()?
                        .expect("nonempty label set");
                    sum = sum.add(&PiElement::class(&prod).scale(&q(fs)))?;
                }
            }
            if !phi(&arr, &sum)?.is_zero() {
                first(&mut anti, format!("sample {k}"));
            }
        }
        rep.push(Check::new(format!("n={n}/antipode_axiom"), true).mismatch(anti));
    }

    let arr = braid(n)?;
    let x = PiElement::class(&permutahedron(&arr)?);
    let ss = antipode_class(&arr, &antipode_class(&arr, &x)?)?;
    rep.push(Check::new(
        format!("n={n}/antipode_involution"),
        phi(&arr, &ss)? == phi(&arr, &x)?,
    ));
    Ok(rep)
}

/// `(Φ ⊗ Φ)(Δ_{S,T}(m)) = 0` for slice relations
/// `m = [p≤] + [p≥] - [p] - [p=]` and translation relations
/// `m = [p + t] - [p]`, over every `S ⊆ I`.
pub fn mc_coideal_check(n: usize, trials: usize, seed: u64) -> Result<Report> {
    let arr = braid(n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let all: Vec<u32> = (1..=n as u32).collect();
    let base: Vec<LabeledGP> = samples(n, 4, seed)?
        .into_iter()
        .filter(|p| p.dim().unwrap_or(0) > 0)
        .collect();
    let mut slice_fail = None;
    let mut trans_fail = None;
    let mut relations = 0;
    for t in 0..trials {
        let p = &base[rng.gen_range(0..base.len())];
        let poly = p.polytope()?.expect("nonempty label set");
        let (_, _, sl) = random_ray_slice(&arr, &poly, &mut rng, 50)?;
        let terms: Vec<(LabeledGP, Q)> = vec![
            (LabeledGP::from_polytope(&sl.le), q(1)),
            (LabeledGP::from_polytope(&sl.ge), q(1)),
            (p.clone(), q(-1)),
            (LabeledGP::from_polytope(&sl.eq), q(-1)),
        ];
        let shift: Vec<Q> = (0..n).map(|_| q(rng.gen_range(-3..=3))).collect();
        let moved = LabeledGP::from_polytope(&poly.translate(&shift));
        let trans = vec![(moved, q(1)), (p.clone(), q(-1))];
        relations += 1;
        for s in subsets(&all) {
            for (rel, slot) in [(&terms, &mut slice_fail), (&trans, &mut trans_fail)] {
                let mut acc = Tensor::new();
                for (r, c) in rel {
                    let (a, b) = gp_coproduct(r, &s)?;
                    add_tensor(&mut acc, c, &phi_labeled(&a)?, &phi_labeled(&b)?);
                }
                if !acc.is_empty() {
                    first(slot, format!("trial {t}, S={s:?}"));
                }
            }
        }
    }
    let mut rep = Report::new();
    rep.push(
        Check::new(format!("n={n}/coideal_slice_relations"), true)
            .mismatch(slice_fail)
            .with_detail(json!({"relations": relations})),
    );
    rep.push(
        Check::new(format!("n={n}/coideal_translation_relations"), true)
            .mismatch(trans_fail)
            .with_detail(json!({"relations": relations})),
    );
    Ok(rep)
}

/// `(p₁ + p₂) × (q₁ + q₂) = (p₁ × q₁) + (p₂ × q₂)` and
/// `Δ_{S,T}(p + q) = Δ_{S,T}(p) + Δ_{S,T}(q)` at the vertex level.
pub fn two_one_monoid_check(n: usize, seed: u64) -> Result<Report> {
    let smp = samples(n, 4, seed)?;
    let all: Vec<u32> = (1..=n as u32).collect();
    let mut rep = Report::new();
    let mut cop = None;
    for (i, p) in smp.iter().enumerate() {
        for (j, r) in smp.iter().enumerate().skip(i).step_by(3) {
            let sum = p.minkowski(r)?;
            for s in subsets(&all) {
                let (a, b) = gp_coproduct(&sum, &s)?;
                let (p1, p2) = gp_coproduct(p, &s)?;
                let (r1, r2) = gp_coproduct(r, &s)?;
                if (a != p1.minkowski(&r1)? || b != p2.minkowski(&r2)?) && cop.is_none() {
                    cop = Some(format!("pair ({i},{j}), S={s:?}"));
                }
            }
        }
    }
    rep.push(Check::new(format!("n={n}/coproduct_minkowski"), true).mismatch(cop));

    let mut prod = None;
    for split in 1..n {
        let left = samples(split, 2, seed + 3)?;
        let rs: Vec<u32> = all[split..].to_vec();
        let right: Vec<LabeledGP> = samples(n - split, 2, seed + 4)?
            .iter()
            .map(|r| r.relabel(&(1..=rs.len() as u32).zip(rs.iter().copied()).collect()))
            .collect::<Result<_>>()?;
        for (i, (p1, p2)) in left.iter().zip(left.iter().rev()).enumerate() {
            for (j, (q1, q2)) in right.iter().zip(right.iter().skip(1)).enumerate() {
                let lhs = gp_product(&p1.minkowski(p2)?, &q1.minkowski(q2)?)?;
                let rhs = gp_product(p1, q1)?.minkowski(&gp_product(p2, q2)?)?;
                if lhs != rhs && prod.is_none() {
                    prod = Some(format!("split {split}, ({i},{j})"));
                }
            }
        }
    }
    rep.push(Check::new(format!("n={n}/product_minkowski"), true).mismatch(prod));
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(v: &[&[i64]]) -> Vec<Vec<Q>> {
        v.iter()
            .map(|p| p.iter().map(|&x| q(x)).collect())
            .collect()
    }

    #[test]
    fn coproduct_of_pi2() {
        let p = LabeledGP::new(&[1, 2], &pts(&[&[1, 2], &[2, 1]])).unwrap();
        let (a, b) = gp_coproduct(&p, &[1]).unwrap();
        assert_eq!(a.vertices(), pts(&[&[2]]).as_slice());
        assert_eq!(b.vertices(), pts(&[&[1]]).as_slice());
        let (u, w) = gp_coproduct(&p, &[]).unwrap();
        assert_eq!((u, w), (LabeledGP::unit(), p.clone()));
    }

    #[test]
    fn products() {
        let seg = LabeledGP::new(&[1, 2], &pts(&[&[1, 0], &[0, 1]])).unwrap();
        let seg2 = LabeledGP::new(&[3, 4], &pts(&[&[1, 0], &[0, 1]])).unwrap();
        let sq = gp_product(&seg, &seg2).unwrap();
        let arr = braid(4).unwrap();
        assert_eq!(
            FaceLattice::new(&arr, &sq.polytope().unwrap().unwrap()).f_vector(),
            vec![4, 4, 1]
        );
        assert_eq!(gp_product(&LabeledGP::unit(), &seg).unwrap(), seg);
        assert!(gp_product(&seg, &seg).is_err());
        let pi2 = LabeledGP::new(&[1, 2], &pts(&[&[1, 2], &[2, 1]])).unwrap();
        let pi2b = pi2
            .relabel(&[(1, 3), (2, 4)].into_iter().collect())
            .unwrap();
        let pp = gp_product(&pi2, &pi2b).unwrap();
        let h = FaceLattice::new(&arr, &pp.polytope().unwrap().unwrap()).h_polynomial();
        let h2 = crate::gfseries::eulerian_a(2);
        assert_eq!(h, &h2 * &h2);
    }

    #[test]
    fn euler_map_examples() {
        let a = braid(2).unwrap();
        let seg = simplex(&a, &[1, 2]).unwrap();
        let e = euler_map(&a, &PiElement::class(&seg)).unwrap();
        let want = PiElement::one(&a)
            .scale(&q(2))
            .sub(&PiElement::class(&seg))
            .unwrap();
        assert_eq!(e, want);
        assert_eq!(
            euler_map(&a, &PiElement::one(&a)).unwrap(),
            PiElement::one(&a)
        );
    }

    #[test]
    fn hopf_checks_small() {
        for n in 1..=3 {
            let rep = hopf_axiom_check(n, 11).unwrap();
            assert!(rep.pass(), "{:?}", rep.failures());
            let rep = two_one_monoid_check(n, 11).unwrap();
            assert!(rep.pass(), "{:?}", rep.failures());
        }
        let rep = mc_coideal_check(3, 5, 3).unwrap();
        assert!(rep.pass(), "{:?}", rep.failures());
    }

    #[test]
    fn two_one_examples() {
        let a = LabeledGP::new(&[1, 2, 3], &pts(&[&[1, 0, 0], &[0, 1, 0]])).unwrap();
        let b = LabeledGP::new(&[1, 2, 3], &pts(&[&[1, 0, 0], &[0, 0, 1]])).unwrap();
        let c = LabeledGP::new(&[4, 5], &pts(&[&[1, 0], &[0, 1]])).unwrap();
        let lhs = gp_product(&a.minkowski(&b).unwrap(), &c.minkowski(&c).unwrap()).unwrap();
        let rhs = gp_product(&a, &c)
            .unwrap()
            .minkowski(&gp_product(&b, &c).unwrap())
            .unwrap();
        assert_eq!(lhs, rhs);
    }
}

//! Deformations of the arrangement zonotope as V-polytopes, their face
//! lattices and lattice volumes, classes in the polytope algebra, the
//! cone-weight embedding `Φ`, and the right action of the Tits algebra.
//!
//! A deformation has a normal fan coarsening the arrangement fan, so it is
//! determined by the vertex maximizing each chamber's interior point. Every
//! polytope here is stored as that chamber-to-vertex map, which makes
//! Minkowski sums pointwise and face maximization a relabelling of chambers.

mod checks;
mod element;
mod lattice;
mod slice;

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicBool, Ordering};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::arrangement::{permutations_of, Arrangement, ArrangementKind, Flat};
use crate::error::{input, precondition, Error, Result};
use crate::linalg::{to_sparse, RowSpace};
use crate::rational::{fmt_q, parse_q, q, Q};

pub use checks::{module_axiom_check, phi_soundness_check, random_deformation};
pub use element::{
    exp_class, graded_component, log_class, module_act, phi, phi_act, phi_polytope, pi_multiply,
    ConeWeights, PiElement,
};
pub use lattice::{face_table, lattice_volume, lattice_volume_of_points, FaceLattice, FaceTable};
pub use slice::{random_ray_slice, ray_forms, slice, valuation_element, Slice};

static DEBUG_CHECKS: AtomicBool = AtomicBool::new(cfg!(debug_assertions));

/// Enables or disables the deformation re-check after Minkowski sums,
/// dilations and face maximization. Construction from raw points is always
/// checked.
pub fn set_debug_checks(on: bool) {
    DEBUG_CHECKS.store(on, Ordering::Relaxed);
}

pub fn debug_checks() -> bool {
    DEBUG_CHECKS.load(Ordering::Relaxed)
}

/// A deformation of the arrangement zonotope.
///
/// `verts` are the distinct vertices in lexicographic order and
/// `at_chamber[c]` is the vertex maximizing the interior point of chamber `c`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VPolytope {
    kind: ArrangementKind,
    verts: Vec<Vec<Q>>,
    at_chamber: Vec<u32>,
}

/// Rational points scaled to a common denominator as machine integers.
fn scaled_ints(points: &[Vec<Q>]) -> Option<Vec<Vec<i64>>> {
    let l = points
        .iter()
        .flatten()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    points
        .iter()
        .map(|p| {
            p.iter()
                .map(|x| {
                    let v = x.numer() * (&l / x.denom());
                    v.to_i64().filter(|v| v.abs() < (1 << 40))
                })
                .collect()
        })
        .collect()
}

fn dot_i(a: &[i64], b: &[i64]) -> i128 {
    a.iter().zip(b).map(|(&x, &y)| x as i128 * y as i128).sum()
}

fn dot_q(a: &[Q], b: &[i64]) -> Q {
    a.iter()
        .zip(b)
        .filter(|(_, &y)| y != 0)
        .map(|(x, &y)| x * Q::from_integer(y.into()))
        .sum()
}

/// Indices of the points maximizing `⟨·, u⟩`.
fn argmax(points: &[Vec<Q>], ints: Option<&[Vec<i64>]>, u: &[i64]) -> Vec<usize> {
    match ints {
        Some(ints) => {
            let vals: Vec<i128> = ints.iter().map(|p| dot_i(p, u)).collect();
            let m = *vals.iter().max().expect("nonempty");
            (0..vals.len()).filter(|&i| vals[i] == m).collect()
        }
        None => {
            let vals: Vec<Q> = points.iter().map(|p| dot_q(p, u)).collect();
            let m = vals.iter().max().expect("nonempty").clone();
            (0..vals.len()).filter(|&i| vals[i] == m).collect()
        }
    }
}

/// A second interior point of the face with interior point `u`, obtained by
/// a strictly increasing reparametrization of the block values (and a shift
/// along the lineality direction for the braid arrangement).
fn alt_point(kind: ArrangementKind, u: &[i64]) -> Vec<i64> {
    match kind {
        ArrangementKind::BraidA(_) => u.iter().map(|&v| v * v * v + v + 1).collect(),
        ArrangementKind::TypeB(_) => u.iter().map(|&v| v * v * v + v).collect(),
        ArrangementKind::Coordinate(_) => u
            .iter()
            .enumerate()
            .map(|(j, &v)| v * (j as i64 + 1))
            .collect(),
    }
}

impl VPolytope {
    /// Builds a deformation from candidate points: the argmax at each
    /// chamber must be unique, the resulting vertex map must pass the
    /// deformation check on every face, and every input point must lie in
    /// the hull of the chamber maximizers.
    pub fn from_points(arr: &Arrangement, points: &[Vec<Q>]) -> Result<Self> {
        let d = arr.d();
        if points.is_empty() {
            return input("a polytope needs at least one point");
        }
        if let Some(p) = points.iter().find(|p| p.len() != d) {
            return input(format!("point of length {} in dimension {d}", p.len()));
        }
        let mut pts = points.to_vec();
        pts.sort();
        pts.dedup();
        let ints = scaled_ints(&pts);
        let mut per_chamber = Vec::with_capacity(arr.num_chambers());
        for &c in arr.chambers() {
            let best = argmax(&pts, ints.as_deref(), arr.interior_point_int(c));
            if best.len() > 1 {
                return Err(Error::NotDeformation(format!(
                    "chamber {} is maximized by several points",
                    arr.face_string(c)
                )));
            }
            per_chamber.push(pts[best[0]].clone());
        }
        let p = Self::from_chamber_vertices(arr.kind(), per_chamber);
        p.check_deformation(arr)?;
        // The facet normals of a deformation are face directions, so the
        // points lie in the hull of the chamber vertices iff no face
        // direction sees one of them beyond the vertices.
        if let ArrangementKind::BraidA(_) = arr.kind() {
            let sum = |x: &[Q]| x.iter().fold(Q::zero(), |a, b| a + b);
            let s0 = sum(&p.verts[0]);
            if let Some(x) = pts.iter().find(|x| sum(x) != s0) {
                return Err(Error::NotDeformation(format!(
                    "point {} is off the hyperplane of coordinate sum {}",
                    fmt_point(x),
                    fmt_q(&s0)
                )));
            }
        }
        for f in 0..arr.num_faces() {
            let u = arr.interior_point(f);
            let dot = |x: &[Q]| x.iter().zip(u).fold(Q::zero(), |a, (xi, ui)| a + xi * ui);
            let top = p.verts.iter().map(|v| dot(v)).max().expect("nonempty");
            if let Some(x) = pts.iter().find(|x| dot(x) > top) {
                return Err(Error::NotDeformation(format!(
                    "point {} lies outside the hull of the chamber maximizers",
                    fmt_point(x)
                )));
            }
        }
        Ok(p)
    }

    /// Builds the polytope from its chamber vertices without checks.
    fn from_chamber_vertices(kind: ArrangementKind, per_chamber: Vec<Vec<Q>>) -> Self {
        let distinct: BTreeMap<Vec<Q>, u32> = per_chamber.iter().map(|v| (v.clone(), 0)).collect();
        let verts: Vec<Vec<Q>> = distinct.into_keys().collect();
        let index: BTreeMap<&Vec<Q>, u32> = verts
            .iter()
            .enumerate()
            .map(|(i, v)| (v, i as u32))
            .collect();
        let at_chamber = per_chamber.iter().map(|v| index[v]).collect();
        Self {
            kind,
            verts,
            at_chamber,
        }
    }

    fn finish(self, arr: &Arrangement) -> Result<Self> {
        if debug_checks() {
            self.check_deformation(arr)?;
        }
        Ok(self)
    }

    /// The single point `p`.
    pub fn point(arr: &Arrangement, p: Vec<Q>) -> Self {
        assert_eq!(p.len(), arr.d(), "point dimension");
        Self {
            kind: arr.kind(),
            verts: vec![p],
            at_chamber: vec![0; arr.num_chambers()],
        }
    }

    /// The origin, the unit of the polytope algebra.
    pub fn origin(arr: &Arrangement) -> Self {
        Self::point(arr, vec![Q::zero(); arr.d()])
    }

    pub fn kind(&self) -> ArrangementKind {
        self.kind
    }

    pub fn d(&self) -> usize {
        self.kind.d()
    }

    pub fn vertices(&self) -> &[Vec<Q>] {
        &self.verts
    }

    pub fn num_vertices(&self) -> usize {
        self.verts.len()
    }

    /// Index into [`VPolytope::vertices`] of the vertex at chamber number `c`.
    pub fn vertex_index_at(&self, c: usize) -> usize {
        self.at_chamber[c] as usize
    }

    pub fn vertex_at_chamber(&self, c: usize) -> &[Q] {
        &self.verts[self.at_chamber[c] as usize]
    }

    fn same(&self, arr: &Arrangement) -> Result<()> {
        if self.kind == arr.kind() {
            Ok(())
        } else {
            Err(Error::ArrangementMismatch(
                format!("{:?}", self.kind),
                format!("{:?}", arr.kind()),
            ))
        }
    }

    /// For every face `F`, the maximizers at two interior points of `F` are
    /// exactly the vertices at the chambers containing `F`.
    pub fn check_deformation(&self, arr: &Arrangement) -> Result<()> {
        self.same(arr)?;
        let ints = scaled_ints(&self.verts);
        for f in 0..arr.num_faces() {
            let mut want: Vec<usize> = arr
                .chambers_above(f)
                .iter()
                .map(|&c| self.at_chamber[c as usize] as usize)
                .collect();
            want.sort_unstable();
            want.dedup();
            let u = arr.interior_point_int(f);
            for pt in [u.to_vec(), alt_point(arr.kind(), u)] {
                if argmax(&self.verts, ints.as_deref(), &pt) != want {
                    return Err(Error::NotDeformation(format!(
                        "the maximal face in direction {} is not constant on the face",
                        arr.face_string(f)
                    )));
                }
            }
        }
        Ok(())
    }

    /// `p + t`.
    pub fn translate(&self, t: &[Q]) -> Self {
        let verts = self
            .verts
            .iter()
            .map(|v| v.iter().zip(t).map(|(a, b)| a + b).collect())
            .collect();
        Self {
            kind: self.kind,
            verts,
            at_chamber: self.at_chamber.clone(),
        }
    }

    /// The translate whose lexicographically least vertex is the origin.
    pub fn normalized(&self) -> Self {
        let t: Vec<Q> = self.verts[0].iter().map(|x| -x).collect();
        self.translate(&t)
    }

    pub fn is_translate_of(&self, o: &Self) -> bool {
        self.normalized() == o.normalized()
    }

    /// Minkowski sum, vertex by vertex over chambers.
    pub fn minkowski(&self, arr: &Arrangement, o: &Self) -> Result<Self> {
        self.same(arr)?;
        o.same(arr)?;
        let per = (0..arr.num_chambers())
            .map(|c| {
                self.vertex_at_chamber(c)
                    .iter()
                    .zip(o.vertex_at_chamber(c))
                    .map(|(a, b)| a + b)
                    .collect()
            })
            .collect();
        Self::from_chamber_vertices(self.kind, per).finish(arr)
    }

    /// `λ p` for `λ ≥ 0`; `λ = 0` gives the origin.
    pub fn dilate(&self, arr: &Arrangement, lambda: &Q) -> Result<Self> {
        self.same(arr)?;
        if lambda.is_negative() {
            return precondition("dilation factor must be nonnegative");
        }
        if lambda.is_zero() {
            return Ok(Self::origin(arr));
        }
        let verts = self
            .verts
            .iter()
            .map(|v| v.iter().map(|x| x * lambda).collect())
            .collect();
        Ok(Self {
            kind: self.kind,
            verts,
            at_chamber: self.at_chamber.clone(),
        })
    }

    /// The face `p_F` maximizing the interior of `F`; its vertex at chamber
    /// `C` is the vertex of `p` at `F·C`.
    pub fn face_max(&self, arr: &Arrangement, f: usize) -> Result<Self> {
        self.same(arr)?;
        let per = (0..arr.num_chambers())
            .map(|c| self.vertex_at_chamber(arr.act_on_chamber(f, c)).to_vec())
            .collect();
        Self::from_chamber_vertices(self.kind, per).finish(arr)
    }

    /// Dimension of the affine hull.
    pub fn dim(&self) -> usize {
        affine_dim(&self.verts, self.d())
    }

    /// `{"arrangement": "A|B|C", "d": n, "points": [["p/q", ...], ...]}`.
    pub fn to_json(&self) -> Value {
        json!({
            "arrangement": self.kind.letter(),
            "d": self.d(),
            "points": self.verts.iter().map(|v| v.iter().map(fmt_q).collect::<Vec<_>>()).collect::<Vec<_>>(),
        })
    }
}

/// Parses polytope JSON into its arrangement kind and points.
pub fn parse_polytope_json(s: &str) -> Result<(ArrangementKind, Vec<Vec<Q>>)> {
    let v: Value = serde_json::from_str(s)
        .map_err(|e| Error::Input(format!("malformed polytope JSON: {e}")))?;
    let letter = v["arrangement"]
        .as_str()
        .ok_or_else(|| Error::Input("missing \"arrangement\"".into()))?;
    let d = v["d"]
        .as_u64()
        .ok_or_else(|| Error::Input("missing \"d\"".into()))? as usize;
    let kind = ArrangementKind::from_letter(letter, d)?;
    let pts = v["points"]
        .as_array()
        .ok_or_else(|| Error::Input("missing \"points\"".into()))?;
    let points = pts
        .iter()
        .map(|p| {
            let coords = p
                .as_array()
                .ok_or_else(|| Error::Input("a point must be an array".into()))?;
            coords
                .iter()
                .map(|c| match c {
                    Value::String(s) => parse_q(s),
                    Value::Number(n) => parse_q(&n.to_string()),
                    _ => input("coordinates must be strings or numbers"),
                })
                .collect::<Result<Vec<Q>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((kind, points))
}

pub(crate) fn affine_dim(points: &[Vec<Q>], d: usize) -> usize {
    let mut rs = RowSpace::new();
    let base = &points[0];
    for p in &points[1..] {
        let diff: Vec<Q> = p.iter().zip(base).map(|(a, b)| a - b).collect();
        rs.insert(&to_sparse(&diff));
        if rs.rank() == d {
            break;
        }
    }
    rs.rank()
}

fn unit(d: usize, i: i32) -> Vec<Q> {
    let mut v = vec![Q::zero(); d];
    v[i.unsigned_abs() as usize - 1] = if i > 0 { q(1) } else { q(-1) };
    v
}

/// Convex hull of the orbit of `(1, 2, ..., d)` under coordinate permutations.
pub fn permutahedron(arr: &Arrangement) -> Result<VPolytope> {
    let ArrangementKind::BraidA(d) = arr.kind() else {
        return precondition("the permutahedron is built over the braid arrangement");
    };
    let base: Vec<i64> = (1..=d as i64).collect();
    let pts: Vec<Vec<Q>> = permutations_of(&base)
        .into_iter()
        .map(|p| p.into_iter().map(q).collect())
        .collect();
    VPolytope::from_points(arr, &pts)
}

/// Convex hull of the orbit of `(1, 2, ..., d)` under signed permutations.
pub fn type_b_permutahedron(arr: &Arrangement) -> Result<VPolytope> {
    let ArrangementKind::TypeB(d) = arr.kind() else {
        return precondition("the type B permutahedron is built over the type B arrangement");
    };
    let base: Vec<i64> = (1..=d as i64).collect();
    let mut pts = Vec::new();
    for p in permutations_of(&base) {
        for mask in 0u32..(1 << d) {
            pts.push(
                p.iter()
                    .enumerate()
                    .map(|(i, &x)| q(if mask >> i & 1 == 1 { -x } else { x }))
                    .collect(),
            );
        }
    }
    VPolytope::from_points(arr, &pts)
}

/// The unit cube `[0,1]^d`.
pub fn cube(arr: &Arrangement) -> Result<VPolytope> {
    let d = arr.d();
    let pts: Vec<Vec<Q>> = (0u32..(1 << d))
        .map(|m| (0..d).map(|i| q((m >> i & 1) as i64)).collect())
        .collect();
    VPolytope::from_points(arr, &pts)
}

fn check_simplex_set(arr: &Arrangement, s: &[i32]) -> Result<()> {
    let d = arr.d() as i32;
    if let Some(&e) = s.iter().find(|&&e| e == 0 || e.abs() > d) {
        return input(format!("element {e} out of range"));
    }
    let mut abs: Vec<i32> = s.iter().map(|e| e.abs()).collect();
    abs.sort_unstable();
    let n = abs.len();
    abs.dedup();
    if abs.len() != n {
        return input(
            "the index set must not contain an element together with its negative, nor repeats",
        );
    }
    if s.iter().any(|&e| e < 0) && !matches!(arr.kind(), ArrangementKind::TypeB(_)) {
        return input("negative indices are only allowed for the type B arrangement");
    }
    Ok(())
}

/// `Δ_S = Conv{e_i : i ∈ S}` with `e_{-i} = -e_i`.
pub fn simplex(arr: &Arrangement, s: &[i32]) -> Result<VPolytope> {
    check_simplex_set(arr, s)?;
    if s.is_empty() {
        return input("Δ_S needs a nonempty S");
    }
    let pts: Vec<Vec<Q>> = s.iter().map(|&i| unit(arr.d(), i)).collect();
    VPolytope::from_points(arr, &pts)
}

/// `Δ^0_S = Conv({0} ∪ {e_i : i ∈ S})`.
pub fn simplex0(arr: &Arrangement, s: &[i32]) -> Result<VPolytope> {
    check_simplex_set(arr, s)?;
    let mut pts: Vec<Vec<Q>> = s.iter().map(|&i| unit(arr.d(), i)).collect();
    pts.push(vec![Q::zero(); arr.d()]);
    VPolytope::from_points(arr, &pts)
}

/// `Conv{0, v}`.
pub fn segment(arr: &Arrangement, v: &[Q]) -> Result<VPolytope> {
    VPolytope::from_points(arr, &[vec![Q::zero(); arr.d()], v.to_vec()])
}

/// Normal vectors of the hyperplanes of the arrangement.
pub fn hyperplane_normals(kind: ArrangementKind) -> Vec<Vec<Q>> {
    let d = kind.d();
    let mut out = Vec::new();
    let e = |i: usize| unit(d, i as i32 + 1);
    let add = |a: &[Q], b: &[Q], s: i64| {
        a.iter()
            .zip(b)
            .map(|(x, y)| x + y * q(s))
            .collect::<Vec<Q>>()
    };
    match kind {
        ArrangementKind::BraidA(_) => {
            for i in 0..d {
                for j in i + 1..d {
                    out.push(add(&e(i), &e(j), -1));
                }
            }
        }
        ArrangementKind::TypeB(_) => {
            for i in 0..d {
                out.push(e(i));
            }
            for i in 0..d {
                for j in i + 1..d {
                    out.push(add(&e(i), &e(j), -1));
                    out.push(add(&e(i), &e(j), 1));
                }
            }
        }
        ArrangementKind::Coordinate(_) => out.extend((0..d).map(e)),
    }
    out
}

/// A basis of the flat as a linear subspace.
pub fn flat_basis(kind: ArrangementKind, x: &Flat) -> Vec<Vec<Q>> {
    let d = kind.d();
    match x {
        Flat::Partition(blocks) => blocks
            .iter()
            .map(|b| {
                let mut v = vec![Q::zero(); d];
                for &i in b {
                    v[i as usize - 1] = q(1);
                }
                v
            })
            .collect(),
        Flat::Signed { blocks, .. } => blocks
            .iter()
            .map(|b| {
                let mut v = vec![Q::zero(); d];
                for &i in b {
                    v[i.unsigned_abs() as usize - 1] = q(i.signum() as i64);
                }
                v
            })
            .collect(),
        Flat::Zeros(s) => (1..=d as i32)
            .filter(|i| !s.contains(i))
            .map(|i| unit(d, i))
            .collect(),
    }
}

/// Whether the hyperplane with normal `n` contains the flat.
pub fn hyperplane_contains(kind: ArrangementKind, n: &[Q], x: &Flat) -> bool {
    flat_basis(kind, x)
        .iter()
        .all(|b| b.iter().zip(n).map(|(a, c)| a * c).sum::<Q>().is_zero())
}

/// `z_X = Σ_{H ⊇ X} Conv{0, v_H}`; the whole zonotope for `X = ⊥`.
pub fn zonotope_of_flat(arr: &Arrangement, x: usize) -> Result<VPolytope> {
    let kind = arr.kind();
    let flat = arr.flat(x).clone();
    let mut acc = VPolytope::origin(arr);
    for n in hyperplane_normals(kind) {
        if hyperplane_contains(kind, &n, &flat) {
            acc = acc.minkowski(arr, &segment(arr, &n)?)?;
        }
    }
    Ok(acc)
}

/// `z = Σ_H Conv{0, v_H}`.
pub fn zonotope_of(arr: &Arrangement) -> Result<VPolytope> {
    zonotope_of_flat(arr, arr.bottom())
}

#[cfg(test)]
mod tests;

fn fmt_point(x: &[Q]) -> String {
    format!("({})", x.iter().map(fmt_q).collect::<Vec<_>>().join(", "))
}

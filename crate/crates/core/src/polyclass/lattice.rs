//! Face lattices of deformations and their lattice-normalized volumes.
//!
//! Every face of a deformation `p` is `p_F` for some arrangement face `F`,
//! with vertex set `{v_C : C ≥ F}`, and the faces of `p_F` are the `p_G`
//! with `G ≥ F`. Volumes are measured in the lattice `span(q - q) ∩ Z^d`,
//! using a pulling decomposition from one vertex: the pyramid over a facet
//! `f` has volume `height · vol(f) / r`, where the height is the value of the
//! primitive lattice functional vanishing on `f`.

use std::cell::RefCell;
use std::collections::HashMap;
use std::rc::Rc;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::{affine_dim, VPolytope};
use crate::arrangement::Arrangement;
use crate::gfseries::RatPoly;
use crate::linalg::{
    integer_kernel, inverse, nullspace, primitive_integer, rref, to_sparse, RowSpace, SparseVec,
};
use crate::rational::{q, Q};

/// Distinct faces of a deformation, indexed from the arrangement faces.
#[derive(Debug, Clone)]
pub struct FaceLattice {
    of_face: Vec<u32>,
    faces: Vec<Vec<u32>>,
    dims: Vec<usize>,
    rep: Vec<usize>,
}

impl FaceLattice {
    pub fn new(arr: &Arrangement, p: &VPolytope) -> Self {
        let mut index: HashMap<Vec<u32>, u32> = HashMap::new();
        let mut faces = Vec::new();
        let mut rep = Vec::new();
        let mut of_face = Vec::with_capacity(arr.num_faces());
        for f in 0..arr.num_faces() {
            let mut vs: Vec<u32> = arr
                .chambers_above(f)
                .iter()
                .map(|&c| p.vertex_index_at(c as usize) as u32)
                .collect();
            vs.sort_unstable();
            vs.dedup();
            let id = *index.entry(vs.clone()).or_insert_with(|| {
                faces.push(vs);
                rep.push(f);
                faces.len() as u32 - 1
            });
            of_face.push(id);
        }
        let dims = faces
            .iter()
            .map(|vs| {
                let pts: Vec<Vec<Q>> = vs
                    .iter()
                    .map(|&v| p.vertices()[v as usize].clone())
                    .collect();
                affine_dim(&pts, p.d())
            })
            .collect();
        Self {
            of_face,
            faces,
            dims,
            rep,
        }
    }

    pub fn num_faces(&self) -> usize {
        self.faces.len()
    }

    /// Vertex indices of the distinct face `i`.
    pub fn face(&self, i: usize) -> &[u32] {
        &self.faces[i]
    }

    pub fn dim(&self, i: usize) -> usize {
        self.dims[i]
    }

    /// Distinct face equal to `p_F`.
    pub fn of_face(&self, f: usize) -> usize {
        self.of_face[f] as usize
    }

    /// An arrangement face `F` with `p_F` equal to the distinct face `i`.
    pub fn representative(&self, i: usize) -> usize {
        self.rep[i]
    }

    /// Facets of the distinct face `i`.
    pub fn facets(&self, arr: &Arrangement, i: usize) -> Vec<usize> {
        let want = match self.dims[i].checked_sub(1) {
            Some(w) => w,
            None => return Vec::new(),
        };
        let mut out: Vec<usize> = arr
            .faces_above(self.rep[i])
            .iter()
            .map(|&g| self.of_face[g as usize] as usize)
            .filter(|&j| self.dims[j] == want)
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Edges as pairs of vertex indices.
    pub fn edges(&self) -> Vec<(u32, u32)> {
        let mut e: Vec<(u32, u32)> = (0..self.faces.len())
            .filter(|&i| self.dims[i] == 1)
            .map(|i| (self.faces[i][0], self.faces[i][1]))
            .collect();
        e.sort_unstable();
        e
    }

    /// `f_k` = number of `k`-dimensional faces, including the polytope itself.
    pub fn f_vector(&self) -> Vec<usize> {
        let top = self.dims.iter().copied().max().unwrap_or(0);
        let mut f = vec![0; top + 1];
        for &k in &self.dims {
            f[k] += 1;
        }
        f
    }

    /// `h(p, z) = f(p, z - 1)` with `f(p, z) = Σ f_k z^k`.
    pub fn h_polynomial(&self) -> RatPoly {
        let f: Vec<i64> = self.f_vector().into_iter().map(|x| x as i64).collect();
        RatPoly::from_ints(&f).shift_down()
    }
}

/// Integer basis of `W ∩ Z^d` for a rational subspace `W`, together with a
/// left inverse on a set of pivot coordinates.
#[derive(Debug)]
struct Frame {
    pivots: Vec<usize>,
    inv: Vec<Vec<Q>>,
}

impl Frame {
    fn new(basis_rows: &[SparseVec], d: usize) -> Self {
        let r = basis_rows.len();
        let dense: Vec<Vec<Q>> = basis_rows
            .iter()
            .map(|row| {
                (0..d)
                    .map(|j| row.get(&j).cloned().unwrap_or_else(Q::zero))
                    .collect()
            })
            .collect();
        let perp = nullspace(&dense, d);
        let m: Vec<Vec<BigInt>> = perp.iter().map(|v| primitive_integer(v)).collect();
        let ker = integer_kernel(&m, d);
        debug_assert_eq!(ker.len(), r);
        let kq: Vec<Vec<Q>> = ker
            .iter()
            .map(|v| v.iter().map(|x| Q::from_integer(x.clone())).collect())
            .collect();
        let mut echelon = kq.clone();
        let pivots = rref(&mut echelon);
        // y K = v on the pivot coordinates, with K[k][j] = basis_k[pivot_j]
        let sub: Vec<Vec<Q>> = kq
            .iter()
            .map(|b| pivots.iter().map(|&p| b[p].clone()).collect())
            .collect();
        let inv = inverse(&sub).expect("pivot submatrix of a basis is invertible");
        Self { pivots, inv }
    }

    /// Lattice coordinates of a vector in `W`.
    fn coords(&self, v: &[Q]) -> Vec<Q> {
        let r = self.pivots.len();
        (0..r)
            .map(|k| {
                self.pivots
                    .iter()
                    .enumerate()
                    .map(|(j, &p)| &v[p] * &self.inv[j][k])
                    .sum()
            })
            .collect()
    }
}

thread_local! {
    static FRAMES: RefCell<HashMap<Vec<SparseVec>, Rc<Frame>>> = RefCell::new(HashMap::new());
}

fn frame_for(points: &[&Vec<Q>], d: usize, r: usize) -> Rc<Frame> {
    let mut rs = RowSpace::new();
    for p in &points[1..] {
        let diff: Vec<Q> = p.iter().zip(points[0]).map(|(a, b)| a - b).collect();
        rs.insert(&to_sparse(&diff));
        if rs.rank() == r {
            break;
        }
    }
    let key = rs.basis();
    FRAMES.with(|cache| {
        let mut cache = cache.borrow_mut();
        if cache.len() > 4096 {
            cache.clear();
        }
        cache
            .entry(key.clone())
            .or_insert_with(|| Rc::new(Frame::new(&key, d)))
            .clone()
    })
}

/// Lattice volumes of all distinct faces of `p`.
pub fn face_volumes(arr: &Arrangement, p: &VPolytope, lat: &FaceLattice) -> Vec<Q> {
    let d = p.d();
    let n = lat.num_faces();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| lat.dim(i));
    let mut vol = vec![Q::zero(); n];
    for i in order {
        let r = lat.dim(i);
        if r == 0 {
            vol[i] = q(1);
            continue;
        }
        let vs = lat.face(i);
        let pts: Vec<&Vec<Q>> = vs.iter().map(|&v| &p.vertices()[v as usize]).collect();
        let frame = frame_for(&pts, d, r);
        let base = pts[0];
        let y: HashMap<u32, Vec<Q>> = vs
            .iter()
            .map(|&v| {
                let diff: Vec<Q> = p.vertices()[v as usize]
                    .iter()
                    .zip(base)
                    .map(|(a, b)| a - b)
                    .collect();
                (v, frame.coords(&diff))
            })
            .collect();
        let mut acc = Q::zero();
        for j in lat.facets(arr, i) {
            let fv = lat.face(j);
            if fv.contains(&vs[0]) {
                continue;
            }
            let f0 = &y[&fv[0]];
            let mut rows = RowSpace::new();
            for w in &fv[1..] {
                let diff: Vec<Q> = y[w].iter().zip(f0).map(|(a, b)| a - b).collect();
                rows.insert(&to_sparse(&diff));
                if rows.rank() == r - 1 {
                    break;
                }
            }
            let dense: Vec<Vec<Q>> = rows
                .basis()
                .iter()
                .map(|row| {
                    (0..r)
                        .map(|k| row.get(&k).cloned().unwrap_or_else(Q::zero))
                        .collect()
                })
                .collect();
            let normal = nullspace(&dense, r);
            debug_assert_eq!(normal.len(), 1);
            let n = primitive_integer(&normal[0]);
            let h: Q = n
                .iter()
                .zip(f0)
                .map(|(a, b)| Q::from_integer(a.clone()) * b)
                .sum();
            acc += h.abs() * &vol[j];
        }
        vol[i] = acc / q(r as i64);
    }
    vol
}

/// Lattice volume of `p` in its own affine hull.
pub fn lattice_volume(arr: &Arrangement, p: &VPolytope) -> Q {
    let lat = FaceLattice::new(arr, p);
    let vols = face_volumes(arr, p, &lat);
    let top = (0..lat.num_faces())
        .max_by_key(|&i| lat.dim(i))
        .expect("nonempty");
    vols[top].clone()
}

/// Lattice volume of the convex hull of points that form a deformation of
/// the given arrangement.
pub fn lattice_volume_of_points(arr: &Arrangement, points: &[Vec<Q>]) -> crate::error::Result<Q> {
    Ok(lattice_volume(arr, &VPolytope::from_points(arr, points)?))
}

/// Dimension and volume of `p_F` for every arrangement face `F`.
#[derive(Debug, Clone, PartialEq)]
pub struct FaceTable {
    pub dim: Vec<u8>,
    pub vol: Vec<Q>,
}

pub fn face_table(arr: &Arrangement, p: &VPolytope) -> FaceTable {
    let lat = FaceLattice::new(arr, p);
    let vols = face_volumes(arr, p, &lat);
    let n = arr.num_faces();
    FaceTable {
        dim: (0..n).map(|f| lat.dim(lat.of_face(f)) as u8).collect(),
        vol: (0..n).map(|f| vols[lat.of_face(f)].clone()).collect(),
    }
}

use std::collections::HashMap;
use std::sync::OnceLock;

use super::{ArrangementKind, Face, Flat};
use crate::error::{Error, Result};
use crate::rational::Q;

/// Upper bound on `faces × chambers` for the precomputed chamber table.
const TABLE_LIMIT: usize = 8_000_000;

/// Upper bound on `faces²` for the cached face-by-face product table.
const PRODUCT_TABLE_LIMIT: usize = 4_000_000;

/// An arrangement with every face and flat enumerated and indexed.
///
/// Faces are also keyed by their rank vector: the block index of each
/// element of the ground set (`[d]`, or `[±d]` listed as `1..d, -1..-d`).
/// The Tits product then refines rank pairs lexicographically.
#[derive(Debug)]
pub struct Arrangement {
    kind: ArrangementKind,
    faces: Vec<Face>,
    ranks: Vec<Vec<u8>>,
    rank_ix: HashMap<Vec<u8>, u32>,
    face_ix: HashMap<Face, usize>,
    face_dim: Vec<usize>,
    face_supp: Vec<usize>,
    points: Vec<Vec<Q>>,
    int_points: Vec<Vec<i64>>,
    central: usize,
    chambers: Vec<usize>,
    chamber_pos: Vec<Option<usize>>,
    chamber_table: Vec<u32>,
    above: Vec<Vec<u32>>,
    flats: Vec<Flat>,
    flat_ix: HashMap<Flat, usize>,
    flat_dim: Vec<usize>,
    mobius: Vec<Vec<i64>>,
    bottom: usize,
    top: usize,
    product_table: OnceLock<Option<Vec<u32>>>,
    upper: OnceLock<Vec<Vec<u32>>>,
}

fn rank_vector(kind: &ArrangementKind, f: &Face) -> Vec<u8> {
    let d = kind.d();
    match f {
        Face::Composition(b) => {
            let mut r = vec![0u8; d];
            for (i, s) in b.iter().enumerate() {
                for &e in s {
                    r[e as usize - 1] = i as u8;
                }
            }
            r
        }
        Face::Signed { positive, zero } => {
            let full = super::full_signed_blocks(positive, zero);
            let mut r = vec![0u8; 2 * d];
            for (i, s) in full.iter().enumerate() {
                for &e in s {
                    let slot = if e > 0 {
                        e as usize - 1
                    } else {
                        d + (-e) as usize - 1
                    };
                    r[slot] = i as u8;
                }
            }
            r
        }
        Face::Signs(s) => s.iter().map(|&x| (x + 1) as u8).collect(),
    }
}

impl Arrangement {
    pub fn new(kind: ArrangementKind) -> Result<Self> {
        if kind.d() == 0 {
            return Err(Error::Input("d must be at least 1".into()));
        }
        let faces = kind.enumerate_faces(None);
        let dtop = match kind {
            ArrangementKind::BraidA(d)
            | ArrangementKind::TypeB(d)
            | ArrangementKind::Coordinate(d) => d,
        };
        let chambers: Vec<usize> = (0..faces.len())
            .filter(|&i| kind.face_dim(&faces[i]) == dtop)
            .collect();
        if faces.len() * chambers.len() > TABLE_LIMIT {
            return Err(Error::Resource(format!(
                "{kind:?} has {} faces; indexed arrangements are limited to {TABLE_LIMIT} face-chamber pairs",
                faces.len()
            )));
        }
        let ranks: Vec<Vec<u8>> = faces.iter().map(|f| rank_vector(&kind, f)).collect();
        let rank_ix = ranks
            .iter()
            .enumerate()
            .map(|(i, r)| (r.clone(), i as u32))
            .collect();
        let face_ix = faces
            .iter()
            .enumerate()
            .map(|(i, f)| (f.clone(), i))
            .collect();
        let face_dim = faces.iter().map(|f| kind.face_dim(f)).collect();
        let points: Vec<Vec<Q>> = faces.iter().map(|f| kind.interior_point(f)).collect();
        let int_points = points
            .iter()
            .map(|p| {
                p.iter()
                    .map(|x| crate::rational::to_i64(x).expect("interior points are integral"))
                    .collect()
            })
            .collect();
        let flats = kind.enumerate_flats();
        let flat_ix: HashMap<Flat, usize> = flats
            .iter()
            .enumerate()
            .map(|(i, x)| (x.clone(), i))
            .collect();
        let flat_dim = flats.iter().map(|x| kind.flat_dim(x)).collect();
        let face_supp = faces.iter().map(|f| flat_ix[&kind.support(f)]).collect();
        let mut mobius = vec![vec![0i64; flats.len()]; flats.len()];
        for (i, x) in flats.iter().enumerate() {
            for (j, y) in flats.iter().enumerate() {
                if kind.leq(x, y) {
                    let m = kind.mobius(x, y)?;
                    mobius[i][j] = i64::try_from(m)
                        .map_err(|_| Error::Resource("Möbius value overflow".into()))?;
                }
            }
        }
        let central = faces
            .iter()
            .position(|f| *f == kind.central_face())
            .unwrap();
        let mut chamber_pos = vec![None; faces.len()];
        for (c, &f) in chambers.iter().enumerate() {
            chamber_pos[f] = Some(c);
        }
        let bottom = flat_ix[&kind.bottom()];
        let top = flat_ix[&kind.top()];
        let mut a = Self {
            kind,
            faces,
            ranks,
            rank_ix,
            face_ix,
            face_dim,
            face_supp,
            points,
            int_points,
            central,
            chambers,
            chamber_pos,
            chamber_table: Vec::new(),
            above: Vec::new(),
            flats,
            flat_ix,
            flat_dim,
            mobius,
            bottom,
            top,
            product_table: OnceLock::new(),
            upper: OnceLock::new(),
        };
        let nc = a.chambers.len();
        let mut table = vec![0u32; a.faces.len() * nc];
        let mut above = vec![Vec::new(); a.faces.len()];
        for f in 0..a.faces.len() {
            for c in 0..nc {
                let g = a.product(f, a.chambers[c]);
                let gc = a.chamber_pos[g].expect("product with a chamber is a chamber") as u32;
                table[f * nc + c] = gc;
                if gc as usize == c {
                    above[f].push(c as u32);
                }
            }
        }
        a.chamber_table = table;
        a.above = above;
        Ok(a)
    }

    pub fn kind(&self) -> ArrangementKind {
        self.kind
    }

    pub fn d(&self) -> usize {
        self.kind.d()
    }

    pub fn num_faces(&self) -> usize {
        self.faces.len()
    }

    pub fn face(&self, i: usize) -> &Face {
        &self.faces[i]
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn face_index(&self, f: &Face) -> Option<usize> {
        self.face_ix.get(f).copied()
    }

    pub fn parse_face_index(&self, s: &str) -> Result<usize> {
        let f = self.kind.parse_face(s)?;
        Ok(self.face_ix[&f])
    }

    pub fn face_dim(&self, i: usize) -> usize {
        self.face_dim[i]
    }

    pub fn support(&self, i: usize) -> usize {
        self.face_supp[i]
    }

    pub fn interior_point(&self, i: usize) -> &[Q] {
        &self.points[i]
    }

    /// The interior point of face `i` as machine integers.
    pub fn interior_point_int(&self, i: usize) -> &[i64] {
        &self.int_points[i]
    }

    pub fn central(&self) -> usize {
        self.central
    }

    /// Face indices of the chambers.
    pub fn chambers(&self) -> &[usize] {
        &self.chambers
    }

    pub fn num_chambers(&self) -> usize {
        self.chambers.len()
    }

    /// Chamber number of the face `i`, if it is a chamber.
    pub fn chamber_position(&self, i: usize) -> Option<usize> {
        self.chamber_pos[i]
    }

    /// Tits product on face indices.
    pub fn product(&self, f: usize, g: usize) -> usize {
        if let ArrangementKind::Coordinate(_) = self.kind {
            let r: Vec<u8> = self.ranks[f]
                .iter()
                .zip(&self.ranks[g])
                .map(|(&a, &b)| if a != 1 { a } else { b })
                .collect();
            return self.rank_ix[&r] as usize;
        }
        let rf = &self.ranks[f];
        let rg = &self.ranks[g];
        let mut keys: Vec<u16> = rf
            .iter()
            .zip(rg)
            .map(|(&a, &b)| (a as u16) << 8 | b as u16)
            .collect();
        let mut sorted = keys.clone();
        sorted.sort_unstable();
        sorted.dedup();
        for k in keys.iter_mut() {
            *k = sorted.binary_search(k).unwrap() as u16;
        }
        let r: Vec<u8> = keys.into_iter().map(|k| k as u8).collect();
        self.rank_ix[&r] as usize
    }

    /// Tits product through a cached table when the arrangement is small
    /// enough, falling back to [`Arrangement::product`].
    pub fn fast_product(&self, f: usize, g: usize) -> usize {
        match self.product_table() {
            Some(t) => t[f * self.faces.len() + g] as usize,
            None => self.product(f, g),
        }
    }

    fn product_table(&self) -> Option<&Vec<u32>> {
        self.product_table
            .get_or_init(|| {
                let n = self.faces.len();
                (n * n <= PRODUCT_TABLE_LIMIT).then(|| {
                    let mut t = vec![0u32; n * n];
                    for f in 0..n {
                        for g in 0..n {
                            t[f * n + g] = self.product(f, g) as u32;
                        }
                    }
                    t
                })
            })
            .as_ref()
    }

    /// Faces `G` with `f ≤ G`, in index order.
    pub fn faces_above(&self, f: usize) -> &[u32] {
        &self.upper.get_or_init(|| {
            let n = self.faces.len();
            (0..n)
                .map(|a| {
                    (0..n)
                        .filter(|&b| {
                            self.face_dim[b] >= self.face_dim[a] && self.fast_product(a, b) == b
                        })
                        .map(|b| b as u32)
                        .collect()
                })
                .collect()
        })[f]
    }

    /// Chamber number of `F·C` for chamber number `c`.
    pub fn act_on_chamber(&self, f: usize, c: usize) -> usize {
        self.chamber_table[f * self.chambers.len() + c] as usize
    }

    /// Chamber numbers of the chambers having `f` as a face.
    pub fn chambers_above(&self, f: usize) -> &[u32] {
        &self.above[f]
    }

    pub fn face_leq(&self, f: usize, g: usize) -> bool {
        self.fast_product(f, g) == g
    }

    pub fn num_flats(&self) -> usize {
        self.flats.len()
    }

    pub fn flat(&self, i: usize) -> &Flat {
        &self.flats[i]
    }

    pub fn flats(&self) -> &[Flat] {
        &self.flats
    }

    pub fn flat_index(&self, x: &Flat) -> Option<usize> {
        self.flat_ix.get(x).copied()
    }

    pub fn parse_flat_index(&self, s: &str) -> Result<usize> {
        let x = self.kind.parse_flat(s)?;
        Ok(self.flat_ix[&x])
    }

    pub fn flat_dim(&self, i: usize) -> usize {
        self.flat_dim[i]
    }

    pub fn flat_leq(&self, x: usize, y: usize) -> bool {
        self.mobius[x][y] != 0
    }

    /// `μ(X, Y)`, zero when `X` is not below `Y`.
    pub fn mobius(&self, x: usize, y: usize) -> i64 {
        self.mobius[x][y]
    }

    pub fn flat_join(&self, x: usize, y: usize) -> usize {
        self.flat_ix[&self.kind.join(&self.flats[x], &self.flats[y])]
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn face_string(&self, i: usize) -> String {
        self.kind.face_to_string(&self.faces[i])
    }

    pub fn flat_string(&self, i: usize) -> String {
        self.kind.flat_to_string(&self.flats[i])
    }

    /// Faces with support exactly `x`.
    pub fn faces_with_support(&self, x: usize) -> Vec<usize> {
        (0..self.faces.len())
            .filter(|&f| self.face_supp[f] == x)
            .collect()
    }
}

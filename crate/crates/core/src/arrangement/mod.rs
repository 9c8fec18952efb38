//! Faces, flats, Tits product, supports and Möbius functions of the braid
//! arrangement `A_d`, the type B Coxeter arrangement and the coordinate
//! arrangement `C_d`.
//!
//! Faces and flats are plain values. [`ArrangementKind`] carries the
//! combinatorial rules; [`Arrangement`] enumerates everything once and
//! indexes it for the algebraic layers.

mod encode;
mod indexed;
mod oracle;

pub use indexed::Arrangement;
pub use oracle::cross_oracle_check;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{precondition, Result};
use crate::rational::{q, qr, Q};

/// Which arrangement, and the ambient dimension `d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ArrangementKind {
    BraidA(usize),
    TypeB(usize),
    Coordinate(usize),
}

/// A closed cone of the arrangement.
///
/// `Composition` blocks are sorted internally and kept in the given order.
/// `Signed` stores the blocks before the zero block (`positive`) and the
/// absolute values of the zero block; the blocks after it are the negatives
/// of `positive` in reverse order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Face {
    Composition(Vec<Vec<i32>>),
    Signed {
        positive: Vec<Vec<i32>>,
        zero: Vec<i32>,
    },
    Signs(Vec<i8>),
}

/// An intersection of hyperplanes.
///
/// `Signed` keeps the zero block as absolute values and one representative
/// per nonzero pair, normalized so its element of least absolute value is
/// positive. `Zeros(S)` is the coordinate flat `{x_i = 0 : i in S}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Flat {
    Partition(Vec<Vec<i32>>),
    Signed {
        zero: Vec<i32>,
        blocks: Vec<Vec<i32>>,
    },
    Zeros(Vec<i32>),
}

impl Flat {
    /// Braid flat from arbitrary blocks; sorts into canonical form.
    pub fn partition(blocks: Vec<Vec<i32>>) -> Flat {
        let mut blocks = blocks;
        for b in blocks.iter_mut() {
            b.sort_unstable();
        }
        blocks.sort_by_key(|b| b[0]);
        Flat::Partition(blocks)
    }

    /// Type B flat from a zero block (absolute values) and nonzero blocks,
    /// each given by either member of its pair.
    pub fn signed(zero: Vec<i32>, blocks: Vec<Vec<i32>>) -> Flat {
        signed_flat(zero, blocks)
    }
}

/// Integer polynomial in `t`, coefficient of `t^k` at index `k`.
pub type IntPoly = Vec<BigInt>;

fn mu_a(k: usize) -> BigInt {
    // (-1)^(k-1) (k-1)!
    let f = crate::rational::factorial(k as u64 - 1);
    if k % 2 == 1 {
        f
    } else {
        -f
    }
}

fn mu_b(k: usize) -> BigInt {
    // (-1)^k (2k-1)!!
    let mut f = BigInt::one();
    let mut j = 1u64;
    while j < 2 * k as u64 {
        f *= j;
        j += 2;
    }
    if k % 2 == 0 {
        f
    } else {
        -f
    }
}

fn sort_abs(b: &mut [i32]) {
    b.sort_by_key(|&x| (x.abs(), x < 0));
}

fn neg_block(b: &[i32]) -> Vec<i32> {
    let mut v: Vec<i32> = b.iter().map(|x| -x).collect();
    sort_abs(&mut v);
    v
}

/// Canonical representative of a nonzero signed block pair.
fn norm_pair(b: &[i32]) -> Vec<i32> {
    let mut v = b.to_vec();
    sort_abs(&mut v);
    if v[0] < 0 {
        v = neg_block(&v);
    }
    v
}

fn signed_flat(zero: Vec<i32>, blocks: Vec<Vec<i32>>) -> Flat {
    let mut zero = zero;
    zero.sort_unstable();
    let mut blocks: Vec<Vec<i32>> = blocks.iter().map(|b| norm_pair(b)).collect();
    blocks.sort_by_key(|b| b[0].abs());
    Flat::Signed { zero, blocks }
}

/// Full ordered block list of a signed composition of `[±d]`.
pub(crate) fn full_signed_blocks(positive: &[Vec<i32>], zero: &[i32]) -> Vec<Vec<i32>> {
    let mut out: Vec<Vec<i32>> = positive.to_vec();
    if !zero.is_empty() {
        let mut z: Vec<i32> = zero.iter().flat_map(|&a| [a, -a]).collect();
        sort_abs(&mut z);
        out.push(z);
    }
    for b in positive.iter().rev() {
        out.push(neg_block(b));
    }
    out
}

/// Canonical signed face from a symmetric ordered block list.
pub(crate) fn signed_face_from_full(blocks: Vec<Vec<i32>>) -> Face {
    let zpos = blocks
        .iter()
        .position(|b| b.iter().any(|x| b.contains(&-x)));
    let (positive, zero) = match zpos {
        Some(z) => {
            let mut zero: Vec<i32> = blocks[z].iter().filter(|&&x| x > 0).copied().collect();
            zero.sort_unstable();
            (blocks[..z].to_vec(), zero)
        }
        None => (blocks[..blocks.len() / 2].to_vec(), Vec::new()),
    };
    let positive = positive
        .into_iter()
        .map(|mut b| {
            sort_abs(&mut b);
            b
        })
        .collect();
    Face::Signed { positive, zero }
}

/// Refines each block of `f` by the blocks of `g`, in `g`'s order.
fn refine(f: &[Vec<i32>], g: &[Vec<i32>]) -> Vec<Vec<i32>> {
    let mut out = Vec::new();
    for s in f {
        for t in g {
            let b: Vec<i32> = s.iter().filter(|x| t.contains(x)).copied().collect();
            if !b.is_empty() {
                out.push(b);
            }
        }
    }
    out
}

/// Set partitions of `elems` as lists of blocks, by restricted growth strings.
pub(crate) fn set_partitions(elems: &[i32]) -> Vec<Vec<Vec<i32>>> {
    let n = elems.len();
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    let mut rgs = vec![0usize; n];
    loop {
        let k = rgs.iter().max().unwrap() + 1;
        let mut blocks = vec![Vec::new(); k];
        for (i, &b) in rgs.iter().enumerate() {
            blocks[b].push(elems[i]);
        }
        out.push(blocks);
        // next restricted growth string
        let mut i = n - 1;
        loop {
            if i == 0 {
                return out;
            }
            let m = rgs[..i].iter().max().unwrap() + 1;
            if rgs[i] < m {
                rgs[i] += 1;
                for x in rgs.iter_mut().skip(i + 1) {
                    *x = 0;
                }
                break;
            }
            i -= 1;
        }
    }
}

pub(crate) fn permutations_of<T: Clone>(items: &[T]) -> Vec<Vec<T>> {
    if items.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let x = rest.remove(i);
        for mut p in permutations_of(&rest) {
            p.insert(0, x.clone());
            out.push(p);
        }
    }
    out
}

/// All sign assignments of a block, every element possibly negated.
fn signings(b: &[i32]) -> Vec<Vec<i32>> {
    let mut out = Vec::new();
    for mask in 0u32..(1 << b.len()) {
        let mut v: Vec<i32> = b
            .iter()
            .enumerate()
            .map(|(i, &x)| if mask >> i & 1 == 1 { -x } else { x })
            .collect();
        sort_abs(&mut v);
        out.push(v);
    }
    out
}

fn subsets(d: usize) -> Vec<Vec<i32>> {
    (0u32..(1 << d))
        .map(|m| (1..=d as i32).filter(|i| m >> (i - 1) & 1 == 1).collect())
        .collect()
}

impl ArrangementKind {
    pub fn d(&self) -> usize {
        match *self {
            Self::BraidA(d) | Self::TypeB(d) | Self::Coordinate(d) => d,
        }
    }

    /// One-letter tag used in serialized data.
    pub fn letter(&self) -> &'static str {
        match self {
            Self::BraidA(_) => "A",
            Self::TypeB(_) => "B",
            Self::Coordinate(_) => "C",
        }
    }

    pub fn from_letter(s: &str, d: usize) -> Result<Self> {
        if d == 0 {
            return crate::error::input("d must be at least 1");
        }
        match s.to_ascii_uppercase().as_str() {
            "A" | "BRAID" => Ok(Self::BraidA(d)),
            "B" | "TYPEB" => Ok(Self::TypeB(d)),
            "C" | "CUBE" | "COORDINATE" => Ok(Self::Coordinate(d)),
            _ => crate::error::input(format!("unknown arrangement '{s}'")),
        }
    }

    pub fn central_face(&self) -> Face {
        match *self {
            Self::BraidA(d) => Face::Composition(vec![(1..=d as i32).collect()]),
            Self::TypeB(d) => Face::Signed {
                positive: Vec::new(),
                zero: (1..=d as i32).collect(),
            },
            Self::Coordinate(d) => Face::Signs(vec![0; d]),
        }
    }

    pub fn bottom(&self) -> Flat {
        match *self {
            Self::BraidA(d) => Flat::Partition(vec![(1..=d as i32).collect()]),
            Self::TypeB(d) => Flat::Signed {
                zero: (1..=d as i32).collect(),
                blocks: Vec::new(),
            },
            Self::Coordinate(d) => Flat::Zeros((1..=d as i32).collect()),
        }
    }

    pub fn top(&self) -> Flat {
        match *self {
            Self::BraidA(d) => Flat::Partition((1..=d as i32).map(|i| vec![i]).collect()),
            Self::TypeB(d) => Flat::Signed {
                zero: Vec::new(),
                blocks: (1..=d as i32).map(|i| vec![i]).collect(),
            },
            Self::Coordinate(_) => Flat::Zeros(Vec::new()),
        }
    }

    pub fn face_dim(&self, f: &Face) -> usize {
        match f {
            Face::Composition(b) => b.len(),
            Face::Signed { positive, .. } => positive.len(),
            Face::Signs(s) => s.iter().filter(|&&x| x != 0).count(),
        }
    }

    pub fn flat_dim(&self, x: &Flat) -> usize {
        match x {
            Flat::Partition(b) => b.len(),
            Flat::Signed { blocks, .. } => blocks.len(),
            Flat::Zeros(s) => self.d() - s.len(),
        }
    }

    /// Checks that `f` is a well-formed face of this arrangement.
    pub fn validate_face(&self, f: &Face) -> Result<()> {
        let d = self.d() as i32;
        let ok = match (self, f) {
            (Self::BraidA(_), Face::Composition(b)) => {
                let mut all: Vec<i32> = b.iter().flatten().copied().collect();
                all.sort_unstable();
                b.iter().all(|x| !x.is_empty()) && all == (1..=d).collect::<Vec<_>>()
            }
            (Self::TypeB(_), Face::Signed { positive, zero }) => {
                let mut abs: Vec<i32> = positive
                    .iter()
                    .flatten()
                    .map(|x| x.abs())
                    .chain(zero.iter().copied())
                    .collect();
                abs.sort_unstable();
                positive.iter().all(|x| !x.is_empty())
                    && zero.iter().all(|&z| z > 0)
                    && abs == (1..=d).collect::<Vec<_>>()
            }
            (Self::Coordinate(n), Face::Signs(s)) => {
                s.len() == *n && s.iter().all(|x| (-1..=1).contains(x))
            }
            _ => false,
        };
        if ok {
            Ok(())
        } else {
            precondition(format!("{f:?} is not a face of {self:?}"))
        }
    }

    pub fn validate_flat(&self, x: &Flat) -> Result<()> {
        let d = self.d() as i32;
        let ok = match (self, x) {
            (Self::BraidA(_), Flat::Partition(b)) => {
                let mut all: Vec<i32> = b.iter().flatten().copied().collect();
                all.sort_unstable();
                b.iter().all(|x| !x.is_empty()) && all == (1..=d).collect::<Vec<_>>()
            }
            (Self::TypeB(_), Flat::Signed { zero, blocks }) => {
                let mut abs: Vec<i32> = blocks
                    .iter()
                    .flatten()
                    .map(|x| x.abs())
                    .chain(zero.iter().copied())
                    .collect();
                abs.sort_unstable();
                blocks.iter().all(|x| !x.is_empty()) && abs == (1..=d).collect::<Vec<_>>()
            }
            (Self::Coordinate(_), Flat::Zeros(s)) => s.iter().all(|&i| 1 <= i && i <= d),
            _ => false,
        };
        if ok {
            Ok(())
        } else {
            precondition(format!("{x:?} is not a flat of {self:?}"))
        }
    }

    /// The Tits product `FG`.
    pub fn tits_product(&self, f: &Face, g: &Face) -> Face {
        match (f, g) {
            (Face::Composition(a), Face::Composition(b)) => Face::Composition(refine(a, b)),
            (
                Face::Signed {
                    positive: p1,
                    zero: z1,
                },
                Face::Signed {
                    positive: p2,
                    zero: z2,
                },
            ) => {
                let fa = full_signed_blocks(p1, z1);
                let ga = full_signed_blocks(p2, z2);
                signed_face_from_full(refine(&fa, &ga))
            }
            (Face::Signs(a), Face::Signs(b)) => Face::Signs(
                a.iter()
                    .zip(b)
                    .map(|(&x, &y)| if x != 0 { x } else { y })
                    .collect(),
            ),
            _ => panic!("tits_product: faces of different arrangement kinds"),
        }
    }

    /// Face order: `F <= G` iff `FG = G`.
    pub fn face_leq(&self, f: &Face, g: &Face) -> bool {
        &self.tits_product(f, g) == g
    }

    pub fn support(&self, f: &Face) -> Flat {
        match f {
            Face::Composition(b) => {
                let mut blocks = b.clone();
                blocks.sort_by_key(|x| x[0]);
                Flat::Partition(blocks)
            }
            Face::Signed { positive, zero } => signed_flat(zero.clone(), positive.clone()),
            Face::Signs(s) => Flat::Zeros(
                (1..=s.len() as i32)
                    .filter(|&i| s[i as usize - 1] == 0)
                    .collect(),
            ),
        }
    }

    /// Blocks of a flat as subsets of the ground set `[d]` or `[±d]`.
    fn ground_blocks(x: &Flat) -> Vec<Vec<i32>> {
        match x {
            Flat::Partition(b) => b.clone(),
            Flat::Signed { zero, blocks } => {
                let mut out = Vec::new();
                if !zero.is_empty() {
                    out.push(zero.iter().flat_map(|&a| [a, -a]).collect());
                }
                for b in blocks {
                    out.push(b.clone());
                    out.push(neg_block(b));
                }
                out
            }
            Flat::Zeros(_) => unreachable!(),
        }
    }

    /// Flat order: `X <= Y` iff `X` is contained in `Y`, i.e. `Y` refines `X`.
    pub fn leq(&self, x: &Flat, y: &Flat) -> bool {
        if let (Flat::Zeros(s), Flat::Zeros(t)) = (x, y) {
            return t.iter().all(|i| s.contains(i));
        }
        let xb = Self::ground_blocks(x);
        let id = |e: i32| xb.iter().position(|b| b.contains(&e));
        Self::ground_blocks(y).iter().all(|b| {
            let first = id(b[0]);
            b.iter().all(|&e| id(e) == first)
        })
    }

    /// Join in the lattice of flats: the coarsest common refinement.
    pub fn join(&self, x: &Flat, y: &Flat) -> Flat {
        match (x, y) {
            (Flat::Zeros(s), Flat::Zeros(t)) => {
                Flat::Zeros(s.iter().filter(|i| t.contains(i)).copied().collect())
            }
            (Flat::Partition(a), Flat::Partition(b)) => {
                let mut blocks = refine(a, b);
                for b in blocks.iter_mut() {
                    b.sort_unstable();
                }
                blocks.sort_by_key(|b| b[0]);
                Flat::Partition(blocks)
            }
            (Flat::Signed { .. }, Flat::Signed { .. }) => {
                let blocks = refine(&Self::ground_blocks(x), &Self::ground_blocks(y));
                let mut zero = Vec::new();
                let mut pairs = Vec::new();
                for b in blocks {
                    if b.iter().any(|e| b.contains(&-e)) {
                        zero.extend(b.iter().filter(|&&e| e > 0));
                    } else {
                        let n = norm_pair(&b);
                        if !pairs.contains(&n) {
                            pairs.push(n);
                        }
                    }
                }
                signed_flat(zero, pairs)
            }
            _ => panic!("join: flats of different arrangement kinds"),
        }
    }

    /// Möbius function of the lattice of flats via the product formulas.
    pub fn mobius(&self, x: &Flat, y: &Flat) -> Result<BigInt> {
        if !self.leq(x, y) {
            return precondition("mobius(X, Y) requires X <= Y");
        }
        Ok(match (x, y) {
            (Flat::Zeros(s), Flat::Zeros(t)) => {
                if (s.len() - t.len()) % 2 == 0 {
                    BigInt::one()
                } else {
                    -BigInt::one()
                }
            }
            (Flat::Partition(xb), Flat::Partition(yb)) => xb
                .iter()
                .map(|b| mu_a(yb.iter().filter(|c| b.contains(&c[0])).count()))
                .product(),
            (
                Flat::Signed {
                    zero: xz,
                    blocks: xb,
                },
                Flat::Signed { blocks: yb, .. },
            ) => {
                let k0 = yb.iter().filter(|c| xz.contains(&c[0].abs())).count();
                let mut m = mu_b(k0);
                for b in xb {
                    let abs: Vec<i32> = b.iter().map(|e| e.abs()).collect();
                    m *= mu_a(yb.iter().filter(|c| abs.contains(&c[0].abs())).count());
                }
                m
            }
            _ => unreachable!(),
        })
    }

    /// Canonical relative-interior point of a face.
    pub fn interior_point(&self, f: &Face) -> Vec<Q> {
        let d = self.d();
        let mut x = vec![q(0); d];
        match f {
            Face::Composition(b) => {
                let k = b.len();
                for (i, s) in b.iter().enumerate() {
                    for &j in s {
                        x[j as usize - 1] = q((k - 1 - i) as i64);
                    }
                }
            }
            Face::Signed { positive, .. } => {
                let m = positive.len();
                for (i, s) in positive.iter().enumerate() {
                    for &j in s {
                        let v = q((m - i) as i64);
                        x[j.unsigned_abs() as usize - 1] = if j > 0 { v } else { -v };
                    }
                }
            }
            Face::Signs(s) => {
                for (i, &e) in s.iter().enumerate() {
                    x[i] = q(e as i64);
                }
            }
        }
        x
    }

    /// The face whose relative interior contains `x`.
    pub fn face_of_point(&self, x: &[Q]) -> Face {
        match self {
            Self::BraidA(d) => {
                let mut vals: BTreeMap<Q, Vec<i32>> = BTreeMap::new();
                for j in 1..=*d {
                    vals.entry(x[j - 1].clone()).or_default().push(j as i32);
                }
                Face::Composition(vals.into_values().rev().collect())
            }
            Self::TypeB(d) => {
                let mut vals: BTreeMap<Q, Vec<i32>> = BTreeMap::new();
                for j in 1..=*d {
                    vals.entry(x[j - 1].clone()).or_default().push(j as i32);
                    vals.entry(-x[j - 1].clone()).or_default().push(-(j as i32));
                }
                let mut blocks: Vec<Vec<i32>> = vals.into_values().rev().collect();
                for b in blocks.iter_mut() {
                    sort_abs(b);
                }
                signed_face_from_full(blocks)
            }
            Self::Coordinate(_) => Face::Signs(
                x.iter()
                    .map(|v| match v.cmp(&q(0)) {
                        std::cmp::Ordering::Less => -1,
                        std::cmp::Ordering::Equal => 0,
                        std::cmp::Ordering::Greater => 1,
                    })
                    .collect(),
            ),
        }
    }

    /// Step size for the geometric product oracle, small enough for all
    /// canonical interior points.
    pub fn epsilon(&self) -> Q {
        let d = self.d() as i64;
        qr(1, 4 * d * d)
    }

    /// Geometric Tits product: the face containing `v_F + eps v_G`.
    pub fn tits_product_geometric(&self, f: &Face, g: &Face) -> Face {
        let e = self.epsilon();
        let vf = self.interior_point(f);
        let vg = self.interior_point(g);
        let p: Vec<Q> = vf.iter().zip(&vg).map(|(a, b)| a + &e * b).collect();
        self.face_of_point(&p)
    }

    /// All faces, optionally of one dimension, sorted by dimension then encoding.
    pub fn enumerate_faces(&self, dim_filter: Option<usize>) -> Vec<Face> {
        let d = self.d();
        let ground: Vec<i32> = (1..=d as i32).collect();
        let mut out: Vec<Face> = match self {
            Self::BraidA(_) => set_partitions(&ground)
                .into_iter()
                .flat_map(|p| permutations_of(&p).into_iter().map(Face::Composition))
                .collect(),
            Self::TypeB(_) => {
                let mut v = Vec::new();
                for z in subsets(d) {
                    let rest: Vec<i32> =
                        ground.iter().filter(|i| !z.contains(i)).copied().collect();
                    for p in set_partitions(&rest) {
                        if p.is_empty() {
                            v.push(Face::Signed {
                                positive: Vec::new(),
                                zero: z.clone(),
                            });
                            continue;
                        }
                        for order in permutations_of(&p) {
                            for signed in signed_choices(&order) {
                                v.push(Face::Signed {
                                    positive: signed,
                                    zero: z.clone(),
                                });
                            }
                        }
                    }
                }
                v
            }
            Self::Coordinate(_) => {
                let mut v = vec![Vec::new()];
                for _ in 0..d {
                    v = v
                        .into_iter()
                        .flat_map(|s: Vec<i8>| {
                            [-1i8, 0, 1].into_iter().map(move |e| {
                                let mut t = s.clone();
                                t.push(e);
                                t
                            })
                        })
                        .collect();
                }
                v.into_iter().map(Face::Signs).collect()
            }
        };
        if let Some(k) = dim_filter {
            out.retain(|f| self.face_dim(f) == k);
        }
        out.sort_by_cached_key(|f| (self.face_dim(f), self.face_sort_key(f)));
        out
    }

    fn face_sort_key(&self, f: &Face) -> Vec<Vec<i32>> {
        match f {
            Face::Composition(b) => b.clone(),
            Face::Signed { positive, zero } => {
                let mut k = vec![zero.clone()];
                k.extend(
                    positive
                        .iter()
                        .map(|b| b.iter().map(|x| 2 * x.abs() + i32::from(*x < 0)).collect()),
                );
                k
            }
            Face::Signs(s) => vec![s
                .iter()
                .map(|&x| match x {
                    0 => 0,
                    1 => 1,
                    _ => 2,
                })
                .collect()],
        }
    }

    /// All flats, sorted by dimension then encoding.
    pub fn enumerate_flats(&self) -> Vec<Flat> {
        let d = self.d();
        let ground: Vec<i32> = (1..=d as i32).collect();
        let mut out: Vec<Flat> = match self {
            Self::BraidA(_) => set_partitions(&ground)
                .into_iter()
                .map(|mut p| {
                    p.sort_by_key(|b| b[0]);
                    Flat::Partition(p)
                })
                .collect(),
            Self::TypeB(_) => {
                let mut v = Vec::new();
                for z in subsets(d) {
                    let rest: Vec<i32> =
                        ground.iter().filter(|i| !z.contains(i)).copied().collect();
                    for p in set_partitions(&rest) {
                        let choices: Vec<Vec<Vec<i32>>> = p
                            .iter()
                            .map(|b| signings(b).into_iter().filter(|s| s[0] > 0).collect())
                            .collect();
                        for pick in cartesian(&choices) {
                            v.push(signed_flat(z.clone(), pick));
                        }
                    }
                }
                v
            }
            Self::Coordinate(_) => subsets(d).into_iter().map(Flat::Zeros).collect(),
        };
        out.sort_by_cached_key(|x| (self.flat_dim(x), format!("{x:?}")));
        out
    }

    /// `χ(A^X, t) = Σ_{Y <= X} μ(Y, X) t^{dim Y}`; the whole arrangement when `under` is `None`.
    pub fn characteristic_polynomial(&self, under: Option<&Flat>) -> Result<IntPoly> {
        let top = self.top();
        let x = under.unwrap_or(&top);
        self.validate_flat(x)?;
        let mut p: IntPoly = vec![BigInt::zero(); self.d() + 1];
        for y in self.enumerate_flats() {
            if self.leq(&y, x) {
                p[self.flat_dim(&y)] += self.mobius(&y, x)?;
            }
        }
        while p.len() > 1 && p.last().is_some_and(|c| c.is_zero()) {
            p.pop();
        }
        Ok(p)
    }
}

fn signed_choices(order: &[Vec<i32>]) -> Vec<Vec<Vec<i32>>> {
    let choices: Vec<Vec<Vec<i32>>> = order.iter().map(|b| signings(b)).collect();
    cartesian(&choices)
}

pub(crate) fn cartesian<T: Clone>(choices: &[Vec<T>]) -> Vec<Vec<T>> {
    let mut out = vec![Vec::new()];
    for c in choices {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<T>| {
                c.iter().map(move |x| {
                    let mut v = prefix.clone();
                    v.push(x.clone());
                    v
                })
            })
            .collect();
    }
    out
}

/// Evaluates an integer polynomial at a rational point.
pub fn eval_int_poly(p: &IntPoly, t: &Q) -> Q {
    p.iter()
        .rev()
        .fold(q(0), |acc, c| acc * t + Q::from_integer(c.clone()))
}

#[cfg(test)]
mod tests;

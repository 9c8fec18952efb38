//! Formal combinations of polytope classes, the cone-weight embedding `Φ`,
//! and the right action of the Tits algebra.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::rc::Rc;

use num_traits::{One, Zero};
use serde_json::{json, Value};

use super::lattice::{face_table, FaceTable};
use super::VPolytope;
use crate::arrangement::{Arrangement, ArrangementKind};
use crate::error::{precondition, Error, Result};
use crate::linalg::{inverse, SparseVec};
use crate::rational::{binom_q, fmt_q, pow_q, q, Q};
use crate::titsalgebra::TitsElement;

fn mismatch(a: ArrangementKind, b: ArrangementKind) -> Error {
    Error::ArrangementMismatch(format!("{a:?}"), format!("{b:?}"))
}

/// `Σ c_p [p]` over translation-normalized deformations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PiElement {
    kind: ArrangementKind,
    terms: BTreeMap<VPolytope, Q>,
}

impl PiElement {
    pub fn zero(arr: &Arrangement) -> Self {
        Self {
            kind: arr.kind(),
            terms: BTreeMap::new(),
        }
    }

    /// `1 = [{0}]`.
    pub fn one(arr: &Arrangement) -> Self {
        Self::class(&VPolytope::origin(arr))
    }

    /// `[p]`.
    pub fn class(p: &VPolytope) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(p.normalized(), Q::one());
        Self {
            kind: p.kind(),
            terms,
        }
    }

    pub fn from_terms(
        arr: &Arrangement,
        terms: impl IntoIterator<Item = (VPolytope, Q)>,
    ) -> Result<Self> {
        let mut x = Self::zero(arr);
        for (p, c) in terms {
            if p.kind() != arr.kind() {
                return Err(mismatch(p.kind(), arr.kind()));
            }
            x.add_term(p, c);
        }
        Ok(x)
    }

    fn add_term(&mut self, p: VPolytope, c: Q) {
        if c.is_zero() {
            return;
        }
        let key = p.normalized();
        let e = self.terms.entry(key.clone()).or_insert_with(Q::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn kind(&self) -> ArrangementKind {
        self.kind
    }

    pub fn terms(&self) -> impl Iterator<Item = (&VPolytope, &Q)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Sum of the coefficients, the degree-0 part.
    pub fn augmentation(&self) -> Q {
        self.terms.values().sum()
    }

    fn same(&self, o: &Self) -> Result<()> {
        if self.kind == o.kind {
            Ok(())
        } else {
            Err(mismatch(self.kind, o.kind))
        }
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.same(o)?;
        let mut x = self.clone();
        for (p, c) in &o.terms {
            x.add_term(p.clone(), c.clone());
        }
        Ok(x)
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.add(&o.scale(&q(-1)))
    }

    pub fn scale(&self, a: &Q) -> Self {
        if a.is_zero() {
            return Self {
                kind: self.kind,
                terms: BTreeMap::new(),
            };
        }
        Self {
            kind: self.kind,
            terms: self.terms.iter().map(|(p, c)| (p.clone(), c * a)).collect(),
        }
    }

    /// `δ_λ x = Σ c_p [λp]`.
    pub fn dilate(&self, arr: &Arrangement, lambda: &Q) -> Result<Self> {
        let mut x = Self::zero(arr);
        for (p, c) in &self.terms {
            x.add_term(p.dilate(arr, lambda)?, c.clone());
        }
        Ok(x)
    }

    /// `[{face, coeff}]` lists keyed by polytope JSON.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(p, c)| json!({"polytope": p.to_json(), "coeff": fmt_q(c)}))
                .collect(),
        )
    }
}

/// `[p]·[q] = [p + q]`, extended bilinearly.
pub fn pi_multiply(arr: &Arrangement, x: &PiElement, y: &PiElement) -> Result<PiElement> {
    x.same(y)?;
    let mut out = PiElement::zero(arr);
    for (p, a) in &x.terms {
        for (r, b) in &y.terms {
            out.add_term(p.minkowski(arr, r)?, a * b);
        }
    }
    Ok(out)
}

/// `x · e = Σ c_p e^F [p_F]`.
pub fn module_act(arr: &Arrangement, x: &PiElement, e: &TitsElement) -> Result<PiElement> {
    if x.kind != e.kind() {
        return Err(mismatch(x.kind, e.kind()));
    }
    let mut out = PiElement::zero(arr);
    for (p, a) in &x.terms {
        for (f, b) in e.terms() {
            out.add_term(p.face_max(arr, f)?, a * b);
        }
    }
    Ok(out)
}

/// `log[p] = Σ_{k=1}^{dim p} (-1)^{k+1}/k ([p] - 1)^k`, expanded as a
/// combination of dilates `[jp]`.
pub fn log_class(arr: &Arrangement, p: &VPolytope) -> Result<PiElement> {
    let m = p.dim();
    let mut out = PiElement::zero(arr);
    for j in 0..=m {
        let mut a = Q::zero();
        for k in j.max(1)..=m {
            let sign = if (k + 1 + k - j) % 2 == 0 { 1 } else { -1 };
            a += q(sign) * binom_q(&q(k as i64), j) / q(k as i64);
        }
        out.add_term(p.dilate(arr, &q(j as i64))?, a);
    }
    Ok(out)
}

/// `exp(x) = Σ_k x^k / k!` for `x` with zero degree-0 part.
pub fn exp_class(arr: &Arrangement, x: &PiElement) -> Result<PiElement> {
    if !x.augmentation().is_zero() {
        return precondition("exp is defined on elements with zero degree-0 part");
    }
    let mut out = PiElement::one(arr);
    let mut pw = PiElement::one(arr);
    for k in 1..=arr.d() {
        pw = pi_multiply(arr, &pw, x)?;
        if pw.is_zero() {
            break;
        }
        out = out.add(&pw.scale(&Q::from_integer(crate::rational::factorial(k as u64)).recip()))?;
    }
    Ok(out)
}

/// The degree-`r` part of `x`: the `λ^r` coefficient of `δ_λ x`, recovered
/// by interpolating over `λ = 1, ..., d+1`.
pub fn graded_component(arr: &Arrangement, x: &PiElement, r: usize) -> Result<PiElement> {
    let d = arr.d();
    if r > d {
        return Ok(PiElement::zero(arr));
    }
    let vander: Vec<Vec<Q>> = (1..=d + 1)
        .map(|l| (0..=d).map(|k| pow_q(&q(l as i64), k)).collect())
        .collect();
    let inv = inverse(&vander).expect("Vandermonde matrix at distinct nodes");
    let mut out = PiElement::zero(arr);
    for (i, l) in (1..=d + 1).enumerate() {
        let c = &inv[r][i];
        if c.is_zero() {
            continue;
        }
        out = out.add(&x.dilate(arr, &q(l as i64))?.scale(c))?;
    }
    Ok(out)
}

/// Rational weights on arrangement faces of every dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConeWeights {
    kind: ArrangementKind,
    w: BTreeMap<usize, Q>,
}

impl ConeWeights {
    pub fn zero(kind: ArrangementKind) -> Self {
        Self {
            kind,
            w: BTreeMap::new(),
        }
    }

    pub fn kind(&self) -> ArrangementKind {
        self.kind
    }

    pub fn get(&self, f: usize) -> Q {
        self.w.get(&f).cloned().unwrap_or_else(Q::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &Q)> {
        self.w.iter().map(|(&f, c)| (f, c))
    }

    pub fn is_zero(&self) -> bool {
        self.w.is_empty()
    }

    fn add_at(&mut self, f: usize, c: Q) {
        if c.is_zero() {
            return;
        }
        let e = self.w.entry(f).or_insert_with(Q::zero);
        *e += c;
        if e.is_zero() {
            self.w.remove(&f);
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut x = self.clone();
        for (&f, c) in &o.w {
            x.add_at(f, c.clone());
        }
        x
    }

    pub fn scale(&self, a: &Q) -> Self {
        if a.is_zero() {
            return Self::zero(self.kind);
        }
        Self {
            kind: self.kind,
            w: self.w.iter().map(|(&f, c)| (f, c * a)).collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&q(-1)))
    }

    /// Dimensions of the faces carrying nonzero weight.
    pub fn support_dims(&self, arr: &Arrangement) -> Vec<usize> {
        let mut v: Vec<usize> = self.w.keys().map(|&f| arr.face_dim(f)).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    pub fn as_sparse(&self) -> SparseVec {
        self.w.clone()
    }

    /// `[{face, coeff}]`.
    pub fn to_json(&self, arr: &Arrangement) -> Value {
        Value::Array(
            self.w
                .iter()
                .map(|(&f, c)| json!({"face": arr.face_string(f), "coeff": fmt_q(c)}))
                .collect(),
        )
    }
}

thread_local! {
    static TABLES: RefCell<HashMap<VPolytope, Rc<FaceTable>>> = RefCell::new(HashMap::new());
}

/// Face table of a translation-normalized polytope, memoized per thread.
fn cached_table(arr: &Arrangement, p: &VPolytope) -> Rc<FaceTable> {
    if let Some(t) = TABLES.with(|c| c.borrow().get(p).cloned()) {
        return t;
    }
    let t = Rc::new(face_table(arr, p));
    TABLES.with(|c| {
        let mut c = c.borrow_mut();
        if c.len() > 20_000 {
            c.clear();
        }
        c.insert(p.clone(), t.clone());
    });
    t
}

/// `Φ(p)`: weight `vol(p_F)` at each face `F` with `dim p_F = d - dim F`.
/// Computed directly, without normalization or caching.
pub fn phi_polytope(arr: &Arrangement, p: &VPolytope) -> ConeWeights {
    let t = face_table(arr, p);
    let d = arr.d();
    let mut out = ConeWeights::zero(arr.kind());
    for f in 0..arr.num_faces() {
        if t.dim[f] as usize + arr.face_dim(f) == d {
            out.add_at(f, t.vol[f].clone());
        }
    }
    out
}

/// `Φ(x)`, linear in `x`.
pub fn phi(arr: &Arrangement, x: &PiElement) -> Result<ConeWeights> {
    phi_act(arr, x, &TitsElement::unit(arr))
}

/// `Φ(x · e)` without forming `x · e`: the weight of `[p_G]` at `F` is the
/// volume of `p_{GF}` when `dim p_{GF} = d - dim F`.
pub fn phi_act(arr: &Arrangement, x: &PiElement, e: &TitsElement) -> Result<ConeWeights> {
    if x.kind != arr.kind() {
        return Err(mismatch(x.kind, arr.kind()));
    }
    if e.kind() != arr.kind() {
        return Err(mismatch(e.kind(), arr.kind()));
    }
    let d = arr.d();
    let n = arr.num_faces();
    let mut acc: Vec<Q> = vec![Q::zero(); n];
    for (p, c) in &x.terms {
        let t = cached_table(arr, p);
        for (g, eg) in e.terms() {
            let coef = c * eg;
            for (f, slot) in acc.iter_mut().enumerate() {
                let h = arr.fast_product(g, f);
                if t.dim[h] as usize + arr.face_dim(f) == d {
                    *slot += &coef * &t.vol[h];
                }
            }
        }
    }
    let mut out = ConeWeights::zero(arr.kind());
    for (f, c) in acc.into_iter().enumerate() {
        out.add_at(f, c);
    }
    Ok(out)
}

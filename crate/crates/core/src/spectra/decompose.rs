//! Unique signed-Minkowski decompositions of deformations into simplices.
//!
//! Degree-one classes are determined by `Ψ₁`, the lattice lengths of the
//! edges `p_F` at the arrangement faces `F` of dimension `d - 1`. A
//! decomposition is the solution of the linear system
//! `Ψ₁(p) = Σ c_g Ψ₁(g)` over the generators `g`.

use std::collections::BTreeMap;

use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Map, Value};

use crate::arrangement::{Arrangement, ArrangementKind};
use crate::error::{precondition, Error, Result};
use crate::linalg::{primitive_integer, solve_columns, SparseVec};
use crate::polyclass::{log_class, phi, simplex, simplex0, type_b_permutahedron, VPolytope};
use crate::rational::{fmt_q, q, Q};
use crate::report::{Check, Report};

pub(crate) fn set_label(prefix: &str, s: &[i32]) -> String {
    let items: Vec<String> = s.iter().map(|i| i.to_string()).collect();
    format!("{prefix}[{}]", items.join(","))
}

/// `S ⊆ [±d]` with `S ∩ -S = ∅` whose element of least absolute value is
/// positive, ordered by size then lexicographically on absolute values.
pub fn special_sets(d: usize) -> Vec<Vec<i32>> {
    let mut out = Vec::new();
    let total = 3usize.pow(d as u32);
    for code in 1..total {
        let mut c = code;
        let mut s = Vec::new();
        for i in 1..=d as i32 {
            match c % 3 {
                1 => s.push(i),
                2 => s.push(-i),
                _ => {}
            }
            c /= 3;
        }
        if s[0] > 0 {
            out.push(s);
        }
    }
    out.sort_by(|a, b| {
        a.len().cmp(&b.len()).then_with(|| {
            let key = |v: &Vec<i32>| v.iter().map(|x| (x.abs(), *x < 0)).collect::<Vec<_>>();
            key(a).cmp(&key(b))
        })
    });
    out
}

/// One member of the type B generating family: `Δ_S` or `Δ^0_S`.
#[derive(Debug, Clone, PartialEq)]
pub struct GeneratorB {
    pub set: Vec<i32>,
    pub with_origin: bool,
    pub polytope: VPolytope,
}

impl GeneratorB {
    pub fn label(&self) -> String {
        set_label(if self.with_origin { "D0" } else { "D" }, &self.set)
    }
}

/// `Δ_S` for special `S` with `|S| ≥ 2` and `Δ^0_S` for every special `S`.
#[derive(Debug, Clone, PartialEq)]
pub struct GeneratorFamilyB {
    pub d: usize,
    pub gens: Vec<GeneratorB>,
}

impl GeneratorFamilyB {
    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn num_full_dimensional(&self) -> usize {
        self.gens
            .iter()
            .filter(|g| g.polytope.dim() == self.d)
            .count()
    }

    pub fn labelled(&self) -> Vec<(String, VPolytope)> {
        self.gens
            .iter()
            .map(|g| (g.label(), g.polytope.clone()))
            .collect()
    }
}

pub fn b_generators(arr: &Arrangement) -> Result<GeneratorFamilyB> {
    let ArrangementKind::TypeB(d) = arr.kind() else {
        return precondition("the special simplices are generators for the type B arrangement");
    };
    let mut gens = Vec::new();
    for s in special_sets(d) {
        if s.len() >= 2 {
            gens.push(GeneratorB {
                set: s.clone(),
                with_origin: false,
                polytope: simplex(arr, &s)?,
            });
        }
        gens.push(GeneratorB {
            set: s.clone(),
            with_origin: true,
            polytope: simplex0(arr, &s)?,
        });
    }
    Ok(GeneratorFamilyB { d, gens })
}

/// Lattice length of the rational vector `v` along its primitive direction.
fn lattice_length(v: &[Q]) -> Q {
    let u = primitive_integer(v);
    let k = u.iter().position(|x| !x.is_zero()).expect("nonzero vector");
    (&v[k] / Q::from_integer(u[k].clone())).abs()
}

/// `Ψ₁(p)`: for each arrangement face `F` of dimension `d - 1`, the lattice
/// length of the edge `p_F`, read from the two chambers above `F`.
pub fn psi1(arr: &Arrangement, p: &VPolytope) -> SparseVec {
    let mut out = SparseVec::new();
    for f in 0..arr.num_faces() {
        if arr.face_dim(f) + 1 != arr.d() {
            continue;
        }
        let ch = arr.chambers_above(f);
        let a = p.vertex_at_chamber(ch[0] as usize);
        let b = p.vertex_at_chamber(ch[1] as usize);
        if a != b {
            let diff: Vec<Q> = a.iter().zip(b).map(|(x, y)| x - y).collect();
            out.insert(f, lattice_length(&diff));
        }
    }
    out
}

/// `Ψ₁(p)` as `Φ(log[p])`, which is supported on faces of dimension `d - 1`.
pub fn psi1_via_phi(arr: &Arrangement, p: &VPolytope) -> Result<SparseVec> {
    Ok(phi(arr, &log_class(arr, p)?)?.as_sparse())
}

/// Coefficients of a signed Minkowski decomposition.
#[derive(Debug, Clone, PartialEq)]
pub struct Decomposition {
    pub labels: Vec<String>,
    pub coeffs: Vec<Q>,
    /// Rank of the generator columns; equals `labels.len()` for uniqueness.
    pub rank: usize,
    /// `p + Σ_{c<0} |c| g` is a translate of `Σ_{c>0} c g`.
    pub reconstructed: bool,
}

impl Decomposition {
    pub fn unique(&self) -> bool {
        self.rank == self.labels.len()
    }

    pub fn coeff(&self, label: &str) -> Q {
        self.labels
            .iter()
            .position(|l| l == label)
            .map(|i| self.coeffs[i].clone())
            .unwrap_or_else(Q::zero)
    }

    /// Nonzero coefficients keyed by generator label.
    pub fn nonzero(&self) -> BTreeMap<String, Q> {
        self.labels
            .iter()
            .zip(&self.coeffs)
            .filter(|(_, c)| !c.is_zero())
            .map(|(l, c)| (l.clone(), c.clone()))
            .collect()
    }

    /// `{generator: coeff}` over the nonzero coefficients.
    pub fn to_json(&self) -> Value {
        let mut m = Map::new();
        for (l, c) in self.nonzero() {
            m.insert(l, Value::String(fmt_q(&c)));
        }
        Value::Object(m)
    }
}

fn decompose(
    arr: &Arrangement,
    gens: &[(String, VPolytope)],
    p: &VPolytope,
) -> Result<Decomposition> {
    if p.kind() != arr.kind() {
        return Err(Error::ArrangementMismatch(
            format!("{:?}", p.kind()),
            format!("{:?}", arr.kind()),
        ));
    }
    let cols: Vec<SparseVec> = gens.iter().map(|(_, g)| psi1(arr, g)).collect();
    let sol = solve_columns(&cols, &psi1(arr, p));
    let Some(coeffs) = sol.x else {
        return Err(Error::Internal("edge-length system is inconsistent".into()));
    };
    let mut lhs = p.clone();
    let mut rhs = VPolytope::origin(arr);
    for ((_, g), c) in gens.iter().zip(&coeffs) {
        if c.is_positive() {
            rhs = rhs.minkowski(arr, &g.dilate(arr, c)?)?;
        } else if c.is_negative() {
            lhs = lhs.minkowski(arr, &g.dilate(arr, &-c)?)?;
        }
    }
    Ok(Decomposition {
        labels: gens.iter().map(|(l, _)| l.clone()).collect(),
        coeffs,
        rank: sol.rank,
        reconstructed: lhs.is_translate_of(&rhs),
    })
}

/// Decomposition of a type B deformation over the special simplices.
pub fn b_decompose(
    arr: &Arrangement,
    fam: &GeneratorFamilyB,
    p: &VPolytope,
) -> Result<Decomposition> {
    if !matches!(arr.kind(), ArrangementKind::TypeB(_)) {
        return precondition("b_decompose takes a type B deformation");
    }
    decompose(arr, &fam.labelled(), p)
}

/// Decomposition of a braid deformation over `Δ_S`, `|S| ≥ 2`.
pub fn a_decompose(arr: &Arrangement, p: &VPolytope) -> Result<Decomposition> {
    let ArrangementKind::BraidA(d) = arr.kind() else {
        return precondition("a_decompose takes a braid deformation");
    };
    let mut gens = Vec::new();
    for m in 0u32..(1 << d) {
        if m.count_ones() >= 2 {
            let s: Vec<i32> = (1..=d as i32).filter(|&i| m >> (i - 1) & 1 == 1).collect();
            gens.push((set_label("D", &s), simplex(arr, &s)?));
        }
    }
    gens.sort_by(|a, b| a.1.dim().cmp(&b.1.dim()).then_with(|| a.0.cmp(&b.0)));
    decompose(arr, &gens, p)
}

/// Family size and dimension counts, `Ψ₁` computed two ways, full column
/// rank, reconstruction of `π^B_d`, and recovery of the coefficients of
/// `trials` random integral combinations.
pub fn b_generators_check(d: usize, trials: usize, seed: u64) -> Result<Report> {
    let arr = Arrangement::new(ArrangementKind::TypeB(d))?;
    let fam = b_generators(&arr)?;
    let mut rep = Report::new();
    let want = 3usize.pow(d as u32) - d - 1;
    rep.push(
        Check::new(format!("B{d}/family_size"), fam.len() == want)
            .with_detail(json!({"members": fam.len(), "expected": want})),
    );
    let full = fam.num_full_dimensional();
    rep.push(
        Check::new(format!("B{d}/full_dimensional"), full == 1 << (d - 1))
            .with_detail(json!({"members": full, "expected": 1 << (d - 1)})),
    );
    let mut psi_fail = None;
    for g in &fam.gens {
        if psi1(&arr, &g.polytope) != psi1_via_phi(&arr, &g.polytope)? && psi_fail.is_none() {
            psi_fail = Some(g.label());
        }
    }
    rep.push(Check::new(format!("B{d}/psi1_edges_vs_phi"), true).mismatch(psi_fail));
    let pb = type_b_permutahedron(&arr)?;
    let dec = b_decompose(&arr, &fam, &pb)?;
    rep.push(
        Check::new(format!("B{d}/full_column_rank"), dec.unique())
            .with_detail(json!({"rank": dec.rank, "columns": fam.len()})),
    );
    rep.push(
        Check::new(
            format!("B{d}/permutahedron_reconstructed"),
            dec.reconstructed,
        )
        .with_detail(dec.to_json()),
    );
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut fail = None;
    for trial in 0..trials {
        let mut want: BTreeMap<usize, i64> = BTreeMap::new();
        let mut p = VPolytope::point(&arr, (0..d).map(|_| q(rng.gen_range(-2..=2))).collect());
        for _ in 0..rng.gen_range(2..=5) {
            let i = rng.gen_range(0..fam.len());
            let c = rng.gen_range(1..=3);
            *want.entry(i).or_insert(0) += c;
            p = p.minkowski(&arr, &fam.gens[i].polytope.dilate(&arr, &q(c))?)?;
        }
        let dec = b_decompose(&arr, &fam, &p)?;
        let exact = (0..fam.len()).all(|i| dec.coeffs[i] == q(want.get(&i).copied().unwrap_or(0)));
        if !(dec.reconstructed && exact) && fail.is_none() {
            fail = Some(format!(
                "trial {trial}: reconstructed={} coefficients_recovered={exact}",
                dec.reconstructed
            ));
        }
    }
    rep.push(
        Check::new(format!("B{d}/random_deformations"), true)
            .mismatch(fail)
            .with_detail(json!({"trials": trials, "seed": seed})),
    );
    Ok(rep)
}

//! Dimensions `η_X(Ξ_r)` of the simultaneous eigenspaces of the Tits algebra
//! acting on the graded pieces `Ξ_r` of the algebra generated by the
//! deformation classes of the ambient zonotope.
//!
//! Three independent routes are provided: a Möbius sum over face
//! h-polynomials, counts of (signed) permutations by support and excedance,
//! and ranks of `Ξ_r · E_X` computed through `Φ`.

mod decompose;
mod eigen;

pub use decompose::{
    a_decompose, b_decompose, b_generators, b_generators_check, psi1, psi1_via_phi, special_sets,
    Decomposition, GeneratorB, GeneratorFamilyB,
};
pub use eigen::{
    conjecture_check, eta_idempotent_rank, eta_idempotent_rank_table, log_generators, x_flat,
    x_sigma, xi_basis, y_basis_cube, y_element,
};

use std::fmt::Write as _;

use serde_json::{json, Value};

use crate::arrangement::{Arrangement, ArrangementKind, Flat};
use crate::error::{precondition, Error, Result};
use crate::gfseries::{eulerian_a, eulerian_b, RatPoly};
use crate::permstat::{enumerate_signed, enumerate_sym, Bounds};
use crate::polyclass::{zonotope_of, FaceLattice, VPolytope};
use crate::rational::{q, to_i64};
use crate::report::{Check, Report};

/// How an [`EtaTable`] was computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EtaMethod {
    MobiusFormula,
    PermutationCount,
    IdempotentRank,
}

impl EtaMethod {
    pub fn tag(&self) -> &'static str {
        match self {
            EtaMethod::MobiusFormula => "mobius_formula",
            EtaMethod::PermutationCount => "permutation_count",
            EtaMethod::IdempotentRank => "idempotent_rank",
        }
    }
}

/// `η_X(Ξ_r)` for every flat `X` (by arrangement index) and `r = 0..=d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EtaTable {
    pub kind: ArrangementKind,
    pub method: EtaMethod,
    /// `values[x][r]`.
    pub values: Vec<Vec<u64>>,
}

impl EtaTable {
    fn zeros(arr: &Arrangement, method: EtaMethod) -> Self {
        Self {
            kind: arr.kind(),
            method,
            values: vec![vec![0; arr.d() + 1]; arr.num_flats()],
        }
    }

    pub fn get(&self, x: usize, r: usize) -> u64 {
        self.values[x].get(r).copied().unwrap_or(0)
    }

    /// `Σ_X η_X(Ξ_r)`.
    pub fn row_sum(&self, r: usize) -> u64 {
        self.values
            .iter()
            .map(|v| v.get(r).copied().unwrap_or(0))
            .sum()
    }

    /// First entry where two tables differ.
    pub fn first_difference(&self, arr: &Arrangement, o: &EtaTable) -> Option<String> {
        for (x, (a, b)) in self.values.iter().zip(&o.values).enumerate() {
            for r in 0..a.len().max(b.len()) {
                let (u, v) = (
                    a.get(r).copied().unwrap_or(0),
                    b.get(r).copied().unwrap_or(0),
                );
                if u != v {
                    return Some(format!(
                        "flat {} r={r}: {}={u} vs {}={v}",
                        arr.flat_string(x),
                        self.method.tag(),
                        o.method.tag()
                    ));
                }
            }
        }
        None
    }

    /// Rows `{flat, r, value, method}` for the nonzero entries.
    pub fn to_json(&self, arr: &Arrangement) -> Value {
        let mut rows = Vec::new();
        for (x, v) in self.values.iter().enumerate() {
            for (r, &n) in v.iter().enumerate() {
                if n != 0 {
                    rows.push(json!({"flat": arr.flat_string(x), "r": r, "value": n, "method": self.method.tag()}));
                }
            }
        }
        Value::Array(rows)
    }

    /// CSV with header `flat,r,value,method`, nonzero entries only.
    pub fn to_csv(&self, arr: &Arrangement) -> String {
        let mut s = String::from("flat,r,value,method\n");
        for (x, v) in self.values.iter().enumerate() {
            for (r, &n) in v.iter().enumerate() {
                if n != 0 {
                    let _ = writeln!(
                        s,
                        "\"{}\",{r},{n},{}",
                        arr.flat_string(x),
                        self.method.tag()
                    );
                }
            }
        }
        s
    }
}

/// Where the h-polynomial of a zonotope face comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HSource {
    /// Face lattice of the face `z_Y` computed by the polytope engine.
    Geometric,
    /// Products of Eulerian polynomials over the blocks of `Y`.
    Product,
}

/// `h(z_Y, z)` from Eulerian products: `Π A_{|S_i|}` for a braid flat,
/// `B_{|Z|} Π A_{|S_i|}` for a type B flat with zero block `Z`, and
/// `(1+z)^{|S|}` for the coordinate flat `X_S`.
pub fn product_h(kind: ArrangementKind, y: &Flat) -> RatPoly {
    match (kind, y) {
        (_, Flat::Partition(blocks)) => blocks
            .iter()
            .fold(RatPoly::one(), |acc, b| &acc * &eulerian_a(b.len())),
        (_, Flat::Signed { zero, blocks }) => blocks
            .iter()
            .fold(eulerian_b(zero.len()), |acc, b| &acc * &eulerian_a(b.len())),
        (_, Flat::Zeros(s)) => RatPoly::from_ints(&[1, 1]).pow(s.len()),
    }
}

/// `h(z_Y, z)` from the face lattice of the face of `z` cut out by any
/// arrangement face with support `Y`.
pub fn geometric_h(arr: &Arrangement, z: &VPolytope, y: usize) -> Result<RatPoly> {
    let f = arr.faces_with_support(y)[0];
    Ok(FaceLattice::new(arr, &z.face_max(arr, f)?).h_polynomial())
}

fn h_table(arr: &Arrangement, src: HSource) -> Result<Vec<RatPoly>> {
    match src {
        HSource::Product => Ok(arr
            .flats()
            .iter()
            .map(|y| product_h(arr.kind(), y))
            .collect()),
        HSource::Geometric => {
            let z = zonotope_of(arr)?;
            (0..arr.num_flats())
                .map(|y| geometric_h(arr, &z, y))
                .collect()
        }
    }
}

fn mobius_poly(arr: &Arrangement, hs: &[RatPoly], x: usize) -> RatPoly {
    let mut acc = RatPoly::zero();
    for y in 0..arr.num_flats() {
        if arr.flat_leq(x, y) {
            acc = &acc + &hs[y].scale(&q(arr.mobius(x, y)));
        }
    }
    acc
}

/// `Σ_r η_X(Ξ_r) z^r = Σ_{Y ≥ X} μ(X, Y) h(z_Y, z)` with the chosen source.
pub fn eta_mobius_poly(arr: &Arrangement, x: usize, src: HSource) -> Result<RatPoly> {
    Ok(mobius_poly(arr, &h_table(arr, src)?, x))
}

fn poly_to_row(arr: &Arrangement, x: usize, p: &RatPoly) -> Result<Vec<u64>> {
    (0..=arr.d())
        .map(|r| {
            let c = p.coeff(r);
            to_i64(&c)
                .and_then(|v| u64::try_from(v).ok())
                .ok_or_else(|| {
                    Error::Internal(format!(
                        "η at flat {} r={r} is {c}, not a nonnegative integer",
                        arr.flat_string(x)
                    ))
                })
        })
        .collect()
}

/// The Möbius-formula table. Both h sources are evaluated and must agree.
pub fn eta_mobius_table(arr: &Arrangement) -> Result<EtaTable> {
    let geo = h_table(arr, HSource::Geometric)?;
    let prod = h_table(arr, HSource::Product)?;
    if let Some(y) = (0..geo.len()).find(|&y| geo[y] != prod[y]) {
        return Err(Error::Internal(format!(
            "face h-polynomial at {}: geometric {} vs product {}",
            arr.flat_string(y),
            geo[y],
            prod[y]
        )));
    }
    let mut t = EtaTable::zeros(arr, EtaMethod::MobiusFormula);
    for x in 0..arr.num_flats() {
        t.values[x] = poly_to_row(arr, x, &mobius_poly(arr, &prod, x))?;
    }
    Ok(t)
}

/// `η_X(Ξ_r)` by the Möbius formula.
pub fn eta_mobius(arr: &Arrangement, x: usize, r: usize) -> Result<u64> {
    Ok(eta_mobius_table(arr)?.get(x, r))
}

/// Counts of permutations by support and excedance (type A) or of signed
/// permutations by support and B-excedance (type B).
pub fn eta_permutations_table(arr: &Arrangement, bounds: &Bounds) -> Result<EtaTable> {
    let mut t = EtaTable::zeros(arr, EtaMethod::PermutationCount);
    let mut bump = |supp: &Flat, e: usize| -> Result<()> {
        let x = arr
            .flat_index(supp)
            .ok_or_else(|| Error::Internal(format!("support {supp:?} is not a flat")))?;
        t.values[x][e] += 1;
        Ok(())
    };
    match arr.kind() {
        ArrangementKind::BraidA(d) => {
            for s in enumerate_sym(d, bounds)? {
                bump(&s.supp(), s.exc())?;
            }
        }
        ArrangementKind::TypeB(d) => {
            for s in enumerate_signed(d, bounds)? {
                bump(&s.supp(), s.exc_b())?;
            }
        }
        ArrangementKind::Coordinate(_) => {
            return precondition(
                "permutation counts are defined for the braid and type B arrangements",
            );
        }
    }
    Ok(t)
}

/// `#{σ : supp σ = X, exc σ = r}` in the appropriate group.
pub fn eta_permutations(arr: &Arrangement, x: usize, r: usize, bounds: &Bounds) -> Result<u64> {
    Ok(eta_permutations_table(arr, bounds)?.get(x, r))
}

/// `h_r` of the ambient zonotope from the Eulerian product formula.
pub fn zonotope_h(arr: &Arrangement) -> RatPoly {
    product_h(arr.kind(), arr.flat(arr.bottom()))
}

/// Structural checks on a single table: row sums equal `h_r(z)`, and
/// `η_X(Ξ_r) = 0` whenever `r + dim X > d`.
pub fn table_invariants(arr: &Arrangement, t: &EtaTable) -> Report {
    let mut rep = Report::new();
    let h = zonotope_h(arr);
    let tag = t.method.tag();
    let mism = (0..=arr.d()).find_map(|r| {
        let want = to_i64(&h.coeff(r)).unwrap_or(-1);
        (t.row_sum(r) as i64 != want)
            .then(|| format!("r={r}: Σ η = {} vs h_r = {want}", t.row_sum(r)))
    });
    rep.push(Check::new(format!("{tag}/row_sums"), true).mismatch(mism));
    let mism = (0..arr.num_flats()).find_map(|x| {
        (0..=arr.d())
            .find(|&r| r + arr.flat_dim(x) > arr.d() && t.get(x, r) != 0)
            .map(|r| format!("flat {} r={r}", arr.flat_string(x)))
    });
    rep.push(Check::new(format!("{tag}/degree_bound"), true).mismatch(mism));
    rep
}

/// Three-way comparison of the η tables for one arrangement, with row sums,
/// degree bounds and sums over flats of each dimension.
pub fn check_eta(
    arr: &Arrangement,
    bounds: &Bounds,
    with_rank: bool,
) -> Result<(Report, Vec<EtaTable>)> {
    let name = format!("{}{}", arr.kind().letter(), arr.d());
    let mut rep = Report::new();
    let mob = eta_mobius_table(arr)?;
    rep.push(Check::new(format!("{name}/h_sources_agree"), true));
    rep.extend(table_invariants(arr, &mob));
    let mut tables = vec![mob.clone()];
    if !matches!(arr.kind(), ArrangementKind::Coordinate(_)) {
        let perm = eta_permutations_table(arr, bounds)?;
        rep.push(
            Check::new(format!("{name}/mobius_vs_permutations"), true)
                .mismatch(mob.first_difference(arr, &perm))
                .with_detail(json!({"flats": arr.num_flats()})),
        );
        // Sum over the flats of each dimension against a direct count by dim supp.
        let mut by_dim = vec![vec![0u64; arr.d() + 1]; arr.d() + 1];
        for x in 0..arr.num_flats() {
            for r in 0..=arr.d() {
                by_dim[arr.flat_dim(x)][r] += mob.get(x, r);
            }
        }
        let direct = direct_counts_by_dim(arr, bounds)?;
        let mism = (0..=arr.d()).find_map(|k| {
            (0..=arr.d())
                .find(|&r| by_dim[k][r] != direct[k][r])
                .map(|r| format!("dim {k} r={r}: {} vs {}", by_dim[k][r], direct[k][r]))
        });
        rep.push(Check::new(format!("{name}/sum_by_dimension"), true).mismatch(mism));
        tables.push(perm);
    }
    if with_rank {
        let rank = eta_idempotent_rank_table(arr)?;
        rep.push(
            Check::new(format!("{name}/mobius_vs_idempotent_rank"), true)
                .mismatch(mob.first_difference(arr, &rank)),
        );
        tables.push(rank);
    }
    Ok((rep, tables))
}

fn direct_counts_by_dim(arr: &Arrangement, bounds: &Bounds) -> Result<Vec<Vec<u64>>> {
    let d = arr.d();
    let kind = arr.kind();
    let mut out = vec![vec![0u64; d + 1]; d + 1];
    match kind {
        ArrangementKind::BraidA(_) => {
            for s in enumerate_sym(d, bounds)? {
                out[s.cycles().len()][s.exc()] += 1;
            }
        }
        ArrangementKind::TypeB(_) => {
            for s in enumerate_signed(d, bounds)? {
                out[kind.flat_dim(&s.supp())][s.exc_b()] += 1;
            }
        }
        ArrangementKind::Coordinate(_) => {}
    }
    Ok(out)
}

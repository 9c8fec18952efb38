//! Spanning sets of `Ξ_r`, ranks of `Ξ_r · E_X`, and the explicit
//! eigenvectors `x_σ`, `x_X` (braid) and `y_S` (coordinate).

use std::collections::BTreeMap;

use serde_json::json;

use super::{eta_mobius_table, zonotope_h, EtaMethod, EtaTable};
use crate::arrangement::{Arrangement, ArrangementKind, Flat};
use crate::error::{precondition, Error, Result};
use crate::linalg::RowSpace;
use crate::permstat::{enumerate_sym, forest_of, Bounds, Permutation};
use crate::polyclass::{
    log_class, module_act, phi, phi_act, pi_multiply, segment, simplex, zonotope_of_flat, PiElement,
};
use crate::rational::{q, to_i64};
use crate::report::{Check, Report};
use crate::titsalgebra::{adams_family, gamma_family, EulerianFamily};

/// Largest `d` for which spanning sets and idempotent ranks are computed.
pub const RANK_MAX_D: usize = 4;

fn subsets_of_size_at_least(d: usize, k: usize) -> Vec<Vec<i32>> {
    let mut out: Vec<Vec<i32>> = (0u32..(1 << d))
        .filter(|m| m.count_ones() as usize >= k)
        .map(|m| (1..=d as i32).filter(|&i| m >> (i - 1) & 1 == 1).collect())
        .collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

/// Labelled generators of `Ξ_1`: `log[Δ_S]` for `|S| ≥ 2` (braid),
/// `log[l_i]` for the unit segments (coordinate), and the log-classes of the
/// special simplices (type B).
pub fn log_generators(arr: &Arrangement) -> Result<Vec<(String, PiElement)>> {
    let d = arr.d();
    match arr.kind() {
        ArrangementKind::BraidA(_) => subsets_of_size_at_least(d, 2)
            .into_iter()
            .map(|s| {
                Ok((
                    super::decompose::set_label("D", &s),
                    log_class(arr, &simplex(arr, &s)?)?,
                ))
            })
            .collect(),
        ArrangementKind::Coordinate(_) => (1..=d)
            .map(|i| {
                let mut v = vec![q(0); d];
                v[i - 1] = q(1);
                Ok((format!("l{i}"), log_class(arr, &segment(arr, &v)?)?))
            })
            .collect(),
        ArrangementKind::TypeB(_) => super::decompose::b_generators(arr)?
            .gens
            .iter()
            .map(|g| Ok((g.label(), log_class(arr, &g.polytope)?)))
            .collect(),
    }
}

/// Bases of `Ξ_0, ..., Ξ_d`, each grown from products of a basis of
/// `Ξ_{r-1}` with the generators of `Ξ_1` until its rank reaches `h_r` of
/// the ambient zonotope.
pub fn xi_bases(arr: &Arrangement) -> Result<Vec<Vec<PiElement>>> {
    let d = arr.d();
    if d > RANK_MAX_D + usize::from(matches!(arr.kind(), ArrangementKind::Coordinate(_))) {
        return Err(Error::Resource(format!(
            "spanning sets of Ξ_r are computed for d ≤ {RANK_MAX_D}"
        )));
    }
    let h = zonotope_h(arr);
    let gens: Vec<PiElement> = log_generators(arr)?.into_iter().map(|(_, g)| g).collect();
    let mut out = vec![vec![PiElement::one(arr)]];
    for r in 1..=d {
        let target = to_i64(&h.coeff(r)).unwrap_or(0) as usize;
        let mut rows = RowSpace::new();
        let mut basis = Vec::new();
        'outer: for b in &out[r - 1] {
            for g in &gens {
                if rows.rank() == target {
                    break 'outer;
                }
                let c = pi_multiply(arr, b, g)?;
                if rows.insert(&phi(arr, &c)?.as_sparse()) {
                    basis.push(c);
                }
            }
        }
        if rows.rank() != target {
            return Err(Error::Internal(format!(
                "products span rank {} in degree {r}, expected {target}",
                rows.rank()
            )));
        }
        out.push(basis);
    }
    Ok(out)
}

/// A basis of `Ξ_r`.
pub fn xi_basis(arr: &Arrangement, r: usize) -> Result<Vec<PiElement>> {
    Ok(xi_bases(arr)?.into_iter().nth(r).unwrap_or_default())
}

fn family_for(arr: &Arrangement) -> Result<EulerianFamily> {
    match arr.kind() {
        ArrangementKind::BraidA(_) => adams_family(arr),
        ArrangementKind::Coordinate(_) => Ok(gamma_family(arr, &q(2))?.1),
        ArrangementKind::TypeB(_) => {
            precondition("no explicit Eulerian family is available for type B")
        }
    }
}

/// `rank Φ(Ξ_r · E_X)` over all flats and grades, using the Adams family
/// (braid) or the `γ_t` family (coordinate).
pub fn eta_idempotent_rank_table(arr: &Arrangement) -> Result<EtaTable> {
    let fam = family_for(arr)?;
    if arr.d() > RANK_MAX_D {
        return Err(Error::Resource(format!(
            "idempotent ranks are computed for d ≤ {RANK_MAX_D}"
        )));
    }
    let bases = xi_bases(arr)?;
    let mut t = EtaTable {
        kind: arr.kind(),
        method: EtaMethod::IdempotentRank,
        values: Vec::new(),
    };
    for x in 0..arr.num_flats() {
        let mut row = Vec::with_capacity(bases.len());
        for basis in &bases {
            row.push(rank_under(arr, basis, &fam, x)? as u64);
        }
        t.values.push(row);
    }
    Ok(t)
}

fn rank_under(
    arr: &Arrangement,
    basis: &[PiElement],
    fam: &EulerianFamily,
    x: usize,
) -> Result<usize> {
    let mut rows = RowSpace::new();
    for b in basis {
        rows.insert(&phi_act(arr, b, fam.get(x))?.as_sparse());
    }
    Ok(rows.rank())
}

/// `η_X(Ξ_r) = dim Ξ_r · E_X` by rank.
pub fn eta_idempotent_rank(arr: &Arrangement, x: usize, r: usize) -> Result<u64> {
    let fam = family_for(arr)?;
    let basis = xi_basis(arr, r)?;
    Ok(rank_under(arr, &basis, &fam, x)? as u64)
}

fn product(arr: &Arrangement, factors: &[PiElement]) -> Result<PiElement> {
    factors
        .iter()
        .try_fold(PiElement::one(arr), |acc, f| pi_multiply(arr, &acc, f))
}

fn braid_d(arr: &Arrangement) -> Result<usize> {
    match arr.kind() {
        ArrangementKind::BraidA(d) => Ok(d),
        _ => precondition("defined for the braid arrangement"),
    }
}

fn sorted_i32(v: &[u32]) -> Vec<i32> {
    let mut s: Vec<i32> = v.iter().map(|&x| x as i32).collect();
    s.sort_unstable();
    s
}

/// `Π_i log[Δ_{J_i}]` over the leaf-to-root paths `J_i` of the forest of `σ`.
fn sigma_product(arr: &Arrangement, s: &Permutation) -> Result<PiElement> {
    let factors: Vec<PiElement> = forest_of(s)
        .leaf_paths()
        .iter()
        .map(|p| log_class(arr, &simplex(arr, &sorted_i32(p))?))
        .collect::<Result<_>>()?;
    product(arr, &factors)
}

fn flat_of(arr: &Arrangement, s: &Permutation) -> Result<usize> {
    arr.flat_index(&s.supp())
        .ok_or_else(|| Error::Internal("support is not a flat".into()))
}

/// `x_σ = (Π_i log[Δ_{J_i}]) · E_{supp σ}` with the Adams family.
pub fn x_sigma(arr: &Arrangement, fam: &EulerianFamily, s: &Permutation) -> Result<PiElement> {
    if s.d() != braid_d(arr)? {
        return precondition("permutation size differs from the arrangement dimension");
    }
    module_act(arr, &sigma_product(arr, s)?, fam.get(flat_of(arr, s)?))
}

/// `x_X = Π_i Π_{j ∈ S_i, j ≠ min S_i} log[Δ_{min S_i, j}]` for the braid
/// flat with blocks `S_i`.
pub fn x_flat(arr: &Arrangement, x: usize) -> Result<PiElement> {
    braid_d(arr)?;
    let Flat::Partition(blocks) = arr.flat(x) else {
        unreachable!()
    };
    let mut factors = Vec::new();
    for b in blocks {
        for &j in &b[1..] {
            factors.push(log_class(arr, &simplex(arr, &[b[0], j])?)?);
        }
    }
    product(arr, &factors)
}

/// The `x_σ` program on `BraidA(d)`: independence of `{Φ(x_σ)}` for each
/// `(supp σ, exc σ)` and agreement of their number with `η`; nonvanishing
/// of `x_σ` for single-cycle `σ` with one excedance; and for every flat `X`,
/// `x_X ≠ 0`, `x_X ∈ Ξ_{d - dim X}`, `x_X · E_X = x_X` and
/// `dim Ξ_{d - dim X} · E_X = 1`.
pub fn conjecture_check(d: usize) -> Result<Report> {
    if d > RANK_MAX_D {
        return Err(Error::Resource(format!(
            "the x_σ check runs for d ≤ {RANK_MAX_D}"
        )));
    }
    let arr = Arrangement::new(ArrangementKind::BraidA(d))?;
    let fam = adams_family(&arr)?;
    let eta = eta_mobius_table(&arr)?;
    let mut groups: BTreeMap<(usize, usize), (RowSpace, usize)> = BTreeMap::new();
    let mut single_cycle = None;
    let mut single_count = 0;
    for s in enumerate_sym(d, &Bounds { sym: d, signed: 0 })? {
        let x = flat_of(&arr, &s)?;
        let prod = sigma_product(&arr, &s)?;
        let w = phi_act(&arr, &prod, fam.get(x))?;
        let g = groups
            .entry((x, s.exc()))
            .or_insert_with(|| (RowSpace::new(), 0));
        g.0.insert(&w.as_sparse());
        g.1 += 1;
        let nontrivial: Vec<Vec<u32>> = s.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if nontrivial.len() == 1 && s.exc() == 1 {
            single_count += 1;
            let j = sorted_i32(&nontrivial[0]);
            let direct = phi_act(&arr, &log_class(&arr, &simplex(&arr, &j)?)?, fam.get(x))?;
            if (w.is_zero() || w != direct) && single_cycle.is_none() {
                single_cycle = Some(format!("σ = {s}"));
            }
        }
    }
    let mut rep = Report::new();
    let mut indep = None;
    let mut count = None;
    let mut detail = Vec::new();
    for (&(x, r), (rows, n)) in &groups {
        detail
            .push(json!({"flat": arr.flat_string(x), "r": r, "elements": n, "rank": rows.rank()}));
        if rows.rank() != *n && indep.is_none() {
            indep = Some(format!(
                "flat {} r={r}: rank {} of {n}",
                arr.flat_string(x),
                rows.rank()
            ));
        }
        if *n as u64 != eta.get(x, r) && count.is_none() {
            count = Some(format!(
                "flat {} r={r}: {n} elements, η = {}",
                arr.flat_string(x),
                eta.get(x, r)
            ));
        }
    }
    rep.push(
        Check::new(format!("A{d}/x_sigma_independent"), true)
            .mismatch(indep)
            .with_detail(serde_json::Value::Array(detail)),
    );
    rep.push(Check::new(format!("A{d}/x_sigma_count_matches_eta"), true).mismatch(count));
    rep.push(
        Check::new(format!("A{d}/single_cycle_elements_nonzero"), true)
            .mismatch(single_cycle)
            .with_detail(json!({"permutations": single_count})),
    );
    let mut flat_fail = None;
    for x in 0..arr.num_flats() {
        let k = arr.flat_dim(x);
        let xx = x_flat(&arr, x)?;
        let w = phi(&arr, &xx)?;
        let fixed = phi_act(&arr, &xx, fam.get(x))?;
        let reason = if w.is_zero() {
            Some("x_X = 0")
        } else if w.support_dims(&arr) != vec![k] {
            Some("x_X not homogeneous of degree d - dim X")
        } else if fixed != w {
            Some("x_X · E_X != x_X")
        } else if eta.get(x, d - k) != 1 {
            Some("η_X(Ξ_{d - dim X}) != 1")
        } else {
            None
        };
        if let (Some(m), None) = (reason, &flat_fail) {
            flat_fail = Some(format!("flat {}: {m}", arr.flat_string(x)));
        }
    }
    rep.push(
        Check::new(format!("A{d}/flat_elements_fixed_by_idempotent"), true).mismatch(flat_fail),
    );
    Ok(rep)
}

/// `y_S = Π_{i ∈ S} log[l_i]` in the coordinate arrangement.
pub fn y_element(arr: &Arrangement, s: &[i32]) -> Result<PiElement> {
    let ArrangementKind::Coordinate(d) = arr.kind() else {
        return precondition("y_S is defined for the coordinate arrangement");
    };
    let factors: Vec<PiElement> = s
        .iter()
        .map(|&i| {
            let mut v = vec![q(0); d];
            v[i as usize - 1] = q(1);
            log_class(arr, &segment(arr, &v)?)
        })
        .collect::<Result<_>>()?;
    product(arr, &factors)
}

/// The eigenbasis `{y_S}` of the cube: `y_S ≠ 0`, `y_S ∈ Ξ_{|S|}`,
/// `y_S · E_{X_S} = y_S`, `y_S = [c_{X_S}] · E_{X_S}`,
/// `y_S = Σ_{T ⊆ S} (-1)^{|S∖T|} [c_{X_T}]`, and independence of all `2^d`.
pub fn y_basis_cube(d: usize) -> Result<Report> {
    if d > RANK_MAX_D + 1 {
        return Err(Error::Resource(format!(
            "the cube eigenbasis check runs for d ≤ {}",
            RANK_MAX_D + 1
        )));
    }
    let arr = Arrangement::new(ArrangementKind::Coordinate(d))?;
    let (_, fam) = gamma_family(&arr, &q(2))?;
    let mut rows = RowSpace::new();
    let mut first = None;
    for m in 0u32..(1 << d) {
        let s: Vec<i32> = (1..=d as i32).filter(|&i| m >> (i - 1) & 1 == 1).collect();
        let x = arr
            .flat_index(&Flat::Zeros(s.clone()))
            .expect("coordinate flat");
        let y = y_element(&arr, &s)?;
        let w = phi(&arr, &y)?;
        let mut alt = PiElement::zero(&arr);
        for t in 0u32..(1 << d) {
            if t & !m != 0 {
                continue;
            }
            let tset: Vec<i32> = (1..=d as i32).filter(|&i| t >> (i - 1) & 1 == 1).collect();
            let xt = arr.flat_index(&Flat::Zeros(tset)).expect("coordinate flat");
            let sign = if (m.count_ones() - t.count_ones()) % 2 == 0 {
                1
            } else {
                -1
            };
            alt = alt.add(&PiElement::class(&zonotope_of_flat(&arr, xt)?).scale(&q(sign)))?;
        }
        let from_cube = module_act(
            &arr,
            &PiElement::class(&zonotope_of_flat(&arr, x)?),
            fam.get(x),
        )?;
        let reason = if w.is_zero() {
            Some("y_S = 0")
        } else if w.support_dims(&arr) != vec![d - s.len()] {
            Some("y_S not homogeneous of degree |S|")
        } else if phi_act(&arr, &y, fam.get(x))? != w {
            Some("y_S · E_{X_S} != y_S")
        } else if from_cube != y {
            Some("[c_{X_S}] · E_{X_S} != y_S")
        } else if alt != y {
            Some("alternating sum of cubes != y_S")
        } else {
            None
        };
        if let (Some(msg), None) = (reason, &first) {
            first = Some(format!("S = {s:?}: {msg}"));
        }
        rows.insert(&w.as_sparse());
    }
    let mut rep = Report::new();
    rep.push(Check::new(format!("C{d}/y_basis_elements"), true).mismatch(first));
    let indep = (rows.rank() != 1 << d).then(|| format!("rank {} of {}", rows.rank(), 1 << d));
    rep.push(Check::new(format!("C{d}/y_basis_independent"), true).mismatch(indep));
    Ok(rep)
}

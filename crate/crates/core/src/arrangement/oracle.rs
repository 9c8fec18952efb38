//! Independent recomputations of the face product and the Möbius function.

use serde_json::json;

use super::{Arrangement, ArrangementKind};
use crate::error::Result;
use crate::report::{Check, Report};

/// Möbius values `μ(x, ·)` by the defining recursion
/// `μ(x, y) = -Σ_{x ≤ z < y} μ(x, z)`, indexed like the flats.
fn mobius_by_recursion(arr: &Arrangement, x: usize) -> Vec<Option<i64>> {
    let n = arr.num_flats();
    let mut order: Vec<usize> = (0..n).filter(|&y| arr.flat_leq(x, y)).collect();
    order.sort_by_key(|&y| arr.flat_dim(y));
    let mut mu = vec![None; n];
    for &y in &order {
        let v = if y == x {
            1
        } else {
            -order
                .iter()
                .filter(|&&z| z != y && arr.flat_leq(z, y))
                .map(|&z| mu[z].unwrap_or(0))
                .sum::<i64>()
        };
        mu[y] = Some(v);
    }
    mu
}

/// Combinatorial against geometric face products over all pairs, the
/// product table against both, and product-formula Möbius values against
/// the recursion over all comparable pairs.
pub fn cross_oracle_check(kind: ArrangementKind) -> Result<Report> {
    let arr = Arrangement::new(kind)?;
    let tag = format!("{}{}", kind.letter(), kind.d());
    let mut tits = None;
    for f in 0..arr.num_faces() {
        for g in 0..arr.num_faces() {
            let comb = kind.tits_product(arr.face(f), arr.face(g));
            let geo = kind.tits_product_geometric(arr.face(f), arr.face(g));
            if (comb != geo || arr.face(arr.product(f, g)) != &comb) && tits.is_none() {
                tits = Some(format!("{} · {}", arr.face_string(f), arr.face_string(g)));
            }
        }
    }
    let mut mobius = None;
    let mut pairs = 0usize;
    for x in 0..arr.num_flats() {
        for (y, m) in mobius_by_recursion(&arr, x).into_iter().enumerate() {
            if let Some(m) = m {
                pairs += 1;
                if m != arr.mobius(x, y) && mobius.is_none() {
                    mobius = Some(format!(
                        "μ({}, {}): recursion {m}, product formula {}",
                        arr.flat_string(x),
                        arr.flat_string(y),
                        arr.mobius(x, y)
                    ));
                }
            }
        }
    }
    let mut rep = Report::new();
    rep.push(
        Check::new(
            format!("{tag}/tits_product_combinatorial_vs_geometric"),
            true,
        )
        .mismatch(tits)
        .with_detail(json!({"pairs": arr.num_faces() * arr.num_faces()})),
    );
    rep.push(
        Check::new(format!("{tag}/mobius_product_formula_vs_recursion"), true)
            .mismatch(mobius)
            .with_detail(json!({"pairs": pairs})),
    );
    Ok(rep)
}

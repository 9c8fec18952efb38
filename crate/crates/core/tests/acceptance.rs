//! The twelve acceptance criteria, each run at full size against its time
//! limit. Prints one PASS/FAIL line per criterion and exits nonzero if any
//! criterion fails.

use std::time::{Duration, Instant};

use polytope_algebra::arrangement::cross_oracle_check;
use polytope_algebra::gfseries::{eulerian_a, eulerian_b, verify_identities};
use polytope_algebra::hopfgp::{hopf_axiom_check, mc_coideal_check, two_one_monoid_check};
use polytope_algebra::permstat::{forest_check, Bounds};
use polytope_algebra::polyclass::{
    module_axiom_check, permutahedron, phi_soundness_check, type_b_permutahedron, FaceLattice,
};
use polytope_algebra::rational::q;
use polytope_algebra::report::Report;
use polytope_algebra::spectra::{b_generators_check, check_eta, conjecture_check, y_basis_cube};
use polytope_algebra::titsalgebra::{
    adams_element, adams_family, check_family_with_element, check_q_basis, gamma_family,
};
use polytope_algebra::{Arrangement, ArrangementKind, Flat, Result};

const SEED: u64 = 20240601;

fn summarize(rep: &Report) -> Option<String> {
    rep.failures().first().map(|c| {
        format!(
            "{} [{}]",
            c.name,
            c.first_mismatch.clone().unwrap_or_default()
        )
    })
}

fn brenti() -> Result<Report> {
    let mut rep = Report::new();
    for d in 2..=5 {
        let arr = Arrangement::new(ArrangementKind::BraidA(d))?;
        let h = FaceLattice::new(&arr, &permutahedron(&arr)?).h_polynomial();
        rep.push(polytope_algebra::report::Check::new(
            format!("A{d}/h_equals_eulerian"),
            h == eulerian_a(d),
        ));
    }
    for d in 2..=4 {
        let arr = Arrangement::new(ArrangementKind::TypeB(d))?;
        let h = FaceLattice::new(&arr, &type_b_permutahedron(&arr)?).h_polynomial();
        rep.push(polytope_algebra::report::Check::new(
            format!("B{d}/h_equals_eulerian"),
            h == eulerian_b(d),
        ));
    }
    Ok(rep)
}

fn eta_type_a() -> Result<Report> {
    let mut rep = Report::new();
    for d in 2..=5 {
        let arr = Arrangement::new(ArrangementKind::BraidA(d))?;
        rep.extend(check_eta(&arr, &Bounds::default(), d <= 4)?.0);
    }
    Ok(rep)
}

fn eta_type_b() -> Result<Report> {
    let mut rep = Report::new();
    for d in 2..=4 {
        let arr = Arrangement::new(ArrangementKind::TypeB(d))?;
        let (r, tables) = check_eta(&arr, &Bounds::default(), false)?;
        rep.extend(r);
        let bottom = tables[0].get(arr.bottom(), 1);
        rep.push(polytope_algebra::report::Check::new(
            format!("B{d}/bottom_degree_one"),
            bottom == 1 << (d - 1),
        ));
    }
    Ok(rep)
}

fn cube() -> Result<Report> {
    let mut rep = Report::new();
    for d in 1..=5 {
        let arr = Arrangement::new(ArrangementKind::Coordinate(d))?;
        let (r, tables) = check_eta(&arr, &Bounds::default(), d <= 4)?;
        rep.extend(r);
        let mut indicator = true;
        for x in 0..arr.num_flats() {
            let Flat::Zeros(s) = arr.flat(x) else {
                unreachable!("coordinate flats are zero sets")
            };
            for t in &tables {
                indicator &= (0..=d).all(|r| t.get(x, r) == u64::from(r == s.len()));
            }
        }
        rep.push(polytope_algebra::report::Check::new(
            format!("C{d}/eta_is_indicator"),
            indicator,
        ));
        rep.extend(y_basis_cube(d)?);
    }
    Ok(rep)
}

fn idempotents() -> Result<Report> {
    let ts = [q(2), q(3), q(5), q(-1)];
    let mut rep = Report::new();
    for d in 1..=4 {
        let a = Arrangement::new(ArrangementKind::BraidA(d))?;
        rep.extend(check_family_with_element(
            &a,
            &adams_family(&a)?,
            |t| adams_element(&a, t),
            &ts,
        )?);
        rep.extend(check_q_basis(&a)?);
        let c = Arrangement::new(ArrangementKind::Coordinate(d))?;
        let (_, fam) = gamma_family(&c, &q(2))?;
        rep.extend(check_family_with_element(
            &c,
            &fam,
            |t| Ok(gamma_family(&c, t)?.0),
            &ts,
        )?);
        rep.extend(check_q_basis(&c)?);
    }
    Ok(rep)
}

fn phi_soundness() -> Result<Report> {
    let mut rep = Report::new();
    for d in 1..=3 {
        for kind in [
            ArrangementKind::BraidA(d),
            ArrangementKind::TypeB(d),
            ArrangementKind::Coordinate(d),
        ] {
            if kind == ArrangementKind::BraidA(1) {
                continue;
            }
            rep.extend(phi_soundness_check(&Arrangement::new(kind)?, 25, 25, SEED)?);
        }
    }
    Ok(rep)
}

fn module_axioms() -> Result<Report> {
    let a = Arrangement::new(ArrangementKind::BraidA(3))?;
    let mut rep = module_axiom_check(&a, &permutahedron(&a)?, 20, SEED)?;
    let b = Arrangement::new(ArrangementKind::TypeB(2))?;
    rep.extend(module_axiom_check(
        &b,
        &type_b_permutahedron(&b)?,
        20,
        SEED,
    )?);
    Ok(rep)
}

fn x_sigma() -> Result<Report> {
    let mut rep = Report::new();
    for d in 2..=4 {
        rep.extend(conjecture_check(d)?);
    }
    Ok(rep)
}

fn type_b_generators() -> Result<Report> {
    let mut rep = Report::new();
    for d in 2..=4 {
        rep.extend(b_generators_check(d, 10, SEED)?);
    }
    Ok(rep)
}

fn hopf() -> Result<Report> {
    let mut rep = Report::new();
    for n in 1..=3 {
        rep.extend(hopf_axiom_check(n, SEED)?);
        rep.extend(two_one_monoid_check(n, SEED)?);
        if n >= 2 {
            rep.extend(mc_coideal_check(n, 25, SEED)?);
        }
    }
    Ok(rep)
}

fn cross_oracles() -> Result<Report> {
    let mut rep = Report::new();
    for d in 1..=3 {
        for kind in [
            ArrangementKind::BraidA(d),
            ArrangementKind::TypeB(d),
            ArrangementKind::Coordinate(d),
        ] {
            rep.extend(cross_oracle_check(kind)?);
        }
    }
    for kind in [ArrangementKind::BraidA(4), ArrangementKind::Coordinate(4)] {
        rep.extend(cross_oracle_check(kind)?);
    }
    for d in 1..=6 {
        rep.extend(forest_check(d, &Bounds::default())?);
    }
    Ok(rep)
}

type Criterion = (&'static str, u64, fn() -> Result<Report>);

fn main() {
    let criteria: [Criterion; 12] = [
        ("brenti_h_polynomials", 60, brenti),
        ("eta_vs_excedances_type_a", 120, eta_type_a),
        ("eta_vs_b_excedances_type_b", 300, eta_type_b),
        ("cube_eta_indicator", 30, cube),
        ("eulerian_idempotents", 60, idempotents),
        ("generating_function_identities", 60, || {
            verify_identities(8, 6)
        }),
        ("phi_soundness", 60, phi_soundness),
        ("module_axioms", 120, module_axioms),
        ("x_sigma_program", 300, x_sigma),
        ("type_b_generators", 300, type_b_generators),
        ("hopf_checks", 300, hopf),
        ("cross_oracle_combinatorics", 60, cross_oracles),
    ];
    let mut failed = 0;
    for (i, (name, limit, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let within = elapsed <= Duration::from_secs(*limit);
        let (ok, note) = match &outcome {
            Ok(rep) if rep.pass() && within => (true, format!("{} checks", rep.checks.len())),
            Ok(rep) if !rep.pass() => (false, summarize(rep).unwrap_or_default()),
            Ok(_) => (false, format!("exceeded {limit} s")),
            Err(e) => (false, format!("error: {e}")),
        };
        println!(
            "{} {:>2} {:<32} {:>8.2?} / {:>3} s  {}",
            if ok { "PASS" } else { "FAIL" },
            i + 1,
            name,
            elapsed,
            limit,
            note
        );
        if !ok {
            failed += 1;
        }
    }
    if failed > 0 {
        println!("{failed} of {} criteria failed", criteria.len());
        std::process::exit(1);
    }
    println!("all {} criteria passed", criteria.len());
}

//! The `polyalg` command line driver.
//!
//! Results go to stdout as JSON (or CSV/text), logs go to stderr. Exit code
//! 0 means every check passed, 1 a verification failure, 2 an input error.
//! Identical arguments, including `--seed`, give byte-identical output.

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::arrangement::{cross_oracle_check, Arrangement, ArrangementKind};
use crate::error::{Error, Result};
use crate::gfseries::{eulerian_a, eulerian_b, verify_identities};
use crate::permstat::{enumerate_signed, enumerate_sym, forest_check, Bounds};
use crate::polyclass::{
    cube, module_axiom_check, parse_polytope_json, permutahedron, phi_soundness_check,
    set_debug_checks, type_b_permutahedron, FaceLattice, VPolytope,
};
use crate::rational::q;
use crate::report::{Check, Report};
use crate::spectra::{
    a_decompose, b_decompose, b_generators, b_generators_check, check_eta, conjecture_check,
    eta_idempotent_rank_table, eta_mobius_table, eta_permutations_table, y_basis_cube, EtaTable,
};
use crate::titsalgebra::{
    adams_element, adams_family, check_family_with_element, check_q_basis, gamma_family,
};
use crate::{hopfgp, Q};

/// Output format.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// Which η route(s) the `eta` command runs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    All,
    Mobius,
    Permutations,
    Rank,
}

/// Verification suites.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    ThmA,
    ThmB,
    Brenti,
    Gf,
    Idempotents,
    Conjecture,
    BGens,
    Hopf,
    Cube,
    Phi,
    Module,
    Oracles,
    All,
}

impl Suite {
    fn name(&self) -> &'static str {
        match self {
            Suite::ThmA => "thm-a",
            Suite::ThmB => "thm-b",
            Suite::Brenti => "brenti",
            Suite::Gf => "gf",
            Suite::Idempotents => "idempotents",
            Suite::Conjecture => "conjecture",
            Suite::BGens => "b-gens",
            Suite::Hopf => "hopf",
            Suite::Cube => "cube",
            Suite::Phi => "phi",
            Suite::Module => "module",
            Suite::Oracles => "oracles",
            Suite::All => "all",
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// η_X(Ξ_r) tables by every applicable method.
    Eta {
        /// Arrangement: A, B, or C (also `cube`).
        #[arg(long = "type")]
        kind: String,
        #[arg(long)]
        d: usize,
        /// Restrict the output to one flat, e.g. "{13,2}", "{0:1 -1,2 3}", "X_{1,3}".
        #[arg(long)]
        flat: Option<String>,
        #[arg(long, value_enum, default_value_t = MethodArg::All)]
        method: MethodArg,
    },
    /// Run a verification suite.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[arg(long)]
        d: Option<usize>,
        /// Arrangement for `brenti`, `idempotents`, `phi` and `module`.
        #[arg(long = "type")]
        kind: Option<String>,
        /// Smaller bounds for `all`: A d ≤ 4, B d ≤ 3, series order 6.
        #[arg(long)]
        quick: bool,
        /// Truncation order for type A series (type B uses `--order-b`).
        #[arg(long)]
        order: Option<usize>,
        #[arg(long)]
        order_b: Option<usize>,
        /// Random trials for `b-gens`, `hopf`, `phi` and `module`.
        #[arg(long)]
        trials: Option<usize>,
    },
    /// Signed Minkowski decomposition of a polytope read from JSON.
    Decompose {
        #[arg(long = "type")]
        kind: String,
        #[arg(long)]
        input: PathBuf,
    },
    /// Excedance and descent statistics of S_d or B_d.
    Stats {
        /// S (symmetric group) or B (hyperoctahedral group).
        #[arg(long)]
        group: String,
        #[arg(long)]
        d: usize,
    },
}

/// Parsed command line.
#[derive(Debug, Parser)]
#[command(
    name = "polyalg",
    version,
    about = "Exact computations in the polytope algebra of Coxeter zonotopes"
)]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Re-verify the deformation property after every construction.
    #[arg(long, global = true)]
    pub debug_checks: bool,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
}

/// Upper bound on `d`, overridable by `POLYALG_MAX_D`.
fn d_limit(default: usize) -> usize {
    std::env::var("POLYALG_MAX_D")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(default)
}

fn check_d(what: &str, d: usize, lo: usize, hi: usize) -> Result<()> {
    let hi = d_limit(hi);
    if d < lo || d > hi {
        return Err(Error::Input(format!(
            "{what}: d = {d} is outside {lo}..={hi}"
        )));
    }
    Ok(())
}

fn kind_of(s: &str, d: usize) -> Result<ArrangementKind> {
    ArrangementKind::from_letter(s, d)
}

/// Outcome of a command: pass flag and structured payload.
struct Outcome {
    pass: bool,
    body: Value,
    csv: Option<String>,
    text: Option<String>,
}

fn report_value(rep: &Report) -> Value {
    serde_json::to_value(&rep.checks).expect("checks serialize")
}

fn report_text(rep: &Report) -> String {
    let mut s = String::new();
    for c in &rep.checks {
        let _ = write!(s, "{} {}", if c.pass { "PASS" } else { "FAIL" }, c.name);
        if let Some(m) = &c.first_mismatch {
            let _ = write!(s, "  [{m}]");
        }
        s.push('\n');
    }
    s
}

fn report_csv(rep: &Report) -> String {
    let mut s = String::from("check,pass,first_mismatch\n");
    for c in &rep.checks {
        let m = c
            .first_mismatch
            .clone()
            .unwrap_or_default()
            .replace('"', "'");
        let _ = writeln!(s, "\"{}\",{},\"{m}\"", c.name, c.pass);
    }
    s
}

fn tables_value(arr: &Arrangement, tables: &[EtaTable]) -> Value {
    let rows: Vec<Value> = (0..arr.num_flats())
        .map(|x| {
            let mut m = Map::new();
            m.insert("flat".into(), Value::String(arr.flat_string(x)));
            for t in tables {
                m.insert(t.method.tag().into(), json!(t.values[x]));
            }
            Value::Object(m)
        })
        .collect();
    Value::Array(rows)
}

fn brenti(kind: ArrangementKind) -> Result<Check> {
    let arr = Arrangement::new(kind)?;
    let (p, want) = match kind {
        ArrangementKind::BraidA(d) => (permutahedron(&arr)?, eulerian_a(d)),
        ArrangementKind::TypeB(d) => (type_b_permutahedron(&arr)?, eulerian_b(d)),
        ArrangementKind::Coordinate(_) => {
            return Err(Error::Input("brenti takes --type A or B".into()))
        }
    };
    let h = FaceLattice::new(&arr, &p).h_polynomial();
    let name = format!("{}{}/h_equals_eulerian", kind.letter(), kind.d());
    Ok(Check::new(name, h == want)
        .with_detail(json!({"h": h.to_string(), "eulerian": want.to_string()})))
}

fn idempotents(kind: ArrangementKind) -> Result<Report> {
    let arr = Arrangement::new(kind)?;
    let ts: Vec<Q> = vec![q(2), q(3), q(5), q(-1)];
    let prefix = format!("{}{}", kind.letter(), kind.d());
    let mut rep = match kind {
        ArrangementKind::BraidA(_) => {
            check_family_with_element(&arr, &adams_family(&arr)?, |t| adams_element(&arr, t), &ts)?
        }
        ArrangementKind::Coordinate(_) => {
            let (_, fam) = gamma_family(&arr, &q(2))?;
            check_family_with_element(&arr, &fam, |t| Ok(gamma_family(&arr, t)?.0), &ts)?
        }
        ArrangementKind::TypeB(_) => {
            return Err(Error::Input(
                "idempotents takes --type A (Adams) or C (γ_t)".into(),
            ));
        }
    };
    rep.extend(check_q_basis(&arr)?);
    for c in rep.checks.iter_mut() {
        c.name = format!("{prefix}/{}", c.name);
    }
    Ok(rep)
}

fn thm_a(d: usize, bounds: &Bounds) -> Result<(Report, Value)> {
    let arr = Arrangement::new(ArrangementKind::BraidA(d))?;
    let (rep, tables) = check_eta(&arr, bounds, d <= 4)?;
    Ok((
        rep,
        json!({"arrangement": "A", "d": d, "flats": arr.num_flats(), "table": tables_value(&arr, &tables)}),
    ))
}

fn thm_b(d: usize, bounds: &Bounds) -> Result<(Report, Value)> {
    let arr = Arrangement::new(ArrangementKind::TypeB(d))?;
    let (mut rep, tables) = check_eta(&arr, bounds, false)?;
    let bottom = tables[0].get(arr.bottom(), 1);
    rep.push(
        Check::new(format!("B{d}/bottom_degree_one"), bottom == 1 << (d - 1))
            .with_detail(json!({"eta": bottom, "expected": 1u64 << (d - 1)})),
    );
    Ok((
        rep,
        json!({"arrangement": "B", "d": d, "flats": arr.num_flats(), "table": tables_value(&arr, &tables)}),
    ))
}

fn cube_suite(d: usize, bounds: &Bounds) -> Result<Report> {
    let arr = Arrangement::new(ArrangementKind::Coordinate(d))?;
    let (mut rep, tables) = check_eta(&arr, bounds, d <= 4)?;
    let mism = (0..arr.num_flats()).find_map(|x| {
        let crate::arrangement::Flat::Zeros(s) = arr.flat(x) else {
            unreachable!()
        };
        (0..=d)
            .find(|&r| tables[0].get(x, r) != u64::from(r == s.len()))
            .map(|r| format!("{} r={r}", arr.flat_string(x)))
    });
    rep.push(Check::new(format!("C{d}/eta_is_indicator"), true).mismatch(mism));
    rep.extend(y_basis_cube(d)?);
    Ok(rep)
}

fn hopf_suite(n: usize, trials: usize, seed: u64) -> Result<Report> {
    let mut rep = hopfgp::hopf_axiom_check(n, seed)?;
    if n >= 2 {
        rep.extend(hopfgp::mc_coideal_check(n, trials, seed)?);
    }
    rep.extend(hopfgp::two_one_monoid_check(n, seed)?);
    Ok(rep)
}

struct VerifyArgs {
    d: Option<usize>,
    kind: Option<String>,
    quick: bool,
    order: Option<usize>,
    order_b: Option<usize>,
    trials: Option<usize>,
    seed: u64,
}

fn run_suite(suite: Suite, a: &VerifyArgs, bounds: &Bounds) -> Result<(Report, Value)> {
    let start = Instant::now();
    let none = Value::Null;
    let out = match suite {
        Suite::ThmA => {
            let d = a.d.unwrap_or(4);
            check_d("thm-a", d, 1, 5)?;
            thm_a(d, bounds)?
        }
        Suite::ThmB => {
            let d = a.d.unwrap_or(3);
            check_d("thm-b", d, 1, 4)?;
            thm_b(d, bounds)?
        }
        Suite::Brenti => {
            let letter = a.kind.clone().unwrap_or_else(|| "A".into());
            let d = a.d.unwrap_or(4);
            let kind = kind_of(&letter, d)?;
            check_d(
                "brenti",
                d,
                1,
                if matches!(kind, ArrangementKind::TypeB(_)) {
                    4
                } else {
                    6
                },
            )?;
            let mut rep = Report::new();
            rep.push(brenti(kind)?);
            (rep, none)
        }
        Suite::Gf => {
            let (oa, ob) = (a.order.unwrap_or(8), a.order_b.unwrap_or(6));
            if oa > d_limit(10) || ob > d_limit(8) {
                return Err(Error::Input(format!(
                    "series orders {oa}/{ob} exceed the bounds"
                )));
            }
            (verify_identities(oa, ob)?, none)
        }
        Suite::Idempotents => {
            let d = a.d.unwrap_or(3);
            check_d("idempotents", d, 1, 4)?;
            (
                idempotents(kind_of(a.kind.as_deref().unwrap_or("A"), d)?)?,
                none,
            )
        }
        Suite::Conjecture => {
            let d = a.d.unwrap_or(4);
            check_d("conjecture", d, 1, 4)?;
            (conjecture_check(d)?, none)
        }
        Suite::BGens => {
            let d = a.d.unwrap_or(3);
            check_d("b-gens", d, 1, 4)?;
            (b_generators_check(d, a.trials.unwrap_or(10), a.seed)?, none)
        }
        Suite::Hopf => {
            let d = a.d.unwrap_or(3);
            check_d("hopf", d, 1, 4)?;
            (hopf_suite(d, a.trials.unwrap_or(25), a.seed)?, none)
        }
        Suite::Cube => {
            let d = a.d.unwrap_or(3);
            check_d("cube", d, 1, 5)?;
            (cube_suite(d, bounds)?, none)
        }
        Suite::Phi => {
            let d = a.d.unwrap_or(3);
            check_d("phi", d, 1, 3)?;
            let letter = a.kind.clone().unwrap_or_else(|| "A".into());
            let arr = Arrangement::new(kind_of(&letter, d)?)?;
            let n = a.trials.unwrap_or(25);
            (phi_soundness_check(&arr, n, n, a.seed)?, none)
        }
        Suite::Module => {
            let letter = a.kind.clone().unwrap_or_else(|| "A".into());
            let kind = kind_of(&letter, a.d.unwrap_or(3))?;
            check_d("module", kind.d(), 1, 3)?;
            let arr = Arrangement::new(kind)?;
            let base = match kind {
                ArrangementKind::BraidA(_) => permutahedron(&arr)?,
                ArrangementKind::TypeB(_) => type_b_permutahedron(&arr)?,
                ArrangementKind::Coordinate(_) => cube(&arr)?,
            };
            (
                module_axiom_check(&arr, &base, a.trials.unwrap_or(20), a.seed)?,
                none,
            )
        }
        Suite::Oracles => {
            let d = a.d.unwrap_or(3);
            check_d("oracles", d, 1, 6)?;
            let mut rep = forest_check(d, bounds)?;
            let mut kinds = Vec::new();
            if d <= 4 {
                kinds.extend([ArrangementKind::BraidA(d), ArrangementKind::Coordinate(d)]);
            }
            if d <= 3 {
                kinds.push(ArrangementKind::TypeB(d));
            }
            for kind in kinds {
                rep.extend(cross_oracle_check(kind)?);
            }
            (rep, none)
        }
        Suite::All => run_all(a, bounds)?,
    };
    log::info!(
        "verify {} finished in {:.2?}",
        suite.name(),
        start.elapsed()
    );
    Ok(out)
}

fn run_all(a: &VerifyArgs, bounds: &Bounds) -> Result<(Report, Value)> {
    let (amax, bmax, order_a, order_b) = if a.quick { (4, 3, 6, 6) } else { (5, 4, 8, 6) };
    let mut rep = Report::new();
    let mut suites = Vec::new();
    let mut add = |name: &str, r: Report| {
        suites.push(json!({"suite": name, "pass": r.pass(), "checks": r.checks.len()}));
        rep.extend(r);
    };
    let sub = |d: usize, kind: Option<&str>| VerifyArgs {
        d: Some(d),
        kind: kind.map(String::from),
        quick: a.quick,
        order: Some(order_a),
        order_b: Some(order_b),
        trials: a.trials,
        seed: a.seed,
    };
    for d in 2..=amax {
        add("thm-a", run_suite(Suite::ThmA, &sub(d, None), bounds)?.0);
    }
    for d in 2..=bmax {
        add("thm-b", run_suite(Suite::ThmB, &sub(d, None), bounds)?.0);
    }
    for d in 2..=amax {
        add(
            "brenti",
            run_suite(Suite::Brenti, &sub(d, Some("A")), bounds)?.0,
        );
    }
    for d in 2..=bmax {
        add(
            "brenti",
            run_suite(Suite::Brenti, &sub(d, Some("B")), bounds)?.0,
        );
    }
    add("gf", run_suite(Suite::Gf, &sub(0, None), bounds)?.0);
    for d in 1..=amax.min(4) {
        add(
            "idempotents",
            run_suite(Suite::Idempotents, &sub(d, Some("A")), bounds)?.0,
        );
        add(
            "idempotents",
            run_suite(Suite::Idempotents, &sub(d, Some("C")), bounds)?.0,
        );
    }
    for d in 2..=amax.min(4) {
        add(
            "conjecture",
            run_suite(Suite::Conjecture, &sub(d, None), bounds)?.0,
        );
    }
    for d in 2..=bmax {
        add("b-gens", run_suite(Suite::BGens, &sub(d, None), bounds)?.0);
    }
    for d in 1..=bmax.min(3) {
        add("hopf", run_suite(Suite::Hopf, &sub(d, None), bounds)?.0);
    }
    for d in 1..=amax {
        add("cube", run_suite(Suite::Cube, &sub(d, None), bounds)?.0);
    }
    for d in 1..=3 {
        for letter in ["A", "B", "C"] {
            if !(letter == "A" && d == 1) {
                add(
                    "phi",
                    run_suite(Suite::Phi, &sub(d, Some(letter)), bounds)?.0,
                );
            }
        }
    }
    add(
        "module",
        run_suite(Suite::Module, &sub(3, Some("A")), bounds)?.0,
    );
    add(
        "module",
        run_suite(Suite::Module, &sub(2, Some("B")), bounds)?.0,
    );
    for d in 1..=if a.quick { 4 } else { 6 } {
        add(
            "oracles",
            run_suite(Suite::Oracles, &sub(d, None), bounds)?.0,
        );
    }
    Ok((rep, json!({"quick": a.quick, "suites": suites})))
}

fn eta_command(
    kind: &str,
    d: usize,
    flat: Option<&str>,
    method: MethodArg,
    bounds: &Bounds,
) -> Result<Outcome> {
    let kind = kind_of(kind, d)?;
    let hi = match kind {
        ArrangementKind::BraidA(_) => 6,
        ArrangementKind::TypeB(_) => 4,
        ArrangementKind::Coordinate(_) => 6,
    };
    check_d("eta", d, 1, hi)?;
    let arr = Arrangement::new(kind)?;
    let flat_ix = flat.map(|s| arr.parse_flat_index(s)).transpose()?;
    let want = |m: MethodArg| method == MethodArg::All || method == m;
    let mut tables = Vec::new();
    if want(MethodArg::Mobius) {
        tables.push(eta_mobius_table(&arr)?);
    }
    if want(MethodArg::Permutations) && !matches!(kind, ArrangementKind::Coordinate(_)) {
        tables.push(eta_permutations_table(&arr, bounds)?);
    }
    let rank_ok = d <= 4 && !matches!(kind, ArrangementKind::TypeB(_));
    if want(MethodArg::Rank) {
        if rank_ok {
            tables.push(eta_idempotent_rank_table(&arr)?);
        } else if method == MethodArg::Rank {
            return Err(Error::Input(
                "idempotent ranks need --type A or C with d ≤ 4".into(),
            ));
        }
    }
    if tables.is_empty() {
        return Err(Error::Input("no method applies to this arrangement".into()));
    }
    let disagreement = tables
        .windows(2)
        .find_map(|w| w[0].first_difference(&arr, &w[1]));
    let pass = disagreement.is_none();
    let methods: Vec<&str> = tables.iter().map(|t| t.method.tag()).collect();
    let (body, text, csv) = match flat_ix {
        Some(x) => {
            let mut vals = Map::new();
            for t in &tables {
                vals.insert(t.method.tag().into(), json!(t.values[x]));
            }
            let body = json!({
                "arrangement": kind.letter(), "d": d, "flat": arr.flat_string(x),
                "values": vals, "agree": pass,
            });
            let mut text = format!("flat {}\n", arr.flat_string(x));
            for t in &tables {
                let _ = writeln!(text, "{}: {:?}", t.method.tag(), t.values[x]);
            }
            let mut csv = String::from("flat,r,value,method\n");
            for t in &tables {
                for (r, v) in t.values[x].iter().enumerate() {
                    let _ = writeln!(csv, "\"{}\",{r},{v},{}", arr.flat_string(x), t.method.tag());
                }
            }
            (body, text, csv)
        }
        None => {
            let body = json!({
                "arrangement": kind.letter(), "d": d, "methods": methods, "agree": pass,
                "first_disagreement": disagreement, "table": tables_value(&arr, &tables),
            });
            let mut text = String::new();
            for x in 0..arr.num_flats() {
                let _ = write!(text, "{}", arr.flat_string(x));
                for t in &tables {
                    let _ = write!(text, "  {}={:?}", t.method.tag(), t.values[x]);
                }
                text.push('\n');
            }
            let csv: String = tables
                .iter()
                .enumerate()
                .map(|(i, t)| {
                    let c = t.to_csv(&arr);
                    if i == 0 {
                        c
                    } else {
                        c.lines().skip(1).map(|l| format!("{l}\n")).collect()
                    }
                })
                .collect();
            (body, text, csv)
        }
    };
    Ok(Outcome {
        pass,
        body,
        csv: Some(csv),
        text: Some(text),
    })
}

fn decompose_command(kind: &str, input: &PathBuf) -> Result<Outcome> {
    let s = std::fs::read_to_string(input)
        .map_err(|e| Error::Input(format!("cannot read {}: {e}", input.display())))?;
    let (pk, points) = parse_polytope_json(&s)?;
    let want = kind_of(kind, pk.d())?;
    if want != pk {
        return Err(Error::Input(format!(
            "--type {kind} does not match the polytope arrangement {}",
            pk.letter()
        )));
    }
    let arr = Arrangement::new(pk)?;
    let p = VPolytope::from_points(&arr, &points)?;
    let dec = match pk {
        ArrangementKind::BraidA(d) => {
            check_d("decompose", d, 1, 5)?;
            a_decompose(&arr, &p)?
        }
        ArrangementKind::TypeB(d) => {
            check_d("decompose", d, 1, 4)?;
            b_decompose(&arr, &b_generators(&arr)?, &p)?
        }
        ArrangementKind::Coordinate(_) => {
            return Err(Error::Input("decompose takes --type A or B".into()))
        }
    };
    let pass = dec.unique() && dec.reconstructed;
    let body = json!({
        "arrangement": pk.letter(), "d": pk.d(), "coefficients": dec.to_json(),
        "unique": dec.unique(), "reconstructed": dec.reconstructed,
    });
    let mut csv = String::from("generator,coeff\n");
    let mut text = String::new();
    for (l, c) in dec.nonzero() {
        let _ = writeln!(csv, "{l},{}", crate::rational::fmt_q(&c));
        let _ = writeln!(text, "{l}\t{}", crate::rational::fmt_q(&c));
    }
    Ok(Outcome {
        pass,
        body,
        csv: Some(csv),
        text: Some(text),
    })
}

fn stats_command(group: &str, d: usize, bounds: &Bounds) -> Result<Outcome> {
    let mut exc = vec![0u64; d + 1];
    let mut des = vec![0u64; d + 1];
    let mut count = 0u64;
    let label = match group.to_ascii_uppercase().as_str() {
        "S" | "A" => {
            check_d("stats", d, 1, bounds.sym)?;
            for s in enumerate_sym(d, bounds)? {
                exc[s.exc()] += 1;
                des[s.des()] += 1;
                count += 1;
            }
            "S"
        }
        "B" => {
            check_d("stats", d, 1, bounds.signed)?;
            for s in enumerate_signed(d, bounds)? {
                exc[s.exc_b()] += 1;
                des[s.des()] += 1;
                count += 1;
            }
            "B"
        }
        _ => {
            return Err(Error::Input(format!(
                "unknown group '{group}', expected S or B"
            )))
        }
    };
    let eulerian: Vec<u64> = match label {
        "S" => eulerian_a(d),
        _ => eulerian_b(d),
    }
    .coeffs()
    .iter()
    .map(|c| crate::rational::to_i64(c).unwrap_or(-1) as u64)
    .collect();
    let pad = |v: &[u64]| {
        let mut v = v.to_vec();
        v.resize(d + 1, 0);
        v
    };
    let eulerian = pad(&eulerian);
    let pass = exc == des && exc == eulerian;
    let body = json!({
        "group": label, "d": d, "order": count,
        "excedances": exc, "descents": des, "eulerian": eulerian,
        "equidistributed": pass,
    });
    let mut csv = String::from("k,excedances,descents,eulerian\n");
    for k in 0..=d {
        let _ = writeln!(csv, "{k},{},{},{}", exc[k], des[k], eulerian[k]);
    }
    let text = csv.replace(',', "\t");
    Ok(Outcome {
        pass,
        body,
        csv: Some(csv),
        text: Some(text),
    })
}

fn execute(cfg: &RunConfig) -> Result<Outcome> {
    let bounds = Bounds::from_env();
    match &cfg.command {
        Command::Eta {
            kind,
            d,
            flat,
            method,
        } => eta_command(kind, *d, flat.as_deref(), *method, &bounds),
        Command::Verify {
            suite,
            d,
            kind,
            quick,
            order,
            order_b,
            trials,
        } => {
            let args = VerifyArgs {
                d: *d,
                kind: kind.clone(),
                quick: *quick,
                order: *order,
                order_b: *order_b,
                trials: *trials,
                seed: cfg.seed,
            };
            let (rep, extra) = run_suite(*suite, &args, &bounds)?;
            let mut body =
                json!({"suite": suite.name(), "pass": rep.pass(), "checks": report_value(&rep)});
            if let Value::Object(m) = extra {
                for (k, v) in m {
                    body[k] = v;
                }
            }
            Ok(Outcome {
                pass: rep.pass(),
                body,
                csv: Some(report_csv(&rep)),
                text: Some(report_text(&rep)),
            })
        }
        Command::Decompose { kind, input } => decompose_command(kind, input),
        Command::Stats { group, d } => stats_command(group, *d, &bounds),
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Internal(_) => 1,
        _ => 2,
    }
}

/// Runs the command line, writing results to `out` and errors to stderr.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cfg = match RunConfig::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if e.use_stderr() {
                e.print()
            } else {
                write!(out, "{e}")
            };
            return code;
        }
    };
    set_debug_checks(cfg.debug_checks);
    match execute(&cfg) {
        Ok(o) => {
            let rendered = match cfg.format {
                Format::Json => serde_json::to_string_pretty(&o.body).expect("serializable") + "\n",
                Format::Csv => o.csv.unwrap_or_default(),
                Format::Text => o.text.unwrap_or_default(),
            };
            if out.write_all(rendered.as_bytes()).is_err() {
                return 2;
            }
            if o.pass {
                0
            } else {
                1
            }
        }
        Err(e) => {
            log::error!("{e}");
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

/// Runs with the process arguments and stdout.
pub fn run() -> i32 {
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    run_with(std::env::args_os(), &mut lock)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String) {
        let mut buf = Vec::new();
        let code = run_with(
            std::iter::once("polyalg").chain(args.iter().copied()),
            &mut buf,
        );
        (code, String::from_utf8(buf).unwrap())
    }

    #[test]
    fn eta_cube_flat() {
        let (code, out) = run_str(&["eta", "--type", "cube", "--d", "3", "--flat", "X_{1,3}"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["values"]["mobius_formula"], json!([0, 0, 1, 0]));
        assert_eq!(v["values"]["idempotent_rank"], json!([0, 0, 1, 0]));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run_str(&["eta", "--type", "Q", "--d", "3"]).0, 2);
        assert_eq!(run_str(&["eta", "--type", "A", "--d", "40"]).0, 2);
        assert_eq!(run_str(&["verify", "thm-a", "--bogus"]).0, 2);
        assert_eq!(run_str(&["stats", "--group", "S", "--d", "4"]).0, 0);
        assert_eq!(
            run_str(&["decompose", "--type", "A", "--input", "/nonexistent.json"]).0,
            2
        );
    }

    #[test]
    fn verify_brenti_b3() {
        let (code, out) = run_str(&["verify", "brenti", "--type", "B", "--d", "3"]);
        assert_eq!(code, 0, "{out}");
    }

    #[test]
    fn deterministic_output() {
        let args = ["verify", "hopf", "--d", "2", "--seed", "5", "--trials", "3"];
        let a = run_str(&args);
        let b = run_str(&args);
        assert_eq!(a, b);
        assert_eq!(a.0, 0);
    }

    #[test]
    fn text_and_csv_formats() {
        let (code, out) = run_str(&["verify", "cube", "--d", "2", "--format", "text"]);
        assert_eq!(code, 0);
        assert!(out.lines().all(|l| l.starts_with("PASS ")));
        let (code, out) = run_str(&[
            "eta", "--type", "A", "--d", "3", "--format", "csv", "--method", "mobius",
        ]);
        assert_eq!(code, 0);
        assert!(out.starts_with("flat,r,value,method\n"));
    }
}

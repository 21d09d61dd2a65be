//! The acceptance criteria, one line each. All suites run once (slow checks
//! included) and each criterion is judged on its checks, its runtime budget,
//! and where noted an extra oracle computed here.

use std::collections::HashMap;
use std::time::Instant;

use h3_dunkl::dunkl::{unit, DunklContext};
use h3_dunkl::polyalg::MultiPoly;
use h3_dunkl::report::{CheckResult, Status};
use h3_dunkl::scalars::{GoldenNumber, ParamScalar, Rational};
use h3_dunkl::verify::{random, run_all, VerifyOptions, H3_J_WITNESS};
use h3_dunkl::waves::{vertex_pair, QFamily};

struct Outcome {
    ok: bool,
    detail: String,
}

fn ids<'a>(all: &'a HashMap<String, CheckResult>, want: &[&str]) -> Result<Vec<&'a CheckResult>, String> {
    want.iter().map(|id| all.get(*id).ok_or_else(|| format!("missing check {}", id))).collect()
}

/// All listed checks ran and passed, within `budget_s` seconds in total.
fn judge(all: &HashMap<String, CheckResult>, want: &[&str], budget_s: f64) -> Outcome {
    let cs = match ids(all, want) {
        Ok(c) => c,
        Err(e) => return Outcome { ok: false, detail: e },
    };
    let secs: f64 = cs.iter().map(|c| c.elapsed_ms).sum::<f64>() / 1e3;
    let bad: Vec<String> = cs.iter().filter(|c| c.status != Status::Pass).map(|c| format!("{} {:?}", c.id, c.status)).collect();
    let ok = bad.is_empty() && secs < budget_s;
    let detail = if bad.is_empty() {
        format!("{} checks, {:.1} s (budget {} s)", cs.len(), secs, budget_s)
    } else {
        format!("{}; {:.1} s", bad.join(", "), secs)
    };
    Outcome { ok, detail }
}

fn and(mut o: Outcome, extra: Result<String, String>) -> Outcome {
    match extra {
        Ok(s) => o.detail = format!("{}; {}", o.detail, s),
        Err(e) => {
            o.ok = false;
            o.detail = format!("{}; {}", o.detail, e);
        }
    }
    o
}

fn census_oracle(ctx: &DunklContext) -> Result<String, String> {
    let g = ctx.group();
    let (mut refl, mut rot, mut imp) = (0, 0, 0);
    let mut by_order: HashMap<(u8, String), usize> = HashMap::new();
    for e in &g.elements {
        if e.det == -1 && e.trace == GoldenNumber::from_int(1) {
            refl += 1;
        } else if e.det == -1 {
            imp += 1;
        } else if e.order > 1 {
            rot += 1;
            *by_order.entry((e.order, e.trace.to_string())).or_default() += 1;
        }
    }
    let mut classes: Vec<usize> = by_order.values().copied().collect();
    classes.sort();
    let want = (120, 15, 59, 45, vec![12, 12, 15, 20]);
    let got = (g.elements.len(), refl, rot, imp, classes);
    if got == want {
        Ok("recount from det/trace/order agrees".into())
    } else {
        Err(format!("recount {:?}", got))
    }
}

fn d1_oracle(ctx: &DunklContext) -> Result<String, String> {
    let want = MultiPoly::parse("(3 + 23*k/2)*x1^2 - (k/2)*(tau - 7)*x2^2 + (k/2)*(tau + 6)*x3^2").unwrap();
    let got = ctx.dunkl_direct(&unit(0), &MultiPoly::parse("x1^3").unwrap()).map_err(|e| e.to_string())?;
    if got == want {
        Ok("direct difference-quotient route agrees".into())
    } else {
        Err(format!("direct route gave {}", got))
    }
}

fn moments_oracle(ctx: &DunklContext) -> Result<String, String> {
    let mut r = random::rng(0xACCE);
    for k in [0i64, 1] {
        let kc = ctx.at_kappa(Rational::from_integer(k.into()));
        for _ in 0..3 {
            let p = random::polynomial(&mut r, 4, 3, false);
            let q = random::polynomial(&mut r, 4, 3, false);
            let a = kc.pairing_l2(&p, &q).map_err(|e| e.to_string())?;
            let b = ctx.pairing_l2_moments(&p, &q, &Rational::from_integer(k.into())).map_err(|e| e.to_string())?;
            if a != b {
                return Err(format!("κ = {}: {} vs {}", k, a, b));
            }
        }
    }
    Ok("6 fresh pairs agree".into())
}

fn witness_oracle() -> Result<String, String> {
    let w = MultiPoly::parse(H3_J_WITNESS.trim()).map_err(|e| e.to_string())?;
    if w.is_zero() {
        Err("archived witness is zero".into())
    } else {
        Ok(format!("archived witness has {} terms", w.len()))
    }
}

/// 𝓗̃w_n/w_n for n ≤ 6, against both candidate constants.
fn energy_oracle(ctx: &DunklContext) -> Result<String, String> {
    let (y0, _) = vertex_pair();
    let fam = QFamily::new(&ctx.group().vertices.i_plus, y0, 6);
    let w = ParamScalar::omega();
    let k = ParamScalar::kappa();
    let mut printed_matches = 0;
    for n in 0..=6i64 {
        let wn = fam.w(n as usize).map_err(|e| e.to_string())?;
        let image = ctx.hamiltonian_tilde(&wn).map_err(|e| e.to_string())?;
        let (m, c) = wn.terms().next().ok_or("w_n vanished")?;
        let lambda = image.coeff(m).div_ref(c).map_err(|e| e.to_string())?;
        if image != wn.scale(&lambda) {
            return Err(format!("w_{} is not an eigenvector", n));
        }
        let standard = w.mul_ref(&ParamScalar::from_int(3 + 2 * n).add_ref(&k.mul_ref(&ParamScalar::from_int(30))));
        let printed = w.mul_ref(&ParamScalar::from_int(3 + 2 * n).add_ref(&k.mul_ref(&ParamScalar::from_int(15))));
        if lambda != standard {
            return Err(format!("n = {}: eigenvalue {} is neither candidate", n, lambda));
        }
        if lambda == printed {
            printed_matches += 1;
        }
    }
    Ok(format!(
        "eigenvalue is ω(3+30κ+2n) for n ≤ 6; printed ω(15κ+2n+3) matches {} of 7 (DISCREPANCY FLAGGED)",
        printed_matches
    ))
}

#[test]
fn acceptance() {
    let ctx = DunklContext::new().unwrap();
    let t = Instant::now();
    let reports = run_all(&ctx, &VerifyOptions { slow: true, ..Default::default() });
    eprintln!("suites finished in {:.1} s", t.elapsed().as_secs_f64());
    let all: HashMap<String, CheckResult> = reports.into_iter().flat_map(|r| r.checks).map(|c| (c.id.clone(), c)).collect();

    let mut results: Vec<(u32, &str, Outcome)> = Vec::new();

    results.push((1, "group census", and(judge(&all, &["group.census"], 1.0), census_oracle(&ctx))));
    results.push((2, "Dunkl sanity", and(judge(&all, &["dunkl.d1x1cubed", "dunkl.commute"], 10.0), d1_oracle(&ctx))));
    results.push((
        3,
        "operator identities on P≤4",
        judge(&all, &["dunkl.xDx", "dunkl.xsq_delta", "dunkl.angsq", "dunkl.jprops", "dunkl.ham_ha", "dunkl.h1"], 60.0),
    ));
    results.push((
        4,
        "generating-function suite",
        judge(&all, &["waves.genfn", "waves.qderiv", "waves.deltam", "waves.parity", "waves.pdelq"], 120.0),
    ));
    let c5a = judge(&all, &["waves.harmonic", "waves.w2norm", "waves.w2ip", "waves.winpro", "waves.invariant_vanishing", "waves.norm_phiG6", "waves.norm_phiG10", "waves.norm_phiG12"], 120.0);
    let c5b = judge(&all, &["waves.norm_phiG16"], 600.0);
    results.push((5, "harmonicity and norms", Outcome { ok: c5a.ok && c5b.ok, detail: format!("{}; 2n = 16: {}", c5a.detail, c5b.detail) }));
    results.push((6, "E-operator moment oracle", and(judge(&all, &["dunkl.eoperator"], 60.0), moments_oracle(&ctx))));
    results.push((
        7,
        "J-eigenvalue suite",
        judge(&all, &["jsq.phi_odd", "jsq.phi_invariant", "jsq.phi_even", "jsq.combination", "jsq.w"], 120.0),
    ));
    results.push((8, "H3 eigenvalues on φ₂ and L₂", judge(&all, &["spectral.phi2", "spectral.laguerre2"], 600.0)));
    results.push((
        9,
        "H2action two ways",
        judge(&all, &["cherednik.h2action_poly", "cherednik.h2action_kernel", "cherednik.h2action_invariant"], 900.0),
    ));
    results.push((10, "κ = 0 kernel checks", and(judge(&all, &["cherednik.kappa0_j1", "cherednik.h3_j"], 120.0), witness_oracle())));
    results.push((11, "Macdonald ratio", judge(&all, &["macdonald.symbolic", "macdonald.kappa1", "macdonald.kappa0"], 1800.0)));
    let mut c12 = judge(&all, &["numeric.phi6G"], 120.0);
    if let Some(w) = all.get("numeric.phi6G").and_then(|c| c.witness.as_ref()) {
        c12.detail = format!("{}; z = {:.2}", c12.detail, w["z"].as_f64().unwrap_or(f64::NAN));
    }
    results.push((12, "Monte-Carlo cross-check", c12));
    let mut c13 = and(judge(&all, &["waves.energy"], 60.0), energy_oracle(&ctx));
    if all.get("waves.energy").and_then(|c| c.note.as_ref()).is_none() {
        c13.ok = false;
        c13.detail.push_str("; report carries no discrepancy note");
    }
    results.push((13, "eigenvalue-constant adjudication", c13));

    let mut failed = Vec::new();
    for (n, name, o) in &results {
        println!("criterion {:>2} {:<36} {}  {}", n, name, if o.ok { "PASS" } else { "FAIL" }, o.detail);
        if !o.ok {
            failed.push(*n);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {:?}", failed);
}

//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use serde_json::Value;

use kacres_core::diagram::{
    diagram_from_dominant, dominant_from_diagram, is_isolated, is_left_isolated,
};
use kacres_core::moves::{degree, leapfrog_count};
use kacres_core::series::{
    complexity, f_poly, f_poly_closed, f_support_dim, rank_variety_dim, z_complexity,
};
use kacres_core::verify::{compositions_of, verify};
use kacres_core::{
    DominantWeight, IntPolynomial, Resolver, RunComposition, VerifyOptions, WeightDiagram,
};

type Outcome = Result<String, String>;

fn wd(v: &[i64]) -> WeightDiagram {
    WeightDiagram::new(v.to_vec()).unwrap()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit: Duration) -> Result<(), String> {
    ensure(elapsed < limit, || format!("took {elapsed:?}, limit {limit:?}"))
}

fn kacres_json(args: &[&str]) -> Result<Value, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_kacres"))
        .args(args)
        .env_remove("KACRES_CACHE")
        .output()
        .map_err(|e| e.to_string())?;
    ensure(out.status.success(), || String::from_utf8_lossy(&out.stderr).into_owned())?;
    serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())
}

fn rows(v: &Value) -> Vec<(i64, i64, i64)> {
    let mut rows: Vec<(i64, i64, i64)> = v["rows"]
        .as_array()
        .map(|a| {
            a.iter()
                .map(|r| {
                    (
                        r["ell"].as_i64().unwrap_or(-1),
                        r["leapfrogs"].as_i64().unwrap_or(-1),
                        r["degree"].as_i64().unwrap_or(-1),
                    )
                })
                .collect()
        })
        .unwrap_or_default();
    rows.sort();
    rows
}

fn example_one() -> Outcome {
    let start = Instant::now();
    let mu = wd(&[3, 4, 5, 7, 8]);
    let lam = wd(&[0, 1, 3, 5, 6]);
    let r = Resolver::new().resolve(&mu, 6).map_err(|e| e.to_string())?;
    for d in [4, 5] {
        ensure(r.multiplicity(d, &lam) >= 1, || format!("λ missing in degree {d}"))?;
    }
    let v = kacres_json(&["functions", "--mu", "[3,4,5,7,8]", "--lambda", "[0,1,3,5,6]"])?;
    let got = rows(&v);
    ensure(got == vec![(12, 1, 5), (12, 2, 4)], || format!("function rows {got:?}"))?;
    within(start.elapsed(), Duration::from_secs(10))?;
    Ok(format!("degrees 4,5; (ℓ,L) = (12,2),(12,1); {:?}", start.elapsed()))
}

fn example_two() -> Outcome {
    let start = Instant::now();
    let resolver = Resolver::new();
    let mu = wd(&[0, 1, 2, 3, 8, 9, 10, 11]);
    let lam = wd(&[-4, -3, 0, 1, 4, 5, 8, 9]);
    let r = resolver.resolve(&mu, 9).map_err(|e| e.to_string())?;
    let m = r.multiplicity(8, &lam);
    ensure(m == 2, || format!("multiplicity {m} in degree 8"))?;
    let labelled = resolver.resolve_with_functions(&mu, 8).map_err(|e| e.to_string())?;
    let fs = labelled.terms[8].summands.get(&lam).cloned().unwrap_or_default();
    ensure(fs.len() == 2, || format!("{} labels in degree 8", fs.len()))?;
    for f in &fs {
        let (l, lf, d) = (f.relative_length(), leapfrog_count(f), degree(f).map_err(|e| e.to_string())?);
        ensure((l, lf, d) == (24, 4, 8), || format!("{f}: ℓ={l} L={lf} d={d}"))?;
    }
    ensure(!fs[0].same_arrows(&fs[1]), || "the two labels coincide".into())?;
    within(start.elapsed(), Duration::from_secs(60))?;
    Ok(format!("multiplicity 2 in degree 8, both ℓ=24 L=4; {:?}", start.elapsed()))
}

fn run_checks(opts: VerifyOptions, limit: Duration) -> Outcome {
    let start = Instant::now();
    let report = verify(&opts).map_err(|e| e.to_string())?;
    if !report.passed() {
        let lines: Vec<String> = report.failures().map(|c| c.to_string()).collect();
        return Err(lines.join("; "));
    }
    within(start.elapsed(), limit)?;
    let cases: u64 = report.checks.iter().map(|c| c.cases as u64).sum();
    Ok(format!(
        "{} checks, {cases} cases, corpus: {}; {:?}",
        report.checks.len(),
        report.corpus,
        start.elapsed()
    ))
}

fn triangle() -> Outcome {
    run_checks(
        VerifyOptions {
            max_n: 6,
            max_degree: 8,
            checks: vec!["triangle".into()],
            ..VerifyOptions::default()
        },
        Duration::from_secs(300),
    )
}

fn conversion() -> Outcome {
    let w = DominantWeight::new(vec![2, 2, 1, -4]).map_err(|e| e.to_string())?;
    let d = diagram_from_dominant(&w).map_err(|e| e.to_string())?;
    ensure(d == wd(&[-4, 2, 4, 5]), || format!("diagram {d}"))?;
    ensure(dominant_from_diagram(&d) == w, || "round trip differs".into())?;
    let flags = |p: fn(&WeightDiagram, i64) -> kacres_core::Result<bool>| -> Result<Vec<bool>, String> {
        d.dots().iter().map(|&x| p(&d, x).map_err(|e| e.to_string())).collect()
    };
    let iso = flags(is_isolated)?;
    let left = flags(is_left_isolated)?;
    ensure(iso == [true, true, false, false], || format!("isolated {iso:?}"))?;
    ensure(left == [true, true, true, false], || format!("left-isolated {left:?}"))?;
    Ok("[-4,2,4,5]; isolated -4,2; left-isolated -4,2,4".into())
}

fn f_polys() -> Outcome {
    let start = Instant::now();
    let f2 = f_poly(2).map_err(|e| e.to_string())?;
    ensure(f2 == IntPolynomial::one(), || format!("f_2 = {f2}"))?;
    for r in 0..=30 {
        let rec = f_poly(r).map_err(|e| e.to_string())?;
        let closed = f_poly_closed(r).map_err(|e| e.to_string())?;
        ensure(rec == closed, || format!("f_{r}: {rec} vs {closed}"))?;
        let at1 = rec.eval(1).map_err(|e| e.to_string())?;
        ensure(at1 > 0, || format!("f_{r}(1) = {at1}"))?;
    }
    within(start.elapsed(), Duration::from_secs(1))?;
    Ok(format!("r ≤ 30; {:?}", start.elapsed()))
}

fn formulas() -> Outcome {
    let mut count = 0;
    for n in 0..=20usize {
        for o in (n % 2..=n).step_by(2) {
            let l = (n - o) / 2;
            let c = complexity(n, o).map_err(|e| e.to_string())?;
            let r = rank_variety_dim(n, l).map_err(|e| e.to_string())?;
            ensure(c == r, || format!("n={n} o={o}: complexity {c}, rank variety {r}"))?;
            let f = f_support_dim(n, o).map_err(|e| e.to_string())?;
            ensure(f == l, || format!("n={n} o={o}: f_support_dim {f}"))?;
            count += 1;
        }
        for parts in compositions_of(n).into_iter().filter(|p| !p.is_empty()) {
            let pi = RunComposition::new(parts).map_err(|e| e.to_string())?;
            let o = pi.odd_parts();
            let f = f_support_dim(n, o).map_err(|e| e.to_string())?;
            ensure(f == z_complexity(&pi), || format!("{pi}: f_support_dim {f}"))?;
        }
    }
    Ok(format!("{count} (n, o) pairs, n ≤ 20"))
}

fn order_independence() -> Outcome {
    run_checks(
        VerifyOptions {
            max_n: 5,
            trials: 100,
            checks: vec!["order-independence".into()],
            ..VerifyOptions::default()
        },
        Duration::from_secs(300),
    )
}

fn laws() -> Outcome {
    let cases = 1000;
    let out = run_checks(
        VerifyOptions {
            cases,
            checks: vec!["laws".into()],
            ..VerifyOptions::default()
        },
        Duration::from_secs(300),
    )?;
    Ok(format!("{} laws at {cases} cases; {out}", kacres_core::laws::LAWS.len()))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("example-1-successive-degrees", example_one),
        ("example-2-double-occurrence", example_two),
        ("oracle-triangle", triangle),
        ("dominant-conversion", conversion),
        ("f-polynomials", f_polys),
        ("formula-identities", formulas),
        ("order-independence", order_independence),
        ("property-laws", laws),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("PASS {} {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {} {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

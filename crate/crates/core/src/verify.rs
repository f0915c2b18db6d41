//! Verification harness: exhaustive checks over a corpus of diagrams plus the
//! randomized property laws, collected into a [`VerificationReport`].
//!
//! Corpus diagrams are visited in order of size, span and position, and a
//! failing diagram is re-run at smaller degrees, so the first counterexample
//! reported is minimal in that order.

use std::collections::BTreeMap;
use std::fmt;
use std::time::Instant;

use log::info;
use serde::Serialize;

use crate::diagram::{
    diagram_from_dominant, dominant_from_diagram, is_isolated, leq, runs, shift, DominantWeight,
    RunComposition, WeightDiagram,
};
use crate::error::{Error, Result};
pub use crate::laws::Counterexample;
use crate::laws::{LawContext, LAWS};
use crate::moves::{
    apply_move, applicable_moves, default_margin, degree, group_by_degree, is_allowable,
    leapfrog_count, reduce_to_identity, replay_reduction, MoveKind,
};
use crate::resolution::{plan_step, Fault, RandomChooser, Resolver, StepPlan};
use crate::series::{
    complexity, f_poly, f_poly_closed, f_support_dim, rank_variety_dim, series_coeffs,
    z_complexity,
};

/// Names of the corpus checks, in report order.
pub const CORPUS_CHECKS: &[&str] = &[
    "round-trip",
    "triangle",
    "target-multisets",
    "degree-theorem",
    "order-independence",
    "isolated-dots",
    "translation",
    "separation",
    "run-multiset",
    "step-recursion",
    "leq",
    "reduction",
    "move-arithmetic",
    "f-poly",
    "formulas",
];

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub max_n: usize,
    pub max_degree: usize,
    /// Random choosers per corpus diagram.
    pub trials: usize,
    pub seed: u64,
    /// Cases per property law.
    pub cases: u32,
    /// Add every subset of `[0, 12]` with at most `max_n` dots to the corpus.
    pub exhaustive: bool,
    /// Check or law names to run (`law:<name>` for a single law, `laws` for
    /// all of them); empty runs everything.
    pub checks: Vec<String>,
    pub fault: Option<Fault>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            max_n: 5,
            max_degree: 8,
            trials: 100,
            seed: 0,
            cases: 1000,
            exhaustive: false,
            checks: Vec::new(),
            fault: None,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub cases: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
    pub elapsed_ms: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub corpus: String,
    pub seed: u64,
    pub checks: Vec<CheckResult>,
    pub elapsed_ms: f64,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        write!(
            f,
            "{tag} {:<34} {:>7} cases {:>10.1} ms",
            self.name, self.cases, self.elapsed_ms
        )?;
        if let Some(c) = &self.counterexample {
            write!(f, "\n     counterexample {} at degree {}: {}", c.diagram, c.degree, c.detail)?;
        }
        Ok(())
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "corpus: {}", self.corpus)?;
        writeln!(f, "seed: {}", self.seed)?;
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        let failed = self.failures().count();
        write!(
            f,
            "{} checks, {} failed, {:.1} ms",
            self.checks.len(),
            failed,
            self.elapsed_ms
        )
    }
}

/// Every run-size composition of `1..=max_n` laid out with one empty slot
/// between runs, plus a two-slot layout when it fits inside `[0, 12]`.
pub fn composition_corpus(max_n: usize) -> Vec<WeightDiagram> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        for parts in compositions_of(n) {
            let pi = RunComposition::new(parts).expect("positive parts");
            for gap in [1, 2] {
                let d = pi.diagram(0, gap).expect("small layout");
                if gap == 1 || d.max_dot() <= 12 {
                    out.push(d);
                }
            }
        }
    }
    sort_corpus(&mut out);
    out
}

/// All nonempty subsets of `[0, 12]` with at most `max_n` dots.
pub fn subset_corpus(max_n: usize) -> Vec<WeightDiagram> {
    let mut out = Vec::new();
    for mask in 1u32..(1 << 13) {
        if mask.count_ones() as usize > max_n {
            continue;
        }
        let dots = (0..13).filter(|b| mask & (1 << b) != 0).collect();
        out.push(WeightDiagram::new(dots).expect("increasing"));
    }
    sort_corpus(&mut out);
    out
}

fn sort_corpus(v: &mut Vec<WeightDiagram>) {
    v.sort_by(|a, b| (a.len(), a.span(), a).cmp(&(b.len(), b.span(), b)));
    v.dedup();
}

/// Ordered compositions of `n`.
pub fn compositions_of(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 1..=n {
        for mut rest in compositions_of(n - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

struct Ctx<'a> {
    opts: &'a VerifyOptions,
    resolver: Resolver,
}

type CheckFn = fn(&Ctx, &WeightDiagram, usize) -> std::result::Result<(), String>;

fn wrap<T>(r: Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| format!("engine error: {e}"))
}

/// The first degree at which the per-degree vectors `a` and `b` disagree.
fn first_mismatch<T: PartialEq + fmt::Debug>(what: &str, a: &[T], b: &[T]) -> std::result::Result<(), String> {
    match (0..a.len().max(b.len())).find(|&i| a.get(i) != b.get(i)) {
        None => Ok(()),
        Some(i) => Err(format!("{what} differ at degree {i}: {:?} vs {:?}", a.get(i), b.get(i))),
    }
}

fn check_round_trip(_: &Ctx, mu: &WeightDiagram, _: usize) -> std::result::Result<(), String> {
    let w = dominant_from_diagram(mu);
    let back = wrap(diagram_from_dominant(&w))?;
    if &back != mu {
        return Err(format!("came back as {back}"));
    }
    let w2 = wrap(DominantWeight::new(w.coeffs().to_vec()))?;
    if w2 != w {
        return Err("dominant weight does not round trip".into());
    }
    Ok(())
}

fn check_triangle(ctx: &Ctx, mu: &WeightDiagram, d: usize) -> std::result::Result<(), String> {
    let counts = wrap(ctx.resolver.resolve(mu, d))?.summand_counts();
    let series: Vec<u64> = wrap(series_coeffs(&runs(mu), d))?
        .coeffs
        .iter()
        .map(|&c| c as u64)
        .collect();
    let labelled = wrap(ctx.resolver.resolve_with_functions(mu, d))?;
    let groups = group_by_degree(&labelled);
    let enumerated: Vec<u64> = (0..=d)
        .map(|k| groups.get(&k).map_or(0, |fs| fs.len() as u64))
        .collect();
    first_mismatch("resolution and series counts", &counts, &series)?;
    first_mismatch("resolution and enumeration counts", &counts, &enumerated)
}

fn check_targets(ctx: &Ctx, mu: &WeightDiagram, d: usize) -> std::result::Result<(), String> {
    let counts = wrap(ctx.resolver.resolve(mu, d))?;
    let groups = group_by_degree(&wrap(ctx.resolver.resolve_with_functions(mu, d))?);
    let per_degree: Vec<BTreeMap<WeightDiagram, u64>> = (0..=d)
        .map(|k| {
            let mut m = BTreeMap::new();
            for f in groups.get(&k).into_iter().flatten() {
                *m.entry(f.target().clone()).or_insert(0) += 1;
            }
            m
        })
        .collect();
    let expected: Vec<BTreeMap<WeightDiagram, u64>> =
        counts.terms.iter().map(|t| t.summands.clone()).collect();
    first_mismatch("target multisets", &expected, &per_degree)
}

fn check_degree_theorem(ctx: &Ctx, mu: &WeightDiagram, d: usize) -> std::result::Result<(), String> {
    let labelled = wrap(ctx.resolver.resolve_with_functions(mu, d))?;
    for term in &labelled.terms {
        for (lam, fs) in &term.summands {
            for f in fs {
                if f.source() != mu || f.target() != lam {
                    return Err(format!("label {f} does not map {mu} to {lam}"));
                }
                let got = degree(f).map_err(|e| format!("{f}: {e}"))?;
                if got != term.degree as i64 {
                    return Err(format!(
                        "{f} in degree {} has ℓ/2 − L = {}/2 − {} = {got}",
                        term.degree,
                        f.relative_length(),
                        leapfrog_count(f)
                    ));
                }
            }
        }
    }
    Ok(())
}

fn check_order(ctx: &Ctx, mu: &WeightDiagram, d: usize) -> std::result::Result<(), String> {
    let canonical = wrap(ctx.resolver.resolve(mu, d))?;
    let base = ctx.opts.seed ^ hash_diagram(mu);
    for trial in 0..ctx.opts.trials as u64 {
        let seed = base.wrapping_add(trial.wrapping_mul(0x9e37_79b9_7f4a_7c15));
        let mut chooser = RandomChooser::new(seed);
        let other = wrap(ctx.resolver.resolve_with_chooser(mu, d, &mut chooser))?;
        if other != canonical {
            return Err(format!("chooser seed {seed} gives a different resolution"));
        }
    }
    Ok(())
}

fn hash_diagram(mu: &WeightDiagram) -> u64 {
    mu.dots()
        .iter()
        .fold(0xcbf2_9ce4_8422_2325u64, |h, &p| (h ^ p as u64).wrapping_mul(0x100_0000_01b3))
}

fn check_isolated(ctx: &Ctx, mu: &WeightDiagram, d: usize) -> std::result::Result<(), String> {
    let r = wrap(ctx.resolver.resolve(mu, d))?;
    for &k in mu.dots() {
        if !wrap(is_isolated(mu, k))? {
            continue;
        }
        for term in &r.terms {
            for lam in term.summands.keys() {
                if !lam.has_dot(k) || lam.has_dot(k - 1) {
                    return Err(format!("{lam} in degree {} lacks a left-isolated dot at {k}", term.degree));
                }
            }
        }
    }
    Ok(())
}

fn check_translation(ctx: &Ctx, mu: &WeightDiagram, d: usize) -> std::result::Result<(), String> {
    let r = wrap(ctx.resolver.resolve(mu, d))?;
    for c in [-7, 5] {
        let moved = wrap(Resolver::new().resolve(&wrap(shift(mu, c))?, d))?;
        let mut expected = Vec::new();
        for t in &r.terms {
            let mut m = BTreeMap::new();
            for (lam, &k) in &t.summands {
                m.insert(wrap(shift(lam, c))?, k);
            }
            expected.push(m);
        }
        let got: Vec<_> = moved.terms.iter().map(|t| t.summands.clone()).collect();
        first_mismatch(&format!("terms shifted by {c}"), &expected, &got)?;
    }
    Ok(())
}

/// Lays out the runs of `mu` in the same order with wider gaps.
fn spread(mu: &WeightDiagram) -> WeightDiagram {
    let pi = runs(mu);
    pi.diagram(0, 3).expect("small layout")
}

fn check_separation(ctx: &Ctx, mu: &WeightDiagram, d: usize) -> std::result::Result<(), String> {
    let a = wrap(ctx.resolver.resolve(mu, d))?.summand_counts();
    let other = spread(mu);
    let b = wrap(ctx.resolver.resolve(&other, d))?.summand_counts();
    first_mismatch(&format!("s_d of {mu} and {other}"), &a, &b)
}

fn check_run_multiset(ctx: &Ctx, mu: &WeightDiagram, d: usize) -> std::result::Result<(), String> {
    let a = wrap(ctx.resolver.resolve(mu, d))?.summand_counts();
    let mut parts = runs(mu).parts().to_vec();
    parts.reverse();
    for pass in 0..2 {
        if pass == 1 {
            parts.sort_unstable();
        }
        let other = wrap(wrap(RunComposition::new(parts.clone()))?.diagram(0, 1))?;
        let b = wrap(ctx.resolver.resolve(&other, d))?.summand_counts();
        first_mismatch(&format!("s_d of {mu} and {other}"), &a, &b)?;
    }
    Ok(())
}

fn check_step_recursion(ctx: &Ctx, mu: &WeightDiagram, d: usize) -> std::result::Result<(), String> {
    let StepPlan::Step2a { nu, mu_prime, .. } = plan_step(mu) else {
        return Ok(());
    };
    let s = wrap(ctx.resolver.resolve(mu, d))?.summand_counts();
    let s_nu = wrap(ctx.resolver.resolve(&nu, d))?.summand_counts();
    let s_mp = if d > 0 {
        wrap(ctx.resolver.resolve(&mu_prime, d - 1))?.summand_counts()
    } else {
        Vec::new()
    };
    let rhs: Vec<u64> = (0..=d)
        .map(|k| s_nu[k] + if k > 0 { s_mp[k - 1] } else { 0 })
        .collect();
    first_mismatch("s_d(μ) and s_d(ν) + s_{d−1}(μ′)", &s, &rhs)
}

fn check_leq(ctx: &Ctx, mu: &WeightDiagram, d: usize) -> std::result::Result<(), String> {
    let r = wrap(ctx.resolver.resolve(mu, d))?;
    for t in &r.terms {
        for lam in t.summands.keys() {
            if !wrap(leq(mu, lam))? {
                return Err(format!("{lam} in degree {} is not above μ", t.degree));
            }
        }
    }
    Ok(())
}

fn check_reduction(ctx: &Ctx, mu: &WeightDiagram, d: usize) -> std::result::Result<(), String> {
    let labelled = wrap(ctx.resolver.resolve_with_functions(mu, d))?;
    for fs in group_by_degree(&labelled).values() {
        for f in fs {
            let undo = reduce_to_identity(f, default_margin(f))
                .ok_or_else(|| format!("no reduction certificate for {f}"))?;
            let g = replay_reduction(f, &undo).map_err(|e| format!("replay of {f}: {e}"))?;
            if !g.same_arrows(f) {
                return Err(format!("replay of {f} gives {g}"));
            }
        }
    }
    Ok(())
}

fn check_move_arithmetic(ctx: &Ctx, mu: &WeightDiagram, d: usize) -> std::result::Result<(), String> {
    let labelled = wrap(ctx.resolver.resolve_with_functions(mu, d))?;
    for fs in group_by_degree(&labelled).values() {
        for f in fs {
            for m in applicable_moves(f) {
                let g = apply_move(f, &m).map_err(|e| format!("{m} on {f}: {e}"))?;
                let dl = g.relative_length() - f.relative_length();
                let dlf = leapfrog_count(&g) as i64 - leapfrog_count(f) as i64;
                let want = match m.kind {
                    MoveKind::Move1 => (0, 0),
                    MoveKind::Move2 => (2, 1),
                    MoveKind::Move3 => (2, 0),
                };
                if (dl, dlf) != want {
                    return Err(format!("{m} on {f}: Δℓ={dl}, ΔL={dlf}"));
                }
                if !is_allowable(&g) {
                    return Err(format!("{m} on {f} gives non-allowable {g}"));
                }
            }
        }
    }
    Ok(())
}

/// Per-check caps on corpus size and degree.
fn corpus_limits(name: &str, opts: &VerifyOptions) -> (usize, usize) {
    match name {
        "reduction" | "move-arithmetic" => (opts.max_n.min(4), opts.max_degree.min(5)),
        _ => (opts.max_n, opts.max_degree),
    }
}

fn corpus_check(name: &str) -> Option<CheckFn> {
    Some(match name {
        "round-trip" => check_round_trip,
        "triangle" => check_triangle,
        "target-multisets" => check_targets,
        "degree-theorem" => check_degree_theorem,
        "order-independence" => check_order,
        "isolated-dots" => check_isolated,
        "translation" => check_translation,
        "separation" => check_separation,
        "run-multiset" => check_run_multiset,
        "step-recursion" => check_step_recursion,
        "leq" => check_leq,
        "reduction" => check_reduction,
        "move-arithmetic" => check_move_arithmetic,
        _ => return None,
    })
}

fn run_corpus_check(ctx: &Ctx, corpus: &[WeightDiagram], name: &str, check: CheckFn) -> (usize, Option<Counterexample>) {
    let (max_n, max_d) = corpus_limits(name, ctx.opts);
    let mut cases = 0;
    for mu in corpus.iter().filter(|m| m.len() <= max_n) {
        cases += 1;
        if let Err(detail) = check(ctx, mu, max_d) {
            // Smallest degree bound that still fails.
            let (deg, detail) = (0..max_d)
                .find_map(|k| check(ctx, mu, k).err().map(|e| (k, e)))
                .unwrap_or((max_d, detail));
            return (cases, Some(Counterexample::new(mu, deg, detail)));
        }
    }
    (cases, None)
}

fn run_f_poly() -> (usize, Option<Counterexample>) {
    let witness = |r: usize| {
        RunComposition::new(vec![r.max(1)])
            .and_then(|p| p.diagram(0, 1))
            .expect("single run")
    };
    let two = f_poly(2).ok().map(|p| p.coeffs().to_vec());
    if two != Some(vec![1]) {
        return (1, Some(Counterexample::new(&witness(2), 0, format!("f_2 = {two:?}"))));
    }
    for r in 0..=30 {
        let (a, b) = match (f_poly(r), f_poly_closed(r)) {
            (Ok(a), Ok(b)) => (a, b),
            (Err(e), _) | (_, Err(e)) => {
                return (r + 1, Some(Counterexample::new(&witness(r), 0, e.to_string())))
            }
        };
        if a != b {
            let k = (0..a.coeffs().len().max(b.coeffs().len()))
                .find(|&i| a.coeff(i) != b.coeff(i))
                .unwrap_or(0);
            return (r + 1, Some(Counterexample::new(&witness(r), k, format!("f_{r}: {a} vs {b}"))));
        }
        if !a.eval(1).is_ok_and(|v| v > 0) {
            return (r + 1, Some(Counterexample::new(&witness(r), 0, format!("f_{r}(1) is not positive"))));
        }
    }
    (31, None)
}

fn run_formulas() -> (usize, Option<Counterexample>) {
    let mut cases = 0;
    for n in 1..=20usize {
        for k in 0..=n / 2 {
            let o = n - 2 * k;
            cases += 1;
            let parts: Vec<usize> = std::iter::repeat_n(1, o).chain(std::iter::repeat_n(2, k)).collect();
            let pi = RunComposition::new(parts).expect("positive parts");
            let mu = pi.diagram(0, 1).expect("small layout");
            let lhs = complexity(n, o);
            let rhs = rank_variety_dim(n, k);
            let support = f_support_dim(n, o);
            let ok = matches!((&lhs, &rhs), (Ok(a), Ok(b)) if a == b)
                && support.as_ref().is_ok_and(|&s| s == z_complexity(&pi));
            if !ok {
                let detail = format!(
                    "n={n}, o={o}: complexity {lhs:?}, rank variety {rhs:?}, support {support:?}, z-complexity {}",
                    z_complexity(&pi)
                );
                return (cases, Some(Counterexample::new(&mu, 0, detail)));
            }
        }
    }
    (cases, None)
}

fn selected(opts: &VerifyOptions, name: &str) -> bool {
    opts.checks.is_empty() || opts.checks.iter().any(|c| c == name)
}

fn law_selected(opts: &VerifyOptions, name: &str) -> bool {
    opts.checks.is_empty()
        || opts
            .checks
            .iter()
            .any(|c| c == "laws" || c.strip_prefix("law:") == Some(name))
}

/// Names accepted in [`VerifyOptions::checks`].
pub fn known_checks() -> Vec<String> {
    let mut v: Vec<String> = CORPUS_CHECKS.iter().map(|s| s.to_string()).collect();
    v.push("laws".into());
    v.extend(LAWS.iter().map(|l| format!("law:{}", l.name)));
    v
}

pub fn verify(opts: &VerifyOptions) -> Result<VerificationReport> {
    let known = known_checks();
    if let Some(bad) = opts.checks.iter().find(|c| !known.contains(c)) {
        return Err(Error::Domain(format!("unknown check {bad:?}")));
    }
    info!("verify seed {}", opts.seed);
    let start = Instant::now();
    let ctx = Ctx {
        opts,
        resolver: match opts.fault {
            Some(f) => Resolver::with_fault(f),
            None => Resolver::new(),
        },
    };
    let mut corpus = composition_corpus(opts.max_n);
    let mut description = format!(
        "run compositions of n ≤ {} (gaps 1 and 2), D ≤ {}",
        opts.max_n, opts.max_degree
    );
    if opts.exhaustive {
        corpus.extend(subset_corpus(opts.max_n));
        sort_corpus(&mut corpus);
        description.push_str(", all subsets of [0, 12]");
    }
    description.push_str(&format!(" ({} diagrams)", corpus.len()));

    let mut checks = Vec::new();
    for &name in CORPUS_CHECKS {
        if !selected(opts, name) {
            continue;
        }
        let t = Instant::now();
        let (cases, counterexample) = match name {
            "f-poly" => run_f_poly(),
            "formulas" => run_formulas(),
            _ => {
                let check = corpus_check(name).expect("listed check");
                run_corpus_check(&ctx, &corpus, name, check)
            }
        };
        checks.push(CheckResult {
            name: name.to_string(),
            passed: counterexample.is_none(),
            cases,
            counterexample,
            elapsed_ms: t.elapsed().as_secs_f64() * 1e3,
        });
    }
    let law_ctx = LawContext {
        resolver: &ctx.resolver,
        cases: opts.cases,
        seed: opts.seed,
    };
    for law in LAWS {
        if !law_selected(opts, law.name) {
            continue;
        }
        let t = Instant::now();
        let outcome = (law.run)(&law_ctx);
        checks.push(CheckResult {
            name: format!("law:{}", law.name),
            passed: outcome.is_ok(),
            cases: opts.cases as usize,
            counterexample: outcome.err(),
            elapsed_ms: t.elapsed().as_secs_f64() * 1e3,
        });
    }
    Ok(VerificationReport {
        corpus: description,
        seed: opts.seed,
        checks,
        elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_shapes() {
        assert_eq!(compositions_of(4).len(), 8);
        let c = composition_corpus(3);
        assert!(c.iter().all(|d| d.min_dot() == 0 && d.max_dot() <= 12));
        assert_eq!(subset_corpus(1).len(), 13);
        assert_eq!(subset_corpus(2).len(), 13 + 78);
    }

    #[test]
    fn small_run_passes() {
        let opts = VerifyOptions {
            max_n: 3,
            max_degree: 4,
            trials: 5,
            cases: 16,
            ..VerifyOptions::default()
        };
        let report = verify(&opts).unwrap();
        assert!(report.passed(), "{report}");
        assert_eq!(report.checks.len(), CORPUS_CHECKS.len() + LAWS.len());
    }

    #[test]
    fn selection_and_unknown_names() {
        let opts = VerifyOptions {
            max_n: 2,
            max_degree: 2,
            checks: vec!["triangle".into(), "law:crossing-counts".into()],
            cases: 8,
            ..VerifyOptions::default()
        };
        let names: Vec<String> = verify(&opts).unwrap().checks.into_iter().map(|c| c.name).collect();
        assert_eq!(names, vec!["triangle", "law:crossing-counts"]);
        let bad = VerifyOptions {
            checks: vec!["nope".into()],
            ..VerifyOptions::default()
        };
        assert!(verify(&bad).is_err());
    }

    #[test]
    fn injected_fault_is_caught() {
        let opts = VerifyOptions {
            max_n: 4,
            max_degree: 4,
            checks: vec!["triangle".into(), "degree-theorem".into()],
            fault: Some(Fault::FlipMove2Arrow),
            ..VerifyOptions::default()
        };
        let report = verify(&opts).unwrap();
        assert!(!report.passed());
        let c = report.failures().next().unwrap().counterexample.as_ref().unwrap();
        assert!(c.degree <= 4);
    }
}

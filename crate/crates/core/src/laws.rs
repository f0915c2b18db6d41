//! Randomized property laws over every module, run through proptest's
//! [`TestRunner`] with a fixed seed so failures replay exactly.
//!
//! Each law reports a [`Counterexample`]: the last failing input seen by the
//! runner, which after shrinking is the minimal one.

use std::cell::RefCell;
use std::collections::BTreeMap;

use proptest::prelude::*;
use proptest::sample::subsequence;
use proptest::test_runner::{Config, RngAlgorithm, TestError, TestRng, TestRunner};
use serde::Serialize;

use crate::cache;
use crate::diagram::{
    atypicality, diagram_from_dominant, dominant_from_diagram, ell, ell_summed, ell_t,
    is_isolated, leq, odd_run_count, runs, shift, DominantWeight, RunComposition, WeightDiagram,
};
use crate::moves::{
    apply_move, applicable_moves, default_margin, degree, group_by_degree,
    inversion_count, is_allowable, leapfrog_count, reduce_to_identity, replay_reduction,
    AllowableFunction, MoveKind,
};
use crate::resolution::{plan_step, RandomChooser, Resolution, Resolver, StepPlan};
use crate::series::{
    complexity, f_poly, f_poly_closed, f_support_dim, rank_variety_dim, series_coeffs,
    z_complexity, TruncatedSeries,
};

/// A failing input reduced to a diagram and the degree at which it fails.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub diagram: WeightDiagram,
    pub degree: usize,
    pub detail: String,
}

impl Counterexample {
    pub fn new(diagram: &WeightDiagram, degree: usize, detail: impl Into<String>) -> Self {
        Counterexample {
            diagram: diagram.clone(),
            degree,
            detail: detail.into(),
        }
    }
}

type Outcome = Result<(), Counterexample>;

/// Shared state for one batch of laws.
pub struct LawContext<'a> {
    pub resolver: &'a Resolver,
    pub cases: u32,
    pub seed: u64,
}

pub struct Law {
    pub name: &'static str,
    pub run: fn(&LawContext) -> Outcome,
}

fn runner(ctx: &LawContext, salt: u64) -> TestRunner {
    let mut seed = [0u8; 32];
    seed[..8].copy_from_slice(&ctx.seed.to_le_bytes());
    seed[8..16].copy_from_slice(&salt.to_le_bytes());
    let config = Config {
        cases: ctx.cases,
        failure_persistence: None,
        max_shrink_iters: 2048,
        ..Config::default()
    };
    TestRunner::new_with_rng(config, TestRng::from_seed(RngAlgorithm::ChaCha, &seed))
}

fn check<S>(ctx: &LawContext, salt: u64, strategy: S, test: impl Fn(S::Value) -> Outcome) -> Outcome
where
    S: Strategy,
{
    let last = RefCell::new(None);
    let result = runner(ctx, salt).run(&strategy, |value| {
        test(value).map_err(|c| {
            let reason = format!("{} at degree {}: {}", c.diagram, c.degree, c.detail);
            *last.borrow_mut() = Some(c);
            TestCaseError::fail(reason)
        })
    });
    match result {
        Ok(()) => Ok(()),
        Err(e) => Err(last.into_inner().unwrap_or_else(|| {
            let why = match e {
                TestError::Abort(r) => format!("runner aborted: {r}"),
                TestError::Fail(r, _) => r.to_string(),
            };
            Counterexample::new(&WeightDiagram::new(vec![0]).expect("one dot"), 0, why)
        })),
    }
}

fn wd(dots: Vec<i64>) -> WeightDiagram {
    WeightDiagram::new(dots).expect("strategy yields increasing dots")
}

/// Diagrams with up to `max_n` dots in `[0, 12]`, translated by up to ±20.
fn diagrams(max_n: usize) -> impl Strategy<Value = WeightDiagram> {
    (subsequence((0..=12).collect::<Vec<i64>>(), 1..=max_n), -20i64..=20)
        .prop_map(|(dots, c)| wd(dots.into_iter().map(|p| p + c).collect()))
}

fn compositions(max_n: usize) -> impl Strategy<Value = RunComposition> {
    prop::collection::vec(1usize..=max_n, 1..=max_n)
        .prop_filter("total too large", move |v| v.iter().sum::<usize>() <= max_n)
        .prop_map(|v| RunComposition::new(v).expect("positive parts"))
}

fn fail_if(cond: bool, mu: &WeightDiagram, d: usize, detail: impl FnOnce() -> String) -> Outcome {
    if cond {
        Err(Counterexample::new(mu, d, detail()))
    } else {
        Ok(())
    }
}

fn engine<T>(mu: &WeightDiagram, d: usize, r: crate::error::Result<T>) -> Result<T, Counterexample> {
    r.map_err(|e| Counterexample::new(mu, d, format!("engine error: {e}")))
}

/// First degree at which two count vectors differ.
fn first_diff<T: PartialEq>(a: &[T], b: &[T]) -> Option<usize> {
    (0..a.len().max(b.len())).find(|&i| match (a.get(i), b.get(i)) {
        (Some(x), Some(y)) => x != y,
        _ => true,
    })
}

fn counts_u64(v: &[i64]) -> Vec<u64> {
    v.iter().map(|&c| c as u64).collect()
}

fn shifted_resolution(r: &Resolution, c: i64) -> crate::error::Result<Resolution> {
    let mut out = r.clone();
    out.mu = shift(&r.mu, c)?;
    for t in &mut out.terms {
        t.summands = t
            .summands
            .iter()
            .map(|(l, &m)| Ok((shift(l, c)?, m)))
            .collect::<crate::error::Result<_>>()?;
    }
    Ok(out)
}

// ---- weight diagrams ----

fn dominant_round_trip(ctx: &LawContext) -> Outcome {
    let weights = prop::collection::vec(-50i64..=50, 1..=12).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    });
    check(ctx, 1, weights, |coeffs| {
        let w = DominantWeight::new(coeffs.clone()).expect("sorted weight");
        let d = diagram_from_dominant(&w).map_err(|e| {
            Counterexample::new(&wd(vec![0]), 0, format!("{coeffs:?}: {e}"))
        })?;
        let back = dominant_from_diagram(&d);
        fail_if(back != w, &d, 0, || format!("{coeffs:?} came back as {:?}", back.coeffs()))?;
        let again = diagram_from_dominant(&back).map_err(|e| Counterexample::new(&d, 0, e.to_string()))?;
        fail_if(again != d, &d, 0, || format!("diagram came back as {again}"))
    })
}

fn pairs_of_diagrams() -> impl Strategy<Value = (WeightDiagram, WeightDiagram)> {
    (1usize..=6).prop_flat_map(|n| {
        let pts: Vec<i64> = (-10..=10).collect();
        (subsequence(pts.clone(), n), subsequence(pts, n))
            .prop_map(|(a, b)| (wd(a), wd(b)))
    })
}

fn ell_two_formulas(ctx: &LawContext) -> Outcome {
    check(ctx, 2, pairs_of_diagrams(), |(lam, mu)| {
        let a = ell(&lam, &mu).map_err(|e| Counterexample::new(&mu, 0, e.to_string()))?;
        let b = ell_summed(&lam, &mu).map_err(|e| Counterexample::new(&mu, 0, e.to_string()))?;
        fail_if(a != b, &mu, 0, || format!("λ={lam}: coordinate sum {a}, ℓ_t sum {b}"))
    })
}

fn leq_via_ell_t(ctx: &LawContext) -> Outcome {
    check(ctx, 3, pairs_of_diagrams(), |(lam, mu)| {
        let lo = lam.min_dot().min(mu.min_dot());
        let hi = lam.max_dot().max(mu.max_dot());
        let by_t = (lo..=hi).all(|t| ell_t(&lam, &mu, t).map(|v| v >= 0).unwrap_or(false));
        let direct = leq(&mu, &lam).unwrap_or(false);
        fail_if(by_t != direct, &mu, 0, || format!("λ={lam}: leq {direct}, ℓ_t test {by_t}"))
    })
}

fn run_parity_and_atypicality(ctx: &LawContext) -> Outcome {
    check(ctx, 4, diagrams(12), |d| {
        let n = d.len();
        fail_if((n - odd_run_count(&d)) % 2 != 0, &d, 0, || "n − o is odd".into())?;
        let k = runs(&d).parts().len();
        fail_if(atypicality(&d) != n - k, &d, 0, || {
            format!("atypicality {} with {k} runs", atypicality(&d))
        })
    })
}

fn diagram_translation(ctx: &LawContext) -> Outcome {
    check(ctx, 5, (pairs_of_diagrams(), -30i64..=30), |((lam, mu), c)| {
        let (sl, sm) = (shift(&lam, c).unwrap(), shift(&mu, c).unwrap());
        fail_if(runs(&sm) != runs(&mu), &mu, 0, || format!("runs change under shift {c}"))?;
        fail_if(atypicality(&sm) != atypicality(&mu), &mu, 0, || format!("atypicality changes under shift {c}"))?;
        fail_if(odd_run_count(&sm) != odd_run_count(&mu), &mu, 0, || format!("o changes under shift {c}"))?;
        fail_if(ell(&sl, &sm).ok() != ell(&lam, &mu).ok(), &mu, 0, || format!("ℓ changes under shift {c}"))
    })
}

// ---- allowable functions ----

/// A diagram, a degree bound and a seed for picking one enumerated function.
fn enumerated(max_n: usize, max_d: usize) -> impl Strategy<Value = (WeightDiagram, usize, usize, usize)> {
    (diagrams(max_n), 0..=max_d, any::<usize>(), any::<usize>())
}

fn pick_function(
    ctx: &LawContext,
    mu: &WeightDiagram,
    d: usize,
    pick: usize,
) -> Result<Option<(usize, AllowableFunction)>, Counterexample> {
    let labelled = engine(mu, d, ctx.resolver.resolve_with_functions(mu, d))?;
    let all: Vec<(usize, &AllowableFunction)> = labelled
        .terms
        .iter()
        .flat_map(|t| t.summands.values().flatten().map(move |f| (t.degree, f)))
        .collect();
    if all.is_empty() {
        return Ok(None);
    }
    let (deg, f) = all[pick % all.len()];
    Ok(Some((deg, f.clone())))
}

fn move_arithmetic(ctx: &LawContext) -> Outcome {
    check(ctx, 10, enumerated(4, 4), |(mu, d, pick, which)| {
        let Some((deg, f)) = pick_function(ctx, &mu, d, pick)? else { return Ok(()) };
        let moves = applicable_moves(&f);
        if moves.is_empty() {
            return Ok(());
        }
        let m = moves[which % moves.len()];
        let g = engine(&mu, deg, apply_move(&f, &m))?;
        let (dl, dlf) = (
            g.relative_length() - f.relative_length(),
            leapfrog_count(&g) as i64 - leapfrog_count(&f) as i64,
        );
        let expected = match m.kind {
            MoveKind::Move1 => (0, 0),
            MoveKind::Move2 => (2, 1),
            MoveKind::Move3 => (2, 0),
        };
        fail_if((dl, dlf) != expected, &mu, deg, || {
            format!("{m} on {f}: Δℓ={dl}, ΔL={dlf}, expected {expected:?}")
        })?;
        let dd = degree(&g).ok().zip(degree(&f).ok()).map(|(a, b)| a - b);
        let want = i64::from(m.kind == MoveKind::Move3);
        fail_if(dd != Some(want), &mu, deg, || format!("{m} on {f}: degree change {dd:?}"))?;
        fail_if(!is_allowable(&g), &mu, deg, || format!("{m} on {f} gives non-allowable {g}"))
    })
}

fn enumerated_shape(ctx: &LawContext) -> Outcome {
    check(ctx, 11, enumerated(6, 6), |(mu, d, _, _)| {
        let groups = group_by_degree(&engine(&mu, d, ctx.resolver.resolve_with_functions(&mu, d))?);
        for (deg, fs) in groups {
            for f in fs {
                let pointwise = f.pairs().all(|(a, b)| b <= a);
                let l = f.relative_length();
                let ok = pointwise
                    && leq(f.source(), f.target()).unwrap_or(false)
                    && l % 2 == 0
                    && degree(&f).map(|x| x >= 0).unwrap_or(false);
                fail_if(!ok, &mu, deg, || format!("bad shape {f}"))?;
            }
        }
        Ok(())
    })
}

fn target_multisets(ctx: &LawContext) -> Outcome {
    check(ctx, 12, (diagrams(6), 0usize..=8), |(mu, d)| {
        let counts = engine(&mu, d, ctx.resolver.resolve(&mu, d))?;
        let groups = group_by_degree(&engine(&mu, d, ctx.resolver.resolve_with_functions(&mu, d))?);
        for term in &counts.terms {
            let mut got: BTreeMap<WeightDiagram, u64> = BTreeMap::new();
            for f in groups.get(&term.degree).into_iter().flatten() {
                *got.entry(f.target().clone()).or_default() += 1;
            }
            fail_if(got != term.summands, &mu, term.degree, || {
                "enumerated targets differ from resolution summands".into()
            })?;
        }
        Ok(())
    })
}

fn reduction_certificates(ctx: &LawContext) -> Outcome {
    check(ctx, 13, enumerated(4, 5), |(mu, d, pick, _)| {
        let Some((deg, f)) = pick_function(ctx, &mu, d, pick)? else { return Ok(()) };
        let Some(undo) = reduce_to_identity(&f, default_margin(&f)) else {
            return Err(Counterexample::new(&mu, deg, format!("no reduction for {f}")));
        };
        let replayed = engine(&mu, deg, replay_reduction(&f, &undo))?;
        fail_if(!replayed.same_arrows(&f), &mu, deg, || format!("replay gives {replayed}, not {f}"))
    })
}

fn crossing_counts(ctx: &LawContext) -> Outcome {
    let functions = (1usize..=9).prop_flat_map(|n| {
        let pts: Vec<i64> = (-12..=12).collect();
        (
            subsequence(pts.clone(), n),
            subsequence(pts, n),
            Just((0..n).collect::<Vec<usize>>()).prop_shuffle(),
        )
    });
    check(ctx, 14, functions, |(src, tgt, perm)| {
        let pairing: Vec<i64> = perm.iter().map(|&k| tgt[k]).collect();
        let f = AllowableFunction::new(wd(src), wd(tgt), pairing).expect("bijection");
        let (a, b) = (leapfrog_count(&f), inversion_count(f.pairing()));
        fail_if(a != b, f.source(), 0, || format!("{f}: pair scan {a}, merge count {b}"))
    })
}

// ---- resolutions ----

fn degree_theorem(ctx: &LawContext) -> Outcome {
    check(ctx, 20, (diagrams(6), 0usize..=8), |(mu, d)| {
        let labelled = engine(&mu, d, ctx.resolver.resolve_with_functions(&mu, d))?;
        for term in &labelled.terms {
            for (lam, fs) in &term.summands {
                for f in fs {
                    let ok = f.source() == &mu
                        && f.target() == lam
                        && degree(f).ok() == Some(term.degree as i64);
                    fail_if(!ok, &mu, term.degree, || format!("label {f} on {lam}"))?;
                }
            }
        }
        fail_if(labelled.counts() != engine(&mu, d, ctx.resolver.resolve(&mu, d))?, &mu, d, || {
            "labelled and plain resolutions differ".into()
        })
    })
}

fn order_independence(ctx: &LawContext) -> Outcome {
    check(ctx, 21, (diagrams(5), 0usize..=8, any::<u64>()), |(mu, d, seed)| {
        let canonical = engine(&mu, d, ctx.resolver.resolve(&mu, d))?;
        let mut chooser = RandomChooser::new(seed);
        let other = engine(&mu, d, ctx.resolver.resolve_with_chooser(&mu, d, &mut chooser))?;
        match first_diff(&canonical.terms, &other.terms) {
            None => Ok(()),
            Some(k) => Err(Counterexample::new(&mu, k, format!("chooser seed {seed} differs"))),
        }
    })
}

fn isolated_dots(ctx: &LawContext) -> Outcome {
    check(ctx, 22, (diagrams(6), 0usize..=8), |(mu, d)| {
        let r = engine(&mu, d, ctx.resolver.resolve(&mu, d))?;
        let isolated: Vec<i64> = mu
            .dots()
            .iter()
            .copied()
            .filter(|&k| is_isolated(&mu, k).unwrap_or(false))
            .collect();
        for term in &r.terms {
            for lam in term.summands.keys() {
                for &k in &isolated {
                    fail_if(!lam.has_dot(k) || lam.has_dot(k - 1), &mu, term.degree, || {
                        format!("{lam} has no left-isolated dot at {k}")
                    })?;
                }
            }
        }
        Ok(())
    })
}

fn translation_equivariance(ctx: &LawContext) -> Outcome {
    check(ctx, 23, (diagrams(6), 0usize..=6, -25i64..=25), |(mu, d, c)| {
        let fresh = Resolver::new();
        let moved = engine(&mu, d, fresh.resolve(&shift(&mu, c).unwrap(), d))?;
        let base = engine(&mu, d, Resolver::new().resolve(&mu, d))?;
        let expected = engine(&mu, d, shifted_resolution(&base, c))?;
        match first_diff(&moved.terms, &expected.terms) {
            None => Ok(()),
            Some(k) => Err(Counterexample::new(&mu, k, format!("shift by {c} not equivariant"))),
        }
    })
}

fn gaps_and_order(ctx: &LawContext) -> Outcome {
    let input = (compositions(6), prop::collection::vec(1i64..=4, 6), any::<u64>());
    check(ctx, 24, (input, 0usize..=8), |((pi, gaps, perm_seed), d)| {
        let base = pi.diagram(0, 1).unwrap();
        let s_base = engine(&base, d, ctx.resolver.resolve(&base, d))?.summand_counts();
        // Same run order, other gaps.
        let mut dots = Vec::new();
        let mut pos = 0i64;
        for (k, &part) in pi.parts().iter().rev().enumerate() {
            for _ in 0..part {
                dots.push(pos);
                pos += 1;
            }
            pos += gaps[k % gaps.len()];
        }
        let spaced = wd(dots);
        let s_spaced = engine(&spaced, d, ctx.resolver.resolve(&spaced, d))?.summand_counts();
        if let Some(k) = first_diff(&s_base, &s_spaced) {
            return Err(Counterexample::new(&spaced, k, format!("s_d differs from {base}")));
        }
        // Same runs, another order.
        let mut parts = pi.parts().to_vec();
        let len = parts.len();
        if len > 1 {
            parts.rotate_left((perm_seed as usize) % len);
            parts.swap(0, (perm_seed as usize / 7) % len);
        }
        let reordered = RunComposition::new(parts).unwrap().diagram(0, 2).unwrap();
        let s_re = engine(&reordered, d, ctx.resolver.resolve(&reordered, d))?.summand_counts();
        match first_diff(&s_base, &s_re) {
            None => Ok(()),
            Some(k) => Err(Counterexample::new(&reordered, k, format!("s_d differs from {base}"))),
        }
    })
}

fn step_recursion(ctx: &LawContext) -> Outcome {
    check(ctx, 25, (diagrams(6), 1usize..=8), |(mu, d)| {
        let StepPlan::Step2a { nu, mu_prime, .. } = plan_step(&mu) else { return Ok(()) };
        let s = engine(&mu, d, ctx.resolver.resolve(&mu, d))?.summand_counts();
        let s_nu = engine(&mu, d, ctx.resolver.resolve(&nu, d))?.summand_counts();
        let s_mp = engine(&mu, d, ctx.resolver.resolve(&mu_prime, d - 1))?.summand_counts();
        for k in 0..=d {
            let rhs = s_nu[k] + if k > 0 { s_mp[k - 1] } else { 0 };
            fail_if(s[k] != rhs, &mu, k, || format!("s={} but s(ν)+s(μ′)={rhs}", s[k]))?;
        }
        Ok(())
    })
}

fn keys_above_mu(ctx: &LawContext) -> Outcome {
    check(ctx, 26, (diagrams(6), 0usize..=8), |(mu, d)| {
        let r = engine(&mu, d, ctx.resolver.resolve(&mu, d))?;
        for term in &r.terms {
            for lam in term.summands.keys() {
                fail_if(!leq(&mu, lam).unwrap_or(false), &mu, term.degree, || {
                    format!("{lam} is not above μ")
                })?;
            }
        }
        Ok(())
    })
}

// ---- series ----

fn f_poly_forms(ctx: &LawContext) -> Outcome {
    check(ctx, 30, 0usize..=30, |r| {
        let mu = RunComposition::new(vec![r.max(1)]).unwrap().diagram(0, 1).unwrap();
        let a = engine(&mu, 0, f_poly(r))?;
        let b = engine(&mu, 0, f_poly_closed(r))?;
        match first_diff(a.coeffs(), b.coeffs()) {
            None => fail_if(a.eval(1).map(|v| v <= 0).unwrap_or(true), &mu, 0, || {
                format!("f_{r}(1) is not positive")
            }),
            Some(k) => Err(Counterexample::new(&mu, k, format!("f_{r}: recursion {a}, closed form {b}"))),
        }
    })
}

fn series_matches_resolution(ctx: &LawContext) -> Outcome {
    check(ctx, 31, (compositions(6), 0usize..=8, 1i64..=3), |(pi, d, gap)| {
        let mu = pi.diagram(0, gap).unwrap();
        let s = counts_u64(&engine(&mu, d, series_coeffs(&pi, d))?.coeffs);
        let r = engine(&mu, d, ctx.resolver.resolve(&mu, d))?.summand_counts();
        match first_diff(&s, &r) {
            None => Ok(()),
            Some(k) => Err(Counterexample::new(&mu, k, format!("series {s:?}, resolution {r:?}"))),
        }
    })
}

fn series_product(ctx: &LawContext) -> Outcome {
    check(ctx, 32, (compositions(8), 0usize..=12), |(pi, d)| {
        let mu = pi.diagram(0, 1).unwrap();
        let whole = engine(&mu, d, series_coeffs(&pi, d))?;
        let mut acc = TruncatedSeries {
            coeffs: std::iter::once(1).chain(std::iter::repeat_n(0, d)).collect(),
            truncation: d,
        };
        for &p in pi.parts() {
            let single = engine(&mu, d, series_coeffs(&RunComposition::new(vec![p]).unwrap(), d))?;
            acc = engine(&mu, d, acc.mul(&single))?;
        }
        match first_diff(&whole.coeffs, &acc.coeffs) {
            None => Ok(()),
            Some(k) => Err(Counterexample::new(&mu, k, "product of single-run series differs")),
        }
    })
}

fn series_symmetry_and_sign(ctx: &LawContext) -> Outcome {
    check(ctx, 33, (compositions(10), 0usize..=15, any::<usize>()), |(pi, d, rot)| {
        let mu = pi.diagram(0, 1).unwrap();
        let s = engine(&mu, d, series_coeffs(&pi, d))?.coeffs;
        fail_if(s[0] != 1, &mu, 0, || format!("s_0 = {}", s[0]))?;
        if let Some(k) = s.iter().position(|&c| c < 0) {
            return Err(Counterexample::new(&mu, k, "negative coefficient"));
        }
        let mut parts = pi.parts().to_vec();
        let len = parts.len();
        parts.rotate_left(rot % len);
        parts.reverse();
        let other = engine(&mu, d, series_coeffs(&RunComposition::new(parts).unwrap(), d))?.coeffs;
        match first_diff(&s, &other) {
            None => Ok(()),
            Some(k) => Err(Counterexample::new(&mu, k, "series depends on run order")),
        }
    })
}

fn complexity_identities(ctx: &LawContext) -> Outcome {
    let pairs = (1usize..=20)
        .prop_flat_map(|n| (Just(n), 0..=n / 2))
        .prop_map(|(n, k)| (n, n - 2 * k));
    check(ctx, 34, pairs, |(n, o)| {
        let parts: Vec<usize> = std::iter::repeat_n(1, o)
            .chain(std::iter::repeat_n(2, (n - o) / 2))
            .collect();
        let pi = RunComposition::new(parts).unwrap();
        let mu = pi.diagram(0, 1).unwrap();
        let c = engine(&mu, 0, complexity(n, o))?;
        let r = engine(&mu, 0, rank_variety_dim(n, (n - o) / 2))?;
        fail_if(c != r, &mu, 0, || format!("complexity {c}, rank variety {r} (n={n}, o={o})"))?;
        let f = engine(&mu, 0, f_support_dim(n, o))?;
        fail_if(f != z_complexity(&pi), &mu, 0, || format!("support {f}, z-complexity {}", z_complexity(&pi)))
    })
}

// ---- persistence ----

fn cache_round_trip(ctx: &LawContext) -> Outcome {
    check(ctx, 40, (diagrams(5), 0usize..=6), |(mu, d)| {
        let warm = Resolver::new();
        let expected = engine(&mu, d, warm.resolve(&mu, d))?;
        let mut buf = Vec::new();
        engine(&mu, d, cache::write_cache(&warm, &mut buf))?;
        let cold = Resolver::new();
        engine(&mu, d, cache::read_cache(&cold, buf.as_slice()))?;
        let got = engine(&mu, d, cold.resolve(&mu, d))?;
        match first_diff(&expected.terms, &got.terms) {
            None => Ok(()),
            Some(k) => Err(Counterexample::new(&mu, k, "warmed cache changes the result")),
        }
    })
}

pub const LAWS: &[Law] = &[
    Law { name: "dominant-round-trip", run: dominant_round_trip },
    Law { name: "ell-two-formulas", run: ell_two_formulas },
    Law { name: "leq-via-ell-t", run: leq_via_ell_t },
    Law { name: "run-parity-and-atypicality", run: run_parity_and_atypicality },
    Law { name: "diagram-translation", run: diagram_translation },
    Law { name: "move-arithmetic", run: move_arithmetic },
    Law { name: "enumerated-shape", run: enumerated_shape },
    Law { name: "target-multisets", run: target_multisets },
    Law { name: "reduction-certificates", run: reduction_certificates },
    Law { name: "crossing-counts", run: crossing_counts },
    Law { name: "degree-theorem", run: degree_theorem },
    Law { name: "order-independence", run: order_independence },
    Law { name: "isolated-dots", run: isolated_dots },
    Law { name: "translation-equivariance", run: translation_equivariance },
    Law { name: "gaps-and-run-order", run: gaps_and_order },
    Law { name: "step-recursion", run: step_recursion },
    Law { name: "keys-above-mu", run: keys_above_mu },
    Law { name: "f-poly-forms", run: f_poly_forms },
    Law { name: "series-matches-resolution", run: series_matches_resolution },
    Law { name: "series-product", run: series_product },
    Law { name: "series-symmetry-and-sign", run: series_symmetry_and_sign },
    Law { name: "complexity-identities", run: complexity_identities },
    Law { name: "cache-round-trip", run: cache_round_trip },
];

pub fn law(name: &str) -> Option<&'static Law> {
    LAWS.iter().find(|l| l.name == name)
}

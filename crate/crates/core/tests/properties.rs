//! Every property law at 1000 cases, one test each.

use kacres_core::laws::{law, LawContext};
use kacres_core::Resolver;

const CASES: u32 = 1000;

fn run(name: &str) {
    let resolver = Resolver::new();
    let ctx = LawContext {
        resolver: &resolver,
        cases: CASES,
        seed: 0x5eed,
    };
    let l = law(name).expect("known law");
    if let Err(c) = (l.run)(&ctx) {
        panic!("{name}: {} at degree {}: {}", c.diagram, c.degree, c.detail);
    }
}

#[test]
fn dominant_round_trip() {
    run("dominant-round-trip");
}

#[test]
fn ell_two_formulas() {
    run("ell-two-formulas");
}

#[test]
fn leq_via_ell_t() {
    run("leq-via-ell-t");
}

#[test]
fn run_parity_and_atypicality() {
    run("run-parity-and-atypicality");
}

#[test]
fn diagram_translation() {
    run("diagram-translation");
}

#[test]
fn move_arithmetic() {
    run("move-arithmetic");
}

#[test]
fn enumerated_shape() {
    run("enumerated-shape");
}

#[test]
fn target_multisets() {
    run("target-multisets");
}

#[test]
fn reduction_certificates() {
    run("reduction-certificates");
}

#[test]
fn crossing_counts() {
    run("crossing-counts");
}

#[test]
fn degree_theorem() {
    run("degree-theorem");
}

#[test]
fn order_independence() {
    run("order-independence");
}

#[test]
fn isolated_dots() {
    run("isolated-dots");
}

#[test]
fn translation_equivariance() {
    run("translation-equivariance");
}

#[test]
fn gaps_and_run_order() {
    run("gaps-and-run-order");
}

#[test]
fn step_recursion() {
    run("step-recursion");
}

#[test]
fn keys_above_mu() {
    run("keys-above-mu");
}

#[test]
fn f_poly_forms() {
    run("f-poly-forms");
}

#[test]
fn series_matches_resolution() {
    run("series-matches-resolution");
}

#[test]
fn series_product() {
    run("series-product");
}

#[test]
fn series_symmetry_and_sign() {
    run("series-symmetry-and-sign");
}

#[test]
fn complexity_identities() {
    run("complexity-identities");
}

#[test]
fn cache_round_trip() {
    run("cache-round-trip");
}

#[test]
fn every_law_has_a_test() {
    assert_eq!(kacres_core::laws::LAWS.len(), 23);
}

#[test]
fn faulty_engine_breaks_the_degree_theorem() {
    let resolver = Resolver::with_fault(kacres_core::resolution::Fault::FlipMove2Arrow);
    let ctx = LawContext {
        resolver: &resolver,
        cases: CASES,
        seed: 0x5eed,
    };
    let c = (law("degree-theorem").unwrap().run)(&ctx).unwrap_err();
    assert!(c.diagram.len() <= 6, "{c:?}");
    eprintln!("shrunk to {} at degree {}: {}", c.diagram, c.degree, c.detail);
}

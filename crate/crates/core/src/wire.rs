//! JSON documents shared by the command line and the HTTP service.
//!
//! Every document carries `schema_version`. [`to_json`] is the single
//! serializer so both front ends emit identical bytes.

use serde::Serialize;

use crate::diagram::{
    atypicality, dominant_from_diagram, ell, is_isolated, is_left_isolated, leq,
    odd_run_count, runs, RunComposition, WeightDiagram,
};
use crate::error::{Error, Result};
use crate::moves::{applicable_moves, degree, leapfrog_count, AllowableFunction, MoveRecord};
use crate::resolution::{step_options, LabelledResolution, Resolution, Resolver, StepPlan};
use crate::series::{
    complexity, f_product, f_support_dim, growth_exponent, pole_order, rank_variety_dim,
    series_coeffs, z_complexity, IntPolynomial,
};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Serialize)]
struct Envelope<'a, T: Serialize> {
    schema_version: &'static str,
    #[serde(flatten)]
    body: &'a T,
}

/// Compact JSON with `schema_version` first and a trailing newline.
pub fn to_json<T: Serialize>(body: &T) -> String {
    let env = Envelope {
        schema_version: SCHEMA_VERSION,
        body,
    };
    let mut s = serde_json::to_string(&env).expect("wire documents serialize");
    s.push('\n');
    s
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SummandDoc {
    pub lambda: WeightDiagram,
    pub multiplicity: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub functions: Option<Vec<AllowableFunction>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TermDoc {
    pub degree: usize,
    pub total: u64,
    pub summands: Vec<SummandDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ResolutionDoc {
    pub mu: WeightDiagram,
    pub max_degree: usize,
    pub terms: Vec<TermDoc>,
}

impl From<&Resolution> for ResolutionDoc {
    fn from(r: &Resolution) -> Self {
        ResolutionDoc {
            mu: r.mu.clone(),
            max_degree: r.max_degree,
            terms: r
                .terms
                .iter()
                .map(|t| TermDoc {
                    degree: t.degree,
                    total: t.total(),
                    summands: t
                        .summands
                        .iter()
                        .map(|(lambda, &multiplicity)| SummandDoc {
                            lambda: lambda.clone(),
                            multiplicity,
                            functions: None,
                        })
                        .collect(),
                })
                .collect(),
        }
    }
}

impl From<&LabelledResolution> for ResolutionDoc {
    fn from(r: &LabelledResolution) -> Self {
        ResolutionDoc {
            mu: r.mu.clone(),
            max_degree: r.max_degree,
            terms: r
                .terms
                .iter()
                .map(|t| TermDoc {
                    degree: t.degree,
                    total: t.summands.values().map(|fs| fs.len() as u64).sum(),
                    summands: t
                        .summands
                        .iter()
                        .map(|(lambda, fs)| SummandDoc {
                            lambda: lambda.clone(),
                            multiplicity: fs.len() as u64,
                            functions: Some(fs.clone()),
                        })
                        .collect(),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FunctionRow {
    pub degree: i64,
    pub ell: i64,
    pub leapfrogs: usize,
    pub function: AllowableFunction,
}

impl FunctionRow {
    pub fn new(f: &AllowableFunction) -> Result<Self> {
        Ok(FunctionRow {
            degree: degree(f)?,
            ell: f.relative_length(),
            leapfrogs: leapfrog_count(f),
            function: f.clone(),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FunctionsDoc {
    pub mu: WeightDiagram,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda: Option<WeightDiagram>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degree: Option<usize>,
    pub max_degree: usize,
    pub count: usize,
    pub rows: Vec<FunctionRow>,
}

/// Degree bound implied by a target: `ℓ(λ, μ)/2`, or zero when `λ` is not
/// below `μ`.
pub fn implied_max_degree(mu: &WeightDiagram, lambda: &WeightDiagram) -> Result<usize> {
    if !leq(mu, lambda)? {
        return Ok(0);
    }
    Ok((ell(lambda, mu)? / 2).max(0) as usize)
}

/// Allowable functions out of `mu`, optionally restricted to target `lambda`
/// and to a single `degree`. Without `max_degree` the bound is `degree` or,
/// failing that, the one implied by the target.
pub fn functions_doc(
    resolver: &Resolver,
    mu: &WeightDiagram,
    lambda: Option<&WeightDiagram>,
    degree: Option<usize>,
    max_degree: Option<usize>,
) -> Result<FunctionsDoc> {
    if let Some(l) = lambda {
        if l.len() != mu.len() {
            return Err(Error::SizeMismatch {
                left: mu.len(),
                right: l.len(),
            });
        }
    }
    let max_degree = match (max_degree, degree, lambda) {
        (Some(d), _, _) | (None, Some(d), _) => d,
        (None, None, Some(l)) => implied_max_degree(mu, l)?,
        (None, None, None) => {
            return Err(Error::Domain(
                "a target, a degree or a maximum degree is required".into(),
            ))
        }
    };
    let labelled = resolver.resolve_with_functions(mu, max_degree)?;
    let mut rows = Vec::new();
    for term in &labelled.terms {
        if degree.is_some_and(|d| d != term.degree) {
            continue;
        }
        for (target, fs) in &term.summands {
            if lambda.is_some_and(|l| l != target) {
                continue;
            }
            for f in fs {
                rows.push(FunctionRow::new(f)?);
            }
        }
    }
    Ok(FunctionsDoc {
        mu: mu.clone(),
        lambda: lambda.cloned(),
        degree,
        max_degree,
        count: rows.len(),
        rows,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeriesDoc {
    pub runs: RunComposition,
    pub n: usize,
    pub odd_runs: usize,
    pub max_degree: usize,
    pub coeffs: Vec<i64>,
    pub numerator: IntPolynomial,
    pub pole_order: usize,
    pub z_complexity: usize,
    pub complexity: usize,
    pub growth_exponent: usize,
    pub rank_variety_dim: usize,
    pub f_support_dim: usize,
}

pub fn series_doc(pi: &RunComposition, max_degree: usize) -> Result<SeriesDoc> {
    let n = pi.total();
    let o = pi.odd_parts();
    Ok(SeriesDoc {
        runs: pi.clone(),
        n,
        odd_runs: o,
        max_degree,
        coeffs: series_coeffs(pi, max_degree)?.coeffs,
        numerator: f_product(pi)?,
        pole_order: pole_order(pi),
        z_complexity: z_complexity(pi),
        complexity: complexity(n, o)?,
        growth_exponent: growth_exponent(pi)?,
        rank_variety_dim: rank_variety_dim(n, (n - o) / 2)?,
        f_support_dim: f_support_dim(n, o)?,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DotInfo {
    pub position: i64,
    pub isolated: bool,
    pub left_isolated: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiagramDoc {
    pub dots: WeightDiagram,
    pub dominant: Vec<i64>,
    pub runs: RunComposition,
    pub atypicality: usize,
    pub odd_runs: usize,
    pub dot_info: Vec<DotInfo>,
    pub ascii: String,
}

pub fn diagram_doc(d: &WeightDiagram) -> Result<DiagramDoc> {
    let dot_info = d
        .dots()
        .iter()
        .map(|&p| {
            Ok(DotInfo {
                position: p,
                isolated: is_isolated(d, p)?,
                left_isolated: is_left_isolated(d, p)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(DiagramDoc {
        dots: d.clone(),
        dominant: dominant_from_diagram(d).coeffs().to_vec(),
        runs: runs(d),
        atypicality: atypicality(d),
        odd_runs: odd_run_count(d),
        dot_info,
        ascii: d.render_ascii(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StepDoc {
    pub mu: WeightDiagram,
    pub plan: StepPlan,
    pub options: Vec<StepPlan>,
}

pub fn step_doc(mu: &WeightDiagram, plan: StepPlan) -> StepDoc {
    StepDoc {
        mu: mu.clone(),
        plan,
        options: step_options(mu),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MovesDoc {
    pub function: AllowableFunction,
    pub ell: i64,
    pub leapfrogs: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degree: Option<i64>,
    pub applicable: Vec<MoveRecord>,
}

pub fn moves_doc(f: &AllowableFunction) -> MovesDoc {
    MovesDoc {
        function: f.clone(),
        ell: f.relative_length(),
        leapfrogs: leapfrog_count(f),
        degree: degree(f).ok(),
        applicable: applicable_moves(f),
    }
}

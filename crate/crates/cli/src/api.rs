//! Request handling shared by the command line and the HTTP service. Each
//! operation returns a wire document or an [`ApiError`] that both front ends
//! map to their own status codes.

use serde::Deserialize;

use kacres_core::diagram::diagram_from_dominant;
use kacres_core::moves::{apply_move, move_violation};
use kacres_core::resolution::{plan_custom, plan_step};
use kacres_core::wire::{
    diagram_doc, functions_doc, implied_max_degree, moves_doc, series_doc, step_doc, DiagramDoc,
    FunctionsDoc, MovesDoc, ResolutionDoc, SeriesDoc, StepDoc,
};
use kacres_core::{
    AllowableFunction, DominantWeight, Error, MoveRecord, Resolver, RunComposition, WeightDiagram,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ApiError {
    /// Unreadable input: bad syntax, wrong shape.
    Malformed(String),
    /// Well-formed input that violates a diagram or move invariant.
    Invariant(String),
    CapExceeded { requested: usize, cap: usize },
    Internal(String),
}

impl std::fmt::Display for ApiError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ApiError::Malformed(m) => write!(f, "malformed input: {m}"),
            ApiError::Invariant(m) => write!(f, "invariant violation: {m}"),
            ApiError::CapExceeded { requested, cap } => {
                write!(f, "maximum degree {requested} exceeds the cap {cap}")
            }
            ApiError::Internal(m) => write!(f, "internal error: {m}"),
        }
    }
}

impl std::error::Error for ApiError {}

impl From<Error> for ApiError {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(m) => ApiError::Malformed(m),
            e if e.is_input_error() => ApiError::Invariant(e.to_string()),
            e => ApiError::Internal(e.to_string()),
        }
    }
}

pub type ApiResult<T> = Result<T, ApiError>;

/// Errors raised by the engine on validated input are defects, not bad input.
fn engine(e: Error) -> ApiError {
    ApiError::Internal(e.to_string())
}

fn check_cap(requested: usize, cap: usize) -> ApiResult<()> {
    if requested > cap {
        return Err(ApiError::CapExceeded { requested, cap });
    }
    Ok(())
}

fn diagram(dots: Vec<i64>) -> ApiResult<WeightDiagram> {
    Ok(WeightDiagram::new(dots)?)
}

/// A function as sent by clients; validated into an [`AllowableFunction`].
#[derive(Debug, Clone, Deserialize)]
pub struct FunctionInput {
    pub source: Vec<i64>,
    pub target: Vec<i64>,
    pub pairing: Vec<i64>,
    #[serde(default)]
    pub trace: Vec<MoveRecord>,
}

impl FunctionInput {
    pub fn validate(self) -> ApiResult<AllowableFunction> {
        let f = AllowableFunction::new(diagram(self.source)?, diagram(self.target)?, self.pairing)?;
        Ok(f.with_trace(self.trace))
    }
}

pub fn resolve(
    resolver: &Resolver,
    cap: usize,
    mu: Vec<i64>,
    max_degree: usize,
    with_functions: bool,
) -> ApiResult<ResolutionDoc> {
    check_cap(max_degree, cap)?;
    let mu = diagram(mu)?;
    if with_functions {
        let r = resolver.resolve_with_functions(&mu, max_degree).map_err(engine)?;
        Ok(ResolutionDoc::from(&r))
    } else {
        let r = resolver.resolve(&mu, max_degree).map_err(engine)?;
        Ok(ResolutionDoc::from(&r))
    }
}

pub fn functions(
    resolver: &Resolver,
    cap: usize,
    mu: Vec<i64>,
    lambda: Option<Vec<i64>>,
    degree: Option<usize>,
    max_degree: Option<usize>,
) -> ApiResult<FunctionsDoc> {
    let mu = diagram(mu)?;
    let lambda = lambda.map(diagram).transpose()?;
    if let Some(l) = &lambda {
        if l.len() != mu.len() {
            let e = Error::SizeMismatch {
                left: mu.len(),
                right: l.len(),
            };
            return Err(ApiError::Invariant(e.to_string()));
        }
    }
    let effective = match (max_degree, degree, &lambda) {
        (Some(d), _, _) | (None, Some(d), _) => d,
        (None, None, Some(l)) => implied_max_degree(&mu, l)?,
        (None, None, None) => {
            return Err(ApiError::Malformed(
                "one of lambda, degree or maxDegree is required".into(),
            ))
        }
    };
    check_cap(effective, cap)?;
    if degree.is_some_and(|d| d > effective) {
        return Err(ApiError::Malformed(format!(
            "degree {} exceeds maxDegree {effective}",
            degree.unwrap_or(0)
        )));
    }
    functions_doc(resolver, &mu, lambda.as_ref(), degree, Some(effective)).map_err(engine)
}

pub fn series(cap: usize, runs: &str, max_degree: usize) -> ApiResult<SeriesDoc> {
    check_cap(max_degree, cap)?;
    let pi: RunComposition = runs.parse()?;
    series_doc(&pi, max_degree).map_err(engine)
}

/// Exactly one of `mu`, `dominant` or `text` names the diagram.
#[derive(Debug, Clone, Default, Deserialize)]
pub struct DiagramInput {
    pub mu: Option<Vec<i64>>,
    pub dominant: Option<Vec<i64>>,
    pub text: Option<String>,
}

pub fn parse_diagram(input: DiagramInput) -> ApiResult<DiagramDoc> {
    let d = match (input.mu, input.dominant, input.text) {
        (Some(mu), None, None) => diagram(mu)?,
        (None, Some(w), None) => diagram_from_dominant(&DominantWeight::new(w)?)?,
        (None, None, Some(t)) => t.parse()?,
        _ => {
            return Err(ApiError::Malformed(
                "give exactly one of mu, dominant, text".into(),
            ))
        }
    };
    Ok(diagram_doc(&d)?)
}

pub fn moves_applicable(f: FunctionInput) -> ApiResult<MovesDoc> {
    Ok(moves_doc(&f.validate()?))
}

pub fn moves_apply(f: FunctionInput, m: MoveRecord) -> ApiResult<MovesDoc> {
    let f = f.validate()?;
    if let Some(why) = move_violation(&f, &m) {
        return Err(ApiError::Invariant(format!("{m} is not applicable: {why}")));
    }
    Ok(moves_doc(&apply_move(&f, &m)?))
}

pub fn step_plan(mu: Vec<i64>) -> ApiResult<StepDoc> {
    let mu = diagram(mu)?;
    let plan = plan_step(&mu);
    Ok(step_doc(&mu, plan))
}

pub fn step_custom(mu: Vec<i64>, i: i64, j: Option<i64>) -> ApiResult<StepDoc> {
    let mu = diagram(mu)?;
    let plan = plan_custom(&mu, i, j)?;
    Ok(step_doc(&mu, plan))
}

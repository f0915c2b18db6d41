//! JSON-over-HTTP service. Every body is produced by
//! [`kacres_core::wire::to_json`], so responses match CLI output byte for byte.

use std::path::PathBuf;
use std::sync::Arc;

use axum::extract::rejection::JsonRejection;
use axum::extract::State;
use axum::http::{header, StatusCode};
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use serde::{Deserialize, Serialize};

use kacres_core::wire::to_json;
use kacres_core::{MoveRecord, Resolver};

use crate::api::{self, ApiError, ApiResult, DiagramInput, FunctionInput};

pub struct AppState {
    pub resolver: Resolver,
    pub max_degree_cap: usize,
    pub cache_path: Option<PathBuf>,
}

impl AppState {
    pub fn new(max_degree_cap: usize) -> Self {
        AppState {
            resolver: Resolver::new(),
            max_degree_cap,
            cache_path: None,
        }
    }
}

type Shared = Arc<AppState>;

#[derive(Serialize)]
struct ErrorBody<'a> {
    error: &'a str,
    message: String,
}

pub fn status_of(e: &ApiError) -> StatusCode {
    match e {
        ApiError::Malformed(_) => StatusCode::BAD_REQUEST,
        ApiError::Invariant(_) => StatusCode::UNPROCESSABLE_ENTITY,
        ApiError::CapExceeded { .. } => StatusCode::PAYLOAD_TOO_LARGE,
        ApiError::Internal(_) => StatusCode::INTERNAL_SERVER_ERROR,
    }
}

fn json_response(status: StatusCode, body: String) -> Response {
    (status, [(header::CONTENT_TYPE, "application/json")], body).into_response()
}

fn error_response(e: &ApiError) -> Response {
    let kind = match e {
        ApiError::Malformed(_) => "malformed",
        ApiError::Invariant(_) => "invariant",
        ApiError::CapExceeded { .. } => "cap_exceeded",
        ApiError::Internal(_) => "internal",
    };
    let message = match e {
        ApiError::Malformed(m) | ApiError::Invariant(m) | ApiError::Internal(m) => m.clone(),
        other => other.to_string(),
    };
    json_response(status_of(e), to_json(&ErrorBody { error: kind, message }))
}

fn respond<T: Serialize>(r: ApiResult<T>) -> Response {
    match r {
        Ok(doc) => json_response(StatusCode::OK, to_json(&doc)),
        Err(e) => error_response(&e),
    }
}

fn payload<T>(p: Result<Json<T>, JsonRejection>) -> ApiResult<T> {
    p.map(|Json(v)| v)
        .map_err(|e| ApiError::Malformed(e.body_text()))
}

/// Runs a handler body off the async executor.
async fn blocking<T, F>(f: F) -> Response
where
    T: Serialize + Send + 'static,
    F: FnOnce() -> ApiResult<T> + Send + 'static,
{
    match tokio::task::spawn_blocking(f).await {
        Ok(r) => respond(r),
        Err(e) => error_response(&ApiError::Internal(e.to_string())),
    }
}

#[derive(Serialize)]
struct Health {
    status: &'static str,
}

async fn health() -> Response {
    json_response(StatusCode::OK, to_json(&Health { status: "ok" }))
}

#[derive(Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ResolveRequest {
    pub mu: Vec<i64>,
    pub max_degree: usize,
    #[serde(default)]
    pub with_functions: bool,
}

async fn resolve(State(s): State<Shared>, p: Result<Json<ResolveRequest>, JsonRejection>) -> Response {
    let req = match payload(p) {
        Ok(r) => r,
        Err(e) => return error_response(&e),
    };
    blocking(move || api::resolve(&s.resolver, s.max_degree_cap, req.mu, req.max_degree, req.with_functions)).await
}

#[derive(Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct FunctionsRequest {
    pub mu: Vec<i64>,
    pub lambda: Option<Vec<i64>>,
    pub degree: Option<usize>,
    pub max_degree: Option<usize>,
}

async fn functions(State(s): State<Shared>, p: Result<Json<FunctionsRequest>, JsonRejection>) -> Response {
    let req = match payload(p) {
        Ok(r) => r,
        Err(e) => return error_response(&e),
    };
    blocking(move || api::functions(&s.resolver, s.max_degree_cap, req.mu, req.lambda, req.degree, req.max_degree)).await
}

#[derive(Deserialize)]
pub struct ApplicableRequest {
    pub function: FunctionInput,
}

async fn moves_applicable(p: Result<Json<ApplicableRequest>, JsonRejection>) -> Response {
    respond(payload(p).and_then(|r| api::moves_applicable(r.function)))
}

#[derive(Deserialize)]
pub struct ApplyRequest {
    pub function: FunctionInput,
    #[serde(rename = "move")]
    pub mv: MoveRecord,
}

async fn moves_apply(p: Result<Json<ApplyRequest>, JsonRejection>) -> Response {
    respond(payload(p).and_then(|r| api::moves_apply(r.function, r.mv)))
}

/// Run sizes as `[2,1,1]` or `"2,1,1"`.
#[derive(Deserialize)]
#[serde(untagged)]
pub enum RunsInput {
    List(Vec<usize>),
    Text(String),
}

impl RunsInput {
    fn text(&self) -> String {
        match self {
            RunsInput::Text(s) => s.clone(),
            RunsInput::List(v) => v.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(","),
        }
    }
}

#[derive(Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SeriesRequest {
    pub runs: RunsInput,
    pub max_degree: usize,
}

async fn series(State(s): State<Shared>, p: Result<Json<SeriesRequest>, JsonRejection>) -> Response {
    let req = match payload(p) {
        Ok(r) => r,
        Err(e) => return error_response(&e),
    };
    blocking(move || api::series(s.max_degree_cap, &req.runs.text(), req.max_degree)).await
}

async fn parse_diagram(p: Result<Json<DiagramInput>, JsonRejection>) -> Response {
    respond(payload(p).and_then(api::parse_diagram))
}

#[derive(Deserialize)]
pub struct PlanRequest {
    pub mu: Vec<i64>,
}

async fn step_plan(p: Result<Json<PlanRequest>, JsonRejection>) -> Response {
    respond(payload(p).and_then(|r| api::step_plan(r.mu)))
}

#[derive(Deserialize)]
pub struct CustomRequest {
    pub mu: Vec<i64>,
    pub i: i64,
    pub j: Option<i64>,
}

async fn step_custom(p: Result<Json<CustomRequest>, JsonRejection>) -> Response {
    respond(payload(p).and_then(|r| api::step_custom(r.mu, r.i, r.j)))
}

pub fn router(state: Shared) -> Router {
    Router::new()
        .route("/health", get(health))
        .route("/api/diagram/parse", post(parse_diagram))
        .route("/api/resolve", post(resolve))
        .route("/api/functions", post(functions))
        .route("/api/moves/applicable", post(moves_applicable))
        .route("/api/moves/apply", post(moves_apply))
        .route("/api/series", post(series))
        .route("/api/step/plan", post(step_plan))
        .route("/api/step/custom", post(step_custom))
        .with_state(state)
}

/// Serves until interrupted, then writes the memo cache if one is configured.
pub async fn serve(state: Shared, port: u16) -> std::io::Result<()> {
    let listener = tokio::net::TcpListener::bind(("127.0.0.1", port)).await?;
    log::info!("listening on {}", listener.local_addr()?);
    axum::serve(listener, router(Arc::clone(&state)))
        .with_graceful_shutdown(async {
            let _ = tokio::signal::ctrl_c().await;
        })
        .await?;
    if let Some(path) = &state.cache_path {
        if let Err(e) = kacres_core::cache::save(&state.resolver, path) {
            log::warn!("could not save cache to {}: {e}", path.display());
        }
    }
    Ok(())
}

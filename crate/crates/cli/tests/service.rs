use std::sync::Arc;

use axum::body::Body;
use axum::http::{Request, StatusCode};
use http_body_util::BodyExt;
use serde_json::{json, Value};
use tower::ServiceExt;

use kacres_cli::service::{router, AppState};

fn app() -> axum::Router {
    router(Arc::new(AppState::new(64)))
}

async fn send(app: axum::Router, method: &str, uri: &str, body: &str) -> (StatusCode, String) {
    let req = Request::builder()
        .method(method)
        .uri(uri)
        .header("content-type", "application/json")
        .body(Body::from(body.to_string()))
        .unwrap();
    let resp = app.oneshot(req).await.unwrap();
    let status = resp.status();
    let bytes = resp.into_body().collect().await.unwrap().to_bytes();
    (status, String::from_utf8(bytes.to_vec()).unwrap())
}

async fn post(uri: &str, body: Value) -> (StatusCode, Value) {
    let (status, text) = send(app(), "POST", uri, &body.to_string()).await;
    (status, serde_json::from_str(&text).unwrap())
}

#[tokio::test]
async fn health() {
    let (status, body) = send(app(), "GET", "/health", "").await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(body, "{\"schema_version\":\"1\",\"status\":\"ok\"}\n");
}

#[tokio::test]
async fn resolve_anchor() {
    let (status, v) = post("/api/resolve", json!({"mu": [0, 1, 2], "maxDegree": 1})).await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(v["schema_version"], "1");
    let lambdas: Vec<&Value> = v["terms"][1]["summands"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| &s["lambda"])
        .collect();
    assert_eq!(lambdas, vec![&json!([-2, 0, 1]), &json!([-1, 0, 2])]);
}

#[tokio::test]
async fn resolve_with_functions_labels() {
    let (status, v) = post("/api/resolve", json!({"mu": [0, 1], "maxDegree": 1, "withFunctions": true})).await;
    assert_eq!(status, StatusCode::OK);
    let f = &v["terms"][1]["summands"][0]["functions"][0];
    assert_eq!(f["pairing"], json!([-1, 0]));
}

#[tokio::test]
async fn functions_for_target() {
    let (status, v) = post(
        "/api/functions",
        json!({"mu": [3, 4, 5, 7, 8], "lambda": [0, 1, 3, 5, 6]}),
    )
    .await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(v["count"], 2);
    assert_eq!(v["max_degree"], 6);
    let (status, _) = post("/api/functions", json!({"mu": [0, 1]})).await;
    assert_eq!(status, StatusCode::BAD_REQUEST);
    let (status, _) = post("/api/functions", json!({"mu": [0, 1], "lambda": [0]})).await;
    assert_eq!(status, StatusCode::UNPROCESSABLE_ENTITY);
}

#[tokio::test]
async fn apply_move3_on_identity() {
    let identity = json!({"source": [0, 1], "target": [0, 1], "pairing": [0, 1]});
    let (status, v) = post(
        "/api/moves/apply",
        json!({"function": identity, "move": {"kind": "Move3", "j": 1}}),
    )
    .await;
    assert_eq!(status, StatusCode::OK, "{v}");
    assert_eq!(v["function"]["source"], json!([1, 2]));
    assert_eq!(v["function"]["pairing"], json!([0, 1]));
    assert_eq!(v["degree"], 1);
}

#[tokio::test]
async fn inapplicable_move_names_the_pattern() {
    let identity = json!({"source": [0, 1], "target": [0, 1], "pairing": [0, 1]});
    let (status, v) = post(
        "/api/moves/apply",
        json!({"function": identity, "move": {"kind": "Move1", "j": 1}}),
    )
    .await;
    assert_eq!(status, StatusCode::UNPROCESSABLE_ENTITY);
    assert_eq!(v["error"], "invariant");
    assert!(v["message"].as_str().unwrap().contains("not applicable"), "{v}");
}

#[tokio::test]
async fn applicable_moves_listed() {
    let identity = json!({"source": [0, 1], "target": [0, 1], "pairing": [0, 1]});
    let (status, v) = post("/api/moves/applicable", json!({"function": identity})).await;
    assert_eq!(status, StatusCode::OK);
    let moves = v["applicable"].as_array().unwrap();
    assert!(moves.contains(&json!({"kind": "Move3", "j": 1})), "{v}");
    let bad = json!({"source": [0, 1], "target": [0, 1], "pairing": [0, 0]});
    let (status, _) = post("/api/moves/applicable", json!({"function": bad})).await;
    assert_eq!(status, StatusCode::UNPROCESSABLE_ENTITY);
}

#[tokio::test]
async fn series_both_run_spellings() {
    let (s1, a) = post("/api/series", json!({"runs": [2], "maxDegree": 5})).await;
    let (s2, b) = post("/api/series", json!({"runs": "2", "maxDegree": 5})).await;
    assert_eq!((s1, s2), (StatusCode::OK, StatusCode::OK));
    assert_eq!(a, b);
    assert_eq!(a["coeffs"], json!([1, 1, 1, 1, 1, 1]));
    assert_eq!(a["z_complexity"], 1);
}

#[tokio::test]
async fn diagram_parse() {
    let (status, v) = post("/api/diagram/parse", json!({"dominant": [2, 2, 1, -4]})).await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(v["dots"], json!([-4, 2, 4, 5]));
    assert_eq!(v["atypicality"], 1);
    let (status, _) = post("/api/diagram/parse", json!({"text": "[1,x]"})).await;
    assert_eq!(status, StatusCode::BAD_REQUEST);
    let (status, _) = post("/api/diagram/parse", json!({"mu": [2, 1]})).await;
    assert_eq!(status, StatusCode::UNPROCESSABLE_ENTITY);
}

#[tokio::test]
async fn step_plan_and_custom() {
    let (status, v) = post("/api/step/plan", json!({"mu": [0, 2, 4, 5]})).await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(v["plan"]["variant"], "Step2b");
    assert_eq!(v["plan"]["j"], 0);
    assert_eq!(v["plan"]["nu"], json!([-1, 2, 4, 5]));
    let (status, v) = post("/api/step/custom", json!({"mu": [0, 3, 5, 6], "i": 5, "j": 0})).await;
    assert_eq!(status, StatusCode::OK, "{v}");
    assert_eq!(v["plan"]["j"], 0);
    assert_eq!(v["plan"]["nu"], json!([-1, 3, 5, 6]));
    let (status, _) = post("/api/step/custom", json!({"mu": [0, 2, 4, 5], "i": 4, "j": 2})).await;
    assert_eq!(status, StatusCode::UNPROCESSABLE_ENTITY);
    let (status, v) = post("/api/step/custom", json!({"mu": [0, 2, 4, 5], "i": 2})).await;
    assert_eq!(status, StatusCode::UNPROCESSABLE_ENTITY, "{v}");
}

#[tokio::test]
async fn error_statuses() {
    let (status, _) = send(app(), "POST", "/api/resolve", "{not json").await;
    assert_eq!(status, StatusCode::BAD_REQUEST);
    let (status, _) = post("/api/resolve", json!({"mu": [0, 1]})).await;
    assert_eq!(status, StatusCode::BAD_REQUEST);
    let (status, v) = post("/api/resolve", json!({"mu": [0, 1], "maxDegree": 65})).await;
    assert_eq!(status, StatusCode::PAYLOAD_TOO_LARGE);
    assert_eq!(v["error"], "cap_exceeded");
    let (status, _) = post("/api/series", json!({"runs": [2], "maxDegree": 1000})).await;
    assert_eq!(status, StatusCode::PAYLOAD_TOO_LARGE);
    let (status, _) = post("/api/resolve", json!({"mu": [], "maxDegree": 1})).await;
    assert_eq!(status, StatusCode::UNPROCESSABLE_ENTITY);
}

#[tokio::test]
async fn concurrent_identical_requests_agree() {
    let state = Arc::new(AppState::new(64));
    let body = json!({"mu": [0, 1, 2, 5, 6, 7], "maxDegree": 8}).to_string();
    let mut handles = Vec::new();
    for _ in 0..8 {
        let app = router(Arc::clone(&state));
        let body = body.clone();
        handles.push(tokio::spawn(async move { send(app, "POST", "/api/resolve", &body).await }));
    }
    let mut bodies = Vec::new();
    for h in handles {
        let (status, text) = h.await.unwrap();
        assert_eq!(status, StatusCode::OK);
        bodies.push(text);
    }
    assert!(bodies.windows(2).all(|w| w[0] == w[1]));
}

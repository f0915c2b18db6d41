//! Exact combinatorics for projective resolutions of Kac modules over the
//! periplectic Lie superalgebra `p(n)`, worked entirely on weight diagrams.
//!
//! * [`diagram`]: weight diagrams, runs, atypicality, relative length.
//! * [`moves`]: allowable functions and Moves 1–3.
//! * [`resolution`]: the recursive construction of `P_•(μ)`.
//! * [`series`]: generating functions `S_π(u)` and complexity formulas.
//! * [`wire`]: JSON shapes shared by the CLI and the HTTP service.
//! * [`cache`]: persistence of the resolution memo table.
//! * [`verify`]: the invariant-checking harness.
//! * [`laws`]: randomized property laws used by the harness.

pub mod cache;
pub mod diagram;
pub mod error;
pub mod laws;
pub mod moves;
pub mod resolution;
pub mod series;
pub mod verify;
pub mod wire;

pub use diagram::{DominantWeight, RunComposition, WeightDiagram};
pub use error::{Error, Result};
pub use moves::{AllowableFunction, MoveKind, MoveRecord};
pub use resolution::{
    LabelledResolution, Resolution, ResolutionTerm, Resolver, StepChooser, StepPlan,
};
pub use series::{IntPolynomial, TruncatedSeries};
pub use verify::{VerificationReport, VerifyOptions};

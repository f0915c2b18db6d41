//! Command line and HTTP front ends over `kacres-core`.

pub mod api;
pub mod config;
pub mod render;
pub mod service;

pub use config::{JobConfig, OutputFormat};

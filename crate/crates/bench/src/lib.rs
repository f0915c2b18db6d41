//! Shared inputs for the benchmarks.

use kacres_core::{RunComposition, WeightDiagram};

/// Two separated four-dot runs.
pub fn two_blocks() -> WeightDiagram {
    WeightDiagram::new(vec![0, 1, 2, 3, 8, 9, 10, 11]).expect("valid diagram")
}

/// A single run of `n` dots starting at 0.
pub fn single_run(n: usize) -> WeightDiagram {
    WeightDiagram::new((0..n as i64).collect()).expect("valid diagram")
}

pub fn composition(parts: &[usize]) -> RunComposition {
    RunComposition::new(parts.to_vec()).expect("valid composition")
}

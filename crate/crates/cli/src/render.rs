//! Fixed-width tables and ASCII pictures for terminal output.

use std::fmt::Write;

use kacres_core::diagram::render_window;
use kacres_core::wire::{DiagramDoc, FunctionsDoc, ResolutionDoc, SeriesDoc};
use kacres_core::WeightDiagram;

fn summand_list(doc: &kacres_core::wire::TermDoc) -> String {
    doc.summands
        .iter()
        .map(|s| {
            if s.multiplicity == 1 {
                s.lambda.to_string()
            } else {
                format!("{}x{}", s.multiplicity, s.lambda)
            }
        })
        .collect::<Vec<_>>()
        .join(", ")
}

pub fn resolution_table(doc: &ResolutionDoc) -> String {
    let mut out = format!("mu = {}\n", doc.mu);
    let _ = writeln!(out, "{:>6} {:>8}  summands", "degree", "s_d");
    for t in &doc.terms {
        let _ = writeln!(out, "{:>6} {:>8}  {}", t.degree, t.total, summand_list(t));
    }
    out
}

/// Labels each picture row, then the shared ruler.
fn labelled_window(rows: &[(String, &WeightDiagram)]) -> String {
    let lo = rows.iter().map(|r| r.1.min_dot()).min().unwrap_or(0) - 1;
    let hi = rows.iter().map(|r| r.1.max_dot()).max().unwrap_or(0) + 1;
    let width = rows.iter().map(|r| r.0.len()).max().unwrap_or(0);
    let diagrams: Vec<&WeightDiagram> = rows.iter().map(|r| r.1).collect();
    let picture = render_window(&diagrams, lo, hi);
    let mut out = String::new();
    for (k, line) in picture.lines().enumerate() {
        let label = rows.get(k).map_or("", |r| r.0.as_str());
        let _ = writeln!(out, "{label:<width$}  {line}");
    }
    out
}

pub fn resolution_ascii(doc: &ResolutionDoc) -> String {
    let mut rows = vec![("mu".to_string(), &doc.mu)];
    for t in &doc.terms {
        for s in &t.summands {
            rows.push((format!("d={} x{}", t.degree, s.multiplicity), &s.lambda));
        }
    }
    labelled_window(&rows)
}

pub fn functions_table(doc: &FunctionsDoc) -> String {
    let mut out = format!("mu = {}\n", doc.mu);
    let _ = writeln!(out, "{:>4} {:>4} {:>4}  {:<24}  pairing", "d", "ell", "L", "target");
    for r in &doc.rows {
        let _ = writeln!(
            out,
            "{:>4} {:>4} {:>4}  {:<24}  {}",
            r.degree,
            r.ell,
            r.leapfrogs,
            r.function.target().to_string(),
            r.function
        );
    }
    let _ = writeln!(out, "{} functions", doc.count);
    out
}

pub fn functions_ascii(doc: &FunctionsDoc) -> String {
    let mut out = String::new();
    for r in &doc.rows {
        let _ = writeln!(out, "d={} ell={} L={}", r.degree, r.ell, r.leapfrogs);
        let _ = writeln!(out, "{}\n", r.function.render_ascii());
    }
    let _ = writeln!(out, "{} functions", doc.count);
    out
}

pub fn series_table(doc: &SeriesDoc) -> String {
    let mut out = format!("runs = {}\n", doc.runs);
    let _ = writeln!(out, "{:>6} {:>10}", "degree", "s_d");
    for (d, c) in doc.coeffs.iter().enumerate() {
        let _ = writeln!(out, "{d:>6} {c:>10}");
    }
    let _ = writeln!(out, "numerator        {}", doc.numerator);
    let _ = writeln!(out, "pole order       {}", doc.pole_order);
    let _ = writeln!(out, "z-complexity     {}", doc.z_complexity);
    let _ = writeln!(out, "complexity       {}", doc.complexity);
    let _ = writeln!(out, "rank variety     {}", doc.rank_variety_dim);
    let _ = writeln!(out, "support dim      {}", doc.f_support_dim);
    out
}

pub fn diagram_table(doc: &DiagramDoc) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "dots          {}", doc.dots);
    let _ = writeln!(out, "dominant      {:?}", doc.dominant);
    let _ = writeln!(out, "runs          {}", doc.runs);
    let _ = writeln!(out, "atypicality   {}", doc.atypicality);
    let _ = writeln!(out, "odd runs      {}", doc.odd_runs);
    let _ = writeln!(out, "{:>8}  {:<8}  left-isolated", "dot", "isolated");
    for d in &doc.dot_info {
        let _ = writeln!(out, "{:>8}  {:<8}  {}", d.position, d.isolated, d.left_isolated);
    }
    out
}

pub fn diagram_ascii(doc: &DiagramDoc) -> String {
    format!("{}\n", doc.ascii)
}

//! Persistence of the resolution memo table as versioned JSON lines.
//!
//! The first line is a header `{"format":"kacres-memo","version":1}`. Each
//! following line holds one translation-normalized diagram and its summand
//! lists for degrees `0..len`. Lines that fail to parse or validate are
//! skipped with a warning.

use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Read, Write};
use std::path::Path;

use log::warn;
use serde::{Deserialize, Serialize};

use crate::diagram::WeightDiagram;
use crate::error::{Error, Result};
use crate::resolution::Resolver;

pub const FORMAT: &str = "kacres-memo";
pub const VERSION: u32 = 1;

#[derive(Debug, Serialize, Deserialize)]
struct Header {
    format: String,
    version: u32,
}

#[derive(Debug, Serialize, Deserialize)]
struct Summand {
    lambda: WeightDiagram,
    multiplicity: u64,
}

#[derive(Debug, Serialize, Deserialize)]
struct Entry {
    key: WeightDiagram,
    terms: Vec<Vec<Summand>>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct LoadStats {
    pub loaded: usize,
    pub skipped: usize,
}

fn io_err(e: std::io::Error) -> Error {
    Error::Parse(format!("cache i/o: {e}"))
}

pub fn write_cache<W: Write>(resolver: &Resolver, mut out: W) -> Result<usize> {
    let header = Header {
        format: FORMAT.into(),
        version: VERSION,
    };
    let line = serde_json::to_string(&header).map_err(|e| Error::Internal(e.to_string()))?;
    writeln!(out, "{line}").map_err(io_err)?;
    let entries = resolver.memo_snapshot();
    for (key, terms) in &entries {
        let entry = Entry {
            key: key.clone(),
            terms: terms
                .iter()
                .map(|t| {
                    t.iter()
                        .map(|(lambda, &multiplicity)| Summand {
                            lambda: lambda.clone(),
                            multiplicity,
                        })
                        .collect()
                })
                .collect(),
        };
        let line = serde_json::to_string(&entry).map_err(|e| Error::Internal(e.to_string()))?;
        writeln!(out, "{line}").map_err(io_err)?;
    }
    out.flush().map_err(io_err)?;
    Ok(entries.len())
}

fn validate(entry: &Entry) -> std::result::Result<(), String> {
    if entry.key.min_dot() != 0 {
        return Err(format!("key {} is not normalized", entry.key));
    }
    if entry.terms.is_empty() {
        return Err("no terms".into());
    }
    let n = entry.key.len();
    for term in &entry.terms {
        for s in term {
            if s.lambda.len() != n || s.multiplicity == 0 {
                return Err(format!("bad summand {} x{}", s.lambda, s.multiplicity));
            }
        }
    }
    Ok(())
}

pub fn read_cache<R: Read>(resolver: &Resolver, input: R) -> Result<LoadStats> {
    let mut lines = BufReader::new(input).lines();
    let header_line = match lines.next() {
        Some(line) => line.map_err(io_err)?,
        None => return Ok(LoadStats::default()),
    };
    let header: Header = serde_json::from_str(&header_line)
        .map_err(|e| Error::Parse(format!("cache header: {e}")))?;
    if header.format != FORMAT || header.version != VERSION {
        return Err(Error::Parse(format!(
            "unsupported cache format {} v{}",
            header.format, header.version
        )));
    }
    let mut stats = LoadStats::default();
    for (idx, line) in lines.enumerate() {
        let line = line.map_err(io_err)?;
        if line.trim().is_empty() {
            continue;
        }
        let parsed = serde_json::from_str::<Entry>(&line)
            .map_err(|e| e.to_string())
            .and_then(|entry| validate(&entry).map(|_| entry));
        match parsed {
            Ok(entry) => {
                let terms = entry
                    .terms
                    .into_iter()
                    .map(|t| t.into_iter().map(|s| (s.lambda, s.multiplicity)).collect())
                    .collect();
                resolver.memo_insert(entry.key, terms);
                stats.loaded += 1;
            }
            Err(why) => {
                warn!("skipping cache line {}: {why}", idx + 2);
                stats.skipped += 1;
            }
        }
    }
    Ok(stats)
}

pub fn save(resolver: &Resolver, path: &Path) -> Result<usize> {
    let file = File::create(path).map_err(io_err)?;
    write_cache(resolver, BufWriter::new(file))
}

/// Loads `path` into the memo; a missing file loads nothing.
pub fn load(resolver: &Resolver, path: &Path) -> Result<LoadStats> {
    match File::open(path) {
        Ok(file) => read_cache(resolver, file),
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => Ok(LoadStats::default()),
        Err(e) => Err(io_err(e)),
    }
}

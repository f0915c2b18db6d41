use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};

use kacres_cli::api::{self, ApiError, DiagramInput};
use kacres_cli::config::{cache_path_from_env, DEFAULT_MAX_DEGREE_CAP, DEFAULT_PORT};
use kacres_cli::service::{self, AppState};
use kacres_cli::{render, OutputFormat};
use kacres_core::resolution::Fault;
use kacres_core::verify::{verify, VerifyOptions};
use kacres_core::wire::to_json;
use kacres_core::{cache, Resolver, WeightDiagram};

#[derive(Parser)]
#[command(name = "kacres", version, about = "Projective resolutions of Kac modules on weight diagrams")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Terms P_0..P_D of the resolution of a Kac module.
    Resolve {
        /// Weight diagram, e.g. "[0,1,2]".
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        #[arg(long)]
        max_degree: usize,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
        /// Label every summand with its allowable function.
        #[arg(long)]
        with_functions: bool,
        /// Memo cache file (JSON lines); KACRES_CACHE takes precedence.
        #[arg(long)]
        cache: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_MAX_DEGREE_CAP)]
        max_degree_cap: usize,
    },
    /// Hilbert-Poincaré series and complexity numbers for a run composition.
    Series {
        /// Run sizes, right to left, e.g. "2,1,1".
        #[arg(long)]
        runs: String,
        #[arg(long)]
        max_degree: usize,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
        #[arg(long, default_value_t = DEFAULT_MAX_DEGREE_CAP)]
        max_degree_cap: usize,
    },
    /// Allowable functions out of mu, optionally to a fixed target.
    Functions {
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        /// Target diagram; without --max-degree the bound is half its relative length.
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
        /// Only functions of this degree.
        #[arg(long)]
        degree: Option<usize>,
        #[arg(long)]
        max_degree: Option<usize>,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
        #[arg(long)]
        cache: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_MAX_DEGREE_CAP)]
        max_degree_cap: usize,
    },
    /// Runs, atypicality and isolated dots of one diagram.
    Diagram {
        #[arg(long, allow_hyphen_values = true, conflicts_with = "dominant")]
        mu: Option<String>,
        /// Weakly decreasing weight coefficients, e.g. "2,2,1,-4".
        #[arg(long, allow_hyphen_values = true)]
        dominant: Option<String>,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// Invariant checks over a corpus plus randomized property laws.
    Verify {
        /// Restrict to these checks (repeatable); `laws` or `law:<name>` for property laws.
        #[arg(long = "check")]
        checks: Vec<String>,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        #[arg(long, default_value_t = 8)]
        max_degree: usize,
        /// Cases per property law.
        #[arg(long, default_value_t = 1000)]
        cases: u32,
        /// Add every subset of [0, 12] to the corpus.
        #[arg(long)]
        exhaustive: bool,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
        /// Negative control: run against a deliberately broken engine.
        #[arg(long, hide = true)]
        inject_fault: bool,
        /// List the check names and exit.
        #[arg(long)]
        list: bool,
    },
    /// JSON-over-HTTP service.
    Serve {
        #[arg(long, default_value_t = DEFAULT_PORT)]
        port: u16,
        #[arg(long, default_value_t = DEFAULT_MAX_DEGREE_CAP)]
        max_degree_cap: usize,
        #[arg(long)]
        cache: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

fn exit_code(e: &ApiError) -> u8 {
    match e {
        ApiError::Malformed(_) | ApiError::Invariant(_) => 2,
        ApiError::CapExceeded { .. } => 3,
        ApiError::Internal(_) => 4,
    }
}

fn parse_dots(s: &str) -> Result<Vec<i64>, ApiError> {
    s.parse::<WeightDiagram>()
        .map(|d| d.dots().to_vec())
        .map_err(ApiError::from)
}

fn load_cache(resolver: &Resolver, path: Option<&PathBuf>) -> Result<(), ApiError> {
    if let Some(p) = path {
        let stats = cache::load(resolver, p).map_err(|e| ApiError::Malformed(e.to_string()))?;
        log::info!("cache {}: {} loaded, {} skipped", p.display(), stats.loaded, stats.skipped);
    }
    Ok(())
}

fn save_cache(resolver: &Resolver, path: Option<&PathBuf>) -> Result<(), ApiError> {
    if let Some(p) = path {
        cache::save(resolver, p).map_err(|e| ApiError::Internal(e.to_string()))?;
    }
    Ok(())
}

fn run(command: Command) -> Result<ExitCode, ApiError> {
    match command {
        Command::Resolve {
            mu,
            max_degree,
            format,
            with_functions,
            cache,
            max_degree_cap,
        } => {
            let dots = parse_dots(&mu)?;
            let path = cache_path_from_env(cache);
            let resolver = Resolver::new();
            load_cache(&resolver, path.as_ref())?;
            let doc = api::resolve(&resolver, max_degree_cap, dots, max_degree, with_functions)?;
            save_cache(&resolver, path.as_ref())?;
            print!(
                "{}",
                match format {
                    OutputFormat::Json => to_json(&doc),
                    OutputFormat::Table => render::resolution_table(&doc),
                    OutputFormat::Ascii => render::resolution_ascii(&doc),
                }
            );
        }
        Command::Series {
            runs,
            max_degree,
            format,
            max_degree_cap,
        } => {
            let doc = api::series(max_degree_cap, &runs, max_degree)?;
            print!(
                "{}",
                match format {
                    OutputFormat::Json => to_json(&doc),
                    OutputFormat::Table | OutputFormat::Ascii => render::series_table(&doc),
                }
            );
        }
        Command::Functions {
            mu,
            lambda,
            degree,
            max_degree,
            format,
            cache,
            max_degree_cap,
        } => {
            let dots = parse_dots(&mu)?;
            let lambda = lambda.as_deref().map(parse_dots).transpose()?;
            let path = cache_path_from_env(cache);
            let resolver = Resolver::new();
            load_cache(&resolver, path.as_ref())?;
            let doc = api::functions(&resolver, max_degree_cap, dots, lambda, degree, max_degree)?;
            save_cache(&resolver, path.as_ref())?;
            print!(
                "{}",
                match format {
                    OutputFormat::Json => to_json(&doc),
                    OutputFormat::Table => render::functions_table(&doc),
                    OutputFormat::Ascii => render::functions_ascii(&doc),
                }
            );
        }
        Command::Diagram { mu, dominant, format } => {
            let input = DiagramInput {
                mu: mu.as_deref().map(parse_dots).transpose()?,
                dominant: dominant
                    .as_deref()
                    .map(|s| {
                        kacres_core::diagram::parse_int_list(s).map_err(ApiError::from)
                    })
                    .transpose()?,
                text: None,
            };
            let doc = api::parse_diagram(input)?;
            print!(
                "{}",
                match format {
                    OutputFormat::Json => to_json(&doc),
                    OutputFormat::Table => render::diagram_table(&doc),
                    OutputFormat::Ascii => render::diagram_ascii(&doc),
                }
            );
        }
        Command::Verify {
            checks,
            trials,
            seed,
            max_n,
            max_degree,
            cases,
            exhaustive,
            format,
            inject_fault,
            list,
        } => {
            if list {
                for name in kacres_core::verify::known_checks() {
                    println!("{name}");
                }
                return Ok(ExitCode::SUCCESS);
            }
            log::info!("verify seed {seed}");
            let opts = VerifyOptions {
                max_n,
                max_degree,
                trials,
                seed,
                cases,
                exhaustive,
                checks,
                fault: inject_fault.then_some(Fault::FlipMove2Arrow),
            };
            let report = verify(&opts).map_err(|e| ApiError::Malformed(e.to_string()))?;
            match format {
                ReportFormat::Text => println!("{report}"),
                ReportFormat::Json => print!("{}", to_json(&report)),
            }
            if !report.passed() {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Serve {
            port,
            max_degree_cap,
            cache,
        } => {
            let path = cache_path_from_env(cache);
            let mut state = AppState::new(max_degree_cap);
            load_cache(&state.resolver, path.as_ref())?;
            state.cache_path = path;
            let rt = tokio::runtime::Runtime::new().map_err(|e| ApiError::Internal(e.to_string()))?;
            rt.block_on(service::serve(Arc::new(state), port))
                .map_err(|e| ApiError::Internal(e.to_string()))?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

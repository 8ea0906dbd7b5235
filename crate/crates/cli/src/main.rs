use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};
use levi_core::cases::{self, CaseId, CaseParams, CaseReport, Limits};
use levi_core::format::{self, NamedIndex};
use levi_core::index::ClassificationReport;
use levi_core::weyl::DEFAULT_ORDER_BOUND;
use levi_core::Error;

mod render;

/// Classify standard Levi subsets of a Tits index up to geometric and
/// rational association.
#[derive(Parser)]
#[command(name = "levi", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify the standard Levi subsets of the index in a spec file.
    Classify {
        spec: PathBuf,
        #[command(flatten)]
        output: Output,
    },
    /// Run the verification cases (`all`, `catalog`, or a case name).
    Verify {
        #[arg(default_value = "all")]
        case: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        d: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        factor: Option<String>,
        #[arg(long)]
        copies: Option<usize>,
        /// Catalog used by the `catalog` and `all` selectors.
        #[arg(long)]
        catalog: Option<PathBuf>,
        #[command(flatten)]
        output: Output,
    },
    /// Inspect the catalog of indices.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    /// List the indices in the catalog.
    List {
        #[arg(long)]
        catalog: Option<PathBuf>,
    },
}

#[derive(Args)]
struct Output {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Largest group or orbit the engine may enumerate.
    #[arg(long, default_value_t = DEFAULT_ORDER_BOUND)]
    order_bound: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

const EXIT_FAILED: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_BOUND: u8 = 3;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(EXIT_FAILED),
        Err(err) => {
            eprintln!("error: {err:#}");
            let code = match err.downcast_ref::<Error>() {
                Some(Error::OrderBoundExceeded { .. }) => EXIT_BOUND,
                Some(Error::Internal(_)) => EXIT_FAILED,
                _ => EXIT_INPUT,
            };
            ExitCode::from(code)
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<bool> {
    match cli.command {
        Command::Classify { spec, output } => classify(&spec, &output),
        Command::Verify {
            case,
            n,
            d,
            m,
            factor,
            copies,
            catalog,
            output,
        } => {
            let params = CaseParams { n, d, m, factor, copies };
            verify(&case, params, catalog.as_deref(), &output)
        }
        Command::Catalog {
            action: CatalogAction::List { catalog },
        } => {
            let entries = load_catalog(catalog.as_deref())?;
            emit(&render::catalog(&entries));
            Ok(true)
        }
    }
}

/// Writes to stdout; a closed pipe (e.g. `| head`) is not an error.
fn emit(text: &str) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    if let Err(e) = out.write_all(text.as_bytes()).and_then(|()| out.flush()) {
        if e.kind() != std::io::ErrorKind::BrokenPipe {
            eprintln!("error: {e}");
        }
    }
}

fn read(path: &std::path::Path) -> anyhow::Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn classify(spec: &std::path::Path, output: &Output) -> anyhow::Result<bool> {
    let text = read(spec)?;
    let named = format::parse_index(&text).map_err(|e| anyhow::Error::new(e).context(spec.display().to_string()))?;
    let report = named.index.classify(output.order_bound)?;
    match output.format {
        Format::Json => emit(&(serde_json::to_string_pretty(&report)? + "\n")),
        Format::Text => emit(&render::classification(&named.name, &report)),
    }
    Ok(report.agreement)
}

fn load_catalog(path: Option<&std::path::Path>) -> anyhow::Result<Vec<NamedIndex>> {
    match path {
        Some(p) => {
            let text = read(p)?;
            Ok(format::parse_catalog(&text).map_err(|e| anyhow::Error::new(e).context(p.display().to_string()))?)
        }
        None => Ok(format::builtin_catalog()),
    }
}

/// Classifies every catalog index and reports agreement as one case each.
fn catalog_reports(entries: &[NamedIndex], order_bound: usize) -> anyhow::Result<Vec<CaseReport>> {
    entries
        .iter()
        .map(|e| {
            let start = std::time::Instant::now();
            let report: ClassificationReport = e.index.classify(order_bound)?;
            let summary = cases::Summary {
                subsets: report.subsets.len(),
                classes_per_rank: ClassificationReport::classes_per_rank(&report.rational_classes, &report.subsets),
                classes: report.labelled(&report.rational_classes),
                relative_weyl_order: None,
            };
            let geometric = cases::Summary {
                classes_per_rank: ClassificationReport::classes_per_rank(&report.geometric_classes, &report.subsets),
                classes: report.labelled(&report.geometric_classes),
                ..summary.clone()
            };
            let replay = e.index.check_witnesses(&report);
            let checks = vec![cases::Check {
                name: "witnesses replay".into(),
                pass: replay.is_ok(),
                detail: replay.err().map(|x| x.to_string()).unwrap_or_default(),
            }];
            Ok(CaseReport {
                case_id: "catalog".into(),
                parameters: [("index".to_string(), e.name.clone())].into(),
                pass: report.agreement && checks.iter().all(|c| c.pass),
                expected: geometric,
                computed: summary,
                checks,
                elapsed: start.elapsed(),
            })
        })
        .collect()
}

fn verify(
    selector: &str,
    params: CaseParams,
    catalog: Option<&std::path::Path>,
    output: &Output,
) -> anyhow::Result<bool> {
    let limits = Limits {
        order_bound: output.order_bound,
        ..Limits::default()
    };
    let mut reports = Vec::new();
    match selector {
        "all" => {
            for (case, p) in cases::default_suite(&limits) {
                reports.push(cases::run_case(case, &p, &limits)?);
            }
            reports.extend(catalog_reports(&load_catalog(catalog)?, limits.order_bound)?);
        }
        "catalog" => reports.extend(catalog_reports(&load_catalog(catalog)?, limits.order_bound)?),
        name => {
            let case = CaseId::parse(name)?;
            let sets = if params == CaseParams::default() {
                cases::default_parameters(case, &limits)
            } else {
                vec![params]
            };
            for p in sets {
                reports.push(cases::run_case(case, &p, &limits)?);
            }
        }
    }
    match output.format {
        Format::Json => emit(&(serde_json::to_string_pretty(&reports)? + "\n")),
        Format::Text => emit(&render::suite(&reports)),
    }
    Ok(reports.iter().all(|r| r.pass))
}

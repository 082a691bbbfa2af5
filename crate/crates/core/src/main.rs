use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use liecurv::catalog::{self, CatalogParams};
use liecurv::complex::AlmostComplexStructure;
use liecurv::curvature::CONVENTIONS;
use liecurv::foliation::FoliationSplit;
use liecurv::report::{self, Render};
use liecurv::roots::DEFAULT_ROOT_TOLERANCE;
use liecurv::wedge::WedgeBasis;
use liecurv::{Error, MetricLieAlgebra, Result, Scalar};

#[derive(Parser)]
#[command(
    name = "liecurv",
    version,
    about = "Exact curvature of left-invariant metrics and harmonic-morphism obstructions"
)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Print numbers as floats instead of exact surds.
    #[arg(long, global = true)]
    float: bool,
    /// Float mode only: root refinement width and zero threshold.
    #[arg(long, global = true)]
    tol: Option<f64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

/// An algebra JSON file, or a catalog name with its parameters.
#[derive(Args)]
struct Source {
    source: String,
    /// Dimension for `abelian`.
    #[arg(long)]
    dim: Option<usize>,
    /// Family parameter for `g1`.
    #[arg(long)]
    n: Option<usize>,
    /// Comma-separated coefficients for `g2`.
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Check antisymmetry and the Jacobi identity.
    Validate(Source),
    /// Nonzero Riemann tensor components.
    Curvature(Source),
    /// Ricci matrix and Einstein verdict.
    Ricci(Source),
    /// Einstein verdict.
    Einstein(Source),
    /// Curvature operator on the exterior square.
    Operator {
        #[command(flatten)]
        source: Source,
        /// JSON list of index or label pairs.
        #[arg(long, conflicts_with = "display_order")]
        basis_order: Option<PathBuf>,
        /// Use the catalog entry's reference ordering.
        #[arg(long)]
        display_order: bool,
    },
    /// Analyse the foliation by a vertical index set.
    Foliation {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        vertical: String,
    },
    /// Classify every coordinate subset of size n-2.
    Scan(Source),
    /// Almost complex structure checks.
    Complex {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        vertical: String,
        /// n×n matrix file.
        #[arg(long, conflicts_with = "sample")]
        j: Option<PathBuf>,
        /// Number of random adapted structures to test.
        #[arg(long)]
        sample: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Paired-eigenvalue obstruction for Einstein metrics.
    Obstruction(Source),
    /// List catalog entries, or print one as an algebra file.
    Catalog {
        name: Option<String>,
        #[arg(long)]
        dim: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<String>,
    },
    /// Combined pipeline report.
    Report {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        all: bool,
        /// Vertical index set; may be repeated.
        #[arg(long)]
        foliation: Vec<String>,
    },
    /// Print the sign conventions.
    Conventions,
}

fn parse_alpha(text: &str) -> Result<Vec<Scalar>> {
    text.split(',')
        .map(|t| t.trim().parse::<Scalar>().map_err(Error::from))
        .collect()
}

fn params(dim: Option<usize>, n: Option<usize>, alpha: Option<&str>) -> Result<CatalogParams> {
    Ok(CatalogParams {
        dim,
        n,
        alpha: alpha.map(parse_alpha).transpose()?,
    })
}

/// The algebra and, for catalog sources, the entry name.
fn load(src: &Source) -> Result<(MetricLieAlgebra, Option<String>)> {
    let path = Path::new(&src.source);
    if path.is_file() {
        if src.dim.is_some() || src.n.is_some() || src.alpha.is_some() {
            return Err(Error::Usage("catalog parameters given with an algebra file".into()));
        }
        let text = std::fs::read_to_string(path)?;
        return Ok((MetricLieAlgebra::from_json(&text)?, None));
    }
    if catalog::entry(&src.source).is_err() {
        return Err(Error::UnknownEntry(format!(
            "{} (not a file or catalog entry)",
            src.source
        )));
    }
    let alg = catalog::build(&src.source, &params(src.dim, src.n, src.alpha.as_deref())?)?;
    Ok((alg, Some(src.source.clone())))
}

fn load_valid(src: &Source) -> Result<(MetricLieAlgebra, Option<String>)> {
    let (alg, name) = load(src)?;
    alg.ensure_valid()?;
    Ok((alg, name))
}

/// Write to stdout; a closed pipe is not an error.
fn out(text: &str) -> Result<()> {
    let mut stdout = std::io::stdout().lock();
    match stdout.write_all(text.as_bytes()).and_then(|_| stdout.flush()) {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(e.into()),
        _ => Ok(()),
    }
}

fn emit<T: Serialize>(format: Format, value: &T) -> Result<()> {
    match format {
        Format::Json => out(&report::to_json(value)),
        Format::Text => out(&report::to_text(value)),
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    if cli.tol.is_some() && !cli.float {
        return Err(Error::Usage("--tol applies only with --float".into()));
    }
    let r = Render {
        float: cli.float,
        tol: cli.tol.unwrap_or(DEFAULT_ROOT_TOLERANCE),
    };
    if !(r.tol > 0.0 && r.tol.is_finite()) {
        return Err(Error::Usage("--tol must be positive".into()));
    }
    let f = cli.format;
    match cli.command {
        Command::Validate(src) => {
            let (alg, _) = load(&src)?;
            let rep = report::validate_report(&alg, &r);
            emit(f, &rep)?;
            if !rep.valid {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Curvature(src) => emit(f, &report::curvature_report(&load_valid(&src)?.0, &r)?)?,
        Command::Ricci(src) => emit(f, &report::ricci_report(&load_valid(&src)?.0, &r)?)?,
        Command::Einstein(src) => emit(f, &report::einstein_report(&load_valid(&src)?.0, &r)?)?,
        Command::Operator {
            source,
            basis_order,
            display_order,
        } => {
            let (alg, name) = load_valid(&source)?;
            let basis = if let Some(path) = basis_order {
                WedgeBasis::from_json(&alg, &std::fs::read_to_string(path)?)?
            } else if display_order {
                let name = name.ok_or_else(|| Error::Usage("--display-order needs a catalog entry".into()))?;
                catalog::display_basis(&name, &alg)?
                    .ok_or_else(|| Error::InvalidParams(format!("{name} has no reference ordering")))?
            } else {
                WedgeBasis::lexicographic(alg.dim())
            };
            emit(f, &report::operator_report(&alg, &basis, &r)?)?;
        }
        Command::Foliation { source, vertical } => {
            let (alg, _) = load_valid(&source)?;
            let split = FoliationSplit::parse(&alg, &vertical)?;
            emit(f, &report::foliation_report(&alg, &split, &r)?)?;
        }
        Command::Scan(src) => emit(f, &report::scan_report(&load_valid(&src)?.0, &r)?)?,
        Command::Complex {
            source,
            vertical,
            j,
            sample,
            seed,
        } => {
            let (alg, _) = load_valid(&source)?;
            let split = FoliationSplit::parse(&alg, &vertical)?;
            match (j, sample) {
                (Some(path), None) => {
                    let j = AlmostComplexStructure::parse(&std::fs::read_to_string(path)?)?;
                    emit(f, &report::complex_report(&alg, &j, &split, &r)?)?;
                }
                (None, Some(n)) => emit(f, &report::sampling_report(&alg, &split, n, seed, &r)?)?,
                _ => return Err(Error::Usage("give exactly one of --j or --sample".into())),
            }
        }
        Command::Obstruction(src) => emit(f, &report::obstruction_report(&load_valid(&src)?.0, &r)?)?,
        Command::Catalog { name, dim, n, alpha } => match name {
            None => match f {
                Format::Json => emit(f, &catalog::ENTRIES)?,
                Format::Text => {
                    let lines: String = catalog::ENTRIES
                        .iter()
                        .map(|e| format!("{:<12} {:<20} {}\n", e.name, e.params, e.description))
                        .collect();
                    out(&lines)?;
                }
            },
            Some(name) => {
                let alg = catalog::build(&name, &params(dim, n, alpha.as_deref())?)?;
                out(&format!("{}\n", alg.to_json().trim_end()))?;
            }
        },
        Command::Report { source, all, foliation } => {
            let (alg, name) = load(&source)?;
            let splits = foliation
                .iter()
                .map(|v| FoliationSplit::parse(&alg, v))
                .collect::<Result<Vec<_>>>()?;
            emit(f, &report::full_report(&alg, name.as_deref(), &splits, all, &r)?)?;
        }
        Command::Conventions => out(&format!("{CONVENTIONS}\n"))?,
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match std::panic::catch_unwind(|| run(cli)) {
        Ok(Ok(code)) => code,
        Ok(Err(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(_) => ExitCode::from(2),
    }
}

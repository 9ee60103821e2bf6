//! Command line front door: parses JSON inputs, dispatches to the library,
//! and emits exact-rational reports with stable formatting.
//!
//! Exit codes: 0 success, 1 validation or domain failure, 2 I/O or schema
//! error (including unknown commands, which clap also reports with 2).

mod reports;

use antinef::config::QDivisor;
use antinef::json::{divisor_from_strings, ConfigDoc, SpecDoc, TermDoc};
use antinef::multiplicity::{
    mixed_form, polynomial_from_form, product_multiplicity, volume, weighted_mixed,
};
use antinef::oracle::{
    filtration_ideal, limit_fit, tau_sequence, toric_config, truncate, val_ideal,
    MonomialValuation, OracleFiltrationSpec,
};
use antinef::rational::{format_rational, int};
use antinef::theorems::{gamma, minkowski_report, rees_check};
use antinef::zariski::decompose;
use clap::{Parser, Subcommand, ValueEnum};
use num::ToPrimitive;
use reports::*;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use std::fmt::Display;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "antinef",
    about = "Zariski decompositions, volumes and mixed multiplicities of divisorial filtrations \
             on two-dimensional resolutions, cross-checked by monomial lattice counting",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Markdown,
    Csv,
}

#[derive(clap::Args)]
struct CommonArgs {
    /// Path to the JSON input document.
    #[arg(long)]
    input: PathBuf,
    /// Output format; `markdown` renders human-readable theorem reports and
    /// `csv` emits sequences for external plotting.
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a configuration document.
    Validate(CommonArgs),
    /// Zariski decomposition of an effective divisor.
    Decompose(CommonArgs),
    /// Volume Vol(D) = -(Delta^2).
    Volume(CommonArgs),
    /// Mixed multiplicity matrix and polynomial of a divisor tuple.
    Mixed(CommonArgs),
    /// Minkowski inequality verdicts and equality classification for a pair.
    Minkowski(CommonArgs),
    /// Rees theorem check for a dominated pair.
    Rees {
        #[command(flatten)]
        common: CommonArgs,
        /// Certificate depth N.
        #[arg(long, default_value_t = antinef::theorems::DEFAULT_CERTIFICATE_DEPTH)]
        depth: u64,
    },
    /// Gamma candidates (anti-nef coefficients; conjectural identification).
    Gamma(CommonArgs),
    /// Colength of one monomial valuation ideal.
    OracleColength(CommonArgs),
    /// Fitted multiplicity of a filtration spec from lattice counts.
    OracleFit {
        #[command(flatten)]
        common: CommonArgs,
        /// Fit window M (lengths are computed for m = 1..=M).
        #[arg(long, default_value_t = 200)]
        window: u64,
    },
    /// Tau sequence of a filtration spec against a target valuation.
    OracleTau {
        #[command(flatten)]
        common: CommonArgs,
        #[arg(long, default_value_t = 200)]
        window: u64,
    },
    /// Fitted multiplicity of a truncated filtration.
    OracleTruncate {
        #[command(flatten)]
        common: CommonArgs,
        #[arg(long, default_value_t = 200)]
        window: u64,
    },
    /// Build the toric dual graph of primitive monomial valuations.
    ToricBuild(CommonArgs),
    /// Full toric round-trip: exact volume vs oracle-fitted multiplicity.
    BridgeCheck {
        #[command(flatten)]
        common: CommonArgs,
        #[arg(long, default_value_t = 200)]
        window: u64,
    },
}

/// Failures carrying their exit code.
enum Failure {
    /// Exit 1: the input is well-formed but violates a domain contract.
    Domain(String),
    /// Exit 2: I/O, schema, or format errors.
    Schema(String),
}

impl Failure {
    fn domain(e: impl Display) -> Self {
        Self::Domain(e.to_string())
    }

    fn schema(e: impl Display) -> Self {
        Self::Schema(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Schema(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn read_input<T: DeserializeOwned>(path: &PathBuf) -> Result<T, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::schema(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| Failure::schema(format!("{}: {e}", path.display())))
}

/// Writes a line to stdout, treating a closed pipe as a clean stop.
fn write_line(text: &str) -> Result<(), Failure> {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    match writeln!(out, "{text}") {
        Ok(()) => Ok(()),
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => std::process::exit(0),
        Err(e) => Err(Failure::schema(e)),
    }
}

fn emit_json<T: Serialize>(report: &T) -> Result<(), Failure> {
    write_line(&serde_json::to_string_pretty(report).map_err(Failure::schema)?)
}

fn no_csv() -> Failure {
    Failure::schema("csv format is only available for sequence commands (oracle-fit, oracle-tau, oracle-truncate)")
}

#[derive(Deserialize)]
struct DivisorInput {
    config: ConfigDoc,
    divisor: Vec<String>,
}

#[derive(Deserialize)]
struct DivisorsInput {
    config: ConfigDoc,
    divisors: Vec<Vec<String>>,
    #[serde(default)]
    weighted: bool,
}

#[derive(Deserialize)]
struct PairInput {
    config: ConfigDoc,
    d1: Vec<String>,
    d2: Vec<String>,
}

#[derive(Deserialize)]
struct ColengthInput {
    a: u64,
    b: u64,
    n: u64,
}

#[derive(Deserialize)]
struct TauInput {
    terms: Vec<TermDoc>,
    target: ValuationDoc,
}

#[derive(Deserialize)]
struct ValuationDoc {
    a: u64,
    b: u64,
}

#[derive(Deserialize)]
struct TruncateInput {
    terms: Vec<TermDoc>,
    a: u64,
}

#[derive(Deserialize)]
struct TargetsInput {
    targets: Vec<ValuationDoc>,
}

#[derive(Deserialize)]
struct BridgeInput {
    targets: Vec<ValuationDoc>,
    coefficients: Vec<u64>,
}

fn build_config(doc: &ConfigDoc) -> Result<antinef::ExceptionalConfig, Failure> {
    doc.build().map_err(Failure::domain)
}

fn parse_divisor(coeffs: &[String]) -> Result<QDivisor, Failure> {
    divisor_from_strings(coeffs).map_err(Failure::schema)
}

fn build_spec(terms: &[TermDoc]) -> Result<OracleFiltrationSpec, Failure> {
    SpecDoc { terms: terms.to_vec() }.build().map_err(Failure::domain)
}

fn build_valuation(doc: &ValuationDoc) -> Result<MonomialValuation, Failure> {
    MonomialValuation::new(doc.a, doc.b).map_err(Failure::domain)
}

fn emit_sequence_csv(
    header: &str,
    rows: impl Iterator<Item = (u64, u64)>,
) -> Result<(), Failure> {
    write_line(header)?;
    for (m, value) in rows {
        write_line(&format!("{m},{value}"))?;
    }
    Ok(())
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Validate(args) => {
            let doc: ConfigDoc = read_input(&args.input)?;
            match doc.build() {
                Ok(_) => {
                    let report = ValidateReport { valid: true, violations: vec![] };
                    match args.format {
                        Format::Json => emit_json(&report),
                        Format::Markdown => write_line(report.to_markdown().trim_end()),
                        Format::Csv => Err(no_csv()),
                    }
                }
                Err(e) => {
                    let report = ValidateReport {
                        valid: false,
                        violations: e.violations.iter().map(|v| v.to_string()).collect(),
                    };
                    match args.format {
                        Format::Json => emit_json(&report)?,
                        Format::Markdown => write_line(report.to_markdown().trim_end())?,
                        Format::Csv => return Err(no_csv()),
                    }
                    Err(Failure::Domain(e.to_string()))
                }
            }
        }

        Command::Decompose(args) => {
            let input: DivisorInput = read_input(&args.input)?;
            let config = build_config(&input.config)?;
            let d = parse_divisor(&input.divisor)?;
            let z = decompose(&config, &d).map_err(Failure::domain)?;
            match args.format {
                Format::Json | Format::Markdown => emit_json(&DecomposeReport::new(&z)),
                Format::Csv => Err(no_csv()),
            }
        }

        Command::Volume(args) => {
            let input: DivisorInput = read_input(&args.input)?;
            let config = build_config(&input.config)?;
            let d = parse_divisor(&input.divisor)?;
            let v = volume(&config, &d).map_err(Failure::domain)?;
            match args.format {
                Format::Json | Format::Markdown => emit_json(&VolumeReport {
                    volume: format_rational(&v),
                }),
                Format::Csv => Err(no_csv()),
            }
        }

        Command::Mixed(args) => {
            let input: DivisorsInput = read_input(&args.input)?;
            let config = build_config(&input.config)?;
            let divisors = input
                .divisors
                .iter()
                .map(|d| parse_divisor(d))
                .collect::<Result<Vec<_>, _>>()?;
            let form = if input.weighted {
                weighted_mixed(&config, &divisors).map_err(Failure::domain)?
            } else {
                mixed_form(&config, &divisors).map_err(Failure::domain)?
            };
            let poly = polynomial_from_form(&form);
            let product = if divisors.len() == 2 {
                let p = product_multiplicity(&config, &divisors[0], &divisors[1])
                    .map_err(Failure::domain)?;
                Some(format_rational(&p))
            } else {
                None
            };
            match args.format {
                Format::Json | Format::Markdown => {
                    emit_json(&MixedReport::new(&form, &poly, product))
                }
                Format::Csv => Err(no_csv()),
            }
        }

        Command::Minkowski(args) => {
            let input: PairInput = read_input(&args.input)?;
            let config = build_config(&input.config)?;
            let d1 = parse_divisor(&input.d1)?;
            let d2 = parse_divisor(&input.d2)?;
            let report = minkowski_report(&config, &d1, &d2).map_err(Failure::domain)?;
            let doc = MinkowskiReportDoc::new(&report);
            match args.format {
                Format::Json => emit_json(&doc),
                Format::Markdown => write_line(doc.to_markdown().trim_end()),
                Format::Csv => Err(no_csv()),
            }
        }

        Command::Rees { common, depth } => {
            let input: PairInput = read_input(&common.input)?;
            let config = build_config(&input.config)?;
            let d1 = parse_divisor(&input.d1)?;
            let d2 = parse_divisor(&input.d2)?;
            let report = rees_check(&config, &d1, &d2, depth).map_err(Failure::domain)?;
            let doc = ReesReportDoc::new(&report);
            match common.format {
                Format::Json => emit_json(&doc),
                Format::Markdown => write_line(doc.to_markdown().trim_end()),
                Format::Csv => Err(no_csv()),
            }
        }

        Command::Gamma(args) => {
            let input: DivisorInput = read_input(&args.input)?;
            let config = build_config(&input.config)?;
            let d = parse_divisor(&input.divisor)?;
            let g = gamma(&config, &d).map_err(Failure::domain)?;
            match args.format {
                Format::Json | Format::Markdown => emit_json(&GammaReport {
                    gamma: g.values.iter().map(format_rational).collect(),
                    status: "conjectural",
                }),
                Format::Csv => Err(no_csv()),
            }
        }

        Command::OracleColength(args) => {
            let input: ColengthInput = read_input(&args.input)?;
            let v = MonomialValuation::new(input.a, input.b).map_err(Failure::domain)?;
            let colength = val_ideal(&v, input.n)
                .colength()
                .map_err(Failure::domain)?;
            match args.format {
                Format::Json | Format::Markdown => emit_json(&ColengthReport { colength }),
                Format::Csv => Err(no_csv()),
            }
        }

        Command::OracleFit { common, window } => {
            let doc: SpecDoc = read_input(&common.input)?;
            let spec = doc.build().map_err(Failure::domain)?;
            let lengths = (1..=window)
                .map(|m| filtration_ideal(&spec, m).colength())
                .collect::<Result<Vec<_>, _>>()
                .map_err(Failure::domain)?;
            match common.format {
                Format::Csv => {
                    emit_sequence_csv("m,length", (1..).zip(lengths.iter().copied()))
                }
                Format::Json | Format::Markdown => {
                    let fit = limit_fit(&lengths).map_err(Failure::domain)?;
                    emit_json(&FitReport {
                        estimate: fit.estimate,
                        residual: fit.residual,
                        window,
                    })
                }
            }
        }

        Command::OracleTau { common, window } => {
            let input: TauInput = read_input(&common.input)?;
            let spec = build_spec(&input.terms)?;
            let target = build_valuation(&input.target)?;
            let tau = tau_sequence(&spec, &target, window);
            match common.format {
                Format::Csv => {
                    emit_sequence_csv("m,tau", (1..).zip(tau.iter().copied()))
                }
                Format::Json | Format::Markdown => emit_json(&TauReport { tau }),
            }
        }

        Command::OracleTruncate { common, window } => {
            let input: TruncateInput = read_input(&common.input)?;
            if input.a == 0 {
                return Err(Failure::Domain(
                    "truncation level must be positive".to_string(),
                ));
            }
            let spec = build_spec(&input.terms)?;
            let mut trunc = truncate(&spec, input.a);
            let lengths = trunc.colengths(window).map_err(Failure::domain)?;
            match common.format {
                Format::Csv => {
                    emit_sequence_csv("m,length", (1..).zip(lengths.iter().copied()))
                }
                Format::Json | Format::Markdown => {
                    let fit = limit_fit(&lengths).map_err(Failure::domain)?;
                    emit_json(&FitReport {
                        estimate: fit.estimate,
                        residual: fit.residual,
                        window,
                    })
                }
            }
        }

        Command::ToricBuild(args) => {
            let input: TargetsInput = read_input(&args.input)?;
            let targets = input
                .targets
                .iter()
                .map(build_valuation)
                .collect::<Result<Vec<_>, _>>()?;
            let built = toric_config(&targets).map_err(Failure::domain)?;
            match args.format {
                Format::Json | Format::Markdown => emit_json(&ToricBuildReport {
                    config: ConfigDoc::from_config(&built.config),
                    prime_index: built.prime_index,
                    rays: built.rays,
                }),
                Format::Csv => Err(no_csv()),
            }
        }

        Command::BridgeCheck { common, window } => {
            let input: BridgeInput = read_input(&common.input)?;
            if input.targets.len() != input.coefficients.len() {
                return Err(Failure::Schema(format!(
                    "{} targets with {} coefficients",
                    input.targets.len(),
                    input.coefficients.len()
                )));
            }
            let targets = input
                .targets
                .iter()
                .map(build_valuation)
                .collect::<Result<Vec<_>, _>>()?;
            let built = toric_config(&targets).map_err(Failure::domain)?;
            let s = built.config.curve_count();

            let mut d = QDivisor::zero(s);
            let mut terms = Vec::new();
            for ((target, &c), &p) in targets
                .iter()
                .zip(&input.coefficients)
                .zip(&built.prime_index)
            {
                if c > 0 {
                    d = d.add(&QDivisor::curve(p, s).scale(&int(c as i64)));
                    terms.push((*target, c));
                }
            }
            let exact = volume(&built.config, &d).map_err(Failure::domain)?;
            let spec = OracleFiltrationSpec::new(terms).map_err(Failure::domain)?;
            let lengths = (1..=window)
                .map(|m| filtration_ideal(&spec, m).colength())
                .collect::<Result<Vec<_>, _>>()
                .map_err(Failure::domain)?;
            let fit = limit_fit(&lengths).map_err(Failure::domain)?;

            let volume_value = exact.to_f64().unwrap_or(f64::NAN);
            let discrepancy = if volume_value == 0.0 {
                fit.estimate.abs()
            } else {
                (fit.estimate - volume_value).abs() / volume_value
            };
            let report = BridgeCheckReport {
                volume: format_rational(&exact),
                volume_value,
                oracle_estimate: fit.estimate,
                relative_discrepancy: discrepancy,
                window,
            };
            match common.format {
                Format::Json => emit_json(&report),
                Format::Markdown => write_line(report.to_markdown().trim_end()),
                Format::Csv => Err(no_csv()),
            }
        }
    }
}

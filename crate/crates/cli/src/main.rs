//! Command-line driver: derives reduction tables, reduces operator
//! expressions, applies the linearization operator, and runs the theorem
//! verifications.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or parse error.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use nilops_core::linearize::delta;
use nilops_core::magma::{Generator, Polynomial};
use nilops_core::onevar::Variety;
use nilops_core::opalgebra::{parse_op_poly, TableJson, VarietyEngine};
use nilops_core::parse::parse_polynomial;
use nilops_core::theorems::{
    verify_theorem1, verify_theorem2, verify_theorem3, CheckStatus, VerificationReport,
};

mod render;

#[derive(Parser)]
#[command(
    name = "nilops",
    version,
    about = "Derives and verifies multiplication-operator identities of commutative right-nilalgebras of index 4"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format; NILOPS_FORMAT sets the default.
    #[arg(long, global = true, env = "NILOPS_FORMAT")]
    format: Option<Format>,

    /// Write output to this file instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum VarietyArg {
    /// x^4 = 0
    Nil4,
    /// x^4 = 0 and x((x^2)(x^2)) = 0
    Nil4B5,
    /// x^4 = 0 and x(x((x^2)(x^2))) = 0
    Nil4B6,
}

impl From<VarietyArg> for Variety {
    fn from(v: VarietyArg) -> Variety {
        match v {
            VarietyArg::Nil4 => Variety::Nil4,
            VarietyArg::Nil4B5 => Variety::Nil4B5,
            VarietyArg::Nil4B6 => Variety::Nil4B6,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Derive the per-degree reduction tables of a variety.
    Derive {
        #[arg(long, value_enum, default_value = "nil4")]
        variety: VarietyArg,
        /// Highest x-degree to derive (defaults to the variety cap: 12, 8 or 10).
        #[arg(long)]
        max_degree: Option<u32>,
        /// Generate linearization instances over every monomial instead of
        /// the basis representatives (slower cross-check).
        #[arg(long)]
        exhaustive: bool,
        /// Emit the one-variable normal-form tables instead of the operator
        /// tables.
        #[arg(long)]
        elements: bool,
    },
    /// Reduce an operator expression to its canonical form.
    Reduce {
        /// Words over L and U with caret powers, e.g. "U^2L" or
        /// "27L^8U + 170L^10".
        expression: String,
        #[arg(long, value_enum, default_value = "nil4")]
        variety: VarietyArg,
        #[arg(long)]
        exhaustive: bool,
    },
    /// Apply the linearization operator to a polynomial.
    Linearize {
        /// Target polynomial, e.g. "x^2(x(y))".
        target: String,
        /// Replacement arguments, one per occurrence (repeatable).
        #[arg(long = "arg", value_name = "EXPR", required = true)]
        args: Vec<String>,
    },
    /// Verify a nilpotency bound: 1, 2, 3 or all.
    Verify {
        #[arg(value_parser = ["1", "2", "3", "all"])]
        theorem: String,
    },
    /// Quotient dimensions of the operator algebra per degree.
    Dims {
        #[arg(long, value_enum, default_value = "nil4")]
        variety: VarietyArg,
        #[arg(long)]
        max_degree: Option<u32>,
        #[arg(long)]
        exhaustive: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format.unwrap_or(Format::Text);
    let mut sink = match Sink::new(cli.out.as_deref()) {
        Ok(s) => s,
        Err(e) => return usage_error(&format!("cannot open output file: {e}")),
    };
    match run(cli.command, format, &mut sink) {
        Ok(code) => code,
        Err(message) => usage_error(&message),
    }
}

fn usage_error(message: &str) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(2)
}

struct Sink {
    out: Box<dyn Write>,
}

impl Sink {
    fn new(path: Option<&std::path::Path>) -> std::io::Result<Self> {
        let out: Box<dyn Write> = match path {
            Some(p) => Box::new(std::fs::File::create(p)?),
            None => Box::new(std::io::stdout()),
        };
        Ok(Sink { out })
    }

    fn emit(&mut self, text: &str) {
        writeln!(self.out, "{text}").expect("write output");
    }
}

fn run(command: Command, format: Format, sink: &mut Sink) -> Result<ExitCode, String> {
    match command {
        Command::Derive {
            variety,
            max_degree,
            exhaustive,
            elements,
        } => {
            let variety = Variety::from(variety);
            let cap = variety.operator_degree_cap();
            let max_degree = max_degree.unwrap_or(cap);
            if max_degree == 0 || max_degree > cap {
                return Err(format!(
                    "max degree for {variety} must be between 1 and {cap}"
                ));
            }
            let engine = build_engine(variety, max_degree, exhaustive)?;
            if elements {
                let entries = engine
                    .onevar()
                    .export(max_degree.min(engine.onevar().max_degree()))
                    .map_err(|e| e.to_string())?;
                match format {
                    Format::Json => sink.emit(&pretty_json(&entries)),
                    Format::Text => sink.emit(&render::elements_text(&entries)),
                }
            } else {
                let tables: Vec<TableJson> = engine.tables().iter().map(TableJson::from).collect();
                match format {
                    Format::Json => sink.emit(&pretty_json(&tables)),
                    Format::Text => sink.emit(&render::tables_text(&tables)),
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Reduce {
            expression,
            variety,
            exhaustive,
        } => {
            let variety = Variety::from(variety);
            let input = parse_op_poly(&expression).map_err(|e| e.to_string())?;
            let needed = input
                .words()
                .map(|w| w.x_degree())
                .max()
                .unwrap_or(0)
                .min(variety.operator_degree_cap());
            let engine = build_engine(variety, needed, exhaustive)?;
            let reduced = engine.reduce(&input).map_err(|e| e.to_string())?;
            match format {
                Format::Json => sink.emit(&pretty_json(&serde_json::json!({
                    "variety": variety,
                    "input": expression,
                    "result": reduced.to_string(),
                }))),
                Format::Text => sink.emit(&reduced.to_string()),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Linearize { target, args } => {
            let target = parse_polynomial(&target).map_err(|e| e.to_string())?;
            let args: Vec<Polynomial> = args
                .iter()
                .map(|s| parse_polynomial(s).map_err(|e| e.to_string()))
                .collect::<Result<_, _>>()?;
            let result = delta(&args, &target, Generator::X);
            match format {
                Format::Json => sink.emit(&pretty_json(&serde_json::json!({
                    "result": result.to_string(),
                }))),
                Format::Text => sink.emit(&result.to_string()),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { theorem } => {
            let reports: Vec<VerificationReport> = match theorem.as_str() {
                "1" => vec![verify_theorem1().map_err(|e| e.to_string())?],
                "2" => vec![verify_theorem2().map_err(|e| e.to_string())?],
                "3" => vec![verify_theorem3().map_err(|e| e.to_string())?],
                _ => vec![
                    verify_theorem1().map_err(|e| e.to_string())?,
                    verify_theorem2().map_err(|e| e.to_string())?,
                    verify_theorem3().map_err(|e| e.to_string())?,
                ],
            };
            match format {
                Format::Json => {
                    if reports.len() == 1 {
                        sink.emit(&pretty_json(&reports[0]));
                    } else {
                        sink.emit(&pretty_json(&reports));
                    }
                }
                Format::Text => {
                    for report in &reports {
                        sink.emit(&render::report_text(report));
                    }
                }
            }
            let all_passed = reports.iter().all(VerificationReport::all_passed);
            Ok(if all_passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Dims {
            variety,
            max_degree,
            exhaustive,
        } => {
            let variety = Variety::from(variety);
            let cap = variety.operator_degree_cap();
            let max_degree = max_degree.unwrap_or(cap);
            if max_degree == 0 || max_degree > cap {
                return Err(format!(
                    "max degree for {variety} must be between 1 and {cap}"
                ));
            }
            let engine = build_engine(variety, max_degree, exhaustive)?;
            let dims = engine
                .quotient_dimensions(max_degree)
                .map_err(|e| e.to_string())?;
            match format {
                Format::Json => sink.emit(&pretty_json(&serde_json::json!({
                    "variety": variety,
                    "dims": dims,
                }))),
                Format::Text => {
                    let lines: Vec<String> = dims
                        .iter()
                        .enumerate()
                        .map(|(i, d)| format!("degree {:>2}: {d}", i + 1))
                        .collect();
                    sink.emit(&lines.join("\n"));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn build_engine(
    variety: Variety,
    max_degree: u32,
    exhaustive: bool,
) -> Result<VarietyEngine, String> {
    let mut engine = VarietyEngine::with_mode(variety, exhaustive).map_err(|e| e.to_string())?;
    engine.build_to(max_degree).map_err(|e| e.to_string())?;
    Ok(engine)
}

fn pretty_json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("JSON serialization")
}

// Referenced from render.rs for the status column.
pub(crate) fn status_label(status: CheckStatus) -> &'static str {
    match status {
        CheckStatus::Pass => "PASS",
        CheckStatus::Fail => "FAIL",
    }
}

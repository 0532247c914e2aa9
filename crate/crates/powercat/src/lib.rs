//! Command-line front end for `powercat-core`: counting, succession-rule
//! levels, growth steps, bijections, series, and the verification suites
//! that cross-check all of them.
//!
//! [`run`] is the whole program as a function from arguments to an
//! [`Outcome`], so the binary is a thin shell around it and tests can drive
//! it without spawning processes.

pub mod classes;
pub mod conjecture;
pub mod export;
pub mod report;
pub mod suites;

use clap::{Parser, Subcommand, ValueEnum};
use powercat_core::bijections::apply_map;
use powercat_core::gentree::level_counts;
use powercat_core::growth::Family;
use powercat_core::patterns::{count_class, EnumerationLimits};
use powercat_core::series::{
    callan_triangle, e3_sequence, functional_equation_residual, kernel_a11, reference_sequence, REFERENCE_NAMES,
};
use powercat_core::BuiltinRule;
use serde_json::{json, Value};

use crate::export::number;
use crate::report::VerificationReport;

/// Problems with the request itself; reported with exit status 2.
#[derive(Debug, thiserror::Error)]
pub enum UsageError {
    #[error("unknown family {0:?}: {1}")]
    Family(String, String),
    #[error("invalid input: {0}")]
    Input(String),
    #[error("unknown rule {0:?} (expected one of {1})")]
    Rule(String, String),
    #[error("{0}")]
    Unsupported(String),
}

/// Exit status and captured output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }

    fn usage(msg: impl std::fmt::Display) -> Self {
        Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {}\n", msg),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(name = "powercat", version, about = "Pattern-avoiding inversion sequences and the powered Catalan numbers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Count the objects of a class of size n by exhaustive enumeration
    Count {
        /// Relation triple (geq,dash,geq), avoid:WORDS, perm:PATTERNS,
        /// classical:PATTERNS, a path kind, trees, or a growth family
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Level sizes of a succession rule's generating tree
    Levels {
        #[arg(long)]
        rule: String,
        #[arg(long)]
        depth: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Rows 0..=n of the powered Catalan triangle
    Triangle {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// One growth step: the children of an object with their labels
    Grow {
        #[arg(long)]
        family: String,
        #[arg(long)]
        input: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Apply a named bijection
    Map {
        #[arg(long)]
        name: String,
        #[arg(long)]
        input: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run a verification suite
    Verify {
        #[arg(value_parser = suites::SUITES)]
        suite: String,
        /// Desk-scale sizes (the default)
        #[arg(long)]
        n_small: bool,
        /// Worker threads; 0 picks one per core
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Include per-check wall-clock times (output is then not reproducible)
        #[arg(long)]
        timings: bool,
        /// Suppress progress lines on stderr
        #[arg(long, short)]
        quiet: bool,
    },
    /// RTL-minima distribution of AV(23-1-4) against the triangle
    Conjecture {
        #[arg(long, default_value_t = conjecture::EVIDENCE_RANGE)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        timings: bool,
        #[arg(long, short)]
        quiet: bool,
    },
    /// Named sequences and series computations
    Series {
        #[arg(value_parser = SERIES_NAMES)]
        name: String,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
}

const SERIES_NAMES: [&str; 9] = [
    "catalan",
    "a108307",
    "baxter",
    "semibaxter",
    "pcat",
    "e3",
    "triangle",
    "kernel-a11",
    "residual",
];

/// Runs one command line (`args[0]` is the program name).
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            return if code == 0 {
                Outcome::ok(text)
            } else {
                Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    match dispatch(cli.command) {
        Ok(out) => out,
        Err(e) => Outcome::usage(e),
    }
}

fn dispatch(command: Command) -> Result<Outcome, UsageError> {
    match command {
        Command::Count { family, n, format } => {
            let spec = classes::parse_class(&family)?;
            let c = count_class(&spec, n, &EnumerationLimits::default())
                .map_err(|e| UsageError::Unsupported(e.to_string()))?;
            Ok(Outcome::ok(match format {
                Format::Text => format!("{}\n", c),
                Format::Json => export::json_value(json!({"family": family, "n": n, "count": c})),
                Format::Csv => format!("{},{}\n", n, c),
            }))
        }
        Command::Levels { rule, depth, format } => {
            let counts = level_counts(&parse_rule(&rule)?, depth).map_err(|e| UsageError::Unsupported(e.to_string()))?;
            Ok(Outcome::ok(render_sequence(&counts, 1, format)))
        }
        Command::Triangle { n, format } => Ok(Outcome::ok(render_triangle(n, format))),
        Command::Grow { family, input, format } => {
            let fam: Family = family
                .parse()
                .map_err(|e: powercat_core::growth::GrowthError| UsageError::Family(family.clone(), e.to_string()))?;
            let obj = classes::parse_family_object(fam, &input)?;
            let kids = fam.children(&obj).map_err(|e| UsageError::Input(e.to_string()))?;
            Ok(Outcome::ok(match format {
                Format::Text => kids.iter().map(|(c, l)| format!("{}\t{}\n", c, l)).collect(),
                Format::Csv => kids
                    .iter()
                    .map(|(c, l)| format!("{},{}\n", export::csv_field(&c.to_string()), export::csv_field(&l.to_string())))
                    .collect(),
                Format::Json => export::json_value(json!({
                    "family": fam.name(),
                    "input": obj.to_string(),
                    "label": fam.label(&obj).map_err(|e| UsageError::Input(e.to_string()))?.to_string(),
                    "children": kids
                        .iter()
                        .map(|(c, l)| json!({"object": c.to_string(), "label": l.to_string()}))
                        .collect::<Vec<_>>(),
                })),
            }))
        }
        Command::Map { name, input, format } => {
            let out = apply_map(&name, &input).map_err(|e| UsageError::Input(e.to_string()))?;
            Ok(Outcome::ok(match format {
                Format::Text => format!("{}\n", out),
                Format::Csv => format!("{},{}\n", export::csv_field(&input), export::csv_field(&out)),
                Format::Json => export::json_value(json!({"map": name, "input": input, "output": out})),
            }))
        }
        Command::Verify {
            suite,
            n_small: _,
            jobs,
            format,
            timings,
            quiet,
        } => {
            let checks = suites::suite_checks(&suite).expect("clap restricts suite names");
            let r = report::run_suite(&suite, checks, jobs, !quiet);
            Ok(render_report(r, format, timings))
        }
        Command::Conjecture {
            n,
            jobs,
            format,
            timings,
            quiet,
        } => {
            let r = conjecture::conjecture_23_1_4_report(n, jobs, !quiet);
            Ok(render_report(r, format, timings))
        }
        Command::Series { name, n, format } => series(&name, n, format),
    }
}

fn parse_rule(name: &str) -> Result<BuiltinRule, UsageError> {
    name.parse().map_err(|_| {
        let known: Vec<&str> = BuiltinRule::ALL.iter().map(|r| r.canonical_name()).collect();
        UsageError::Rule(name.to_string(), known.join(", "))
    })
}

fn render_sequence<T: std::fmt::Display>(terms: &[T], first: usize, format: Format) -> String {
    let terms: Vec<String> = terms.iter().map(|t| t.to_string()).collect();
    match format {
        Format::Text => format!("{}\n", terms.join(",")),
        Format::Json => export::json_value(Value::Array(terms.iter().map(number).collect())),
        Format::Csv => terms.iter().enumerate().map(|(i, t)| format!("{},{}\n", i + first, t)).collect(),
    }
}

fn render_triangle(n: usize, format: Format) -> String {
    let t = callan_triangle(n);
    match format {
        Format::Text => export::triangle_text(&t),
        Format::Json => export::triangle_json(&t),
        Format::Csv => export::triangle_csv(&t),
    }
}

fn render_report(r: VerificationReport, format: Format, timings: bool) -> Outcome {
    let r = if timings { r } else { r.without_timings() };
    let stdout = match format {
        Format::Text => export::report_text(&r),
        Format::Json => export::report_json(&r),
        Format::Csv => export::report_csv(&r),
    };
    let stderr: String = r
        .failures()
        .map(|c| format!("failed: {}: {}\n", c.name, c.counterexample.as_deref().unwrap_or("")))
        .collect();
    Outcome {
        code: if r.passed() { 0 } else { 1 },
        stdout,
        stderr,
    }
}

fn series(name: &str, n: usize, format: Option<Format>) -> Result<Outcome, UsageError> {
    let unsupported = |e: powercat_core::series::SeriesError| UsageError::Unsupported(e.to_string());
    let format = format.unwrap_or(if name == "triangle" { Format::Csv } else { Format::Text });
    Ok(match name {
        "triangle" => Outcome::ok(render_triangle(n, format)),
        // indexed from 0, where the other sequences start at size 1
        "e3" => Outcome::ok(render_sequence(&e3_sequence(n), 0, format)),
        "kernel-a11" => Outcome::ok(render_sequence(&kernel_a11(n).map_err(unsupported)?, 1, format)),
        "residual" => {
            let r = functional_equation_residual(n).map_err(unsupported)?;
            let monomials: Vec<String> = r.terms().map(|(x, y, z, c)| format!("{}*x^{}*y^{}*z^{}", c, x, y, z)).collect();
            let stdout = match format {
                Format::Text if monomials.is_empty() => "0\n".to_string(),
                Format::Text => format!("{}\n", monomials.join(" + ")),
                Format::Csv => r.terms().map(|(x, y, z, c)| format!("{},{},{},{}\n", x, y, z, c)).collect(),
                Format::Json => export::json_value(json!({
                    "order": n,
                    "zero": r.is_zero(),
                    "terms": r
                        .terms()
                        .map(|(x, y, z, c)| json!({"x": x, "y": y, "z": z, "coefficient": number(c)}))
                        .collect::<Vec<_>>(),
                })),
            };
            Outcome {
                code: if r.is_zero() { 0 } else { 1 },
                stdout,
                stderr: String::new(),
            }
        }
        other => {
            debug_assert!(REFERENCE_NAMES.contains(&other));
            Outcome::ok(render_sequence(&reference_sequence(other, n).map_err(unsupported)?, 1, format))
        }
    })
}

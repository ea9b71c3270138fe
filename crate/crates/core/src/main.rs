use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use steenrod::ring::parse_presentation;
use steenrod::steenrod::{basis_in_degree, in_left_ideal_sq1, in_two_sided_ideal_sq1, parse_adem, to_admissible};
use steenrod::suite::{self, SuiteConfig, SuiteError, BIELLIPTIC_RING_FILE};
use steenrod::{act, check_action_consistency, AdemElement, RingPresentation, VerificationReport};

#[derive(Parser)]
#[command(name = "steenrod", version, about = "Mod-2 Steenrod algebra calculator and verification suite")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the admissible form of a Steenrod expression.
    Normalize { expr: String },
    /// Apply a Steenrod expression to a ring element.
    Act {
        #[arg(long)]
        ring: PathBuf,
        expr: String,
        elem: String,
    },
    /// Decide membership in the ideal generated by Sq1.
    Ideal {
        #[arg(long, value_enum, default_value = "left")]
        which: Which,
        expr: String,
    },
    /// List a basis in one degree: admissible words, or ring monomials with --ring.
    Basis {
        #[arg(long)]
        ring: Option<PathBuf>,
        degree: u32,
    },
    /// Print the bundled bielliptic model presentation.
    Model,
    /// Run named checks.
    Verify {
        #[arg(value_enum)]
        selector: Selector,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Presentation file for the `consistency` selector.
        #[arg(long)]
        ring: Option<PathBuf>,
        #[arg(long, default_value_t = 5)]
        j_max: u32,
        #[arg(long, default_value_t = 40)]
        degree_cap: u32,
        #[arg(long, default_value_t = suite::DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        cases: usize,
        #[arg(long)]
        s: Option<u32>,
        #[arg(long)]
        j: Option<u32>,
        #[arg(long)]
        c: Option<u32>,
        #[arg(long)]
        l: Option<u32>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    Left,
    TwoSided,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    JsonLines,
}

#[derive(Clone, Copy, ValueEnum)]
enum Selector {
    #[value(name = "lemma-3-1")]
    OddSquares,
    #[value(name = "lemma-4-1")]
    WitnessMonomial,
    #[value(name = "lemma-5-2")]
    CoverDimensions,
    #[value(name = "prop-5-3")]
    SigmaSquare,
    #[value(name = "thm-4-3")]
    PointClass,
    #[value(name = "thm-5-4")]
    Sq3Sigma,
    #[value(name = "remark-4-4")]
    Factorization,
    #[value(name = "controls")]
    Controls,
    /// Power rules and sq tables of `--ring` agree with the action.
    #[value(name = "consistency")]
    Consistency,
    All,
}

/// Usage or input error: exit code 2.
struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn load_ring(path: &Path) -> Result<RingPresentation, UsageError> {
    let text = fs::read_to_string(path).map_err(|e| UsageError(format!("{}: {e}", path.display())))?;
    parse_presentation(&text).map_err(|e| UsageError(format!("{}: {e}", path.display())))
}

fn parse_expr(text: &str) -> Result<AdemElement, UsageError> {
    parse_adem(text).map_err(|e| UsageError(format!("expression: {e}")))
}

fn run(command: Command) -> Result<ExitCode, UsageError> {
    match command {
        Command::Normalize { expr } => {
            println!("{}", to_admissible(&parse_expr(&expr)?));
        }
        Command::Act { ring, expr, elem } => {
            let ring = load_ring(&ring)?;
            let e = parse_expr(&expr)?;
            let u = ring.parse_element(&elem).map_err(|e| UsageError(format!("element: {e}")))?;
            println!("{}", act(&e, &u)?);
        }
        Command::Ideal { which, expr } => {
            let e = to_admissible(&parse_expr(&expr)?);
            let member = match which {
                Which::Left => in_left_ideal_sq1(&e),
                Which::TwoSided => in_two_sided_ideal_sq1(&e)?,
            };
            println!("{}", if member { "yes" } else { "no" });
        }
        Command::Basis { ring: None, degree } => {
            for w in basis_in_degree(degree) {
                println!("{w}");
            }
        }
        Command::Basis { ring: Some(path), degree } => {
            let ring = load_ring(&path)?;
            for m in ring.basis_in_degree(degree)? {
                println!("{}", ring.format_monomial(&m));
            }
        }
        Command::Model => print!("{BIELLIPTIC_RING_FILE}"),
        Command::Verify { selector, format, ring, j_max, degree_cap, seed, cases, s, j, c, l } => {
            let config = SuiteConfig { j_max, degree_cap, seed, cases, ..SuiteConfig::default() };
            let report = match (selector, ring) {
                (Selector::Consistency, Some(path)) => {
                    let ring = load_ring(&path)?;
                    let mut report = VerificationReport::new();
                    for e in check_action_consistency(&ring) {
                        report.push(e);
                    }
                    report
                }
                (Selector::Consistency, None) => return Err(UsageError("consistency needs --ring PATH".into())),
                (selector, _) => verify(selector, &config, s, j, c, l)?,
            };
            match format {
                Format::Text => print!("{}", report.to_table()),
                Format::JsonLines => print!("{}", report.to_json_lines()),
            }
            return Ok(if report.passed() { ExitCode::SUCCESS } else { ExitCode::from(1) });
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn verify(
    selector: Selector,
    config: &SuiteConfig,
    s: Option<u32>,
    j: Option<u32>,
    c: Option<u32>,
    l: Option<u32>,
) -> Result<VerificationReport, SuiteError> {
    let mut report = VerificationReport::new();
    match selector {
        Selector::OddSquares => report = suite::verify_lemma_3_1(config.j_max)?,
        Selector::WitnessMonomial => match (s, j) {
            (Some(s), j) => report = suite::verify_lemma_4_1(s, j.unwrap_or(s))?,
            (None, Some(j)) => report = suite::verify_lemma_4_1(j, j)?,
            (None, None) => {
                for s in 1..=config.product_rank_max {
                    report.extend(suite::verify_lemma_4_1(s, s)?);
                }
            }
        },
        Selector::CoverDimensions => report = suite::verify_lemma_5_2(),
        Selector::SigmaSquare => report = suite::verify_prop_5_3(),
        Selector::PointClass => match (c, l) {
            (Some(c), Some(l)) => report = suite::verify_theorem_4_3(c, l)?,
            (None, None) => {
                for &(c, l) in &config.point_class_params {
                    report.extend(suite::verify_theorem_4_3(c, l)?);
                }
            }
            _ => return Err(SuiteError::Parameter("thm-4-3 takes both --c and --l, or neither".into())),
        },
        Selector::Sq3Sigma => match l {
            Some(l) => report = suite::verify_theorem_5_4(l)?,
            None => {
                report = suite::verify_theorem_5_4(3)?;
                report.extend(suite::verify_theorem_5_4(4)?);
            }
        },
        Selector::Factorization => report = suite::verify_remark_4_4(s.unwrap_or(3))?,
        Selector::Controls => report = suite::run_controls(),
        Selector::All => report = suite::run_full_suite(config)?,
        Selector::Consistency => unreachable!("handled with its ring"),
    }
    Ok(report)
}

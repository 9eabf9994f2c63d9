//! Exact analysis and construction of fractional factorial designs.

mod input;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use ffdesign::analysis::{is_centered, is_self_conjugate, oa_strength_with_limit, project};
use ffdesign::counting::{coefficients_fast, CoefficientTable};
use ffdesign::design::{DesignSpace, Fraction};
use ffdesign::regular::{check_regular, close_group, generate_from_equations, DefiningEquations};

use input::{load_input, parse_exponent, parse_factors, parse_words};
use output::{design_file, exponent_literal, numerator_display, numerator_vector};

#[derive(Debug)]
pub enum CliError {
    Validation(String),
    Internal(String),
}

impl CliError {
    fn validation(msg: impl Into<String>) -> Self {
        CliError::Validation(msg.into())
    }
}

impl From<ffdesign::Error> for CliError {
    fn from(e: ffdesign::Error) -> Self {
        match e {
            ffdesign::Error::Internal(msg) => CliError::Internal(msg),
            other => CliError::Validation(other.to_string()),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Structured,
}

#[derive(Args)]
struct InputArgs {
    /// Design file (`levels:` header, one point per line, optional xR suffix)
    file: Option<PathBuf>,
    /// Bundled example design: 3-4-2, 6-cube, or l18
    #[arg(long)]
    fixture: Option<String>,
}

impl InputArgs {
    fn load(&self) -> Result<Fraction, CliError> {
        load_input(self.file.as_deref(), self.fixture.as_deref())
    }
}

#[derive(Parser)]
#[command(name = "ffdesign", version, about = "Exact analysis of fractional factorial designs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format
    #[arg(long, global = true, value_enum, default_value = "table")]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Coefficients, strength, self-conjugacy, and regularity of a fraction
    Analyze {
        #[command(flatten)]
        input: InputArgs,
        /// Truncate the order spectrum at this order
        #[arg(long)]
        order_max: Option<usize>,
    },
    /// Dump the nonzero counting-function coefficients
    Coeffs {
        #[command(flatten)]
        input: InputArgs,
        /// Only coefficients of order at most this
        #[arg(long)]
        order_max: Option<usize>,
    },
    /// Solve defining equations and emit the fraction as a design file
    Generate {
        /// Factor levels, comma-separated (e.g. 3,3,3,3)
        #[arg(long, value_delimiter = ',')]
        levels: Vec<usize>,
        /// Defining words ALPHA=E (e.g. "1120=0" or "3,3,3=3")
        #[arg(required = true)]
        words: Vec<String>,
    },
    /// Marginal design on a factor subset, with the factorial verdict
    Project {
        #[command(flatten)]
        input: InputArgs,
        /// One-based factor indices, comma-separated
        #[arg(long)]
        factors: String,
    },
    /// Complement of a single-replicate fraction
    Complement {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Centeredness report for individual terms
    Centered {
        #[command(flatten)]
        input: InputArgs,
        /// Exponent literal (e.g. 0111 or 3,3,3); repeatable
        #[arg(long = "term", required = true)]
        terms: Vec<String>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Analyze { input, order_max } => cmd_analyze(input, *order_max, cli.format),
        Command::Coeffs { input, order_max } => cmd_coeffs(input, *order_max, cli.format),
        Command::Generate { levels, words } => cmd_generate(levels, words, cli.format),
        Command::Project { input, factors } => cmd_project(input, factors, cli.format),
        Command::Complement { input } => cmd_complement(input, cli.format),
        Command::Centered { input, terms } => cmd_centered(input, terms, cli.format),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Validation(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn emit<T: Serialize>(doc: &T) -> Result<(), CliError> {
    let text = serde_json::to_string_pretty(doc)
        .map_err(|e| CliError::Internal(format!("serialization failed: {e}")))?;
    println!("{text}");
    Ok(())
}

// ------------------------------------------------------------------- analyze

#[derive(Serialize)]
struct CoefficientDoc {
    term: String,
    order: usize,
    /// Numerator over the basis 1, w, ..., w^{s-1}; the value is
    /// numerator / denominator.
    numerator: Vec<String>,
}

#[derive(Serialize)]
struct RegularityDoc {
    regular: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    l: Option<usize>,
    /// Confounded terms with the exponent of the defining root e(alpha).
    #[serde(skip_serializing_if = "Option::is_none")]
    confounded: Option<Vec<(String, usize)>>,
}

#[derive(Serialize)]
struct AnalyzeDoc {
    levels: Vec<usize>,
    points: usize,
    runs: u64,
    denominator: u64,
    b0: Vec<String>,
    strength: usize,
    /// order -> number of nonzero coefficients of that order
    spectrum: Vec<(usize, usize)>,
    self_conjugate: bool,
    regularity: RegularityDoc,
}

fn analyze_doc(
    fraction: &Fraction,
    table: &CoefficientTable,
    order_max: Option<usize>,
) -> Result<AnalyzeDoc, CliError> {
    let space = fraction.space();
    let s = space.root_order();
    let strength = oa_strength_with_limit(table, order_max)?;
    let regularity = if fraction.is_single_replicate() {
        let report = check_regular(table)?;
        RegularityDoc {
            regular: report.regular,
            l: report.regular.then_some(report.l),
            confounded: report.subgroup.map(|words| {
                words
                    .iter()
                    .map(|(alpha, e)| (exponent_literal(alpha, space), *e))
                    .collect()
            }),
        }
    } else {
        RegularityDoc {
            regular: false,
            l: None,
            confounded: None,
        }
    };
    Ok(AnalyzeDoc {
        levels: space.levels().to_vec(),
        points: space.size(),
        runs: fraction.total(),
        denominator: table.denom(),
        b0: numerator_vector(&table.numerators()[0], s),
        strength: strength.strength,
        spectrum: strength.spectrum.into_iter().collect(),
        self_conjugate: is_self_conjugate(table),
        regularity,
    })
}

fn cmd_analyze(
    input: &InputArgs,
    order_max: Option<usize>,
    format: Format,
) -> Result<(), CliError> {
    let fraction = input.load()?;
    let table = coefficients_fast(&fraction);
    let doc = analyze_doc(&fraction, &table, order_max)?;
    if format == Format::Structured {
        return emit(&doc);
    }
    let s = fraction.space().root_order();
    let levels: Vec<String> = doc.levels.iter().map(|n| n.to_string()).collect();
    println!("levels: {}", levels.join(" "));
    println!("points: {}", doc.points);
    println!("runs: {}", doc.runs);
    println!(
        "b0: {}/{}",
        numerator_display(&table.numerators()[0], s),
        doc.denominator
    );
    println!("strength: {}", doc.strength);
    let spectrum: Vec<String> = doc
        .spectrum
        .iter()
        .map(|(o, c)| format!("{o}:{c}"))
        .collect();
    println!("spectrum: {}", spectrum.join(" "));
    println!("self-conjugate: {}", yes_no(doc.self_conjugate));
    println!("regular: {}", yes_no(doc.regularity.regular));
    if let (Some(l), Some(confounded)) = (doc.regularity.l, &doc.regularity.confounded) {
        println!("l: {l}");
        println!("confounded terms:");
        for (term, e) in confounded {
            println!("  {term} e={e}");
        }
    }
    Ok(())
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

// -------------------------------------------------------------------- coeffs

#[derive(Serialize)]
struct CoeffsDoc {
    levels: Vec<usize>,
    denominator: u64,
    coefficients: Vec<CoefficientDoc>,
}

fn cmd_coeffs(
    input: &InputArgs,
    order_max: Option<usize>,
    format: Format,
) -> Result<(), CliError> {
    let fraction = input.load()?;
    let space = fraction.space();
    let s = space.root_order();
    let table = coefficients_fast(&fraction);
    let mut coefficients = Vec::new();
    for rank in table.support() {
        let alpha = space.unrank(rank)?;
        if order_max.is_some_and(|k| alpha.order() > k) {
            continue;
        }
        coefficients.push(CoefficientDoc {
            term: exponent_literal(&alpha, space),
            order: alpha.order(),
            numerator: numerator_vector(&table.numerators()[rank], s),
        });
    }
    if format == Format::Structured {
        return emit(&CoeffsDoc {
            levels: space.levels().to_vec(),
            denominator: table.denom(),
            coefficients,
        });
    }
    println!("denominator: {}", table.denom());
    for c in &coefficients {
        println!("{} [{}]", c.term, c.numerator.join(" "));
    }
    Ok(())
}

// ------------------------------------------------------------------ generate

#[derive(Serialize)]
struct GenerateDoc {
    levels: Vec<usize>,
    l: usize,
    runs: u64,
    rows: Vec<Vec<usize>>,
}

fn cmd_generate(levels: &[usize], words: &[String], format: Format) -> Result<(), CliError> {
    let space = DesignSpace::new(levels.to_vec())?;
    let words = parse_words(words, &space)?;
    let eqs = DefiningEquations::new(space, words)?;
    let l = close_group(&eqs)?.words().len();
    let fraction = generate_from_equations(&eqs)?;
    if format == Format::Structured {
        return emit(&GenerateDoc {
            levels: levels.to_vec(),
            l,
            runs: fraction.total(),
            rows: fraction
                .support()
                .map(|(p, _)| p.entries().to_vec())
                .collect(),
        });
    }
    println!("# l = {l}");
    println!("# runs = {}", fraction.total());
    print!("{}", design_file(&fraction));
    Ok(())
}

// ------------------------------------------------------------------- project

#[derive(Serialize)]
struct ProjectDoc {
    levels: Vec<usize>,
    factors: Vec<usize>,
    runs: u64,
    factorial: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    multiplicity: Option<u64>,
    rows: Vec<(Vec<usize>, u64)>,
}

fn cmd_project(input: &InputArgs, factors: &str, format: Format) -> Result<(), CliError> {
    let fraction = input.load()?;
    let factors = parse_factors(factors, fraction.space())?;
    let projected = project(&fraction, &factors)?;
    let sub_size = projected.space().size() as u64;
    // factorial iff the marginal replicates a full design s times
    let multiplicity = projected.total() / sub_size;
    let factorial = multiplicity > 0
        && projected
            .counts()
            .iter()
            .all(|&c| c == multiplicity);
    if format == Format::Structured {
        return emit(&ProjectDoc {
            levels: projected.space().levels().to_vec(),
            factors: factors.iter().map(|j| j + 1).collect(),
            runs: projected.total(),
            factorial,
            multiplicity: factorial.then_some(multiplicity),
            rows: projected
                .support()
                .map(|(p, c)| (p.entries().to_vec(), c))
                .collect(),
        });
    }
    if factorial {
        println!("# factorial: yes, multiplicity {multiplicity}");
    } else {
        println!("# factorial: no");
    }
    print!("{}", design_file(&projected));
    Ok(())
}

// ---------------------------------------------------------------- complement

fn cmd_complement(input: &InputArgs, format: Format) -> Result<(), CliError> {
    let fraction = input.load()?;
    let complement = fraction.complement()?;
    if format == Format::Structured {
        return emit(&GenerateDoc {
            levels: complement.space().levels().to_vec(),
            l: 0,
            runs: complement.total(),
            rows: complement
                .support()
                .map(|(p, _)| p.entries().to_vec())
                .collect(),
        });
    }
    println!("# runs = {}", complement.total());
    print!("{}", design_file(&complement));
    Ok(())
}

// ------------------------------------------------------------------ centered

#[derive(Serialize)]
struct CenteredTermDoc {
    term: String,
    level_group: usize,
    replicates: Vec<u64>,
    centered: bool,
}

fn cmd_centered(input: &InputArgs, terms: &[String], format: Format) -> Result<(), CliError> {
    let fraction = input.load()?;
    let space = fraction.space();
    let mut docs = Vec::new();
    for literal in terms {
        let alpha = parse_exponent(literal, space)?;
        let report = is_centered(&fraction, &alpha)?;
        docs.push(CenteredTermDoc {
            term: exponent_literal(&alpha, space),
            level_group: report.s_prime,
            replicates: report.replicates,
            centered: report.centered,
        });
    }
    if format == Format::Structured {
        return emit(&docs);
    }
    for d in &docs {
        let reps: Vec<String> = d.replicates.iter().map(|r| r.to_string()).collect();
        println!(
            "{} s'={} replicates=[{}] centered={}",
            d.term,
            d.level_group,
            reps.join(" "),
            yes_no(d.centered)
        );
    }
    Ok(())
}

//! `bihom`: batch front end for bihom-core.
//!
//! Exit codes: 0 pass, 1 falsified (axiom violations, failed hypotheses),
//! 2 malformed input.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use bihom_core::derivations::SignConvention;
use report::RunReport;

#[derive(Parser, Debug)]
#[command(name = "bihom", version, about = "Exact computations with finite-dimensional BiHom-superdialgebras")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Stored counterexamples per axiom; counts stay exact.
    #[arg(long, global = true, env = "BIHOM_MAX_VIOLATIONS", default_value_t = bihom_core::axioms::DEFAULT_MAX_VIOLATIONS)]
    pub max_violations: usize,
    /// Zero entries that break evenness when loading instances.
    #[arg(long, global = true)]
    pub project_graded: bool,
    /// Seed for every random choice; printed in every report.
    #[arg(long, global = true, default_value_t = 1)]
    pub seed: u64,
    /// Include wall-clock time in the report (makes it nondeterministic).
    #[arg(long, global = true)]
    pub timing: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Which {
    Superdialgebra,
    Hom,
    Bihom,
    Multiplicative,
    Grading,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Convention {
    Standard,
    PaperDialgebra,
}

impl From<Convention> for SignConvention {
    fn from(c: Convention) -> SignConvention {
        match c {
            Convention::Standard => SignConvention::Standard,
            Convention::PaperDialgebra => SignConvention::PaperDialgebra,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldName {
    #[value(name = "Q", alias = "q")]
    Q,
    #[value(name = "Fp", alias = "fp")]
    Fp,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Decide an axiom system; superalgebra files are checked for BiHom-associativity.
    Check {
        path: PathBuf,
        #[arg(long, value_enum, default_value_t = Which::Bihom)]
        which: Which,
    },
    /// Twist an instance by a pair of endomorphisms or apply one of the derived constructions.
    Twist(TwistArgs),
    /// Solve for a derivation space.
    Derivations(DerivationArgs),
    /// Quotient by the two-sided ideal spanned by the given vectors.
    Quotient {
        path: PathBuf,
        /// Spanning vectors, e.g. "0,1;1,0"; empty for {0}.
        #[arg(long, allow_hyphen_values = true, default_value = "")]
        span: String,
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long)]
        verify: bool,
    },
    /// Classify a subspace, or the ideal it generates.
    Ideal {
        path: PathBuf,
        #[arg(long, allow_hyphen_values = true, default_value = "")]
        span: String,
        /// Report the ideal generated by the vectors instead.
        #[arg(long)]
        generate: bool,
    },
    /// Check that a matrix defines a morphism from the first instance to the second.
    Morphism {
        source: PathBuf,
        target: PathBuf,
        /// Matrix file, dim(target) × dim(source).
        #[arg(long)]
        matrix: PathBuf,
    },
    /// The inner map ad_r for an instance with α = ε.
    Ad {
        path: PathBuf,
        /// Homogeneous element, e.g. "0,1".
        #[arg(long, allow_hyphen_values = true)]
        r: String,
    },
    /// Bracket closure for two solved derivation bases.
    Bracket { path: PathBuf, first: PathBuf, second: PathBuf },
    /// Build a BiHom-superdialgebra from a differential BiHom-superalgebra.
    FromDifferential {
        path: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long)]
        verify: bool,
    },
    /// Read a BiHom-associative superalgebra as a superdialgebra with ⊣ = ⊢.
    FromAssociative {
        path: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long)]
        verify: bool,
    },
    /// Generate a seeded corpus of instances, each gated by the checker.
    Corpus(CorpusArgs),
}

#[derive(Args, Debug)]
pub struct TwistArgs {
    pub path: PathBuf,
    /// Matrix file for α′ (used with --epsilon).
    #[arg(long, requires = "epsilon")]
    pub alpha: Option<PathBuf>,
    /// Matrix file for ε′ (used with --alpha).
    #[arg(long, requires = "alpha")]
    pub epsilon: Option<PathBuf>,
    /// Treat the input as a superdialgebra and attach the maps to it.
    #[arg(long, requires = "alpha")]
    pub from_superdialgebra: bool,
    /// Twist by (αⁿ, εⁿ).
    #[arg(long, conflicts_with_all = ["alpha", "untwist", "hom_to_bihom"])]
    pub power: Option<u32>,
    /// Recover the superdialgebra of a regular instance.
    #[arg(long, conflicts_with_all = ["alpha", "hom_to_bihom"])]
    pub untwist: bool,
    /// Matrix file for e: turns a Hom-superdialgebra (ε = α) into a BiHom one.
    #[arg(long, conflicts_with = "alpha")]
    pub hom_to_bihom: Option<PathBuf>,
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// Re-run the matching checker on the output.
    #[arg(long)]
    pub verify: bool,
}

#[derive(Args, Debug)]
pub struct DerivationArgs {
    pub path: PathBuf,
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    pub m: i64,
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    pub n: i64,
    #[arg(long, default_value_t = 0, value_parser = clap::value_parser!(u8).range(0..=1))]
    pub parity: u8,
    #[arg(long, value_enum, default_value_t = Convention::Standard)]
    pub sign_convention: Convention,
    /// Solve for (γ, δ, λ)-derivations.
    #[arg(long, num_args = 3, value_names = ["GAMMA", "DELTA", "LAMBDA"], allow_hyphen_values = true)]
    pub generalized: Option<Vec<String>>,
    /// Solve for quasi-derivation pairs.
    #[arg(long, conflicts_with = "generalized")]
    pub quasi: bool,
    /// Cross-check against brute-force enumeration (𝔽_p only).
    #[arg(long)]
    pub oracle: bool,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct CorpusArgs {
    /// Accepted for compatibility; generation is the only mode.
    #[arg(long)]
    pub generate: bool,
    /// Largest dimension.
    #[arg(long, default_value_t = 4)]
    pub dim: usize,
    #[arg(long, value_enum, default_value_t = FieldName::Q)]
    pub field: FieldName,
    #[arg(long)]
    pub p: Option<u64>,
    #[arg(long, default_value_t = 20)]
    pub count: usize,
    /// Directory for the instance files and manifest.json.
    #[arg(long, default_value = "corpus")]
    pub dir: PathBuf,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let name = commands::name(&cli.command);
    let (inputs, result) = commands::run(&cli);
    let (pass, violations, details, lines, error, code) = match result {
        Ok(o) => (o.pass, o.violations, o.details, o.lines, None, if o.pass { 0 } else { 1 }),
        Err(e) => {
            let code = if e.is_malformed() { 2 } else { 1 };
            (false, Default::default(), serde_json::Value::Null, Vec::new(), Some(e.to_string()), code)
        }
    };
    let report = RunReport {
        command: name.to_string(),
        input_digest: report::digest(&inputs),
        seed: cli.global.seed,
        pass,
        violations,
        error,
        elapsed_ms: cli.global.timing.then(|| start.elapsed().as_secs_f64() * 1e3),
        details,
        lines,
    };
    let text = match cli.global.format {
        Format::Text => report.text(),
        Format::Json => report.json(),
    };
    match &cli.global.out {
        Some(path) => {
            if let Err(e) = bihom_core::io::write_atomic(path, &text) {
                eprintln!("error: cannot write report: {e}");
                return ExitCode::from(2);
            }
            if let Some(e) = &report.error {
                eprintln!("error: {e}");
            }
        }
        None => print!("{text}"),
    }
    ExitCode::from(code)
}

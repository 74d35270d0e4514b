//! `hbrace`: verify and decompose Hopf braces stored as JSON files.

mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

#[derive(Parser)]
#[command(name = "hbrace", version, about = "Exact computations with cocommutative Hopf braces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check every Hopf brace axiom.
    Verify { file: PathBuf },
    /// Build the braided operator and check the braid equation.
    Ybe {
        file: PathBuf,
        /// Include the operator's columns in the report.
        #[arg(long)]
        emit_matrix: bool,
    },
    /// Kernel of a morphism as a sub-brace of its domain.
    Kernel {
        #[arg(long)]
        morphism: PathBuf,
    },
    /// Quotient by the ideal of a normal sub-brace.
    Quotient {
        file: PathBuf,
        #[arg(long)]
        normal_sub: PathBuf,
        #[command(flatten)]
        out: Out,
    },
    /// Normal epi followed by a mono.
    Factorize {
        #[arg(long)]
        morphism: PathBuf,
    },
    /// Torsion sequence: component of the unit, group-like part.
    Decompose { file: PathBuf },
    /// Huq commutator of two normal sub-braces (default: the whole brace twice).
    Commutator {
        file: PathBuf,
        #[arg(long = "sub", num_args = 1)]
        subs: Vec<PathBuf>,
    },
    /// Quotient by the largest Huq commutator.
    Abelianize {
        file: PathBuf,
        #[command(flatten)]
        out: Out,
    },
    /// Convert between a brace and its matched pair of actions.
    MatchedPair {
        file: PathBuf,
        #[arg(long, conflicts_with = "from", required_unless_present = "from")]
        to: bool,
        #[arg(long)]
        from: bool,
        #[command(flatten)]
        out: Out,
    },
    /// Skew brace tools.
    Skew {
        #[command(subcommand)]
        command: SkewCommand,
    },
    /// List built-in braces, optionally writing them to a directory.
    Catalog {
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Split epimorphisms.
    Points {
        #[command(subcommand)]
        command: PointsCommand,
    },
}

#[derive(Args)]
struct Out {
    /// Also write the resulting file here.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum SkewCommand {
    /// Linearize to a group-algebra Hopf brace.
    Lift {
        file: PathBuf,
        /// `Q` or `Fp:<p>`.
        #[arg(long, default_value = "Q")]
        field: String,
        #[command(flatten)]
        out: Out,
    },
    /// Set-theoretic solution of the braid equation.
    Ybe { file: PathBuf },
}

#[derive(Subcommand)]
enum PointsCommand {
    /// Semi-direct decomposition of a split epimorphism.
    Decompose {
        #[arg(long)]
        pi: PathBuf,
        #[arg(long)]
        gamma: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    use commands as c;
    let (name, result) = match &cli.command {
        Command::Verify { file } => ("verify", c::verify(file)),
        Command::Ybe { file, emit_matrix } => ("ybe", c::ybe(file, *emit_matrix)),
        Command::Kernel { morphism } => ("kernel", c::kernel(morphism)),
        Command::Quotient { file, normal_sub, out } => ("quotient", c::quotient(file, normal_sub, out.out.as_deref())),
        Command::Factorize { morphism } => ("factorize", c::factorize(morphism)),
        Command::Decompose { file } => ("decompose", c::decompose(file)),
        Command::Commutator { file, subs } => ("commutator", c::commutator(file, subs)),
        Command::Abelianize { file, out } => ("abelianize", c::abelianize(file, out.out.as_deref())),
        Command::MatchedPair { file, to, out, .. } => ("matched-pair", c::matched_pair(file, *to, out.out.as_deref())),
        Command::Skew { command: SkewCommand::Lift { file, field, out } } => ("skew lift", c::skew_lift(file, field, out.out.as_deref())),
        Command::Skew { command: SkewCommand::Ybe { file } } => ("skew ybe", c::skew_ybe(file)),
        Command::Catalog { emit } => ("catalog", c::catalog(emit.as_deref())),
        Command::Points { command: PointsCommand::Decompose { pi, gamma } } => ("points decompose", c::points_decompose(pi, gamma)),
    };
    match result {
        Ok(o) => {
            print!("{}", o.to_json());
            eprint!("{}", o.summary());
            if o.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            print!("{}", output::error_json(name, &e));
            eprintln!("{name}: {e}");
            if let output::CliError::Failure(_, Some(r)) = &e {
                eprint!("{r}");
            }
            ExitCode::from(e.code())
        }
    }
}

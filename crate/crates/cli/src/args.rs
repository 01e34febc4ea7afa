use clap::{Args, Parser, Subcommand, ValueEnum};
use tetra_core::groebner::DEFAULT_PRIME;
use tetra_core::TetTuple;

#[derive(Parser, Debug, Clone, PartialEq)]
#[command(name = "tetra", version, about = "Tetrahedral curves: reduction, Betti tables, regularity, gins")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug, Clone, PartialEq)]
pub enum Command {
    /// Every classifier flag, degree and regularity
    Classify { tuple: TupleArg },
    /// Maximal-weight reduction to the minimal curve of the class
    Reduce {
        tuple: TupleArg,
        /// Include every step, not only the terminal curve
        #[arg(long)]
        trace: bool,
    },
    /// Graded Betti table assembled from the reduction
    Betti {
        tuple: TupleArg,
        /// Recompute the table from the monomial ideal and compare
        #[arg(long)]
        oracle_check: bool,
    },
    /// Reverse-lexicographic generic initial ideal
    Gin {
        tuple: TupleArg,
        /// Recompute numerically after a random change of coordinates
        #[arg(long)]
        oracle_check: bool,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_PRIME)]
        prime: u64,
    },
    /// Hilbert function, h-vector and degree
    Hilbert {
        tuple: TupleArg,
        #[arg(long)]
        upto: u32,
    },
    /// Curves with a linear resolution in the class of a minimal curve
    EnumerateLinear { tuple: TupleArg },
    /// Run a verification suite against the oracles
    Verify(VerifyArgs),
}

#[derive(Args, Debug, Clone, PartialEq)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    pub suite: Suite,
    /// Sweep every tuple with entry sum at most this
    #[arg(long, default_value_t = 5)]
    pub bound: u32,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    #[arg(long, default_value_t = DEFAULT_PRIME)]
    pub prime: u64,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Suite {
    Reduction,
    Betti,
    Cwl,
    Regularity,
    Gin,
    Enumeration,
    LiaisonAddition,
    Truncation,
    All,
}

impl Suite {
    pub const EACH: [Suite; 8] = [
        Suite::Reduction,
        Suite::Betti,
        Suite::Cwl,
        Suite::Regularity,
        Suite::Gin,
        Suite::Enumeration,
        Suite::LiaisonAddition,
        Suite::Truncation,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Reduction => "reduction",
            Suite::Betti => "betti",
            Suite::Cwl => "cwl",
            Suite::Regularity => "regularity",
            Suite::Gin => "gin",
            Suite::Enumeration => "enumeration",
            Suite::LiaisonAddition => "liaison-addition",
            Suite::Truncation => "truncation",
            Suite::All => "all",
        }
    }
}

/// A tuple validated at parse time.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TupleArg(pub TetTuple);

impl std::str::FromStr for TupleArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        s.parse::<TetTuple>().map(TupleArg).map_err(|e| e.to_string())
    }
}

impl Command {
    pub fn verb(&self) -> &'static str {
        match self {
            Command::Classify { .. } => "classify",
            Command::Reduce { .. } => "reduce",
            Command::Betti { .. } => "betti",
            Command::Gin { .. } => "gin",
            Command::Hilbert { .. } => "hilbert",
            Command::EnumerateLinear { .. } => "enumerate-linear",
            Command::Verify(_) => "verify",
        }
    }
}

/// Parse failure, or a help/version request that should print and exit 0.
#[derive(Debug, Clone, PartialEq)]
pub enum ParseOutcome {
    Usage(String),
    Display(String),
}

pub fn parse<I, S>(argv: I) -> Result<Cli, ParseOutcome>
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let argv = std::iter::once(std::ffi::OsString::from("tetra")).chain(argv.into_iter().map(Into::into));
    Cli::try_parse_from(argv).map_err(|e| {
        use clap::error::ErrorKind;
        match e.kind() {
            ErrorKind::DisplayHelp | ErrorKind::DisplayVersion | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => {
                ParseOutcome::Display(e.render().to_string())
            }
            _ => {
                let rendered = e.render().to_string();
                let line = rendered.lines().find(|l| !l.trim().is_empty()).unwrap_or("usage error");
                ParseOutcome::Usage(line.trim().to_string())
            }
        }
    })
}

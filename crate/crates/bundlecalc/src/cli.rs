use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "bundlecalc", version, about = "Exact cohomology and characteristic classes of homogeneous bundles on Grassmannians")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

/// Ambient Grassmannian and optional zero locus.
#[derive(Clone, Debug, Default, Args)]
pub struct SetupArgs {
    /// Gr(K, N): K-dimensional subspaces of an N-dimensional space.
    #[arg(long, num_args = 2, value_names = ["K", "N"])]
    pub ambient: Option<Vec<usize>>,
    /// Bundle cutting out X. Read as the conormal bundle, unless every
    /// summand has global sections, in which case it is read as the bundle
    /// carrying the section and dualised.
    #[arg(long, value_name = "EXPR", conflicts_with = "section")]
    pub conormal: Option<String>,
    /// Bundle with a general section cutting out X.
    #[arg(long, value_name = "EXPR")]
    pub section: Option<String>,
    /// TOML file with keys k, n and conormal (or section).
    #[arg(long, value_name = "PATH")]
    pub setup_file: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ChernKind {
    /// Chern character.
    Ch,
    /// Total Chern class.
    C,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decompose an expression into irreducible summands.
    Decompose {
        #[command(flatten)]
        setup: SetupArgs,
        /// Bundle expression, e.g. "end0(wedge(2,Q))"
        #[arg(long, value_name = "EXPR")]
        target: String,
    },
    /// Cohomology on the ambient Grassmannian.
    Cohomology {
        #[command(flatten)]
        setup: SetupArgs,
        /// Bundle expression, e.g. "end0(wedge(2,Q))"
        #[arg(long, value_name = "EXPR")]
        target: String,
    },
    /// Cohomology of the restriction to the zero locus.
    Restrict {
        #[command(flatten)]
        setup: SetupArgs,
        /// Bundle expression, e.g. "end0(wedge(2,Q))"
        #[arg(long, value_name = "EXPR")]
        target: String,
        /// Also list every nonzero cell of the Koszul page.
        #[arg(long)]
        page: bool,
    },
    /// Euler characteristic, on the zero locus when one is given.
    Euler {
        #[command(flatten)]
        setup: SetupArgs,
        /// Bundle expression, e.g. "end0(wedge(2,Q))"
        #[arg(long, value_name = "EXPR")]
        target: String,
        /// Cross-check the Koszul value with Riemann-Roch.
        #[arg(long)]
        check_hrr: bool,
    },
    /// Chern character or total Chern class.
    Chern {
        #[command(flatten)]
        setup: SetupArgs,
        /// Bundle expression, e.g. "end0(wedge(2,Q))"
        #[arg(long, value_name = "EXPR")]
        target: String,
        #[arg(long, value_enum, default_value_t = ChernKind::Ch)]
        kind: ChernKind,
        /// Highest degree kept; defaults to the dimension of the ambient space.
        #[arg(long)]
        truncation: Option<u32>,
    },
    /// Discriminant ch_1^2 - 2 r ch_2.
    Discriminant {
        #[command(flatten)]
        setup: SetupArgs,
        /// Bundle expression, e.g. "end0(wedge(2,Q))"
        #[arg(long, value_name = "EXPR")]
        target: String,
    },
    /// Test whether the discriminant is a multiple of c_2(X).
    Modularity {
        #[command(flatten)]
        setup: SetupArgs,
        /// Bundle expression, e.g. "end0(wedge(2,Q))"
        #[arg(long, value_name = "EXPR")]
        target: String,
    },
    /// Discriminant scaling factor of an exterior or symmetric power.
    LambdaCoefficient {
        /// Rank r of the bundle
        #[arg(long)]
        rank: u64,
        /// Exterior power p.
        #[arg(long, conflicts_with = "sym2", required_unless_present = "sym2")]
        wedge: Option<u64>,
        /// Use the symmetric square instead.
        #[arg(long)]
        sym2: bool,
    },
}

impl Command {
    pub fn setup_file(&self) -> Option<&std::path::Path> {
        match self {
            Command::Decompose { setup, .. }
            | Command::Cohomology { setup, .. }
            | Command::Restrict { setup, .. }
            | Command::Euler { setup, .. }
            | Command::Chern { setup, .. }
            | Command::Discriminant { setup, .. }
            | Command::Modularity { setup, .. } => setup.setup_file.as_deref(),
            Command::LambdaCoefficient { .. } => None,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Command::Decompose { .. } => "decompose",
            Command::Cohomology { .. } => "cohomology",
            Command::Restrict { .. } => "restrict",
            Command::Euler { .. } => "euler",
            Command::Chern { .. } => "chern",
            Command::Discriminant { .. } => "discriminant",
            Command::Modularity { .. } => "modularity",
            Command::LambdaCoefficient { .. } => "lambda-coefficient",
        }
    }
}

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "compsign", version, about = "Signs of alternating sums over restricted compositions")]
pub struct Cli {
    /// Directory for output files and `manifest.json`.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Plain-text `key=value` certifier settings.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Composition counts c_A(n) for n = 0..N.
    Counts(SetN),
    /// Coefficient triangle of f_{A,n}.
    Polys(SetN),
    /// The S_{A,k}(n) grid.
    Sk(SkArgs),
    /// Sign word of S_{A,k}, optionally with period detection.
    Signs(SignsArgs),
    /// Identity and theorem checks.
    Verify(VerifyArgs),
    /// Dominant-root non-periodicity certificate.
    Nonperiodic(NonperiodicArgs),
    /// Enumerate subsets of {1..N} passing the k = 0 test up to a horizon.
    Enumerate(EnumerateArgs),
    /// Build sets from a construction.
    Construct(ConstructArgs),
    /// Open-problem instrumentation.
    Experiment(ExperimentArgs),
    /// Coefficients of q_A as exact rationals.
    Qseries(QseriesArgs),
}

#[derive(Debug, Args)]
pub struct SetN {
    /// Part set, e.g. `{1,2,3}`, `1..5`, `N+\{2}`, `repunit(4)`, with optional `@H`.
    #[arg(short = 'A', allow_hyphen_values = true)]
    pub set: String,
    #[arg(short = 'N')]
    pub n: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RouteArg {
    Direct,
    Fast,
    Q,
    Conv,
    All,
}

#[derive(Debug, Args)]
pub struct SkArgs {
    #[arg(short = 'A')]
    pub set: String,
    #[arg(short = 'K')]
    pub k: usize,
    #[arg(short = 'N')]
    pub n: usize,
    #[arg(long, value_enum, default_value = "fast")]
    pub route: RouteArg,
}

#[derive(Debug, Args)]
pub struct SignsArgs {
    #[arg(short = 'A')]
    pub set: String,
    #[arg(short = 'k')]
    pub k: usize,
    #[arg(short = 'N')]
    pub n: usize,
    /// Use sign((−1)ⁿ S) instead of sign(S).
    #[arg(long)]
    pub normalized: bool,
    /// `max_pre,max_period` search bounds.
    #[arg(long, value_name = "p,T")]
    pub detect: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Section2,
    Prop33,
    Thm34,
    Thm36,
    Union,
    Oddset,
    Conjecture,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    pub suite: Suite,
    #[arg(short = 'A')]
    pub set: Option<String>,
    #[arg(short = 'B')]
    pub b: Option<String>,
    #[arg(short = 'E')]
    pub e: Option<String>,
    #[arg(short = 'm')]
    pub m: Option<usize>,
    #[arg(short = 'k')]
    pub k: Option<usize>,
    #[arg(short = 'K', default_value_t = 3)]
    pub max_k: usize,
    #[arg(short = 'N', default_value_t = 60)]
    pub n: usize,
}

#[derive(Debug, Args)]
pub struct NonperiodicArgs {
    /// Certify 1 + Σ_{a∈A} xᵃ, the denominator of C_A(−1, x), for a finite set.
    #[arg(short = 'A', conflicts_with = "poly", required_unless_present = "poly")]
    pub set: Option<String>,
    /// Coefficients in ascending order, e.g. `1,0,-1,-1`.
    #[arg(short = 'p', allow_hyphen_values = true)]
    pub poly: Option<String>,
    /// Also run the exact cyclotomic screen.
    #[arg(long)]
    pub exact: bool,
    /// `len,max_pre,max_period`: detect a period in the signs of 1/p as a cross-check.
    #[arg(long, value_name = "L,p,T")]
    pub bridge: Option<String>,
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    #[arg(short = 'N')]
    pub n: usize,
    #[arg(long, default_value_t = 200)]
    pub horizon: usize,
    /// Refuse N above this bound.
    #[arg(long, default_value_t = compsign::explorer::DEFAULT_MAX_F_N)]
    pub max_n: usize,
    /// Print the per-subset CSV instead of the summary.
    #[arg(long)]
    pub csv: bool,
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    /// Subset-sum closure of a set of odd parts.
    #[arg(long, required = true)]
    pub thm36: bool,
    #[arg(short = 'B')]
    pub b: String,
    /// Also verify the construction up to N.
    #[arg(short = 'N')]
    pub n: Option<usize>,
}

#[derive(Debug, Args)]
pub struct ExperimentArgs {
    #[arg(long, conflicts_with = "superset", required_unless_present = "superset")]
    pub problem44: bool,
    /// Smallest additions to A making row 0 positive up to the horizon.
    #[arg(long)]
    pub superset: bool,
    #[arg(short = 'm')]
    pub m: Option<usize>,
    #[arg(short = 'A')]
    pub set: Option<String>,
    #[arg(long, default_value_t = 200)]
    pub horizon: usize,
    #[arg(long, default_value_t = 2)]
    pub budget: usize,
    /// Largest candidate element; default 2·max A + 2.
    #[arg(long)]
    pub universe: Option<usize>,
}

#[derive(Debug, Args)]
pub struct QseriesArgs {
    #[arg(short = 'A')]
    pub set: String,
    #[arg(short = 'N')]
    pub n: usize,
    /// Report the sign pattern of q and certify its denominator.
    #[arg(long)]
    pub demo: bool,
}

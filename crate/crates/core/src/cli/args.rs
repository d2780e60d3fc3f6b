use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "cohdiag", version, about = "Decide whether coherent-state diagonal representations exist")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run the existence test for a compact group.
    Check(GroupArgs),
    /// Print the irreps of J0 (x) J0* with multiplicities.
    Spectrum(SpectrumArgs),
    /// Print the pi matrices of a configuration.
    Pi(GroupArgs),
    /// Heisenberg–Weyl characteristic functions, zero circles and weights.
    Hw(HwArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GroupName {
    Su2,
    Su3,
}

#[derive(Debug, Args)]
pub struct GroupArgs {
    pub group: GroupName,
    /// SU(2) spin, e.g. `1`, `0.5` or `3/2`.
    #[arg(long, allow_hyphen_values = true)]
    pub j0: Option<String>,
    /// SU(3) irrep as `p,q`.
    #[arg(long)]
    pub irrep: Option<String>,
    /// `canonical:M0`, `generic`, `u2-scalar`, `i3y-charged` or `iiy:I,I3,Y`.
    #[arg(long, default_value = "generic", allow_hyphen_values = true)]
    pub fiducial: String,
    /// Include the pi matrices in the report.
    #[arg(long)]
    pub show_pi: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Seed for the generic fiducial.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct SpectrumArgs {
    pub group: GroupName,
    #[arg(long)]
    pub j0: Option<String>,
    #[arg(long)]
    pub irrep: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct HwArgs {
    #[command(subcommand)]
    pub command: HwCommand,
}

#[derive(Debug, Subcommand)]
pub enum HwCommand {
    /// Characteristic function at a point or over a grid.
    Char(HwCharArgs),
    /// Zero circles of a number-state characteristic function.
    Zeros(HwZerosArgs),
    /// Diagonal weight of an operator for a fiducial.
    Weight(HwWeightArgs),
}

#[derive(Debug, Args, serde::Serialize)]
pub struct FockArgs {
    /// Fock-space truncation.
    #[arg(long, default_value_t = 64)]
    pub cutoff: usize,
    /// Central value c.
    #[arg(long = "c", default_value_t = 1.0)]
    pub central: f64,
}

#[derive(Debug, Args, serde::Serialize)]
pub struct GridArgs {
    /// Half-width R of the square grid.
    #[arg(long, default_value_t = 8.0)]
    pub extent: f64,
    /// Points per axis (odd).
    #[arg(long, default_value_t = 129)]
    pub resolution: usize,
    /// Write the grid as CSV to this path.
    #[arg(long)]
    pub out: Option<std::path::PathBuf>,
}

#[derive(Debug, Args)]
pub struct HwCharArgs {
    /// `vacuum`, `squeezed:ETA` or `fock:N`.
    #[arg(long, default_value = "vacuum")]
    pub state: String,
    /// Single point `q0,p0`; without it the whole grid is sampled.
    #[arg(long, allow_hyphen_values = true)]
    pub point: Option<String>,
    #[command(flatten)]
    pub fock: FockArgs,
    #[command(flatten)]
    pub grid: GridArgs,
    /// Relative threshold of the nonvanishing test.
    #[arg(long, default_value_t = crate::heisenberg_weyl::DEFAULT_THRESHOLD)]
    pub threshold: f64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct HwZerosArgs {
    /// Number-state index n.
    #[arg(long)]
    pub fock: usize,
    /// Radial window `min,max`; all zeros when omitted.
    #[arg(long)]
    pub window: Option<String>,
    #[arg(long = "c", default_value_t = 1.0)]
    pub central: f64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct HwWeightArgs {
    #[arg(long, default_value = "vacuum")]
    pub state: String,
    /// `thermal:NBAR` or `projector:N`.
    #[arg(long, default_value = "thermal:1")]
    pub operator: String,
    #[arg(long, default_value_t = 32)]
    pub cutoff: usize,
    #[arg(long = "c", default_value_t = 1.0)]
    pub central: f64,
    #[command(flatten)]
    pub grid: GridArgs,
    /// Bound on 1/|chi| above which the weight is flagged as distributional.
    #[arg(long, default_value_t = crate::heisenberg_weyl::DEFAULT_AMPLIFICATION_BOUND)]
    pub bound: f64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

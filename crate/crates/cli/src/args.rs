use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "circlepack",
    version,
    about = "Circle packings in regions bounded by arcs and lines"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Chain in a square with a semicircle on AB and a quarter circle at B
    SquareA {
        #[arg(long)]
        side: f64,
        #[arg(long)]
        count: usize,
    },
    /// Chain in a square with semicircles on AB and AD and a quarter circle at B
    SquareB {
        #[arg(long)]
        side: f64,
        #[arg(long)]
        count: usize,
    },
    /// Chain in a circular sector
    Sector {
        #[arg(long)]
        radius: f64,
        /// Central angle in degrees, strictly between 0 and 180
        #[arg(long = "angle-deg", allow_negative_numbers = true)]
        angle_deg: f64,
        #[arg(long)]
        count: usize,
    },
    /// Chain between two touching circles and their common tangent line
    Lens {
        #[arg(long)]
        radius: f64,
        #[arg(long)]
        count: usize,
    },
    /// Minor and major chains around a circle inside a crescent
    Lune {
        /// Outer circle radius
        #[arg(long = "R")]
        outer: f64,
        /// Initial circle radius
        #[arg(long)]
        a: f64,
        /// Reference circle radius
        #[arg(long)]
        b: f64,
        #[arg(long, default_value_t = 0)]
        minor: usize,
        #[arg(long, default_value_t = 0)]
        major: usize,
    },
    /// Metrics of a hexagonal packing with n circles per side
    Hex {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        r: f64,
    },
    /// Hexagonal packing density for a range of n
    HexCurve {
        #[arg(long = "n-min", default_value_t = 2)]
        n_min: u64,
        #[arg(long = "n-max")]
        n_max: u64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Svg,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Write to a file instead of standard output
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Significant digits, 4 to 17
    #[arg(long, global = true, default_value_t = 17, value_parser = clap::value_parser!(u8).range(4..=17))]
    pub precision: u8,
    /// Check tangency and containment of every circle (default)
    #[arg(long, global = true, overrides_with = "no_verify")]
    pub verify: bool,
    /// Skip verification
    #[arg(long = "no-verify", global = true, overrides_with = "verify")]
    pub no_verify: bool,
    /// Verification tolerance relative to the region size
    #[arg(
        long,
        global = true,
        default_value_t = 1e-9,
        allow_negative_numbers = true
    )]
    pub tolerance: f64,
}

impl OutputArgs {
    pub fn verify(&self) -> bool {
        !self.no_verify
    }
}

//! `trop`: command-line front end for the tropical-core library.
//!
//! Every run prints a `#`-prefixed manifest (tool version, command,
//! resolved parameters, input digests) followed by the command's output;
//! identical manifests and inputs produce identical bytes. Exit codes:
//! 0 success, 1 domain error (the library's named error printed verbatim),
//! 2 usage error.

mod cmds;
mod manifest;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use tropical_core::SemiringSpec;

#[derive(Parser)]
#[command(name = "trop", version, about = "Tropical and idempotent mathematics toolbox")]
pub struct Cli {
    /// Semiring: maxplus, minplus, or subtropical:<h>
    #[arg(long, global = true)]
    semiring: Option<String>,
    /// Write the main output to a file instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Seed for randomized check suites
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Suppress the run manifest
    #[arg(long, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
pub enum Cmd {
    /// Randomized semiring law checks
    SemiringCheck {
        /// Triples per law
        #[arg(long, default_value_t = 10_000)]
        trials: usize,
    },
    /// Single-source distances over the selected semiring (default minplus)
    ShortestPath {
        graph: PathBuf,
        #[arg(long)]
        source: usize,
    },
    /// Least solution of X = H⊙X ⊕ F for a unit right-hand side
    SolveBellman {
        graph: PathBuf,
        /// Node carrying the unit entry of F
        #[arg(long)]
        source: usize,
    },
    /// Legendre transform of a grid function
    Legendre {
        grid: PathBuf,
        /// Output grid as origin,step,len
        #[arg(long, value_name = "O,S,N", conflicts_with = "xi_auto", allow_hyphen_values = true)]
        xi: Option<String>,
        /// Derive the output grid from the function's slope range
        #[arg(long, value_name = "N")]
        xi_auto: Option<usize>,
    },
    /// Sup-convolution of two grid functions
    Supconv { a: PathBuf, b: PathBuf },
    /// Apply an integral kernel to a grid function
    KernelApply { kernel: PathBuf, grid: PathBuf },
    /// Tropical limit of a generalized polynomial
    Tropicalize { poly: PathBuf },
    /// Newton polytope vertices of a generalized polynomial
    Newton { poly: PathBuf },
    /// Dequantization transform values h·log|f(exp(x/h))|
    Dequantize {
        poly: PathBuf,
        /// Sample point, comma-separated (repeatable)
        #[arg(long = "x", value_name = "X1,X2,..", required = true, allow_hyphen_values = true)]
        points: Vec<String>,
        /// Deformation parameters, comma-separated
        #[arg(long = "h", value_name = "H1,H2,..")]
        hs: String,
    },
    /// Minkowski operations on polytopes
    Polytope {
        #[arg(value_parser = ["sum", "hullunion", "support"])]
        op: String,
        a: PathBuf,
        b: Option<PathBuf>,
        /// Direction for the support value
        #[arg(long, value_name = "X1,X2,..", allow_hyphen_values = true)]
        dir: Option<String>,
    },
    /// Hopf-Lax evolution vs the viscous equation across h
    Hjb {
        #[arg(long, default_value_t = 1.0)]
        m: f64,
        #[arg(long = "T", default_value_t = 1.0)]
        t: f64,
        #[arg(long, default_value_t = 0.1)]
        dt: f64,
        /// Viscosity parameters, comma-separated
        #[arg(long = "h", value_name = "H1,H2,..", default_value = "0.4,0.2,0.1,0.05")]
        hs: String,
        /// Initial action: quad, abs, or file:<grid.csv>
        #[arg(long, default_value = "quad")]
        init: String,
        /// Potential: zero or file:<grid.csv>
        #[arg(long, default_value = "zero")]
        potential: String,
        /// Space grid as x0,x1,n (ignored when init comes from a file)
        #[arg(long, default_value = "-2,2,401", value_name = "X0,X1,N", allow_hyphen_values = true)]
        grid: String,
    },
    /// Box-counting dimension of a point cloud
    Boxdim {
        cloud: PathBuf,
        /// Box radii, comma-separated and decreasing
        #[arg(long, value_name = "R1,R2,..")]
        scales: String,
    },
    /// Amoeba samples and the tropical curve of a plane curve
    Amoeba {
        poly: PathBuf,
        /// Deformation parameters, comma-separated
        #[arg(long = "h", value_name = "H1,H2,..")]
        hs: String,
        #[arg(long, default_value_t = 81)]
        samples: usize,
        /// Window as x0,x1,y0,y1
        #[arg(long, value_name = "X0,X1,Y0,Y1", default_value = "-3,3,-3,3", allow_hyphen_values = true)]
        window: String,
        /// Directory for amoeba_h<k>.csv and tropical.csv
        #[arg(long, default_value = ".")]
        outdir: PathBuf,
    },
}

/// A command-line level error: wrong flags or values (exit 2), as opposed
/// to a domain error from the library (exit 1).
#[derive(Debug)]
pub struct UsageError(pub String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::error::Error for UsageError {}

pub fn parse_semiring(spec: &str) -> Result<SemiringSpec, UsageError> {
    match spec {
        "maxplus" => Ok(SemiringSpec::MaxPlus),
        "minplus" => Ok(SemiringSpec::MinPlus),
        _ => {
            if let Some(h) = spec.strip_prefix("subtropical:") {
                let h: f64 = h
                    .parse()
                    .map_err(|_| UsageError(format!("bad subtropical parameter {h:?}")))?;
                SemiringSpec::subtropical(h).map_err(|e| UsageError(e.to_string()))
            } else {
                Err(UsageError(format!(
                    "unknown semiring {spec:?} (expected maxplus, minplus, or subtropical:<h>)"
                )))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cmds::run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            if e.is::<UsageError>() {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}

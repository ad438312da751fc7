//! `crowngraft` — command line front end for the crowngraft library.
//!
//! Subcommands read a versioned JSON document (file or stdin), call one
//! library operation, and write a versioned JSON document (file or stdout).
//! Failures print a machine-readable JSON error object to stderr and exit
//! with a stable code: 2 for schema errors, 3 for domain errors, 4 for
//! numerical failures.

mod commands;
mod error;
mod schema;
mod svg;

use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::commands::TipsOptions;
use crate::error::CliError;
use crate::schema::{resolve_tolerance, SCHEMA};

#[derive(Parser)]
#[command(
    name = "crowngraft",
    version,
    about = "Ideal polygons, grafting, crown laminations, arc matchings, and polynomial Schwarzian developing maps",
    long_about = None
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Validate a polygon and report its vertices and coordinates
    Polygon {
        /// Input JSON path (stdin when omitted or "-")
        input: Option<PathBuf>,
        /// Output path (stdout when omitted or "-")
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Projective tolerance (overrides CROWNGRAFT_TOL)
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Graft weighted diagonals onto a polygon and report the tips
    Graft {
        /// Input JSON path (stdin when omitted or "-")
        input: Option<PathBuf>,
        /// Output path (stdout when omitted or "-")
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Projective tolerance (overrides CROWNGRAFT_TOL)
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Recover the polygon and weights from tips and a triangulation
    Ungraft {
        /// Input JSON path (stdin when omitted or "-")
        input: Option<PathBuf>,
        /// Output path (stdout when omitted or "-")
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Projective tolerance (overrides CROWNGRAFT_TOL)
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Enumerate full-turn lifts of a diagonal weight vector
    Fiber {
        /// Input JSON path (stdin when omitted or "-")
        input: Option<PathBuf>,
        /// Output path (stdout when omitted or "-")
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Largest full-turn shift per diagonal
        #[arg(long)]
        nmax: Option<u32>,
    },
    /// Convert a crown lamination to twist coordinates and back
    CrownCoords {
        /// Input JSON path (stdin when omitted or "-")
        input: Option<PathBuf>,
        /// Output path (stdout when omitted or "-")
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Exactness slack for offset layout checks
        #[arg(long, default_value_t = 1e-9)]
        eps: f64,
    },
    /// Compute the minimal matching of two balanced rows of arcs
    Match {
        /// Input JSON path (stdin when omitted or "-")
        input: Option<PathBuf>,
        /// Output path (stdout when omitted or "-")
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Also count all matchings by exhaustive search
        #[arg(long)]
        exhaustive: bool,
    },
    /// Glue crown strands to surface arcs through the two-stage matching
    Glue {
        /// Input JSON path (stdin when omitted or "-")
        input: Option<PathBuf>,
        /// Output path (stdout when omitted or "-")
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run the developing-map engine on a polynomial potential
    Tips {
        /// Degree of a pure power z^d
        #[arg(long)]
        degree: Option<usize>,
        /// Low coefficients c_0,...,c_{d-2} (complex literals like 1+2i)
        #[arg(long, value_delimiter = ',')]
        coeffs: Option<Vec<String>>,
        /// Seed radius for asymptotic seeding
        #[arg(long)]
        radius: Option<f64>,
        /// Integration tolerance (absolute and relative)
        #[arg(long)]
        tol: Option<f64>,
        /// Write developing-map ray samples to this CSV file
        #[arg(long)]
        trace_csv: Option<PathBuf>,
        /// Output path (stdout when omitted or "-")
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Draw a figure document as a standalone SVG
    Render {
        /// Input JSON path (stdin when omitted or "-")
        input: Option<PathBuf>,
        /// Output path (stdout when omitted or "-")
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Cmd::Polygon { input, output, tol } => {
            let tol = resolve_tolerance(tol)?;
            commands::polygon(input.as_deref(), output.as_deref(), &tol)
        }
        Cmd::Graft { input, output, tol } => {
            let tol = resolve_tolerance(tol)?;
            commands::graft(input.as_deref(), output.as_deref(), &tol)
        }
        Cmd::Ungraft { input, output, tol } => {
            let tol = resolve_tolerance(tol)?;
            commands::ungraft(input.as_deref(), output.as_deref(), &tol)
        }
        Cmd::Fiber {
            input,
            output,
            nmax,
        } => commands::fiber(input.as_deref(), output.as_deref(), nmax),
        Cmd::CrownCoords { input, output, eps } => {
            commands::crown_coords(input.as_deref(), output.as_deref(), eps)
        }
        Cmd::Match {
            input,
            output,
            exhaustive,
        } => commands::run_match(input.as_deref(), output.as_deref(), exhaustive),
        Cmd::Glue { input, output } => commands::glue(input.as_deref(), output.as_deref()),
        Cmd::Tips {
            degree,
            coeffs,
            radius,
            tol,
            trace_csv,
            output,
        } => commands::tips(
            TipsOptions {
                degree,
                coeffs,
                radius,
                tol,
                trace_csv,
            },
            output.as_deref(),
        ),
        Cmd::Render { input, output } => {
            let tol = resolve_tolerance(None)?;
            commands::render(input.as_deref(), output.as_deref(), &tol)
        }
    }
}

fn main() {
    let cli = Cli::parse();
    if let Err(e) = run(cli) {
        let report = serde_json::json!({
            "schema": SCHEMA,
            "error": { "kind": e.kind(), "message": e.message() }
        });
        eprintln!("{report}");
        std::process::exit(e.exit_code());
    }
}

//! `cevian`: exact reports on the half-turn cevian locus.
//!
//! Exit codes: 0 success, 2 input or precondition error, 3 internal
//! invariant failure.

mod commands;
mod figures;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};

#[derive(Parser, Debug)]
#[command(name = "cevian", version, about = "Exact reports on the half-turn cevian locus")]
struct Cli {
    /// Add wall-clock time to the report.
    #[arg(long, global = true)]
    timing: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Half-turn conditions and invariants for a point in barycentric coordinates.
    Verify {
        /// Point literal, e.g. "-4+1*sqrt(19),-1,3".
        #[arg(short, long, allow_hyphen_values = true)]
        point: String,
        /// Expected field Q(sqrt(D)) of the coordinates.
        #[arg(long, value_name = "D")]
        sqrt: Option<u64>,
        /// Annotate points with decimal approximations.
        #[arg(long)]
        approx: bool,
    },
    /// Arithmetic on the cubic locus.
    #[command(subcommand)]
    Curve(CurveCommand),
    /// Sample the locus through the circle construction.
    Trace {
        /// Number of arc parameters.
        #[arg(short = 'n', long = "count", value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        /// JSON Lines output; samples go to stdout when omitted.
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// SVG rendering of the curve and the samples.
        #[arg(long)]
        svg: Option<PathBuf>,
        /// Skip the swapped orientation.
        #[arg(long)]
        primary: bool,
    },
    /// Checks and figure for the canonical circle construction.
    Scene {
        #[arg(long)]
        svg: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum CurveCommand {
    /// Evaluate the cubic at a point.
    Member {
        #[arg(short, long, allow_hyphen_values = true)]
        point: String,
    },
    /// Group sum of two curve points.
    Add {
        #[arg(short, long, allow_hyphen_values = true)]
        p: String,
        #[arg(short, long, allow_hyphen_values = true)]
        q: String,
    },
    /// Order of a curve point, searched up to a bound.
    Order {
        #[arg(short, long, allow_hyphen_values = true)]
        p: String,
        #[arg(long, default_value_t = cevian_core::locus::DEFAULT_ORDER_BOUND)]
        bound: u32,
    },
    /// The rational torsion table.
    Torsion,
    /// The j-invariant of the Weierstrass model.
    J,
    /// Run the birational chain both ways.
    Map {
        /// Weierstrass point "u,v".
        #[arg(long, allow_hyphen_values = true, conflicts_with = "point", required_unless_present = "point")]
        uv: Option<String>,
        /// Curve point in barycentric coordinates.
        #[arg(short, long, allow_hyphen_values = true)]
        point: Option<String>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let (name, result) = match &cli.command {
        Command::Verify { point, sqrt, approx } => ("verify", commands::verify(point, *sqrt, *approx)),
        Command::Curve(sub) => match sub {
            CurveCommand::Member { point } => ("curve member", commands::member(point)),
            CurveCommand::Add { p, q } => ("curve add", commands::add(p, q)),
            CurveCommand::Order { p, bound } => ("curve order", commands::order(p, *bound)),
            CurveCommand::Torsion => ("curve torsion", commands::torsion()),
            CurveCommand::J => ("curve j", commands::j()),
            CurveCommand::Map { uv, point } => ("curve map", commands::map(uv.as_deref(), point.as_deref())),
        },
        Command::Trace { n, output, svg, primary } => {
            ("trace", commands::trace(*n as usize, output.as_deref(), svg.as_deref(), *primary))
        }
        Command::Scene { svg } => ("scene", commands::scene(svg.as_deref())),
    };
    let timing = cli.timing.then(|| start.elapsed().as_secs_f64() * 1000.0);
    report::emit(name, result, timing)
}

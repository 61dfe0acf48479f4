use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use geowave::cli::{self, Algorithm, SolveArgs};

#[derive(Parser)]
#[command(
    name = "geowave",
    about = "Exact geodesic shortest paths and wavefront simulation on triangle meshes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute geodesic distances (and paths) from a source point.
    Solve {
        #[arg(long)]
        mesh: PathBuf,
        /// Source point: v:<id>, e:<id>:<t>, or f:<id>:<u>:<v>.
        #[arg(long, default_value = "v:0")]
        source: String,
        /// Target point (same syntax as --source).
        #[arg(long)]
        target: Option<String>,
        /// Solve to every vertex instead of a single target.
        #[arg(long)]
        all_vertices: bool,
        /// Write an SVG of the path tree (front and back orthographic views).
        #[arg(long)]
        emit_svg: Option<PathBuf>,
        /// Write the stats JSON to a file (it is always printed to stdout).
        #[arg(long)]
        emit_json: Option<PathBuf>,
        /// exact, steiner, or bruteforce.
        #[arg(long, default_value = "exact")]
        algorithm: String,
        /// Steiner points per edge for --algorithm steiner.
        #[arg(long, default_value_t = 0)]
        steiner_level: usize,
    },
    /// Run the section-grouped wavefront simulation and report event counts.
    Simulate {
        #[arg(long)]
        mesh: PathBuf,
        #[arg(long, default_value = "v:0")]
        source: String,
    },
    /// Generate a mesh: strip, convex_random, or sphere_approx.
    Gen {
        kind: String,
        #[arg(short, long)]
        n: usize,
        /// Defaults to $GEOWAVE_SEED, then 0.
        #[arg(long)]
        seed: Option<u64>,
        /// Output OFF file (printed to stdout when omitted).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Cross-check the exact solver against the oracles on random pairs.
    Verify {
        #[arg(long)]
        mesh: PathBuf,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        /// Defaults to $GEOWAVE_SEED, then 0.
        #[arg(long)]
        seed: Option<u64>,
        /// Shift exact distances by this amount (negative-control hook).
        #[arg(long, hide = true, default_value_t = 0.0)]
        inject_error: f64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result: Result<(String, bool), cli::CliError> = match cli.command {
        Command::Solve {
            mesh,
            source,
            target,
            all_vertices,
            emit_svg,
            emit_json,
            algorithm,
            steiner_level,
        } => algorithm.parse::<Algorithm>().and_then(|algorithm| {
            cli::run_solve(&SolveArgs {
                mesh,
                source,
                target,
                all_vertices,
                emit_svg,
                emit_json,
                algorithm,
                steiner_level,
            })
            .map(|json| (json, true))
        }),
        Command::Simulate { mesh, source } => {
            cli::run_simulate(&mesh, &source).map(|json| (json, true))
        }
        Command::Gen { kind, n, seed, out } => {
            let seed = seed.unwrap_or_else(cli::default_seed);
            cli::run_gen(&kind, n, seed, out.as_deref()).map(|off| (off, true))
        }
        Command::Verify {
            mesh,
            trials,
            seed,
            inject_error,
        } => {
            let seed = seed.unwrap_or_else(cli::default_seed);
            cli::run_verify(&mesh, trials, seed, inject_error)
        }
    };
    match result {
        Ok((output, ok)) => {
            use std::io::Write;
            // ignore broken pipes from `geowave ... | head`
            let _ = writeln!(std::io::stdout(), "{output}");
            if ok {
                ExitCode::SUCCESS
            } else {
                eprintln!("geowave: verification failed");
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            eprintln!("geowave: {e}");
            ExitCode::FAILURE
        }
    }
}

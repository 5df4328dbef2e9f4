use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

mod commands;
mod output;

use output::{CliError, Manifest};

#[derive(Parser, Debug)]
#[command(
    name = "subspace-ca",
    version,
    about = "Subspace codes from linear cellular automata"
)]
struct Cli {
    /// Print a CSV table instead of JSON (lossy; tables only).
    #[arg(long, global = true)]
    csv: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Kernel of a linear CA as a canonical basis.
    Kernel(KernelArgs),
    /// Build a maximal family with a common pairwise gcd and its code.
    BuildCode(BuildCodeArgs),
    /// Parameters and gcd profile of a code file.
    Analyze(AnalyzeArgs),
    /// Irreducible counts and maximal family sizes.
    Count(CountArgs),
    /// Exhaustive search for a largest family.
    SearchMax(SearchMaxArgs),
    /// Operator-channel simulation with minimum-distance decoding.
    Simulate(SimulateArgs),
}

#[derive(Args, Debug, Serialize)]
pub struct KernelArgs {
    /// Field spec, "p" or "p^m".
    #[arg(long)]
    pub q: String,
    /// Rule polynomial, ascending coefficients, e.g. "1,1,1".
    #[arg(long)]
    pub poly: String,
    /// Lattice length.
    #[arg(long)]
    pub n: usize,
}

#[derive(Args, Debug, Serialize)]
pub struct BuildCodeArgs {
    #[arg(long)]
    pub q: String,
    /// Rule degree.
    #[arg(long)]
    pub k: usize,
    /// Common gcd polynomial, "1" for a coprime family.
    #[arg(long, default_value = "1")]
    pub gcd: String,
    /// Also write the bare code file here.
    #[arg(long)]
    pub out: Option<String>,
}

#[derive(Args, Debug, Serialize)]
pub struct AnalyzeArgs {
    /// Code file, or a build-code report with a "code" entry.
    #[arg(long)]
    pub code: String,
}

#[derive(Args, Debug, Serialize)]
pub struct CountArgs {
    #[arg(long)]
    pub q: String,
    #[arg(long)]
    pub k: u64,
    /// Degree of a common gcd; adds the uniform-gcd family size.
    #[arg(long)]
    pub t: Option<u64>,
}

#[derive(Args, Debug, Serialize)]
pub struct SearchMaxArgs {
    #[arg(long)]
    pub q: String,
    #[arg(long)]
    pub k: usize,
    /// Bound on every pairwise gcd degree.
    #[arg(long, default_value_t = 0)]
    pub t: usize,
    /// Maximum number of candidate polynomials.
    #[arg(long, default_value_t = subspace_ca::codes::DEFAULT_BUDGET)]
    pub budget: usize,
    /// Search multiples of this polynomial with pairwise gcd exactly equal to it (ignores --t).
    #[arg(long)]
    pub gcd: Option<String>,
}

#[derive(Args, Debug, Serialize)]
pub struct SimulateArgs {
    #[arg(long)]
    pub code: String,
    /// Dimensions erased from each sent codeword.
    #[arg(long, default_value_t = 0)]
    pub erasures: usize,
    /// Dimensions injected into each received subspace.
    #[arg(long, default_value_t = 0)]
    pub errors: usize,
    #[arg(long, default_value_t = 1000)]
    pub trials: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Also write the stats JSON here.
    #[arg(long)]
    pub out: Option<String>,
}

fn run(cli: &Cli) -> (Manifest, Result<commands::Report, CliError>) {
    match &cli.command {
        Command::Kernel(a) => (
            Manifest::new("kernel", a, Some(&a.q), None),
            commands::kernel(a),
        ),
        Command::BuildCode(a) => (
            Manifest::new("build-code", a, Some(&a.q), None),
            commands::build_code(a),
        ),
        Command::Analyze(a) => (
            Manifest::new("analyze", a, None, None),
            commands::analyze(a),
        ),
        Command::Count(a) => (
            Manifest::new("count", a, Some(&a.q), None),
            commands::count(a),
        ),
        Command::SearchMax(a) => (
            Manifest::new("search-max", a, Some(&a.q), None),
            commands::search_max(a),
        ),
        Command::Simulate(a) => (
            Manifest::new("simulate", a, None, Some(a.seed)),
            commands::simulate(a),
        ),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (mut manifest, result) = run(&cli);
    let outcome = result.and_then(|report| {
        if let Some(field) = &report.field {
            manifest.field = Some(field.clone());
        }
        let text = if cli.csv {
            report.csv.clone().ok_or(CliError::NoTable)?
        } else {
            output::render(&manifest, &report.body)
        };
        for (path, doc) in &report.files {
            let doc = if doc.is_null() {
                output::render(&manifest, &report.body)
            } else {
                output::to_line(doc)
            };
            std::fs::write(path, doc).map_err(|e| CliError::Io {
                path: path.clone(),
                message: e.to_string(),
            })?;
        }
        Ok(text)
    });
    match outcome {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            print!("{}", output::render_error(&manifest, &e));
            ExitCode::from(1)
        }
    }
}

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use spinor_cli::commands::{self, GenFamily};
use spinor_cli::transport::{parse_curve, parse_quaternion, parse_sign, parse_surface, run_transport, trace_csv};
use spinor_cli::{CliError, CliResult};
use spinor_core::Variant;

#[derive(Parser)]
#[command(name = "spinor", version, about = "Build and check real spinor modules for Clifford algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build the spinor module for a signature and write it as JSON.
    Generate {
        /// Signature as r,s (r generators square to +1, s to -1).
        #[arg(long, allow_hyphen_values = true)]
        sig: String,
        #[arg(long, default_value = "recipe")]
        family: String,
        #[arg(long, default_value = "plus")]
        variant: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Re-check a generated file.
    Verify {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Print module dimensions and intertwiner algebras for n = 1..max-n.
    Classify {
        #[arg(long, default_value_t = 16)]
        max_n: usize,
    },
    /// Parallel-transport a frame and spinor along a curve and write CSV.
    Transport {
        #[arg(long, default_value = "unit-sphere")]
        surface: String,
        #[arg(long, default_value = "great-circle")]
        curve: String,
        #[arg(long, default_value = "0,1,0,0", allow_hyphen_values = true)]
        q0: String,
        #[arg(long, default_value_t = 10_000)]
        steps: usize,
        #[arg(long, default_value = "plus", allow_hyphen_values = true)]
        sign: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn parse_variant(s: &str) -> CliResult<Variant> {
    match s {
        "plus" => Ok(Variant::Plus),
        "minus" => Ok(Variant::Minus),
        _ => Err(CliError::Input(format!("unknown variant {s:?}; expected plus or minus"))),
    }
}

fn emit(out: Option<&Path>, text: &str) -> CliResult<()> {
    match out {
        Some(path) => fs::write(path, text).map_err(|source| CliError::Io { path: path.to_path_buf(), source }),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes()).map_err(|source| CliError::Io { path: PathBuf::from("<stdout>"), source })
        }
    }
}

fn run(cli: Cli) -> CliResult<i32> {
    match cli.command {
        Command::Generate { sig, family, variant, out } => {
            let (r, s) = commands::parse_signature(&sig)?;
            let json = commands::generate(r, s, family.parse::<GenFamily>()?, parse_variant(&variant)?)?;
            emit(out.as_deref(), &json)?;
            Ok(0)
        }
        Command::Verify { input } => {
            let text = fs::read_to_string(&input).map_err(|source| CliError::Io { path: input.clone(), source })?;
            let report = commands::verify(&text)?;
            print!("{}", report.render());
            Ok(if report.passed() { 0 } else { 1 })
        }
        Command::Classify { max_n } => {
            let rows = commands::classify_rows(max_n)?;
            print!("{}", commands::render_classify(&rows));
            Ok(if rows.iter().all(|r| r.matches()) { 0 } else { 1 })
        }
        Command::Transport { surface, curve, q0, steps, sign, out } => {
            let surface = parse_surface(&surface)?;
            let curve = parse_curve(&curve)?;
            let q0 = parse_quaternion(&q0)?;
            let sign = parse_sign(&sign)?;
            let trace = run_transport(surface.as_ref(), &curve, q0, sign, steps)?;
            emit(out.as_deref(), &trace_csv(&trace))?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

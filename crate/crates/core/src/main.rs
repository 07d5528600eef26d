use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use gvcat::cli::{self, catalog, Command, Options, Outcome, EXIT_FAIL, EXIT_PASS, EXIT_USAGE};
use gvcat::Result;

#[derive(Parser)]
#[command(name = "gvcat", version, about = "Exact checks for Grothendieck-Verdier and linearly distributive categories")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
    /// Seed for every randomized check.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Use a built-in catalog instead of a manifest file.
    #[arg(long, global = true)]
    catalog: Option<String>,
    /// Skip catalog objects of larger dimension.
    #[arg(long, global = true, default_value_t = 4)]
    max_dim: usize,
    /// Also write the report to this file.
    #[arg(long, global = true)]
    report: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Coherence, naturality, duality and pivotal suites on the catalog.
    Check { manifest: Option<PathBuf> },
    /// Ideal criterion, Frobenius instances, module round trips, F1 ⇒ F2.
    Frobenius { manifest: Option<PathBuf> },
    /// Rotation identities and the table of indicators.
    Indicators { manifest: Option<PathBuf> },
    /// Whatever the manifest's [run] section asks for.
    Run { manifest: Option<PathBuf> },
    /// Every built-in catalog and oracle.
    Selftest,
    /// List the built-in catalogs.
    Catalogs,
}

fn load(manifest: Option<PathBuf>, catalog_name: Option<String>) -> Result<(String, String)> {
    match (manifest, catalog_name) {
        (Some(_), Some(_)) => Err(gvcat::Error::Usage("give either a manifest or --catalog, not both".into())),
        (Some(path), None) => {
            let src = std::fs::read_to_string(&path)
                .map_err(|e| gvcat::Error::Usage(format!("cannot read {}: {e}", path.display())))?;
            let name = path.file_stem().map_or("manifest".into(), |s| s.to_string_lossy().into_owned());
            Ok((src, name))
        }
        (None, Some(name)) => Ok((catalog::source(&name)?.to_string(), name)),
        (None, None) => Err(gvcat::Error::Usage("a manifest path or --catalog is required".into())),
    }
}

fn execute(args: Cli) -> Result<Outcome> {
    let opts = Options { seed: args.seed, max_dim: args.max_dim };
    let (cmd, manifest) = match args.command {
        Cmd::Check { manifest } => (Command::Check, manifest),
        Cmd::Frobenius { manifest } => (Command::Frobenius, manifest),
        Cmd::Indicators { manifest } => (Command::Indicators, manifest),
        Cmd::Run { manifest } => (Command::Run, manifest),
        Cmd::Selftest => return cli::selftest(&opts),
        Cmd::Catalogs => return Ok(Outcome { text: catalog::names().join("\n") + "\n", passed: true }),
    };
    let (src, name) = load(manifest, args.catalog)?;
    cli::run_manifest(&src, &name, cmd, &opts)
}

fn main() -> ExitCode {
    let args = match Cli::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE as u8 } else { EXIT_PASS as u8 });
        }
    };
    let report = args.report.clone();
    let code = match execute(args) {
        Ok(out) => {
            print!("{}", out.text);
            if let Some(path) = report {
                if let Err(e) = std::fs::write(&path, &out.text) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(EXIT_USAGE as u8);
                }
            }
            out.exit_code()
        }
        Err(e) => {
            eprintln!("error: {e}");
            cli::exit_code(&e)
        }
    };
    debug_assert!(code <= EXIT_FAIL + 1);
    ExitCode::from(code as u8)
}

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{CommandFactory, Parser, Subcommand};
use workbench::config::{CheckParams, CheckSpec, SuiteConfig};
use workbench::export::ComponentJson;
use workbench::input::MatrixSource;
use workbench::registry::CHECKS;
use workbench::report::{summary_lines, write_report};
use workbench::{exit, run_suite, RunError};
use workbench_core::fusion::character_chi;

#[derive(Parser)]
#[command(
    name = "workbench",
    version,
    about = "Exact checks of Yang R-matrix, fusion and reflection-equation identities"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args, Clone, Debug, Default)]
struct ParamArgs {
    #[arg(long)]
    n: Option<usize>,
    /// Form g: `identity`, `symplectic` or a matrix file.
    #[arg(long)]
    g: Option<String>,
    /// Constant X: `identity`, `symplectic` or a matrix file.
    #[arg(long)]
    x: Option<String>,
    /// Truncation order.
    #[arg(long = "K")]
    order: Option<u32>,
    #[arg(long)]
    kmax: Option<usize>,
    /// Mode level.
    #[arg(long)]
    level: Option<u32>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    i: Option<usize>,
}

impl From<ParamArgs> for CheckParams {
    fn from(a: ParamArgs) -> Self {
        CheckParams { n: a.n, g: a.g, x: a.x, order: a.order, kmax: a.kmax, level: a.level, k: a.k, m: a.m, i: a.i }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Run one named check.
    Check {
        name: String,
        #[command(flatten)]
        params: ParamArgs,
        /// Report file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the checks listed in a config file.
    Suite {
        #[arg(long)]
        config: PathBuf,
        /// Report file; overrides the config's output path.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List the available checks.
    List,
    /// Print a built-in suite as a config file.
    DefaultSuite {
        /// The full suite, with the negative controls, instead of the
        /// acceptance suite.
        #[arg(long)]
        full: bool,
    },
    /// Write the k-th fused character component of X as JSON.
    Export {
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long, default_value = "identity")]
        g: String,
        #[arg(long, default_value = "identity")]
        x: String,
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn usage_error(e: &RunError) -> ExitCode {
    eprintln!("error: {e}");
    if matches!(e, RunError::UnknownCheck(_)) {
        eprintln!("\n{}", Cli::command().render_usage());
        eprintln!("available checks: {}", CHECKS.iter().map(|c| c.name).collect::<Vec<_>>().join(", "));
    }
    ExitCode::from(exit::USAGE as u8)
}

fn run(cfg: &SuiteConfig, out: Option<&Path>) -> Result<bool, RunError> {
    let outcome = run_suite(cfg)?;
    print!("{}", summary_lines(&outcome.reports));
    if let Some(path) = out.or(cfg.output.as_deref()) {
        write_report(path, &outcome.reports, outcome.total)?;
    }
    Ok(outcome.all_passed())
}

fn export(n: usize, g: &str, x: &str, k: usize, out: Option<&Path>) -> Result<(), RunError> {
    let core = |source| RunError::Core { check: "export".into(), source };
    let t = MatrixSource::parse(g, None).transposition(n, "export")?;
    let xm = MatrixSource::parse(x, None).matrix(n, "export")?;
    let op = character_chi(&xm, &t, k).map_err(core)?;
    let text = ComponentJson::from_op(k, &op).to_json();
    match out {
        Some(p) => std::fs::write(p, text).map_err(|source| RunError::Write { path: p.to_path_buf(), source }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { exit::USAGE as u8 } else { exit::PASS as u8 });
        }
    };
    let result = match cli.command {
        Command::Check { name, params, out } => {
            let cfg = SuiteConfig { checks: vec![CheckSpec::new(&name, params.into())], ..SuiteConfig::default() };
            cfg.validate().and_then(|_| run(&cfg, out.as_deref()))
        }
        Command::Suite { config, out } => SuiteConfig::load(&config).and_then(|cfg| run(&cfg, out.as_deref())),
        Command::List => {
            for c in CHECKS {
                println!("{:<26} {}", c.name, c.about);
            }
            Ok(true)
        }
        Command::DefaultSuite { full } => {
            let cfg = if full { SuiteConfig::full() } else { SuiteConfig::acceptance() };
            print!("{}", cfg.to_json());
            println!();
            Ok(true)
        }
        Command::Export { n, g, x, k, out } => export(n, &g, &x, k, out.as_deref()).map(|_| true),
    };
    match result {
        Ok(true) => ExitCode::from(exit::PASS as u8),
        Ok(false) => ExitCode::from(exit::FAIL as u8),
        Err(e) => usage_error(&e),
    }
}

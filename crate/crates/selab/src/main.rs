//! Thin batch front end: run a script file or one of the built-in
//! suites over the group catalog.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;

use selab::catalog::{Catalog, DEFAULT_CATALOG_CAP};
use selab::error::Error;
use selab::report::reports_to_json;
use selab::script::{parse_script, run_script, RunOptions};
use selab::suite::{run_suite, Selector, SuiteConfig};

#[derive(Parser)]
#[command(
    name = "selab",
    about = "Exact finite-group computations: subgroup lattices, actions, split extensions and their cores",
    after_help = "Exit codes: 0 success, 1 a check failed, 2 usage or parse error, 3 capacity abort under --strict."
)]
struct Cli {
    /// Script file to execute.
    script: Option<PathBuf>,

    /// Run a built-in suite over the catalog: all, cores, theorems, omega.
    #[arg(long, value_name = "NAME")]
    suite: Option<String>,

    /// Override the per-criterion order caps (mirrored by SELAB_MAX_ORDER;
    /// the flag wins).
    #[arg(long, value_name = "N")]
    max_order: Option<usize>,

    /// Seed for the sampled sides of family checks (decimal or 0x-hex).
    #[arg(long, value_name = "SEED", default_value = "0xC0FFEE")]
    seed: String,

    /// Enable the expensive terminality and adjunction scans.
    #[arg(long)]
    verify: bool,

    /// Write all reports to this path as a single JSON document.
    #[arg(long, value_name = "PATH")]
    json: Option<PathBuf>,

    /// Treat capacity skips as an abort (exit 3).
    #[arg(long)]
    strict: bool,

    /// Load the catalog from a manifest instead of the built-in corpus.
    #[arg(long, value_name = "PATH")]
    catalog: Option<PathBuf>,
}

fn parse_seed(text: &str) -> Result<u64, Error> {
    let text = text.trim();
    match text.strip_prefix("0x").or_else(|| text.strip_prefix("0X")) {
        Some(hex) => u64::from_str_radix(hex, 16),
        None => text.parse(),
    }
    .map_err(|_| Error::input(format!("bad seed `{text}`")))
}

fn effective_max_order(cli: &Cli) -> Result<Option<usize>, Error> {
    if cli.max_order.is_some() {
        return Ok(cli.max_order);
    }
    match std::env::var("SELAB_MAX_ORDER") {
        Ok(text) => text
            .parse()
            .map(Some)
            .map_err(|_| Error::input(format!("bad SELAB_MAX_ORDER `{text}`"))),
        Err(_) => Ok(None),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            let code = match &e {
                Error::Capacity { .. } if cli.strict => 3,
                _ => 2,
            };
            ExitCode::from(code)
        }
    }
}

fn run(cli: &Cli) -> Result<u8, Error> {
    let seed = parse_seed(&cli.seed)?;
    let max_order = effective_max_order(cli)?;

    if let Some(suite_name) = &cli.suite {
        let selector: Selector = suite_name.parse()?;
        let catalog = match &cli.catalog {
            Some(path) => Catalog::load(path)?,
            None => Catalog::built_in(max_order.unwrap_or(DEFAULT_CATALOG_CAP).min(DEFAULT_CATALOG_CAP))?,
        };
        let config = SuiteConfig { selector, max_order, seed, verify: cli.verify };
        let mut stdout = std::io::stdout().lock();
        let outcome = run_suite(&catalog, &config, &mut stdout)?;
        if let Some(path) = &cli.json {
            std::fs::write(path, reports_to_json(&outcome.reports))?;
        }
        let skips = outcome
            .reports
            .iter()
            .filter(|r| r.verdict == selab::report::Verdict::SkippedCapacity)
            .count();
        if outcome.exit_code == 0 && cli.strict && skips > 0 {
            return Ok(3);
        }
        return Ok(outcome.exit_code as u8);
    }

    if let Some(path) = &cli.script {
        let text = std::fs::read_to_string(path)?;
        let script = parse_script(&text)?;
        let options = RunOptions { seed, verify: cli.verify, max_order };
        let outcome = run_script(&script, &options)?;
        for line in &outcome.lines {
            println!("{line}");
        }
        if let Some(json_path) = &cli.json {
            std::fs::write(json_path, reports_to_json(&outcome.reports))?;
        }
        let failed = outcome
            .reports
            .iter()
            .any(|r| r.verdict == selab::report::Verdict::Fails);
        return Ok(if failed { 1 } else { 0 });
    }

    Err(Error::input("nothing to do: pass a script file or --suite NAME"))
}

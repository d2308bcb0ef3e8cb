//! Command-line entry point: generate / render / run / score / report.
//!
//! Exit codes: 0 success, 1 partial failures during a run, 2 invalid
//! input.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use stepbench::harness::BackendKind;
use stepbench::prompt::PromptMode;
use stepbench::suite::{self, SuiteManifest};

#[derive(Parser)]
#[command(
    name = "stepbench",
    about = "Benchmark compiler and scoring harness for natural-language step programs",
    long_about = None,
    after_help = MANIFEST_HELP
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

const MANIFEST_HELP: &str = "\
Manifest schema (TOML):
  master_seed = 7                 # suite master seed (u64)
  tasks = [\"all\"]                 # task ids or groups: all, clrs_mini, clrs_numeric
  modes = [\"nl\", \"code\"]          # prompt modes
  instances_per_task = 10
  output_dir = \"out\"
  templates_dir = \"templates\"     # optional override

  [backend]
  kind = \"oracle-echo\"            # http | replay | oracle-echo | mutator
  model_name = \"oracle-echo\"
  temperature = 0.0               # anything else is refused
  endpoint_url = \"\"               # http only (chat-completions style)
  request_timeout_secs = 120
  max_parallel = 4
  cache_dir = \"cache\"             # response cache (http), source (replay)

HTTP credentials come from the STEPBENCH_API_KEY environment variable.";

#[derive(Args)]
struct ManifestArgs {
    /// Manifest file (TOML).
    #[arg(long)]
    manifest: PathBuf,
    /// Override the manifest's master seed.
    #[arg(long)]
    master_seed: Option<u64>,
    /// Override the instance count per task.
    #[arg(long)]
    instances_per_task: Option<usize>,
    /// Override the task selection (comma-separated ids or groups).
    #[arg(long, value_delimiter = ',')]
    tasks: Option<Vec<String>>,
    /// Override the mode selection.
    #[arg(long, value_delimiter = ',')]
    modes: Option<Vec<String>>,
    /// Override the backend kind.
    #[arg(long)]
    backend: Option<String>,
    /// Override the output directory.
    #[arg(long)]
    output_dir: Option<PathBuf>,
}

impl ManifestArgs {
    fn load(&self) -> stepbench::error::Result<SuiteManifest> {
        let mut manifest = SuiteManifest::load(&self.manifest)?;
        if let Some(seed) = self.master_seed {
            manifest.master_seed = seed;
        }
        if let Some(n) = self.instances_per_task {
            manifest.instances_per_task = n;
        }
        if let Some(tasks) = &self.tasks {
            manifest.tasks = tasks.clone();
        }
        if let Some(modes) = &self.modes {
            manifest.modes = modes.clone();
        }
        if let Some(kind) = &self.backend {
            manifest.backend.kind = match kind.as_str() {
                "http" => BackendKind::Http,
                "replay" => BackendKind::Replay,
                "oracle-echo" => BackendKind::OracleEcho,
                "mutator" => BackendKind::Mutator,
                other => {
                    return Err(stepbench::Error::BadManifest(format!(
                        "unknown backend kind `{other}`"
                    )))
                }
            };
        }
        if let Some(dir) = &self.output_dir {
            manifest.output_dir = dir.clone();
        }
        manifest.validate()?;
        Ok(manifest)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Sample instances and write instances.jsonl with gold answers and
    /// traces.
    Generate(ManifestArgs),
    /// Render prompts and write prompts.jsonl.
    Render {
        #[command(flatten)]
        manifest: ManifestArgs,
        /// Render a single mode instead of the manifest's modes.
        #[arg(long)]
        mode: Option<String>,
    },
    /// Submit the suite to the configured backend and persist run records.
    Run(ManifestArgs),
    /// Score the records in a run directory and write score.json /
    /// score.txt.
    Score {
        /// Directory containing records.jsonl.
        #[arg(long)]
        run_dir: PathBuf,
    },
    /// Merge score.json files into a side-by-side comparison table.
    Report {
        /// score.json files (one or more).
        files: Vec<PathBuf>,
        /// Write the table here instead of stdout.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// List the registered tasks.
    Tasks,
}

fn main() -> ExitCode {
    match dispatch() {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn dispatch() -> stepbench::error::Result<ExitCode> {
    match Cli::parse().command {
        Command::Generate(args) => {
            let manifest = args.load()?;
            let count = suite::generate(&manifest)?;
            println!(
                "wrote {count} instances to {}",
                manifest.instances_path().display()
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Render { manifest, mode } => {
            let manifest_data = manifest.load()?;
            let only = mode.as_deref().map(PromptMode::parse).transpose()?;
            let count = suite::render(&manifest_data, only)?;
            println!(
                "wrote {count} prompts to {}",
                manifest_data.prompts_path().display()
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Run(args) => {
            let manifest = args.load()?;
            let outcome = suite::run(&manifest)?;
            println!(
                "{} records ({} resumed from disk), {} failures",
                outcome.records.len(),
                outcome.skipped_existing,
                outcome.failures.len()
            );
            if outcome.failures.is_empty() {
                Ok(ExitCode::SUCCESS)
            } else {
                for failure in &outcome.failures {
                    eprintln!(
                        "failed: {} {} seed {}: {}",
                        failure.task_id, failure.mode, failure.seed, failure.error
                    );
                }
                Ok(ExitCode::from(1))
            }
        }
        Command::Score { run_dir } => {
            let report = suite::score_run_dir(&run_dir)?;
            suite::write_score(&run_dir, &report)?;
            print!("{}", report.to_table());
            Ok(ExitCode::SUCCESS)
        }
        Command::Report { files, output } => {
            if files.is_empty() {
                return Err(stepbench::Error::ScoreInput("no score files given".into()));
            }
            let mut reports = Vec::new();
            for path in &files {
                let text = std::fs::read_to_string(path)?;
                reports.push(serde_json::from_str(&text)?);
            }
            let table = suite::comparison_table(&reports)?;
            match output {
                Some(path) => std::fs::write(path, table)?,
                None => print!("{table}"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Tasks => {
            for spec in stepbench::catalog::list_tasks() {
                println!(
                    "{:<30} {:<20} sizes {:?}{}",
                    spec.task_id.as_str(),
                    format!("{:?}", spec.family).to_lowercase(),
                    spec.sizes,
                    if spec.presorted { "  (presorted)" } else { "" }
                );
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

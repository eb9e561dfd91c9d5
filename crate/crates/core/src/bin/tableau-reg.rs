use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use tableau_reg::cli::{
    cmd_betti, cmd_compute, cmd_ferrers, cmd_random_check, MethodSelector, OutputFormat,
    RandomBounds, RunConfig, Verdict,
};
use tableau_reg::{Error, FieldChoice, Guards};

#[derive(Parser)]
#[command(name = "tableau-reg", version, about = "Depth and regularity of tableau ideals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Depth and regularity of the tableau in FILE.
    Compute {
        file: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Closed-form invariants of a Ferrers ideal, e.g. `4,4,3,2,1`.
    Ferrers {
        partition: String,
        #[arg(long)]
        json: bool,
    },
    /// Cross-check every method on seeded random tableaux.
    RandomCheck {
        #[arg(long, default_value_t = 50)]
        count: usize,
        #[arg(long, default_value_t = 3)]
        max_rows: usize,
        #[arg(long, default_value_t = 3)]
        max_cols: usize,
        #[arg(long, default_value_t = 3)]
        max_weight: u32,
        #[command(flatten)]
        common: Common,
    },
    /// Graded Betti table of the tableau ideal in FILE.
    Betti {
        file: PathBuf,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Args)]
struct Common {
    /// recursion | collections | oracle | degree-complex | associated-radical | all
    #[arg(long, default_value = "recursion")]
    method: MethodSelector,
    /// 2, 3 (any prime) or q
    #[arg(long, default_value = "2")]
    field: FieldChoice,
    #[arg(long)]
    json: bool,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long)]
    guard_max_boxes: Option<usize>,
    #[arg(long)]
    guard_max_ground: Option<usize>,
    #[arg(long)]
    guard_max_hochster_vars: Option<usize>,
    #[arg(long)]
    guard_max_generators: Option<usize>,
    #[arg(long)]
    guard_max_lattice: Option<usize>,
    #[arg(long)]
    guard_max_chains: Option<usize>,
    #[arg(long)]
    guard_max_grid: Option<usize>,
    #[arg(long)]
    guard_max_collections: Option<usize>,
}

impl Common {
    fn config(&self) -> RunConfig {
        let d = Guards::default();
        RunConfig {
            method: self.method,
            field: self.field,
            guards: Guards {
                max_boxes: self.guard_max_boxes.unwrap_or(d.max_boxes),
                max_ground: self.guard_max_ground.unwrap_or(d.max_ground),
                max_hochster_vars: self.guard_max_hochster_vars.unwrap_or(d.max_hochster_vars),
                max_generators: self.guard_max_generators.unwrap_or(d.max_generators),
                max_lattice: self.guard_max_lattice.unwrap_or(d.max_lattice),
                max_chains: self.guard_max_chains.unwrap_or(d.max_chains),
                max_grid: self.guard_max_grid.unwrap_or(d.max_grid),
                max_collections: self.guard_max_collections.unwrap_or(d.max_collections),
            },
            output: if self.json { OutputFormat::Json } else { OutputFormat::Text },
            seed: self.seed,
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Compute { file, common } => {
            let config = common.config();
            let report = cmd_compute(&file, &config)?;
            match config.output {
                OutputFormat::Json => println!("{}", report.to_json()),
                OutputFormat::Text => print!("{}", report.to_text()),
            }
            if report.verdict == Verdict::Disagree {
                return Ok(ExitCode::from(3));
            }
        }
        Command::Ferrers { partition, json } => {
            let report = cmd_ferrers(&partition)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&report).expect("serializes"));
            } else {
                print!("{}", report.to_text());
            }
        }
        Command::RandomCheck {
            count,
            max_rows,
            max_cols,
            max_weight,
            common,
        } => {
            let bounds = RandomBounds {
                count,
                max_rows,
                max_cols,
                max_weight,
            };
            let config = common.config();
            let summary = cmd_random_check(&bounds, &config)?;
            match config.output {
                OutputFormat::Json => println!("{}", serde_json::to_string_pretty(&summary).expect("serializes")),
                OutputFormat::Text => println!("{}", summary.message()),
            }
            if summary.disagreement.is_some() {
                return Ok(ExitCode::from(3));
            }
        }
        Command::Betti { file, common } => {
            let config = common.config();
            let report = cmd_betti(&file, &config)?;
            match config.output {
                OutputFormat::Json => println!("{}", serde_json::to_string_pretty(&report).expect("serializes")),
                OutputFormat::Text => print!("{}", report.table),
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

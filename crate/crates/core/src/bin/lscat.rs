use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use lscat::bar_ss::InferenceOptions;
use lscat::fixtures::{validate, SpacePresentation};
use lscat::report::{exit_code, run, ReportOptions};
use lscat::space::Space;
use lscat::Error;

/// Mod-2 Lusternik-Schnirelmann invariants from a space presentation.
#[derive(Parser)]
#[command(name = "lscat", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(clap::Args)]
struct Common {
    /// Builtin name (spin9, toy-trunc-poly, unit) or path to a JSON fixture.
    space: String,
    /// Override the fixture's degree cap.
    #[arg(long)]
    degree_cap: Option<u32>,
    /// Candidate differentials allowed per unknown generator.
    #[arg(long, default_value_t = 1_000_000)]
    max_search_per_generator: u64,
}

impl Common {
    fn presentation(&self) -> Result<SpacePresentation, Error> {
        let sp = SpacePresentation::resolve(&self.space)?;
        Ok(match self.degree_cap {
            Some(cap) => sp.with_degree_cap(cap),
            None => sp,
        })
    }

    fn inference(&self) -> InferenceOptions {
        InferenceOptions { max_candidates_per_generator: self.max_search_per_generator }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Run the full pipeline and print the invariant report.
    Report {
        #[command(flatten)]
        common: Common,
        /// Heights m for which to print the P^m module report.
        #[arg(long, value_delimiter = ',')]
        truncate: Vec<u32>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Largest height searched for obstructions (default: degree cap).
        #[arg(long)]
        m_max: Option<u32>,
        /// Include wall-clock timings (makes output nondeterministic).
        #[arg(long)]
        timings: bool,
    },
    /// Check a fixture without running the spectral sequence.
    Validate {
        space: String,
    },
    /// Print one page of the spectral sequence as JSON.
    DumpPage {
        #[command(flatten)]
        common: Common,
        /// Page index r >= 2.
        #[arg(long, short)]
        r: u32,
        /// Restrict to columns s <= m.
        #[arg(long)]
        truncate: Option<u32>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e) as u8)
        }
    }
}

fn execute(command: Command) -> Result<u8, Error> {
    match command {
        Command::Report { common, truncate, format, m_max, timings } => {
            let options = ReportOptions {
                degree_cap: None,
                truncate,
                inference: common.inference(),
                m_max,
                timings,
            };
            let report = run(common.presentation()?, &options)?;
            match format {
                Format::Text => print!("{}", report.to_text()),
                Format::Json => print!("{}", report.to_json()),
            }
            Ok(0)
        }
        Command::Validate { space } => {
            let sp = SpacePresentation::resolve(&space).map_err(|e| match e {
                Error::Json(j) => Error::Validation(format!("schema: {j}")),
                other => other,
            })?;
            let report = validate(&sp);
            for w in &report.warnings {
                println!("warning: {w}");
            }
            if report.passed() {
                println!("{}: ok", sp.name);
                Ok(0)
            } else {
                for f in &report.failures {
                    println!("fail: {f}");
                }
                Ok(3)
            }
        }
        Command::DumpPage { common, r, truncate } => {
            let space = Space::build(common.presentation()?, &common.inference())?;
            let page = space.dump_page(r, truncate)?;
            println!("{}", serde_json::to_string_pretty(&page)?);
            Ok(0)
        }
    }
}

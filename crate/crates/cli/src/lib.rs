//! Command-line front end: argument parsing, dispatch and report output.

pub mod commands;
pub mod report;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use embedcheck_core::Caps;
use embedcheck_verify::theorems::{Mode, TheoremId};

use crate::commands::{parse_caps, CliError, CliResult};
use crate::report::{error_report, render_json, Report};

/// Environment variable holding default caps in `--caps` syntax.
pub const CAPS_ENV: &str = "EMBEDCHECK_CAPS";

#[derive(Debug, Parser)]
#[command(name = "embedcheck", version, about = "Subgroup embedding properties of finite permutation groups")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Global {
    /// Emit the canonical JSON report instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Write the report to a file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,
    /// Size caps, e.g. `elem=20000,lattice=400`.
    #[arg(long, global = true, value_name = "SPEC")]
    pub caps: Option<String>,
    /// Worker threads for per-group tasks.
    #[arg(long, global = true, value_name = "J")]
    pub jobs: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Orders, Sylow subgroups, characteristic subgroups and class predicates.
    Analyze {
        #[arg(long)]
        group: String,
    },
    /// One embedding property of a subgroup, with its witness.
    Check {
        #[arg(long)]
        group: String,
        #[arg(long)]
        subgroup: String,
        #[arg(long)]
        property: String,
    },
    /// All embedding properties of a subgroup.
    Vector {
        #[arg(long)]
        group: String,
        #[arg(long)]
        subgroup: String,
    },
    /// Reproduce the worked example fixtures.
    Examples {
        #[arg(long)]
        id: Option<String>,
    },
    /// Run one lemma suite, one theorem, or the implication lattice over the corpus.
    Verify(VerifyArgs),
    /// Run every theorem over the corpus.
    Scan {
        #[arg(long, default_value_t = 60)]
        max_order: u64,
        /// Test one Sylow representative per prime instead of every conjugate.
        #[arg(long)]
        fast: bool,
    },
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, conflicts_with_all = ["theorem", "implications"])]
    pub lemma: Option<String>,
    #[arg(long, conflicts_with = "implications")]
    pub theorem: Option<String>,
    #[arg(long)]
    pub implications: bool,
    #[arg(long)]
    pub p: Option<u64>,
    #[arg(long)]
    pub n: Option<u32>,
    #[arg(long, default_value_t = 60)]
    pub max_order: u64,
    #[arg(long)]
    pub fast: bool,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Analyze { .. } => "analyze",
            Command::Check { .. } => "check",
            Command::Vector { .. } => "vector",
            Command::Examples { .. } => "examples",
            Command::Verify(_) => "verify",
            Command::Scan { .. } => "scan",
        }
    }
}

fn mode(fast: bool) -> Mode {
    if fast {
        Mode::Fast
    } else {
        Mode::Full
    }
}

/// Caps from `--caps`, else from the environment, else the defaults.
pub fn resolve_caps(flag: Option<&str>) -> CliResult<Caps> {
    match flag {
        Some(s) => parse_caps(s),
        None => match std::env::var(CAPS_ENV) {
            Ok(s) => parse_caps(&s),
            Err(_) => Ok(Caps::default()),
        },
    }
}

pub fn execute(command: &Command, caps: Caps) -> CliResult<Report> {
    match command {
        Command::Analyze { group } => commands::analyze(group, caps),
        Command::Check { group, subgroup, property } => commands::check(group, subgroup, property, caps),
        Command::Vector { group, subgroup } => commands::vector(group, subgroup, caps),
        Command::Examples { id } => commands::examples(id.as_deref(), caps),
        Command::Verify(v) => {
            let max = v.max_order as u128;
            if let Some(id) = &v.lemma {
                commands::verify_lemma(id, max, caps)
            } else if let Some(name) = &v.theorem {
                let thm = TheoremId::from_parts(name, v.p, v.n).map_err(CliError::usage)?;
                commands::verify_theorem(thm, max, mode(v.fast), caps)
            } else if v.implications {
                commands::verify_implications(max, caps)
            } else {
                Err(CliError::usage("verify needs --lemma, --theorem or --implications"))
            }
        }
        Command::Scan { max_order, fast } => commands::scan(*max_order as u128, mode(*fast), caps),
    }
}

/// Rendered output and exit status of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub status: i32,
    pub output: String,
    /// Destination from `--out`; stdout when absent.
    pub out: Option<PathBuf>,
}

pub fn run(cli: &Cli) -> Outcome {
    let json = cli.global.json;
    let command = cli.command.name();
    let result = resolve_caps(cli.global.caps.as_deref()).and_then(|caps| {
        let work = || execute(&cli.command, caps);
        match cli.global.jobs {
            Some(j) => rayon::ThreadPoolBuilder::new()
                .num_threads(j.max(1))
                .build()
                .map_err(|e| CliError::usage(e.to_string()))?
                .install(work),
            None => work(),
        }
    });
    let out = cli.global.out.clone();
    match result {
        Ok(report) => Outcome {
            status: if report.ok { 0 } else { 1 },
            output: if json { render_json(&report.to_json()) } else { report.to_text() },
            out,
        },
        Err(e) => Outcome {
            status: 2,
            output: if json {
                render_json(&error_report(command, &e.code, &e.message))
            } else {
                format!("error[{}]: {}\n", e.code, e.message)
            },
            out,
        },
    }
}

/// Parses `args` (program name first) and runs the command. Clap usage
/// errors become status 2, `--help` and `--version` status 0.
pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args: Vec<std::ffi::OsString> = args.into_iter().map(Into::into).collect();
    match Cli::try_parse_from(&args) {
        Ok(cli) => run(&cli),
        Err(e) => {
            let status = if e.use_stderr() { 2 } else { 0 };
            let json = args.iter().any(|a| a == "--json");
            let output = if json && status == 2 {
                render_json(&error_report("usage", "usage", e.to_string().trim()))
            } else {
                e.to_string()
            };
            Outcome { status, output, out: None }
        }
    }
}

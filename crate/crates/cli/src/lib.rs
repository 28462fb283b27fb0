//! Command-line front end: argument handling, inspection commands and
//! report output.

pub mod groupspec;
pub mod jobs;
pub mod render;

use std::ffi::OsString;
use std::fs;

use blockweights::verify::{Verdict, VerificationReport};
use blockweights::Caps;
use clap::{Args, Parser, Subcommand};
use thiserror::Error;

use jobs::{GroupInput, Job, Statement};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] blockweights::Error),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_UNEQUAL: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "blockweights", version, about = "p-blocks, Brauer characters, weights and counting checks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub opts: Opts,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Ordinary character table
    Table,
    /// p-blocks with defects and members
    Blocks,
    /// Irreducible Brauer characters
    Ibr,
    /// Weights up to conjugacy
    Weights,
    /// Run one counting check
    Verify {
        #[arg(value_enum)]
        statement: Statement,
    },
    /// Run a suite of checks
    Battery,
}

#[derive(Debug, Args)]
pub struct Opts {
    /// Group: catalog name, cycle notation "(1,2,3);(1,2)", or file:PATH
    #[arg(long, global = true)]
    pub group: Option<String>,
    /// Overgroup Γ for the overgroup statements
    #[arg(long, global = true)]
    pub overgroup: Option<String>,
    /// Normal subgroup of the overgroup: cycle notation or gens:i,j
    #[arg(long, global = true)]
    pub normal_subgroup: Option<String>,
    /// Primes, comma separated
    #[arg(long, global = true, value_delimiter = ',')]
    pub prime: Vec<u64>,
    /// Write the JSON report here
    #[arg(long, global = true)]
    pub json: Option<String>,
    #[arg(long, global = true, default_value_t = 1)]
    pub seed: u64,
    #[arg(long, global = true)]
    pub cap_order: Option<u64>,
    #[arg(long, global = true)]
    pub cap_dim: Option<usize>,
    /// Treat SKIPPED verdicts as success
    #[arg(long, global = true)]
    pub allow_skip: bool,
    /// Battery suite name
    #[arg(long, global = true, default_value = "default")]
    pub suite: String,
    /// Record wall-clock time per report
    #[arg(long, global = true)]
    pub timing: bool,
}

impl Opts {
    fn caps(&self) -> Caps {
        let mut caps = Caps::default();
        if let Some(o) = self.cap_order {
            caps.order = o;
        }
        if let Some(d) = self.cap_dim {
            caps.dim = d;
        }
        caps
    }

    fn primes(&self) -> Result<Vec<u64>, CliError> {
        if self.prime.is_empty() {
            return Err(CliError::Usage("missing --prime (for example --prime 2 or --prime 2,3,5)".into()));
        }
        Ok(self.prime.clone())
    }

    fn single_group(&self) -> Result<GroupInput, CliError> {
        let spec = self
            .group
            .as_deref()
            .or(self.overgroup.as_deref())
            .ok_or_else(|| CliError::Usage("missing --group".into()))?;
        GroupInput::parse(spec)
    }
}

/// Parses `argv` (program name first), runs it and returns the exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_INPUT
        }
    }
}

fn execute(cli: &Cli) -> Result<i32, CliError> {
    let o = &cli.opts;
    let caps = o.caps();
    let (command, reports) = match &cli.command {
        Command::Table => return inspect(cli, render::table),
        Command::Blocks => return inspect(cli, render::blocks),
        Command::Ibr => return inspect(cli, render::ibr),
        Command::Weights => return inspect(cli, render::weights),
        Command::Verify { statement } => {
            let jobs = verify_jobs(o, *statement)?;
            (format!("verify {}", statement.id()), jobs::run_all(&jobs, caps, o.seed, o.timing)?)
        }
        Command::Battery => {
            let primes = if o.prime.is_empty() { vec![2, 3, 5] } else { o.prime.clone() };
            let jobs = jobs::battery(&o.suite, &primes)?;
            (format!("battery {}", o.suite), jobs::run_all(&jobs, caps, o.seed, o.timing)?)
        }
    };
    print!("{}", render::human_reports(&reports));
    if let Some(path) = &o.json {
        let doc = render::reports_document(&command, &reports)?;
        fs::write(path, doc).map_err(|source| CliError::Io { path: path.clone(), source })?;
    }
    Ok(exit_code(&reports, o.allow_skip))
}

pub fn exit_code(reports: &[VerificationReport], allow_skip: bool) -> i32 {
    if reports.iter().any(|r| r.verdict == Verdict::Unequal) {
        EXIT_UNEQUAL
    } else if !allow_skip && reports.iter().any(|r| matches!(r.verdict, Verdict::Skipped(_))) {
        EXIT_INPUT
    } else {
        EXIT_OK
    }
}

fn verify_jobs(o: &Opts, statement: Statement) -> Result<Vec<Job>, CliError> {
    let primes = o.primes()?;
    let (top, sub) = match (&o.overgroup, &o.group) {
        (Some(over), group) => {
            let top = GroupInput::parse(over)?;
            let selector = o.normal_subgroup.as_deref().or(group.as_deref());
            let sub = match selector {
                Some(spec) => Some(GroupInput {
                    label: spec.trim().into(),
                    gens: groupspec::parse_selector(spec, &top.gens).or_else(|e| match e {
                        // a catalog name for G is accepted when it lives on the same points
                        CliError::Usage(_) | CliError::Parse { .. } => groupspec::parse_group(spec),
                        other => Err(other),
                    })?,
                }),
                None => None,
            };
            (top, sub)
        }
        (None, Some(g)) => {
            if o.normal_subgroup.is_some() {
                return Err(CliError::Usage("--normal-subgroup needs --overgroup".into()));
            }
            (GroupInput::parse(g)?, None)
        }
        (None, None) => return Err(CliError::Usage("missing --group or --overgroup".into())),
    };
    if statement == Statement::Dgn && sub.is_none() {
        return Err(CliError::Usage("verify dgn needs --overgroup and --normal-subgroup".into()));
    }
    Ok(primes
        .into_iter()
        .map(|prime| Job { statement, top: top.clone(), sub: sub.clone(), prime })
        .collect())
}

fn inspect(
    cli: &Cli,
    f: fn(&GroupInput, Option<u64>, Caps, u64) -> Result<(String, serde_json::Value), CliError>,
) -> Result<i32, CliError> {
    let o = &cli.opts;
    let g = o.single_group()?;
    let primes: Vec<Option<u64>> =
        if matches!(cli.command, Command::Table) { vec![None] } else { o.primes()?.into_iter().map(Some).collect() };
    let mut docs = Vec::new();
    for p in primes {
        let (text, value) = f(&g, p, o.caps(), o.seed)?;
        print!("{text}");
        docs.push(value);
    }
    if let Some(path) = &o.json {
        let doc = render::to_json(&serde_json::Value::Array(docs))?;
        fs::write(path, doc).map_err(|source| CliError::Io { path: path.clone(), source })?;
    }
    Ok(EXIT_OK)
}

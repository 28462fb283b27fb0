//! Verification jobs and the battery suites.

use std::time::Instant;

use blockweights::groups::{GroupHandle, Perm};
use blockweights::verify::{self, GroupDesc, Verdict, VerificationReport, SCHEMA_VERSION};
use blockweights::{Caps, Context, Error};
use clap::ValueEnum;
use rayon::prelude::*;

use crate::groupspec::{parse_cycles, parse_group};
use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
pub enum Statement {
    /// blockwise weight counts, optionally with orbit sizes under --overgroup
    Awc,
    /// Γ-fixed Brauer characters against the Θ_B sum (Γ/G a p-group)
    Navarro,
    /// extensions to Γ against local extensions (any Γ)
    Extended,
    /// Γ-fixed Brauer characters against weights of Γ over B
    Navset,
    /// invariant characters of a p'-group K against complements
    Dgn,
    /// alternating sum over p-chains
    Chains,
    /// linear twists of defect-zero characters
    Twist,
}

impl Statement {
    pub fn id(self) -> &'static str {
        match self {
            Statement::Awc => "awc",
            Statement::Navarro => "navarro",
            Statement::Extended => "extended",
            Statement::Navset => "navset",
            Statement::Dgn => "dgn",
            Statement::Chains => "chains",
            Statement::Twist => "linear-twist",
        }
    }
}

#[derive(Debug, Clone)]
pub struct GroupInput {
    pub label: String,
    pub gens: Vec<Perm>,
}

impl GroupInput {
    pub fn parse(spec: &str) -> Result<Self, CliError> {
        Ok(GroupInput { label: spec.trim().to_string(), gens: parse_group(spec)? })
    }
}

/// One (statement, groups, prime) computation. `top` is the largest group;
/// `sub` is the normal subgroup for the overgroup statements.
#[derive(Debug, Clone)]
pub struct Job {
    pub statement: Statement,
    pub top: GroupInput,
    pub sub: Option<GroupInput>,
    pub prime: u64,
}

/// Errors that make a job SKIPPED rather than failing the run.
fn is_skip(e: &Error) -> bool {
    matches!(
        e,
        Error::CapExceeded(_)
            | Error::HypothesisViolated(_)
            | Error::QuotientNotPGroup(_)
            | Error::DefectZeroBlock
            | Error::BlockNotInvariant(_)
            | Error::NoInvariantExtension(_)
    )
}

pub fn run_job(job: &Job, caps: Caps, seed: u64, timing: bool) -> Result<VerificationReport, CliError> {
    let start = Instant::now();
    let degree = job.top.gens.first().map_or(1, Perm::degree);
    let top = GroupHandle::new(degree, &job.top.gens, &caps)?;
    let mut report = match compute(job, GroupHandle::new(degree, &job.top.gens, &caps)?, caps, seed) {
        Ok(r) => r,
        Err(CliError::Core(e)) if is_skip(&e) => skipped(job, &top, caps, seed, e.to_string())?,
        Err(e) => return Err(e),
    };
    match &job.sub {
        Some(sub) => {
            report.group.label = sub.label.clone();
            if let Some(o) = report.overgroup.as_mut() {
                o.label = job.top.label.clone();
            }
        }
        None => report.group.label = job.top.label.clone(),
    }
    if timing {
        report.wall_ms = Some(start.elapsed().as_millis() as u64);
    }
    Ok(report)
}

fn compute(job: &Job, top: GroupHandle, caps: Caps, seed: u64) -> Result<VerificationReport, CliError> {
    let ctx = Context::new(job.prime, &top, caps, seed)?;
    let top = ctx.intern(top);
    let sub = match &job.sub {
        Some(s) => {
            let sub = top.subgroup_from_perms(&s.gens)?;
            if !top.is_normal(&sub) {
                return Err(CliError::Usage(format!("`{}` is not normal in `{}`", s.label, job.top.label)));
            }
            Some(sub)
        }
        None => None,
    };
    let whole = top.whole();
    let g = sub.as_ref().unwrap_or(&whole);
    let report = match job.statement {
        Statement::Awc => match &sub {
            Some(s) => verify::verify_bawc(&ctx, &ctx.handle(&top, s)?, Some(&top))?,
            None => verify::verify_bawc(&ctx, &top, None)?,
        },
        Statement::Navarro => verify::verify_navarro_a(&ctx, &top, g)?,
        Statement::Extended => verify::verify_extended_e(&ctx, &top, g)?,
        Statement::Navset => verify::verify_nav_set_count(&ctx, &top, g)?,
        Statement::Dgn => {
            let k = sub.as_ref().ok_or_else(|| CliError::Usage("dgn needs --normal-subgroup K".into()))?;
            verify::verify_dgn_count(&ctx, &top, k)?
        }
        Statement::Chains => verify::verify_chains(&ctx, &top)?,
        Statement::Twist => verify::verify_linear_twist(&ctx, &top)?,
    };
    Ok(report)
}

fn skipped(job: &Job, top: &GroupHandle, caps: Caps, seed: u64, reason: String) -> Result<VerificationReport, CliError> {
    let (group, overgroup) = match &job.sub {
        Some(s) => {
            let degree = s.gens.first().map_or(top.degree(), Perm::degree);
            (GroupDesc::of(&GroupHandle::new(degree, &s.gens, &caps)?), Some(GroupDesc::of(top)))
        }
        None => (GroupDesc::of(top), None),
    };
    Ok(VerificationReport {
        schema_version: SCHEMA_VERSION,
        statement: job.statement.id().into(),
        group,
        overgroup,
        prime: job.prime,
        seed,
        caps,
        per_block: Vec::new(),
        notes: Vec::new(),
        verdict: Verdict::Skipped(reason),
        wall_ms: None,
    })
}

/// Runs jobs in parallel; the output keeps the input order.
pub fn run_all(jobs: &[Job], caps: Caps, seed: u64, timing: bool) -> Result<Vec<VerificationReport>, CliError> {
    jobs.par_iter().map(|j| run_job(j, caps, seed, timing)).collect::<Vec<_>>().into_iter().collect()
}

pub const BATTERY_GROUPS: [&str; 8] = ["cyclic:6", "sym:3", "sym:4", "alt:4", "alt:5", "dihedral:8", "quaternion:8", "sl:2:3"];

/// (overgroup, normal subgroup) pairs with a 2-group quotient.
pub const PAIR_BATTERY: [(&str, &str); 5] = [
    ("sym:3", "(1,2,3)"),
    ("dihedral:8", "(1,2)(3,4);(1,3)(2,4)"),
    ("cyclic:6", "(1,3,5)(2,4,6)"),
    ("sym:4", "(1,2,3);(2,3,4)"),
    ("(1,2,3);(4,5,6);(1,4)(2,5)(3,6)", "(1,2,3);(4,5,6)"),
];

/// (overgroup, p'-subgroup K, prime).
pub const DGN_BATTERY: [(&str, &str, u64); 4] = [
    ("sym:3", "(1,2,3)", 2),
    ("(1,2,3);(4,5,6);(1,4)(2,5)(3,6)", "(1,2,3);(4,5,6)", 2),
    ("dihedral:10", "(1,2,3,4,5)", 2),
    ("(1,2,3,4,5,6,7);(2,3,5)(4,7,6)", "(1,2,3,4,5,6,7)", 3),
];

fn sub_input(top: &GroupInput, spec: &str) -> Result<GroupInput, CliError> {
    let degree = top.gens.first().map_or(1, Perm::degree);
    Ok(GroupInput { label: spec.into(), gens: parse_cycles(spec, degree)? })
}

/// Jobs of a named suite, restricted to `primes`.
pub fn battery(suite: &str, primes: &[u64]) -> Result<Vec<Job>, CliError> {
    let groups: &[&str] = match suite {
        "default" => &BATTERY_GROUPS,
        "small" => &["sym:3", "cyclic:6"],
        other => return Err(CliError::Usage(format!("unknown suite `{other}` (expected default or small)"))),
    };
    let mut jobs = Vec::new();
    for &name in groups {
        let top = GroupInput::parse(name)?;
        let order = GroupHandle::new(top.gens[0].degree(), &top.gens, &Caps::default())?.order();
        for &p in primes.iter().filter(|&&p| order % p == 0) {
            for statement in [Statement::Awc, Statement::Chains, Statement::Twist] {
                if statement == Statement::Chains && p > 3 {
                    continue;
                }
                jobs.push(Job { statement, top: top.clone(), sub: None, prime: p });
            }
        }
    }
    if primes.contains(&2) {
        let pairs = if suite == "default" { &PAIR_BATTERY[..] } else { &PAIR_BATTERY[..1] };
        for &(over, normal) in pairs {
            let top = GroupInput::parse(over)?;
            let sub = sub_input(&top, normal)?;
            for statement in [Statement::Navarro, Statement::Extended, Statement::Navset] {
                jobs.push(Job { statement, top: top.clone(), sub: Some(sub.clone()), prime: 2 });
            }
        }
    }
    let dgn = if suite == "default" { &DGN_BATTERY[..] } else { &DGN_BATTERY[..1] };
    for &(over, k, p) in dgn.iter().filter(|c| primes.contains(&c.2)) {
        let top = GroupInput::parse(over)?;
        let sub = sub_input(&top, k)?;
        jobs.push(Job { statement: Statement::Dgn, top, sub: Some(sub), prime: p });
    }
    Ok(jobs)
}

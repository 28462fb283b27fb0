//! Acceptance criteria 1 to 10, each printed as one PASS/FAIL line.
//! Run with `cargo test -p blockweights-cli --test acceptance -- --nocapture`.

use std::process::Command;
use std::sync::Arc;
use std::time::{Duration, Instant};

use blockweights::blocks::is_algebra_homomorphism;
use blockweights::chartab::{character_table, class_constants};
use blockweights::groups::GroupHandle;
use blockweights::modrep::ibr_count_by_rank;
use blockweights::verify::{self, Verdict, VerificationReport};
use blockweights::{Caps, Context};
use blockweights_cli::groupspec::parse_cycles;
use blockweights_cli::jobs::{GroupInput, BATTERY_GROUPS, DGN_BATTERY, PAIR_BATTERY};

type Check = Result<(), String>;

fn handle(spec: &str) -> GroupHandle {
    let g = GroupInput::parse(spec).unwrap();
    GroupHandle::new(g.gens[0].degree(), &g.gens, &Caps::default()).unwrap()
}

fn context(spec: &str, p: u64) -> (Context, Arc<GroupHandle>) {
    let g = handle(spec);
    let ctx = Context::new(p, &g, Caps::default(), 1).unwrap();
    let g = ctx.intern(g);
    (ctx, g)
}

/// Battery (group, prime) pairs with p dividing |G|.
fn battery_pairs(primes: &[u64]) -> Vec<(&'static str, u64)> {
    let mut out = Vec::new();
    for name in BATTERY_GROUPS {
        let order = handle(name).order();
        out.extend(primes.iter().filter(|&&p| order.is_multiple_of(p)).map(|&p| (name, p)));
    }
    out
}

fn pair(over: &str, normal: &str, p: u64) -> (Context, Arc<GroupHandle>, blockweights::groups::Subgroup) {
    let (ctx, top) = context(over, p);
    let gens = parse_cycles(normal, top.degree()).unwrap();
    let sub = top.subgroup_from_perms(&gens).unwrap();
    (ctx, top, sub)
}

fn all_equal(r: &VerificationReport, what: &str) -> Check {
    if r.verdict != Verdict::Equal {
        return Err(format!("{what}: {}", r.verdict.label()));
    }
    if let Some(e) = r.per_block.iter().find(|e| e.verdict != Verdict::Equal) {
        return Err(format!("{what} {}: {} vs {}", e.block_id, e.lhs, e.rhs));
    }
    Ok(())
}

fn counts(r: &VerificationReport) -> Vec<(u64, u64)> {
    r.per_block.iter().map(|e| (e.lhs, e.rhs)).collect()
}

fn table_axioms() -> Check {
    let start = Instant::now();
    for name in BATTERY_GROUPS {
        let t = character_table(&handle(name)).map_err(|e| format!("{name}: {e}"))?;
        t.verify().map_err(|e| format!("{name}: {e}"))?;
        let sumsq: u64 = t.degrees.iter().map(|d| d * d).sum();
        if sumsq != t.order {
            return Err(format!("{name}: degree squares {sumsq} vs {}", t.order));
        }
    }
    let took = start.elapsed();
    if took >= Duration::from_secs(30) {
        return Err(format!("took {took:?}"));
    }
    Ok(())
}

fn block_sanity() -> Check {
    for (name, p) in battery_pairs(&[2, 3, 5]) {
        let (ctx, g) = context(name, p);
        let t = character_table(&g).unwrap();
        let m = ctx.modular(&g).map_err(|e| format!("{name} p={p}: {e}"))?;
        let cc = class_constants(&g);
        let irr: usize = m.blocks.iter().map(|b| b.irr_members.len()).sum();
        let ibr: usize = m.blocks.iter().map(|b| b.ibr_members.len()).sum();
        if irr != t.num_chars() || ibr != t.p_regular_classes(p).len() {
            return Err(format!("{name} p={p}: Irr {irr}, IBr {ibr}"));
        }
        if let Some(b) = m.blocks.iter().find(|b| !is_algebra_homomorphism(&b.lambda, &cc, ctx.field())) {
            return Err(format!("{name} p={p}: central character of B{} is not multiplicative", b.index));
        }
    }
    Ok(())
}

fn dual_route() -> Check {
    for (name, p) in battery_pairs(&[2, 3, 5]) {
        let (ctx, g) = context(name, p);
        let t = character_table(&g).unwrap();
        let m = ctx.modular(&g).unwrap();
        for b in &m.blocks {
            let rank = ibr_count_by_rank(b, &t, p).map_err(|e| e.to_string())?;
            if rank != b.ibr_members.len() {
                return Err(format!("{name} p={p} B{}: rank {rank}, modules {}", b.index, b.ibr_members.len()));
            }
        }
    }
    Ok(())
}

fn blockwise_weights() -> Check {
    for (name, p) in battery_pairs(&[2, 3, 5]) {
        let (ctx, g) = context(name, p);
        let r = verify::verify_bawc(&ctx, &g, None).map_err(|e| e.to_string())?;
        all_equal(&r, &format!("{name} p={p}"))?;
    }
    let (ctx, g) = context("sym:3", 3);
    let got = counts(&verify::verify_bawc(&ctx, &g, None).unwrap());
    if got != [(2, 2)] {
        return Err(format!("S3 p=3 gives {got:?}"));
    }
    let (ctx, g) = context("sym:3", 2);
    let got = counts(&verify::verify_bawc(&ctx, &g, None).unwrap());
    if got != [(1, 1), (1, 1)] {
        return Err(format!("S3 p=2 gives {got:?}"));
    }
    Ok(())
}

fn fixed_point_count() -> Check {
    for (over, normal) in PAIR_BATTERY {
        let start = Instant::now();
        let (ctx, top, sub) = pair(over, normal, 2);
        let r = verify::verify_navarro_a(&ctx, &top, &sub).map_err(|e| format!("{over}: {e}"))?;
        all_equal(&r, over)?;
        if r.per_block.is_empty() {
            return Err(format!("{over}: no invariant block checked"));
        }
        let took = start.elapsed();
        if took >= Duration::from_secs(10) {
            return Err(format!("{over}: took {took:?}"));
        }
    }
    Ok(())
}

fn dgn_count() -> Check {
    for (over, k, p) in DGN_BATTERY {
        let (ctx, top, sub) = pair(over, k, p);
        let r = verify::verify_dgn_count(&ctx, &top, &sub).map_err(|e| format!("{over}: {e}"))?;
        all_equal(&r, over)?;
        if !r.per_block.iter().any(|e| e.block_id == "K:oracle") {
            return Err(format!("{over}: oracle comparison missing"));
        }
    }
    Ok(())
}

fn extended_degenerations() -> Check {
    for (over, normal) in PAIR_BATTERY {
        let (ctx, top, sub) = pair(over, normal, 2);
        let r = verify::verify_extended_e(&ctx, &top, &sub).map_err(|e| format!("{over}: {e}"))?;
        all_equal(&r, over)?;
        let has = |suffix: &str| r.per_block.iter().any(|e| e.block_id.ends_with(suffix));
        if !has(":fixed-points") || !has(":local") {
            return Err(format!("{over}: degeneration entries missing"));
        }
        let nav = verify::verify_navarro_a(&ctx, &top, &sub).unwrap();
        for e in r.per_block.iter().filter(|e| e.block_id.ends_with(":fixed-points")) {
            let base = e.block_id.trim_end_matches(":fixed-points");
            let n = nav.per_block.iter().find(|x| x.block_id == base);
            if n.is_some_and(|n| n.lhs != e.lhs) {
                return Err(format!("{over} {base}: fixed points differ from the navarro count"));
            }
        }
    }
    Ok(())
}

fn chain_balance() -> Check {
    for (name, p) in battery_pairs(&[2, 3]) {
        let (ctx, g) = context(name, p);
        let r = verify::verify_chains(&ctx, &g).map_err(|e| format!("{name} p={p}: {e}"))?;
        all_equal(&r, &format!("{name} p={p}"))?;
    }
    let (ctx, g) = context("sym:3", 3);
    let got = counts(&verify::verify_chains(&ctx, &g).unwrap());
    if got != [(2, 2)] {
        return Err(format!("S3 p=3 gives {got:?}"));
    }
    Ok(())
}

fn linear_twist() -> Check {
    for (name, p) in battery_pairs(&[2, 3, 5]) {
        let (ctx, g) = context(name, p);
        let r = verify::verify_linear_twist(&ctx, &g).map_err(|e| format!("{name} p={p}: {e}"))?;
        all_equal(&r, &format!("{name} p={p}"))?;
    }
    Ok(())
}

fn determinism() -> Check {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let mut docs = Vec::new();
    for i in 0..2 {
        let path = dir.path().join(format!("run{i}.json"));
        let status = Command::new(env!("CARGO_BIN_EXE_blockweights"))
            .args(["battery", "--suite", "default", "--seed", "1", "--json"])
            .arg(&path)
            .output()
            .map_err(|e| e.to_string())?
            .status;
        if !status.success() {
            return Err(format!("battery exited with {status}"));
        }
        docs.push(std::fs::read(&path).map_err(|e| e.to_string())?);
    }
    if docs[0].is_empty() || docs[0] != docs[1] {
        return Err("battery JSON differs between runs".into());
    }
    Ok(())
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn() -> Check); 10] = [
        ("character table axioms", table_axioms),
        ("block sanity", block_sanity),
        ("dual-route IBr counts", dual_route),
        ("blockwise weight counts", blockwise_weights),
        ("fixed Brauer characters vs local counts", fixed_point_count),
        ("DGN count and oracle", dgn_count),
        ("extended degenerations", extended_degenerations),
        ("chain balance", chain_balance),
        ("linear twist of defect zero", linear_twist),
        ("battery determinism", determinism),
    ];
    let mut failed = Vec::new();
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(()) => println!("criterion {:>2} PASS  {name}", i + 1),
            Err(why) => {
                println!("criterion {:>2} FAIL  {name}: {why}", i + 1);
                failed.push(i + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}

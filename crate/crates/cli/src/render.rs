//! Human-readable text and JSON documents.

use std::fmt::Write as _;

use blockweights::chartab::character_table;
use blockweights::groups::{GroupHandle, Perm};
use blockweights::verify::{VerificationReport, SCHEMA_VERSION};
use blockweights::weights::enumerate_weights;
use blockweights::{Caps, Context};
use serde_json::{json, Value};

use crate::jobs::GroupInput;
use crate::CliError;

/// Pretty JSON with sorted keys (serde_json's map is ordered).
pub fn to_json(v: &Value) -> Result<String, CliError> {
    let mut s = serde_json::to_string_pretty(v).map_err(|e| CliError::Usage(format!("json: {e}")))?;
    s.push('\n');
    Ok(s)
}

pub fn reports_document(command: &str, reports: &[VerificationReport]) -> Result<String, CliError> {
    let values: Vec<Value> = reports
        .iter()
        .map(|r| serde_json::to_value(r).map_err(|e| CliError::Usage(format!("json: {e}"))))
        .collect::<Result<_, _>>()?;
    for v in &values {
        validate_report(v)?;
    }
    to_json(&json!({ "schema_version": SCHEMA_VERSION, "command": command, "reports": values }))
}

/// Structural check of one serialized report against the schema.
pub fn validate_report(v: &Value) -> Result<(), CliError> {
    let bad = |what: &str| Err(CliError::Usage(format!("report fails schema: {what}")));
    let Some(obj) = v.as_object() else { return bad("not an object") };
    if obj.get("schema_version") != Some(&json!(SCHEMA_VERSION)) {
        return bad("schema_version");
    }
    for key in ["statement", "verdict"] {
        if !obj.get(key).is_some_and(Value::is_string) {
            return bad(key);
        }
    }
    for key in ["prime", "seed"] {
        if !obj.get(key).is_some_and(Value::is_u64) {
            return bad(key);
        }
    }
    for key in ["group", "caps"] {
        if !obj.get(key).is_some_and(Value::is_object) {
            return bad(key);
        }
    }
    if !obj.get("overgroup").is_some_and(|o| o.is_null() || o.is_object()) {
        return bad("overgroup");
    }
    if !obj.get("wall_ms").is_some_and(|o| o.is_null() || o.is_u64()) {
        return bad("wall_ms");
    }
    let Some(entries) = obj.get("per_block").and_then(Value::as_array) else { return bad("per_block") };
    for e in entries {
        let ok = e.get("block_id").is_some_and(Value::is_string)
            && ["defect", "lhs", "rhs"].iter().all(|k| e.get(*k).is_some_and(Value::is_u64))
            && e.get("verdict").is_some_and(Value::is_string)
            && e.get("witnesses").is_some_and(Value::is_array);
        if !ok {
            return bad("per_block entry");
        }
        let verdict = e["verdict"].as_str().unwrap_or_default();
        if verdict == "EQUAL" && e["lhs"] != e["rhs"] {
            return bad("EQUAL entry with different counts");
        }
    }
    Ok(())
}

pub fn human_reports(reports: &[VerificationReport]) -> String {
    let mut out = String::new();
    for r in reports {
        let over = r.overgroup.as_ref().map(|o| format!(" in {}", o.label)).unwrap_or_default();
        let _ = writeln!(out, "{} {}{} p={}: {}", r.statement, r.group.label, over, r.prime, r.verdict.label());
        for e in &r.per_block {
            let _ = writeln!(
                out,
                "  {:<28} defect {}  {} vs {}  {}",
                e.block_id,
                e.defect,
                e.lhs,
                e.rhs,
                e.verdict.label()
            );
            for w in &e.witnesses {
                let _ = writeln!(out, "    witness: {w}");
            }
        }
        for n in &r.notes {
            let _ = writeln!(out, "  note: {n}");
        }
        if let Some(ms) = r.wall_ms {
            let _ = writeln!(out, "  {ms} ms");
        }
    }
    out
}

fn build(g: &GroupInput, caps: Caps) -> Result<GroupHandle, CliError> {
    let degree = g.gens.first().map_or(1, Perm::degree);
    Ok(GroupHandle::new(degree, &g.gens, &caps)?)
}

pub fn table(g: &GroupInput, _p: Option<u64>, caps: Caps, _seed: u64) -> Result<(String, Value), CliError> {
    let h = build(g, caps)?;
    let t = character_table(&h)?;
    let mut out = format!("{} (order {}), {} classes\n", g.label, t.order, t.num_classes());
    let classes: Vec<Value> = h
        .classes()
        .iter()
        .map(|c| json!({ "representative": c.rep_perm.to_string(), "size": c.size, "order": c.order }))
        .collect();
    for (k, c) in h.classes().iter().enumerate() {
        let _ = writeln!(out, "  class {k}: size {} order {} rep {}", c.size, c.order, c.rep_perm);
    }
    let mut rows = Vec::new();
    for (i, row) in t.irr.iter().enumerate() {
        let vals: Vec<String> = row.iter().map(ToString::to_string).collect();
        let _ = writeln!(out, "  chi{i}: {}", vals.join(" | "));
        rows.push(json!(vals));
    }
    Ok((out, json!({ "group": g.label, "order": t.order, "classes": classes, "irr": rows })))
}

fn context(g: &GroupInput, p: Option<u64>, caps: Caps, seed: u64) -> Result<(Context, std::sync::Arc<GroupHandle>, u64), CliError> {
    let h = build(g, caps)?;
    let p = p.ok_or_else(|| CliError::Usage("missing --prime".into()))?;
    let ctx = Context::new(p, &h, caps, seed)?;
    let h = ctx.intern(h);
    Ok((ctx, h, p))
}

pub fn blocks(g: &GroupInput, p: Option<u64>, caps: Caps, seed: u64) -> Result<(String, Value), CliError> {
    let (ctx, h, p) = context(g, p, caps, seed)?;
    let m = ctx.modular(&h)?;
    let mut out = format!("{} p={p}: {} blocks\n", g.label, m.blocks.len());
    let mut list = Vec::new();
    for b in &m.blocks {
        let _ = writeln!(
            out,
            "  B{}: defect {} defect group order {} Irr {:?} IBr {:?}",
            b.index,
            b.defect,
            b.defect_group.order(),
            b.irr_members,
            b.ibr_members
        );
        list.push(json!({
            "index": b.index,
            "defect": b.defect,
            "defect_group_order": b.defect_group.order(),
            "defect_group_generators": b.defect_group.generator_perms(&h).iter().map(ToString::to_string).collect::<Vec<_>>(),
            "irr": b.irr_members,
            "ibr": b.ibr_members,
        }));
    }
    Ok((out, json!({ "group": g.label, "prime": p, "blocks": list })))
}

pub fn ibr(g: &GroupInput, p: Option<u64>, caps: Caps, seed: u64) -> Result<(String, Value), CliError> {
    let (ctx, h, p) = context(g, p, caps, seed)?;
    let m = ctx.modular(&h)?;
    let reps: Vec<String> = m.regular.iter().map(|&k| h.classes()[k].rep_perm.to_string()).collect();
    let mut out = format!("{} p={p}: {} Brauer characters on classes {}\n", g.label, m.ibr.len(), reps.join(" "));
    let mut list = Vec::new();
    for (i, b) in m.ibr.iter().enumerate() {
        let vals: Vec<String> = b.values.iter().map(ToString::to_string).collect();
        let _ = writeln!(out, "  phi{i} (B{}): {}", m.ibr_block[i], vals.join(" | "));
        list.push(json!({ "degree": b.degree, "block": m.ibr_block[i], "values": vals }));
    }
    Ok((out, json!({ "group": g.label, "prime": p, "regular_classes": reps, "ibr": list })))
}

pub fn weights(g: &GroupInput, p: Option<u64>, caps: Caps, seed: u64) -> Result<(String, Value), CliError> {
    let (ctx, h, p) = context(g, p, caps, seed)?;
    let ws = enumerate_weights(&ctx, &h)?;
    let mut out = format!("{} p={p}: {} weights\n", g.label, ws.len());
    let mut list = Vec::new();
    for w in &ws {
        let gens: Vec<String> = w.q.generator_perms(&h).iter().map(ToString::to_string).collect();
        let _ = writeln!(
            out,
            "  {}: |Q| = {} |N(Q)| = {} degree {} block B{}",
            w.orbit_id,
            w.q.order(),
            w.normalizer.order(),
            w.psi.degree,
            w.induced_block
        );
        list.push(json!({
            "id": w.orbit_id,
            "q_order": w.q.order(),
            "q_generators": gens,
            "normalizer_order": w.normalizer.order(),
            "degree": w.psi.degree,
            "block": w.induced_block,
        }));
    }
    Ok((out, json!({ "group": g.label, "prime": p, "weights": list })))
}

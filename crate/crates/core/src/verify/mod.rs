//! Counting checks of the weight conjecture family on explicit groups.
//!
//! Every verifier returns a [`VerificationReport`] listing one or more
//! left/right count pairs. Hypothesis failures on the inputs are errors;
//! failures inside a single comparison become `Skipped` entries.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use serde::{Serialize, Serializer};

use crate::blocks::{self, block_induction, covers, is_normal_subgroup, Block};
use crate::caps::Caps;
use crate::chartab::{self, character_table};
use crate::classfn;
use crate::context::Context;
use crate::dgn;
use crate::error::{Error, Result};
use crate::groups::{GroupHandle, Perm, Subgroup};
use crate::modrep::{ibr_count_by_rank, restrict_regular, Modular};
use crate::numbers::{arith, Cyclotomic};
use crate::weights::{b_weights, enumerate_weights, p_subgroups_up_to_conjugacy, radical_p_subgroups, Weight};

pub const SCHEMA_VERSION: u32 = 1;

const COUNTS_ONLY: &str =
    "only the counting consequence is checked; isomorphism of the underlying character triples is not certified";
const CLIFFORD_CHOICE: &str = "relative defect zero sets take the Clifford correspondent through the orbit-minimal \
     conjugate (least dense value vector)";

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Equal,
    Unequal,
    Skipped(String),
}

impl Verdict {
    pub fn label(&self) -> String {
        match self {
            Verdict::Equal => "EQUAL".into(),
            Verdict::Unequal => "UNEQUAL".into(),
            Verdict::Skipped(r) => format!("SKIPPED({r})"),
        }
    }
}

impl Serialize for Verdict {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.label())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroupDesc {
    /// How the group was given; defaults to its generators.
    pub label: String,
    pub order: u64,
    pub degree: usize,
    pub generators: Vec<String>,
}

impl GroupDesc {
    pub fn of(g: &GroupHandle) -> Self {
        let generators: Vec<String> = g.generators().iter().map(ToString::to_string).collect();
        GroupDesc { label: generators.join(";"), order: g.order(), degree: g.degree(), generators }
    }
}

/// One compared pair of counts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Entry {
    pub block_id: String,
    pub defect: u32,
    pub lhs: u64,
    pub rhs: u64,
    pub verdict: Verdict,
    /// Filled only when the counts differ.
    pub witnesses: Vec<String>,
}

impl Entry {
    fn compare(
        block_id: impl Into<String>,
        defect: u32,
        lhs: usize,
        rhs: usize,
        witnesses: impl FnOnce() -> Vec<String>,
    ) -> Self {
        let equal = lhs == rhs;
        Entry {
            block_id: block_id.into(),
            defect,
            lhs: lhs as u64,
            rhs: rhs as u64,
            verdict: if equal { Verdict::Equal } else { Verdict::Unequal },
            witnesses: if equal { Vec::new() } else { witnesses() },
        }
    }

    fn skipped(block_id: impl Into<String>, defect: u32, reason: impl Into<String>) -> Self {
        Entry {
            block_id: block_id.into(),
            defect,
            lhs: 0,
            rhs: 0,
            verdict: Verdict::Skipped(reason.into()),
            witnesses: Vec::new(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub schema_version: u32,
    pub statement: String,
    pub group: GroupDesc,
    pub overgroup: Option<GroupDesc>,
    pub prime: u64,
    pub seed: u64,
    pub caps: Caps,
    pub per_block: Vec<Entry>,
    pub notes: Vec<String>,
    pub verdict: Verdict,
    /// Left empty here; the caller fills it in when timing is requested.
    pub wall_ms: Option<u64>,
}

impl VerificationReport {
    fn new(statement: &str, ctx: &Context, group: &GroupHandle, overgroup: Option<&GroupHandle>) -> Self {
        VerificationReport {
            schema_version: SCHEMA_VERSION,
            statement: statement.into(),
            group: GroupDesc::of(group),
            overgroup: overgroup.map(GroupDesc::of),
            prime: ctx.p(),
            seed: ctx.seed(),
            caps: *ctx.caps(),
            per_block: Vec::new(),
            notes: Vec::new(),
            verdict: Verdict::Equal,
            wall_ms: None,
        }
    }

    fn finish(mut self) -> Self {
        self.verdict = overall(&self.per_block);
        self
    }
}

/// UNEQUAL if any entry is, else the first SKIPPED, else EQUAL.
pub fn overall(entries: &[Entry]) -> Verdict {
    if entries.iter().any(|e| e.verdict == Verdict::Unequal) {
        return Verdict::Unequal;
    }
    entries
        .iter()
        .find(|e| matches!(e.verdict, Verdict::Skipped(_)))
        .map_or(Verdict::Equal, |e| e.verdict.clone())
}

fn block_id(b: &Block) -> String {
    format!("B{}", b.index)
}

fn ibr_label(m: &Modular, i: usize) -> String {
    format!("phi{i}[deg {}]", m.ibr[i].degree)
}

fn is_p_power(n: u64, p: u64) -> bool {
    arith::p_prime_part(n, p) == 1
}

fn require_normal(gamma: &GroupHandle, g: &Subgroup) -> Result<()> {
    if gamma.is_normal(g) {
        Ok(())
    } else {
        Err(Error::NotNormal(format!("subgroup of order {} in group of order {}", g.order(), gamma.order())))
    }
}

fn require_p_quotient(gamma: &GroupHandle, g: &Subgroup, p: u64) -> Result<()> {
    require_normal(gamma, g)?;
    let index = gamma.order() / g.order();
    if is_p_power(index, p) {
        Ok(())
    } else {
        Err(Error::QuotientNotPGroup(format!("index {index} is not a power of {p}")))
    }
}

/// Image of each class of `g` under conjugation by `y`.
fn class_images(g: &GroupHandle, y: &Perm) -> Result<Vec<usize>> {
    g.classes().iter().map(|c| classfn::class_of_perm(g, &c.rep_perm.conjugate_by(y))).collect()
}

fn block_is_invariant(g: &GroupHandle, b: &Block, by: &[Perm]) -> Result<bool> {
    for y in by {
        let img = class_images(g, y)?;
        if img.iter().enumerate().any(|(k, &j)| b.lambda[j] != b.lambda[k]) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Members of IBr(B) fixed by every permutation in `by`.
fn fixed_ibr(m: &Modular, g: &GroupHandle, b: &Block, by: &[Perm]) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for &i in &b.ibr_members {
        if classfn::is_invariant(g, &m.regular, &m.ibr[i].values, by)? {
            out.push(i);
        }
    }
    Ok(out)
}

/// Sizes of the orbits of the group generated by `perms` on `0..n`, sorted.
fn orbit_sizes(n: usize, perms: &[Vec<usize>]) -> Vec<usize> {
    let mut seen = vec![false; n];
    let mut sizes = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut stack = vec![start];
        let mut size = 0;
        while let Some(x) = stack.pop() {
            size += 1;
            for p in perms {
                if !seen[p[x]] {
                    seen[p[x]] = true;
                    stack.push(p[x]);
                }
            }
        }
        sizes.push(size);
    }
    sizes.sort_unstable();
    sizes
}

fn size_histogram(sizes: &[usize]) -> BTreeMap<usize, usize> {
    let mut h = BTreeMap::new();
    for &s in sizes {
        *h.entry(s).or_insert(0) += 1;
    }
    h
}

/// Blockwise weight count: |IBr(B)| against |Alp(B)/G| for every block.
///
/// With `over = Some(A)` for G ⊴ A on the same points, also compares the
/// orbit sizes of the block stabilizer A_B on IBr(B) and on the B-weights.
pub fn verify_bawc(ctx: &Context, g: &Arc<GroupHandle>, over: Option<&Arc<GroupHandle>>) -> Result<VerificationReport> {
    let p = ctx.p();
    let m = ctx.modular(g)?;
    let table = character_table(g)?;
    let weights = enumerate_weights(ctx, g)?;
    let mut report = VerificationReport::new("awc", ctx, g, over.map(|a| &**a));
    for b in &m.blocks {
        let ws = b_weights(&weights, b.index);
        report.per_block.push(Entry::compare(block_id(b), b.defect, b.ibr_members.len(), ws.len(), || {
            let mut w: Vec<String> = b.ibr_members.iter().map(|&i| ibr_label(&m, i)).collect();
            w.extend(ws.iter().map(|x| format!("weight {}", x.orbit_id)));
            w
        }));
        let by_rank = ibr_count_by_rank(b, &table, p)?;
        if by_rank != b.ibr_members.len() {
            report.per_block.push(Entry::compare(
                format!("{}:rank-route", block_id(b)),
                b.defect,
                b.ibr_members.len(),
                by_rank,
                || vec![format!("MeatAxe gives {}, rank gives {by_rank}", b.ibr_members.len())],
            ));
        }
    }
    if let Some(a) = over {
        if !is_normal_subgroup(g, a) {
            return Err(Error::NotNormal(format!("group of order {} in group of order {}", g.order(), a.order())));
        }
        equivariance_checks(ctx, a, g, &m, &weights, &mut report)?;
    }
    Ok(report.finish())
}

fn equivariance_checks(
    ctx: &Context,
    a: &Arc<GroupHandle>,
    g: &Arc<GroupHandle>,
    m: &Modular,
    weights: &[Weight],
    report: &mut VerificationReport,
) -> Result<()> {
    let p = ctx.p();
    let g_in_a = a.subgroup_from_perms(g.generators())?;
    // one representative per radical class, in weight order
    let mut reps: Vec<Subgroup> = Vec::new();
    for w in weights {
        if reps.last() != Some(&w.q) {
            reps.push(w.q.clone());
        }
    }
    let reps_in_a: Vec<Subgroup> = reps.iter().map(|q| a.transport(g, q)).collect::<Result<_>>()?;
    let images: Vec<Vec<usize>> = a.elements().iter().map(|y| class_images(g, y)).collect::<Result<_>>()?;

    for b in &m.blocks {
        let stab: Vec<u32> = (0..a.size() as u32)
            .filter(|&x| images[x as usize].iter().enumerate().all(|(k, &j)| b.lambda[j] == b.lambda[k]))
            .collect();
        let stab = a.subgroup_from_set(stab);
        let ws = b_weights(weights, b.index);
        let mut ibr_perms = Vec::new();
        let mut weight_perms = Vec::new();
        for y in stab.generator_perms(a) {
            let mut on_ibr = Vec::new();
            for &i in &b.ibr_members {
                let v = classfn::conjugate(g, &m.regular, &m.ibr[i].values, &y)?;
                let j = m.find_ibr(&v).ok_or_else(|| Error::Internal("conjugate of a Brauer character".into()))?;
                let pos = b.ibr_members.iter().position(|&x| x == j).ok_or_else(|| {
                    Error::Internal("block stabilizer moved a Brauer character out of its block".into())
                })?;
                on_ibr.push(pos);
            }
            ibr_perms.push(on_ibr);
            let mut on_weights = Vec::new();
            for w in &ws {
                let qi = reps.iter().position(|r| *r == w.q).expect("weight subgroup is a representative");
                let moved = a.conjugate_subgroup(&reps_in_a[qi], a.index_of(&y).expect("y lies in A"));
                let (j, x) = reps_in_a
                    .iter()
                    .enumerate()
                    .find_map(|(j, r)| a.conjugating_element(&g_in_a, &moved, r).map(|x| (j, x)))
                    .ok_or_else(|| Error::Internal("conjugate of a radical subgroup is not radical".into()))?;
                let y2 = y.then(a.element(x));
                let target = ws
                    .iter()
                    .find(|v| v.q == reps[j])
                    .map(|v| v.normalizer.clone())
                    .ok_or_else(|| Error::Internal("weight orbit left the block".into()))?;
                let psi = classfn::transport(
                    &w.normalizer,
                    &w.normalizer.p_regular_classes(p),
                    &w.psi.values,
                    &target,
                    &target.p_regular_classes(p),
                    &y2,
                )?;
                let pos = ws
                    .iter()
                    .position(|v| v.q == reps[j] && v.psi.values == psi)
                    .ok_or_else(|| Error::Internal("conjugate weight not found".into()))?;
                on_weights.push(pos);
            }
            weight_perms.push(on_weights);
        }
        let left = size_histogram(&orbit_sizes(b.ibr_members.len(), &ibr_perms));
        let right = size_histogram(&orbit_sizes(ws.len(), &weight_perms));
        let sizes: BTreeSet<usize> = left.keys().chain(right.keys()).copied().collect();
        for s in sizes {
            let l = left.get(&s).copied().unwrap_or(0);
            let r = right.get(&s).copied().unwrap_or(0);
            report.per_block.push(Entry::compare(format!("{}:orbits-of-size-{s}", block_id(b)), b.defect, l, r, || {
                vec![format!("IBr orbit sizes {left:?}"), format!("weight orbit sizes {right:?}")]
            }));
        }
    }
    Ok(())
}

/// Θ_B up to Γ-conjugacy: p-subgroups Q of Γ with Γ = GQ and Q ∩ G inside a
/// defect group of B.
pub fn theta_b(ctx: &Context, gamma: &Arc<GroupHandle>, g: &Subgroup, b: usize) -> Result<Vec<Subgroup>> {
    let p = ctx.p();
    require_p_quotient(gamma, g, p)?;
    let gh = ctx.handle(gamma, g)?;
    let blocks = ctx.blocks(&gh)?;
    let blk = &blocks[b];
    if !block_is_invariant(&gh, blk, gamma.generators())? {
        return Err(Error::BlockNotInvariant(block_id(blk)));
    }
    let d = gamma.transport(&gh, &blk.defect_group)?;
    Ok(p_subgroups_up_to_conjugacy(gamma, p)?
        .into_iter()
        .filter(|q| {
            gamma.product_order(g, q) == gamma.order()
                && gamma.conjugate_into(g, &gamma.intersection(q, g), &d).is_some()
        })
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct DzCount {
    pub count: usize,
    /// Characters whose block does not induce to Γ.
    pub undefined: usize,
}

/// |dz(N_Γ(Q)/Q | B)|: defect-zero characters of N_Γ(Q)/Q whose inflation
/// lies in a block inducing to a block of Γ over B.
pub fn dz_quotient_given_b(
    ctx: &Context,
    gamma: &Arc<GroupHandle>,
    g: &Subgroup,
    b: usize,
    q: &Subgroup,
) -> Result<DzCount> {
    let p = ctx.p();
    let gh = ctx.handle(gamma, g)?;
    let g_block = &ctx.blocks(&gh)?[b];
    let gamma_blocks = ctx.blocks(gamma)?;
    let n = ctx.handle(gamma, &gamma.normalizer(q))?;
    let n_blocks = ctx.blocks(&n)?;
    let nt = character_table(&n)?;
    let quot = ctx.quotient(&n, &n.transport(gamma, q)?)?;
    let qt = character_table(&quot.group)?;
    let map = blocks::quotient_class_map(&n, &quot);
    let mut out = DzCount::default();
    for chi in (0..qt.num_chars()).filter(|&c| qt.is_defect_zero(c, p)) {
        let row = nt
            .find_row(&chartab::restrict(&qt.irr[chi], &map))
            .ok_or_else(|| Error::Internal("inflation of an irreducible is reducible".into()))?;
        let local = &n_blocks[blocks::block_of_irr(&n_blocks, row)];
        match block_induction(&n, local, gamma, &gamma_blocks, ctx.field())? {
            None => out.undefined += 1,
            Some(big) => {
                if covers(gamma, &gamma_blocks[big], &gh, g_block)? {
                    out.count += 1;
                }
            }
        }
    }
    Ok(out)
}

/// Γ-invariant blocks of G get one entry comparing |IBr_Γ(B)| with the sum of
/// |dz(N_Γ(Q)/Q | B)| over Θ_B. Other blocks are listed in the notes.
pub fn verify_navarro_a(ctx: &Context, gamma: &Arc<GroupHandle>, g: &Subgroup) -> Result<VerificationReport> {
    require_p_quotient(gamma, g, ctx.p())?;
    let gh = ctx.handle(gamma, g)?;
    let m = ctx.modular(&gh)?;
    let mut report = VerificationReport::new("navarro", ctx, &gh, Some(gamma));
    report.notes.push(COUNTS_ONLY.into());
    for b in &m.blocks {
        if !block_is_invariant(&gh, b, gamma.generators())? {
            report.notes.push(format!("{} is not invariant in the overgroup and is excluded", block_id(b)));
            continue;
        }
        let fixed = fixed_ibr(&m, &gh, b, gamma.generators())?;
        let thetas = theta_b(ctx, gamma, g, b.index)?;
        let mut total = 0;
        let mut undefined = 0;
        let mut parts = Vec::new();
        for (i, d) in thetas.iter().enumerate() {
            let c = dz_quotient_given_b(ctx, gamma, g, b.index, d)?;
            total += c.count;
            undefined += c.undefined;
            parts.push(format!("D{i}[order {}]: {}", d.order(), c.count));
        }
        if undefined > 0 {
            report.per_block.push(Entry::skipped(
                block_id(b),
                b.defect,
                format!("{undefined} local blocks do not induce to the overgroup"),
            ));
            continue;
        }
        report.per_block.push(Entry::compare(block_id(b), b.defect, fixed.len(), total, || {
            let mut w: Vec<String> = fixed.iter().map(|&i| ibr_label(&m, i)).collect();
            w.extend(parts);
            w
        }));
    }
    Ok(report.finish())
}

/// |EBr(Γ | 𝔅)|: members of IBr(Γ) restricting to G as a single Brauer
/// character of a block in `blocks`.
pub fn ebr_count(ctx: &Context, gamma: &Arc<GroupHandle>, g: &Subgroup, blocks: &[usize]) -> Result<usize> {
    Ok(extensions(ctx, gamma, g)?.iter().filter(|(_, b)| blocks.contains(b)).count())
}

/// (index in IBr(Γ), block of G) for each χ ∈ IBr(Γ) with irreducible restriction.
fn extensions(ctx: &Context, gamma: &Arc<GroupHandle>, g: &Subgroup) -> Result<Vec<(usize, usize)>> {
    let gh = ctx.handle(gamma, g)?;
    let gm = ctx.modular(&gh)?;
    let top = ctx.modular(gamma)?;
    let mut out = Vec::new();
    for (i, chi) in top.ibr.iter().enumerate() {
        let res = restrict_regular(&gh, gamma, ctx.p(), &chi.values)?;
        if let Some(j) = gm.find_ibr(&res) {
            out.push((i, gm.ibr_block[j]));
        }
    }
    Ok(out)
}

/// EBr(N_Γ(Q) | dz°(B_Q)) split by the dz° character it extends.
struct LocalExtensions {
    n_gamma: Arc<GroupHandle>,
    n_g: Subgroup,
    /// (ϑ, Brauer characters of N_Γ(Q) extending ϑ)
    by_theta: Vec<(Vec<Cyclotomic>, Vec<Vec<Cyclotomic>>)>,
}

impl LocalExtensions {
    fn count(&self) -> usize {
        self.by_theta.iter().map(|(_, e)| e.len()).sum()
    }
}

fn local_extensions(
    ctx: &Context,
    gamma: &Arc<GroupHandle>,
    g: &Subgroup,
    b: usize,
    q: &Subgroup,
) -> Result<LocalExtensions> {
    let p = ctx.p();
    let gh = ctx.handle(gamma, g)?;
    let g_blocks = ctx.blocks(&gh)?;
    let n_gamma_sub = gamma.normalizer(q);
    let n_gamma = ctx.handle(gamma, &n_gamma_sub)?;
    let n_g = ctx.handle(gamma, &gamma.intersection(&n_gamma_sub, g))?;
    let n_g_blocks = ctx.blocks(&n_g)?;
    let top = ctx.modular(&n_gamma)?;
    let restricted: Vec<Vec<Cyclotomic>> =
        top.ibr.iter().map(|eta| restrict_regular(&n_g, &n_gamma, p, &eta.values)).collect::<Result<_>>()?;
    let mut by_theta = Vec::new();
    for d in ctx.dz0(&n_g)?.iter() {
        if block_induction(&n_g, &n_g_blocks[d.block], &gh, &g_blocks, ctx.field())? != Some(b) {
            continue;
        }
        let ext: Vec<Vec<Cyclotomic>> = top
            .ibr
            .iter()
            .zip(&restricted)
            .filter(|(_, r)| **r == d.brauer)
            .map(|(eta, _)| eta.values.clone())
            .collect();
        by_theta.push((d.brauer.clone(), ext));
    }
    Ok(LocalExtensions { n_g: n_gamma.transport(&n_g, &n_g.whole())?, n_gamma, by_theta })
}

/// Γ-classes of radical p-subgroups Q of G with Γ = G N_Γ(Q), as subgroups of Γ.
fn overgroup_radical_classes(ctx: &Context, gamma: &Arc<GroupHandle>, g: &Subgroup) -> Result<Vec<Subgroup>> {
    let gh = ctx.handle(gamma, g)?;
    let rad: Vec<Subgroup> =
        radical_p_subgroups(&gh, ctx.p())?.iter().map(|q| gamma.transport(&gh, q)).collect::<Result<_>>()?;
    Ok(gamma
        .fuse_classes(&gamma.whole(), rad)
        .into_iter()
        .filter(|q| gamma.product_order(g, &gamma.normalizer(q)) == gamma.order())
        .collect())
}

/// |EBr(Γ|B)| against the sum over Γ-classes of radical Q of |EBr(N_Γ(Q) | dz°(B_Q))|.
///
/// When Γ/G is a p-group the report also carries the degeneration checks:
/// extensions against Γ-fixed points, the per-Q local counts against the
/// Θ_B route, uniqueness of the D over each Q, and EBr(N_Γ(Q)|ϑ) against
/// rdz°(N_Γ(Q) | N_Γ(Q), ϑ).
pub fn verify_extended_e(ctx: &Context, gamma: &Arc<GroupHandle>, g: &Subgroup) -> Result<VerificationReport> {
    let p = ctx.p();
    require_normal(gamma, g)?;
    let gh = ctx.handle(gamma, g)?;
    let m = ctx.modular(&gh)?;
    let ext = extensions(ctx, gamma, g)?;
    let reps = overgroup_radical_classes(ctx, gamma, g)?;
    let p_quotient = is_p_power(gamma.order() / g.order(), p);
    let mut report = VerificationReport::new("extended", ctx, &gh, Some(gamma));
    report.notes.push(COUNTS_ONLY.into());
    let mut used_clifford = false;
    for b in &m.blocks {
        let id = block_id(b);
        let lhs: Vec<usize> = ext.iter().filter(|(_, x)| *x == b.index).map(|(i, _)| *i).collect();
        let locals: Vec<LocalExtensions> =
            reps.iter().map(|q| local_extensions(ctx, gamma, g, b.index, q)).collect::<Result<_>>()?;
        let rhs: usize = locals.iter().map(LocalExtensions::count).sum();
        report.per_block.push(Entry::compare(id.clone(), b.defect, lhs.len(), rhs, || {
            let mut w: Vec<String> = lhs.iter().map(|i| format!("extension {i}")).collect();
            w.extend(locals.iter().enumerate().map(|(j, l)| format!("Q{j}[order {}]: {}", reps[j].order(), l.count())));
            w
        }));
        if !p_quotient {
            continue;
        }
        let invariant = block_is_invariant(&gh, b, gamma.generators())?;
        let fixed = if invariant { fixed_ibr(&m, &gh, b, gamma.generators())?.len() } else { 0 };
        report.per_block.push(Entry::compare(format!("{id}:fixed-points"), b.defect, lhs.len(), fixed, Vec::new));
        if !invariant {
            continue;
        }
        let mut bucket = vec![0; reps.len()];
        let mut classes = vec![0; reps.len()];
        let mut outside = 0;
        let mut undefined = 0;
        for d in theta_b(ctx, gamma, g, b.index)? {
            let c = dz_quotient_given_b(ctx, gamma, g, b.index, &d)?;
            undefined += c.undefined;
            let core = gamma.intersection(&d, g);
            match reps.iter().position(|r| gamma.conjugating_element(&gamma.whole(), &core, r).is_some()) {
                Some(j) => {
                    bucket[j] += c.count;
                    classes[j] += 1;
                }
                None => outside += c.count,
            }
        }
        if undefined > 0 {
            report.per_block.push(Entry::skipped(
                format!("{id}:local"),
                b.defect,
                format!("{undefined} local blocks do not induce to the overgroup"),
            ));
            continue;
        }
        for (j, local) in locals.iter().enumerate() {
            report.per_block.push(Entry::compare(format!("{id}:Q{j}:local"), b.defect, local.count(), bucket[j], || {
                vec![format!("Q{j} of order {}", reps[j].order())]
            }));
            if local.count() > 0 {
                report.per_block.push(Entry::compare(format!("{id}:Q{j}:D-classes"), b.defect, classes[j], 1, || {
                    vec![format!("{} classes of D over Q{j}", classes[j])]
                }));
            }
            for (k, (theta, exts)) in local.by_theta.iter().enumerate() {
                let nk = local.n_gamma.clone();
                let kh = ctx.handle(&nk, &local.n_g)?;
                if !classfn::is_invariant(&kh, &kh.p_regular_classes(p), theta, nk.generators())? {
                    continue;
                }
                let eid = format!("{id}:Q{j}:rdz{k}");
                let rdz = match dgn::rdz0(ctx, &nk, &nk.whole(), &local.n_g, theta) {
                    Ok(r) => r,
                    Err(e @ (Error::CapExceeded(_) | Error::NoInvariantExtension(_))) => {
                        report.per_block.push(Entry::skipped(eid, b.defect, e.to_string()));
                        continue;
                    }
                    Err(e) => return Err(e),
                };
                used_clifford = true;
                let a = exts;
                let r: Vec<Vec<Cyclotomic>> = rdz.into_iter().map(|x| x.values).collect();
                let common = a.iter().filter(|v| r.contains(v)).count();
                let union = a.len() + r.len() - common;
                report.per_block.push(Entry::compare(eid, b.defect, union, common, || {
                    vec![format!("{} extensions, {} relative defect zero", a.len(), r.len())]
                }));
            }
        }
        report.per_block.push(Entry::compare(format!("{id}:outside-radical"), b.defect, outside, 0, || {
            vec![format!("{outside} characters over non-radical intersections")]
        }));
    }
    if used_clifford {
        report.notes.push(CLIFFORD_CHOICE.into());
    }
    Ok(report.finish())
}

/// |IBr_Γ(B)| against the number of weights (Q, ψ) of Γ with Γ = GQ and
/// bl(ψ)^Γ over B, for each Γ-invariant block B of G. Also checks that every
/// such ψ restricts irreducibly to N_G(Q).
pub fn verify_nav_set_count(ctx: &Context, gamma: &Arc<GroupHandle>, g: &Subgroup) -> Result<VerificationReport> {
    let p = ctx.p();
    require_p_quotient(gamma, g, p)?;
    let gh = ctx.handle(gamma, g)?;
    let m = ctx.modular(&gh)?;
    let gamma_blocks = ctx.blocks(gamma)?;
    let weights = enumerate_weights(ctx, gamma)?;
    let supplements: Vec<&Weight> =
        weights.iter().filter(|w| gamma.product_order(g, &w.q) == gamma.order()).collect();
    let mut report = VerificationReport::new("navset", ctx, &gh, Some(gamma));
    report.notes.push(COUNTS_ONLY.into());
    for b in &m.blocks {
        if !block_is_invariant(&gh, b, gamma.generators())? {
            report.notes.push(format!("{} is not invariant in the overgroup and is excluded", block_id(b)));
            continue;
        }
        let fixed = fixed_ibr(&m, &gh, b, gamma.generators())?;
        let mut members = Vec::new();
        for w in &supplements {
            if covers(gamma, &gamma_blocks[w.induced_block], &gh, b)? {
                members.push(*w);
            }
        }
        report.per_block.push(Entry::compare(block_id(b), b.defect, fixed.len(), members.len(), || {
            let mut out: Vec<String> = fixed.iter().map(|&i| ibr_label(&m, i)).collect();
            out.extend(members.iter().map(|w| format!("weight {}", w.orbit_id)));
            out
        }));
        let mut irreducible = Vec::new();
        for w in &members {
            let ngq = ctx.handle(gamma, &gamma.intersection(&gamma.normalizer(&w.q), g))?;
            let res = restrict_regular(&ngq, &w.normalizer, p, &w.psi.values)?;
            irreducible.push(ctx.modular(&ngq)?.find_ibr(&res).is_some());
        }
        let good = irreducible.iter().filter(|&&x| x).count();
        report.per_block.push(Entry::compare(
            format!("{}:restriction-irreducible", block_id(b)),
            b.defect,
            members.len(),
            good,
            || {
                members
                    .iter()
                    .zip(&irreducible)
                    .filter(|(_, ok)| !**ok)
                    .map(|(w, _)| format!("weight {} restricts reducibly", w.orbit_id))
                    .collect()
            },
        ));
    }
    Ok(report.finish())
}

/// |Irr_Γ(K)| against Σ |Irr(C_K(Q))| over complement classes, for p ∤ |K|
/// and Γ/K a p-group. The correspondent Π_D is also compared with the
/// multiplicity criterion and checked to be injective.
pub fn verify_dgn_count(ctx: &Context, gamma: &Arc<GroupHandle>, k: &Subgroup) -> Result<VerificationReport> {
    let p = ctx.p();
    if k.order().is_multiple_of(p) {
        return Err(Error::HypothesisViolated(format!("{p} divides |K| = {}", k.order())));
    }
    if !gamma.is_normal(k) {
        return Err(Error::HypothesisViolated("K is not normal".into()));
    }
    let index = gamma.order() / k.order();
    if !is_p_power(index, p) {
        return Err(Error::HypothesisViolated(format!("|Γ:K| = {index} is not a power of {p}")));
    }
    let kh = ctx.handle(gamma, k)?;
    let kt = character_table(&kh)?;
    let all: Vec<usize> = (0..kh.num_classes()).collect();
    let mut invariant = Vec::new();
    for c in 0..kt.num_chars() {
        if classfn::is_invariant(&kh, &all, &kt.irr[c], gamma.generators())? {
            invariant.push(c);
        }
    }
    let complements: Vec<Subgroup> = p_subgroups_up_to_conjugacy(gamma, p)?
        .into_iter()
        .filter(|q| q.order() == index && gamma.intersection(q, k).is_trivial())
        .collect();
    let mut counts = Vec::new();
    for q in &complements {
        counts.push(ctx.handle(gamma, &gamma.centralizer_in(k, q))?.num_classes());
    }
    let mut report = VerificationReport::new("dgn", ctx, &kh, Some(gamma));
    report.per_block.push(Entry::compare("K", 0, invariant.len(), counts.iter().sum(), || {
        let mut w: Vec<String> = invariant.iter().map(|c| format!("chi{c}[deg {}]", kt.degrees[*c])).collect();
        w.extend(complements.iter().zip(&counts).map(|(q, n)| format!("complement of order {}: {n}", q.order())));
        w
    }));
    if let Some(d) = complements.first() {
        let mut agree = 0;
        let mut images = BTreeSet::new();
        let mut mismatched = Vec::new();
        for &theta in &invariant {
            let by_blocks = dgn::glauberman_dgn_ordinary(ctx, gamma, k, theta, d)?;
            let by_mult = dgn::glauberman_by_multiplicity(ctx, gamma, k, theta, d)?;
            if by_blocks.0.id() == by_mult.0.id() && by_blocks.1 == by_mult.1 {
                agree += 1;
            } else {
                mismatched.push(format!("chi{theta}: blocks give {}, multiplicity gives {}", by_blocks.1, by_mult.1));
            }
            images.insert(by_blocks.1);
        }
        report.per_block.push(Entry::compare("K:oracle", 0, invariant.len(), agree, || mismatched));
        report.per_block.push(Entry::compare("K:injective", 0, invariant.len(), images.len(), || {
            vec![format!("images {images:?}")]
        }));
    }
    Ok(report.finish())
}

/// A chain 1 = Q_0 < Q_1 < … < Q_n of p-subgroups with its stabilizer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PChain {
    pub tower: Vec<Subgroup>,
    /// G_σ, the intersection of the normalizers of the Q_i.
    pub stabilizer: Subgroup,
}

impl PChain {
    pub fn length(&self) -> usize {
        self.tower.len() - 1
    }
}

/// Representatives of the G-classes of p-chains starting at the trivial group.
pub fn enumerate_p_chains(g: &GroupHandle, p: u64, cap: usize) -> Result<Vec<PChain>> {
    let mut all: Vec<Subgroup> = p_subgroups_up_to_conjugacy(g, p)?
        .iter()
        .flat_map(|r| g.conjugates_in(&g.whole(), r))
        .collect();
    all.sort_by(|a, b| (a.order(), a.elements()).cmp(&(b.order(), b.elements())));
    let mut out = Vec::new();
    extend_chain(g, &all, vec![g.trivial_subgroup()], g.whole(), cap, &mut out)?;
    Ok(out)
}

fn extend_chain(
    g: &GroupHandle,
    all: &[Subgroup],
    tower: Vec<Subgroup>,
    stab: Subgroup,
    cap: usize,
    out: &mut Vec<PChain>,
) -> Result<()> {
    if out.len() >= cap {
        return Err(Error::CapExceeded(format!("more than {cap} chain classes")));
    }
    let last = tower.last().expect("chains are nonempty").clone();
    out.push(PChain { tower: tower.clone(), stabilizer: stab.clone() });
    let above: Vec<Subgroup> =
        all.iter().filter(|t| t.order() > last.order() && last.is_subgroup_of(t)).cloned().collect();
    for t in g.fuse_classes(&stab, above) {
        let next = g.normalizer_in(&stab, &t);
        let mut longer = tower.clone();
        longer.push(t);
        extend_chain(g, all, longer, next, cap, out)?;
    }
    Ok(())
}

/// (odd, even) chain-weighted counts Σ |IBr(B_σ)| for block `b`.
fn chain_sums(ctx: &Context, g: &Arc<GroupHandle>, chains: &[PChain], b: usize) -> Result<(usize, usize)> {
    let p = ctx.p();
    let g_blocks = ctx.blocks(g)?;
    let (mut odd, mut even) = (0, 0);
    for c in chains {
        let s = ctx.handle(g, &c.stabilizer)?;
        let st = character_table(&s)?;
        let mut n = 0;
        for local in ctx.blocks(&s)?.iter() {
            if block_induction(&s, local, g, &g_blocks, ctx.field())? == Some(b) {
                n += ibr_count_by_rank(local, &st, p)?;
            }
        }
        if c.length() % 2 == 0 {
            even += n;
        } else {
            odd += n;
        }
    }
    Ok((odd, even))
}

/// |C°(B)_-/G| against |C°(B)_+/G| for one block of positive defect.
pub fn verify_chain_counts(ctx: &Context, g: &Arc<GroupHandle>, b: usize) -> Result<Entry> {
    let blk = &ctx.blocks(g)?[b];
    if blk.defect == 0 {
        return Err(Error::DefectZeroBlock);
    }
    let chains = enumerate_p_chains(g, ctx.p(), ctx.caps().chains)?;
    let (odd, even) = chain_sums(ctx, g, &chains, b)?;
    Ok(Entry::compare(block_id(blk), blk.defect, odd, even, || vec![format!("{} chain classes", chains.len())]))
}

/// Chain balance for every block of positive defect.
pub fn verify_chains(ctx: &Context, g: &Arc<GroupHandle>) -> Result<VerificationReport> {
    let blocks = ctx.blocks(g)?;
    let mut report = VerificationReport::new("chains", ctx, g, None);
    let positive: Vec<&Block> = blocks.iter().filter(|b| b.defect > 0).collect();
    for b in blocks.iter().filter(|b| b.defect == 0) {
        report.notes.push(format!("{} has defect zero and is excluded", block_id(b)));
    }
    if positive.is_empty() {
        return Ok(report.finish());
    }
    let chains = match enumerate_p_chains(g, ctx.p(), ctx.caps().chains) {
        Ok(c) => c,
        Err(e @ Error::CapExceeded(_)) => {
            for b in positive {
                report.per_block.push(Entry::skipped(block_id(b), b.defect, e.to_string()));
            }
            return Ok(report.finish());
        }
        Err(e) => return Err(e),
    };
    report.notes.push(format!("{} chain classes", chains.len()));
    for b in positive {
        let (odd, even) = chain_sums(ctx, g, &chains, b.index)?;
        report.per_block.push(Entry::compare(block_id(b), b.defect, odd, even, || {
            vec![format!("odd chains {odd}, even chains {even}")]
        }));
    }
    Ok(report.finish())
}

/// For each defect-zero block with Brauer character φ: the number of linear
/// Brauer characters λ against the number with λφ again in a defect-zero block.
pub fn verify_linear_twist(ctx: &Context, g: &Arc<GroupHandle>) -> Result<VerificationReport> {
    let m = ctx.modular(g)?;
    let linear: Vec<usize> = (0..m.ibr.len()).filter(|&i| m.ibr[i].is_linear()).collect();
    let mut report = VerificationReport::new("linear-twist", ctx, g, None);
    for b in m.blocks.iter().filter(|b| b.defect == 0) {
        let phi = &m.ibr[b.ibr_members[0]];
        let mut bad = Vec::new();
        for &l in &linear {
            let prod = m.ibr[l].product(phi);
            let ok = m.find_ibr(&prod.values).is_some_and(|j| m.blocks[m.ibr_block[j]].defect == 0);
            if !ok {
                bad.push(ibr_label(&m, l));
            }
        }
        report.per_block.push(Entry::compare(block_id(b), 0, linear.len(), linear.len() - bad.len(), || bad));
    }
    Ok(report.finish())
}

#[cfg(test)]
mod tests;

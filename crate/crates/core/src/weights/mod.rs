//! p-subgroup classes, radical subgroups, dz° characters and weights.

use std::collections::HashSet;
use std::sync::Arc;

use num_traits::Signed;

use crate::blocks::{self, block_induction, quotient_class_map};
use crate::chartab::{self, character_table};
use crate::context::Context;
use crate::error::{Error, Result};
use crate::groups::{GroupHandle, Subgroup};
use crate::modrep::{ibr_coefficients, restrict_regular, BrauerCharacter};
use crate::numbers::Cyclotomic;

/// A Brauer character of H whose deflation to H/O_p(H) has defect zero.
#[derive(Debug, Clone)]
pub struct Dz0 {
    /// Row of the ordinary lift in the table of H.
    pub ordinary: usize,
    pub brauer: Vec<Cyclotomic>,
    /// Block of H containing the lift.
    pub block: usize,
}

impl Dz0 {
    pub fn degree(&self) -> u64 {
        self.brauer[0].to_i64().expect("degrees are integers") as u64
    }
}

pub fn dz0_characters(ctx: &Context, h: &Arc<GroupHandle>) -> Result<Vec<Dz0>> {
    let p = ctx.p();
    let core = h.p_core(p)?;
    let q = ctx.quotient(h, &core)?;
    let qt = character_table(&q.group)?;
    let ht = character_table(h)?;
    let map = quotient_class_map(h, &q);
    let hb = ctx.blocks(h)?;
    let mut out = Vec::new();
    for chi in (0..qt.num_chars()).filter(|&c| qt.is_defect_zero(c, p)) {
        let inflated = chartab::restrict(&qt.irr[chi], &map);
        let row = ht
            .find_row(&inflated)
            .ok_or_else(|| Error::Internal("inflation of an irreducible is reducible".into()))?;
        out.push(Dz0 { ordinary: row, brauer: ht.restrict_to_p_regular(row, p), block: blocks::block_of_irr(&hb, row) });
    }
    Ok(out)
}

/// Every subgroup of the p-group `s`, grown one index-p step at a time.
fn subgroups_of_p_group(g: &GroupHandle, s: &Subgroup, p: u64) -> Vec<Subgroup> {
    let mut all = vec![g.trivial_subgroup()];
    let mut layer = all.clone();
    while !layer.is_empty() {
        let mut seen: HashSet<Vec<u32>> = HashSet::new();
        let mut next = Vec::new();
        for t in &layer {
            let n = g.normalizer_in(s, t);
            for &x in n.elements() {
                if t.contains(x) || !t.contains(g.pow(x, p)) {
                    continue;
                }
                let mut gens = t.generators().to_vec();
                gens.push(x);
                let u = g.closure(&gens);
                if seen.insert(u.elements().to_vec()) {
                    next.push(u);
                }
            }
        }
        all.extend(next.iter().cloned());
        layer = next;
    }
    all
}

/// One representative per G-class of p-subgroups, ordered by (order, elements).
pub fn p_subgroups_up_to_conjugacy(g: &GroupHandle, p: u64) -> Result<Vec<Subgroup>> {
    g.require_enumerated()?;
    let sylow = g.sylow(p)?;
    let mut subs = subgroups_of_p_group(g, &sylow, p);
    subs.sort_by(|a, b| (a.order(), a.elements()).cmp(&(b.order(), b.elements())));
    Ok(g.fuse_classes(&g.whole(), subs))
}

pub fn is_radical(g: &GroupHandle, q: &Subgroup, p: u64) -> Result<bool> {
    Ok(g.p_core_in(&g.normalizer(q), p)? == *q)
}

pub fn radical_p_subgroups(g: &GroupHandle, p: u64) -> Result<Vec<Subgroup>> {
    let mut out = Vec::new();
    for q in p_subgroups_up_to_conjugacy(g, p)? {
        if is_radical(g, &q, p)? {
            out.push(q);
        }
    }
    Ok(out)
}

/// A weight (Q, ψ) up to G-conjugacy.
#[derive(Debug, Clone)]
pub struct Weight {
    pub q: Subgroup,
    /// N_G(Q) as a group on the same points.
    pub normalizer: Arc<GroupHandle>,
    pub psi: BrauerCharacter,
    /// Position of ψ in `dz0(normalizer)`.
    pub dz_index: usize,
    /// Block of N_G(Q) containing ψ.
    pub local_block: usize,
    pub induced_block: usize,
    pub orbit_id: String,
}

/// Alp(G)/G. N_G(Q) fixes each of its own characters, so every dz° member of
/// N_G(Q) is a separate orbit.
pub fn enumerate_weights(ctx: &Context, g: &Arc<GroupHandle>) -> Result<Vec<Weight>> {
    let p = ctx.p();
    let g_blocks = ctx.blocks(g)?;
    let mut out = Vec::new();
    for (i, q) in radical_p_subgroups(g, p)?.into_iter().enumerate() {
        let n = ctx.handle(g, &g.normalizer(&q))?;
        let n_blocks = ctx.blocks(&n)?;
        for (k, d) in ctx.dz0(&n)?.iter().enumerate() {
            let induced = block_induction(&n, &n_blocks[d.block], g, &g_blocks, ctx.field())?
                .ok_or_else(|| Error::Internal(format!("weight block of Q{i} does not induce")))?;
            out.push(Weight {
                q: q.clone(),
                normalizer: n.clone(),
                psi: BrauerCharacter { values: d.brauer.clone(), degree: d.degree() },
                dz_index: k,
                local_block: d.block,
                induced_block: induced,
                orbit_id: format!("Q{i}:{k}"),
            });
        }
    }
    Ok(out)
}

/// Rad°(G): radical classes carrying at least one weight.
pub fn rad0(ctx: &Context, g: &Arc<GroupHandle>) -> Result<Vec<Subgroup>> {
    let ws = enumerate_weights(ctx, g)?;
    let mut out: Vec<Subgroup> = Vec::new();
    for w in ws {
        if out.last() != Some(&w.q) {
            out.push(w.q);
        }
    }
    Ok(out)
}

pub fn b_weights(weights: &[Weight], block: usize) -> Vec<&Weight> {
    weights.iter().filter(|w| w.induced_block == block).collect()
}

/// A pair (Q, η) with Q radical in K and η ∈ IBr(N_G(Q)) over dz°(N_K(Q)).
#[derive(Debug, Clone)]
pub struct WeightOver {
    pub q: Subgroup,
    pub normalizer: Arc<GroupHandle>,
    /// Index of η in the IBr list of the normalizer.
    pub eta: usize,
}

/// Alp(G|K)/G for K ⊴ G.
pub fn weights_over(ctx: &Context, g: &Arc<GroupHandle>, k: &Subgroup) -> Result<Vec<WeightOver>> {
    if !g.is_normal(k) {
        return Err(Error::NotNormal(format!("subgroup of order {} in group of order {}", k.order(), g.order())));
    }
    let p = ctx.p();
    let kh = ctx.handle(g, k)?;
    let rad: Vec<Subgroup> =
        radical_p_subgroups(&kh, p)?.iter().map(|q| g.transport(&kh, q)).collect::<Result<_>>()?;
    let mut out = Vec::new();
    for q in g.fuse_classes(&g.whole(), rad) {
        let ng_sub = g.normalizer(&q);
        let ng = ctx.handle(g, &ng_sub)?;
        let nk = ctx.handle(g, &g.intersection(&ng_sub, k))?;
        let nk_table = character_table(&nk)?;
        let nk_mod = ctx.modular(&nk)?;
        let dz: Vec<usize> = ctx
            .dz0(&nk)?
            .iter()
            .map(|d| nk_mod.find_ibr(&d.brauer).ok_or_else(|| Error::Internal("dz° member is not in IBr".into())))
            .collect::<Result<_>>()?;
        for (e, eta) in ctx.modular(&ng)?.ibr.iter().enumerate() {
            let res = restrict_regular(&nk, &ng, p, &eta.values)?;
            let coeffs = ibr_coefficients(&nk_table, &nk_mod.regular, &nk_mod.ibr, &res)?;
            if dz.iter().any(|&i| coeffs[i].is_positive()) {
                out.push(WeightOver { q: q.clone(), normalizer: ng.clone(), eta: e });
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests;

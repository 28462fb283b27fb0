//! Glauberman and Dade–Glauberman–Nagao correspondents, relative defect and
//! relative-defect-zero Brauer characters.

use std::sync::Arc;

use crate::blocks::{self, covers};
use crate::chartab::{self, character_table};
use crate::classfn;
use crate::context::Context;
use crate::error::{Error, Result};
use crate::groups::{GroupHandle, Quotient, Subgroup};
use crate::modrep::BrauerCharacter;
use crate::numbers::{arith, Cyclotomic};

fn is_p_power(n: u64, p: u64) -> bool {
    arith::p_prime_part(n, p) == 1
}

fn require(cond: bool, what: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::HypothesisViolated(what()))
    }
}

fn all_classes(h: &GroupHandle) -> Vec<usize> {
    (0..h.num_classes()).collect()
}

fn brauer(values: Vec<Cyclotomic>) -> BrauerCharacter {
    let degree = values[0].to_i64().expect("degree is an integer") as u64;
    BrauerCharacter { values, degree }
}

/// Checks K ⊴ M with M/K a p-group.
fn check_p_extension(m: &GroupHandle, k: &Subgroup, p: u64) -> Result<()> {
    require(m.is_normal(k), || "K is not normal in M".into())?;
    require(is_p_power(m.order() / k.order(), p), || format!("|M:K| = {} is not a power of {p}", m.order() / k.order()))
}

/// Π_D(ϑ) computed through blocks: the block b of M over bl(ϑ), its Brauer
/// correspondent C in N_M(D), and the defect-zero block of C_K(D) under C.
/// Returns C_K(D) and the row of Π_D(ϑ) in its table.
pub fn glauberman_dgn_ordinary(
    ctx: &Context,
    m: &Arc<GroupHandle>,
    k: &Subgroup,
    theta: usize,
    d: &Subgroup,
) -> Result<(Arc<GroupHandle>, usize)> {
    let p = ctx.p();
    check_p_extension(m, k, p)?;
    let kh = ctx.handle(m, k)?;
    let kt = character_table(&kh)?;
    require(kt.is_defect_zero(theta, p), || format!("χ{theta} of K does not have defect zero"))?;
    require(
        classfn::is_invariant(&kh, &all_classes(&kh), &kt.irr[theta], m.generators())?,
        || format!("χ{theta} of K is not M-invariant"),
    )?;
    require(m.product_order(k, d) == m.order(), || "M ≠ KD".into())?;

    let k_blocks = ctx.blocks(&kh)?;
    let small = &k_blocks[blocks::block_of_irr(&k_blocks, theta)];
    let m_blocks = ctx.blocks(m)?;
    let mut over = Vec::new();
    for b in m_blocks.iter() {
        if covers(m, b, &kh, small)? {
            over.push(b.index);
        }
    }
    let [b] = over[..] else {
        return Err(Error::Internal(format!("{} blocks of M cover bl(ϑ)", over.len())));
    };
    let (n, c) = blocks::brauer_correspondent(ctx, m, b, d)?;
    let n_blocks = ctx.blocks(&n)?;
    let ck = ctx.handle(m, &m.centralizer_in(k, d))?;
    let ck_blocks = ctx.blocks(&ck)?;
    let mut under = Vec::new();
    for x in ck_blocks.iter().filter(|x| x.defect == 0) {
        if covers(&n, &n_blocks[c], &ck, x)? {
            under.push(x.irr_members[0]);
        }
    }
    match under[..] {
        [row] => Ok((ck, row)),
        _ => Err(Error::Internal(format!("{} defect-zero blocks of C_K(D) under C", under.len()))),
    }
}

/// Coprime-action oracle: the unique constituent of ϑ restricted to C_K(D)
/// whose multiplicity is prime to p.
pub fn glauberman_by_multiplicity(
    ctx: &Context,
    m: &Arc<GroupHandle>,
    k: &Subgroup,
    theta: usize,
    d: &Subgroup,
) -> Result<(Arc<GroupHandle>, usize)> {
    let p = ctx.p();
    let kh = ctx.handle(m, k)?;
    let ck = ctx.handle(m, &m.centralizer_in(k, d))?;
    let res = chartab::restrict(&character_table(&kh)?.irr[theta], &chartab::fusion(&ck, &kh)?);
    let ct = character_table(&ck)?;
    let hits: Vec<usize> = (0..ct.num_chars())
        .filter(|&c| {
            let mult = ct.multiplicity(&res, c).to_i64().expect("multiplicities are integers");
            mult % p as i64 != 0
        })
        .collect();
    match hits[..] {
        [row] => Ok((ck, row)),
        _ => Err(Error::HypothesisViolated(format!("{} constituents with multiplicity prime to p", hits.len()))),
    }
}

/// K ⊴ M with M/K a p-group, an M-invariant φ ∈ dz°(K), L = O_p(K), and D
/// with D/L a defect group of the block of M/L covering bl(φ̄).
#[derive(Debug, Clone)]
pub struct DgnContext {
    pub m: Arc<GroupHandle>,
    pub k: Subgroup,
    /// φ on the p-regular classes of K.
    pub phi: Vec<Cyclotomic>,
    pub l: Subgroup,
    pub d: Subgroup,
    quotient: Arc<Quotient>,
    /// Row of ϑ̄ in the table of K/L.
    theta_bar: usize,
}

impl DgnContext {
    pub fn new(ctx: &Context, m: &Arc<GroupHandle>, k: &Subgroup, phi: &[Cyclotomic]) -> Result<Self> {
        let p = ctx.p();
        check_p_extension(m, k, p)?;
        let kh = ctx.handle(m, k)?;
        let regular = kh.p_regular_classes(p);
        require(classfn::is_invariant(&kh, &regular, phi, m.generators())?, || "φ is not M-invariant".into())?;
        let l = m.transport(&kh, &kh.p_core(p)?)?;
        let q = ctx.quotient(m, &l)?;
        let kbar = ctx.handle(&q.group, &q.image_subgroup(m, k))?;
        let map = classfn::quotient_class_map(&kh, m, &q, &kbar)?;
        let kbt = character_table(&kbar)?;
        let lifts: Vec<usize> = (0..kbt.num_chars())
            .filter(|&c| kbt.is_defect_zero(c, p) && classfn::inflate(&kbt.irr[c], &map, &regular) == phi)
            .collect();
        let [theta_bar] = lifts[..] else {
            return Err(Error::HypothesisViolated(format!("φ has {} defect-zero lifts modulo O_p(K)", lifts.len())));
        };
        let mbar = &q.group;
        let kb_blocks = ctx.blocks(&kbar)?;
        let small = &kb_blocks[blocks::block_of_irr(&kb_blocks, theta_bar)];
        let mut over = Vec::new();
        for b in ctx.blocks(mbar)?.iter() {
            if covers(mbar, b, &kbar, small)? {
                over.push(b.defect_group.clone());
            }
        }
        let [dbar] = &over[..] else {
            return Err(Error::Internal(format!("{} blocks of M/L cover bl(φ̄)", over.len())));
        };
        let d = q.preimage(m, dbar);
        let dc = DgnContext { m: m.clone(), k: k.clone(), phi: phi.to_vec(), l, d, quotient: q, theta_bar };
        dc.check()?;
        Ok(dc)
    }

    fn check(&self) -> Result<()> {
        let m = &self.m;
        require(m.product_order(&self.k, &self.d) == m.order(), || "M ≠ KD".into())?;
        require(m.intersection(&self.k, &self.d) == self.l, || "K ∩ D ≠ O_p(K)".into())
    }
}

/// π_D(φ) ∈ dz°(N_K(D)), returned with N_K(D).
pub fn dgn_brauer(ctx: &Context, c: &DgnContext) -> Result<(Arc<GroupHandle>, BrauerCharacter)> {
    let q = &c.quotient;
    let m = &c.m;
    let kbar = q.image_subgroup(m, &c.k);
    let dbar = q.image_subgroup(m, &c.d);
    let (ck, row) = glauberman_dgn_ordinary(ctx, &q.group, &kbar, c.theta_bar, &dbar)?;
    let nkd = ctx.handle(m, &m.intersection(&c.k, &m.normalizer(&c.d)))?;
    let map = classfn::quotient_class_map(&nkd, m, q, &ck)?;
    let values = classfn::inflate(&character_table(&ck)?.irr[row], &map, &nkd.p_regular_classes(ctx.p()));
    Ok((nkd, brauer(values)))
}

/// d_N(χ), checked to agree over every constituent of χ restricted to N.
pub fn relative_defect(ctx: &Context, g: &Arc<GroupHandle>, chi: usize, n: &Subgroup) -> Result<u32> {
    if !g.is_normal(n) {
        return Err(Error::NotNormal(format!("subgroup of order {} in group of order {}", n.order(), g.order())));
    }
    let p = ctx.p();
    let nh = ctx.handle(g, n)?;
    let gt = character_table(g)?;
    let nt = character_table(&nh)?;
    let res = chartab::restrict(&gt.irr[chi], &chartab::fusion(&nh, g)?);
    let index = arith::val(g.order() / n.order(), p) as i64;
    let mut found: Option<i64> = None;
    for theta in 0..nt.num_chars() {
        if nt.multiplicity(&res, theta).is_zero() {
            continue;
        }
        let d = index - arith::val(gt.degrees[chi], p) as i64 + arith::val(nt.degrees[theta], p) as i64;
        match found {
            None => found = Some(d),
            Some(e) if e != d => return Err(Error::Internal(format!("relative defect {e} vs {d}"))),
            _ => {}
        }
    }
    let d = found.ok_or_else(|| Error::Internal("character restricts to zero".into()))?;
    u32::try_from(d).map_err(|_| Error::Internal(format!("negative relative defect {d}")))
}

/// rdz°(G | M, φ) as Brauer characters on the p-regular classes of G.
pub fn rdz0(
    ctx: &Context,
    g: &Arc<GroupHandle>,
    m: &Subgroup,
    k: &Subgroup,
    phi: &[Cyclotomic],
) -> Result<Vec<BrauerCharacter>> {
    let p = ctx.p();
    require(g.is_normal(k) && g.is_normal(m) && k.is_subgroup_of(m), || "need K ≤ M both normal in G".into())?;
    let index = m.order() / k.order();
    require(is_p_power(index, p), || format!("|M:K| = {index} is not a power of {p}"))?;
    if index > ctx.caps().extension_index {
        return Err(Error::CapExceeded(format!("|M:K| = {index} above the extension cap")));
    }
    let kh = ctx.handle(g, k)?;
    let regular = kh.p_regular_classes(p);
    require(ctx.dz0(&kh)?.iter().any(|x| x.brauer == phi), || "φ is not in dz°(K)".into())?;
    let mh = ctx.handle(g, m)?;
    require(classfn::is_invariant(&kh, &regular, phi, mh.generators())?, || "φ is not M-invariant".into())?;

    // Clifford correspondence through the stabilizer of an orbit-minimal conjugate
    let orbit = phi_orbit(g, &kh, &regular, phi)?;
    let rep = orbit.into_iter().min_by_key(|v| dense(v)).expect("orbit is nonempty");
    let stab = g.subgroup_from_set(
        (0..g.size() as u32)
            .filter(|&x| classfn::conjugate(&kh, &regular, &rep, g.element(x)).is_ok_and(|v| v == rep))
            .collect(),
    );
    if stab.order() == g.order() {
        return rdz0_invariant(ctx, g, m, k, &rep);
    }
    let th = ctx.handle(g, &stab)?;
    let inner = rdz0_invariant(ctx, &th, &th.transport(g, m)?, &th.transport(g, k)?, &rep)?;
    let g_regular = g.p_regular_classes(p);
    let t_regular = th.p_regular_classes(p);
    inner
        .into_iter()
        .map(|psi| Ok(brauer(classfn::induce(&th, &t_regular, &psi.values, g, &g_regular)?)))
        .collect()
}

fn dense(v: &[Cyclotomic]) -> Vec<Vec<num_rational::BigRational>> {
    let n = v.iter().map(Cyclotomic::conductor).fold(1, |a, b| arith::lcm(a as u64, b as u64) as u32);
    v.iter().map(|x| x.dense_key(n)).collect()
}

fn phi_orbit(g: &GroupHandle, kh: &GroupHandle, regular: &[usize], phi: &[Cyclotomic]) -> Result<Vec<Vec<Cyclotomic>>> {
    let mut out = vec![phi.to_vec()];
    for x in 0..g.size() as u32 {
        let v = classfn::conjugate(kh, regular, phi, g.element(x))?;
        if !out.contains(&v) {
            out.push(v);
        }
    }
    Ok(out)
}

fn rdz0_invariant(
    ctx: &Context,
    g: &Arc<GroupHandle>,
    m: &Subgroup,
    k: &Subgroup,
    phi: &[Cyclotomic],
) -> Result<Vec<BrauerCharacter>> {
    let p = ctx.p();
    let kh = ctx.handle(g, k)?;
    let regular = kh.p_regular_classes(p);
    let l = g.transport(&kh, &kh.p_core(p)?)?;
    let q = ctx.quotient(g, &l)?;
    let gbar = &q.group;
    let kbar_sub = q.image_subgroup(g, k);
    let mbar_sub = q.image_subgroup(g, m);
    let kbar = ctx.handle(gbar, &kbar_sub)?;
    let mbar = ctx.handle(gbar, &mbar_sub)?;
    let kbt = character_table(&kbar)?;
    let kmap = classfn::quotient_class_map(&kh, g, &q, &kbar)?;
    let lifts: Vec<usize> = (0..kbt.num_chars())
        .filter(|&c| kbt.is_defect_zero(c, p) && classfn::inflate(&kbt.irr[c], &kmap, &regular) == phi)
        .collect();
    let [theta] = lifts[..] else {
        return Err(Error::HypothesisViolated(format!("φ has {} defect-zero lifts modulo O_p(K)", lifts.len())));
    };
    let mbt = character_table(&mbar)?;
    let fus = chartab::fusion(&kbar, &mbar)?;
    let extensions: Vec<usize> = (0..mbt.num_chars())
        .filter(|&c| mbt.degrees[c] == kbt.degrees[theta] && chartab::restrict(&mbt.irr[c], &fus) == kbt.irr[theta])
        .collect();
    let mut invariant = Vec::new();
    for e in extensions {
        if classfn::is_invariant(&mbar, &all_classes(&mbar), &mbt.irr[e], gbar.generators())? {
            invariant.push(e);
        }
    }
    if invariant.is_empty() {
        return Err(Error::NoInvariantExtension(format!("ϑ̄ of degree {}", kbt.degrees[theta])));
    }
    let gmap = blocks::quotient_class_map(g, &q);
    let g_regular = g.p_regular_classes(p);
    let mut first: Option<Vec<BrauerCharacter>> = None;
    // a second extension must give the same set
    for &e in invariant.iter().take(2) {
        let set = rdz_over_extension(ctx, gbar, &mbar_sub, &mbar, e)?;
        let gt = character_table(gbar)?;
        let mut out: Vec<BrauerCharacter> = Vec::new();
        for chi in set {
            let values = classfn::inflate(&gt.irr[chi], &gmap, &g_regular);
            let b = brauer(values);
            if !out.contains(&b) {
                out.push(b);
            }
        }
        match &first {
            None => first = Some(out),
            Some(f) => {
                let same = f.len() == out.len() && f.iter().all(|x| out.contains(x));
                if !same {
                    return Err(Error::Internal("rdz° depends on the chosen extension".into()));
                }
            }
        }
    }
    Ok(first.expect("at least one extension"))
}

/// Rows χ of G with M-relative defect zero lying over the character `ext` of M.
fn rdz_over_extension(
    ctx: &Context,
    g: &Arc<GroupHandle>,
    m: &Subgroup,
    mh: &Arc<GroupHandle>,
    ext: usize,
) -> Result<Vec<usize>> {
    let gt = character_table(g)?;
    let fus = chartab::fusion(mh, g)?;
    let mt = character_table(mh)?;
    let mut out = Vec::new();
    for chi in 0..gt.num_chars() {
        let res = chartab::restrict(&gt.irr[chi], &fus);
        if mt.multiplicity(&res, ext).is_zero() {
            continue;
        }
        if relative_defect(ctx, g, chi, m)? == 0 {
            out.push(chi);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests;

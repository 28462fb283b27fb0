//! p-blocks: central characters reduced mod p, defect groups, induction,
//! Brauer correspondents, covering and domination.

use std::sync::Arc;

use crate::chartab::{self, character_table, class_constants, CharacterTable, ClassConstants};
use crate::context::Context;
use crate::error::{Error, Result};
use crate::groups::{GroupHandle, Quotient, Subgroup};
use crate::numbers::{arith, Fe, FiniteField, PModularSystem};

/// Largest class count for which the homomorphism check runs over all pairs.
const FULL_CHECK_CLASSES: usize = 30;

#[derive(Debug, Clone)]
pub struct Block {
    pub index: usize,
    pub group_id: String,
    pub p: u64,
    /// λ_B(K⁺) for every class K.
    pub lambda: Vec<Fe>,
    pub irr_members: Vec<usize>,
    /// Filled once Brauer characters are known.
    pub ibr_members: Vec<usize>,
    pub defect: u32,
    pub defect_group: Subgroup,
}

impl Block {
    pub fn is_principal(&self) -> bool {
        self.irr_members.contains(&0)
    }

    pub fn contains_irr(&self, chi: usize) -> bool {
        self.irr_members.contains(&chi)
    }
}

/// Reduced central character of χ.
pub fn central_lambda(table: &CharacterTable, chi: usize, sys: &PModularSystem) -> Result<Vec<Fe>> {
    (0..table.num_classes())
        .map(|k| {
            let w = table.central_character(chi, k);
            sys.star(&w).map_err(|e| Error::ReductionFailure(format!("χ{chi} on class {k}: {e}")))
        })
        .collect()
}

/// Whether `lambda` is multiplicative on class sums.
pub fn is_algebra_homomorphism(lambda: &[Fe], cc: &ClassConstants, f: &FiniteField) -> bool {
    let r = cc.num_classes();
    let js = r.min(FULL_CHECK_CLASSES);
    (0..r).all(|i| {
        (0..js).all(|j| {
            let rhs = (0..r).fold(0, |acc, k| {
                let a = cc.get(i, j, k);
                if a == 0 {
                    acc
                } else {
                    f.add(acc, f.mul(f.from_int((a % f.characteristic()) as i64), lambda[k]))
                }
            });
            f.mul(lambda[i], lambda[j]) == rhs
        })
    })
}

pub fn distribute_blocks(g: &GroupHandle, sys: &PModularSystem) -> Result<Vec<Block>> {
    let table = character_table(g)?;
    let cc = class_constants(g);
    let p = sys.p;
    let mut blocks: Vec<Block> = Vec::new();
    for chi in 0..table.num_chars() {
        let lam = central_lambda(&table, chi, sys)?;
        match blocks.iter_mut().find(|b| b.lambda == lam) {
            Some(b) => b.irr_members.push(chi),
            None => blocks.push(Block {
                index: blocks.len(),
                group_id: g.id().to_string(),
                p,
                lambda: lam,
                irr_members: vec![chi],
                ibr_members: Vec::new(),
                defect: 0,
                defect_group: g.trivial_subgroup(),
            }),
        }
    }
    for b in &mut blocks {
        if !is_algebra_homomorphism(&b.lambda, &cc, sys.field()) {
            return Err(Error::ReductionFailure(format!("block {} is not multiplicative", b.index)));
        }
        b.defect = b.irr_members.iter().map(|&c| table.char_defect(c, p)).max().unwrap_or(0);
        b.defect_group = defect_group(g, &table, b, p)?;
    }
    Ok(blocks)
}

/// Sylow subgroup of C_G(x_K) for a p-regular class K with λ_B(K⁺) ≠ 0 and
/// smallest centralizer p-part.
pub fn defect_group(g: &GroupHandle, table: &CharacterTable, b: &Block, p: u64) -> Result<Subgroup> {
    let best = table
        .p_regular_classes(p)
        .into_iter()
        .filter(|&k| b.lambda[k] != 0)
        .min_by_key(|&k| arith::val(table.order / table.class_sizes[k], p))
        .ok_or_else(|| Error::Internal(format!("block {} vanishes on all p-regular classes", b.index)))?;
    let rep = g.classes()[best].rep;
    let c = g.element_centralizer_in(&g.whole(), rep);
    let d = g.sylow_in(&c, p)?;
    if d.order() != p.pow(b.defect) {
        return Err(Error::Internal(format!(
            "defect class gives |D| = {} but block {} has defect {}",
            d.order(),
            b.index,
            b.defect
        )));
    }
    Ok(d)
}

pub fn block_of_irr(blocks: &[Block], chi: usize) -> usize {
    blocks.iter().position(|b| b.contains_irr(chi)).expect("every character lies in a block")
}

/// λ_b^G on the classes of `g`: the value of λ_b on (K ∩ H)⁺.
pub fn induced_lambda(h: &GroupHandle, lambda: &[Fe], g: &GroupHandle, f: &FiniteField) -> Result<Vec<Fe>> {
    let fus = chartab::fusion(h, g)?;
    let mut out = vec![0; g.num_classes()];
    for (l, &k) in fus.iter().enumerate() {
        out[k] = f.add(out[k], lambda[l]);
    }
    Ok(out)
}

/// Index of b^G among `g_blocks`, or `None` when the induced block is undefined.
pub fn block_induction(
    h: &GroupHandle,
    b: &Block,
    g: &GroupHandle,
    g_blocks: &[Block],
    f: &FiniteField,
) -> Result<Option<usize>> {
    let lam = induced_lambda(h, &b.lambda, g, f)?;
    Ok(g_blocks.iter().position(|bg| bg.lambda == lam))
}

/// The block of N_G(D) with defect group D inducing to block `b` of `g`.
pub fn brauer_correspondent(
    ctx: &Context,
    g: &Arc<GroupHandle>,
    b: usize,
    d: &Subgroup,
) -> Result<(Arc<GroupHandle>, usize)> {
    let blocks = ctx.blocks(g)?;
    let n = ctx.handle(g, &g.normalizer(d))?;
    let n_blocks = ctx.blocks(&n)?;
    let target = arith::val(d.order(), ctx.p());
    let mut found = Vec::new();
    for c in n_blocks.iter() {
        if c.defect == target && block_induction(&n, c, g, &blocks, ctx.field())? == Some(b) {
            found.push(c.index);
        }
    }
    match found.as_slice() {
        [c] => Ok((n, *c)),
        _ => Err(Error::NoCorrespondent(format!("{} candidates for block {b}", found.len()))),
    }
}

/// Whether the generators of `g` normalize `n` (both on the same points).
pub fn is_normal_subgroup(n: &GroupHandle, g: &GroupHandle) -> bool {
    n.generators().iter().all(|x| g.contains_perm(x))
        && g.generators().iter().all(|y| n.generators().iter().all(|x| n.contains_perm(&x.conjugate_by(y))))
}

/// Whether some χ ∈ Irr(B) lies over some θ ∈ Irr(b) for b a block of N ⊴ G.
pub fn covers(g: &GroupHandle, big: &Block, n: &GroupHandle, small: &Block) -> Result<bool> {
    if !is_normal_subgroup(n, g) {
        return Err(Error::NotNormal(format!("group of order {} in group of order {}", n.order(), g.order())));
    }
    let gt = character_table(g)?;
    let nt = character_table(n)?;
    let fus = chartab::fusion(n, g)?;
    for &chi in &big.irr_members {
        let res = chartab::restrict(&gt.irr[chi], &fus);
        for &theta in &small.irr_members {
            if !nt.multiplicity(&res, theta).is_zero() {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// Class of G/N containing the image of each class of G.
pub fn quotient_class_map(g: &GroupHandle, q: &Quotient) -> Vec<usize> {
    g.classes().iter().map(|c| q.group.class_of(q.image(c.rep))).collect()
}

/// Blocks of G/N whose inflated characters lie in `big`.
pub fn dominated_blocks(g: &GroupHandle, big: &Block, q: &Quotient, q_blocks: &[Block]) -> Result<Vec<usize>> {
    let gt = character_table(g)?;
    let qt = character_table(&q.group)?;
    let map = quotient_class_map(g, q);
    let mut out = Vec::new();
    for b in q_blocks {
        let mut inside = true;
        for &chi in &b.irr_members {
            let inf = chartab::restrict(&qt.irr[chi], &map);
            let row = gt
                .find_row(&inf)
                .ok_or_else(|| Error::Internal("inflated character is not irreducible".into()))?;
            inside &= big.contains_irr(row);
        }
        if inside {
            out.push(b.index);
        }
    }
    Ok(out)
}

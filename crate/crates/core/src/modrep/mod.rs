//! Irreducible Brauer characters from simple modules, decomposition matrices,
//! projective indecomposable characters and block membership of IBr.

pub mod meataxe;

use std::collections::HashMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sha2::{Digest, Sha256};

use crate::blocks::Block;
use crate::chartab::{character_table, CharacterTable};
use crate::context::Context;
use crate::error::{Error, Result};
use crate::groups::GroupHandle;
use crate::numbers::{poly, qmat, Cyclotomic, PModularSystem};

pub use meataxe::{chop, FModule};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BrauerCharacter {
    /// Values on the p-regular classes, in class order.
    pub values: Vec<Cyclotomic>,
    pub degree: u64,
}

impl BrauerCharacter {
    pub fn is_linear(&self) -> bool {
        self.degree == 1
    }

    pub fn product(&self, other: &BrauerCharacter) -> BrauerCharacter {
        BrauerCharacter {
            values: self.values.iter().zip(&other.values).map(|(a, b)| a * b).collect(),
            degree: self.degree * other.degree,
        }
    }

    fn sort_key(&self, n: u32) -> (u64, Vec<Vec<BigRational>>) {
        (self.degree, self.values.iter().map(|v| v.dense_key(n)).collect())
    }
}

/// d[χ][φ].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionMatrix {
    pub entries: Vec<Vec<u64>>,
}

impl DecompositionMatrix {
    pub fn get(&self, chi: usize, phi: usize) -> u64 {
        self.entries[chi][phi]
    }

    pub fn num_ibr(&self) -> usize {
        self.entries.first().map_or(0, |r| r.len())
    }
}

/// Everything modular about one group at the job's prime.
#[derive(Debug)]
pub struct Modular {
    pub regular: Vec<usize>,
    pub ibr: Vec<BrauerCharacter>,
    pub decomposition: DecompositionMatrix,
    pub ibr_block: Vec<usize>,
    pub blocks: Vec<Block>,
}

impl Modular {
    pub fn find_ibr(&self, values: &[Cyclotomic]) -> Option<usize> {
        self.ibr.iter().position(|b| b.values == values)
    }
}

pub(crate) fn modular_data(ctx: &Context, g: &Arc<GroupHandle>) -> Result<Modular> {
    let table = character_table(g)?;
    let p = ctx.p();
    let regular = table.p_regular_classes(p);
    let simples = all_simples(ctx, g)?;
    let mut ibr = simples
        .iter()
        .map(|m| brauer_character(m, g, ctx.sys(), &regular))
        .collect::<Result<Vec<_>>>()?;
    let n = ctx.sys().n_prime as u32;
    ibr.sort_by_cached_key(|b| b.sort_key(n));
    let decomposition = decomposition_matrix(&table, &regular, &ibr)?;
    let blocks = ctx.blocks(g)?;
    let (blocks, ibr_block) = assign_ibr_to_blocks(&blocks, &decomposition)?;
    Ok(Modular { regular, ibr, decomposition, ibr_block, blocks })
}

fn module_rng(ctx: &Context, g: &GroupHandle) -> ChaCha8Rng {
    let mut h = Sha256::new();
    h.update(ctx.seed().to_le_bytes());
    h.update(g.id().as_bytes());
    let digest = h.finalize();
    let mut seed = [0u8; 32];
    seed.copy_from_slice(&digest);
    ChaCha8Rng::from_seed(seed)
}

/// One simple module per isomorphism type, found among composition factors of
/// tensor powers of the natural permutation module.
pub fn all_simples(ctx: &Context, g: &Arc<GroupHandle>) -> Result<Vec<FModule>> {
    let regular = g.p_regular_classes(ctx.p());
    let target = regular.len();
    let caps = ctx.caps();
    let mut rng = module_rng(ctx, g);
    let mut found: Vec<FModule> = Vec::new();
    let mut chars: Vec<BrauerCharacter> = Vec::new();
    let mut add = |m: FModule, found: &mut Vec<FModule>| -> Result<bool> {
        let bc = brauer_character(&m, g, ctx.sys(), &regular)?;
        if chars.contains(&bc) {
            return Ok(false);
        }
        chars.push(bc);
        found.push(m);
        Ok(true)
    };
    let nat = FModule::permutation(ctx.sys().field.clone(), g);
    let mut factors = Vec::new();
    for m in chop(&nat, &mut rng, caps.dim)? {
        if add(m, &mut found)? {
            factors.push(found.len() - 1);
        }
    }
    let tensor_with: Vec<FModule> = factors
        .iter()
        .map(|&i| found[i].clone())
        .filter(|m| !is_trivial_module(m))
        .collect();
    let mut frontier: Vec<usize> = (0..found.len()).collect();
    let mut depth = 1;
    while found.len() < target && !frontier.is_empty() && depth < caps.tensor_depth {
        depth += 1;
        let mut next = Vec::new();
        for &s in &frontier {
            for t in &tensor_with {
                if found[s].dim * t.dim > caps.dim {
                    continue;
                }
                let prod = found[s].tensor(t);
                for m in chop(&prod, &mut rng, caps.dim)? {
                    if add(m, &mut found)? {
                        next.push(found.len() - 1);
                    }
                }
                if found.len() == target {
                    break;
                }
            }
            if found.len() == target {
                break;
            }
        }
        frontier = next;
    }
    if found.len() != target {
        return Err(Error::CapExceeded(format!(
            "found {} of {target} simple modules within tensor depth {} and dimension {}",
            found.len(),
            caps.tensor_depth,
            caps.dim
        )));
    }
    Ok(found)
}

fn is_trivial_module(m: &FModule) -> bool {
    m.dim == 1 && m.gens.iter().all(|a| a.get(0, 0) == 1)
}

/// Lifts the eigenvalues of each p-regular class representative to roots of unity.
pub fn brauer_character(
    m: &FModule,
    g: &GroupHandle,
    sys: &PModularSystem,
    regular: &[usize],
) -> Result<BrauerCharacter> {
    let f = &*m.field;
    let n = sys.n_prime;
    let mut dlog: HashMap<u64, u64> = HashMap::new();
    let mut z = 1;
    for k in 0..n {
        dlog.insert(z, k);
        z = f.mul(z, sys.zeta_image);
    }
    let mut values = Vec::with_capacity(regular.len());
    for &k in regular {
        let mat = m.word(&g.word(g.classes()[k].rep));
        let mut cp = mat.charpoly(f);
        let mut terms: Vec<(i64, BigRational)> = Vec::new();
        let mut total = 0;
        for r in poly::roots(f, &cp.clone()) {
            let e = *dlog
                .get(&r)
                .ok_or_else(|| Error::InconsistentLift(format!("eigenvalue {r} has order not dividing {n}")))?;
            loop {
                let (q, rem) = poly::divrem(f, &cp, &[f.neg(r), 1]);
                if !rem.is_empty() {
                    break;
                }
                cp = q;
                total += 1;
                terms.push((e as i64, BigRational::from_integer(BigInt::from(1))));
            }
        }
        if total != m.dim {
            return Err(Error::InconsistentLift(format!("{total} of {} eigenvalues found", m.dim)));
        }
        values.push(Cyclotomic::from_terms(n as u32, terms));
    }
    Ok(BrauerCharacter { values, degree: m.dim as u64 })
}

/// (1/|G|) Σ over p-regular classes of |K| a(x) b(x)‾, which is rational
/// when `b` is a Brauer character or a difference of them.
pub fn regular_inner_product(
    table: &CharacterTable,
    regular: &[usize],
    a: &[Cyclotomic],
    b: &[Cyclotomic],
) -> Result<BigRational> {
    let mut acc = Cyclotomic::zero(1);
    for (i, &k) in regular.iter().enumerate() {
        let t = &a[i] * &b[i].conj();
        acc = &acc + &t.scale_int(table.class_sizes[k] as i64);
    }
    let v = acc
        .to_rational()
        .ok_or_else(|| Error::Internal("inner product over p-regular classes is irrational".into()))?;
    Ok(v / BigRational::from_integer(BigInt::from(table.order)))
}

pub fn gram(table: &CharacterTable, regular: &[usize], vs: &[Vec<Cyclotomic>]) -> Result<Vec<Vec<BigRational>>> {
    vs.iter()
        .map(|a| vs.iter().map(|b| regular_inner_product(table, regular, a, b)).collect())
        .collect()
}

/// Coefficients of a class function on p-regular classes in the IBr basis.
pub fn ibr_coefficients(
    table: &CharacterTable,
    regular: &[usize],
    ibr: &[BrauerCharacter],
    values: &[Cyclotomic],
) -> Result<Vec<BigRational>> {
    let vs: Vec<Vec<Cyclotomic>> = ibr.iter().map(|b| b.values.clone()).collect();
    let gm = gram(table, regular, &vs)?;
    let rhs = vs
        .iter()
        .map(|phi| regular_inner_product(table, regular, values, phi))
        .collect::<Result<Vec<_>>>()?;
    let x = qmat::solve(&gm, &rhs).ok_or_else(|| Error::Internal("Brauer characters are dependent".into()))?;
    let back: Vec<Cyclotomic> = (0..regular.len())
        .map(|i| {
            vs.iter().zip(&x).fold(Cyclotomic::zero(1), |acc, (phi, c)| &acc + &phi[i].scale(c))
        })
        .collect();
    if back != values {
        return Err(Error::Internal("class function is not in the span of IBr".into()));
    }
    Ok(x)
}

/// Nonnegative integer coefficients, or `NonIntegralSolution`.
pub fn to_multiplicities(x: &[BigRational]) -> Result<Vec<u64>> {
    x.iter()
        .map(|c| {
            if !c.is_integer() || c.is_negative() {
                return Err(Error::NonIntegralSolution(c.to_string()));
            }
            c.to_integer().to_u64().ok_or_else(|| Error::NonIntegralSolution(c.to_string()))
        })
        .collect()
}

pub fn decomposition_matrix(
    table: &CharacterTable,
    regular: &[usize],
    ibr: &[BrauerCharacter],
) -> Result<DecompositionMatrix> {
    let entries = (0..table.num_chars())
        .map(|chi| {
            let vals: Vec<Cyclotomic> = regular.iter().map(|&k| table.irr[chi][k].clone()).collect();
            to_multiplicities(&ibr_coefficients(table, regular, ibr, &vals)?)
        })
        .collect::<Result<Vec<_>>>()?;
    let dm = DecompositionMatrix { entries };
    for phi in 0..ibr.len() {
        if (0..table.num_chars()).all(|chi| dm.get(chi, phi) == 0) {
            return Err(Error::Internal(format!("IBr {phi} has a zero column")));
        }
    }
    Ok(dm)
}

/// Φ_φ = Σ_χ d_{χφ} χ on all classes.
pub fn projective_indecomposable(table: &CharacterTable, dm: &DecompositionMatrix, phi: usize) -> Vec<Cyclotomic> {
    (0..table.num_classes())
        .map(|k| {
            (0..table.num_chars()).fold(Cyclotomic::zero(1), |acc, chi| {
                &acc + &table.irr[chi][k].scale_int(dm.get(chi, phi) as i64)
            })
        })
        .collect()
}

/// Copies of `blocks` with IBr members filled, and the block of each φ.
pub fn assign_ibr_to_blocks(blocks: &[Block], dm: &DecompositionMatrix) -> Result<(Vec<Block>, Vec<usize>)> {
    let mut out: Vec<Block> = blocks.to_vec();
    let mut ibr_block = Vec::with_capacity(dm.num_ibr());
    for phi in 0..dm.num_ibr() {
        let owners: Vec<usize> = blocks
            .iter()
            .filter(|b| b.irr_members.iter().any(|&chi| dm.get(chi, phi) != 0))
            .map(|b| b.index)
            .collect();
        match owners.as_slice() {
            [b] => {
                out[*b].ibr_members.push(phi);
                ibr_block.push(*b);
            }
            _ => return Err(Error::LinkageConflict(format!("IBr {phi} linked to blocks {owners:?}"))),
        }
    }
    Ok((out, ibr_block))
}

/// Rank of {χ⁰ : χ ∈ Irr(B)}, via the Gram matrix of the positive definite
/// form on p-regular classes.
pub fn ibr_count_by_rank(b: &Block, table: &CharacterTable, p: u64) -> Result<usize> {
    let regular = table.p_regular_classes(p);
    let vs: Vec<Vec<Cyclotomic>> = b.irr_members.iter().map(|&chi| table.restrict_to_p_regular(chi, p)).collect();
    Ok(qmat::rank(gram(table, &regular, &vs)?))
}

/// Restriction of a function on the p-regular classes of `g` to those of `h ≤ g`.
pub fn restrict_regular(h: &GroupHandle, g: &GroupHandle, p: u64, values: &[Cyclotomic]) -> Result<Vec<Cyclotomic>> {
    let fus = crate::chartab::fusion(h, g)?;
    let g_regular = g.p_regular_classes(p);
    Ok(h.p_regular_classes(p)
        .into_iter()
        .map(|k| {
            let pos = g_regular.binary_search(&fus[k]).expect("p-regular classes fuse to p-regular classes");
            values[pos].clone()
        })
        .collect())
}

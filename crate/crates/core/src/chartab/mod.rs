//! Ordinary character tables, class constants and defect arithmetic.

mod dixon;

use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::groups::{GroupHandle, Perm};
use crate::numbers::arith;
use crate::numbers::Cyclotomic;

pub use dixon::dixon_prime;

/// Structure constants a_{ijk} with K_i⁺ K_j⁺ = Σ_k a_{ijk} K_k⁺.
#[derive(Debug, Clone)]
pub struct ClassConstants {
    r: usize,
    data: Vec<u64>,
}

impl ClassConstants {
    pub fn num_classes(&self) -> usize {
        self.r
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> u64 {
        self.data[(i * self.r + j) * self.r + k]
    }
}

pub fn class_constants(g: &GroupHandle) -> Arc<ClassConstants> {
    g.cache
        .constants
        .get_or_init(|| {
            let r = g.num_classes();
            let mut data = vec![0u64; r * r * r];
            for (k, cls) in g.classes().iter().enumerate() {
                let z = cls.rep;
                for x in 0..g.size() as u32 {
                    let y = g.mul(g.inv(x), z);
                    let (i, j) = (g.class_of(x), g.class_of(y));
                    data[(i * r + j) * r + k] += 1;
                }
            }
            Arc::new(ClassConstants { r, data })
        })
        .clone()
}

#[derive(Debug, Clone)]
pub struct CharacterTable {
    pub group_id: String,
    pub order: u64,
    pub exponent: u64,
    pub class_sizes: Vec<u64>,
    pub class_orders: Vec<u32>,
    pub class_reps: Vec<Perm>,
    /// Class of x⁻¹ for x in class k.
    pub inverse_class: Vec<usize>,
    /// Class of x^r for each prime r dividing the exponent.
    pub power_maps: BTreeMap<u64, Vec<usize>>,
    /// Rows are characters, columns classes; values live in Q(ζ_exponent).
    pub irr: Vec<Vec<Cyclotomic>>,
    pub degrees: Vec<u64>,
}

pub fn character_table(g: &GroupHandle) -> Result<Arc<CharacterTable>> {
    if let Some(t) = g.cache.table.get() {
        return Ok(t.clone());
    }
    g.require_enumerated()?;
    let t = Arc::new(dixon::compute(g)?);
    Ok(g.cache.table.get_or_init(|| t).clone())
}

fn rat(n: u64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl CharacterTable {
    pub fn num_classes(&self) -> usize {
        self.class_sizes.len()
    }

    pub fn num_chars(&self) -> usize {
        self.irr.len()
    }

    pub fn conductor(&self) -> u32 {
        self.exponent as u32
    }

    /// (1/|G|) Σ_k |K_k| a(x_k) b(x_k)‾ for class functions given on all classes.
    pub fn inner_product(&self, a: &[Cyclotomic], b: &[Cyclotomic]) -> Cyclotomic {
        let mut acc = Cyclotomic::zero(self.conductor());
        for k in 0..self.num_classes() {
            let t = &a[k] * &b[self.inverse_class[k]];
            acc = &acc + &t.scale(&rat(self.class_sizes[k]));
        }
        acc.scale(&rat(self.order).recip())
    }

    /// Inner product where `b` is known to be a character (conjugation via inverse classes).
    pub fn multiplicity(&self, a: &[Cyclotomic], chi: usize) -> Cyclotomic {
        self.inner_product(a, &self.irr[chi])
    }

    /// Row index of a class function equal to an irreducible character.
    pub fn find_row(&self, values: &[Cyclotomic]) -> Option<usize> {
        self.irr.iter().position(|row| row.as_slice() == values)
    }

    pub fn char_defect(&self, chi: usize, p: u64) -> u32 {
        arith::val(self.order, p) - arith::val(self.degrees[chi], p)
    }

    pub fn is_defect_zero(&self, chi: usize, p: u64) -> bool {
        self.char_defect(chi, p) == 0
    }

    pub fn p_regular_classes(&self, p: u64) -> Vec<usize> {
        (0..self.num_classes()).filter(|&k| !(self.class_orders[k] as u64).is_multiple_of(p)).collect()
    }

    pub fn restrict_to_p_regular(&self, chi: usize, p: u64) -> Vec<Cyclotomic> {
        self.p_regular_classes(p).into_iter().map(|k| self.irr[chi][k].clone()).collect()
    }

    /// ω_χ(K_k) = |K_k| χ(x_k) / χ(1).
    pub fn central_character(&self, chi: usize, k: usize) -> Cyclotomic {
        let c = BigRational::new(BigInt::from(self.class_sizes[k]), BigInt::from(self.degrees[chi]));
        self.irr[chi][k].scale(&c)
    }

    /// Exact orthogonality relations and the degree-sum identity.
    pub fn verify(&self) -> Result<()> {
        let r = self.num_classes();
        if self.irr.len() != r {
            return Err(Error::Internal(format!("{} characters for {r} classes", self.irr.len())));
        }
        let sumsq: u64 = self.degrees.iter().map(|d| d * d).sum();
        if sumsq != self.order {
            return Err(Error::Internal(format!("degree squares sum to {sumsq}, not {}", self.order)));
        }
        for i in 0..r {
            for j in 0..r {
                let ip = self.inner_product(&self.irr[i], &self.irr[j]);
                let expect = if i == j { BigRational::one() } else { BigRational::zero() };
                if ip.to_rational() != Some(expect) {
                    return Err(Error::Internal(format!("row orthogonality fails at ({i},{j})")));
                }
            }
        }
        for k in 0..r {
            for l in 0..r {
                let mut acc = Cyclotomic::zero(self.conductor());
                for row in &self.irr {
                    acc = &acc + &(&row[k] * &row[self.inverse_class[l]]);
                }
                let expect = if k == l { rat(self.order / self.class_sizes[k]) } else { BigRational::zero() };
                if acc.to_rational() != Some(expect) {
                    return Err(Error::Internal(format!("column orthogonality fails at ({k},{l})")));
                }
            }
        }
        if self.irr[0].iter().any(|v| v.to_i64() != Some(1)) {
            return Err(Error::Internal("first row is not trivial".into()));
        }
        Ok(())
    }
}

/// Class fusion: for each class of `h` (a subgroup of `g` on the same points), its class in `g`.
pub fn fusion(h: &GroupHandle, g: &GroupHandle) -> Result<Vec<usize>> {
    h.classes()
        .iter()
        .map(|c| {
            g.index_of(&c.rep_perm)
                .map(|i| g.class_of(i))
                .ok_or_else(|| Error::NotASubgroup(format!("{} not in overgroup", c.rep_perm)))
        })
        .collect()
}

/// Restriction of a class function of `g` along a fusion map.
pub fn restrict(values: &[Cyclotomic], fus: &[usize]) -> Vec<Cyclotomic> {
    fus.iter().map(|&k| values[k].clone()).collect()
}

#[cfg(test)]
mod tests;

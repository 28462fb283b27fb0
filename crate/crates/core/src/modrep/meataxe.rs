//! Modules given by generator matrices, and a MeatAxe for chopping them into
//! composition factors.

use std::sync::Arc;

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::groups::GroupHandle;
use crate::numbers::matrix::{spin, Echelon, Matrix};
use crate::numbers::{poly, Fe, FiniteField};

/// Attempts at finding a splitting or certifying element before giving up.
const SPLIT_TRIES: usize = 400;
/// Products of generators kept around as raw material for random elements.
const POOL_LIMIT: usize = 16;

#[derive(Clone, Debug)]
pub struct FModule {
    pub field: Arc<FiniteField>,
    pub dim: usize,
    /// One matrix per group generator, acting on row vectors from the right.
    pub gens: Vec<Matrix>,
}

impl FModule {
    pub fn new(field: Arc<FiniteField>, dim: usize, gens: Vec<Matrix>) -> Self {
        FModule { field, dim, gens }
    }

    pub fn trivial(field: Arc<FiniteField>, ngens: usize) -> Self {
        FModule { field, dim: 1, gens: vec![Matrix::identity(1); ngens] }
    }

    /// The natural permutation module of `g` on its points.
    pub fn permutation(field: Arc<FiniteField>, g: &GroupHandle) -> Self {
        let n = g.degree();
        let gens = g
            .generators()
            .iter()
            .map(|pi| {
                let mut m = Matrix::zero(n, n);
                for i in 0..n {
                    m.set(i, pi.image(i as u32) as usize, 1);
                }
                m
            })
            .collect();
        FModule { field, dim: n, gens }
    }

    pub fn tensor(&self, other: &FModule) -> FModule {
        let f = &self.field;
        let (a, b) = (self.dim, other.dim);
        let gens = self
            .gens
            .iter()
            .zip(&other.gens)
            .map(|(x, y)| {
                let mut m = Matrix::zero(a * b, a * b);
                for i in 0..a {
                    for j in 0..a {
                        let c = x.get(i, j);
                        if c == 0 {
                            continue;
                        }
                        for k in 0..b {
                            for l in 0..b {
                                m.set(i * b + k, j * b + l, f.mul(c, y.get(k, l)));
                            }
                        }
                    }
                }
                m
            })
            .collect();
        FModule { field: self.field.clone(), dim: a * b, gens }
    }

    /// Action of the submodule spanned by an invariant echelonized subspace.
    pub fn submodule(&self, sub: &Echelon) -> FModule {
        let f = &self.field;
        let gens = self
            .gens
            .iter()
            .map(|a| {
                let rows: Vec<Vec<Fe>> = sub.rows.iter().map(|r| sub.coords(&a.vec_mul(f, r))).collect();
                Matrix::from_rows(&rows, sub.dim())
            })
            .collect();
        FModule { field: self.field.clone(), dim: sub.dim(), gens }
    }

    /// Action on the quotient by an invariant subspace, on the non-pivot coordinates.
    pub fn quotient(&self, sub: &Echelon) -> FModule {
        let f = &self.field;
        let free: Vec<usize> = (0..self.dim).filter(|c| !sub.pivots().contains(c)).collect();
        let gens = self
            .gens
            .iter()
            .map(|a| {
                let rows: Vec<Vec<Fe>> = free
                    .iter()
                    .map(|&j| {
                        let w = sub.reduce(f, a.row(j).to_vec());
                        free.iter().map(|&c| w[c]).collect()
                    })
                    .collect();
                Matrix::from_rows(&rows, free.len())
            })
            .collect();
        FModule { field: self.field.clone(), dim: free.len(), gens }
    }

    /// Matrix of the product of generators listed left to right.
    pub fn word(&self, w: &[usize]) -> Matrix {
        w.iter().fold(Matrix::identity(self.dim), |acc, &i| acc.mul(&self.field, &self.gens[i]))
    }
}

enum Split {
    Simple,
    Sub(Echelon),
}

/// Composition factors of `m`, with repetition.
pub fn chop(m: &FModule, rng: &mut ChaCha8Rng, dim_cap: usize) -> Result<Vec<FModule>> {
    if m.dim > dim_cap {
        return Err(Error::CapExceeded(format!("module of dimension {} exceeds cap {dim_cap}", m.dim)));
    }
    let mut out = Vec::new();
    let mut stack = vec![m.clone()];
    while let Some(x) = stack.pop() {
        match split(&x, rng)? {
            Split::Simple => out.push(x),
            Split::Sub(s) => {
                stack.push(x.quotient(&s));
                stack.push(x.submodule(&s));
            }
        }
    }
    Ok(out)
}

fn random_element(m: &FModule, pool: &mut Vec<Matrix>, rng: &mut ChaCha8Rng) -> Matrix {
    let f = &m.field;
    if pool.len() < POOL_LIMIT {
        let a = rng.gen_range(0..pool.len());
        let b = rng.gen_range(0..pool.len());
        let prod = pool[a].mul(f, &pool[b]);
        pool.push(prod);
    }
    let q = f.order();
    let mut acc = Matrix::zero(m.dim, m.dim);
    for _ in 0..3 {
        let x = &pool[rng.gen_range(0..pool.len())];
        acc = acc.add(f, &x.scale(f, rng.gen_range(1..q)));
    }
    acc
}

fn split(m: &FModule, rng: &mut ChaCha8Rng) -> Result<Split> {
    let n = m.dim;
    if n == 1 {
        return Ok(Split::Simple);
    }
    let f = &*m.field;
    let mut pool = m.gens.clone();
    if pool.is_empty() {
        return Ok(Split::Sub(Echelon::from_vectors(f, n, vec![unit(n, 0)])));
    }
    for _ in 0..SPLIT_TRIES {
        let a = random_element(m, &mut pool, rng);
        let roots = poly::roots(f, &a.charpoly(f));
        let Some((lambda, kernel)) = roots
            .into_iter()
            .map(|l| (l, a.shift(f, l).left_nullspace(f)))
            .min_by_key(|(_, k)| k.len())
        else {
            continue;
        };
        for v in &kernel {
            let s = spin(f, n, std::slice::from_ref(v), &m.gens);
            if s.dim() < n {
                return Ok(Split::Sub(s));
            }
        }
        if kernel.len() != 1 {
            continue;
        }
        // Norton: also spin a kernel vector of the transposed element under the transposes
        let w = a.shift(f, lambda).nullspace(f).remove(0);
        let gt: Vec<Matrix> = m.gens.iter().map(Matrix::transpose).collect();
        let t = spin(f, n, &[w], &gt);
        if t.dim() == n {
            return Ok(Split::Simple);
        }
        let cols = Matrix::from_rows(&t.rows, n).transpose();
        let ann = Echelon::from_vectors(f, n, cols.left_nullspace(f));
        return Ok(Split::Sub(ann));
    }
    Err(Error::SplitFailure(n))
}

fn unit(n: usize, i: usize) -> Vec<Fe> {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

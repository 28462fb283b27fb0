//! Dixon–Schneider: split the class algebra over GF(q), then lift to cyclotomics.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::{class_constants, CharacterTable};
use crate::error::{Error, Result};
use crate::groups::GroupHandle;
use crate::numbers::arith;
use crate::numbers::field::{Fe, FiniteField};
use crate::numbers::matrix::{Echelon, Matrix};
use crate::numbers::{poly, Cyclotomic};

/// Smallest prime q ≡ 1 (mod e) with q > 2·⌊√|G|⌋.
pub fn dixon_prime(order: u64, exponent: u64) -> u64 {
    let bound = 2 * arith::isqrt(order);
    let mut q = exponent + 1;
    while !(q > bound && arith::is_prime(q)) {
        q += exponent;
    }
    q
}

pub(super) fn compute(g: &GroupHandle) -> Result<CharacterTable> {
    let n = g.order();
    let r = g.num_classes();
    let e = g.exponent();
    let q = dixon_prime(n, e);
    let f = FiniteField::prime_field(q)?;
    let cc = class_constants(g);
    let sizes: Vec<u64> = g.classes().iter().map(|c| c.size).collect();

    let mut spaces: Vec<Vec<Vec<Fe>>> = vec![(0..r)
        .map(|i| {
            let mut v = vec![0; r];
            v[i] = 1;
            v
        })
        .collect()];
    for j in 1..r {
        if spaces.len() == r {
            break;
        }
        let mut next = Vec::new();
        for w in spaces {
            if w.len() == 1 {
                next.push(w);
                continue;
            }
            let ech = Echelon::from_vectors(&f, r, w);
            let d = ech.dim();
            let mut rm = Matrix::zero(d, d);
            for (i, b) in ech.rows.iter().enumerate() {
                // (A_j b)_x = Σ_y a_{j x y} b_y
                let img: Vec<Fe> = (0..r)
                    .map(|x| {
                        (0..r).fold(0, |acc, y| {
                            let a = cc.get(j, x, y) % q;
                            if a == 0 || b[y] == 0 {
                                acc
                            } else {
                                f.add(acc, f.mul(a, b[y]))
                            }
                        })
                    })
                    .collect();
                for (l, c) in ech.coords(&img).into_iter().enumerate() {
                    rm.set(l, i, c);
                }
            }
            let roots = poly::roots(&f, &rm.charpoly(&f));
            let mut total = 0;
            for lam in roots {
                let ns = rm.shift(&f, lam).nullspace(&f);
                total += ns.len();
                let vecs: Vec<Vec<Fe>> = ns
                    .iter()
                    .map(|c| {
                        let mut v = vec![0; r];
                        for (l, &cl) in c.iter().enumerate() {
                            if cl == 0 {
                                continue;
                            }
                            for (x, &bx) in v.iter_mut().zip(&ech.rows[l]) {
                                *x = f.add(*x, f.mul(cl, bx));
                            }
                        }
                        v
                    })
                    .collect();
                next.push(vecs);
            }
            if total != d {
                return Err(Error::Internal("class matrix not diagonalizable over GF(q)".into()));
            }
        }
        spaces = next;
    }
    if spaces.len() != r {
        return Err(Error::Internal(format!("class algebra split into {} of {r} pieces", spaces.len())));
    }

    let inverse_class: Vec<usize> = g.classes().iter().map(|c| g.class_of(g.inv(c.rep))).collect();
    let bound = arith::isqrt(n);
    let z = f.pow(f.generator(), (q - 1) / e);
    // class of x_k^j for j < order
    let powers: Vec<Vec<usize>> = g
        .classes()
        .iter()
        .map(|c| (0..c.order as u64).map(|j| g.class_of(g.pow(c.rep, j))).collect())
        .collect();

    let mut rows: Vec<(u64, Vec<Cyclotomic>)> = Vec::with_capacity(r);
    for sp in spaces {
        let w0 = &sp[0];
        let s0 = f.inv(w0[0]);
        let w: Vec<Fe> = w0.iter().map(|&x| f.mul(x, s0)).collect();
        let mut s = 0;
        for k in 0..r {
            let t = f.mul(w[k], w[inverse_class[k]]);
            s = f.add(s, f.div(t, f.from_int(sizes[k] as i64)));
        }
        let dsq = f.div(f.from_int(n as i64), s);
        let deg = (1..=bound)
            .find(|&d| n.is_multiple_of(d) && f.from_int((d * d) as i64) == dsq)
            .ok_or_else(|| Error::Internal("no admissible degree".into()))?;
        let modval: Vec<Fe> = (0..r)
            .map(|k| f.div(f.mul(w[k], f.from_int(deg as i64)), f.from_int(sizes[k] as i64)))
            .collect();
        let mut values = Vec::with_capacity(r);
        for (k, c) in g.classes().iter().enumerate() {
            let o = c.order as u64;
            let zo = f.pow(z, e / o);
            let inv_o = f.inv(f.from_int(o as i64));
            let mut terms = Vec::new();
            for l in 0..o {
                let mut acc = 0;
                for jj in 0..o {
                    let root = f.pow(zo, (o - (l * jj) % o) % o);
                    acc = f.add(acc, f.mul(modval[powers[k][jj as usize]], root));
                }
                let m = f.mul(acc, inv_o);
                if m > deg {
                    return Err(Error::Internal(format!("eigenvalue multiplicity {m} exceeds degree {deg}")));
                }
                if m > 0 {
                    terms.push(((l * (e / o)) as i64, BigRational::from_integer(BigInt::from(m))));
                }
            }
            values.push(Cyclotomic::from_terms(e as u32, terms));
        }
        rows.push((deg, values));
    }

    let key = |row: &(u64, Vec<Cyclotomic>)| {
        let trivial = row.1.iter().all(|v| v.to_i64() == Some(1));
        let dense: Vec<Vec<BigRational>> = row.1.iter().map(|v| v.dense_key(e as u32)).collect();
        (row.0, !trivial, dense)
    };
    rows.sort_by_cached_key(key);
    let sumsq: u64 = rows.iter().map(|(d, _)| d * d).sum();
    if sumsq != n {
        return Err(Error::Internal(format!("degree squares sum to {sumsq}, not {n}")));
    }

    let mut power_maps = BTreeMap::new();
    for pr in arith::prime_divisors(e) {
        let map = g.classes().iter().map(|c| g.class_of(g.pow(c.rep, pr))).collect();
        power_maps.insert(pr, map);
    }
    Ok(CharacterTable {
        group_id: g.id().to_string(),
        order: n,
        exponent: e,
        class_sizes: sizes,
        class_orders: g.classes().iter().map(|c| c.order).collect(),
        class_reps: g.classes().iter().map(|c| c.rep_perm.clone()).collect(),
        inverse_class,
        power_maps,
        degrees: rows.iter().map(|(d, _)| *d).collect(),
        irr: rows.into_iter().map(|(_, v)| v).collect(),
    })
}

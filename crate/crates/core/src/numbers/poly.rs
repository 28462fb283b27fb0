//! Dense univariate polynomials over a finite field (coefficients low to high).

use super::field::{Fe, FiniteField};

pub type Poly = Vec<Fe>;

pub fn trim(mut a: Poly) -> Poly {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

pub fn degree(a: &[Fe]) -> Option<usize> {
    a.iter().rposition(|&c| c != 0)
}

pub fn add(f: &FiniteField, a: &[Fe], b: &[Fe]) -> Poly {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| f.add(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0)))
        .collect();
    trim(out)
}

pub fn sub(f: &FiniteField, a: &[Fe], b: &[Fe]) -> Poly {
    let nb: Poly = b.iter().map(|&c| f.neg(c)).collect();
    add(f, a, &nb)
}

pub fn mul(f: &FiniteField, a: &[Fe], b: &[Fe]) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = f.add(out[i + j], f.mul(x, y));
        }
    }
    trim(out)
}

/// Quotient and remainder; `b` must be nonzero.
pub fn divrem(f: &FiniteField, a: &[Fe], b: &[Fe]) -> (Poly, Poly) {
    let b = trim(b.to_vec());
    let db = degree(&b).expect("division by zero polynomial");
    let mut r = trim(a.to_vec());
    if r.len() <= db {
        return (Vec::new(), r);
    }
    let lead_inv = f.inv(b[db]);
    let mut q = vec![0; r.len() - db];
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let c = f.mul(r[dr], lead_inv);
        q[dr - db] = c;
        for (j, &bj) in b.iter().enumerate() {
            r[dr - db + j] = f.sub(r[dr - db + j], f.mul(c, bj));
        }
        r = trim(r);
    }
    (trim(q), r)
}

pub fn rem(f: &FiniteField, a: &[Fe], b: &[Fe]) -> Poly {
    divrem(f, a, b).1
}

pub fn monic(f: &FiniteField, a: &[Fe]) -> Poly {
    let a = trim(a.to_vec());
    match a.last() {
        None => a,
        Some(&l) => {
            let li = f.inv(l);
            a.iter().map(|&c| f.mul(c, li)).collect()
        }
    }
}

pub fn gcd(f: &FiniteField, a: &[Fe], b: &[Fe]) -> Poly {
    let mut x = trim(a.to_vec());
    let mut y = trim(b.to_vec());
    while !y.is_empty() {
        let r = rem(f, &x, &y);
        x = y;
        y = r;
    }
    monic(f, &x)
}

pub fn powmod(f: &FiniteField, base: &[Fe], mut e: u64, m: &[Fe]) -> Poly {
    let mut r = rem(f, &[1], m);
    let mut b = rem(f, base, m);
    while e > 0 {
        if e & 1 == 1 {
            r = rem(f, &mul(f, &r, &b), m);
        }
        b = rem(f, &mul(f, &b, &b), m);
        e >>= 1;
    }
    r
}

pub fn eval(f: &FiniteField, a: &[Fe], x: Fe) -> Fe {
    a.iter().rev().fold(0, |acc, &c| f.add(f.mul(acc, x), c))
}

/// Distinct roots in the field, in increasing code order.
pub fn roots(f: &FiniteField, a: &[Fe]) -> Vec<Fe> {
    let a = monic(f, a);
    match degree(&a) {
        None | Some(0) => return Vec::new(),
        _ => {}
    }
    let q = f.order();
    let mut out = if q <= 256 {
        f.elements().filter(|&x| eval(f, &a, x) == 0).collect()
    } else {
        let xq = powmod(f, &[0, 1], q, &a);
        let g = gcd(f, &a, &sub(f, &xq, &[0, 1]));
        let mut acc = Vec::new();
        split_linear(f, &g, &mut acc);
        acc
    };
    out.sort_unstable();
    out
}

/// Splits a squarefree product of distinct linear factors into its roots.
fn split_linear(f: &FiniteField, g: &[Fe], out: &mut Vec<Fe>) {
    let d = match degree(g) {
        None | Some(0) => return,
        Some(d) => d,
    };
    if d == 1 {
        out.push(f.neg(f.div(g[0], g[1])));
        return;
    }
    let q = f.order();
    for a in f.elements().skip(1) {
        let h = if f.characteristic() == 2 {
            // trace map Tr(a x) = Σ (a x)^(2^i)
            let mut t: Poly = vec![0, a];
            let mut acc = t.clone();
            for _ in 1..f.degree() {
                t = rem(f, &mul(f, &t, &t), g);
                acc = add(f, &acc, &t);
            }
            acc
        } else {
            let s = powmod(f, &[a, 1], (q - 1) / 2, g);
            sub(f, &s, &[1])
        };
        let c = gcd(f, g, &h);
        let dc = degree(&c).unwrap_or(0);
        if dc > 0 && dc < d {
            let (other, _) = divrem(f, g, &c);
            split_linear(f, &c, out);
            split_linear(f, &monic(f, &other), out);
            return;
        }
    }
    panic!("equal-degree splitting failed");
}

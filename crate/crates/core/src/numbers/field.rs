//! Finite fields GF(p^m).
//!
//! Elements are `u64` codes: the base-p digits of a code are the coefficients
//! of a polynomial in the residue x of the defining polynomial (lowest first).

use crate::error::{Error, Result};

use super::arith;

/// Above this order multiplication falls back to polynomial arithmetic.
const TABLE_LIMIT: u64 = 1 << 20;
const ADD_TABLE_LIMIT: u64 = 1024;
pub const MAX_DEGREE: u32 = 32;

pub type Fe = u64;

#[derive(Debug, Clone)]
pub struct FiniteField {
    p: u64,
    m: u32,
    q: u64,
    /// Lower coefficients c_0..c_{m-1} of the monic defining polynomial.
    modulus: Vec<u64>,
    pow_p: Vec<u64>,
    exp: Vec<u64>,
    log: Vec<u32>,
    add_table: Vec<u32>,
}

impl PartialEq for FiniteField {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.m == other.m && self.modulus == other.modulus
    }
}

impl FiniteField {
    /// GF(p^m) defined by the smallest primitive polynomial, comparing
    /// coefficient lists from the x^{m-1} term down to the constant.
    pub fn new(p: u64, m: u32) -> Result<Self> {
        if !arith::is_prime(p) {
            return Err(Error::PrimeRequired(p));
        }
        if m == 0 || m > MAX_DEGREE {
            return Err(Error::CapExceeded(format!("field degree {m} outside 1..={MAX_DEGREE}")));
        }
        let q = (p as u128).pow(m);
        if q >= 1u128 << 62 {
            return Err(Error::CapExceeded(format!("field order {p}^{m} too large")));
        }
        let q = q as u64;
        let pow_p: Vec<u64> = (0..=m).map(|i| p.pow(i)).collect();
        let order_factors = arith::prime_divisors(q - 1);
        let mut modulus = None;
        for code in 0..q {
            // the base-p digits of `code`, least significant first, are c_0..c_{m-1}
            let mut c = vec![0u64; m as usize];
            let mut x = code;
            for i in 0..m as usize {
                c[i] = x % p;
                x /= p;
            }
            if c[0] == 0 {
                continue;
            }
            if is_primitive(&c, p, q, &order_factors) {
                modulus = Some(c);
                break;
            }
        }
        let modulus = modulus.ok_or_else(|| Error::Internal("no primitive polynomial".into()))?;
        let mut f = FiniteField {
            p,
            m,
            q,
            modulus,
            pow_p,
            exp: Vec::new(),
            log: Vec::new(),
            add_table: Vec::new(),
        };
        if q <= TABLE_LIMIT {
            let g = f.generator();
            let mut exp = Vec::with_capacity(q as usize - 1);
            let mut log = vec![0u32; q as usize];
            let mut x = 1u64;
            for i in 0..q - 1 {
                exp.push(x);
                log[x as usize] = i as u32;
                x = f.mul_poly(x, g);
            }
            f.exp = exp;
            f.log = log;
        }
        if p != 2 && m > 1 && q <= ADD_TABLE_LIMIT {
            let mut t = vec![0u32; (q * q) as usize];
            for a in 0..q {
                for b in 0..q {
                    t[(a * q + b) as usize] = f.add_digits(a, b) as u32;
                }
            }
            f.add_table = t;
        }
        Ok(f)
    }

    pub fn prime_field(p: u64) -> Result<Self> {
        Self::new(p, 1)
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.m
    }

    pub fn order(&self) -> u64 {
        self.q
    }

    /// Residue of x; a generator of the multiplicative group.
    pub fn generator(&self) -> Fe {
        if self.m == 1 {
            (self.p - self.modulus[0]) % self.p
        } else {
            self.p
        }
    }

    pub fn from_int(&self, k: i64) -> Fe {
        k.rem_euclid(self.p as i64) as u64
    }

    pub fn add(&self, a: Fe, b: Fe) -> Fe {
        if self.m == 1 {
            let s = a + b;
            return if s >= self.p { s - self.p } else { s };
        }
        if self.p == 2 {
            return a ^ b;
        }
        if !self.add_table.is_empty() {
            return self.add_table[(a * self.q + b) as usize] as u64;
        }
        self.add_digits(a, b)
    }

    fn add_digits(&self, a: Fe, b: Fe) -> Fe {
        let (mut a, mut b) = (a, b);
        let mut out = 0;
        for i in 0..self.m as usize {
            let d = (a % self.p + b % self.p) % self.p;
            out += d * self.pow_p[i];
            a /= self.p;
            b /= self.p;
        }
        out
    }

    pub fn neg(&self, a: Fe) -> Fe {
        if self.m == 1 {
            return if a == 0 { 0 } else { self.p - a };
        }
        if self.p == 2 {
            return a;
        }
        let mut a = a;
        let mut out = 0;
        for i in 0..self.m as usize {
            let d = (self.p - a % self.p) % self.p;
            out += d * self.pow_p[i];
            a /= self.p;
        }
        out
    }

    pub fn sub(&self, a: Fe, b: Fe) -> Fe {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Fe, b: Fe) -> Fe {
        if a == 0 || b == 0 {
            return 0;
        }
        if self.m == 1 {
            return (a as u128 * b as u128 % self.p as u128) as u64;
        }
        if !self.exp.is_empty() {
            let s = self.log[a as usize] as u64 + self.log[b as usize] as u64;
            return self.exp[(s % (self.q - 1)) as usize];
        }
        self.mul_poly(a, b)
    }

    pub fn inv(&self, a: Fe) -> Fe {
        assert!(a != 0, "inverse of zero");
        if self.m == 1 {
            return arith::inv_mod(a, self.p).expect("prime field");
        }
        if !self.exp.is_empty() {
            let l = self.log[a as usize] as u64;
            return self.exp[((self.q - 1 - l) % (self.q - 1)) as usize];
        }
        self.pow(a, self.q - 2)
    }

    pub fn div(&self, a: Fe, b: Fe) -> Fe {
        self.mul(a, self.inv(b))
    }

    pub fn pow(&self, a: Fe, mut e: u64) -> Fe {
        if a == 0 {
            return if e == 0 { 1 } else { 0 };
        }
        if !self.exp.is_empty() {
            let l = self.log[a as usize] as u128;
            return self.exp[(l * e as u128 % (self.q - 1) as u128) as usize];
        }
        let mut r = 1;
        let mut b = a;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, b);
            }
            b = self.mul(b, b);
            e >>= 1;
        }
        r
    }

    /// Multiplicative order of a nonzero element.
    pub fn element_order(&self, a: Fe) -> u64 {
        assert!(a != 0);
        let mut ord = self.q - 1;
        for r in arith::prime_divisors(self.q - 1) {
            while ord.is_multiple_of(r) && self.pow(a, ord / r) == 1 {
                ord /= r;
            }
        }
        ord
    }

    /// All field elements in code order.
    pub fn elements(&self) -> impl Iterator<Item = Fe> {
        0..self.q
    }

    fn digits(&self, mut a: Fe) -> Vec<u64> {
        let mut d = vec![0; self.m as usize];
        for x in d.iter_mut() {
            *x = a % self.p;
            a /= self.p;
        }
        d
    }

    fn mul_poly(&self, a: Fe, b: Fe) -> Fe {
        let m = self.m as usize;
        let p = self.p;
        let da = self.digits(a);
        let db = self.digits(b);
        let mut prod = vec![0u64; 2 * m];
        for i in 0..m {
            if da[i] == 0 {
                continue;
            }
            for j in 0..m {
                prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
            }
        }
        for top in (m..2 * m).rev() {
            let c = prod[top];
            if c == 0 {
                continue;
            }
            prod[top] = 0;
            for i in 0..m {
                prod[top - m + i] = (prod[top - m + i] + (p - c) * self.modulus[i]) % p;
            }
        }
        prod[..m].iter().rev().fold(0, |acc, &d| acc * p + d)
    }
}

/// Order test for x modulo the monic polynomial with lower coefficients `c`.
/// Order q - 1 forces irreducibility, since a reducible modulus has fewer units.
fn is_primitive(c: &[u64], p: u64, q: u64, order_factors: &[u64]) -> bool {
    let m = c.len();
    let mulmod = |a: &[u64], b: &[u64]| -> Vec<u64> {
        let mut prod = vec![0u64; 2 * m];
        for i in 0..m {
            if a[i] == 0 {
                continue;
            }
            for j in 0..m {
                prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
            }
        }
        for top in (m..2 * m).rev() {
            let t = prod[top];
            if t == 0 {
                continue;
            }
            prod[top] = 0;
            for i in 0..m {
                prod[top - m + i] = (prod[top - m + i] + (p - t) * c[i]) % p;
            }
        }
        prod.truncate(m);
        prod
    };
    let powmod = |mut e: u64| -> Vec<u64> {
        let mut r = vec![0u64; m];
        r[0] = 1;
        let mut b = vec![0u64; m];
        if m == 1 {
            b[0] = (p - c[0]) % p;
        } else {
            b[1] = 1;
        }
        while e > 0 {
            if e & 1 == 1 {
                r = mulmod(&r, &b);
            }
            b = mulmod(&b, &b);
            e >>= 1;
        }
        r
    };
    let is_one = |v: &[u64]| v[0] == 1 && v[1..].iter().all(|&x| x == 0);
    if !is_one(&powmod(q - 1)) {
        return false;
    }
    order_factors.iter().all(|&r| !is_one(&powmod((q - 1) / r)))
}

//! Exact arithmetic in cyclotomic fields.
//!
//! An element of Q(ζ_n) is stored on the power basis 1, ζ_n, …, ζ_n^{φ(n)-1},
//! reduced modulo the n-th cyclotomic polynomial. The power basis is a Z-basis
//! of Z[ζ_n], so integrality and p-locality can be read off coefficient-wise.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::arith;

fn phi_cache() -> &'static Mutex<HashMap<u32, Arc<Vec<i64>>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<i64>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Coefficients (low to high) of the n-th cyclotomic polynomial.
pub fn cyclotomic_polynomial(n: u32) -> Arc<Vec<i64>> {
    if let Some(p) = phi_cache().lock().unwrap().get(&n) {
        return p.clone();
    }
    // x^n - 1 divided by Φ_d for every proper divisor d.
    let mut num: Vec<i64> = vec![0; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n.is_multiple_of(d) {
            let div = cyclotomic_polynomial(d);
            num = exact_div(&num, &div);
        }
    }
    let arc = Arc::new(num);
    phi_cache().lock().unwrap().insert(n, arc.clone());
    arc
}

fn exact_div(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dn = den.len() - 1;
    let qn = rem.len() - 1 - dn;
    let mut q = vec![0i64; qn + 1];
    for i in (0..=qn).rev() {
        let c = rem[i + dn];
        q[i] = c;
        if c != 0 {
            for (j, &dj) in den.iter().enumerate() {
                rem[i + j] -= c * dj;
            }
        }
    }
    debug_assert!(rem.iter().all(|&x| x == 0));
    q
}

#[derive(Clone, Debug)]
pub struct Cyclotomic {
    n: u32,
    coeffs: BTreeMap<u32, BigRational>,
}

impl Cyclotomic {
    pub fn zero(n: u32) -> Self {
        assert!(n > 0, "conductor must be positive");
        Cyclotomic { n, coeffs: BTreeMap::new() }
    }

    pub fn from_rational(n: u32, c: BigRational) -> Self {
        let mut z = Self::zero(n);
        if !c.is_zero() {
            z.coeffs.insert(0, c);
        }
        z
    }

    pub fn from_int(n: u32, c: i64) -> Self {
        Self::from_rational(n, BigRational::from_integer(BigInt::from(c)))
    }

    pub fn one(n: u32) -> Self {
        Self::from_int(n, 1)
    }

    /// ζ_n^e.
    pub fn root_of_unity(n: u32, e: i64) -> Self {
        let e = e.rem_euclid(n as i64) as u32;
        Self::from_dense(n, {
            let mut d = vec![BigRational::zero(); n as usize];
            d[e as usize] = BigRational::one();
            d
        })
    }

    /// Builds the canonical form of Σ c_e ζ_n^e from arbitrary exponents.
    pub fn from_terms<I>(n: u32, terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, BigRational)>,
    {
        let mut d = vec![BigRational::zero(); n as usize];
        for (e, c) in terms {
            let i = e.rem_euclid(n as i64) as usize;
            d[i] += c;
        }
        Self::from_dense(n, d)
    }

    fn from_dense(n: u32, mut d: Vec<BigRational>) -> Self {
        let phi = cyclotomic_polynomial(n);
        let deg = phi.len() - 1;
        for top in (deg..d.len()).rev() {
            if d[top].is_zero() {
                continue;
            }
            let c = std::mem::replace(&mut d[top], BigRational::zero());
            for (i, &pi) in phi.iter().enumerate().take(deg) {
                if pi != 0 {
                    d[top - deg + i] -= &c * BigRational::from_integer(BigInt::from(pi));
                }
            }
        }
        let coeffs = d
            .into_iter()
            .take(deg)
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i as u32, c))
            .collect();
        Cyclotomic { n, coeffs }
    }

    pub fn conductor(&self) -> u32 {
        self.n
    }

    pub fn coefficients(&self) -> &BTreeMap<u32, BigRational> {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Rewrites the value inside Q(ζ_m) for a multiple m of the conductor.
    pub fn embed(&self, m: u32) -> Self {
        assert!(m.is_multiple_of(self.n), "embedding requires n | m");
        if m == self.n {
            return self.clone();
        }
        let k = (m / self.n) as i64;
        Self::from_terms(m, self.coeffs.iter().map(|(&e, c)| (e as i64 * k, c.clone())))
    }

    /// Galois automorphism ζ ↦ ζ^k; `k` must be prime to the conductor.
    pub fn galois(&self, k: i64) -> Self {
        debug_assert_eq!(arith::gcd(k.rem_euclid(self.n as i64) as u64, self.n as u64), 1);
        Self::from_terms(self.n, self.coeffs.iter().map(|(&e, c)| (e as i64 * k, c.clone())))
    }

    pub fn conj(&self) -> Self {
        self.galois(-1)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        Cyclotomic {
            n: self.n,
            coeffs: self.coeffs.iter().map(|(&e, x)| (e, x * c)).collect(),
        }
    }

    pub fn scale_int(&self, c: i64) -> Self {
        self.scale(&BigRational::from_integer(BigInt::from(c)))
    }

    pub fn to_rational(&self) -> Option<BigRational> {
        match self.coeffs.len() {
            0 => Some(BigRational::zero()),
            1 => self.coeffs.get(&0).cloned(),
            _ => None,
        }
    }

    pub fn to_integer(&self) -> Option<BigInt> {
        self.to_rational().filter(|r| r.is_integer()).map(|r| r.to_integer())
    }

    pub fn to_i64(&self) -> Option<i64> {
        self.to_integer().and_then(|z| z.to_i64())
    }

    pub fn is_algebraic_integer(&self) -> bool {
        self.coeffs.values().all(|c| c.is_integer())
    }

    /// True when no coefficient denominator is divisible by `p`.
    pub fn is_p_local(&self, p: u64) -> bool {
        let p = BigInt::from(p);
        self.coeffs.values().all(|c| !c.denom().is_multiple_of(&p))
    }

    /// Dense coefficient vector on the power basis of Q(ζ_m), for ordering.
    pub fn dense_key(&self, m: u32) -> Vec<BigRational> {
        let e = self.embed(m);
        let deg = cyclotomic_polynomial(m).len() - 1;
        let mut out = vec![BigRational::zero(); deg];
        for (&i, c) in &e.coeffs {
            out[i as usize] = c.clone();
        }
        out
    }

    fn common(a: &Self, b: &Self) -> (Self, Self) {
        if a.n == b.n {
            (a.clone(), b.clone())
        } else {
            let m = arith::lcm(a.n as u64, b.n as u64) as u32;
            (a.embed(m), b.embed(m))
        }
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.n == other.n {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = Self::common(self, other);
        a.coeffs == b.coeffs
    }
}

impl Eq for Cyclotomic {}

impl<'a> Add<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &'a Cyclotomic) -> Cyclotomic {
        if self.n != rhs.n {
            let (a, b) = Cyclotomic::common(self, rhs);
            return &a + &b;
        }
        let mut out = self.coeffs.clone();
        for (&e, c) in &rhs.coeffs {
            let entry = out.entry(e).or_insert_with(BigRational::zero);
            *entry += c;
            if entry.is_zero() {
                out.remove(&e);
            }
        }
        Cyclotomic { n: self.n, coeffs: out }
    }
}

impl<'a> Sub<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &'a Cyclotomic) -> Cyclotomic {
        self + &(-rhs)
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            n: self.n,
            coeffs: self.coeffs.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
}

impl<'a> Mul<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &'a Cyclotomic) -> Cyclotomic {
        if self.n != rhs.n {
            let (a, b) = Cyclotomic::common(self, rhs);
            return &a * &b;
        }
        if self.is_zero() || rhs.is_zero() {
            return Cyclotomic::zero(self.n);
        }
        if let Some(c) = self.to_rational() {
            return rhs.scale(&c);
        }
        if let Some(c) = rhs.to_rational() {
            return self.scale(&c);
        }
        let n = self.n as usize;
        let mut d = vec![BigRational::zero(); n];
        for (&e1, c1) in &self.coeffs {
            for (&e2, c2) in &rhs.coeffs {
                d[(e1 as usize + e2 as usize) % n] += c1 * c2;
            }
        }
        Cyclotomic::from_dense(self.n, d)
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&e, c) in &self.coeffs {
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            match (e, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (_, true) => write!(f, "E({})^{}", self.n, e)?,
                (_, false) => write!(f, "{a}*E({})^{}", self.n, e)?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64) -> BigRational {
        BigRational::new(BigInt::from(a), BigInt::from(b))
    }

    #[test]
    fn cyclotomic_polys() {
        assert_eq!(*cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(*cyclotomic_polynomial(3), vec![1, 1, 1]);
        assert_eq!(*cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(*cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(60).len() - 1, 16);
    }

    #[test]
    fn roots_sum_to_minus_one() {
        let z = Cyclotomic::root_of_unity(3, 1);
        let z2 = &z * &z;
        assert_eq!(&z + &z2, Cyclotomic::from_int(3, -1));
        let mut s = Cyclotomic::zero(5);
        for e in 1..5 {
            s = &s + &Cyclotomic::root_of_unity(5, e);
        }
        assert_eq!(s, Cyclotomic::from_int(5, -1));
    }

    #[test]
    fn cross_conductor_equality() {
        let z3 = Cyclotomic::root_of_unity(3, 1);
        let z6sq = Cyclotomic::root_of_unity(6, 2);
        assert_eq!(z3, z6sq);
        let i = Cyclotomic::root_of_unity(4, 1);
        assert_eq!(&i * &i, Cyclotomic::from_int(12, -1));
    }

    #[test]
    fn integrality() {
        assert!(!Cyclotomic::from_rational(1, q(1, 2)).is_algebraic_integer());
        assert!(Cyclotomic::root_of_unity(5, 1).is_algebraic_integer());
        let x = &Cyclotomic::one(3) + &Cyclotomic::root_of_unity(3, 1);
        assert!(x.is_algebraic_integer());
    }

    #[test]
    fn conjugation_norm() {
        let z = Cyclotomic::root_of_unity(7, 3);
        assert_eq!(&z * &z.conj(), Cyclotomic::one(7));
        let x = &Cyclotomic::from_int(7, 2) + &z;
        let n = &x * &x.conj();
        assert!(n.galois(3) == n.galois(5) || n.to_rational().is_none());
    }
}

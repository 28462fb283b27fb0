//! The reduction map from p-local cyclotomic integers into GF(p^m).

use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use super::arith;
use super::cyclotomic::Cyclotomic;
use super::field::{Fe, FiniteField};
use crate::error::{Error, Result};

/// A prime p together with GF(p^m) and a fixed image of ζ_{n'}.
///
/// ζ_{p^a n'} is sent to its p'-part ζ_{n'}^{k} and then to `zeta_image^k`.
#[derive(Debug, Clone)]
pub struct PModularSystem {
    pub p: u64,
    pub n_prime: u64,
    pub m: u32,
    pub field: Arc<FiniteField>,
    pub zeta_image: Fe,
}

impl PModularSystem {
    /// System for groups whose exponent divides `exponent`.
    pub fn new(p: u64, exponent: u64) -> Result<Self> {
        if !arith::is_prime(p) {
            return Err(Error::PrimeRequired(p));
        }
        let n_prime = arith::p_prime_part(exponent.max(1), p);
        let m = arith::mult_order(p % n_prime, n_prime);
        if m > super::field::MAX_DEGREE as u64 {
            return Err(Error::CapExceeded(format!("GF({p}^{m}) needed for {n_prime}-th roots")));
        }
        let field = FiniteField::new(p, m as u32)?;
        let zeta_image = field.pow(field.generator(), (field.order() - 1) / n_prime);
        Ok(PModularSystem { p, n_prime, m: m as u32, field: Arc::new(field), zeta_image })
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    /// Image of a rational with denominator prime to p.
    pub fn rational_image(&self, c: &BigRational) -> Result<Fe> {
        let p = BigInt::from(self.p);
        if c.denom().is_multiple_of(&p) {
            return Err(Error::NotPLocal(c.to_string()));
        }
        let num = c.numer().mod_floor(&p).to_u64().unwrap();
        let den = c.denom().mod_floor(&p).to_u64().unwrap();
        Ok(self.field.div(num, den))
    }

    /// Image of ζ_n^e.
    pub fn root_image(&self, n: u64, e: i64) -> Result<Fe> {
        let pa = n / arith::p_prime_part(n, self.p);
        let n1 = n / pa;
        if !self.n_prime.is_multiple_of(n1) {
            return Err(Error::NotPLocal(format!("conductor {n} not covered by n' = {}", self.n_prime)));
        }
        let e = e.rem_euclid(n as i64) as u64;
        let k = match arith::inv_mod(pa % n1, n1) {
            Some(inv) => (e % n1) * inv % n1,
            None => 0,
        };
        Ok(self.field.pow(self.zeta_image, (self.n_prime / n1) * k))
    }

    pub fn star(&self, x: &Cyclotomic) -> Result<Fe> {
        let f = &self.field;
        let n = x.conductor() as u64;
        let mut acc = 0;
        for (&e, c) in x.coefficients() {
            let t = f.mul(self.rational_image(c)?, self.root_image(n, e as i64)?);
            acc = f.add(acc, t);
        }
        Ok(acc)
    }

    /// The element of order `o` | n' used to lift eigenvalues: zeta_image^{n'/o}.
    pub fn root_of_order(&self, o: u64) -> Fe {
        assert!(self.n_prime.is_multiple_of(o));
        self.field.pow(self.zeta_image, self.n_prime / o)
    }
}

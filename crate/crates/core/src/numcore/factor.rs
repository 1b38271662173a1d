use alloc::vec::Vec;

use super::{Natural, NumError};

/// Prime factorization with primes strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Factorization {
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    pub fn exponent_of(&self, p: u64) -> u32 {
        self.factors
            .iter()
            .find(|&&(q, _)| q == p)
            .map_or(0, |&(_, a)| a)
    }

    /// The product of `p^a`, rebuilt exactly.
    pub fn value(&self) -> Natural {
        self.factors
            .iter()
            .map(|&(p, a)| Natural::from(p).pow(a))
            .product()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }
}

pub fn factorize(n: &Natural) -> Result<Factorization, NumError> {
    if n.is_zero() {
        return Err(NumError::Zero);
    }
    let v = n.to_u64().ok_or_else(|| NumError::TooLarge(n.clone()))?;
    factorize_u64(v)
}

/// Trial division.
pub fn factorize_u64(mut n: u64) -> Result<Factorization, NumError> {
    if n == 0 {
        return Err(NumError::Zero);
    }
    let mut factors = Vec::new();
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            let mut a = 0;
            while n.is_multiple_of(d) {
                n /= d;
                a += 1;
            }
            factors.push((d, a));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        factors.push((n, 1));
    }
    Ok(Factorization { factors })
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    factorize_u64(n).is_ok_and(|f| f.factors == [(n, 1)])
}

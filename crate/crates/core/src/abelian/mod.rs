//! Symbolic finite abelian groups.
//!
//! A group is stored by its primary decomposition, one [`Partition`] per
//! prime: `{2: [2], 3: [2], 5: [1, 1]}` is `C4 x C9 x C5 x C5 ≅ C5 x C180`.
//! ψ and the order type are assembled prime by prime, since element orders
//! split across coprime components.

mod order_type;

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

use crate::numcore::{
    factorize, factorize_u64, is_prime, partitions_of, Natural, NumError, Partition,
};

pub use order_type::OrderType;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AbelianError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("empty partition for prime {0}")]
    EmptyPartition(u64),
    #[error("invariant factor d{index} = {value} must be at least 2")]
    FactorTooSmall { index: usize, value: Natural },
    #[error("invariant factors are not a divisibility chain: d{index} does not divide d{next}", next = index + 1)]
    NotDivisibilityChain { index: usize },
    #[error("closed form needs n >= m >= 1 (got m = {m}, n = {n})")]
    BadShape { m: u32, n: u32 },
    #[error("{} abelian groups of order {order} share psi = {psi}", matches.len())]
    ConjectureFalsified {
        order: Natural,
        psi: Natural,
        matches: Vec<AbelianGroup>,
    },
    #[error(transparent)]
    Num(#[from] NumError),
}

/// Finite abelian group in primary-decomposition form. The empty map is the
/// trivial group.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct AbelianGroup {
    components: BTreeMap<u64, Partition>,
}

impl AbelianGroup {
    pub fn trivial() -> Self {
        Self::default()
    }

    pub fn from_components<I>(components: I) -> Result<Self, AbelianError>
    where
        I: IntoIterator<Item = (u64, Partition)>,
    {
        let mut out = AbelianGroup::trivial();
        for (p, lambda) in components {
            if !is_prime(p) {
                return Err(AbelianError::NotPrime(p));
            }
            if lambda.is_empty() {
                return Err(AbelianError::EmptyPartition(p));
            }
            out.absorb(p, &lambda);
        }
        Ok(out)
    }

    /// `C_n`; `n = 1` gives the trivial group.
    pub fn cyclic(n: u64) -> Result<Self, AbelianError> {
        let f = factorize_u64(n)?;
        Ok(AbelianGroup {
            components: f
                .factors()
                .iter()
                .map(|&(p, a)| (p, Partition::new(vec![a])))
                .collect(),
        })
    }

    /// `(C_p)^k`.
    pub fn elementary(p: u64, k: u32) -> Result<Self, AbelianError> {
        if !is_prime(p) {
            return Err(AbelianError::NotPrime(p));
        }
        if k == 0 {
            return Ok(Self::trivial());
        }
        Self::from_components([(p, Partition::new(vec![1; k as usize]))])
    }

    /// Direct product.
    pub fn product(&self, other: &AbelianGroup) -> AbelianGroup {
        let mut out = self.clone();
        for (&p, lambda) in &other.components {
            out.absorb(p, lambda);
        }
        out
    }

    fn absorb(&mut self, p: u64, lambda: &Partition) {
        let slot = self.components.entry(p).or_default();
        *slot = slot.merged(lambda);
        if slot.is_empty() {
            self.components.remove(&p);
        }
    }

    pub fn components(&self) -> &BTreeMap<u64, Partition> {
        &self.components
    }

    pub fn component(&self, p: u64) -> Option<&Partition> {
        self.components.get(&p)
    }

    pub fn is_trivial(&self) -> bool {
        self.components.is_empty()
    }

    pub fn order(&self) -> Natural {
        self.components
            .iter()
            .map(|(&p, l)| Natural::from(p).pow(l.total()))
            .product()
    }

    pub fn exponent(&self) -> Natural {
        self.components
            .iter()
            .map(|(&p, l)| Natural::from(p).pow(l.largest()))
            .product()
    }

    /// Cyclic factor orders of the primary decomposition, primes ascending
    /// and parts descending within a prime.
    pub fn primary_factors(&self) -> Vec<u64> {
        self.components
            .iter()
            .flat_map(|(&p, l)| l.parts().iter().map(move |&a| p.pow(a)))
            .collect()
    }

    pub fn psi(&self) -> Natural {
        psi(self)
    }

    pub fn order_type(&self) -> OrderType {
        order_type_of(self)
    }

    pub fn invariant_factors(&self) -> InvariantFactors {
        to_invariant_factors(self)
    }
}

impl fmt::Display for AbelianGroup {
    /// Primary form, e.g. `C4 x C9 x C5 x C5`; the trivial group prints as `C1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return f.write_str("C1");
        }
        for (i, q) in self.primary_factors().iter().enumerate() {
            if i > 0 {
                f.write_str(" x ")?;
            }
            write!(f, "C{q}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AbelianGroup({self})")
    }
}

/// Divisibility chain `d_1 | d_2 | ... | d_k`, each `d_i >= 2`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct InvariantFactors {
    chain: Vec<Natural>,
}

impl InvariantFactors {
    pub fn new(chain: Vec<Natural>) -> Result<Self, AbelianError> {
        for (index, d) in chain.iter().enumerate() {
            if *d < Natural::from(2u64) {
                return Err(AbelianError::FactorTooSmall {
                    index: index + 1,
                    value: d.clone(),
                });
            }
        }
        for (i, w) in chain.windows(2).enumerate() {
            if !w[0].divides(&w[1]) {
                return Err(AbelianError::NotDivisibilityChain { index: i + 1 });
            }
        }
        Ok(InvariantFactors { chain })
    }

    pub fn chain(&self) -> &[Natural] {
        &self.chain
    }

    pub fn order(&self) -> Natural {
        self.chain.iter().cloned().product()
    }
}

impl fmt::Display for InvariantFactors {
    /// `C6 x C150`; the empty chain prints as `C1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.chain.is_empty() {
            return f.write_str("C1");
        }
        for (i, d) in self.chain.iter().enumerate() {
            if i > 0 {
                f.write_str(" x ")?;
            }
            write!(f, "C{d}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for InvariantFactors {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "InvariantFactors({self})")
    }
}

/// `|Ω_(i)|` for the abelian `p`-group of type `lambda`: the number of
/// solutions of `x^{p^i} = 1`, which is `p^{Σ_j min(λ_j, i)}`.
pub fn layer_count(p: u64, lambda: &Partition, i: u32) -> Natural {
    let e: u32 = lambda.parts().iter().map(|&a| a.min(i)).sum();
    Natural::from(p).pow(e)
}

/// `(p^i, s(p^i))` for `i = 0..=λ_1`.
fn prime_order_counts(p: u64, lambda: &Partition) -> Vec<(Natural, Natural)> {
    let mut out = Vec::with_capacity(lambda.largest() as usize + 1);
    let mut below = Natural::zero();
    for i in 0..=lambda.largest() {
        let here = layer_count(p, lambda, i);
        let s = here
            .checked_sub(&below)
            .expect("layer counts are non-decreasing");
        out.push((Natural::from(p).pow(i), s));
        below = here;
    }
    out
}

pub fn order_type_of(a: &AbelianGroup) -> OrderType {
    let mut acc = vec![(Natural::one(), Natural::one())];
    for (&p, lambda) in &a.components {
        let local = prime_order_counts(p, lambda);
        acc = acc
            .iter()
            .flat_map(|(d, c)| local.iter().map(move |(q, s)| (d * q, c * s)))
            .collect();
    }
    OrderType::from_entries(acc)
}

/// ψ of one primary component.
pub fn psi_p_group(p: u64, lambda: &Partition) -> Natural {
    prime_order_counts(p, lambda)
        .iter()
        .map(|(d, s)| d * s)
        .sum()
}

/// ψ as the product of the per-prime values (coprime components multiply).
pub fn psi(a: &AbelianGroup) -> Natural {
    a.components
        .iter()
        .map(|(&p, lambda)| psi_p_group(p, lambda))
        .product()
}

/// ψ(C_{p^m} × (C_p)^{n-m}) = 1 − p + p^{n−m+2}·(p^{2m−1} + 1)/(p + 1).
pub fn psi_homocyclic(p: u64, m: u32, n: u32) -> Result<Natural, AbelianError> {
    if !is_prime(p) {
        return Err(AbelianError::NotPrime(p));
    }
    if m == 0 || n < m {
        return Err(AbelianError::BadShape { m, n });
    }
    let pn = Natural::from(p);
    let quotient = (pn.pow(2 * m - 1) + Natural::one()).div_exact(&Natural::from(p + 1))?;
    let big = pn.pow(n - m + 2) * quotient;
    Ok((big + Natural::one()).checked_sub(&pn)?)
}

/// ψ by repeated application of ψ(G) = 1 − p + p^{r+1}·ψ(G/Ω_1(G)),
/// where `r` is the number of cyclic factors.
pub fn psi_via_reduction(p: u64, lambda: &Partition) -> Natural {
    if lambda.is_empty() {
        return Natural::one();
    }
    let r = lambda.len() as u32;
    let pn = Natural::from(p);
    let inner = psi_via_reduction(p, &lambda.lowered());
    (pn.pow(r + 1) * inner + Natural::one())
        .checked_sub(&pn)
        .expect("p^{r+1}·ψ >= p")
}

/// One representative per isomorphism class of abelian groups of order `n`.
///
/// Primes ascend; for each prime the partitions run in reverse-lexicographic
/// order, with the smallest prime varying slowest.
pub fn enumerate_abelian(n: &Natural) -> Result<Vec<AbelianGroup>, AbelianError> {
    let f = factorize(n)?;
    let mut out = vec![AbelianGroup::trivial()];
    for &(p, a) in f.factors() {
        let parts = partitions_of(a);
        out = out
            .iter()
            .flat_map(|g| {
                parts.iter().map(move |lambda| {
                    let mut next = g.clone();
                    next.components.insert(p, lambda.clone());
                    next
                })
            })
            .collect();
    }
    Ok(out)
}

pub fn to_invariant_factors(a: &AbelianGroup) -> InvariantFactors {
    let k = a.components.values().map(Partition::len).max().unwrap_or(0);
    let mut chain: Vec<Natural> = (0..k)
        .map(|j| {
            a.components
                .iter()
                .filter_map(|(&p, l)| l.parts().get(j).map(|&e| Natural::from(p).pow(e)))
                .product()
        })
        .collect();
    chain.reverse();
    InvariantFactors { chain }
}

pub fn from_invariant_factors(f: &InvariantFactors) -> Result<AbelianGroup, AbelianError> {
    // Re-validate: the chain may have been built by hand.
    let f = InvariantFactors::new(f.chain.clone())?;
    let mut exps: BTreeMap<u64, Vec<u32>> = BTreeMap::new();
    for d in &f.chain {
        for &(p, e) in factorize(d)?.factors() {
            exps.entry(p).or_default().push(e);
        }
    }
    AbelianGroup::from_components(exps.into_iter().map(|(p, e)| (p, Partition::new(e))))
}

/// The unique abelian group of order `n` with ψ = `target`, found by a full
/// scan of [`enumerate_abelian`]. More than one match is reported as
/// [`AbelianError::ConjectureFalsified`].
pub fn identify_by_psi(
    n: &Natural,
    target: &Natural,
) -> Result<Option<AbelianGroup>, AbelianError> {
    let mut matches: Vec<AbelianGroup> = enumerate_abelian(n)?
        .into_iter()
        .filter(|g| &psi(g) == target)
        .collect();
    match matches.len() {
        0 => Ok(None),
        1 => Ok(matches.pop()),
        _ => Err(AbelianError::ConjectureFalsified {
            order: n.clone(),
            psi: target.clone(),
            matches,
        }),
    }
}

/// Readable name for a small set of groups, used in error messages.
pub fn describe_all(groups: &[AbelianGroup]) -> String {
    use core::fmt::Write;
    let mut s = String::new();
    for (i, g) in groups.iter().enumerate() {
        if i > 0 {
            s.push_str(", ");
        }
        let _ = write!(s, "{}", g.invariant_factors());
    }
    s
}

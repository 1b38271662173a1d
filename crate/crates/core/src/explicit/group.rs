use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::{ExplicitError, Line, Subgroup, MAX_ORDER};
use crate::abelian::OrderType;
use crate::numcore::{extended_gcd, factorize_u64, gcd_u64, lcm_u64, log_exact, p_part, Natural};

/// Element id.
pub type Elem = usize;

/// Finite group as an `n x n` multiplication table; `table[a][b] = a*b` and
/// id `0` is the identity. Immutable once built.
#[derive(Clone, PartialEq, Eq)]
pub struct CayleyGroup {
    n: usize,
    table: Vec<u16>,
    inverse: Vec<u16>,
    orders: Vec<u32>,
    label: String,
}

impl fmt::Debug for CayleyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CayleyGroup({}, order {})", self.label, self.n)
    }
}

impl CayleyGroup {
    /// Builds a table from a product rule that is known to define a group
    /// with identity `0`. Only cheap sanity checks run here.
    pub(crate) fn from_rule<F>(n: usize, label: String, rule: F) -> Result<Self, ExplicitError>
    where
        F: Fn(usize, usize) -> usize,
    {
        if n == 0 {
            return Err(ExplicitError::EmptyTable);
        }
        if n > MAX_ORDER {
            return Err(ExplicitError::TooLarge {
                order: n,
                cap: MAX_ORDER,
            });
        }
        let mut table = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                let c = rule(a, b);
                debug_assert!(c < n);
                table.push(c as u16);
            }
        }
        debug_assert!((0..n).all(|a| table[a] as usize == a && table[a * n] as usize == a));
        Ok(Self::finish(n, table, label))
    }

    fn finish(n: usize, table: Vec<u16>, label: String) -> Self {
        let mut orders = vec![1u32; n];
        let mut inverse = vec![0u16; n];
        for g in 1..n {
            let mut prev = g;
            let mut x = g;
            let mut k = 1u32;
            while x != 0 {
                prev = x;
                x = table[x * n + g] as usize;
                k += 1;
            }
            orders[g] = k;
            inverse[g] = prev as u16;
        }
        CayleyGroup {
            n,
            table,
            inverse,
            orders,
            label,
        }
    }

    /// Validates a raw table: square, in range, identity at `0`, Latin
    /// square, associative. O(n³).
    #[allow(clippy::needless_range_loop)]
    pub fn validate_table(raw: &[Vec<usize>]) -> Result<Self, ExplicitError> {
        let n = raw.len();
        if n == 0 {
            return Err(ExplicitError::EmptyTable);
        }
        if n > MAX_ORDER {
            return Err(ExplicitError::TooLarge {
                order: n,
                cap: MAX_ORDER,
            });
        }
        for (row, entries) in raw.iter().enumerate() {
            if entries.len() != n {
                return Err(ExplicitError::Ragged {
                    row,
                    len: entries.len(),
                    n,
                });
            }
            if let Some((col, &value)) = entries.iter().enumerate().find(|(_, &v)| v >= n) {
                return Err(ExplicitError::EntryOutOfRange { row, col, value });
            }
        }
        for element in 0..n {
            if raw[0][element] != element || raw[element][0] != element {
                return Err(ExplicitError::NoIdentityAtZero { element });
            }
        }
        let mut seen = vec![usize::MAX; n];
        for a in 0..n {
            for b in 0..n {
                let v = raw[a][b];
                if seen[v] == a {
                    return Err(ExplicitError::NotLatinSquare {
                        line: Line::Row(a),
                        value: v,
                    });
                }
                seen[v] = a;
            }
        }
        seen.fill(usize::MAX);
        for b in 0..n {
            for a in 0..n {
                let v = raw[a][b];
                if seen[v] == b {
                    return Err(ExplicitError::NotLatinSquare {
                        line: Line::Column(b),
                        value: v,
                    });
                }
                seen[v] = b;
            }
        }
        let table: Vec<u16> = raw.iter().flatten().map(|&v| v as u16).collect();
        let at = |a: usize, b: usize| table[a * n + b] as usize;
        for a in 1..n {
            for b in 1..n {
                let ab = at(a, b);
                for c in 1..n {
                    if at(ab, c) != at(a, at(b, c)) {
                        return Err(ExplicitError::NotAssociative { a, b, c });
                    }
                }
            }
        }
        Ok(Self::finish(n, table, format!("table[{n}]")))
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// `|G|`.
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn elements(&self) -> core::ops::Range<Elem> {
        0..self.n
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.table[a * self.n + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        self.inverse[a] as usize
    }

    pub fn pow(&self, a: Elem, k: u64) -> Elem {
        let mut k = k % self.element_order(a);
        let mut base = a;
        let mut acc = 0;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    /// Integer power, negative exponents allowed.
    pub fn zpow(&self, a: Elem, k: i64) -> Elem {
        let o = self.element_order(a) as i64;
        self.pow(a, k.rem_euclid(o) as u64)
    }

    /// Least `k >= 1` with `g^k = 1`.
    #[inline]
    pub fn element_order(&self, g: Elem) -> u64 {
        self.orders[g] as u64
    }

    pub fn row(&self, a: Elem) -> impl Iterator<Item = Elem> + '_ {
        self.table[a * self.n..(a + 1) * self.n]
            .iter()
            .map(|&v| v as usize)
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.n).all(|a| (a + 1..self.n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Σ o(g) over the whole group.
    pub fn psi(&self) -> Natural {
        Natural::from(self.orders.iter().map(|&o| o as u64).sum::<u64>())
    }

    pub fn order_type(&self) -> OrderType {
        OrderType::from_orders(self.orders.iter().map(|&o| o as u64))
    }

    pub fn exponent(&self) -> u64 {
        self.orders.iter().fold(1, |e, &o| lcm_u64(e, o as u64))
    }

    pub fn prime_divisors(&self) -> Vec<u64> {
        factorize_u64(self.n as u64)
            .map(|f| f.primes().collect())
            .unwrap_or_default()
    }

    /// `Some(p)` when `|G|` is a power of the prime `p` (`None` for the
    /// trivial group).
    pub fn p_group_prime(&self) -> Option<u64> {
        match self.prime_divisors().as_slice() {
            [p] => Some(*p),
            _ => None,
        }
    }

    /// Ψ and exponent summaries of a subset.
    pub fn psi_of_set<I: IntoIterator<Item = Elem>>(&self, set: I) -> Natural {
        Natural::from(set.into_iter().map(|g| self.element_order(g)).sum::<u64>())
    }

    pub fn exponent_of_set<I: IntoIterator<Item = Elem>>(&self, set: I) -> u64 {
        set.into_iter()
            .fold(1, |e, g| lcm_u64(e, self.element_order(g)))
    }

    pub fn order_type_of_set<I: IntoIterator<Item = Elem>>(&self, set: I) -> OrderType {
        OrderType::from_orders(set.into_iter().map(|g| self.element_order(g)))
    }

    /// Elements whose order divides `d`.
    pub fn torsion(&self, d: u64) -> Vec<Elem> {
        self.elements()
            .filter(|&g| d.is_multiple_of(self.element_order(g)))
            .collect()
    }

    /// Ω_(i): elements whose order divides `p^i`.
    pub fn omega_level(&self, p: u64, i: u32) -> Vec<Elem> {
        self.torsion(p.pow(i))
    }

    /// Elements of `p`-power order (including the identity).
    pub fn p_elements(&self, p: u64) -> Vec<Elem> {
        self.elements()
            .filter(|&g| log_exact(self.element_order(g), p).is_some())
            .collect()
    }

    /// `None` if `set` is closed under the product, otherwise a pair whose
    /// product leaves it.
    pub fn closure_violation(&self, set: &[Elem]) -> Option<(Elem, Elem)> {
        let mut mask = vec![false; self.n];
        for &x in set {
            mask[x] = true;
        }
        for &a in set {
            for &b in set {
                if !mask[self.mul(a, b)] {
                    return Some((a, b));
                }
            }
        }
        None
    }

    pub fn is_product_closed(&self, set: &[Elem]) -> bool {
        self.closure_violation(set).is_none()
    }

    /// First pair with `o(ab) ∤ lcm(o(a), o(b))`.
    pub fn lcm_violation(&self) -> Option<(Elem, Elem)> {
        // lcm lookup over the distinct element orders
        let mut distinct: Vec<u32> = self.orders.clone();
        distinct.sort_unstable();
        distinct.dedup();
        let idx: Vec<usize> = self
            .orders
            .iter()
            .map(|o| distinct.binary_search(o).unwrap())
            .collect();
        let k = distinct.len();
        let mut lcms = vec![0u64; k * k];
        for i in 0..k {
            for j in 0..k {
                lcms[i * k + j] = lcm_u64(distinct[i] as u64, distinct[j] as u64);
            }
        }
        for a in 1..self.n {
            let row = &lcms[idx[a] * k..(idx[a] + 1) * k];
            let products = &self.table[a * self.n..(a + 1) * self.n];
            for b in 1..self.n {
                let ab = products[b] as usize;
                if !row[idx[b]].is_multiple_of(self.orders[ab] as u64) {
                    return Some((a, b));
                }
            }
        }
        None
    }

    /// Pairwise LCM condition `o(ab) | lcm(o(a), o(b))` for all `a, b`.
    pub fn is_lcm_group(&self) -> bool {
        self.lcm_violation().is_none()
    }

    /// Every set of `p`-elements is product-closed, i.e. every Sylow
    /// subgroup is normal.
    pub fn is_nilpotent(&self) -> bool {
        self.prime_divisors()
            .into_iter()
            .all(|p| self.is_product_closed(&self.p_elements(p)))
    }

    /// The set of `p`-elements when it is a subgroup (then it is the unique
    /// Sylow `p`-subgroup).
    pub fn sylow_candidate(&self, p: u64) -> Option<Subgroup> {
        let set = self.p_elements(p);
        self.is_product_closed(&set)
            .then(|| Subgroup::from_closed_set(self.n, set))
    }

    /// Nilpotent, and every Ω-level of every Sylow subgroup is product-closed.
    pub fn is_lcm_structural(&self) -> bool {
        self.prime_divisors().into_iter().all(|p| {
            let Some(sylow) = self.sylow_candidate(p) else {
                return false;
            };
            let exp = self.exponent_of_set(sylow.members().iter().copied());
            let top = log_exact(exp, p).expect("p-elements have p-power orders");
            (1..top).all(|i| self.is_product_closed(&self.omega_level(p, i)))
        })
    }

    /// `(g_p, g_p')`: commuting powers of `g` with `g = g_p·g_p'`, `o(g_p)`
    /// the `p`-part of `o(g)` and `o(g_p')` its complement.
    pub fn p_part_decomposition(&self, g: Elem, p: u64) -> (Elem, Elem) {
        let o = self.element_order(g);
        let pa = p_part(o, p);
        let m = o / pa;
        let (one, s, t) = extended_gcd(pa as i64, m as i64);
        debug_assert_eq!(one, 1);
        // s·p^a + t·m = 1
        let gp = self.zpow(g, t * m as i64);
        let gq = self.zpow(g, s * pa as i64);
        (gp, gq)
    }

    /// Histogram `order -> count` for the whole group.
    pub fn order_counts(&self) -> BTreeMap<u64, u64> {
        let mut m = BTreeMap::new();
        for &o in &self.orders {
            *m.entry(o as u64).or_insert(0) += 1;
        }
        m
    }

    /// `gcd(|G|, k)`.
    pub fn order_gcd(&self, k: u64) -> u64 {
        gcd_u64(self.n as u64, k)
    }
}

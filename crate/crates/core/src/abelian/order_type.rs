use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::numcore::Natural;

/// Multiset of element orders: ascending `(d, s(d))` with every count positive.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrderType {
    entries: Vec<(Natural, Natural)>,
}

impl OrderType {
    /// Builds from arbitrary `(order, count)` pairs; repeated orders are
    /// summed and zero counts dropped.
    pub fn from_entries<I>(entries: I) -> Self
    where
        I: IntoIterator<Item = (Natural, Natural)>,
    {
        let mut merged: BTreeMap<Natural, Natural> = BTreeMap::new();
        for (d, s) in entries {
            if s.is_zero() {
                continue;
            }
            *merged.entry(d).or_default() += &s;
        }
        OrderType {
            entries: merged.into_iter().collect(),
        }
    }

    /// Builds from a list of element orders.
    pub fn from_orders<I: IntoIterator<Item = u64>>(orders: I) -> Self {
        let mut counts: BTreeMap<u64, u64> = BTreeMap::new();
        for o in orders {
            *counts.entry(o).or_default() += 1;
        }
        OrderType {
            entries: counts
                .into_iter()
                .map(|(d, s)| (Natural::from(d), Natural::from(s)))
                .collect(),
        }
    }

    pub fn entries(&self) -> &[(Natural, Natural)] {
        &self.entries
    }

    /// Number of elements `s(d)` of order `d`.
    pub fn count_of(&self, d: &Natural) -> Natural {
        self.entries
            .iter()
            .find(|(o, _)| o == d)
            .map_or_else(Natural::zero, |(_, s)| s.clone())
    }

    /// Σ s(d); the group order when the order type describes a group.
    pub fn total(&self) -> Natural {
        self.entries.iter().map(|(_, s)| s).sum()
    }

    /// Σ d·s(d).
    pub fn psi(&self) -> Natural {
        self.entries.iter().map(|(d, s)| d * s).sum()
    }

    pub fn max_order(&self) -> Natural {
        self.entries
            .last()
            .map_or_else(Natural::one, |(d, _)| d.clone())
    }
}

impl fmt::Debug for OrderType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries(self.entries.iter().map(|(d, s)| (d, s)))
            .finish()
    }
}

impl fmt::Display for OrderType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (d, s)) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{d}:{s}")?;
        }
        Ok(())
    }
}

use alloc::vec::Vec;

use super::{cyclic, dicyclic, dihedral, direct_product, from_abelian, heisenberg, CayleyGroup};
use crate::abelian::{enumerate_abelian, AbelianGroup};
use crate::numcore::Natural;

/// A catalogue group, with its symbolic description when it is abelian.
#[derive(Debug, Clone)]
pub struct CatalogueEntry {
    pub group: CayleyGroup,
    pub abelian: Option<AbelianGroup>,
}

/// Small test groups: every abelian group up to the cap, dihedral and
/// dicyclic families, the Heisenberg group mod 3, and products of the small
/// non-abelian ones with small cyclic groups.
#[derive(Debug, Clone, Default)]
pub struct Catalogue {
    entries: Vec<CatalogueEntry>,
}

impl Catalogue {
    pub fn up_to(cap: usize) -> Self {
        let mut entries = Vec::new();
        for n in 1..=cap as u64 {
            for a in enumerate_abelian(&Natural::from(n)).expect("positive order") {
                let group = from_abelian(&a).expect("within table limit");
                entries.push(CatalogueEntry {
                    group,
                    abelian: Some(a),
                });
            }
        }
        let mut nonabelian = Vec::new();
        for order in (6..=cap.min(64) as u64).step_by(2) {
            nonabelian.push(dihedral(order).unwrap());
            if order % 4 == 0 && order >= 8 {
                nonabelian.push(dicyclic(order).unwrap());
            }
        }
        if cap >= 27 {
            nonabelian.push(heisenberg(3).unwrap());
        }
        let small: Vec<CayleyGroup> = nonabelian
            .iter()
            .filter(|g| g.order() <= 16)
            .cloned()
            .collect();
        for g in &small {
            for k in 2..=4u64 {
                if g.order() * k as usize <= cap {
                    nonabelian.push(direct_product(g, &cyclic(k).unwrap()).unwrap());
                }
            }
        }
        entries.extend(nonabelian.into_iter().map(|group| CatalogueEntry {
            group,
            abelian: None,
        }));
        Catalogue { entries }
    }

    pub fn entries(&self) -> &[CatalogueEntry] {
        &self.entries
    }

    pub fn groups(&self) -> impl Iterator<Item = &CayleyGroup> {
        self.entries.iter().map(|e| &e.group)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

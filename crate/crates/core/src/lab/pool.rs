use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::abelian::AbelianGroup;
use crate::explicit::{direct_product, Catalogue, CayleyGroup};
use crate::numcore::Natural;

/// Catalogue group with cached invariants.
#[derive(Debug, Clone)]
pub struct PoolGroup {
    pub group: CayleyGroup,
    pub abelian: Option<AbelianGroup>,
    pub lcm: bool,
    pub nilpotent: bool,
    pub psi: Natural,
}

impl PoolGroup {
    fn new(group: CayleyGroup, abelian: Option<AbelianGroup>) -> Self {
        let lcm = abelian.is_some() || group.is_lcm_group();
        let nilpotent = abelian.is_some() || group.is_nilpotent();
        let psi = group.psi();
        PoolGroup {
            group,
            abelian,
            lcm,
            nilpotent,
            psi,
        }
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn label(&self) -> &str {
        self.group.label()
    }
}

/// The catalogue up to a cap, extended by products of its non-abelian
/// members with every other member that fits under the cap.
#[derive(Debug, Clone)]
pub struct Pool {
    cap: usize,
    groups: Vec<PoolGroup>,
}

impl Pool {
    pub fn build(cap: usize) -> Self {
        let catalogue = Catalogue::up_to(cap);
        let mut labels: BTreeSet<String> = BTreeSet::new();
        let mut groups = Vec::new();
        for e in catalogue.entries() {
            labels.insert(e.group.label().to_string());
            groups.push(PoolGroup::new(e.group.clone(), e.abelian.clone()));
        }
        let nonabelian: Vec<&CayleyGroup> = catalogue
            .entries()
            .iter()
            .filter(|e| e.abelian.is_none())
            .map(|e| &e.group)
            .collect();
        for g in nonabelian {
            for h in catalogue.groups() {
                if h.order() < 2 || g.order() * h.order() > cap {
                    continue;
                }
                let gh = direct_product(g, h).expect("under the table limit");
                if labels.insert(gh.label().to_string()) {
                    groups.push(PoolGroup::new(gh, None));
                }
            }
        }
        groups.sort_by(|a, b| (a.order(), a.label()).cmp(&(b.order(), b.label())));
        Pool { cap, groups }
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn groups(&self) -> &[PoolGroup] {
        &self.groups
    }

    pub fn lcm_groups(&self) -> Vec<&PoolGroup> {
        self.groups.iter().filter(|g| g.lcm).collect()
    }

    /// Non-trivial groups of prime-power order.
    pub fn p_groups(&self) -> Vec<&CayleyGroup> {
        self.groups
            .iter()
            .filter(|g| g.group.p_group_prime().is_some())
            .map(|g| &g.group)
            .collect()
    }

    /// Unordered pairs (including a group with itself) whose product order
    /// is at most `cap`.
    pub fn product_pairs(&self, cap: usize) -> Vec<(CayleyGroup, CayleyGroup)> {
        let mut out = Vec::new();
        for (i, a) in self.groups.iter().enumerate() {
            for b in &self.groups[i..] {
                if a.order() * b.order() <= cap {
                    out.push((a.group.clone(), b.group.clone()));
                }
            }
        }
        out
    }
}

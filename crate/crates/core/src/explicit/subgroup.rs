use alloc::collections::VecDeque;
use alloc::format;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use super::{CayleyGroup, Elem, ExplicitError};
use crate::abelian::OrderType;
use crate::numcore::Natural;

/// Subgroup of a [`CayleyGroup`], stored as its sorted member ids.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subgroup {
    members: Vec<Elem>,
    mask: Vec<bool>,
}

impl Subgroup {
    /// Trusted constructor for a set already known to be a subgroup.
    pub(crate) fn from_closed_set(parent_order: usize, mut members: Vec<Elem>) -> Self {
        members.sort_unstable();
        members.dedup();
        let mut mask = vec![false; parent_order];
        for &m in &members {
            mask[m] = true;
        }
        Subgroup { members, mask }
    }

    /// Checks that `members` is a subgroup of `g`.
    pub fn new(g: &CayleyGroup, members: Vec<Elem>) -> Result<Self, ExplicitError> {
        if let Some(&bad) = members.iter().find(|&&x| x >= g.order()) {
            return Err(ExplicitError::ElementOutOfRange(bad));
        }
        if !members.contains(&0) {
            return Err(ExplicitError::NotSubgroup {
                reason: "missing the identity".to_string(),
            });
        }
        if let Some((a, b)) = g.closure_violation(&members) {
            return Err(ExplicitError::NotSubgroup {
                reason: format!("{a}*{b} is not a member"),
            });
        }
        // closure in a finite group already forces inverses
        Ok(Self::from_closed_set(g.order(), members))
    }

    pub fn trivial(g: &CayleyGroup) -> Self {
        Self::from_closed_set(g.order(), vec![0])
    }

    pub fn whole(g: &CayleyGroup) -> Self {
        Self::from_closed_set(g.order(), g.elements().collect())
    }

    pub fn members(&self) -> &[Elem] {
        &self.members
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, x: Elem) -> bool {
        self.mask.get(x).copied().unwrap_or(false)
    }

    pub fn index(&self) -> usize {
        self.mask.len() / self.members.len()
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.members.iter().all(|&x| other.contains(x))
    }
}

/// Left coset `vM` as an explicit element list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coset {
    rep: Elem,
    elements: Vec<Elem>,
}

impl Coset {
    pub fn representative(&self) -> Elem {
        self.rep
    }

    /// Members, sorted.
    pub fn elements(&self) -> &[Elem] {
        &self.elements
    }
}

impl CayleyGroup {
    /// Smallest subgroup containing `gens`.
    pub fn generated(&self, gens: &[Elem]) -> Subgroup {
        let n = self.order();
        let mut mask = vec![false; n];
        mask[0] = true;
        let mut members = vec![0];
        let mut queue: VecDeque<Elem> = VecDeque::from([0]);
        while let Some(x) = queue.pop_front() {
            for &s in gens {
                let y = self.mul(x, s);
                if !mask[y] {
                    mask[y] = true;
                    members.push(y);
                    queue.push_back(y);
                }
            }
        }
        Subgroup::from_closed_set(n, members)
    }

    /// `None` when `sub` is normal, otherwise some `g` with `g·sub·g⁻¹ ≠ sub`.
    pub fn normality_witness(&self, sub: &Subgroup) -> Option<Elem> {
        self.elements().find(|&g| {
            let gi = self.inv(g);
            sub.members()
                .iter()
                .any(|&h| !sub.contains(self.mul(self.mul(g, h), gi)))
        })
    }

    pub fn is_normal(&self, sub: &Subgroup) -> bool {
        self.normality_witness(sub).is_none()
    }

    pub fn coset(&self, v: Elem, sub: &Subgroup) -> Coset {
        let mut elements: Vec<Elem> = sub.members().iter().map(|&m| self.mul(v, m)).collect();
        elements.sort_unstable();
        Coset { rep: v, elements }
    }

    /// ψ(vM).
    pub fn coset_psi(&self, v: Elem, sub: &Subgroup) -> Natural {
        self.psi_of_set(sub.members().iter().map(|&m| self.mul(v, m)))
    }

    /// Least element order inside `vM`.
    pub fn coset_order_min(&self, v: Elem, sub: &Subgroup) -> u64 {
        sub.members()
            .iter()
            .map(|&m| self.element_order(self.mul(v, m)))
            .min()
            .unwrap_or(1)
    }

    /// lcm of the element orders inside `vM`.
    pub fn coset_exponent(&self, v: Elem, sub: &Subgroup) -> u64 {
        self.exponent_of_set(sub.members().iter().map(|&m| self.mul(v, m)))
    }

    pub fn coset_order_type(&self, v: Elem, sub: &Subgroup) -> OrderType {
        self.order_type_of_set(sub.members().iter().map(|&m| self.mul(v, m)))
    }

    /// Complement `G ∖ S` as a sorted list.
    pub fn complement(&self, sub: &Subgroup) -> Vec<Elem> {
        self.elements().filter(|&x| !sub.contains(x)).collect()
    }

    /// `G/N` together with the projection `G → G/N`. Cosets are numbered by
    /// increasing least member, so `N` itself is `0`.
    pub fn quotient_map(
        &self,
        normal: &Subgroup,
    ) -> Result<(CayleyGroup, Vec<Elem>), ExplicitError> {
        if let Some(witness) = self.normality_witness(normal) {
            return Err(ExplicitError::NotNormal { witness });
        }
        let n = self.order();
        let mut proj = vec![usize::MAX; n];
        let mut reps = Vec::new();
        for g in 0..n {
            if proj[g] != usize::MAX {
                continue;
            }
            let id = reps.len();
            reps.push(g);
            for &m in normal.members() {
                proj[self.mul(g, m)] = id;
            }
        }
        let q = CayleyGroup::from_rule(reps.len(), format!("{}/N", self.label()), |a, b| {
            proj[self.mul(reps[a], reps[b])]
        })?;
        Ok((q, proj))
    }

    /// The subgroup as a group in its own right; member `members()[i]`
    /// becomes id `i`.
    pub fn restrict(&self, sub: &Subgroup) -> CayleyGroup {
        let mut local = vec![usize::MAX; self.order()];
        for (i, &m) in sub.members().iter().enumerate() {
            local[m] = i;
        }
        let members = sub.members();
        CayleyGroup::from_rule(members.len(), format!("sub({})", self.label()), |a, b| {
            local[self.mul(members[a], members[b])]
        })
        .expect("subgroup of a valid table")
    }

    pub fn quotient(&self, normal: &Subgroup) -> Result<CayleyGroup, ExplicitError> {
        self.quotient_map(normal).map(|(q, _)| q)
    }
}

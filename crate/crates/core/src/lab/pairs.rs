//! Comparisons between two groups of the same order.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::coset::Ambient;
use super::{CheckReport, Pool, PoolGroup, VerdictReport};
use crate::abelian::AbelianGroup;
use crate::explicit::{from_abelian, index_p_subgroups, CayleyGroup, Elem, Subgroup};
use crate::numcore::{log_exact, p_part, Natural, Partition};

fn lcm_p_groups(pool: &Pool) -> Vec<(&PoolGroup, u64)> {
    pool.lcm_groups()
        .into_iter()
        .filter_map(|g| g.group.p_group_prime().map(|p| (g, p)))
        .collect()
}

/// For LCM `p`-groups of equal order with `exp(P) > exp(Q)`:
/// `ψ(P) > (p^n − p^(n−1))·p^m` and `ψ(P) ≥ (p − 1)ψ(Q)`.
pub fn check_monotonicity(pool: &Pool) -> CheckReport {
    let groups = lcm_p_groups(pool);
    let mut records = Vec::new();
    for &(pg, p) in &groups {
        for &(qg, q) in &groups {
            if p != q || pg.order() != qg.order() || core::ptr::eq(pg, qg) {
                continue;
            }
            let rec = VerdictReport::new("exx", format!("P={}, Q={}", pg.label(), qg.label()));
            let (ep, eq) = (pg.group.exponent(), qg.group.exponent());
            if ep <= eq {
                records.push(rec.vacuous("exp(P) <= exp(Q)"));
                continue;
            }
            let order = pg.order() as u64;
            let chain = Natural::from((order - order / p) * ep);
            let bound = &qg.psi * (p - 1);
            records.push(
                rec.value("psi(P)", pg.psi.clone())
                    .value("(p^n-p^(n-1))p^m", chain.clone())
                    .value("(p-1)psi(Q)", bound.clone())
                    .assert(pg.psi > chain && pg.psi >= bound, || vec![0]),
            );
        }
    }
    CheckReport::new("exx", records)
}

/// For an LCM `p`-group `G` of order `p^n` with `exp(G) >= p^m`: the
/// cumulative order counts of `H = C_{p^m} × C_p^(n−m)` are dominated by
/// those of `G`, and pairing both sides by decreasing order is a bijection
/// `f` with `o(h) | o(f(h))`.
pub fn check_dominating_bijection(pool: &Pool) -> CheckReport {
    let mut records = Vec::new();
    for (pg, p) in lcm_p_groups(pool) {
        let g = &pg.group;
        let n = log_exact(g.order() as u64, p).unwrap();
        let e = log_exact(g.exponent(), p).unwrap();
        for m in 1..=n {
            let rec = VerdictReport::new("bijec", format!("G={}, m={m}", g.label()));
            if e < m {
                records.push(rec.vacuous("exp(G) < p^m"));
                continue;
            }
            let mut parts = vec![m];
            parts.extend(core::iter::repeat_n(1, (n - m) as usize));
            let h_abs = AbelianGroup::from_components([(p, Partition::new(parts))]).unwrap();
            let h = from_abelian(&h_abs).unwrap();
            let mut dominated = true;
            for k in 1..=n {
                let pk = p.pow(k);
                let ch = h.elements().filter(|&x| h.element_order(x) >= pk).count();
                let cg = g.elements().filter(|&x| g.element_order(x) >= pk).count();
                dominated &= ch <= cg;
            }
            let by_order = |grp: &CayleyGroup| {
                let mut v: Vec<Elem> = grp.elements().collect();
                v.sort_by_key(|&x| core::cmp::Reverse(grp.element_order(x)));
                v
            };
            let (hs, gs) = (by_order(&h), by_order(g));
            let bad = hs
                .iter()
                .zip(&gs)
                .find(|(&x, &y)| g.element_order(y) % h.element_order(x) != 0);
            records.push(
                rec.value("psi(H)", h.psi())
                    .value("psi(G)", pg.psi.clone())
                    .assert(dominated && bad.is_none(), || match bad {
                        Some((&x, &y)) => vec![x as u64, y as u64],
                        None => vec![0],
                    }),
            );
        }
    }
    CheckReport::new("bijec", records)
}

/// Index-`p` subgroups of least ψ (all of them share the value).
fn min_maximal(g: &CayleyGroup, p: u64) -> Option<(Subgroup, Natural)> {
    index_p_subgroups(g, p)
        .into_iter()
        .map(|m| {
            let psi = g.psi_of_set(m.members().iter().copied());
            (m, psi)
        })
        .min_by(|a, b| a.1.cmp(&b.1))
}

/// Same-order LCM groups `G, H`, `N, M` of index `p` with ψ minimal:
/// `ψ(G∖N) > ψ(H∖M)` should force `ψ(G) > ψ(H)`.
pub fn check_subset_gap(pool: &Pool) -> CheckReport {
    let lcm: Vec<&PoolGroup> = pool
        .lcm_groups()
        .into_iter()
        .filter(|g| g.order() > 1)
        .collect();
    let mut mins: BTreeMap<(usize, u64), Option<(Subgroup, Natural)>> = BTreeMap::new();
    for (i, g) in lcm.iter().enumerate() {
        for p in g.group.prime_divisors() {
            mins.insert((i, p), min_maximal(&g.group, p));
        }
    }
    let mut records = Vec::new();
    for (i, g) in lcm.iter().enumerate() {
        for (j, h) in lcm.iter().enumerate() {
            if g.order() != h.order() {
                continue;
            }
            for p in g.group.prime_divisors() {
                let rec =
                    VerdictReport::new("cor3", format!("G={}, H={}, p={p}", g.label(), h.label()));
                let (Some((n, psi_n)), Some((m, psi_m))) = (&mins[&(i, p)], &mins[&(j, p)]) else {
                    records.push(rec.vacuous("no subgroup of index p"));
                    continue;
                };
                let gap_g = g.psi.checked_sub(psi_n).expect("subset");
                let gap_h = h.psi.checked_sub(psi_m).expect("subset");
                let rec = rec
                    .value("psi(G)", g.psi.clone())
                    .value("psi(H)", h.psi.clone())
                    .value("psi(N)", psi_n.clone())
                    .value("psi(M)", psi_m.clone())
                    .value("psi(G\\N)", gap_g.clone())
                    .value("psi(H\\M)", gap_h.clone());
                if gap_g <= gap_h {
                    records.push(rec.vacuous("psi(G\\N) <= psi(H\\M)"));
                    continue;
                }
                let x = g.group.elements().find(|&x| !n.contains(x)).unwrap();
                let y = h.group.elements().find(|&y| !m.contains(y)).unwrap();
                records.push(rec.assert(g.psi > h.psi, || vec![x as u64, y as u64]));
            }
        }
    }
    CheckReport::new("cor3", records)
}

/// Extremes of ψ(vG) over `p`-elements `v` of some `C_{p^j} × G`
/// (`j <= 2`, under the cap) with `o(v) = o(v, G)`, keyed by `o(v)`.
#[derive(Debug, Clone)]
struct Extremes {
    min: (Natural, Elem, u64),
    max: (Natural, Elem, u64),
}

fn coset_profile(g: &PoolGroup, p: u64, cap: usize) -> BTreeMap<u64, Extremes> {
    let mut out: BTreeMap<u64, Extremes> = BTreeMap::new();
    for k in [1, p, p * p] {
        if k as usize * g.order() > cap {
            continue;
        }
        let amb = Ambient::new(g, k);
        if !amb.lcm {
            continue;
        }
        for v in amb.a.p_elements(p) {
            if !amb.v_aligned(v) {
                continue;
            }
            let psi = amb.a.coset_psi(v, &amb.g);
            let o = amb.a.element_order(v);
            let e = out.entry(o).or_insert_with(|| Extremes {
                min: (psi.clone(), v, k),
                max: (psi.clone(), v, k),
            });
            if psi < e.min.0 {
                e.min = (psi.clone(), v, k);
            }
            if psi > e.max.0 {
                e.max = (psi, v, k);
            }
        }
    }
    out
}

/// Is there `r >= 0` with `o(v) >= p^r·eg` and `o(u) <= p^r·eh`?
pub(crate) fn exists_r(p: u64, ov: u64, ou: u64, eg: u64, eh: u64) -> bool {
    let mut pr = 1u64;
    while pr * eg <= ov {
        if ou <= pr * eh {
            return true;
        }
        pr *= p;
    }
    false
}

/// Same-order LCM groups with `ψ(G) >= ψ(H)` and `p`-elements `v ∈ A`,
/// `u ∈ B` satisfying `o(v) = o(v,G) >= p^r exp(G)_p`,
/// `o(u,H) = o(u) <= p^r exp(H)_p`, `π(o(v)) = π(o(u))`:
/// `ψ(vG) >= ψ(uH)`. Ambients are `C_{p^j} × G` with `j <= 2` under
/// `ambient_cap`. One record per `(G, H, p)`.
pub fn check_coset_monotone(pool: &Pool, ambient_cap: usize) -> CheckReport {
    let lcm: Vec<&PoolGroup> = pool
        .lcm_groups()
        .into_iter()
        .filter(|g| g.order() > 1)
        .collect();
    let mut profiles: BTreeMap<(usize, u64), BTreeMap<u64, Extremes>> = BTreeMap::new();
    for (i, g) in lcm.iter().enumerate() {
        for p in g.group.prime_divisors() {
            profiles.insert((i, p), coset_profile(g, p, ambient_cap));
        }
    }
    let mut records = Vec::new();
    for (i, g) in lcm.iter().enumerate() {
        for (j, h) in lcm.iter().enumerate() {
            if g.order() != h.order() {
                continue;
            }
            for p in g.group.prime_divisors() {
                let rec = VerdictReport::new(
                    "mohss22",
                    format!("G={}, H={}, p={p}", g.label(), h.label()),
                );
                if g.psi < h.psi {
                    records.push(rec.vacuous("psi(G) < psi(H)"));
                    continue;
                }
                let eg = p_part(g.group.exponent(), p);
                let eh = p_part(h.group.exponent(), p);
                let mut pairs = 0u64;
                let mut bad = None;
                for (&ov, vx) in &profiles[&(i, p)] {
                    for (&ou, ux) in &profiles[&(j, p)] {
                        if (ov == 1) != (ou == 1) || !exists_r(p, ov, ou, eg, eh) {
                            continue;
                        }
                        pairs += 1;
                        if vx.min.0 < ux.max.0 && bad.is_none() {
                            bad = Some((vx.min.clone(), ux.max.clone()));
                        }
                    }
                }
                if pairs == 0 {
                    records.push(rec.vacuous("no (v, u) meets the order conditions"));
                    continue;
                }
                let rec = rec
                    .value("psi(G)", g.psi.clone())
                    .value("psi(H)", h.psi.clone())
                    .value("order pairs checked", pairs);
                records.push(match bad {
                    None => rec,
                    Some((v, u)) => rec
                        .value("psi(vG)", v.0)
                        .value("psi(uH)", u.0)
                        .value("A=C_k x G, k", v.2)
                        .value("B=C_k x H, k", u.2)
                        .fail(vec![v.1 as u64, u.1 as u64]),
                });
            }
        }
    }
    CheckReport::new("mohss22", records)
}

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::{CheckReport, ConfigSampler, Pool, VerdictReport};
use crate::abelian::{enumerate_abelian, from_invariant_factors, to_invariant_factors};
use crate::explicit::{
    cyclic, dicyclic, dihedral, direct_product, from_abelian, CayleyGroup, Subgroup,
};
use crate::numcore::{gcd_u64, log_exact, Natural};

fn first_order_drop(
    ab: &CayleyGroup,
    b_order: usize,
    a: &CayleyGroup,
    b: &CayleyGroup,
) -> Vec<u64> {
    let x = ab.elements().find(|&x| {
        let (i, j) = (x / b_order, x % b_order);
        ab.element_order(x) != a.element_order(i) * b.element_order(j)
    });
    vec![x.unwrap_or(0) as u64]
}

/// ψ(A×B) ≤ ψ(A)ψ(B), with equality exactly when gcd(|A|, |B|) = 1.
pub fn check_multiplicativity(pairs: &[(CayleyGroup, CayleyGroup)]) -> CheckReport {
    let mut records = Vec::new();
    for (a, b) in pairs {
        let ab = direct_product(a, b).expect("pair within the table limit");
        let lhs = ab.psi();
        let rhs = a.psi() * b.psi();
        let coprime = gcd_u64(a.order() as u64, b.order() as u64) == 1;
        let ok = lhs <= rhs && (lhs == rhs) == coprime;
        records.push(
            VerdictReport::new(
                "multiplicativity",
                format!("A={}, B={}", a.label(), b.label()),
            )
            .value("psi(AxB)", lhs)
            .value("psi(A)psi(B)", rhs)
            .value("coprime", coprime as u64)
            .assert(ok, || first_order_drop(&ab, b.order(), a, b)),
        );
    }
    CheckReport::new("multiplicativity", records)
}

fn random_subgroup(g: &CayleyGroup, rng: &mut super::sampler::Stream) -> Subgroup {
    let gens: Vec<usize> = (0..1 + rng.below(2))
        .map(|_| rng.below(g.order()))
        .collect();
    g.generated(&gens)
}

/// ψ(vwAB) ≤ ψ(vA)ψ(wB) inside W = R×K, equality when gcd(|R|, |K|) = 1.
pub fn check_ineq(pool: &Pool, sampler: &ConfigSampler, samples: usize, cap: usize) -> CheckReport {
    let mut rng = sampler.stream("ineq");
    let groups = pool.groups();
    let mut records = Vec::new();
    for _ in 0..samples {
        let r = &rng.pick(groups).group;
        let small: Vec<&CayleyGroup> = groups
            .iter()
            .map(|g| &g.group)
            .filter(|k| r.order() * k.order() <= cap)
            .collect();
        if small.is_empty() {
            continue;
        }
        let k = *rng.pick(&small);
        let a = random_subgroup(r, &mut rng);
        let b = random_subgroup(k, &mut rng);
        let v = rng.below(r.order());
        let w = rng.below(k.order());
        let wgrp = direct_product(r, k).expect("under cap");
        let m = k.order();
        let ab_members: Vec<usize> = a
            .members()
            .iter()
            .flat_map(|&x| b.members().iter().map(move |&y| x * m + y))
            .collect();
        let ab = Subgroup::new(&wgrp, ab_members).expect("product of subgroups");
        let vw = v * m + w;
        let lhs = wgrp.coset_psi(vw, &ab);
        let rhs = r.coset_psi(v, &a) * k.coset_psi(w, &b);
        let coprime = gcd_u64(r.order() as u64, k.order() as u64) == 1;
        let ok = lhs <= rhs && (!coprime || lhs == rhs);
        records.push(
            VerdictReport::new(
                "ineq",
                format!(
                    "R={}, K={}, |A|={}, |B|={}, v={v}, w={w}",
                    r.label(),
                    k.label(),
                    a.len(),
                    b.len()
                ),
            )
            .value("psi(vwAB)", lhs)
            .value("psi(vA)psi(wB)", rhs)
            .assert(ok, || vec![v as u64, w as u64]),
        );
    }
    CheckReport::new("ineq", records)
}

/// ψ(G) = 1 − p + p^{r+1}ψ(G/Ω₁(G)) whenever Ω_(1) is a subgroup of order
/// p^r. Checked as ψ(G) + p − 1 = p^{r+1}ψ(G/Ω₁).
pub fn check_reduction(groups: &[&CayleyGroup]) -> CheckReport {
    let mut records = Vec::new();
    for g in groups {
        let p = g.p_group_prime().expect("p-group");
        let rec = VerdictReport::new("reduction", format!("G={}, p={p}", g.label()));
        let omega = g.omega_level(p, 1);
        if let Some((a, b)) = g.closure_violation(&omega) {
            records.push(
                rec.vacuous("Omega_(1) is not a subgroup")
                    .value("a", a as u64)
                    .value("b", b as u64),
            );
            continue;
        }
        let n = Subgroup::new(g, omega).expect("closed set containing 1");
        let r = log_exact(n.len() as u64, p).expect("p-subgroup");
        let q = g.quotient(&n).expect("characteristic subgroup");
        let lhs = g.psi() + Natural::from(p - 1);
        let rhs = Natural::from(p).pow(r + 1) * q.psi();
        let lagrange = n.len() * q.order() == g.order();
        records.push(
            rec.value("psi(G)", g.psi())
                .value("r", r as u64)
                .value("psi(G/Omega_1)", q.psi())
                .assert(lhs == rhs && lagrange, || vec![0]),
        );
    }
    CheckReport::new("reduction", records)
}

/// p ∤ ψ(G) for every p-group.
pub fn check_nmid(groups: &[&CayleyGroup]) -> CheckReport {
    let records = groups
        .iter()
        .map(|g| {
            let p = g.p_group_prime().expect("p-group");
            let psi = g.psi();
            VerdictReport::new("nmid", format!("G={}, p={p}", g.label()))
                .value("psi(G)", psi.clone())
                .value("psi mod p", psi.rem_u64(p))
                .assert(psi.rem_u64(p) == 1, || vec![0])
        })
        .collect();
    CheckReport::new("nmid", records)
}

/// For a p-group: LCM ⇔ every Ω_(i) already equals the subgroup it
/// generates.
pub fn check_omeg(groups: &[&CayleyGroup]) -> CheckReport {
    let mut records = Vec::new();
    for g in groups {
        let p = g.p_group_prime().expect("p-group");
        let top = log_exact(g.exponent(), p).unwrap();
        let mut bad_level = None;
        for i in 1..=top {
            let level = g.omega_level(p, i);
            if g.generated(&level).len() != level.len() {
                bad_level = Some(i);
                break;
            }
        }
        let lcm = g.is_lcm_group();
        let rec = VerdictReport::new("omeg", format!("G={}, p={p}", g.label()))
            .value("lcm", lcm as u64)
            .value("first non-closed level", bad_level.unwrap_or(0) as u64);
        records.push(rec.assert(lcm == bad_level.is_none(), || {
            let (a, b) = g.lcm_violation().unwrap_or((0, 0));
            vec![a as u64, b as u64]
        }));
    }
    CheckReport::new("omeg", records)
}

/// Pairwise LCM test against "nilpotent with Ω-closed Sylow subgroups".
pub fn check_structural(pool: &Pool) -> CheckReport {
    let records = pool
        .groups()
        .iter()
        .map(|pg| {
            let g = &pg.group;
            let structural = g.is_lcm_structural();
            VerdictReport::new("structural", format!("G={}", g.label()))
                .value("lcm", pg.lcm as u64)
                .value("structural", structural as u64)
                .assert(pg.lcm == structural, || {
                    let (a, b) = g.lcm_violation().unwrap_or((0, 0));
                    vec![a as u64, b as u64]
                })
        })
        .collect();
    CheckReport::new("structural", records)
}

fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

/// Nilpotent G, N = {x : x^d = 1}: G is LCM ⇔ N and G/N are.
pub fn check_llc(pool: &Pool) -> CheckReport {
    let mut records = Vec::new();
    for pg in pool.groups().iter().filter(|g| g.nilpotent) {
        let g = &pg.group;
        for d in divisors(g.order() as u64) {
            let rec = VerdictReport::new("llc", format!("G={}, d={d}", g.label()));
            let torsion = g.torsion(d);
            if !g.is_product_closed(&torsion) {
                records.push(rec.vacuous("torsion set is not a subgroup"));
                continue;
            }
            let n = Subgroup::new(g, torsion).expect("closed");
            let q = g
                .quotient(&n)
                .expect("torsion subgroups are characteristic");
            let ng = g.restrict(&n);
            let (ln, lq) = (ng.is_lcm_group(), q.is_lcm_group());
            let lagrange = n.len() * q.order() == g.order();
            records.push(
                rec.value("lcm(G)", pg.lcm as u64)
                    .value("lcm(N)", ln as u64)
                    .value("lcm(G/N)", lq as u64)
                    .assert(pg.lcm == (ln && lq) && lagrange, || {
                        let (a, b) = g.lcm_violation().unwrap_or((0, 0));
                        vec![a as u64, b as u64]
                    }),
            );
        }
    }
    CheckReport::new("llc", records)
}

/// `g = g_p g_p'` with commuting factors of coprime orders inside ⟨g⟩.
pub fn check_decomposition(pool: &Pool) -> CheckReport {
    let mut records = Vec::new();
    for pg in pool.groups() {
        let g = &pg.group;
        let mut bad = None;
        let mut checked = 0u64;
        'outer: for x in g.elements() {
            let cyc = g.generated(&[x]);
            for p in g.prime_divisors() {
                let (a, b) = g.p_part_decomposition(x, p);
                let o = g.element_order(x);
                let op = crate::numcore::p_part(o, p);
                checked += 1;
                let ok = g.mul(a, b) == x
                    && g.mul(b, a) == x
                    && g.element_order(a) == op
                    && g.element_order(b) == o / op
                    && cyc.contains(a)
                    && cyc.contains(b);
                if !ok {
                    bad = Some(x);
                    break 'outer;
                }
            }
        }
        records.push(
            VerdictReport::new("dec", format!("G={}", g.label()))
                .value("splits checked", checked)
                .assert(bad.is_none(), || vec![bad.unwrap() as u64]),
        );
    }
    CheckReport::new("dec", records)
}

/// For LCM groups of equal order: ψ equal ⇔ order types equal. Also pins
/// the non-LCM pair C2 x D16, C4 x Q8.
pub fn check_order_type_theorem(pool: &Pool) -> CheckReport {
    let mut records = Vec::new();
    let mut by_order: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    let groups = pool.groups();
    for (i, g) in groups.iter().enumerate().filter(|(_, g)| g.lcm) {
        by_order.entry(g.order()).or_default().push(i);
    }
    let types: BTreeMap<usize, crate::abelian::OrderType> = by_order
        .values()
        .flatten()
        .map(|&i| (i, groups[i].group.order_type()))
        .collect();
    for members in by_order.values() {
        for (k, &i) in members.iter().enumerate() {
            for &j in &members[k + 1..] {
                let (g, h) = (&groups[i], &groups[j]);
                let same_psi = g.psi == h.psi;
                let same_type = types[&i] == types[&j];
                records.push(
                    VerdictReport::new("main6", format!("G={}, H={}", g.label(), h.label()))
                        .value("psi(G)", g.psi.clone())
                        .value("psi(H)", h.psi.clone())
                        .value("same order type", same_type as u64)
                        .assert(same_psi == same_type, || vec![i as u64, j as u64]),
                );
            }
        }
    }
    let g = direct_product(&cyclic(2).unwrap(), &dihedral(16).unwrap()).unwrap();
    let h = direct_product(&cyclic(4).unwrap(), &dicyclic(8).unwrap()).unwrap();
    let ok = g.psi() == h.psi()
        && g.order_type() != h.order_type()
        && !g.is_lcm_group()
        && h.is_lcm_group();
    records.push(
        VerdictReport::new(
            "main6",
            format!("non-LCM tie G={}, H={}", g.label(), h.label()),
        )
        .value("psi(G)", g.psi())
        .value("psi(H)", h.psi())
        .value("lcm(G)", g.is_lcm_group() as u64)
        .value("lcm(H)", h.is_lcm_group() as u64)
        .assert(ok, || {
            let (a, b) = g.lcm_violation().unwrap_or((0, 0));
            vec![a as u64, b as u64]
        }),
    );
    CheckReport::new("main6", records)
}

/// For each n ≤ n_max: ψ and order type are injective on the abelian groups
/// of order n, invariant factors round-trip, and (for n ≤ `explicit_cap`)
/// the symbolic order type matches the brute-force one.
pub fn check_abelian_classification(n_max: u64, explicit_cap: usize) -> CheckReport {
    let mut records = Vec::new();
    for n in 1..=n_max {
        let groups = enumerate_abelian(&Natural::from(n)).expect("positive order");
        let rec =
            VerdictReport::new("maaa", format!("n={n}")).value("classes", groups.len() as u64);
        let mut seen_psi: BTreeMap<Natural, usize> = BTreeMap::new();
        let mut seen_type = BTreeSet::new();
        let mut witness = None;
        for (i, a) in groups.iter().enumerate() {
            if let Some(&j) = seen_psi.get(&a.psi()) {
                witness = Some(vec![j as u64, i as u64]);
                break;
            }
            seen_psi.insert(a.psi(), i);
            let ty = a.order_type();
            if !seen_type.insert(ty.clone()) {
                witness = Some(vec![i as u64]);
                break;
            }
            let back = from_invariant_factors(&to_invariant_factors(a));
            if back.as_ref() != Ok(a) {
                witness = Some(vec![i as u64]);
                break;
            }
            if n as usize <= explicit_cap
                && from_abelian(a).map(|g| g.order_type()).as_ref() != Ok(&ty)
            {
                witness = Some(vec![i as u64]);
                break;
            }
        }
        records.push(match witness {
            Some(w) => rec.fail(w),
            None if groups.len() == 1 => rec.vacuous("single isomorphism class"),
            None => rec,
        });
    }
    CheckReport::new("maaa", records)
}

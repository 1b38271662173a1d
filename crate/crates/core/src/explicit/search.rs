use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use super::{CayleyGroup, Elem, Subgroup};

/// All subgroups of index `p` (sorted by member list).
///
/// When `G` is nilpotent or `p` is the least prime dividing `|G|`, every such
/// subgroup is normal and contains `G^p[G,G]`, so they are the preimages of
/// the hyperplanes of the `F_p`-space `G/G^p[G,G]`. Otherwise this falls back
/// to [`subgroups_of_order`].
pub fn index_p_subgroups(g: &CayleyGroup, p: u64) -> Vec<Subgroup> {
    let n = g.order() as u64;
    if p < 2 || !n.is_multiple_of(p) {
        return Vec::new();
    }
    let primes = g.prime_divisors();
    if primes[0] == p || g.is_nilpotent() {
        hyperplane_preimages(g, p)
    } else {
        subgroups_of_order(g, (n / p) as usize)
    }
}

fn hyperplane_preimages(g: &CayleyGroup, p: u64) -> Vec<Subgroup> {
    let mut gens: Vec<Elem> = g.elements().map(|x| g.pow(x, p)).collect();
    for a in g.elements() {
        for b in g.elements() {
            let c = g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b));
            gens.push(c);
        }
    }
    gens.sort_unstable();
    gens.dedup();
    let frattini = g.generated(&gens);
    let (v, proj) = g
        .quotient_map(&frattini)
        .expect("verbal subgroups are normal");

    // greedy basis of the elementary abelian quotient
    let pu = p as usize;
    let mut basis: Vec<Elem> = Vec::new();
    let mut span: Vec<Elem> = vec![0];
    for x in v.elements() {
        if span.contains(&x) {
            continue;
        }
        let mut next = Vec::with_capacity(span.len() * pu);
        for c in 0..p {
            let xc = v.pow(x, c);
            next.extend(span.iter().map(|&s| v.mul(s, xc)));
        }
        span = next;
        basis.push(x);
    }
    let d = basis.len();
    // span[j] has coordinates given by the base-p digits of j, with the
    // latest basis vector most significant
    let mut coords = vec![0usize; v.order()];
    for (j, &x) in span.iter().enumerate() {
        coords[x] = j;
    }
    let digit = |code: usize, i: usize| (code / pu.pow(i as u32)) % pu;

    let mut out = Vec::new();
    for f in 1..pu.pow(d as u32) {
        // normalise: last non-zero digit equal to 1
        let lead = (0..d).rev().find(|&i| digit(f, i) != 0).unwrap();
        if digit(f, lead) != 1 {
            continue;
        }
        let in_kernel = |x: Elem| {
            let c = coords[x];
            (0..d).map(|i| digit(f, i) * digit(c, i)).sum::<usize>() % pu == 0
        };
        let members: Vec<Elem> = g.elements().filter(|&x| in_kernel(proj[x])).collect();
        out.push(Subgroup::from_closed_set(g.order(), members));
    }
    out.sort();
    out
}

/// All subgroups of order `m`, by joining cyclic subgroups. Exponential in
/// the worst case; intended for small groups.
pub fn subgroups_of_order(g: &CayleyGroup, m: usize) -> Vec<Subgroup> {
    if m == 0 || !g.order().is_multiple_of(m) {
        return Vec::new();
    }
    // one generator per cyclic subgroup whose order divides m
    let mut cyclic_seen: BTreeSet<Vec<Elem>> = BTreeSet::new();
    let mut cyclic_gens: Vec<Elem> = Vec::new();
    for x in g.elements() {
        if !(m as u64).is_multiple_of(g.element_order(x)) {
            continue;
        }
        if cyclic_seen.insert(g.generated(&[x]).members().to_vec()) {
            cyclic_gens.push(x);
        }
    }
    let mut seen: BTreeSet<Vec<Elem>> = BTreeSet::new();
    let mut frontier: Vec<(Subgroup, Vec<Elem>)> = vec![(Subgroup::trivial(g), Vec::new())];
    seen.insert(vec![0]);
    let mut found = Vec::new();
    while let Some((h, hgens)) = frontier.pop() {
        if h.len() == m {
            found.push(h);
            continue;
        }
        for &x in &cyclic_gens {
            if h.contains(x) {
                continue;
            }
            let mut gens = hgens.clone();
            gens.push(x);
            let k = g.generated(&gens);
            if !m.is_multiple_of(k.len()) || !seen.insert(k.members().to_vec()) {
                continue;
            }
            frontier.push((k, gens));
        }
    }
    found.sort();
    found
}

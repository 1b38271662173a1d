//! Lemmas about cosets `vG`, `vM` inside an ambient `A = C_k × G`.
//!
//! In `A` the element `(c, g)` has id `c·|G| + g`, so `G` keeps its own ids
//! and its subgroups can be reused unchanged.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::sampler::Stream;
use super::{CheckReport, ConfigSampler, Pool, PoolGroup, VerdictReport};
use crate::explicit::{cyclic, direct_product, index_p_subgroups, CayleyGroup, Elem, Subgroup};
use crate::numcore::{lcm_u64, p_part, Natural};

const KS: &[u64] = &[1, 2, 3, 4, 6, 8, 9, 12, 16];

pub(crate) struct Ambient<'a> {
    pub base: &'a PoolGroup,
    pub k: u64,
    pub a: CayleyGroup,
    pub lcm: bool,
    pub g: Subgroup,
    aligned: Vec<Elem>,
}

impl<'a> Ambient<'a> {
    pub fn new(base: &'a PoolGroup, k: u64) -> Self {
        let a = direct_product(&cyclic(k).unwrap(), &base.group).expect("under the table limit");
        let lcm = a.is_lcm_group();
        let g = Subgroup::new(&a, (0..base.order()).collect()).expect("{1} x G");
        let aligned = a
            .elements()
            .filter(|&v| a.element_order(v) == a.coset_order_min(v, &g))
            .collect();
        Ambient {
            base,
            k,
            a,
            lcm,
            g,
            aligned,
        }
    }

    pub fn describe(&self) -> String {
        format!("G={}, A=C{} x G", self.base.label(), self.k)
    }

    /// Half the time uniform on `A`, otherwise uniform on the elements with
    /// `o(v) = o(v, G)`. Callers still test the hypothesis.
    pub fn draw_v(&self, rng: &mut Stream) -> Elem {
        if rng.below(2) == 0 {
            rng.below(self.a.order())
        } else {
            *rng.pick(&self.aligned)
        }
    }

    /// `o(v) = o(v, G)`.
    pub fn v_aligned(&self, v: Elem) -> bool {
        self.aligned.binary_search(&v).is_ok()
    }
}

/// Picks `(G, k)` at random among LCM pool groups with `k·|G| <= cap`.
fn sample_ambient<'a>(
    lcm: &[&'a PoolGroup],
    rng: &mut Stream,
    ks: &[u64],
    cap: usize,
    cache: &mut BTreeMap<(usize, u64), Ambient<'a>>,
) -> Option<(usize, u64)> {
    let i = rng.below(lcm.len());
    let options: Vec<u64> = ks
        .iter()
        .copied()
        .filter(|&k| k as usize * lcm[i].order() <= cap)
        .collect();
    if options.is_empty() {
        return None;
    }
    let k = *rng.pick(&options);
    cache
        .entry((i, k))
        .or_insert_with(|| Ambient::new(lcm[i], k));
    Some((i, k))
}

fn maximals<'c>(
    cache: &'c mut BTreeMap<(usize, u64), Vec<Subgroup>>,
    i: usize,
    g: &CayleyGroup,
    p: u64,
) -> &'c Vec<Subgroup> {
    cache
        .entry((i, p))
        .or_insert_with(|| index_p_subgroups(g, p))
}

fn nontrivial_lcm(pool: &Pool) -> Vec<&PoolGroup> {
    pool.lcm_groups()
        .into_iter()
        .filter(|g| g.order() > 1)
        .collect()
}

/// `o(vg) = lcm(o(v), o(g))` for `g ∈ G`, and `o(vw) = lcm(o(v), o(w))` for
/// `p`-elements `w ∈ A` with `o(w) ≠ o(v_p)`, whenever `o(v) = o(v, G)`.
pub fn check_add(pool: &Pool, sampler: &ConfigSampler, samples: usize, cap: usize) -> CheckReport {
    let mut rng = sampler.stream("add");
    let lcm = pool.lcm_groups();
    let mut cache = BTreeMap::new();
    let mut records = Vec::new();
    for _ in 0..samples {
        let Some(key) = sample_ambient(&lcm, &mut rng, KS, cap, &mut cache) else {
            continue;
        };
        let amb = &cache[&key];
        let a = &amb.a;
        let v = amb.draw_v(&mut rng);
        let rec = VerdictReport::new("add", format!("{}, v={v}", amb.describe()));
        if !amb.lcm {
            records.push(rec.vacuous("A is not LCM"));
            continue;
        }
        if !amb.v_aligned(v) {
            records.push(rec.vacuous("o(v) != o(v,G)"));
            continue;
        }
        let ov = a.element_order(v);
        let mut bad = amb
            .g
            .members()
            .iter()
            .copied()
            .find(|&g| a.element_order(a.mul(v, g)) != lcm_u64(ov, a.element_order(g)));
        let mut checked = amb.g.len() as u64;
        if bad.is_none() {
            'primes: for p in a.prime_divisors() {
                let ovp = p_part(ov, p);
                for w in a.p_elements(p) {
                    let ow = a.element_order(w);
                    if ow == ovp {
                        continue;
                    }
                    checked += 1;
                    if a.element_order(a.mul(v, w)) != lcm_u64(ov, ow) {
                        bad = Some(w);
                        break 'primes;
                    }
                }
            }
        }
        records.push(
            rec.value("o(v)", ov)
                .value("products checked", checked)
                .assert(bad.is_none(), || vec![v as u64, bad.unwrap() as u64]),
        );
    }
    CheckReport::new("add", records)
}

/// Shared sampling for the lemmas that need `(A, G, v, p, M)` with `M` of
/// index `p` in `G`.
struct MaximalConfig {
    key: (usize, u64),
    v: Elem,
    p: u64,
    m: Subgroup,
}

fn sample_maximal<'a>(
    lcm: &[&'a PoolGroup],
    rng: &mut Stream,
    ks: &[u64],
    cap: usize,
    ambients: &mut BTreeMap<(usize, u64), Ambient<'a>>,
    maxes: &mut BTreeMap<(usize, u64), Vec<Subgroup>>,
) -> Option<MaximalConfig> {
    let key = sample_ambient(lcm, rng, ks, cap, ambients)?;
    let amb = &ambients[&key];
    let primes = amb.base.group.prime_divisors();
    let p = *rng.pick(&primes);
    let ms = maximals(maxes, key.0, &amb.base.group, p);
    if ms.is_empty() {
        return None;
    }
    let m = rng.pick(ms).clone();
    let v = amb.draw_v(rng);
    Some(MaximalConfig { key, v, p, m })
}

fn describe_max(amb: &Ambient<'_>, c: &MaximalConfig) -> String {
    format!(
        "{}, v={}, p={}, M={:?}",
        amb.describe(),
        c.v,
        c.p,
        c.m.members()
    )
}

/// `o(vw) = o(vw, M)` for `p`-elements `w ∈ G ∖ M` with `o(w) = o(w, M)`.
pub fn check_coset2(
    pool: &Pool,
    sampler: &ConfigSampler,
    samples: usize,
    cap: usize,
) -> CheckReport {
    let mut rng = sampler.stream("coset2");
    let lcm = nontrivial_lcm(pool);
    let (mut ambients, mut maxes) = (BTreeMap::new(), BTreeMap::new());
    let mut records = Vec::new();
    for _ in 0..samples {
        let Some(c) = sample_maximal(&lcm, &mut rng, KS, cap, &mut ambients, &mut maxes) else {
            continue;
        };
        let amb = &ambients[&c.key];
        let a = &amb.a;
        let rec = VerdictReport::new("coset2", describe_max(amb, &c));
        if !amb.lcm {
            records.push(rec.vacuous("A is not LCM"));
            continue;
        }
        if !amb.v_aligned(c.v) {
            records.push(rec.vacuous("o(v) != o(v,G)"));
            continue;
        }
        let ws: Vec<Elem> = a
            .p_elements(c.p)
            .into_iter()
            .filter(|&w| amb.g.contains(w) && !c.m.contains(w))
            .filter(|&w| a.element_order(w) == a.coset_order_min(w, &c.m))
            .collect();
        if ws.is_empty() {
            records.push(rec.vacuous("no p-element w in G\\M with o(w) = o(w,M)"));
            continue;
        }
        let bad = ws.iter().copied().find(|&w| {
            let vw = a.mul(c.v, w);
            a.element_order(vw) != a.coset_order_min(vw, &c.m)
        });
        records.push(
            rec.value("w checked", ws.len() as u64)
                .assert(bad.is_none(), || vec![c.v as u64, bad.unwrap() as u64]),
        );
    }
    CheckReport::new("coset2", records)
}

/// `vxM` and `vx^iM` have the same order type for `1 <= i < p`, when
/// `o(v) = o(v, G)` and `o(vx, M) = o(vx)`.
pub fn check_same2(
    pool: &Pool,
    sampler: &ConfigSampler,
    samples: usize,
    cap: usize,
) -> CheckReport {
    let mut rng = sampler.stream("same2");
    let lcm = nontrivial_lcm(pool);
    let (mut ambients, mut maxes) = (BTreeMap::new(), BTreeMap::new());
    let mut records = Vec::new();
    for _ in 0..samples {
        let Some(c) = sample_maximal(&lcm, &mut rng, KS, cap, &mut ambients, &mut maxes) else {
            continue;
        };
        let amb = &ambients[&c.key];
        let a = &amb.a;
        let rec = VerdictReport::new("same2", describe_max(amb, &c));
        if !amb.lcm {
            records.push(rec.vacuous("A is not LCM"));
            continue;
        }
        if !amb.v_aligned(c.v) {
            records.push(rec.vacuous("o(v) != o(v,G)"));
            continue;
        }
        let xs: Vec<Elem> = amb
            .g
            .members()
            .iter()
            .copied()
            .filter(|&x| !c.m.contains(x))
            .filter(|&x| {
                let vx = a.mul(c.v, x);
                a.element_order(vx) == a.coset_order_min(vx, &c.m)
            })
            .collect();
        if xs.is_empty() {
            records.push(rec.vacuous("no x in G\\M with o(vx,M) = o(vx)"));
            continue;
        }
        let mut bad = None;
        'x: for &x in &xs {
            let base = a.coset_order_type(a.mul(c.v, x), &c.m);
            for i in 2..c.p {
                let vxi = a.mul(c.v, a.pow(x, i));
                if a.coset_order_type(vxi, &c.m) != base {
                    bad = Some((x, i));
                    break 'x;
                }
            }
        }
        let x0 = xs[0];
        records.push(
            rec.value("x checked", xs.len() as u64)
                .value("psi(vxM) for first x", a.coset_psi(a.mul(c.v, x0), &c.m))
                .assert(bad.is_none(), || {
                    let (x, i) = bad.unwrap();
                    vec![c.v as u64, x as u64, i]
                }),
        );
    }
    CheckReport::new("same2", records)
}

/// With `o(v, G) = o(v)` and `o(vw, G) = o(vw) = lcm(o(v), o(w))`, the coset
/// `vwG ⊆ A` and the coset `(v, w, G)` of `B = ⟨v⟩ × ⟨w⟩ × G` share their
/// order type. `B` is built explicitly.
pub fn check_same4(
    pool: &Pool,
    sampler: &ConfigSampler,
    samples: usize,
    cap: usize,
) -> CheckReport {
    let mut rng = sampler.stream("same4");
    let lcm = pool.lcm_groups();
    let mut ambients = BTreeMap::new();
    let mut records = Vec::new();
    for _ in 0..samples {
        let Some(key) = sample_ambient(&lcm, &mut rng, KS, cap, &mut ambients) else {
            continue;
        };
        let amb = &ambients[&key];
        let a = &amb.a;
        let v = amb.draw_v(&mut rng);
        let good_w: Vec<Elem> = a
            .elements()
            .filter(|&w| {
                let vw = a.mul(v, w);
                amb.v_aligned(vw)
                    && a.element_order(vw) == lcm_u64(a.element_order(v), a.element_order(w))
            })
            .collect();
        let w = if good_w.is_empty() || rng.below(2) == 0 {
            rng.below(a.order())
        } else {
            *rng.pick(&good_w)
        };
        let vw = a.mul(v, w);
        let (ov, ow) = (a.element_order(v), a.element_order(w));
        let rec = VerdictReport::new("same4", format!("{}, v={v}, w={w}", amb.describe()));
        if !amb.lcm {
            records.push(rec.vacuous("A is not LCM"));
            continue;
        }
        if !amb.v_aligned(v) {
            records.push(rec.vacuous("o(v) != o(v,G)"));
            continue;
        }
        if !amb.v_aligned(vw) || a.element_order(vw) != lcm_u64(ov, ow) {
            records.push(rec.vacuous("o(vw,G) = o(vw) = lcm(o(v),o(w)) fails"));
            continue;
        }
        let g = &amb.base.group;
        let border = ov * ow * g.order() as u64;
        if border as usize > cap {
            records.push(rec.vacuous("B exceeds the ambient cap"));
            continue;
        }
        let inner = direct_product(&cyclic(ow).unwrap(), g).unwrap();
        let b = direct_product(&cyclic(ov).unwrap(), &inner).unwrap();
        let gb = Subgroup::new(&b, (0..g.order()).collect()).expect("{1} x {1} x G");
        let gen_v = (1 % ov) as usize;
        let gen_w = (1 % ow) as usize;
        let vwg_in_b = gen_v * inner.order() + gen_w * g.order();
        let lhs = b.coset_order_type(vwg_in_b, &gb);
        let rhs = a.coset_order_type(vw, &amb.g);
        records.push(
            rec.value("psi(vwG)", rhs.psi())
                .value("|B|", border)
                .assert(lhs == rhs, || vec![v as u64, w as u64]),
        );
    }
    CheckReport::new("same4", records)
}

/// `p·ψ(vxM) < (p+1)·ψ(vM)` for `p`-groups `G ≤ A`, `M` maximal with
/// `exp(M) = exp(G)`, `o(v) = o(v, G)`, and every `x ∈ G ∖ M`.
pub fn check_coset_bound(
    pool: &Pool,
    sampler: &ConfigSampler,
    samples: usize,
    cap: usize,
) -> CheckReport {
    let mut rng = sampler.stream("p+1");
    let pgroups: Vec<&PoolGroup> = pool
        .lcm_groups()
        .into_iter()
        .filter(|g| g.group.p_group_prime().is_some())
        .collect();
    let (mut ambients, mut maxes) = (BTreeMap::new(), BTreeMap::new());
    let mut records = Vec::new();
    for _ in 0..samples {
        let i = rng.below(pgroups.len());
        let p = pgroups[i].group.p_group_prime().unwrap();
        let options: Vec<u64> = [1, p, p * p]
            .into_iter()
            .filter(|&k| k as usize * pgroups[i].order() <= cap)
            .collect();
        if options.is_empty() {
            continue;
        }
        let k = *rng.pick(&options);
        let amb = ambients
            .entry((i, k))
            .or_insert_with(|| Ambient::new(pgroups[i], k));
        let a = &amb.a;
        let g = &amb.base.group;
        let ms = maximals(&mut maxes, i, g, p);
        let m = rng.pick(ms).clone();
        let v = amb.draw_v(&mut rng);
        let rec = VerdictReport::new(
            "p+1",
            format!("{}, v={v}, M={:?}", amb.describe(), m.members()),
        );
        if !amb.lcm {
            records.push(rec.vacuous("A is not LCM"));
            continue;
        }
        if g.exponent_of_set(m.members().iter().copied()) != g.exponent() {
            records.push(rec.vacuous("exp(M) != exp(G)"));
            continue;
        }
        if !amb.v_aligned(v) {
            records.push(rec.vacuous("o(v) != o(v,G)"));
            continue;
        }
        let psi_vm = a.coset_psi(v, &m);
        let bound = &psi_vm * (p + 1);
        let mut worst = Natural::zero();
        let mut bad = None;
        for x in g.elements().filter(|&x| !m.contains(x)) {
            let lhs = a.coset_psi(a.mul(v, x), &m);
            if lhs > worst {
                worst = lhs.clone();
            }
            if &lhs * p >= bound {
                bad = Some(x);
                break;
            }
        }
        records.push(
            rec.value("psi(vM)", psi_vm)
                .value("max psi(vxM)", worst)
                .assert(bad.is_none(), || vec![v as u64, bad.unwrap() as u64]),
        );
    }
    CheckReport::new("p+1", records)
}

/// With `M` of index `p` minimising `ψ(vM)`: `(o(vx))_p = (exp(vG))_p` for
/// every `x ∈ G ∖ M`. Requires `o(v) = o(v, G)` in addition to the stated
/// hypotheses; without it the identity fails already for `A = G = C_4`.
pub fn check_exponent_alignment(
    pool: &Pool,
    sampler: &ConfigSampler,
    samples: usize,
    cap: usize,
) -> CheckReport {
    let id = "exponent-alignment";
    let mut rng = sampler.stream(id);
    let lcm = nontrivial_lcm(pool);
    let (mut ambients, mut maxes) = (BTreeMap::new(), BTreeMap::new());
    let mut records = Vec::new();
    for _ in 0..samples {
        let Some(key) = sample_ambient(&lcm, &mut rng, KS, cap, &mut ambients) else {
            continue;
        };
        let amb = &ambients[&key];
        let a = &amb.a;
        let g = &amb.base.group;
        let primes = g.prime_divisors();
        let p = *rng.pick(&primes);
        let v = amb.draw_v(&mut rng);
        let rec = VerdictReport::new(id, format!("{}, v={v}, p={p}", amb.describe()));
        if !amb.lcm {
            records.push(rec.vacuous("A is not LCM"));
            continue;
        }
        if !amb.v_aligned(v) {
            records.push(rec.vacuous("o(v) != o(v,G)"));
            continue;
        }
        let ms = maximals(&mut maxes, key.0, g, p);
        if ms.is_empty() {
            records.push(rec.vacuous("no subgroup of index p"));
            continue;
        }
        let psis: Vec<Natural> = ms.iter().map(|m| a.coset_psi(v, m)).collect();
        let min = psis.iter().min().unwrap().clone();
        let target = p_part(a.coset_exponent(v, &amb.g), p);
        let mut bad = None;
        let mut minimisers = 0u64;
        for (m, psi) in ms.iter().zip(&psis) {
            if *psi != min {
                continue;
            }
            minimisers += 1;
            if let Some(x) = g
                .elements()
                .filter(|&x| !m.contains(x))
                .find(|&x| p_part(a.element_order(a.mul(v, x)), p) != target)
            {
                bad = Some(x);
                break;
            }
        }
        records.push(
            rec.value("min psi(vM)", min)
                .value("minimising M", minimisers)
                .value("exp(vG)_p", target)
                .assert(bad.is_none(), || vec![v as u64, bad.unwrap() as u64]),
        );
    }
    CheckReport::new(id, records)
}

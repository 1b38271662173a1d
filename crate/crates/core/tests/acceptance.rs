//! Acceptance criteria. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any fails.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use elemorder_core::abelian::{
    enumerate_abelian, identify_by_psi, psi_homocyclic, to_invariant_factors, AbelianGroup,
};
use elemorder_core::explicit::{cyclic, dicyclic, dihedral, direct_product, from_abelian};
use elemorder_core::lab::{
    check_llc, check_multiplicativity, check_order_type_theorem, check_reduction, check_structural,
    run_suite, CheckReport, Pool, SuiteConfig, COVERAGE_IDS, MIN_NON_VACUOUS,
};
use elemorder_core::numcore::{Natural, Partition};

type Outcome = Result<String, String>;
type Criterion<'a> = (
    u32,
    &'static str,
    Option<Duration>,
    Box<dyn Fn() -> Outcome + 'a>,
);

fn nat(x: u64) -> Natural {
    Natural::from(x)
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn no_failures(r: &CheckReport) -> Result<(), String> {
    match r.failures().next() {
        None => Ok(()),
        Some(f) => Err(format!(
            "{}: {} failing configuration(s), first {} witness {:?}",
            r.lemma_id,
            r.failures().count(),
            f.configuration,
            f.witness
        )),
    }
}

fn abelian(factors: &[u64]) -> AbelianGroup {
    factors.iter().fold(AbelianGroup::trivial(), |acc, &k| {
        acc.product(&AbelianGroup::cyclic(k).unwrap())
    })
}

fn paper_pair_a() -> Outcome {
    let g = abelian(&[180, 5]);
    let h = abelian(&[150, 6]);
    ensure(g.psi() == nat(81191) && h.psi() == nat(91175), || {
        format!("symbolic psi {} / {}", g.psi(), h.psi())
    })?;
    ensure(g.exponent() == nat(180) && h.exponent() == nat(150), || {
        "exponents".into()
    })?;
    let (eg, eh) = (from_abelian(&g).unwrap(), from_abelian(&h).unwrap());
    ensure(eg.order() == 900 && eh.order() == 900, || {
        "explicit orders".into()
    })?;
    ensure(eg.psi() == nat(81191) && eh.psi() == nat(91175), || {
        format!("explicit psi {} / {}", eg.psi(), eh.psi())
    })?;
    ensure(eg.exponent() == 180 && eh.exponent() == 150, || {
        "explicit exponents".into()
    })?;
    Ok("psi 81191 < 91175, exponents 180 > 150, both engines".into())
}

fn paper_pair_b() -> Outcome {
    let g = direct_product(&cyclic(2).unwrap(), &dihedral(16).unwrap()).unwrap();
    let h = direct_product(&cyclic(4).unwrap(), &dicyclic(8).unwrap()).unwrap();
    ensure(g.psi() == nat(119) && h.psi() == nat(119), || {
        format!("psi {} / {}", g.psi(), h.psi())
    })?;
    let has8 = |t: &elemorder_core::OrderType| t.count_of(&nat(8)) > Natural::zero();
    ensure(has8(&g.order_type()) && !has8(&h.order_type()), || {
        "order-8 elements".into()
    })?;
    ensure(g.order_type() != h.order_type(), || {
        "order types equal".into()
    })?;
    ensure(!g.is_lcm_group() && h.is_lcm_group(), || {
        "LCM verdicts".into()
    })?;
    Ok("psi 119 = 119, order types differ, LCM false/true".into())
}

fn closed_form() -> Outcome {
    let mut cases = 0;
    for p in [2u64, 3, 5] {
        let mut n = 1;
        while p.pow(n) <= 512 {
            for m in 1..=n {
                let mut parts = vec![m];
                parts.extend(std::iter::repeat_n(1, (n - m) as usize));
                let a = AbelianGroup::from_components([(p, Partition::new(parts))]).unwrap();
                let brute = from_abelian(&a).unwrap().psi();
                let formula = psi_homocyclic(p, m, n).map_err(|e| e.to_string())?;
                ensure(brute == formula, || {
                    format!("p={p} m={m} n={n}: {brute} vs {formula}")
                })?;
                cases += 1;
            }
            n += 1;
        }
    }
    Ok(format!("{cases} (p, m, n) cases"))
}

fn reduction(pool: &Pool) -> Outcome {
    let r = check_reduction(&pool.p_groups());
    no_failures(&r)?;
    ensure(r.non_vacuous() > 0, || "no applicable groups".into())?;
    Ok(format!(
        "{} groups checked, {} without closed Omega_(1)",
        r.non_vacuous(),
        r.records.len() - r.non_vacuous()
    ))
}

fn injectivity() -> Outcome {
    let mut groups = 0;
    for n in 1..=10_000u64 {
        let all = enumerate_abelian(&nat(n)).unwrap();
        let psis: BTreeSet<Natural> = all.iter().map(AbelianGroup::psi).collect();
        ensure(psis.len() == all.len(), || {
            format!("psi collision at n={n}")
        })?;
        groups += all.len();
    }
    Ok(format!("{groups} abelian groups of order <= 10000"))
}

fn main6(pool: &Pool) -> Outcome {
    let r = check_order_type_theorem(pool);
    no_failures(&r)?;
    Ok(format!("{} pairs, zero violations", r.records.len()))
}

fn structural(pool: &Pool) -> Outcome {
    let s = check_structural(pool);
    let l = check_llc(pool);
    no_failures(&s)?;
    no_failures(&l)?;
    Ok(format!(
        "{} groups, {} (G, d) pairs applicable",
        s.records.len(),
        l.non_vacuous()
    ))
}

fn multiplicativity(pool: &Pool) -> Outcome {
    let r = check_multiplicativity(&pool.product_pairs(128));
    no_failures(&r)?;
    Ok(format!("{} pairs", r.records.len()))
}

fn suite() -> Outcome {
    let config = SuiteConfig::default();
    let a = run_suite(&config);
    let b = run_suite(&config);
    let mut problems = Vec::new();
    let mut lines = Vec::new();
    for id in COVERAGE_IDS {
        let c = a.check(id).expect("check present");
        let ok = c.passed() && c.non_vacuous() >= MIN_NON_VACUOUS;
        lines.push(format!(
            "{id}={}/{}",
            c.non_vacuous(),
            if c.passed() { "pass" } else { "FAIL" }
        ));
        if !ok {
            let why = match c.failures().next() {
                Some(f) => format!(
                    "{id}: {} failure(s), e.g. {} {:?}",
                    c.failures().count(),
                    f.configuration,
                    f.computed
                ),
                None => format!("{id}: only {} non-vacuous", c.non_vacuous()),
            };
            problems.push(why);
        }
    }
    let identical = a == b && format!("{:?}", a.checks) == format!("{:?}", b.checks);
    if !identical {
        problems.push("reports differ between runs".into());
    }
    if problems.is_empty() {
        Ok(format!(
            "non-vacuous/verdict: {}; deterministic",
            lines.join(" ")
        ))
    } else {
        Err(format!("{} | {}", problems.join("; "), lines.join(" ")))
    }
}

fn inverse_problem() -> Outcome {
    let chain = |n: u64, psi: u64| {
        identify_by_psi(&nat(n), &nat(psi))
            .map(|g| g.map(|g| to_invariant_factors(&g).chain().to_vec()))
            .map_err(|e| e.to_string())
    };
    ensure(chain(900, 81191)? == Some(vec![nat(5), nat(180)]), || {
        "identify(900, 81191)".into()
    })?;
    ensure(chain(900, 91175)? == Some(vec![nat(6), nat(150)]), || {
        "identify(900, 91175)".into()
    })?;
    let mut calls = 0;
    for n in 1..=10_000u64 {
        for g in enumerate_abelian(&nat(n)).unwrap() {
            let found = identify_by_psi(&nat(n), &g.psi()).map_err(|e| format!("n={n}: {e}"))?;
            ensure(found.as_ref() == Some(&g), || {
                format!("n={n}: wrong match for {g}")
            })?;
            calls += 1;
        }
    }
    Ok(format!(
        "chains 5|180 and 6|150; {calls} lookups, no multiple matches"
    ))
}

fn main() {
    let pool = Pool::build(128);
    let criteria: Vec<Criterion> = vec![
        (
            1,
            "counterexample A",
            Some(Duration::from_secs(5)),
            Box::new(paper_pair_a),
        ),
        (
            2,
            "counterexample B",
            Some(Duration::from_secs(1)),
            Box::new(paper_pair_b),
        ),
        (3, "homocyclic closed form", None, Box::new(closed_form)),
        (4, "reduction formula", None, Box::new(|| reduction(&pool))),
        (
            5,
            "psi injective on abelian groups, n <= 10^4",
            Some(Duration::from_secs(60)),
            Box::new(injectivity),
        ),
        (
            6,
            "psi equal iff order type equal (LCM)",
            None,
            Box::new(|| main6(&pool)),
        ),
        (
            7,
            "structural equivalences",
            None,
            Box::new(|| structural(&pool)),
        ),
        (
            8,
            "multiplicativity",
            None,
            Box::new(|| multiplicativity(&pool)),
        ),
        (9, "lab suite completeness", None, Box::new(suite)),
        (10, "inverse problem", None, Box::new(inverse_problem)),
    ];
    let mut failed = 0;
    for (n, title, limit, run) in criteria {
        let start = Instant::now();
        let mut outcome = run();
        let elapsed = start.elapsed();
        if let (Ok(_), Some(limit)) = (&outcome, limit) {
            if elapsed > limit {
                outcome = Err(format!("took {elapsed:.2?}, limit {limit:?}"));
            }
        }
        match outcome {
            Ok(detail) => println!("criterion {n:>2} PASS  {title} [{elapsed:.2?}]: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("criterion {n:>2} FAIL  {title} [{elapsed:.2?}]: {detail}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 10 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}

//! Verification harness: instantiates the ψ lemmas on concrete groups and
//! records one verdict per configuration.
//!
//! Configurations whose hypotheses fail are kept as [`Verdict::Vacuous`] so
//! coverage can be audited. All arithmetic is exact.

mod basic;
mod coset;
mod pairs;
mod pool;
mod sampler;

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;

use crate::numcore::Natural;

pub use basic::{
    check_abelian_classification, check_decomposition, check_ineq, check_llc,
    check_multiplicativity, check_nmid, check_omeg, check_order_type_theorem, check_reduction,
    check_structural,
};
pub use coset::{
    check_add, check_coset2, check_coset_bound, check_exponent_alignment, check_same2, check_same4,
};
pub use pairs::{
    check_coset_monotone, check_dominating_bijection, check_monotonicity, check_subset_gap,
};
pub use pool::{Pool, PoolGroup};
pub use sampler::ConfigSampler;

/// Every check id known to [`run_suite`], sorted.
pub const LEMMA_IDS: &[&str] = &[
    "add",
    "bijec",
    "cor3",
    "coset2",
    "dec",
    "exponent-alignment",
    "exx",
    "ineq",
    "llc",
    "maaa",
    "main6",
    "mohss22",
    "multiplicativity",
    "nmid",
    "omeg",
    "p+1",
    "reduction",
    "same2",
    "same4",
    "structural",
];

/// Checks that must reach [`MIN_NON_VACUOUS`] non-vacuous configurations
/// under the default configuration.
pub const COVERAGE_IDS: &[&str] = &[
    "add",
    "coset2",
    "same2",
    "same4",
    "exx",
    "bijec",
    "p+1",
    "exponent-alignment",
    "cor3",
    "mohss22",
];

pub const MIN_NON_VACUOUS: usize = 50;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Verdict {
    Pass,
    Fail,
    /// A hypothesis did not hold; nothing was asserted.
    Vacuous,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Vacuous => "vacuous",
        }
    }
}

/// Outcome for one concrete configuration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerdictReport {
    pub lemma_id: String,
    pub configuration: String,
    pub computed: Vec<(String, Natural)>,
    pub verdict: Verdict,
    /// Element ids (or group indices, as the configuration string says)
    /// exhibiting a failure. Never empty on [`Verdict::Fail`].
    pub witness: Vec<u64>,
    pub note: String,
}

impl VerdictReport {
    pub(crate) fn new(lemma_id: &str, configuration: String) -> Self {
        VerdictReport {
            lemma_id: lemma_id.into(),
            configuration,
            computed: Vec::new(),
            verdict: Verdict::Pass,
            witness: Vec::new(),
            note: String::new(),
        }
    }

    pub(crate) fn value(mut self, name: &str, v: impl Into<Natural>) -> Self {
        self.computed.push((name.into(), v.into()));
        self
    }

    pub(crate) fn vacuous(mut self, note: &str) -> Self {
        self.verdict = Verdict::Vacuous;
        self.note = note.into();
        self
    }

    pub(crate) fn fail(mut self, witness: Vec<u64>) -> Self {
        assert!(!witness.is_empty(), "failures carry a witness");
        self.verdict = Verdict::Fail;
        self.witness = witness;
        self
    }

    /// Pass, or fail with `witness` when `ok` is false.
    pub(crate) fn assert(self, ok: bool, witness: impl FnOnce() -> Vec<u64>) -> Self {
        if ok {
            self
        } else {
            self.fail(witness())
        }
    }
}

/// All verdicts of one check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub lemma_id: String,
    pub records: Vec<VerdictReport>,
}

impl CheckReport {
    pub(crate) fn new(lemma_id: &str, records: Vec<VerdictReport>) -> Self {
        CheckReport {
            lemma_id: lemma_id.into(),
            records,
        }
    }

    pub fn count(&self, v: Verdict) -> usize {
        self.records.iter().filter(|r| r.verdict == v).count()
    }

    pub fn non_vacuous(&self) -> usize {
        self.records.len() - self.count(Verdict::Vacuous)
    }

    pub fn passed(&self) -> bool {
        self.count(Verdict::Fail) == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &VerdictReport> {
        self.records.iter().filter(|r| r.verdict == Verdict::Fail)
    }
}

/// Parameters of a suite run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteConfig {
    pub seed: u64,
    /// Order cap for the groups under test.
    pub cap: usize,
    /// Order cap for ambient groups `C_k × G`.
    pub ambient_cap: usize,
    /// Random configurations drawn per sampled check.
    pub samples: usize,
    /// Upper end of the abelian classification scan.
    pub classification_max: u64,
    /// Run only these checks (all when empty).
    pub lemmas: Vec<String>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: 2024,
            cap: crate::explicit::DEFAULT_SUBGROUP_CAP,
            ambient_cap: crate::explicit::DEFAULT_TABLE_CAP,
            samples: 600,
            classification_max: 10_000,
            lemmas: Vec::new(),
        }
    }
}

impl SuiteConfig {
    fn wants(&self, id: &str) -> bool {
        self.lemmas.is_empty() || self.lemmas.iter().any(|l| l == id)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub config: SuiteConfig,
    /// Sorted by lemma id.
    pub checks: Vec<CheckReport>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckReport::passed)
    }

    pub fn check(&self, id: &str) -> Option<&CheckReport> {
        self.checks.iter().find(|c| c.lemma_id == id)
    }

    pub fn records(&self) -> impl Iterator<Item = &VerdictReport> {
        self.checks.iter().flat_map(|c| c.records.iter())
    }

    /// Fixed-width table: one row per check.
    pub fn summary_table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{:<20} {:>7} {:>7} {:>7} {:>7}  status",
            "lemma", "total", "pass", "fail", "vacuous"
        );
        for c in &self.checks {
            let _ = writeln!(
                out,
                "{:<20} {:>7} {:>7} {:>7} {:>7}  {}",
                c.lemma_id,
                c.records.len(),
                c.count(Verdict::Pass),
                c.count(Verdict::Fail),
                c.count(Verdict::Vacuous),
                if c.passed() { "PASS" } else { "FAIL" }
            );
        }
        out
    }
}

/// Unknown lemma ids in a filter.
pub fn unknown_lemmas(config: &SuiteConfig) -> Vec<String> {
    config
        .lemmas
        .iter()
        .filter(|l| !LEMMA_IDS.contains(&l.as_str()))
        .cloned()
        .collect()
}

/// Runs every selected check. Deterministic in `config`.
pub fn run_suite(config: &SuiteConfig) -> SuiteReport {
    let pool = Pool::build(config.cap);
    let sampler = ConfigSampler::new(config.seed);
    let mut checks = Vec::new();
    let c = config;
    macro_rules! run {
        ($id:literal, $e:expr) => {
            if c.wants($id) {
                checks.push($e);
            }
        };
    }
    run!(
        "multiplicativity",
        check_multiplicativity(&pool.product_pairs(c.cap))
    );
    run!("ineq", check_ineq(&pool, &sampler, c.samples, c.cap));
    run!("reduction", check_reduction(&pool.p_groups()));
    run!("nmid", check_nmid(&pool.p_groups()));
    run!("omeg", check_omeg(&pool.p_groups()));
    run!("structural", check_structural(&pool));
    run!("llc", check_llc(&pool));
    run!("dec", check_decomposition(&pool));
    run!("add", check_add(&pool, &sampler, c.samples, c.ambient_cap));
    run!(
        "coset2",
        check_coset2(&pool, &sampler, c.samples, c.ambient_cap)
    );
    run!(
        "same2",
        check_same2(&pool, &sampler, c.samples, c.ambient_cap)
    );
    run!(
        "same4",
        check_same4(&pool, &sampler, c.samples, c.ambient_cap)
    );
    run!(
        "p+1",
        check_coset_bound(&pool, &sampler, c.samples, c.ambient_cap)
    );
    run!(
        "exponent-alignment",
        check_exponent_alignment(&pool, &sampler, c.samples, c.ambient_cap)
    );
    run!("exx", check_monotonicity(&pool));
    run!("bijec", check_dominating_bijection(&pool));
    run!("cor3", check_subset_gap(&pool));
    run!("mohss22", check_coset_monotone(&pool, c.ambient_cap));
    run!("main6", check_order_type_theorem(&pool));
    run!(
        "maaa",
        check_abelian_classification(c.classification_max, c.cap)
    );
    checks.sort_by(|a, b| a.lemma_id.cmp(&b.lemma_id));
    SuiteReport {
        config: config.clone(),
        checks,
    }
}

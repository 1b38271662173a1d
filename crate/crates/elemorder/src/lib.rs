//! Command-line front end for `elemorder-core`: group expressions, Cayley
//! table files and report encodings.

pub mod expr;
pub mod report;
pub mod table_format;

use std::io::Write;

use clap::{Args, Parser, Subcommand};
use elemorder_core::abelian::{
    enumerate_abelian, identify_by_psi, to_invariant_factors, AbelianError, OrderType,
};
use elemorder_core::explicit::{
    cyclic, dicyclic, dihedral, direct_product, elementary_abelian, CayleyGroup, ExplicitError,
    DEFAULT_TABLE_CAP,
};
use elemorder_core::lab::{run_suite, unknown_lemmas, SuiteConfig, LEMMA_IDS};
use elemorder_core::numcore::{Natural, NumError};
use serde_json::json;
use thiserror::Error;

pub use expr::{parse_group, GroupExpr, ParseError, Term};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "elemorder",
    version,
    about = "Sums of element orders of finite groups"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GroupArgs {
    /// Group expression, e.g. "C180 x C5" or "C2 x D16"
    pub expr: String,
    #[arg(long)]
    pub json: bool,
    /// Build the full Cayley table even for abelian expressions
    #[arg(long)]
    pub force_explicit: bool,
    /// Largest order for which a Cayley table is built
    #[arg(long, default_value_t = DEFAULT_TABLE_CAP)]
    pub cap: usize,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Run only this check (repeatable)
    #[arg(long)]
    pub lemma: Vec<String>,
    #[arg(long, default_value_t = SuiteConfig::default().seed)]
    pub seed: u64,
    /// Order cap for groups under test
    #[arg(long, default_value_t = SuiteConfig::default().cap)]
    pub cap: usize,
    /// Order cap for ambient groups C_k x G
    #[arg(long, default_value_t = SuiteConfig::default().ambient_cap)]
    pub ambient_cap: usize,
    #[arg(long, default_value_t = SuiteConfig::default().samples)]
    pub samples: usize,
    /// Largest order in the abelian classification scan
    #[arg(long, default_value_t = SuiteConfig::default().classification_max)]
    pub classification_max: u64,
    /// Print one JSON record per verdict; the summary goes to stderr
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Sum of element orders
    Psi(GroupArgs),
    /// Number of elements of each order
    Ordertype(GroupArgs),
    /// Whether o(ab) divides lcm(o(a), o(b)) for all a, b
    Lcmcheck(GroupArgs),
    /// Abelian group of order N with the given psi
    Identify {
        n: String,
        psi: String,
        #[arg(long)]
        json: bool,
    },
    /// All abelian groups of order N with their psi values
    Enumerate {
        n: String,
        #[arg(long)]
        json: bool,
    },
    /// Run the lemma verification suite
    Verify(VerifyArgs),
    /// Print the two classic counterexample pairs
    Counterexamples {
        #[arg(long)]
        json: bool,
    },
    /// Write the Cayley table of a group in the text format
    Table {
        expr: String,
        #[arg(long, default_value_t = DEFAULT_TABLE_CAP)]
        cap: usize,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(#[from] ParseError),
    #[error("order {order} exceeds the cap of {cap}")]
    CapExceeded { order: Natural, cap: usize },
    #[error("{path}: {source}")]
    Table {
        path: String,
        source: table_format::TableError,
    },
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{0}")]
    Explicit(#[from] ExplicitError),
    #[error("{0}")]
    Abelian(#[from] AbelianError),
    #[error("invalid number '{0}'")]
    Number(String),
    #[error("unknown lemma id(s): {0}; known: {1}")]
    UnknownLemma(String, String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::CapExceeded { .. } => EXIT_CAP,
            CliError::Table {
                source: table_format::TableError::TooLarge { .. },
                ..
            } => EXIT_CAP,
            CliError::Abelian(AbelianError::ConjectureFalsified { .. }) => EXIT_FAILURE,
            _ => EXIT_USAGE,
        }
    }
}

/// ψ, order type and LCM verdict of a group expression.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Summary {
    pub group: String,
    pub order: Natural,
    pub psi: Natural,
    pub order_type: OrderType,
    pub lcm: bool,
}

impl Summary {
    pub fn to_json(&self) -> serde_json::Value {
        report::group_record(
            &self.group,
            &self.order,
            &self.psi,
            &self.order_type,
            self.lcm,
        )
    }
}

fn term_table(t: &Term, cap: usize) -> Result<CayleyGroup, CliError> {
    Ok(match t {
        Term::Cyclic(k) => cyclic(*k)?,
        Term::Dihedral(n) => dihedral(*n)?,
        Term::Dicyclic(n) => dicyclic(*n)?,
        Term::ElemAbelian(p, k) => elementary_abelian(*p, *k)?,
        Term::Table(path) => {
            let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
                path: path.clone(),
                source,
            })?;
            table_format::parse_table(&text, cap).map_err(|source| CliError::Table {
                path: path.clone(),
                source,
            })?
        }
    })
}

/// Builds the Cayley table of `e`, refusing anything above `cap`.
pub fn build_table(e: &GroupExpr, cap: usize) -> Result<CayleyGroup, CliError> {
    if let Some(order) = e.order() {
        if order > Natural::from(cap) {
            return Err(CliError::CapExceeded { order, cap });
        }
    }
    let mut acc: Option<CayleyGroup> = None;
    for t in e.terms() {
        let g = term_table(t, cap)?;
        acc = Some(match acc {
            None => g,
            Some(a) => {
                let order = a.order() as u64 * g.order() as u64;
                if order > cap as u64 {
                    return Err(CliError::CapExceeded {
                        order: order.into(),
                        cap,
                    });
                }
                direct_product(&a, &g)?
            }
        });
    }
    Ok(acc.expect("at least one term").with_label(e.to_string()))
}

/// Symbolic engine for abelian expressions, explicit tables otherwise.
pub fn evaluate(e: &GroupExpr, force_explicit: bool, cap: usize) -> Result<Summary, CliError> {
    if !force_explicit {
        if let Some(a) = e.to_abelian() {
            return Ok(Summary {
                group: e.to_string(),
                order: a.order(),
                psi: a.psi(),
                order_type: a.order_type(),
                lcm: true,
            });
        }
    }
    let g = build_table(e, cap)?;
    Ok(Summary {
        group: e.to_string(),
        order: Natural::from(g.order()),
        psi: g.psi(),
        order_type: g.order_type(),
        lcm: g.is_lcm_group(),
    })
}

fn parse_nat(s: &str) -> Result<Natural, CliError> {
    s.trim()
        .parse()
        .map_err(|_: NumError| CliError::Number(s.into()))
}

fn order_type_table(t: &OrderType) -> String {
    let mut out = String::from("order\tcount\n");
    for (d, s) in t.entries() {
        out.push_str(&format!("{d}\t{s}\n"));
    }
    out
}

/// Runs one command, writing results to `out` and diagnostics to `err`.
/// Returns the process exit status.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match dispatch(cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    let io = |r: std::io::Result<()>| {
        r.map_err(|source| CliError::Io {
            path: "<stdout>".into(),
            source,
        })
    };
    match cli.command {
        Command::Psi(a) | Command::Ordertype(a) | Command::Lcmcheck(a) if a.json => {
            let s = evaluate(&parse_group(&a.expr)?, a.force_explicit, a.cap)?;
            io(writeln!(out, "{}", s.to_json()))?;
        }
        Command::Psi(a) => {
            let s = evaluate(&parse_group(&a.expr)?, a.force_explicit, a.cap)?;
            io(writeln!(out, "{}", s.psi))?;
        }
        Command::Ordertype(a) => {
            let s = evaluate(&parse_group(&a.expr)?, a.force_explicit, a.cap)?;
            io(write!(out, "{}", order_type_table(&s.order_type)))?;
        }
        Command::Lcmcheck(a) => {
            let s = evaluate(&parse_group(&a.expr)?, a.force_explicit, a.cap)?;
            io(writeln!(out, "{}", s.lcm))?;
        }
        Command::Identify { n, psi, json } => {
            let (n, psi) = (parse_nat(&n)?, parse_nat(&psi)?);
            let found = identify_by_psi(&n, &psi)?;
            let text = found.as_ref().map(|a| to_invariant_factors(a).to_string());
            if json {
                let v = json!({
                    "order": report::nat(&n),
                    "psi": report::nat(&psi),
                    "match": text,
                    "primary": found.as_ref().map(|a| a.to_string()),
                });
                io(writeln!(out, "{v}"))?;
            } else {
                io(writeln!(out, "{}", text.as_deref().unwrap_or("none")))?;
            }
        }
        Command::Enumerate { n, json } => {
            let n = parse_nat(&n)?;
            for a in enumerate_abelian(&n)? {
                let chain = to_invariant_factors(&a).to_string();
                if json {
                    let v = json!({
                        "group": chain,
                        "primary": a.to_string(),
                        "exponent": report::nat(&a.exponent()),
                        "psi": report::nat(&a.psi()),
                    });
                    io(writeln!(out, "{v}"))?;
                } else {
                    io(writeln!(out, "{chain}\t{a}\t{}", a.psi()))?;
                }
            }
        }
        Command::Verify(v) => return verify(v, out, err),
        Command::Counterexamples { json } => counterexamples(json, out)?,
        Command::Table { expr, cap } => {
            let g = build_table(&parse_group(&expr)?, cap)?;
            io(write!(out, "{}", table_format::write_table(&g)))?;
        }
    }
    Ok(EXIT_OK)
}

fn verify(v: VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    let config = SuiteConfig {
        seed: v.seed,
        cap: v.cap,
        ambient_cap: v.ambient_cap,
        samples: v.samples,
        classification_max: v.classification_max,
        lemmas: v.lemma,
    };
    let unknown = unknown_lemmas(&config);
    if !unknown.is_empty() {
        return Err(CliError::UnknownLemma(
            unknown.join(", "),
            LEMMA_IDS.join(", "),
        ));
    }
    let report = run_suite(&config);
    let io = |r: std::io::Result<()>| {
        r.map_err(|source| CliError::Io {
            path: "<output>".into(),
            source,
        })
    };
    if v.json {
        io(write!(out, "{}", report::verdict_lines(&report)))?;
        io(write!(err, "{}", report.summary_table()))?;
    } else {
        io(write!(out, "{}", report.summary_table()))?;
        for c in &report.checks {
            for f in c.failures() {
                let computed: Vec<String> =
                    f.computed.iter().map(|(k, x)| format!("{k}={x}")).collect();
                io(writeln!(
                    out,
                    "FAIL {}: {} [{}] witness {:?}",
                    f.lemma_id,
                    f.configuration,
                    computed.join(", "),
                    f.witness
                ))?;
            }
        }
    }
    Ok(if report.passed() {
        EXIT_OK
    } else {
        EXIT_FAILURE
    })
}

fn counterexamples(json: bool, out: &mut dyn Write) -> Result<(), CliError> {
    let io = |r: std::io::Result<()>| {
        r.map_err(|source| CliError::Io {
            path: "<stdout>".into(),
            source,
        })
    };
    let a_side: Vec<(String, Natural, Natural, Natural)> = ["C180 x C5", "C150 x C6"]
        .iter()
        .map(|s| {
            let a = parse_group(s).unwrap().to_abelian().unwrap();
            (s.to_string(), a.order(), a.exponent(), a.psi())
        })
        .collect();
    let b_side: Vec<Summary> = ["C2 x D16", "C4 x Q8"]
        .iter()
        .map(|s| evaluate(&parse_group(s).unwrap(), false, DEFAULT_TABLE_CAP))
        .collect::<Result<_, _>>()?;
    if json {
        for (g, n, e, p) in &a_side {
            let v = json!({
                "pair": "A",
                "group": g,
                "order": report::nat(n),
                "exponent": report::nat(e),
                "psi": report::nat(p),
            });
            io(writeln!(out, "{v}"))?;
        }
        for s in &b_side {
            let mut v = s.to_json();
            v["pair"] = json!("B");
            io(writeln!(out, "{v}"))?;
        }
        return Ok(());
    }
    io(writeln!(out, "A: larger exponent, smaller psi"))?;
    io(writeln!(
        out,
        "{:<12} {:>6} {:>9} {:>8}",
        "group", "order", "exponent", "psi"
    ))?;
    for (g, n, e, p) in &a_side {
        io(writeln!(out, "{g:<12} {n:>6} {e:>9} {p:>8}"))?;
    }
    io(writeln!(out))?;
    io(writeln!(out, "B: equal psi, different order types"))?;
    io(writeln!(
        out,
        "{:<12} {:>6} {:>6} {:>6}  order type",
        "group", "order", "psi", "lcm"
    ))?;
    for s in &b_side {
        io(writeln!(
            out,
            "{:<12} {:>6} {:>6} {:>6}  {}",
            s.group, s.order, s.psi, s.lcm, s.order_type
        ))?;
    }
    Ok(())
}

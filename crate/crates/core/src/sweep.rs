//! Verification sweeps over parameter ranges.
//!
//! Every suite expands into an ordered list of work items, evaluated on a
//! worker pool and reduced in item order, so reports do not depend on the
//! number of workers.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::braid::periodicity_check;
use crate::cohomology::{
    block_table, block_table_padded, conja_table, conja_table_padded, conjecture1_check, dim_xnd,
    pi_gamma, pi_variety_table, positive_roots, restriction_uniqueness_check, triangle_check,
};
use crate::degree::{a_big_a, craven_delta, Rational, ZetaSpec};
use crate::error::{Error, Result};
use crate::partition::{d_core, restrictions, BetaSet, Partition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Suite {
    Perv,
    Triangle,
    Periodicity,
    PiVariety,
    Block,
    Uniqueness,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Perv,
        Suite::Triangle,
        Suite::Periodicity,
        Suite::PiVariety,
        Suite::Block,
        Suite::Uniqueness,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Perv => "perv",
            Suite::Triangle => "triangle",
            Suite::Periodicity => "periodicity",
            Suite::PiVariety => "pi-variety",
            Suite::Block => "block",
            Suite::Uniqueness => "uniqueness",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::InvalidParameters(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepConfig {
    pub max_n: usize,
    /// Inclusive bounds on `d`, intersected with each suite's own range.
    pub d_range: Option<(usize, usize)>,
    pub jobs: usize,
    pub seed: u64,
    /// Extra beta-set padding checked on top of the canonical one.
    pub pad: Option<usize>,
}

impl SweepConfig {
    pub fn new(max_n: usize) -> Self {
        Self {
            max_n,
            d_range: None,
            jobs: 1,
            seed: 0,
            pad: None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.max_n == 0 {
            return Err(Error::InvalidParameters("max_n must be at least 1".into()));
        }
        if self.jobs == 0 {
            return Err(Error::InvalidParameters("jobs must be at least 1".into()));
        }
        if let Some((lo, hi)) = self.d_range {
            if lo == 0 || lo > hi {
                return Err(Error::InvalidParameters(format!("bad d range {lo}..={hi}")));
            }
        }
        Ok(())
    }

    fn d_values(&self, lo: usize, hi: usize) -> impl Iterator<Item = usize> {
        let (a, b) = self.d_range.unwrap_or((lo, hi));
        lo.max(a)..=hi.min(b)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub status: Status,
    pub max_n: usize,
    pub items: usize,
    pub checks: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerifyReport {
    pub status: Status,
    pub suites: Vec<SuiteReport>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// The first counterexample, tagged with its suite.
    pub fn first_witness(&self) -> Option<Value> {
        self.suites.iter().find_map(|s| {
            s.witness
                .as_ref()
                .map(|w| json!({ "suite": s.suite, "witness": w }))
        })
    }
}

/// Outcome of one work item: checks performed, and the first failure.
struct ItemOutcome {
    checks: u64,
    failure: Option<Value>,
}

impl ItemOutcome {
    fn new() -> Self {
        Self {
            checks: 0,
            failure: None,
        }
    }

    /// Records one check; keeps only the first failure.
    fn check(&mut self, ok: bool, witness: impl FnOnce() -> Value) {
        self.checks += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(witness());
        }
    }

    fn fail(mut self, witness: Value) -> Self {
        self.check(false, || witness);
        self
    }
}

#[derive(Clone, Debug)]
enum Item {
    Perv { n: usize, d: usize, mu: Partition },
    Integrality { m: usize, d: usize },
    Triangle { n: usize, d: usize, mu: Partition },
    Periodicity { n: usize, d: usize },
    PiVariety { n: usize },
    Block { n: usize, d: usize, nu: Partition },
    Uniqueness { n: usize },
}

pub fn run_suite(suite: Suite, config: &SweepConfig) -> Result<SuiteReport> {
    config.validate()?;
    let items = items_for(suite, config);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs)
        .build()
        .map_err(|e| Error::InvalidParameters(e.to_string()))?;
    let outcomes: Vec<ItemOutcome> = pool.install(|| {
        items
            .par_iter()
            .enumerate()
            .map(|(index, item)| evaluate(item, index, config))
            .collect()
    });
    let checks = outcomes.iter().map(|o| o.checks).sum();
    let witness = outcomes.into_iter().find_map(|o| o.failure);
    Ok(SuiteReport {
        suite: suite.name().to_string(),
        status: if witness.is_none() {
            Status::Pass
        } else {
            Status::Fail
        },
        max_n: config.max_n,
        items: items.len(),
        checks,
        witness,
    })
}

pub fn run_suites(suites: &[Suite], config: &SweepConfig) -> Result<VerifyReport> {
    let reports = suites
        .iter()
        .map(|&suite| run_suite(suite, config))
        .collect::<Result<Vec<_>>>()?;
    let status = if reports.iter().all(|r| r.status == Status::Pass) {
        Status::Pass
    } else {
        Status::Fail
    };
    Ok(VerifyReport {
        status,
        suites: reports,
    })
}

fn items_for(suite: Suite, config: &SweepConfig) -> Vec<Item> {
    let mut items = Vec::new();
    let max_n = config.max_n;
    match suite {
        Suite::Perv => {
            for n in 1..=max_n {
                for d in config.d_values(2, n + 1) {
                    for mu in Partition::all(n + 1 - d) {
                        items.push(Item::Perv { n, d, mu });
                    }
                }
            }
            for m in 1..=max_n + 1 {
                for d in config.d_values(1, m) {
                    items.push(Item::Integrality { m, d });
                }
            }
        }
        Suite::Triangle => {
            for n in 2..=max_n {
                for d in config.d_values(2, n) {
                    for mu in Partition::all(n + 1 - d) {
                        items.push(Item::Triangle { n, d, mu });
                    }
                }
            }
        }
        Suite::Periodicity => {
            for n in 1..=max_n {
                for d in config.d_values(1, n + 1) {
                    items.push(Item::Periodicity { n, d });
                }
            }
        }
        Suite::PiVariety => {
            items.extend((1..=max_n).map(|n| Item::PiVariety { n }));
        }
        Suite::Block => {
            for n in 1..=max_n {
                for d in config.d_values(1, n + 1) {
                    let mut size = n + 1 - d;
                    loop {
                        for nu in Partition::all(size) {
                            items.push(Item::Block { n, d, nu });
                        }
                        if size < d {
                            break;
                        }
                        size -= d;
                    }
                }
            }
        }
        Suite::Uniqueness => {
            items.extend((2..=max_n).map(|n| Item::Uniqueness { n }));
        }
    }
    items
}

fn evaluate(item: &Item, index: usize, config: &SweepConfig) -> ItemOutcome {
    let result = match item {
        Item::Perv { n, d, mu } => check_perv(*n, *d, mu, config),
        Item::Integrality { m, d } => check_integrality(*m, *d, index, config),
        Item::Triangle { n, d, mu } => check_triangle(*n, *d, mu),
        Item::Periodicity { n, d } => check_periodicity(*n, *d),
        Item::PiVariety { n } => check_pi_variety(*n),
        Item::Block { n, d, nu } => check_block(*n, *d, nu, config),
        Item::Uniqueness { n } => check_uniqueness(*n),
    };
    result.unwrap_or_else(|e| ItemOutcome::new().fail(json!({ "error": e.to_string() })))
}

fn parts(p: &Partition) -> Value {
    json!(p.parts())
}

fn rational(r: Rational) -> Value {
    json!(r.to_string())
}

/// Both identities of the hook-addition lemma, the degree and exponent
/// dualities, the sign law and the endpoint eigenvalues, on the canonical
/// beta-set and three shifts of it.
fn check_perv(n: usize, d: usize, mu: &Partition, config: &SweepConfig) -> Result<ItemOutcome> {
    let mut out = ItemOutcome::new();
    let zeta = ZetaSpec::primitive(d);
    let dim = dim_xnd(n, d)? as i64;
    let (a_mu, big_a_mu) = a_big_a(mu);
    let canonical = BetaSet::of(mu, d);
    let mut shifts = vec![0, 1, 2, 5];
    if let Some(pad) = config.pad {
        if pad >= d {
            shifts.push(pad - d);
        }
    }
    for k in shifts {
        let beta = canonical.shift(k);
        let s = beta.len() as i64;
        for x in beta.addable_hooks(d) {
            let (next, hook) = beta.add_hook(x, d)?;
            let lambda = next.partition();
            let below = beta.count_below(x) as i64;
            let between = beta.count_between(x, x + d) as i64;
            let xi = x as i64;
            let (ni, di) = (n as i64, d as i64);
            let witness = |what: &str, expected: Value, actual: Value| {
                json!({
                    "check": what, "n": n, "d": d, "mu": parts(mu), "beta": beta.entries(),
                    "x": x, "lambda": parts(&lambda), "expected": expected, "actual": actual,
                })
            };

            let delta_c = craven_delta(&lambda, mu, zeta);
            let expected_c = 2 * (ni + 1 - di - xi + below) + between;
            out.check(delta_c == Rational::from_integer(expected_c), || {
                witness("craven difference", json!(expected_c), rational(delta_c))
            });

            let (a, big_a) = a_big_a(&lambda);
            let delta_aa = a + big_a - a_mu - big_a_mu;
            let expected_aa = di * (ni - di + s - xi);
            out.check(delta_aa == expected_aa, || {
                witness("a + A difference", json!(expected_aa), json!(delta_aa))
            });

            let (pi, gamma) = pi_gamma(&beta, x, d, n)?;
            let dual_pi = Rational::from_integer(2 * dim) - delta_c;
            out.check(Rational::from_integer(pi) == dual_pi, || {
                witness("pi = 2 dim - craven", rational(dual_pi), json!(pi))
            });
            let dual_gamma = Rational::from_integer(dim) - Rational::new(delta_aa, di);
            out.check(Rational::from_integer(gamma) == dual_gamma, || {
                witness(
                    "gamma = dim - (a + A)/d",
                    rational(dual_gamma),
                    json!(gamma),
                )
            });

            out.check((pi - hook.leg_length as i64) % 2 == 0, || {
                witness(
                    "sign law",
                    json!(hook.leg_length % 2),
                    json!(pi.rem_euclid(2)),
                )
            });

            out.check((0..=2 * dim).contains(&pi), || {
                witness("degree within 0..=2 dim", json!(2 * dim), json!(pi))
            });
        }
    }

    let table = conja_table(n, d, mu)?;
    for (lambda, expected) in [
        (Partition::column(n + 1), 0),
        (Partition::row(n + 1), 2 * n as i64 + 1 - d as i64),
    ] {
        let positions = table.entries.positions_of(&lambda);
        for &(_, f) in &positions {
            out.check(f == expected, || {
                json!({
                    "check": "endpoint eigenvalue", "n": n, "d": d, "mu": parts(mu),
                    "lambda": parts(&lambda), "expected": expected, "actual": f,
                })
            });
        }
    }
    let characters = table.entries.characters();
    out.check(
        characters.len() == table.entries.len()
            && table.entries.total() == table.entries.len() as u64,
        || json!({ "check": "multiplicity free", "n": n, "d": d, "mu": parts(mu) }),
    );
    for pad in [d + 1, d + 5] {
        let padded = conja_table_padded(n, d, mu, pad)?;
        out.check(padded == table, || {
            json!({ "check": "padding invariance", "n": n, "d": d, "mu": parts(mu), "pad": pad })
        });
    }
    Ok(out)
}

/// `C_d(deg lambda) - C_d(deg core)` is an integer; also re-derives the
/// core by random removal orders.
fn check_integrality(
    m: usize,
    d: usize,
    index: usize,
    config: &SweepConfig,
) -> Result<ItemOutcome> {
    let mut out = ItemOutcome::new();
    let zeta = ZetaSpec::primitive(d);
    let mut rng =
        ChaCha8Rng::seed_from_u64(config.seed ^ (index as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15));
    for lambda in Partition::all(m) {
        let core = d_core(&lambda, d);
        let delta = craven_delta(&lambda, &core, zeta);
        out.check(delta.is_integer(), || {
            json!({
                "check": "craven integrality", "m": m, "d": d, "lambda": parts(&lambda),
                "core": parts(&core), "actual": rational(delta),
            })
        });
        let random_core = random_removal_core(&lambda, d, &mut rng);
        out.check(random_core == core, || {
            json!({
                "check": "core confluence", "lambda": parts(&lambda), "d": d,
                "expected": parts(&core), "actual": parts(&random_core),
            })
        });
    }
    Ok(out)
}

fn random_removal_core(lambda: &Partition, d: usize, rng: &mut ChaCha8Rng) -> Partition {
    let mut beta = BetaSet::of(lambda, d);
    loop {
        let movable: Vec<usize> = beta
            .entries()
            .iter()
            .copied()
            .filter(|&x| x >= d && !beta.contains(x - d))
            .collect();
        let Some(&x) = movable.choose(rng) else {
            return beta.partition();
        };
        let mut entries: Vec<usize> = beta
            .entries()
            .iter()
            .map(|&y| if y == x { x - d } else { y })
            .collect();
        entries.sort_unstable();
        beta = BetaSet::new(entries).expect("distinct entries");
    }
}

fn check_triangle(n: usize, d: usize, mu: &Partition) -> Result<ItemOutcome> {
    let mut out = ItemOutcome::new();
    let report = triangle_check(n, d, mu)?;
    out.checks += report.components.len() as u64;
    if let Some(w) = &report.witness {
        out.failure = Some(json!({
            "check": "restriction triangle", "n": n, "d": d, "mu": parts(mu),
            "component": w,
        }));
    }
    Ok(out)
}

fn check_periodicity(n: usize, d: usize) -> Result<ItemOutcome> {
    let mut out = ItemOutcome::new();
    let report = periodicity_check(n, d)?;
    out.check(
        report.pass(),
        || json!({ "check": "d-periodicity", "report": report }),
    );
    Ok(out)
}

fn check_pi_variety(n: usize) -> Result<ItemOutcome> {
    let mut out = ItemOutcome::new();
    let table = pi_variety_table(n)?;
    let nu_g = positive_roots(n + 1) as i64;
    for entry in table.entries.entries() {
        let (a, big_a) = a_big_a(&entry.lambda);
        let degree = 4 * nu_g - 2 * big_a;
        let frob = 2 * nu_g - a - big_a;
        let mult = restrictions(&entry.lambda)?.len() as u64;
        out.check(entry.degree == degree && entry.frob_exp == frob && entry.multiplicity == mult, || {
            json!({
                "check": "X(pi) laws", "n": n, "lambda": parts(&entry.lambda),
                "expected": { "degree": degree, "frobenius_exponent": frob, "multiplicity": mult },
                "actual": { "degree": entry.degree, "frobenius_exponent": entry.frob_exp,
                            "multiplicity": entry.multiplicity },
            })
        });
    }
    let characters = table.entries.characters();
    out.check(
        characters.len() == Partition::all(n + 1).len(),
        || json!({ "check": "X(pi) contains every character", "n": n, "found": characters.len() }),
    );
    Ok(out)
}

fn check_block(n: usize, d: usize, nu: &Partition, config: &SweepConfig) -> Result<ItemOutcome> {
    let mut out = ItemOutcome::new();
    let table = block_table(n, d, nu)?;
    for lambda in table.entries.characters() {
        let positions = table.entries.positions_of(&lambda);
        out.check(positions.len() == 1, || {
            json!({
                "check": "chain independence", "n": n, "d": d, "nu": parts(nu),
                "lambda": parts(&lambda), "positions": positions,
            })
        });
    }
    let report = conjecture1_check(&table, d)?;
    out.check(
        report.pass,
        || json!({ "check": "block consistency", "report": report }),
    );
    let extra = config.pad.filter(|&p| p >= d).unwrap_or(d + 5);
    let padded = block_table_padded(n, d, nu, extra)?;
    out.check(
        padded == table,
        || json!({ "check": "padding invariance", "n": n, "d": d, "nu": parts(nu), "pad": extra }),
    );
    Ok(out)
}

fn check_uniqueness(n: usize) -> Result<ItemOutcome> {
    let mut out = ItemOutcome::new();
    let report = restriction_uniqueness_check(n)?;
    out.checks += report.entries.len() as u64;
    if !report.pass() {
        let exceptions: Vec<Value> = report
            .exceptions()
            .iter()
            .map(|e| {
                json!({
                    "lambda": parts(&e.lambda),
                    "solutions": e.solutions.iter().map(|s| s.iter().map(parts).collect::<Vec<_>>()).collect::<Vec<_>>(),
                })
            })
            .collect();
        out.failure = Some(json!({
            "check": "restriction uniqueness", "n": n,
            "expected": if n == 2 { "only (2,1) ~ (3) + (1,1,1)" } else { "no exceptions" },
            "actual": exceptions,
        }));
    }
    Ok(out)
}

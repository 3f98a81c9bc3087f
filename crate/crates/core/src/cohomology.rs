//! Conjectural compact-support cohomology tables of the varieties
//! `X_{n,d}`, of `X(pi)` and of the block varieties, together with the
//! character-level checks of the restriction triangle and of the
//! degree/eigenvalue predictions.
//!
//! A table entry `(lambda, i, f, m)` records `m` copies of the unipotent
//! character `chi_lambda` in `H^i_c` on which Frobenius acts by `q^f`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::degree::{a_big_a, craven_delta, Rational, ZetaSpec};
use crate::error::{Error, Result};
use crate::partition::{restrictions, BetaSet, Partition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TableSource {
    Xnd,
    Pi,
    Block,
    Derived,
}

impl fmt::Display for TableSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            TableSource::Xnd => "xnd",
            TableSource::Pi => "pi",
            TableSource::Block => "block",
            TableSource::Derived => "derived",
        };
        f.write_str(s)
    }
}

/// Sort key of an entry: degree, then Frobenius exponent, then character.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EntryKey {
    pub degree: i64,
    pub frob_exp: i64,
    pub lambda: Partition,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TableEntry {
    pub lambda: Partition,
    pub degree: i64,
    #[serde(rename = "frobenius_exponent")]
    pub frob_exp: i64,
    pub multiplicity: u64,
}

/// A bigraded multiset of unipotent characters.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GradedCharacter {
    entries: BTreeMap<EntryKey, u64>,
}

impl GradedCharacter {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, lambda: Partition, degree: i64, frob_exp: i64, multiplicity: u64) {
        if multiplicity == 0 {
            return;
        }
        *self
            .entries
            .entry(EntryKey {
                degree,
                frob_exp,
                lambda,
            })
            .or_insert(0) += multiplicity;
    }

    pub fn extend(&mut self, other: &GradedCharacter) {
        for (key, &m) in &other.entries {
            self.insert(key.lambda.clone(), key.degree, key.frob_exp, m);
        }
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Number of distinct `(lambda, degree, frob_exp)` keys.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    /// Total multiplicity.
    pub fn total(&self) -> u64 {
        self.entries.values().sum()
    }

    pub fn multiplicity(&self, lambda: &Partition, degree: i64, frob_exp: i64) -> u64 {
        self.entries
            .get(&EntryKey {
                degree,
                frob_exp,
                lambda: lambda.clone(),
            })
            .copied()
            .unwrap_or(0)
    }

    /// Entries in `(degree, frob_exp, lambda)` order.
    pub fn entries(&self) -> impl Iterator<Item = TableEntry> + '_ {
        self.entries.iter().map(|(key, &m)| TableEntry {
            lambda: key.lambda.clone(),
            degree: key.degree,
            frob_exp: key.frob_exp,
            multiplicity: m,
        })
    }

    pub fn keys(&self) -> impl Iterator<Item = (&EntryKey, u64)> {
        self.entries.iter().map(|(k, &m)| (k, m))
    }

    /// Entries as `(lambda, degree, frob_exp, multiplicity)` tuples.
    pub fn to_tuples(&self) -> Vec<(Partition, i64, i64, u64)> {
        self.entries()
            .map(|e| (e.lambda, e.degree, e.frob_exp, e.multiplicity))
            .collect()
    }

    /// Distinct characters occurring.
    pub fn characters(&self) -> BTreeSet<Partition> {
        self.entries.keys().map(|k| k.lambda.clone()).collect()
    }

    /// `(degree, frob_exp)` pairs in which `lambda` occurs.
    pub fn positions_of(&self, lambda: &Partition) -> BTreeSet<(i64, i64)> {
        self.entries
            .keys()
            .filter(|k| &k.lambda == lambda)
            .map(|k| (k.degree, k.frob_exp))
            .collect()
    }
}

impl FromIterator<(Partition, i64, i64, u64)> for GradedCharacter {
    fn from_iter<T: IntoIterator<Item = (Partition, i64, i64, u64)>>(iter: T) -> Self {
        let mut g = GradedCharacter::new();
        for (lambda, degree, frob_exp, m) in iter {
            g.insert(lambda, degree, frob_exp, m);
        }
        g
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CohomologyTable {
    pub n: usize,
    pub d: usize,
    /// Label of the local system (`mu`, or the core `nu` of a block table).
    pub mu: Partition,
    pub source: TableSource,
    pub entries: GradedCharacter,
}

#[derive(Serialize, Deserialize)]
struct TableRecord {
    n: usize,
    d: usize,
    mu: Vec<usize>,
    source: TableSource,
    entries: Vec<TableEntry>,
}

impl CohomologyTable {
    pub fn to_json(&self) -> String {
        let record = TableRecord {
            n: self.n,
            d: self.d,
            mu: self.mu.parts().to_vec(),
            source: self.source,
            entries: self.entries.entries().collect(),
        };
        serde_json::to_string_pretty(&record).expect("table serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let record: TableRecord =
            serde_json::from_str(s).map_err(|e| Error::MalformedTable(e.to_string()))?;
        let mu = Partition::new(record.mu)?;
        let mut entries = GradedCharacter::new();
        for e in record.entries {
            if e.multiplicity == 0 {
                return Err(Error::MalformedTable("zero multiplicity".into()));
            }
            entries.insert(e.lambda, e.degree, e.frob_exp, e.multiplicity);
        }
        Ok(Self {
            n: record.n,
            d: record.d,
            mu,
            source: record.source,
            entries,
        })
    }

    /// One row per entry; list-valued columns are space separated.
    pub fn to_csv(&self) -> String {
        let mut writer = csv::Writer::from_writer(Vec::new());
        writer
            .write_record([
                "n",
                "d",
                "mu",
                "source",
                "lambda",
                "degree",
                "frobenius_exponent",
                "multiplicity",
            ])
            .expect("in-memory write");
        let join = |p: &Partition| {
            p.parts()
                .iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        };
        for e in self.entries.entries() {
            writer
                .write_record([
                    self.n.to_string(),
                    self.d.to_string(),
                    join(&self.mu),
                    self.source.to_string(),
                    join(&e.lambda),
                    e.degree.to_string(),
                    e.frob_exp.to_string(),
                    e.multiplicity.to_string(),
                ])
                .expect("in-memory write");
        }
        String::from_utf8(writer.into_inner().expect("flush")).expect("utf-8")
    }
}

/// `dim X_{n,d} = l(v_d) = 2n + 1 - d`.
pub fn dim_xnd(n: usize, d: usize) -> Result<usize> {
    check_range(n, d)?;
    Ok(2 * n + 1 - d)
}

/// `1 <= d <= n + 1`; `n = 0` (so `d = 1`) is the point `X_{0,1}` of `GL_1`.
fn check_range(n: usize, d: usize) -> Result<()> {
    if d == 0 || d > n + 1 {
        return Err(Error::DOutOfRange { n, d, max: n + 1 });
    }
    Ok(())
}

/// `pi_d(X, x) = 2(n + x - #{y < x}) - #{x < y < x + d}` and
/// `gamma_d(X, x) = n + 1 + x - s`.
pub fn pi_gamma(beta: &BetaSet, x: usize, d: usize, n: usize) -> Result<(i64, i64)> {
    if d == 0 || !beta.contains(x) || beta.contains(x + d) {
        return Err(Error::NotAddable {
            beta: beta.to_string(),
            x,
            d,
        });
    }
    if !beta.contains_initial(d) {
        return Err(Error::InvalidBetaSet(format!(
            "{beta} does not contain 0..{d}"
        )));
    }
    let below = beta.count_below(x) as i64;
    let between = beta.count_between(x, x + d) as i64;
    let (n, x, s) = (n as i64, x as i64, beta.len() as i64);
    Ok((2 * (n + x - below) - between, n + 1 + x - s))
}

/// `H_c(X_{n,d}, F_mu)`: one entry `(mu * x, pi_d(X, x), gamma_d(X, x))` per
/// `x ∈ X'`, using the canonical beta-set padded by `d`.
pub fn conja_table(n: usize, d: usize, mu: &Partition) -> Result<CohomologyTable> {
    conja_table_padded(n, d, mu, d)
}

/// As [`conja_table`] with an explicit beta-set padding (at least `d`).
pub fn conja_table_padded(
    n: usize,
    d: usize,
    mu: &Partition,
    pad: usize,
) -> Result<CohomologyTable> {
    check_range(n, d)?;
    let expected = n + 1 - d;
    if mu.size() != expected {
        return Err(Error::SizeMismatch {
            mu: mu.to_string(),
            got: mu.size(),
            expected,
        });
    }
    if pad < d {
        return Err(Error::InvalidParameters(format!(
            "padding {pad} is smaller than d = {d}"
        )));
    }
    let beta = BetaSet::of(mu, pad);
    let mut entries = GradedCharacter::new();
    for x in beta.addable_hooks(d) {
        let (next, _) = beta.add_hook(x, d)?;
        let (pi, gamma) = pi_gamma(&beta, x, d, n)?;
        entries.insert(next.partition(), pi, gamma, 1);
    }
    Ok(CohomologyTable {
        n,
        d,
        mu: mu.clone(),
        source: TableSource::Xnd,
        entries,
    })
}

/// Harish-Chandra restriction to the Levi of type `A_{n-1}`: one-box
/// branching on every character.
pub fn hc_restrict(table: &GradedCharacter) -> GradedCharacter {
    let mut out = GradedCharacter::new();
    for (key, m) in table.keys() {
        for lambda in restrictions(&key.lambda).expect("characters have positive size") {
            out.insert(lambda, key.degree, key.frob_exp, m);
        }
    }
    out
}

/// Künneth with `H_c(G_m)`: `H^1_c` with eigenvalue 1 and `H^2_c` with
/// eigenvalue `q`.
pub fn gm_product(table: &GradedCharacter) -> GradedCharacter {
    let mut out = GradedCharacter::new();
    for (key, m) in table.keys() {
        out.insert(key.lambda.clone(), key.degree + 1, key.frob_exp, m);
        out.insert(key.lambda.clone(), key.degree + 2, key.frob_exp + 1, m);
    }
    out
}

/// Uniform translation of `(degree, frob_exp)`; `[-2](1)` is `(2, 1)`.
pub fn shift_twist(table: &GradedCharacter, delta_deg: i64, delta_exp: i64) -> GradedCharacter {
    table
        .keys()
        .map(|(k, m)| {
            (
                k.lambda.clone(),
                k.degree + delta_deg,
                k.frob_exp + delta_exp,
                m,
            )
        })
        .collect()
}

/// Which part of the case analysis an eigenvalue falls under.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EigenCase {
    /// `f = n + 1 + x - s` with `x ∈ X'`: the middle term is the exact sum.
    HookAddition,
    /// Any other eigenvalue: the outer terms must cancel in pairs.
    Cancelling,
}

/// One `(lambda', f)` isotypic component of the three terms.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriangleComponent {
    pub lambda: Partition,
    pub frob_exp: i64,
    pub case: EigenCase,
    /// First degree of the sequences below.
    pub base_degree: i64,
    pub left: Vec<u64>,
    pub middle: Vec<u64>,
    pub right: Vec<u64>,
    /// Ranks of `H^k(right) -> H^{k+1}(left)`, when they exist.
    pub connecting: Option<Vec<u64>>,
    pub ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

/// A cancellation of `right` in degree `k` against `left` in degree `k + 1`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cancellation {
    pub frob_exp: i64,
    pub lambda: Partition,
    pub right_degree: i64,
    pub left_degree: i64,
    pub multiplicity: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriangleReport {
    pub n: usize,
    pub d: usize,
    pub mu: Partition,
    pub feasible: bool,
    /// Frobenius exponents of the hook-addition case.
    pub exact_exponents: Vec<i64>,
    pub cancellations: Vec<Cancellation>,
    pub components: Vec<TriangleComponent>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<TriangleComponent>,
}

/// The three terms of the restriction triangle as graded characters:
/// `(G_m x X_{n-1,d-1}, X_{n,d}^{U_I}, X_{n-1,d}[-2](1))`.
pub fn triangle_terms(
    n: usize,
    d: usize,
    mu: &Partition,
) -> Result<(GradedCharacter, GradedCharacter, GradedCharacter)> {
    if d < 2 || d > n {
        return Err(Error::InvalidParameters(format!(
            "triangle needs 2 <= d <= n, got n = {n}, d = {d}"
        )));
    }
    let left = gm_product(&conja_table(n - 1, d - 1, mu)?.entries);
    let middle = hc_restrict(&conja_table(n, d, mu)?.entries);
    let mut sum = GradedCharacter::new();
    for nu in restrictions(mu)? {
        sum.extend(&conja_table(n - 1, d, &nu)?.entries);
    }
    let right = shift_twist(&sum, 2, 1);
    Ok((left, middle, right))
}

/// Checks the long exact sequence of the restriction triangle one isotypic
/// eigenspace at a time.
///
/// With `l_k, m_k, r_k` the multiplicities in degree `k`, the connecting
/// ranks are forced: `c_k = l_k + r_k - m_k - c_{k-1}`. They must satisfy
/// `0 <= c_k <= min(r_k, l_{k+1})`. At hook-addition eigenvalues every
/// `c_k` must vanish; elsewhere the middle term must vanish and the
/// outer terms cancel in pairs.
pub fn triangle_check(n: usize, d: usize, mu: &Partition) -> Result<TriangleReport> {
    let (left, middle, right) = triangle_terms(n, d, mu)?;
    let beta = BetaSet::of(mu, d);
    let s = beta.len() as i64;
    let exact_exponents: Vec<i64> = beta
        .addable_hooks(d)
        .into_iter()
        .map(|x| n as i64 + 1 + x as i64 - s)
        .collect();

    let mut components_keys: BTreeSet<(i64, Partition)> = BTreeSet::new();
    for g in [&left, &middle, &right] {
        for (k, _) in g.keys() {
            components_keys.insert((k.frob_exp, k.lambda.clone()));
        }
    }

    let mut components = Vec::new();
    let mut cancellations = Vec::new();
    for (f, lambda) in components_keys {
        let case = if exact_exponents.contains(&f) {
            EigenCase::HookAddition
        } else {
            EigenCase::Cancelling
        };
        let degrees: Vec<i64> = [&left, &middle, &right]
            .iter()
            .flat_map(|g| g.positions_of(&lambda))
            .filter(|&(_, e)| e == f)
            .map(|(deg, _)| deg)
            .collect();
        let lo = *degrees.iter().min().expect("component is non-empty");
        let hi = *degrees.iter().max().expect("component is non-empty") + 1;
        let seq = |g: &GradedCharacter| -> Vec<u64> {
            (lo..=hi).map(|k| g.multiplicity(&lambda, k, f)).collect()
        };
        let (l, m, r) = (seq(&left), seq(&middle), seq(&right));
        let connecting = connecting_ranks(&l, &m, &r);
        let reason = match (&connecting, case) {
            (None, _) => Some("no connecting ranks fit the long exact sequence".to_string()),
            (Some(c), EigenCase::HookAddition) if c.iter().any(|&x| x != 0) => {
                Some("hook-addition eigenvalue with non-zero connecting map".to_string())
            }
            (Some(c), EigenCase::Cancelling) => {
                if m.iter().any(|&x| x != 0) {
                    Some("middle term non-zero away from hook-addition eigenvalues".to_string())
                } else if (0..c.len())
                    .any(|k| r[k] != c[k] || (k + 1 < l.len() && l[k + 1] != c[k]) || l[0] != 0)
                {
                    Some("outer terms do not cancel in pairs".to_string())
                } else {
                    None
                }
            }
            _ => None,
        };
        if let (Some(c), EigenCase::Cancelling, None) = (&connecting, case, &reason) {
            for (k, &rank) in c.iter().enumerate() {
                if rank > 0 {
                    cancellations.push(Cancellation {
                        frob_exp: f,
                        lambda: lambda.clone(),
                        right_degree: lo + k as i64,
                        left_degree: lo + k as i64 + 1,
                        multiplicity: rank,
                    });
                }
            }
        }
        components.push(TriangleComponent {
            lambda: lambda.clone(),
            frob_exp: f,
            case,
            base_degree: lo,
            left: l,
            middle: m,
            right: r,
            connecting,
            ok: reason.is_none(),
            reason,
        });
    }
    cancellations.sort();
    let witness = components.iter().find(|c| !c.ok).cloned();
    Ok(TriangleReport {
        n,
        d,
        mu: mu.clone(),
        feasible: witness.is_none(),
        exact_exponents,
        cancellations,
        components,
        witness,
    })
}

/// Solves `m_k = l_k + r_k - c_k - c_{k-1}` for the connecting ranks.
fn connecting_ranks(l: &[u64], m: &[u64], r: &[u64]) -> Option<Vec<u64>> {
    let mut ranks = Vec::with_capacity(l.len());
    let mut prev: i64 = 0;
    for k in 0..l.len() {
        let c = l[k] as i64 + r[k] as i64 - m[k] as i64 - prev;
        let next_left = l.get(k + 1).copied().unwrap_or(0) as i64;
        if c < 0 || c > r[k] as i64 || c > next_left {
            return None;
        }
        ranks.push(c as u64);
        prev = c;
    }
    Some(ranks)
}

/// Number of positive roots of type `A_{n-1}`, i.e. of `GL_n`.
pub fn positive_roots(rank_plus_one: usize) -> usize {
    rank_plus_one * rank_plus_one.saturating_sub(1) / 2
}

/// `H_c(X(pi))` assembled from the `X_{n,1}` tables:
/// degree shift `4 nu_L - 2 A_mu`, twist `2 nu_L - a_mu - A_mu`.
pub fn pi_variety_table(n: usize) -> Result<CohomologyTable> {
    if n == 0 {
        return Err(Error::InvalidParameters("X(pi) needs n >= 1".into()));
    }
    let nu_levi = positive_roots(n) as i64;
    let mut entries = GradedCharacter::new();
    for mu in Partition::all(n) {
        let (a, big_a) = a_big_a(&mu);
        let table = conja_table(n, 1, &mu)?;
        entries.extend(&shift_twist(
            &table.entries,
            4 * nu_levi - 2 * big_a,
            2 * nu_levi - a - big_a,
        ));
    }
    Ok(CohomologyTable {
        n,
        d: 1,
        mu: Partition::empty(),
        source: TableSource::Pi,
        entries,
    })
}

/// Ambient ranks `n - (a-1-i) d` of the steps of a block chain from a
/// partition of size `core_size`.
pub fn block_ranks(n: usize, d: usize, core_size: usize) -> Result<Vec<usize>> {
    check_range(n, d)?;
    if core_size > n + 1 - d || !(n + 1 - core_size).is_multiple_of(d) {
        return Err(Error::InvalidParameters(format!(
            "core size {core_size} is not n + 1 - a d with a >= 1 (n = {n}, d = {d})"
        )));
    }
    let steps = (n + 1 - core_size) / d;
    Ok((0..steps).map(|i| n - (steps - 1 - i) * d).collect())
}

/// Total dimension of the block variety: the sum of the step dimensions.
pub fn block_dimension(n: usize, d: usize, core_size: usize) -> Result<usize> {
    block_ranks(n, d, core_size)?
        .into_iter()
        .map(|rank| dim_xnd(rank, d))
        .sum()
}

/// Block variety table: every chain `nu -> mu_1 -> ... -> lambda` of
/// `d`-hook additions contributes one copy of `lambda` in degree
/// `sum pi_d` with eigenvalue `q^{sum gamma_d}`.
pub fn block_table(n: usize, d: usize, nu: &Partition) -> Result<CohomologyTable> {
    block_table_padded(n, d, nu, d)
}

pub fn block_table_padded(
    n: usize,
    d: usize,
    nu: &Partition,
    pad: usize,
) -> Result<CohomologyTable> {
    let ranks = block_ranks(n, d, nu.size())?;
    let mut layer: BTreeMap<Partition, BTreeMap<(i64, i64), u64>> = BTreeMap::new();
    layer.insert(nu.clone(), BTreeMap::from([((0, 0), 1)]));
    for rank in ranks {
        let mut next: BTreeMap<Partition, BTreeMap<(i64, i64), u64>> = BTreeMap::new();
        for (mu, paths) in &layer {
            let step = conja_table_padded(rank, d, mu, pad)?;
            for (key, _) in step.entries.keys() {
                let slot = next.entry(key.lambda.clone()).or_default();
                for (&(deg, f), &count) in paths {
                    *slot
                        .entry((deg + key.degree, f + key.frob_exp))
                        .or_insert(0) += count;
                }
            }
        }
        layer = next;
    }
    let mut entries = GradedCharacter::new();
    for (lambda, paths) in layer {
        for ((deg, f), count) in paths {
            entries.insert(lambda.clone(), deg, f, count);
        }
    }
    Ok(CohomologyTable {
        n,
        d,
        mu: nu.clone(),
        source: TableSource::Block,
        entries,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Conjecture1Failure {
    pub lambda: Partition,
    pub check: String,
    pub degrees: Vec<i64>,
    pub expected: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Conjecture1Report {
    pub n: usize,
    pub d: usize,
    pub nu: Partition,
    pub characters: usize,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Conjecture1Failure>,
}

/// Checks disjointness (no character in two degrees) and that every
/// character `lambda` sits in degree `D` with
/// `2 dim - D = C_d(deg lambda) - C_d(deg nu)`.
pub fn conjecture1_check(table: &CohomologyTable, d: usize) -> Result<Conjecture1Report> {
    let dim = block_dimension(table.n, d, table.mu.size())? as i64;
    let zeta = ZetaSpec::primitive(d);
    let mut witness = None;
    let characters = table.entries.characters();
    for lambda in &characters {
        let degrees: BTreeSet<i64> = table
            .entries
            .positions_of(lambda)
            .into_iter()
            .map(|(deg, _)| deg)
            .collect();
        let degrees: Vec<i64> = degrees.into_iter().collect();
        if degrees.len() != 1 {
            witness = Some(Conjecture1Failure {
                lambda: lambda.clone(),
                check: "disjointness".into(),
                degrees,
                expected: None,
            });
            break;
        }
        let delta = craven_delta(lambda, &table.mu, zeta);
        if Rational::from_integer(2 * dim - degrees[0]) != delta {
            witness = Some(Conjecture1Failure {
                lambda: lambda.clone(),
                check: "craven degree".into(),
                degrees,
                expected: Some(format!("2 dim - degree = {delta}")),
            });
            break;
        }
    }
    Ok(Conjecture1Report {
        n: table.n,
        d,
        nu: table.mu.clone(),
        characters: characters.len(),
        pass: witness.is_none(),
        witness,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UniquenessEntry {
    pub lambda: Partition,
    /// Every non-negative combination with the branching image of
    /// `chi_lambda`, each as its list of constituents.
    pub solutions: Vec<Vec<Partition>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UniquenessReport {
    pub n: usize,
    pub entries: Vec<UniquenessEntry>,
}

impl UniquenessReport {
    /// Characters whose branching image is shared with another combination.
    pub fn exceptions(&self) -> Vec<&UniquenessEntry> {
        self.entries
            .iter()
            .filter(|e| e.solutions.len() != 1)
            .collect()
    }

    /// Unique for `n >= 3`; for `n = 2` the only exception is
    /// `(2,1)` against `(3) + (1,1,1)`.
    pub fn pass(&self) -> bool {
        let exceptions = self.exceptions();
        if self.n >= 3 {
            return exceptions.is_empty();
        }
        if self.n != 2 || exceptions.len() != 1 {
            return false;
        }
        let e = exceptions[0];
        let mut expected = vec![
            vec![Partition::column(3), Partition::row(3)],
            vec![Partition::new(vec![2, 1]).expect("valid")],
        ];
        expected.sort();
        e.lambda == Partition::new(vec![2, 1]).expect("valid") && e.solutions == expected
    }
}

/// For each `lambda ⊢ n + 1`, enumerates all `chi = sum c_nu chi_nu` with
/// `c_nu >= 0` and the same one-box restriction as `chi_lambda`.
///
/// Restrictions of irreducibles are multiplicity free and the target is a
/// 0/1 vector, so every `c_nu <= 1` and the search is an exact cover of the
/// restriction of `lambda` by restrictions of other partitions.
pub fn restriction_uniqueness_check(n: usize) -> Result<UniquenessReport> {
    if n < 2 {
        return Err(Error::InvalidParameters(format!(
            "restriction uniqueness needs n >= 2, got {n}"
        )));
    }
    let all = Partition::all(n + 1);
    let branching: Vec<BTreeSet<Partition>> = all
        .iter()
        .map(|p| restrictions(p).map(|r| r.into_iter().collect()))
        .collect::<Result<_>>()?;
    let mut entries = Vec::new();
    for (i, lambda) in all.iter().enumerate() {
        let target = &branching[i];
        let candidates: Vec<usize> = (0..all.len())
            .filter(|&j| branching[j].is_subset(target))
            .collect();
        let mut solutions = Vec::new();
        let mut chosen = Vec::new();
        exact_cover(
            target,
            &BTreeSet::new(),
            &candidates,
            &branching,
            &mut chosen,
            &mut solutions,
        );
        let mut solutions: Vec<Vec<Partition>> = solutions
            .into_iter()
            .map(|sol| {
                let mut parts: Vec<Partition> = sol.into_iter().map(|j| all[j].clone()).collect();
                parts.sort();
                parts
            })
            .collect();
        solutions.sort();
        entries.push(UniquenessEntry {
            lambda: lambda.clone(),
            solutions,
        });
    }
    Ok(UniquenessReport { n, entries })
}

fn exact_cover(
    target: &BTreeSet<Partition>,
    covered: &BTreeSet<Partition>,
    candidates: &[usize],
    branching: &[BTreeSet<Partition>],
    chosen: &mut Vec<usize>,
    solutions: &mut Vec<Vec<usize>>,
) {
    let Some(first) = target.iter().find(|p| !covered.contains(*p)) else {
        solutions.push(chosen.clone());
        return;
    };
    for &j in candidates {
        let set = &branching[j];
        if set.contains(first) && set.is_disjoint(covered) {
            let mut next = covered.clone();
            next.extend(set.iter().cloned());
            chosen.push(j);
            exact_cover(target, &next, candidates, branching, chosen, solutions);
            chosen.pop();
        }
    }
}

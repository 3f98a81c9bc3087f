//! Partitions, beta-sets and hook combinatorics.
//!
//! A partition is stored with weakly decreasing parts. A beta-set of a
//! partition `mu = (mu_1 >= ... >= mu_r)` padded by `p` is
//! `{0, .., p-1} ∪ {mu_i + (r - i) + p}`; adding a `d`-hook at `x` replaces
//! `x` by `x + d`, and removing a box replaces some `x` by `x - 1`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition from parts given in any order. Zero parts are
    /// rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("zero part in {parts:?}")));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Self { parts })
    }

    pub fn empty() -> Self {
        Self { parts: Vec::new() }
    }

    /// The one-row partition `(m)`.
    pub fn row(m: usize) -> Self {
        if m == 0 {
            Self::empty()
        } else {
            Self { parts: vec![m] }
        }
    }

    /// The one-column partition `(1^m)`.
    pub fn column(m: usize) -> Self {
        Self { parts: vec![1; m] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of (non-zero) parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of distinct part values, which is also the number of
    /// removable boxes.
    pub fn distinct_parts(&self) -> usize {
        let mut count = 0;
        let mut last = 0;
        for &p in &self.parts {
            if p != last {
                count += 1;
                last = p;
            }
        }
        count
    }

    pub fn conjugate(&self) -> Self {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=width)
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count())
            .collect();
        Self { parts }
    }

    /// `n(lambda) = sum (i-1) lambda_i`.
    pub fn n_statistic(&self) -> usize {
        self.parts.iter().enumerate().map(|(i, &p)| i * p).sum()
    }

    /// Hook lengths of all cells, row by row.
    pub fn hook_lengths(&self) -> Vec<usize> {
        let conj = self.conjugate();
        let mut hooks = Vec::with_capacity(self.size());
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row {
                let arm = row - j - 1;
                let leg = conj.parts[j] - i - 1;
                hooks.push(arm + leg + 1);
            }
        }
        hooks
    }

    /// Whether the Young diagram of `self` contains that of `other`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// All partitions of `m`, in decreasing lexicographic order.
    pub fn all(m: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        fill_partitions(m, m, &mut current, &mut out);
        out
    }

    /// Renders in the increasing convention, e.g. `(1,2)` for `(2,1)`.
    pub fn to_increasing_string(&self) -> String {
        let parts: Vec<String> = self.parts.iter().rev().map(|p| p.to_string()).collect();
        format!("({})", parts.join(","))
    }
}

fn fill_partitions(rest: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition {
            parts: current.clone(),
        });
        return;
    }
    for p in (1..=max.min(rest)).rev() {
        current.push(p);
        fill_partitions(rest - p, p, current, out);
        current.pop();
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Parses comma-separated parts in either order; `""`, `"()"`, `"0"` and
/// `"-"` denote the empty partition.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s
            .trim()
            .trim_start_matches(['(', '['])
            .trim_end_matches([')', ']'])
            .trim();
        if trimmed.is_empty() || trimmed == "0" || trimmed == "-" {
            return Ok(Partition::empty());
        }
        let parts = trimmed
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::InvalidPartition(format!("{s:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BetaSet {
    entries: Vec<usize>,
}

/// The datum behind `mu * x`: the hook of length `d` added at `x`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HookAddition {
    pub x: usize,
    pub d: usize,
    /// Number of beta-set entries strictly between `x` and `x + d`.
    pub leg_length: usize,
}

impl BetaSet {
    /// Validates a strictly increasing sequence.
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        if entries.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidBetaSet(format!(
                "{entries:?} is not strictly increasing"
            )));
        }
        Ok(Self { entries })
    }

    /// Canonical beta-set of `mu` with `pad` extra low entries.
    pub fn of(mu: &Partition, pad: usize) -> Self {
        let r = mu.len();
        let mut entries: Vec<usize> = (0..pad).collect();
        entries.extend(
            mu.parts()
                .iter()
                .enumerate()
                .rev()
                .map(|(i, &p)| p + (r - 1 - i) + pad),
        );
        Self { entries }
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    /// Cardinality `s`.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.entries.binary_search(&x).is_ok()
    }

    pub fn max(&self) -> Option<usize> {
        self.entries.last().copied()
    }

    /// Whether `{0, .., d-1}` is contained in the set.
    pub fn contains_initial(&self, d: usize) -> bool {
        self.entries.len() >= d && (d == 0 || self.entries[d - 1] == d - 1)
    }

    /// `#{y in X | y < x}`.
    pub fn count_below(&self, x: usize) -> usize {
        self.entries.partition_point(|&y| y < x)
    }

    /// `#{y in X | lo < y < hi}`.
    pub fn count_between(&self, lo: usize, hi: usize) -> usize {
        if hi <= lo + 1 {
            return 0;
        }
        self.entries.partition_point(|&y| y < hi) - self.entries.partition_point(|&y| y <= lo)
    }

    /// `X ↦ {0, .., k-1} ∪ (X + k)`.
    pub fn shift(&self, k: usize) -> Self {
        let mut entries: Vec<usize> = (0..k).collect();
        entries.extend(self.entries.iter().map(|&x| x + k));
        Self { entries }
    }

    /// The partition `x_i - (i - 1)` with zeros dropped.
    pub fn partition(&self) -> Partition {
        let parts = self
            .entries
            .iter()
            .enumerate()
            .rev()
            .map(|(i, &x)| x - i)
            .filter(|&p| p > 0)
            .collect();
        Partition { parts }
    }

    /// The positions `x in X` with `x + d ∉ X`. Never empty for a non-empty
    /// set since the maximum always qualifies.
    pub fn addable_hooks(&self, d: usize) -> Vec<usize> {
        assert!(d >= 1, "hook length must be positive");
        self.entries
            .iter()
            .copied()
            .filter(|&x| !self.contains(x + d))
            .collect()
    }

    /// `(X \ {x}) ∪ {x + d}` together with the hook record.
    pub fn add_hook(&self, x: usize, d: usize) -> Result<(BetaSet, HookAddition)> {
        if d == 0 || !self.contains(x) || self.contains(x + d) {
            return Err(Error::NotAddable {
                beta: self.to_string(),
                x,
                d,
            });
        }
        let hook = HookAddition {
            x,
            d,
            leg_length: self.count_between(x, x + d),
        };
        Ok((self.replace(x, x + d), hook))
    }

    /// Replaces `from` by `to`; the caller guarantees `from ∈ X`, `to ∉ X`.
    pub(crate) fn replace(&self, from: usize, to: usize) -> BetaSet {
        let mut entries: Vec<usize> = self
            .entries
            .iter()
            .copied()
            .filter(|&y| y != from)
            .collect();
        let at = entries.partition_point(|&y| y < to);
        entries.insert(at, to);
        BetaSet { entries }
    }

    /// The sets `X^{(j)}` obtained by lowering one entry `x_j` with
    /// `x_j - 1 ∉ X`: one per removable box.
    pub fn box_removals(&self) -> Vec<BetaSet> {
        self.entries
            .iter()
            .copied()
            .filter(|&x| x > 0 && !self.contains(x - 1))
            .map(|x| self.replace(x, x - 1))
            .collect()
    }
}

impl fmt::Display for BetaSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let entries: Vec<String> = self.entries.iter().map(|x| x.to_string()).collect();
        write!(f, "[{}]", entries.join(", "))
    }
}

pub fn beta_set(mu: &Partition, pad: usize) -> BetaSet {
    BetaSet::of(mu, pad)
}

pub fn partition_of(beta: &BetaSet) -> Partition {
    beta.partition()
}

/// Removes `d`-hooks until none remains.
pub fn d_core(lambda: &Partition, d: usize) -> Partition {
    assert!(d >= 1, "hook length must be positive");
    let beta = BetaSet::of(lambda, d);
    // Slide every bead up its runner of the d-abacus.
    let mut runners = vec![0usize; d];
    for &x in beta.entries() {
        runners[x % d] += 1;
    }
    let mut entries: Vec<usize> = runners
        .iter()
        .enumerate()
        .flat_map(|(r, &count)| (0..count).map(move |k| r + k * d))
        .collect();
    entries.sort_unstable();
    BetaSet { entries }.partition()
}

/// Whether `nu` is the `d`-core of `lambda`.
pub fn has_core(lambda: &Partition, nu: &Partition, d: usize) -> bool {
    d_core(lambda, d) == *nu
}

/// Whether `lambda` and `nu` have the same `d`-core, i.e. lie in the same
/// `Phi_d`-block when they have the same size.
pub fn same_block(lambda: &Partition, nu: &Partition, d: usize) -> bool {
    d_core(lambda, d) == d_core(nu, d)
}

/// The partitions obtained by removing one box, each once.
pub fn restrictions(mu: &Partition) -> Result<Vec<Partition>> {
    if mu.is_empty() {
        return Err(Error::EmptyRestriction);
    }
    let beta = BetaSet::of(mu, 0);
    Ok(beta.box_removals().iter().map(BetaSet::partition).collect())
}

/// The `d`-hook additions `(mu * x, hook)` for `x ∈ X'`, in increasing `x`,
/// computed on the beta-set of `mu` padded by `pad`.
pub fn hook_additions(mu: &Partition, d: usize, pad: usize) -> Vec<(Partition, HookAddition)> {
    let beta = BetaSet::of(mu, pad);
    beta.addable_hooks(d)
        .into_iter()
        .map(|x| {
            let (next, hook) = beta.add_hook(x, d).expect("addable position");
            (next.partition(), hook)
        })
        .collect()
}

/// Every `d`-hook addition to `mu` as a set of partitions.
pub fn add_hook_targets(mu: &Partition, d: usize) -> BTreeSet<Partition> {
    hook_additions(mu, d, d)
        .into_iter()
        .map(|(lambda, _)| lambda)
        .collect()
}

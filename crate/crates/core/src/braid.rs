//! Symmetric group `S_{n+1}` as the Coxeter group of type `A_n`, and the
//! positive braid monoid `B^+` with its left-greedy Garside normal form.
//!
//! Permutations are in one-line notation on `0..=n`, composed as functions:
//! `(uv)(j) = u(v(j))`. Right multiplication by `s_i` swaps positions
//! `i-1, i`; left multiplication swaps the values `i-1, i`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Self {
            images: (0..=n).collect(),
        }
    }

    /// The simple reflection `s_i`, `1 <= i <= n`.
    pub fn simple(n: usize, i: usize) -> Self {
        assert!(
            (1..=n).contains(&i),
            "generator s_{i} out of range for rank {n}"
        );
        let mut p = Self::identity(n);
        p.images.swap(i - 1, i);
        p
    }

    /// Image of a word `s_{i_1} ... s_{i_k}` in the Weyl group.
    pub fn from_word(n: usize, word: &[usize]) -> Self {
        let mut p = Self::identity(n);
        for &i in word {
            p.images.swap(i - 1, i);
        }
        p
    }

    /// The longest element `w_0`.
    pub fn longest(n: usize) -> Self {
        Self {
            images: (0..=n).rev().collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.images.len() - 1
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(j, &v)| j == v)
    }

    pub fn compose(&self, other: &Perm) -> Perm {
        Perm {
            images: other.images.iter().map(|&j| self.images[j]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0; self.images.len()];
        for (j, &v) in self.images.iter().enumerate() {
            images[v] = j;
        }
        Perm { images }
    }

    /// Coxeter length: the number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.images;
        (0..w.len())
            .map(|a| (a + 1..w.len()).filter(|&b| w[a] > w[b]).count())
            .sum()
    }

    /// Whether `l(w s_i) < l(w)`.
    pub fn has_right_descent(&self, i: usize) -> bool {
        self.images[i - 1] > self.images[i]
    }

    /// Whether `l(s_i w) < l(w)`.
    pub fn has_left_descent(&self, i: usize) -> bool {
        let pos = |v: usize| {
            self.images
                .iter()
                .position(|&x| x == v)
                .expect("permutation")
        };
        pos(i - 1) > pos(i)
    }

    pub fn right_descents(&self) -> BTreeSet<usize> {
        (1..=self.rank())
            .filter(|&i| self.has_right_descent(i))
            .collect()
    }

    pub fn left_descents(&self) -> BTreeSet<usize> {
        (1..=self.rank())
            .filter(|&i| self.has_left_descent(i))
            .collect()
    }

    pub fn mul_simple_right(&mut self, i: usize) {
        self.images.swap(i - 1, i);
    }

    pub fn mul_simple_left(&mut self, i: usize) {
        for v in self.images.iter_mut() {
            if *v == i - 1 {
                *v = i;
            } else if *v == i {
                *v = i - 1;
            }
        }
    }

    /// A reduced word, peeling right descents from the largest index down.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut word = Vec::with_capacity(w.length());
        while let Some(i) = (1..=w.rank()).rev().find(|&i| w.has_right_descent(i)) {
            w.mul_simple_right(i);
            word.push(i);
        }
        word.reverse();
        word
    }

    /// All of `S_{n+1}` in lexicographic order of one-line notation.
    pub fn all(n: usize) -> Vec<Perm> {
        let mut current: Vec<usize> = (0..=n).collect();
        let mut out = vec![Perm {
            images: current.clone(),
        }];
        while next_permutation(&mut current) {
            out.push(Perm {
                images: current.clone(),
            });
        }
        out
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len())
        .rev()
        .find(|&j| v[j] > v[i - 1])
        .expect("pivot exists");
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let images: Vec<String> = self.images.iter().map(|v| (v + 1).to_string()).collect();
        write!(f, "[{}]", images.join(" "))
    }
}

/// A positive braid word of type `A_n` over the generators `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BraidWord {
    pub n: usize,
    pub word: Vec<usize>,
}

impl BraidWord {
    pub fn new(n: usize, word: Vec<usize>) -> Result<Self> {
        if let Some(&bad) = word.iter().find(|&&i| i == 0 || i > n) {
            return Err(Error::InvalidBraidWord(format!(
                "generator {bad} outside 1..={n}"
            )));
        }
        Ok(Self { n, word })
    }

    pub fn empty(n: usize) -> Self {
        Self {
            n,
            word: Vec::new(),
        }
    }

    /// Parses space-separated generator indices.
    pub fn parse(n: usize, s: &str) -> Result<Self> {
        let word = s
            .split_whitespace()
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|e| Error::InvalidBraidWord(format!("{t:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, word)
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn concat(&self, other: &BraidWord) -> BraidWord {
        assert_eq!(self.n, other.n, "ranks differ");
        let mut word = self.word.clone();
        word.extend_from_slice(&other.word);
        BraidWord { n: self.n, word }
    }

    pub fn pow(&self, k: usize) -> BraidWord {
        BraidWord {
            n: self.n,
            word: self.word.repeat(k),
        }
    }

    /// Image in the Weyl group.
    pub fn weyl_image(&self) -> Perm {
        Perm::from_word(self.n, &self.word)
    }

    pub fn normal_form(&self) -> GarsideNf {
        garside_nf(self)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.word.iter().map(|i| i.to_string()).collect();
        f.write_str(&gens.join(" "))
    }
}

impl FromStr for BraidWord {
    type Err = Error;

    /// Rank is taken as the largest generator occurring.
    fn from_str(s: &str) -> Result<Self> {
        let probe = BraidWord::parse(usize::MAX, s)?;
        let n = probe.word.iter().copied().max().unwrap_or(1);
        BraidWord::new(n, probe.word)
    }
}

/// Left-greedy normal form: a sequence of non-trivial simple elements
/// (permutations) in which every pair `(A, B)` is left-weighted, i.e. every
/// left descent of `B` is a right descent of `A`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GarsideNf {
    pub n: usize,
    pub factors: Vec<Perm>,
}

impl GarsideNf {
    /// Number of leading factors equal to the half-twist `Delta`.
    pub fn infimum(&self) -> usize {
        let delta = Perm::longest(self.n);
        self.factors.iter().take_while(|f| **f == delta).count()
    }

    /// Total length, the sum of factor lengths.
    pub fn length(&self) -> usize {
        self.factors.iter().map(Perm::length).sum()
    }

    pub fn is_left_weighted(&self) -> bool {
        self.factors.iter().all(|f| !f.is_identity())
            && self
                .factors
                .windows(2)
                .all(|w| w[1].left_descents().is_subset(&w[0].right_descents()))
    }
}

impl fmt::Display for GarsideNf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let factors: Vec<String> = self.factors.iter().map(|p| p.to_string()).collect();
        write!(f, "[{}]", factors.join(", "))
    }
}

/// Makes `(a, b)` left-weighted by moving generators from the front of `b`
/// to the end of `a`. Returns whether anything moved.
fn left_weight(a: &mut Perm, b: &mut Perm) -> bool {
    let mut moved = false;
    while let Some(i) = (1..=a.rank()).find(|&i| b.has_left_descent(i) && !a.has_right_descent(i)) {
        a.mul_simple_right(i);
        b.mul_simple_left(i);
        moved = true;
    }
    moved
}

pub fn garside_nf(w: &BraidWord) -> GarsideNf {
    let mut factors: Vec<Perm> = Vec::new();
    for &i in &w.word {
        factors.push(Perm::simple(w.n, i));
        // Push the new letter leftwards; a right-to-left sweep restores
        // left-weightedness after appending one simple factor.
        let mut j = factors.len() - 1;
        while j > 0 {
            let (head, tail) = factors.split_at_mut(j);
            if !left_weight(&mut head[j - 1], &mut tail[0]) {
                break;
            }
            j -= 1;
        }
        while factors.last().is_some_and(Perm::is_identity) {
            factors.pop();
        }
    }
    let nf = GarsideNf { n: w.n, factors };
    debug_assert!(nf.is_left_weighted());
    nf
}

/// `s_1 s_2 ... s_{n - floor(d/2)} s_n s_{n-1} ... s_{floor((d+1)/2)}`.
pub fn v_d_word(n: usize, d: usize) -> Result<BraidWord> {
    check_range(n, d)?;
    let up = n - d / 2;
    let down_to = d.div_ceil(2);
    let mut word: Vec<usize> = (1..=up).collect();
    word.extend((down_to..=n).rev());
    BraidWord::new(n, word)
}

/// `J_d = { s_i | floor((d+1)/2) + 1 <= i <= n - floor(d/2) }`.
pub fn j_d_set(n: usize, d: usize) -> Result<BTreeSet<usize>> {
    check_range(n, d)?;
    Ok((d.div_ceil(2) + 1..=n - d / 2).collect())
}

fn check_range(n: usize, d: usize) -> Result<()> {
    if n == 0 || d == 0 || d > n + 1 {
        return Err(Error::DOutOfRange { n, d, max: n + 1 });
    }
    Ok(())
}

/// Positive lift of `w_0`: `s_1 (s_2 s_1) (s_3 s_2 s_1) ...`.
pub fn half_twist(n: usize) -> BraidWord {
    parabolic_half_twist(n, &(1..=n).collect())
}

/// `pi = w_0^2`, the generator of the centre of the pure braid group.
pub fn pi_word(n: usize) -> BraidWord {
    half_twist(n).pow(2)
}

/// Lift of the longest element of the parabolic subgroup generated by
/// `gens`: the product over its connected runs.
pub fn parabolic_half_twist(n: usize, gens: &BTreeSet<usize>) -> BraidWord {
    let mut word = Vec::new();
    for (start, end) in runs(gens) {
        for top in start..=end {
            word.extend((start..=top).rev());
        }
    }
    BraidWord::new(n, word).expect("generators in range")
}

/// `pi_I = w_{0,I}^2`.
pub fn pi_sub(n: usize, gens: &BTreeSet<usize>) -> BraidWord {
    parabolic_half_twist(n, gens).pow(2)
}

fn runs(gens: &BTreeSet<usize>) -> Vec<(usize, usize)> {
    let mut out: Vec<(usize, usize)> = Vec::new();
    for &g in gens {
        match out.last_mut() {
            Some((_, end)) if *end + 1 == g => *end = g,
            _ => out.push((g, g)),
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PeriodicityReport {
    pub n: usize,
    pub d: usize,
    pub v_d: Vec<usize>,
    pub j_d: Vec<usize>,
    pub word_length: usize,
    /// Coxeter length of the image of `v_d` in `W`.
    pub weyl_length: usize,
    /// `2n + 1 - d`.
    pub expected_length: usize,
    /// `v_d^d pi_{J_d} = pi`.
    pub right_quotient: bool,
    /// `pi_{J_d} v_d^d = pi`.
    pub left_quotient: bool,
    /// The image of `v_d` conjugates `{s_j : j ∈ J_d}` onto itself.
    pub normalises_j: bool,
}

impl PeriodicityReport {
    /// Periodicity, word length `2n+1-d`, reducedness for `d > 1`, and
    /// normalisation of `J_d`.
    pub fn pass(&self) -> bool {
        self.right_quotient
            && self.word_length == self.expected_length
            && (self.d == 1 || self.weyl_length == self.expected_length)
            && self.normalises_j
    }
}

pub fn periodicity_check(n: usize, d: usize) -> Result<PeriodicityReport> {
    let v = v_d_word(n, d)?;
    let j = j_d_set(n, d)?;
    let pi = garside_nf(&pi_word(n));
    let pi_j = pi_sub(n, &j);
    let power = v.pow(d);
    let right_quotient = garside_nf(&power.concat(&pi_j)) == pi;
    let left_quotient = garside_nf(&pi_j.concat(&power)) == pi;
    let image = v.weyl_image();
    Ok(PeriodicityReport {
        n,
        d,
        v_d: v.word.clone(),
        j_d: j.iter().copied().collect(),
        word_length: v.len(),
        weyl_length: image.length(),
        expected_length: 2 * n + 1 - d,
        right_quotient,
        left_quotient,
        normalises_j: normalises(&image, &j),
    })
}

/// Whether `w s_j w^{-1}` is a simple reflection in `gens` for every
/// `j ∈ gens`.
pub fn normalises(w: &Perm, gens: &BTreeSet<usize>) -> bool {
    let n = w.rank();
    let inv = w.inverse();
    gens.iter().all(|&j| {
        let conj = w.compose(&Perm::simple(n, j)).compose(&inv);
        gens.iter().any(|&i| conj == Perm::simple(n, i))
    })
}

/// Minimal length representatives of `W_I \ W / W_J`: the elements with no
/// left descent in `I` and no right descent in `J`, by increasing length.
pub fn min_coset_reps(left: &BTreeSet<usize>, right: &BTreeSet<usize>, n: usize) -> Vec<Perm> {
    let mut reps: Vec<Perm> = Perm::all(n)
        .into_iter()
        .filter(|w| {
            left.iter().all(|&i| !w.has_left_descent(i))
                && right.iter().all(|&j| !w.has_right_descent(j))
        })
        .collect();
    reps.sort_by_key(|w| (w.length(), w.clone()));
    reps
}

/// `s_n s_{n-1} ... s_i` for `1 <= i <= n + 1` (the identity at `n + 1`).
pub fn descending_suffix(n: usize, i: usize) -> Perm {
    let word: Vec<usize> = (i..=n).rev().collect();
    Perm::from_word(n, &word)
}

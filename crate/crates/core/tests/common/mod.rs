#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, HashMap};

use typea_cohomology::braid::BraidWord;
use typea_cohomology::partition::Partition;

/// Cells `(row, col)` of the Young diagram.
pub fn cells(p: &Partition) -> BTreeSet<(usize, usize)> {
    p.parts()
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
        .collect()
}

/// Leg length of `outer / inner` when it is a border strip (connected, no
/// 2x2 square), else `None`.
pub fn border_strip_leg(outer: &Partition, inner: &Partition) -> Option<usize> {
    if !outer.contains(inner) {
        return None;
    }
    let skew: BTreeSet<(usize, usize)> = cells(outer).difference(&cells(inner)).copied().collect();
    let first = *skew.iter().next()?;
    for &(r, c) in &skew {
        if skew.contains(&(r + 1, c))
            && skew.contains(&(r, c + 1))
            && skew.contains(&(r + 1, c + 1))
        {
            return None;
        }
    }
    let mut seen = BTreeSet::from([first]);
    let mut stack = vec![first];
    while let Some((r, c)) = stack.pop() {
        let mut near = vec![(r + 1, c), (r, c + 1)];
        if r > 0 {
            near.push((r - 1, c));
        }
        if c > 0 {
            near.push((r, c - 1));
        }
        for cell in near {
            if skew.contains(&cell) && seen.insert(cell) {
                stack.push(cell);
            }
        }
    }
    if seen.len() != skew.len() {
        return None;
    }
    let rows: BTreeSet<usize> = skew.iter().map(|&(r, _)| r).collect();
    Some(rows.len() - 1)
}

/// All `(lambda, leg)` with `lambda / mu` a border strip of size `d`.
pub fn rim_hook_additions(mu: &Partition, d: usize) -> BTreeSet<(Partition, usize)> {
    Partition::all(mu.size() + d)
        .into_iter()
        .filter_map(|l| border_strip_leg(&l, mu).map(|leg| (l, leg)))
        .collect()
}

/// All `nu` with `lambda / nu` a border strip of size `d`.
pub fn rim_hook_removals(lambda: &Partition, d: usize) -> Vec<Partition> {
    if lambda.size() < d {
        return Vec::new();
    }
    Partition::all(lambda.size() - d)
        .into_iter()
        .filter(|nu| border_strip_leg(lambda, nu).is_some())
        .collect()
}

/// Number of standard Young tableaux, by removing corners.
pub fn syt_count(p: &Partition, memo: &mut HashMap<Vec<usize>, u128>) -> u128 {
    if p.size() <= 1 {
        return 1;
    }
    if let Some(&v) = memo.get(p.parts()) {
        return v;
    }
    let parts = p.parts();
    let mut total = 0;
    for i in 0..parts.len() {
        if i + 1 == parts.len() || parts[i + 1] < parts[i] {
            let mut smaller = parts.to_vec();
            smaller[i] -= 1;
            smaller.retain(|&p| p > 0);
            total += syt_count(&Partition::new(smaller).unwrap(), memo);
        }
    }
    memo.insert(parts.to_vec(), total);
    total
}

/// Canonical beta-set, written independently of the library.
pub fn beta(mu: &Partition, pad: usize) -> Vec<usize> {
    let r = mu.len();
    let mut xs: Vec<usize> = (0..r).map(|i| mu.parts()[i] + (r - 1 - i) + pad).collect();
    xs.extend(0..pad);
    xs.sort_unstable();
    xs
}

pub fn unbeta(xs: &[usize]) -> Partition {
    let parts: Vec<usize> = xs
        .iter()
        .enumerate()
        .map(|(i, &x)| x - i)
        .filter(|&p| p > 0)
        .collect();
    Partition::new(parts).unwrap()
}

pub fn star(xs: &[usize], x: usize, d: usize) -> Vec<usize> {
    let mut out: Vec<usize> = xs.iter().copied().filter(|&y| y != x).collect();
    out.push(x + d);
    out.sort_unstable();
    out
}

/// `(pi, gamma)` of adding the hook at `x`.
pub fn pi_gamma_oracle(xs: &[usize], x: usize, d: usize, n: usize) -> (i64, i64) {
    let below = xs.iter().filter(|&&y| y < x).count() as i64;
    let between = xs.iter().filter(|&&y| x < y && y < x + d).count() as i64;
    let pi = 2 * (n as i64 + x as i64 - below) - between;
    let gamma = n as i64 + 1 + x as i64 - xs.len() as i64;
    (pi, gamma)
}

/// Explicit enumeration of hook chains from `nu` up to size `n + 1`; the
/// resulting multiset of `(lambda, degree, frob)`.
pub fn block_chains(n: usize, d: usize, nu: &Partition) -> BTreeMap<(Partition, i64, i64), u64> {
    let mut out = BTreeMap::new();
    let a = (n + 1 - nu.size()) / d;
    fn go(
        xs: Vec<usize>,
        step: usize,
        a: usize,
        n: usize,
        d: usize,
        acc: (i64, i64),
        out: &mut BTreeMap<(Partition, i64, i64), u64>,
    ) {
        if step == a {
            *out.entry((unbeta(&xs), acc.0, acc.1)).or_insert(0) += 1;
            return;
        }
        let rank = n - (a - 1 - step) * d;
        let xs = beta(&unbeta(&xs), d);
        for &x in xs.iter().filter(|&&x| !xs.contains(&(x + d))) {
            let (p, g) = pi_gamma_oracle(&xs, x, d, rank);
            go(
                star(&xs, x, d),
                step + 1,
                a,
                n,
                d,
                (acc.0 + p, acc.1 + g),
                out,
            );
        }
    }
    go(beta(nu, d), 0, a, n, d, (0, 0), &mut out);
    out
}

/// Braid-equivalence classes of all positive words of length `len` over
/// `s_1..s_n`, by union-find over single relation applications.
pub fn braid_classes(n: usize, len: usize) -> Vec<(Vec<usize>, usize)> {
    let count = n.pow(len as u32);
    let decode = |mut code: usize| -> Vec<usize> {
        let mut w = vec![0; len];
        for slot in w.iter_mut().rev() {
            *slot = code % n + 1;
            code /= n;
        }
        w
    };
    let encode = |w: &[usize]| w.iter().fold(0, |acc, &g| acc * n + (g - 1));
    let mut parent: Vec<usize> = (0..count).collect();
    fn find(parent: &mut [usize], mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    for code in 0..count {
        let w = decode(code);
        for k in 0..len {
            if k + 1 < len && w[k].abs_diff(w[k + 1]) >= 2 {
                let mut v = w.clone();
                v.swap(k, k + 1);
                let (a, b) = (find(&mut parent, code), find(&mut parent, encode(&v)));
                parent[a] = b;
            }
            if k + 2 < len && w[k] == w[k + 2] && w[k].abs_diff(w[k + 1]) == 1 {
                let mut v = w.clone();
                v[k] = w[k + 1];
                v[k + 1] = w[k];
                v[k + 2] = w[k + 1];
                let (a, b) = (find(&mut parent, code), find(&mut parent, encode(&v)));
                parent[a] = b;
            }
        }
    }
    (0..count)
        .map(|code| (decode(code), find(&mut parent, code)))
        .collect()
}

/// Checks that normal forms separate exactly the brute-force classes; returns
/// the number of words examined or a description of the first mismatch.
pub fn garside_matches_rewriting(max_rank: usize, max_len: usize) -> Result<usize, String> {
    let mut words = 0;
    for n in 1..=max_rank {
        for len in 0..=max_len {
            let classes = if len == 0 {
                vec![(Vec::new(), 0)]
            } else {
                braid_classes(n, len)
            };
            let mut nf_of_class = HashMap::new();
            let mut class_of_nf = HashMap::new();
            for (w, class) in classes {
                words += 1;
                let nf = BraidWord::new(n, w.clone()).unwrap().normal_form();
                let key = nf.to_string();
                if let Some(prev) = nf_of_class.insert(class, key.clone()) {
                    if prev != key {
                        return Err(format!(
                            "rank {n}: {w:?} equivalent words with normal forms {prev} and {key}"
                        ));
                    }
                }
                if let Some(prev) = class_of_nf.insert(key.clone(), class) {
                    if prev != class {
                        return Err(format!(
                            "rank {n}: {w:?} inequivalent words share normal form {key}"
                        ));
                    }
                }
            }
        }
    }
    Ok(words)
}

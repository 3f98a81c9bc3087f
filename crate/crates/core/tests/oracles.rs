mod common;

use std::collections::{BTreeMap, BTreeSet, HashMap};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use typea_cohomology::braid::{garside_nf, BraidWord};
use typea_cohomology::cohomology::{block_table, conja_table_padded, CohomologyTable};
use typea_cohomology::degree::{generic_degree, Rational};
use typea_cohomology::partition::{d_core, hook_additions, restrictions, BetaSet, Partition};

#[test]
fn hook_addition_matches_rim_hooks() {
    for m in 0..=10 {
        for mu in Partition::all(m) {
            for d in 1..=6 {
                let oracle = common::rim_hook_additions(&mu, d);
                for pad in [d, d + 3] {
                    let got: BTreeSet<(Partition, usize)> = hook_additions(&mu, d, pad)
                        .into_iter()
                        .map(|(l, h)| (l, h.leg_length))
                        .collect();
                    assert_eq!(got, oracle, "mu = {mu}, d = {d}, pad = {pad}");
                }
            }
        }
    }
}

#[test]
fn core_is_independent_of_removal_order() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut removals: HashMap<(Partition, usize), Vec<Partition>> = HashMap::new();
    for m in 0..=12 {
        for lambda in Partition::all(m) {
            for d in 1..=m.max(1) {
                let core = d_core(&lambda, d);
                for _ in 0..200 {
                    let mut current = lambda.clone();
                    loop {
                        let options = removals
                            .entry((current.clone(), d))
                            .or_insert_with(|| common::rim_hook_removals(&current, d));
                        match options.choose(&mut rng) {
                            Some(next) => current = next.clone(),
                            None => break,
                        }
                    }
                    assert_eq!(current, core, "lambda = {lambda}, d = {d}");
                }
            }
        }
    }
}

#[test]
fn beta_set_shifts_do_not_change_partitions_or_hooks() {
    for m in 0..=8 {
        for mu in Partition::all(m) {
            let base = BetaSet::of(&mu, 0);
            for k in 0..6 {
                assert_eq!(base.shift(k).partition(), mu);
            }
            for d in 1..=4 {
                let a: Vec<_> = hook_additions(&mu, d, d)
                    .into_iter()
                    .map(|(l, h)| (l, h.leg_length))
                    .collect();
                let b: Vec<_> = hook_additions(&mu, d, d + 4)
                    .into_iter()
                    .map(|(l, h)| (l, h.leg_length))
                    .collect();
                assert_eq!(a, b);
            }
        }
    }
}

#[test]
fn restrictions_are_adjoint_to_box_additions() {
    for m in 1..=10 {
        let smaller = Partition::all(m - 1);
        for lambda in Partition::all(m) {
            let got: BTreeSet<Partition> = restrictions(&lambda).unwrap().into_iter().collect();
            let oracle: BTreeSet<Partition> = smaller
                .iter()
                .filter(|nu| lambda.contains(nu))
                .cloned()
                .collect();
            assert_eq!(got, oracle, "lambda = {lambda}");
        }
    }
}

#[test]
fn generic_degree_at_one_counts_tableaux() {
    let mut memo = HashMap::new();
    for m in 1..=10 {
        for lambda in Partition::all(m) {
            let at_one = generic_degree(&lambda).unwrap().eval_at_one().unwrap();
            let count = common::syt_count(&lambda, &mut memo);
            assert_eq!(
                at_one,
                Rational::from_integer(count as i64),
                "lambda = {lambda}"
            );
        }
    }
}

#[test]
fn generic_degree_expands_to_integer_polynomials_with_value_at_one() {
    let mut memo = HashMap::new();
    for m in 1..=7 {
        for lambda in Partition::all(m) {
            let coeffs = generic_degree(&lambda).unwrap().expand().unwrap();
            let sum: i128 = coeffs.iter().sum();
            assert_eq!(sum, common::syt_count(&lambda, &mut memo) as i128);
        }
    }
}

#[test]
fn garside_normal_forms_match_brute_force_rewriting() {
    let words = common::garside_matches_rewriting(3, 7).unwrap();
    assert!(words > 2000);
}

#[test]
fn random_rewrites_preserve_normal_forms() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..300 {
        let n = rng.gen_range(1..=6);
        let len = rng.gen_range(0..=24);
        let word: Vec<usize> = (0..len).map(|_| rng.gen_range(1..=n)).collect();
        let original = BraidWord::new(n, word.clone()).unwrap();
        let mut w = word;
        for _ in 0..60 {
            if w.len() < 2 {
                break;
            }
            let k = rng.gen_range(0..w.len() - 1);
            if w[k].abs_diff(w[k + 1]) >= 2 {
                w.swap(k, k + 1);
            } else if k + 2 < w.len() && w[k] == w[k + 2] && w[k].abs_diff(w[k + 1]) == 1 {
                let (a, b) = (w[k], w[k + 1]);
                w[k] = b;
                w[k + 1] = a;
                w[k + 2] = b;
            }
        }
        let rewritten = BraidWord::new(n, w).unwrap();
        assert_eq!(garside_nf(&original), garside_nf(&rewritten));
        let nf = garside_nf(&original);
        assert!(nf.is_left_weighted());
        let flat: Vec<usize> = nf.factors.iter().flat_map(|f| f.reduced_word()).collect();
        assert_eq!(garside_nf(&BraidWord::new(n, flat).unwrap()), nf);
    }
}

#[test]
fn block_tables_match_explicit_chains() {
    for n in 0..=8 {
        for d in 1..=n + 1 {
            for a in 1..=(n + 1) / d {
                for nu in Partition::all(n + 1 - a * d) {
                    let table = block_table(n, d, &nu).unwrap();
                    let got: BTreeMap<(Partition, i64, i64), u64> = table
                        .entries
                        .to_tuples()
                        .into_iter()
                        .map(|(l, deg, f, m)| ((l, deg, f), m))
                        .collect();
                    assert_eq!(
                        got,
                        common::block_chains(n, d, &nu),
                        "n = {n}, d = {d}, nu = {nu}"
                    );
                }
            }
        }
    }
}

#[test]
fn conja_tables_match_the_direct_formula() {
    for n in 1..=9 {
        for d in 1..=n + 1 {
            for mu in Partition::all(n + 1 - d) {
                for pad in [d, d + 2] {
                    let xs = common::beta(&mu, pad);
                    let mut oracle: Vec<(Partition, i64, i64, u64)> = xs
                        .iter()
                        .copied()
                        .filter(|x| !xs.contains(&(x + d)))
                        .map(|x| {
                            let (p, g) = common::pi_gamma_oracle(&xs, x, d, n);
                            (common::unbeta(&common::star(&xs, x, d)), p, g, 1)
                        })
                        .collect();
                    oracle.sort_by(|a, b| (a.1, a.2, &a.0).cmp(&(b.1, b.2, &b.0)));
                    let table = conja_table_padded(n, d, &mu, pad).unwrap();
                    assert_eq!(
                        table.entries.to_tuples(),
                        oracle,
                        "n = {n}, d = {d}, mu = {mu}"
                    );
                }
            }
        }
    }
}

#[test]
fn json_tables_round_trip() {
    for n in 1..=5 {
        for d in 1..=n + 1 {
            for mu in Partition::all(n + 1 - d) {
                let table = conja_table_padded(n, d, &mu, d).unwrap();
                assert_eq!(CohomologyTable::from_json(&table.to_json()).unwrap(), table);
            }
            let block = block_table(n, d, &d_core(&Partition::row(n + 1), d)).unwrap();
            assert_eq!(CohomologyTable::from_json(&block.to_json()).unwrap(), block);
        }
    }
}

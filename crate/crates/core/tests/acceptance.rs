//! One line per acceptance criterion. Criteria listed in `KNOWN_RED` fail
//! against the stated mathematics; the test asserts that exactly those fail.

mod common;

use std::collections::BTreeSet;
use std::io::Write;
use std::process::Command;
use std::time::{Duration, Instant};

use typea_cohomology::braid::{periodicity_check, v_d_word};
use typea_cohomology::cohomology::{
    block_table, conja_table, conja_table_padded, conjecture1_check, dim_xnd, pi_gamma,
    pi_variety_table, restriction_uniqueness_check, triangle_check, Cancellation, EigenCase,
};
use typea_cohomology::degree::{a_big_a, craven_delta, Rational, ZetaSpec};
use typea_cohomology::partition::{d_core, BetaSet, Partition};

const KNOWN_RED: [usize; 2] = [8, 10];

type Criterion = (usize, &'static str, fn() -> Outcome, Option<u64>);

struct Outcome {
    pass: bool,
    detail: String,
}

fn ok(detail: impl Into<String>) -> Outcome {
    Outcome {
        pass: true,
        detail: detail.into(),
    }
}

fn fail(detail: impl Into<String>) -> Outcome {
    Outcome {
        pass: false,
        detail: detail.into(),
    }
}

fn p(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

/// Every `(n, d, mu, pad)` of the hook-addition range with the canonical pad and three shifts.
fn hook_range() -> Vec<(usize, usize, Partition, usize)> {
    let mut out = Vec::new();
    for n in 1..=12 {
        for d in 2..=n + 1 {
            for mu in Partition::all(n + 1 - d) {
                for pad in [d, d + 1, d + 2, d + 5] {
                    out.push((n, d, mu.clone(), pad));
                }
            }
        }
    }
    out
}

fn criterion_1() -> Outcome {
    let mut cases = 0;
    for (n, d, mu, pad) in hook_range() {
        let xs = common::beta(&mu, pad);
        let s = xs.len() as i64;
        let (a_mu, big_a_mu) = a_big_a(&mu);
        for &x in xs.iter().filter(|&&x| !xs.contains(&(x + d))) {
            cases += 1;
            let lambda = common::unbeta(&common::star(&xs, x, d));
            let below = xs.iter().filter(|&&y| y < x).count() as i64;
            let between = xs.iter().filter(|&&y| x < y && y < x + d).count() as i64;
            let (n_, d_, x_) = (n as i64, d as i64, x as i64);
            let lhs = craven_delta(&lambda, &mu, ZetaSpec::primitive(d));
            let rhs = 2 * (n_ + 1 - d_ - x_ + below) + between;
            if lhs != Rational::from_integer(rhs) {
                return fail(format!(
                    "identity 1 at n={n} d={d} mu={mu} pad={pad} x={x}: {lhs} != {rhs}"
                ));
            }
            let (a, big_a) = a_big_a(&lambda);
            let diff = a + big_a - a_mu - big_a_mu;
            if diff != d_ * (n_ - d_ + s - x_) {
                return fail(format!("identity 2 at n={n} d={d} mu={mu} pad={pad} x={x}"));
            }
        }
    }
    ok(format!("{cases} cases"))
}

fn criterion_2() -> Outcome {
    let mut cases = 0;
    for m in 1..=11 {
        for lambda in Partition::all(m) {
            for d in 1..=m {
                cases += 1;
                let delta = craven_delta(&lambda, &d_core(&lambda, d), ZetaSpec::primitive(d));
                if !delta.is_integer() {
                    return fail(format!("lambda={lambda} d={d}: {delta}"));
                }
            }
        }
    }
    ok(format!("{cases} cases"))
}

fn criterion_3() -> Outcome {
    let mut cases = 0;
    for (n, d, mu, pad) in hook_range() {
        let beta = BetaSet::of(&mu, pad);
        let dim = dim_xnd(n, d).unwrap() as i64;
        let (a_mu, big_a_mu) = a_big_a(&mu);
        for x in beta.addable_hooks(d) {
            cases += 1;
            let (pi, gamma) = pi_gamma(&beta, x, d, n).unwrap();
            let lambda = beta.add_hook(x, d).unwrap().0.partition();
            let delta_c = craven_delta(&lambda, &mu, ZetaSpec::primitive(d));
            let (a, big_a) = a_big_a(&lambda);
            let delta_ab = Rational::new(a + big_a - a_mu - big_a_mu, d as i64);
            if Rational::from_integer(pi) != Rational::from_integer(2 * dim) - delta_c {
                return fail(format!("pi at n={n} d={d} mu={mu} pad={pad} x={x}"));
            }
            if Rational::from_integer(gamma) != Rational::from_integer(dim) - delta_ab {
                return fail(format!("gamma at n={n} d={d} mu={mu} pad={pad} x={x}"));
            }
        }
    }
    ok(format!("{cases} cases"))
}

fn criterion_4() -> Outcome {
    let mut instances = 0;
    for n in 2..=10 {
        for d in 2..=n {
            for mu in Partition::all(n + 1 - d) {
                instances += 1;
                let report = triangle_check(n, d, &mu).unwrap();
                if !report.feasible {
                    return fail(format!("infeasible at n={n} d={d} mu={mu}"));
                }
                let xs = common::beta(&mu, d);
                let exact: BTreeSet<i64> = xs
                    .iter()
                    .filter(|&&x| !xs.contains(&(x + d)))
                    .map(|&x| common::pi_gamma_oracle(&xs, x, d, n).1)
                    .collect();
                for c in &report.components {
                    let is_exact = exact.contains(&c.frob_exp);
                    let good = match c.case {
                        EigenCase::HookAddition => {
                            is_exact
                                && c.connecting
                                    .as_ref()
                                    .is_some_and(|ranks| ranks.iter().all(|&r| r == 0))
                        }
                        EigenCase::Cancelling => {
                            !is_exact
                                && c.middle.iter().all(|&m| m == 0)
                                && c.left.iter().sum::<u64>() == c.right.iter().sum::<u64>()
                        }
                    };
                    if !good {
                        return fail(format!(
                            "n={n} d={d} mu={mu} lambda={} f={}",
                            c.lambda, c.frob_exp
                        ));
                    }
                }
            }
        }
    }
    let worked = triangle_check(2, 2, &p(&[1])).unwrap();
    let expected = vec![
        Cancellation {
            frob_exp: 1,
            lambda: p(&[1, 1]),
            right_degree: 3,
            left_degree: 4,
            multiplicity: 1,
        },
        Cancellation {
            frob_exp: 2,
            lambda: p(&[2]),
            right_degree: 4,
            left_degree: 5,
            multiplicity: 1,
        },
    ];
    if worked.cancellations != expected {
        return fail(format!("worked pattern {:?}", worked.cancellations));
    }
    ok(format!("{instances} instances, worked pattern reproduced"))
}

fn criterion_5() -> Outcome {
    let mut tables = 0;
    for n in 1..=12 {
        for d in 1..=n + 1 {
            for mu in Partition::all(n + 1 - d) {
                let table = conja_table(n, d, &mu).unwrap();
                for (lambda, want) in [
                    (Partition::column(n + 1), 0),
                    (Partition::row(n + 1), (2 * n + 1 - d) as i64),
                ] {
                    let found = table.entries.positions_of(&lambda);
                    if found.is_empty() {
                        continue;
                    }
                    tables += 1;
                    if found.iter().any(|&(_, f)| f != want) {
                        return fail(format!("n={n} d={d} mu={mu} lambda={lambda}: {found:?}"));
                    }
                }
            }
        }
    }
    ok(format!("{tables} endpoint occurrences"))
}

fn criterion_6() -> Outcome {
    let mut entries = 0;
    for n in 1..=8 {
        let nu_g = (n * (n + 1) / 2) as i64;
        let table = pi_variety_table(n).unwrap();
        for (lambda, degree, frob, _) in table.entries.to_tuples() {
            entries += 1;
            let (a, big_a) = a_big_a(&lambda);
            if degree != 4 * nu_g - 2 * big_a || frob != 2 * nu_g - a - big_a {
                return fail(format!("n={n} lambda={lambda} degree={degree} frob={frob}"));
            }
        }
        if table.entries.characters().len() != Partition::all(n + 1).len() {
            return fail(format!("n={n}: missing characters"));
        }
    }
    let one = pi_variety_table(1).unwrap().entries.to_tuples();
    if one != vec![(p(&[1, 1]), 2, 0, 1), (p(&[2]), 4, 2, 1)] {
        return fail(format!("n=1 table {one:?}"));
    }
    ok(format!("{entries} entries, n=1 exact"))
}

fn criterion_7() -> Outcome {
    let mut tables = 0;
    for n in 1..=10 {
        for d in 1..=n + 1 {
            for a in 1..=(n + 1) / d {
                for nu in Partition::all(n + 1 - a * d) {
                    tables += 1;
                    let table = block_table(n, d, &nu).unwrap();
                    for lambda in table.entries.characters() {
                        if table.entries.positions_of(&lambda).len() != 1 {
                            return fail(format!(
                                "chains disagree: n={n} d={d} nu={nu} lambda={lambda}"
                            ));
                        }
                    }
                    let report = conjecture1_check(&table, d).unwrap();
                    if !report.pass {
                        return fail(format!("n={n} d={d} nu={nu}: {:?}", report.witness));
                    }
                }
            }
        }
    }
    ok(format!("{tables} block tables"))
}

fn criterion_8() -> Outcome {
    let mut failures = Vec::new();
    for n in 3..=7 {
        let report = restriction_uniqueness_check(n).unwrap();
        if !report.pass() {
            for e in report.exceptions() {
                let alternatives: Vec<String> = e
                    .solutions
                    .iter()
                    .filter(|s| s.as_slice() != [e.lambda.clone()])
                    .map(|s| {
                        s.iter()
                            .map(|l| l.to_string())
                            .collect::<Vec<_>>()
                            .join("+")
                    })
                    .collect();
                failures.push(format!("n={n}: {} ~ {}", e.lambda, alternatives.join(", ")));
            }
        }
    }
    let two = restriction_uniqueness_check(2).unwrap();
    if !two.pass() {
        failures.push("n=2 exception not reproduced".into());
    }
    if failures.is_empty() {
        ok("unique for 3 <= n <= 7, n=2 pair reproduced")
    } else {
        fail(format!("non-unique: {}", failures.join("; ")))
    }
}

fn criterion_9() -> Outcome {
    let words = match common::garside_matches_rewriting(4, 8) {
        Ok(words) => words,
        Err(e) => return fail(e),
    };
    for n in 1..=8 {
        for d in 1..=n + 1 {
            let report = periodicity_check(n, d).unwrap();
            if !report.pass() {
                return fail(format!("periodicity at n={n} d={d}"));
            }
            if d >= 2 {
                let v = v_d_word(n, d).unwrap();
                let want = 2 * n + 1 - d;
                if v.len() != want || v.weyl_image().length() != want {
                    return fail(format!("length of v_d at n={n} d={d}: {}", v.len()));
                }
            }
        }
    }
    if v_d_word(3, 2).unwrap().word != vec![1, 2, 3, 2, 1] {
        return fail("v_d for (3,2)");
    }
    ok(format!("{words} words, periodicity and lengths for n <= 8"))
}

fn criterion_10() -> Outcome {
    let run = |jobs: &str| {
        Command::new(env!("CARGO_BIN_EXE_typea"))
            .args(["verify", "all", "--max-n", "6", "--jobs", jobs])
            .output()
            .expect("binary runs")
    };
    let one = run("1");
    let four = run("4");
    let identical = one.stdout == four.stdout && one.status.code() == four.status.code();
    let code = one.status.code();
    let detail = format!("exit {code:?}, reports identical: {identical}");
    if identical && code == Some(0) {
        ok(detail)
    } else {
        fail(detail)
    }
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 10] = [
        (1, "hook-addition identities", criterion_1, Some(30)),
        (2, "Craven integrality", criterion_2, Some(10)),
        (3, "degree and exponent dualities", criterion_3, None),
        (4, "restriction triangle", criterion_4, Some(120)),
        (5, "endpoint eigenvalues", criterion_5, None),
        (6, "X(pi) laws", criterion_6, None),
        (7, "block tables", criterion_7, Some(120)),
        (8, "restriction uniqueness", criterion_8, None),
        (9, "braid suite", criterion_9, Some(120)),
        (10, "determinism of verify all", criterion_10, None),
    ];
    let mut failed = BTreeSet::new();
    for (id, name, run, limit) in criteria {
        let start = Instant::now();
        let mut outcome = run();
        let elapsed = start.elapsed();
        if let Some(secs) = limit {
            if elapsed > Duration::from_secs(secs) {
                outcome.pass = false;
                outcome.detail += &format!(", over the {secs} s limit");
            }
        }
        let status = if outcome.pass { "PASS" } else { "FAIL" };
        let _ = writeln!(
            std::io::stderr(),
            "criterion {id:>2} {status} {name}: {} ({:.2} s)",
            outcome.detail,
            elapsed.as_secs_f64()
        );
        if !outcome.pass {
            failed.insert(id);
        }
    }
    let known: BTreeSet<usize> = KNOWN_RED.into_iter().collect();
    assert_eq!(
        failed, known,
        "failing criteria differ from the known red set"
    );
}

#[test]
fn padded_tables_match_canonical() {
    for n in 1..=6 {
        for d in 1..=n + 1 {
            for mu in Partition::all(n + 1 - d) {
                let base = conja_table(n, d, &mu).unwrap();
                assert_eq!(conja_table_padded(n, d, &mu, d + 3).unwrap(), base);
            }
        }
    }
}

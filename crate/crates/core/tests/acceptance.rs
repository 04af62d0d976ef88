//! Acceptance run. One line per criterion; exits nonzero if any fails.

mod common;

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};
use std::time::{Duration, Instant};

use cyset_core::bounds::{a_n, class_bounds, max_distinct_partition_product};
use cyset_core::calculus::{
    left_fraction, omega, omega_recursive, pi, pi_expression, right_fraction, words_equal,
};
use cyset_core::census::{dmax_table, histograms, product_bounds, stats};
use cyset_core::cycle_set::{diagonal_map, pairing_is_bijective};
use cyset_core::garside::{delta, gcd_left, lcm_left, left_divides, right_divides};
use cyset_core::germ::{class_of, conjecture_report, exchange_check, retraction, ExchangeOutcome, DEFAULT_GERM_CAP};
use cyset_core::monomial::naive_product;
use cyset_core::zappa::{sylow_decompose, sylow_recompose, zappa_compose};
use cyset_core::{examples, CycleSet, Germ, MonomialElement, PermTable, Permutation, PiTuple, Validation};
use num_integer::Integer;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Run {
    failed: Vec<String>,
}

impl Run {
    fn report(&mut self, id: &str, name: &str, ok: bool, detail: impl AsRef<str>) {
        let tag = if ok { "PASS" } else { "FAIL" };
        println!("{tag} [{id}] {name}: {}", detail.as_ref());
        if !ok {
            self.failed.push(id.to_string());
        }
    }
}

fn tup(xs: &[usize]) -> PiTuple {
    PiTuple::from_one_based(xs).unwrap()
}

fn el(cp: &[i64], perm: &str) -> MonomialElement {
    MonomialElement::new(cp.to_vec(), Permutation::parse_cycles(cp.len(), perm).unwrap()).unwrap()
}

// ---------------------------------------------------------------- census

fn dmax_criterion(run: &mut Run) -> BTreeMap<u64, u64> {
    let start = Instant::now();
    let small = dmax_table(3, 5, 6).unwrap();
    let t_small = start.elapsed();
    let got: Vec<u64> = small.values().copied().collect();
    run.report(
        "1a",
        "max class for n=3,4,5",
        got == [3, 4, 6] && t_small <= Duration::from_secs(60),
        format!("{got:?} in {:.1}s (expected [3, 4, 6] within 60s)", t_small.as_secs_f64()),
    );

    let start = Instant::now();
    let (labeled, iso) = histograms(6, 6).unwrap();
    let t6 = start.elapsed();
    let d6 = labeled.keys().copied().max().unwrap();
    run.report(
        "1b",
        "max class for n=6",
        d6 == 8 && t6 <= Duration::from_secs(1800),
        format!(
            "{d6} in {:.1}s (expected 8 within 1800s); {} labeled, {} up to isomorphism",
            t6.as_secs_f64(),
            labeled.values().sum::<u64>(),
            iso.values().sum::<u64>()
        ),
    );
    labeled
}

// ---------------------------------------------------------------- bounds

fn a_n_criterion(run: &mut Run) {
    let got: Vec<u128> = (3..=10).map(|n| class_bounds(n).a_n).collect();
    let mismatch: Vec<u32> = (0..=20).filter(|&n| a_n(n) != max_distinct_partition_product(n)).collect();
    run.report(
        "2",
        "a_n closed form",
        got == [3, 4, 6, 8, 12, 15, 24, 30] && mismatch.is_empty(),
        format!("n=3..10 gives {got:?}; disagreements with search for n<=20: {mismatch:?}"),
    );
}

// ---------------------------------------------------------------- golden values

fn golden_criterion(run: &mut Run) {
    let s = examples::ex1();
    let expr = pi_expression(&s, &[0, 1, 2, 3]).unwrap();
    let value = pi(&s, &expr).unwrap();
    let g = gcd_left(&s, &pi(&s, &tup(&[1, 3])).unwrap(), &pi(&s, &tup(&[1, 2])).unwrap()).unwrap();
    let l = lcm_left(&s, &pi(&s, &tup(&[1, 3])).unwrap(), &pi(&s, &tup(&[2, 4])).unwrap()).unwrap();
    let delta1 = delta(&s, 1).unwrap();
    let (g1, g2) = (el(&[3, 0], "(12)"), el(&[4, 0], "id"));
    let ld = left_divides(&g1, &g2).unwrap();
    let rd = right_divides(&g1, &g2).unwrap();
    let ok = expr == tup(&[1, 1, 3, 2])
        && value.cp() == [2, 1, 1, 0]
        && g.cp() == [1, 0, 0, 0]
        && l == delta1
        && l.cp() == [1, 1, 1, 1]
        && ld
        && !rd;
    run.report(
        "3",
        "golden examples",
        ok,
        format!(
            "expression {expr} cp {:?}; gcd cp {:?}; lcm cp {:?} (is delta: {}); left divides {ld}, right divides {rd}",
            value.cp(),
            g.cp(),
            l.cp(),
            l == delta1
        ),
    );
}

fn zappa_criterion(run: &mut Run) {
    let c = zappa_compose(&examples::zappa_left_n5(), &examples::zappa_right_n5()).unwrap();
    let rows: Vec<String> = c.table.rows().iter().map(|r| r.to_string()).collect();
    let expected = ["(124)(35)", "(1532)", "(1254)", "(132)(45)", "(354)"];
    let witness = match c.validation {
        Validation::Invalid(w) => Some(w),
        Validation::Valid => None,
    };
    let ok = rows == expected
        && witness.is_some_and(|w| (w.s, w.t, w.u, w.left, w.right) == (1, 2, 1, 1, 4));
    run.report(
        "4",
        "composition of the size-5 pair",
        ok,
        format!(
            "rows {}; {}",
            rows.join(" "),
            witness.map_or("valid".to_string(), |w| format!("invalid, {w}"))
        ),
    );
}

fn sylow_criterion(run: &mut Run) {
    let s = examples::exdec();
    let f = sylow_decompose(&s).unwrap();
    let factors_ok = f.len() == 2
        && f[0].cycle_set == examples::exdec_factor_2()
        && f[1].cycle_set == examples::exdec_factor_3();
    let back = sylow_recompose(&f).unwrap() == s;

    let c6 = CycleSet::cyclic(6);
    let f6 = sylow_decompose(&c6).unwrap();
    let p = |t: &str| Permutation::parse_cycles(6, t).unwrap();
    let c6_factors = f6.len() == 2
        && f6[0].cycle_set.rows().iter().all(|r| *r == p("(14)(25)(36)"))
        && f6[1].cycle_set.rows().iter().all(|r| *r == p("(135)(246)"));
    let c6_back = sylow_recompose(&f6).unwrap() == c6;
    run.report(
        "5",
        "Sylow round trips",
        factors_ok && back && c6_factors && c6_back,
        format!("size 8: factors {factors_ok}, recomposed {back}; cyclic 6: factors {c6_factors}, recomposed {c6_back}"),
    );
}

// ---------------------------------------------------------------- theorems

fn theorem_violations(s: &CycleSet) -> Vec<String> {
    let mut v = Vec::new();
    let n = s.n();
    if diagonal_map(s).is_err() {
        v.push("T not bijective".into());
    }
    let report = conjecture_report(s);
    let class = &report.class;
    v.extend(class.checks.failures().into_iter().map(String::from));
    if report.n_divides_g_order == Some(false) {
        v.push("indecomposable but n does not divide #G".into());
    }
    let d = class.d;
    let germ = Germ::new(s, None).unwrap();
    let order = germ.generated_order(DEFAULT_GERM_CAP).unwrap() as u128;
    if order != (d as u128).pow(n as u32) {
        v.push(format!("germ order {order} != d^n"));
    }
    if !germ.is_permutation_free(DEFAULT_GERM_CAP).unwrap() {
        v.push("germ not permutation-free".into());
    }
    for k in (1..=d).filter(|k| d.is_multiple_of(*k)) {
        let c = class_of(&retraction(s, k).unwrap()).unwrap();
        if c != d / d.gcd(&k) {
            v.push(format!("retraction {k} has class {c}"));
        }
    }
    if retraction(s, d + 1).unwrap() != *s {
        v.push("S^[d+1] != S".into());
    }
    if !pairing_is_bijective(s) {
        v.push("pairing not bijective".into());
    }
    v
}

fn theorem_criterion(run: &mut Run) {
    let mut checked = 0;
    let mut bad = Vec::new();
    for n in 1..=4 {
        for s in common::labeled(n) {
            checked += 1;
            for e in theorem_violations(&s) {
                bad.push(format!("{s:?}: {e}"));
            }
        }
    }
    let mut five = common::labeled(5);
    let total5 = five.len();
    five.shuffle(&mut ChaCha8Rng::seed_from_u64(5));
    for s in five.iter().take(400) {
        checked += 1;
        for e in theorem_violations(s) {
            bad.push(format!("{s:?}: {e}"));
        }
    }
    run.report(
        "6",
        "theorem suite",
        bad.is_empty(),
        format!(
            "{checked} sets (all of size <=4, 400 of {total5} at size 5), {} violations{}",
            bad.len(),
            bad.first().map_or(String::new(), |b| format!("; first: {b}"))
        ),
    );
}

// ---------------------------------------------------------------- oracles

/// All positive words equal to `w` in the monoid, by rewriting adjacent
/// pairs `x (x*y) -> y (y*x)`.
fn rewrite_class(s: &PermTable, w: &[usize]) -> HashSet<Vec<usize>> {
    let mut seen = HashSet::from([w.to_vec()]);
    let mut queue = VecDeque::from([w.to_vec()]);
    while let Some(u) = queue.pop_front() {
        for i in 0..u.len().saturating_sub(1) {
            let (x, z) = (u[i], u[i + 1]);
            let y = s.psi(x).inverse().apply(z);
            let mut v = u.clone();
            v[i] = y;
            v[i + 1] = s.star(y, x);
            if seen.insert(v.clone()) {
                queue.push_back(v);
            }
        }
    }
    seen
}

fn oracle_criterion(run: &mut Run) {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);

    let mut mult_bad = 0;
    let pairs = 2000;
    for _ in 0..pairs {
        let n = rng.gen_range(1..=8);
        let a = common::random_element(&mut rng, n, 5);
        let b = common::random_element(&mut rng, n, 5);
        if naive_product(&a.naive_matrix(), &b.naive_matrix()) != Some((&a * &b).naive_matrix()) {
            mult_bad += 1;
        }
    }
    run.report(
        "7a",
        "multiplication vs dense matrices",
        mult_bad == 0,
        format!("{pairs} random pairs, n<=8, {mult_bad} mismatches"),
    );

    let small: Vec<CycleSet> = (1..=3).flat_map(common::labeled).collect();
    let mut tuples = 0;
    let mut omega_bad = 0;
    for s in &small {
        for len in 1..=5 {
            for t in common::words(s.n(), len) {
                let t = PiTuple(t);
                tuples += 1;
                if omega(s, &t).unwrap() != omega_recursive(s, &t).unwrap() {
                    omega_bad += 1;
                }
            }
        }
    }
    run.report(
        "7b",
        "recursive vs direct omega",
        omega_bad == 0,
        format!("{tuples} tuples of length <=5 over {} sets, {omega_bad} mismatches", small.len()),
    );

    let mut word_pairs = 0u64;
    let mut words_bad = 0;
    for s in &small {
        let all: Vec<Vec<usize>> = (0..=4).flat_map(|l| common::words(s.n(), l)).collect();
        let mut class_id: HashMap<Vec<usize>, usize> = HashMap::new();
        for w in &all {
            if !class_id.contains_key(w) {
                let id = class_id.len();
                for v in rewrite_class(s, w) {
                    class_id.insert(v, id);
                }
            }
        }
        for a in &all {
            for b in &all {
                word_pairs += 1;
                if words_equal(s, a, b).unwrap() != (class_id[a] == class_id[b]) {
                    words_bad += 1;
                }
            }
        }
    }
    run.report(
        "7c",
        "word problem vs rewriting closure",
        words_bad == 0,
        format!("{word_pairs} word pairs of length <=4, {words_bad} mismatches"),
    );

    let pool = common::pool();
    let trips = 2000;
    let mut frac_bad = 0;
    for _ in 0..trips {
        let s = &pool[rng.gen_range(0..pool.len())];
        let len = rng.gen_range(0..12);
        let g = common::random_group_element(&mut rng, s, len);
        let (f, h) = left_fraction(s, &g).unwrap();
        let left_ok = f.is_positive() && h.is_positive() && &f * &h.inverse() == g;
        let (f, h) = right_fraction(s, &g).unwrap();
        let right_ok = f.is_positive() && h.is_positive() && &f.inverse() * &h == g;
        if !(left_ok && right_ok) {
            frac_bad += 1;
        }
    }
    run.report(
        "7d",
        "fraction round trips",
        frac_bad == 0,
        format!("{trips} random group elements, {frac_bad} failures"),
    );
}

fn exchange_criterion(run: &mut Run) {
    let mut cases = 0u64;
    let mut exchanged = 0u64;
    let mut bad = Vec::new();
    for n in 1..=3 {
        for s in common::labeled(n) {
            let germ = Germ::new(&s, None).unwrap();
            let d = germ.modulus() as usize;
            for len in 0..=d {
                for prefix in common::words(n, len) {
                    let prefix = PiTuple(prefix);
                    for x in 0..n {
                        cases += 1;
                        match exchange_check(&germ, &prefix, x).unwrap() {
                            ExchangeOutcome::Exchanged(_) => exchanged += 1,
                            ExchangeOutcome::Counterexample { prefix, s: x } => {
                                bad.push(format!("{s:?} prefix {prefix} letter {}", x + 1))
                            }
                            _ => {}
                        }
                    }
                }
            }
        }
    }
    run.report(
        "8",
        "exchange lemma",
        bad.is_empty(),
        format!(
            "{cases} prefix/letter cases, {exchanged} exchanges, {} counterexamples{}",
            bad.len(),
            bad.first().map_or(String::new(), |b| format!("; first: {b}"))
        ),
    );
}

fn scale_note(run: &mut Run, labeled6: &BTreeMap<u64, u64>) {
    let mut ok = true;
    let mut parts = Vec::new();
    for n in 3..=5 {
        let r = stats(n, 6).unwrap();
        ok &= r.violations.is_empty() && r.product_bounds.iter().all(|b| b.holds());
        parts.push(format!("n={n}: {} sets, prime-power fraction {:.3}", r.total_count, r.prime_power_fraction));
    }
    let total6: u64 = labeled6.values().sum();
    let pp6: u64 = labeled6
        .iter()
        .filter(|(d, _)| cyset_core::bounds::is_prime_power(**d))
        .map(|(_, c)| c)
        .sum();
    let bounds6 = product_bounds(labeled6);
    ok &= bounds6.iter().all(|b| b.holds());
    parts.push(format!("n=6: {total6} sets, prime-power fraction {:.3}", pp6 as f64 / total6 as f64));
    run.report(
        "9",
        "desk scale",
        ok,
        format!(
            "the n=10 census and large-n bound comparisons are not reproduced; statistics exercised up to n=6 ({})",
            parts.join("; ")
        ),
    );
}

fn main() {
    let mut run = Run { failed: Vec::new() };
    let labeled6 = dmax_criterion(&mut run);
    a_n_criterion(&mut run);
    golden_criterion(&mut run);
    zappa_criterion(&mut run);
    sylow_criterion(&mut run);
    theorem_criterion(&mut run);
    oracle_criterion(&mut run);
    exchange_criterion(&mut run);
    scale_note(&mut run, &labeled6);
    if run.failed.is_empty() {
        println!("acceptance: all criteria passed");
    } else {
        println!("acceptance: failed {}", run.failed.join(", "));
        std::process::exit(1);
    }
}

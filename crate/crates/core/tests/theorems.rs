//! Checks over every labeled cycle set of size at most four.

mod common;

use std::collections::BTreeSet;

use cyset_core::census::{class_histogram, product_bounds, Mode};
use cyset_core::cycle_set::{decompose, diagonal_map, orbits, pairing_is_bijective, perm_group, validate};
use cyset_core::germ::{class_of, dehornoy_class, retraction, DEFAULT_GERM_CAP};
use cyset_core::perm::all_permutations;
use cyset_core::zappa::{germs_commute_check, mixed_equation_check, zappa_compose, CommuteOutcome, MixedOutcome};
use cyset_core::{CycleSet, Germ, PermTable, Permutation};
use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn law_holds(rows: &[Permutation]) -> bool {
    let n = rows.len();
    let star = |a: usize, b: usize| rows[a].apply(b);
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if star(star(a, b), star(a, c)) != star(star(b, a), star(b, c)) {
                    return false;
                }
            }
        }
    }
    let diag: BTreeSet<usize> = (0..n).map(|a| star(a, a)).collect();
    diag.len() == n
}

fn all_tables(n: usize) -> Vec<Vec<Permutation>> {
    let perms = all_permutations(n);
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|rows: Vec<Permutation>| {
                perms.iter().map(move |p| {
                    let mut r = rows.clone();
                    r.push(p.clone());
                    r
                })
            })
            .collect();
    }
    out
}

#[test]
fn search_is_complete_against_brute_force() {
    for n in 1..=4 {
        let brute: Vec<PermTable> = all_tables(n)
            .into_iter()
            .filter(|rows| law_holds(rows))
            .map(|rows| PermTable::new(rows).unwrap())
            .collect();
        let found: Vec<PermTable> = common::labeled(n).into_iter().map(CycleSet::into_table).collect();
        assert_eq!(found, brute, "n={n}");
    }
}

#[test]
fn validator_agrees_with_triple_loop() {
    for n in 1..=3 {
        for rows in all_tables(n) {
            let expect = law_holds(&rows);
            let t = PermTable::new(rows).unwrap();
            assert_eq!(validate(&t).is_valid(), expect, "{t:?}");
        }
    }
}

#[test]
fn class_theorems() {
    for n in 1..=4 {
        for s in common::labeled(n) {
            let r = dehornoy_class(&s);
            assert!(r.checks.failures().is_empty(), "{s:?}: {:?}", r.checks.failures());
            let t = diagonal_map(&s).unwrap();
            assert_eq!(r.d % t.order, 0);
            assert!(pairing_is_bijective(&s));
            let g = perm_group(&s, 1_000_000).unwrap();
            if g.transitive && n > 1 {
                assert_eq!(g.order % n as u64, 0, "{s:?}");
            }
        }
    }
}

#[test]
fn germ_theorems() {
    for n in 1..=4 {
        for s in common::labeled(n) {
            let germ = Germ::new(&s, None).unwrap();
            let d = germ.modulus();
            assert_eq!(germ.generated_order(DEFAULT_GERM_CAP).unwrap() as u128, germ.order().unwrap());
            assert_eq!(germ.order().unwrap(), (d as u128).pow(n as u32));
            assert!(germ.is_permutation_free(DEFAULT_GERM_CAP).unwrap());
            for k in 1..=d {
                let r = retraction(&s, k).unwrap();
                assert_eq!(class_of(&r).unwrap(), d / d.gcd(&k), "{s:?} k={k}");
            }
            assert_eq!(retraction(&s, d + 1).unwrap(), s);
        }
    }
}

#[test]
fn relabeling_invariance() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for n in 2..=4 {
        for s in common::labeled(n) {
            let tau = common::random_perm(&mut rng, n);
            let r = CycleSet::new(s.relabel(&tau)).unwrap();
            assert_eq!(class_of(&r).unwrap(), class_of(&s).unwrap());
            let mapped: BTreeSet<BTreeSet<usize>> = orbits(&s)
                .into_iter()
                .map(|o| o.into_iter().map(|x| tau.apply(x)).collect())
                .collect();
            let direct: BTreeSet<BTreeSet<usize>> =
                orbits(&r).into_iter().map(|o| o.into_iter().collect()).collect();
            assert_eq!(mapped, direct);
        }
    }
}

#[test]
fn components_are_cycle_sets() {
    for n in 1..=4 {
        for s in common::labeled(n) {
            let comps = decompose(&s);
            let covered: usize = comps.iter().map(|c| c.orbit.len()).sum();
            assert_eq!(covered, n);
            for c in comps {
                assert!(validate(&c.cycle_set).is_valid());
            }
        }
    }
}

#[test]
fn composite_class_counts_are_bounded() {
    for n in 1..=4 {
        let hist = class_histogram(n, Mode::Labeled, 6).unwrap();
        assert!(product_bounds(&hist).iter().all(|b| b.holds()), "n={n}");
    }
}

#[test]
fn zappa_checks_agree() {
    let pool = common::pool();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut pairs = 0;
    let mut valid = 0;
    let mut converse_gaps = 0;
    while pairs < 400 {
        let s1 = &pool[rng.gen_range(0..pool.len())];
        let s2 = &pool[rng.gen_range(0..pool.len())];
        if s1.n() != s2.n() {
            continue;
        }
        let (d1, d2) = (class_of(s1).unwrap(), class_of(s2).unwrap());
        if d1.gcd(&d2) != 1 {
            continue;
        }
        pairs += 1;
        let mixed = mixed_equation_check(s1, s2).unwrap() == MixedOutcome::Passed;
        let commute = germs_commute_check(s1, s2).unwrap() == CommuteOutcome::Passed;
        let composed = zappa_compose(s1, s2).unwrap().is_valid();
        assert_eq!(mixed, commute, "{s1:?} {s2:?}");
        // Sufficient only: the candidate can be a cycle set without it.
        assert!(!mixed || composed, "{s1:?} {s2:?}");
        valid += mixed as usize;
        converse_gaps += (composed && !mixed) as usize;
    }
    assert!(valid > 0);
    assert!(converse_gaps > 0);
}

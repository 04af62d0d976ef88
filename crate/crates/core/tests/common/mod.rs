#![allow(dead_code)]

use std::sync::OnceLock;

use cyset_core::census::{enumerate_cycle_sets, Mode};
use cyset_core::{examples, CycleSet, MonomialElement, Permutation};
use rand::seq::SliceRandom;
use rand::Rng;

/// Every labeled cycle set of size 1..=4, plus a few larger examples.
pub fn pool() -> &'static [CycleSet] {
    static POOL: OnceLock<Vec<CycleSet>> = OnceLock::new();
    POOL.get_or_init(|| {
        let mut v: Vec<CycleSet> = (1..=4)
            .flat_map(|n| enumerate_cycle_sets(n, Mode::Labeled, 6).unwrap())
            .collect();
        v.push(examples::exdec());
        v.push(examples::zappa_left_n5());
        v.push(examples::zappa_right_n5());
        v.push(CycleSet::cyclic(6));
        v
    })
}

pub fn labeled(n: usize) -> Vec<CycleSet> {
    enumerate_cycle_sets(n, Mode::Labeled, 6).unwrap()
}

pub fn random_perm(rng: &mut impl Rng, n: usize) -> Permutation {
    let mut v: Vec<usize> = (0..n).collect();
    v.shuffle(rng);
    Permutation::from_images(v).unwrap()
}

pub fn random_element(rng: &mut impl Rng, n: usize, spread: i64) -> MonomialElement {
    let cp = (0..n).map(|_| rng.gen_range(-spread..=spread)).collect();
    MonomialElement::new(cp, random_perm(rng, n)).unwrap()
}

/// Random element of the structure group of `s`, as a word in the
/// generators and their inverses.
pub fn random_group_element(rng: &mut impl Rng, s: &CycleSet, len: usize) -> MonomialElement {
    let mut g = MonomialElement::identity(s.n());
    for _ in 0..len {
        let t = MonomialElement::theta(s, rng.gen_range(0..s.n())).unwrap();
        g = if rng.gen_bool(0.5) { &g * &t } else { &g * &t.inverse() };
    }
    g
}

/// Every word of length exactly `len` over `n` letters.
pub fn words(n: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| {
                (0..n).map(move |x| {
                    let mut w = w.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

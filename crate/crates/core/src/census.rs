//! Exhaustive enumeration of cycle sets of a given size.
//!
//! Tables are filled cell by cell in row-major order, values ascending, so
//! the output order is lexicographic on the concatenated one-line rows.
//! After each assignment every instance of the cycle-set law that reads the
//! new cell is re-checked. When one side of an instance is known and the
//! other side's outer lookup cell is still empty, the value forced into that
//! cell must still be free in its row. Diagonal values must be distinct.
//!
//! The search is split after the first row and the branches run on the
//! rayon pool; results are merged back in branch order.

use std::collections::{BTreeMap, BTreeSet};
use std::fs;
use std::io::{BufWriter, Write};
use std::path::Path;

use num_integer::Integer;
use rayon::prelude::*;

use crate::bounds::{factorize, is_prime_power};
use crate::cycle_set::{CycleSet, PermTable};
use crate::error::{Error, Result};
use crate::format::{parse_census, write_census_block, CensusFooter};
use crate::germ::conjecture_report;
use crate::perm::{all_permutations, Permutation};

pub const DEFAULT_CENSUS_CAP: usize = 6;
/// Hard limit of the byte-packed search.
pub const MAX_CENSUS_N: usize = 16;

const UNSET: u8 = u8::MAX;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    Labeled,
    /// One representative per isomorphism class: the table that is
    /// lexicographically least among all its relabelings.
    UpToIso,
}

#[derive(Clone)]
struct Search {
    n: usize,
    m: Vec<u8>,
    /// `inv[r*n + v]` is the column holding `v` in row `r`.
    inv: Vec<u8>,
    diag_used: u32,
}

impl Search {
    fn new(n: usize) -> Self {
        Search {
            n,
            m: vec![UNSET; n * n],
            inv: vec![UNSET; n * n],
            diag_used: 0,
        }
    }

    #[inline]
    fn get(&self, r: usize, c: usize) -> u8 {
        self.m[r * self.n + c]
    }

    /// Instance `(a, b, c)` of the law; `false` only on a contradiction.
    #[inline]
    fn instance_ok(&self, a: usize, b: usize, c: usize) -> bool {
        if a == b {
            return true;
        }
        let n = self.n;
        let (p, q, r, s) = (self.get(a, b), self.get(a, c), self.get(b, a), self.get(b, c));
        if p == UNSET || q == UNSET || r == UNSET || s == UNSET {
            return true;
        }
        let (p, q, r, s) = (p as usize, q as usize, r as usize, s as usize);
        let left = self.get(p, q);
        let right = self.get(r, s);
        match (left != UNSET, right != UNSET) {
            (true, true) => left == right,
            (true, false) => self.inv[r * n + left as usize] == UNSET,
            (false, true) => self.inv[p * n + right as usize] == UNSET,
            (false, false) => true,
        }
    }

    /// Re-checks every instance reading cell `(x, y)`.
    fn consistent_at(&self, x: usize, y: usize) -> bool {
        let n = self.n;
        for k in 0..n {
            if !(self.instance_ok(x, y, k)
                && self.instance_ok(x, k, y)
                && self.instance_ok(y, x, k)
                && self.instance_ok(k, x, y))
            {
                return false;
            }
            let (b, c) = (self.inv[k * n + x], self.inv[k * n + y]);
            if b != UNSET && c != UNSET && !self.instance_ok(k, b as usize, c as usize) {
                return false;
            }
            let (a, c) = (self.inv[k * n + x], self.inv[k * n + y]);
            if a != UNSET && c != UNSET && !self.instance_ok(a as usize, k, c as usize) {
                return false;
            }
        }
        true
    }

    fn assign(&mut self, x: usize, y: usize, v: usize) {
        let n = self.n;
        self.m[x * n + y] = v as u8;
        self.inv[x * n + v] = y as u8;
        if x == y {
            self.diag_used |= 1 << v;
        }
    }

    fn unassign(&mut self, x: usize, y: usize, v: usize) {
        let n = self.n;
        self.m[x * n + y] = UNSET;
        self.inv[x * n + v] = UNSET;
        if x == y {
            self.diag_used &= !(1 << v);
        }
    }

    fn candidates(&self, x: usize, y: usize) -> impl Iterator<Item = usize> + '_ {
        let n = self.n;
        (0..n).filter(move |&v| {
            self.inv[x * n + v] == UNSET && (x != y || self.diag_used & (1 << v) == 0)
        })
    }

    /// Depth-first fill from cell `k` up to (not including) cell `stop`.
    /// `row_done` is consulted whenever a row is completed.
    fn dfs(
        &mut self,
        k: usize,
        stop: usize,
        row_done: &dyn Fn(&Search, usize) -> bool,
        out: &mut dyn FnMut(&Search),
    ) {
        if k == stop {
            out(self);
            return;
        }
        let (x, y) = (k / self.n, k % self.n);
        let vals: Vec<usize> = self.candidates(x, y).collect();
        for v in vals {
            self.assign(x, y, v);
            if self.consistent_at(x, y) && (y + 1 < self.n || row_done(self, x)) {
                self.dfs(k + 1, stop, row_done, out);
            }
            self.unassign(x, y, v);
        }
    }
}

/// Relabelings used by the canonical-form test.
struct Relabelings {
    n: usize,
    /// Non-identity `(τ, τ⁻¹)` pairs.
    perms: Vec<(Vec<u8>, Vec<u8>)>,
    /// `to_front[a]`: the `τ` with `τ(a) = 0`, as `(τ, τ⁻¹)` pairs.
    to_front: Vec<Vec<(Vec<u8>, Vec<u8>)>>,
}

impl Relabelings {
    fn new(n: usize) -> Self {
        let pairs: Vec<(Vec<u8>, Vec<u8>)> = all_permutations(n)
            .into_iter()
            .map(|p| {
                let inv = p.inverse();
                (
                    p.images().iter().map(|&x| x as u8).collect(),
                    inv.images().iter().map(|&x| x as u8).collect(),
                )
            })
            .collect();
        let to_front = (0..n)
            .map(|a| pairs.iter().filter(|(t, _)| t[a] == 0).cloned().collect())
            .collect();
        let perms = pairs
            .into_iter()
            .filter(|(t, _)| t.iter().enumerate().any(|(i, &x)| i != x as usize))
            .collect();
        Relabelings { n, perms, to_front }
    }

    /// Row `a` is complete: no relabeling moving `a` to the front may
    /// produce a smaller first row than the current one.
    fn row_admissible(&self, m: &[u8], a: usize) -> bool {
        let n = self.n;
        let row = &m[a * n..a * n + n];
        let first = &m[..n];
        'perm: for (tau, tau_inv) in &self.to_front[a] {
            for b in 0..n {
                let v = tau[row[tau_inv[b] as usize] as usize];
                if v < first[b] {
                    return false;
                }
                if v > first[b] {
                    continue 'perm;
                }
            }
        }
        true
    }

    /// If `m` is least among its relabelings
    /// `m'[a][b] = τ(m[τ⁻¹a][τ⁻¹b])`, the size of its automorphism group.
    fn canonical_automorphisms(&self, m: &[u8]) -> Option<u64> {
        let n = self.n;
        let mut automorphisms = 1;
        'perm: for (tau, tau_inv) in &self.perms {
            for a in 0..n {
                let ra = tau_inv[a] as usize * n;
                for b in 0..n {
                    let v = tau[m[ra + tau_inv[b] as usize] as usize];
                    let w = m[a * n + b];
                    if v < w {
                        return None;
                    }
                    if v > w {
                        continue 'perm;
                    }
                }
            }
            automorphisms += 1;
        }
        Some(automorphisms)
    }
}

fn check_cap(n: usize, cap: usize) -> Result<()> {
    if n == 0 || n > cap.min(MAX_CENSUS_N) {
        return Err(Error::CapExceeded {
            what: format!("census size n={n}"),
            cap: cap.min(MAX_CENSUS_N) as u64,
        });
    }
    Ok(())
}

/// Parallel fold over all tables of size `n` in the given mode. Each
/// first-row branch is folded separately from `init()` and the branch
/// accumulators are merged left to right. `f` also receives the number of
/// labeled tables the visited one stands for: 1 in labeled mode, the size
/// of its isomorphism class otherwise.
pub fn fold<A, I, F, M>(n: usize, mode: Mode, cap: usize, init: I, f: F, merge: M) -> Result<A>
where
    A: Send,
    I: Fn() -> A + Sync,
    F: Fn(&mut A, &[u8], u64) + Sync,
    M: Fn(A, A) -> A + Sync,
{
    check_cap(n, cap)?;
    let relabel = (mode == Mode::UpToIso).then(|| Relabelings::new(n));
    let row_done = |s: &Search, a: usize| relabel.as_ref().is_none_or(|r| r.row_admissible(&s.m, a));
    let n_fact: u64 = (1..=n as u64).product();
    let mut roots = Vec::new();
    Search::new(n).dfs(0, n, &row_done, &mut |s| roots.push(s.clone()));
    let parts: Vec<A> = roots
        .into_par_iter()
        .map(|mut root| {
            let mut acc = init();
            root.dfs(n, n * n, &row_done, &mut |s| match &relabel {
                None => f(&mut acc, &s.m, 1),
                Some(r) => {
                    if let Some(aut) = r.canonical_automorphisms(&s.m) {
                        f(&mut acc, &s.m, n_fact / aut);
                    }
                }
            });
            acc
        })
        .collect();
    Ok(parts.into_iter().fold(init(), merge))
}

fn raw_to_table(n: usize, m: &[u8]) -> PermTable {
    let rows = m
        .chunks(n)
        .map(|r| Permutation::from_images(r.iter().map(|&x| x as usize).collect()).unwrap())
        .collect();
    PermTable::new(rows).unwrap()
}

/// Visits every table in deterministic order; returns the count.
pub fn enumerate(n: usize, mode: Mode, cap: usize, mut visitor: impl FnMut(&PermTable)) -> Result<u64> {
    let raws = fold(
        n,
        mode,
        cap,
        Vec::new,
        |acc: &mut Vec<Vec<u8>>, m, _| acc.push(m.to_vec()),
        |mut a, b| {
            a.extend(b);
            a
        },
    )?;
    for m in &raws {
        visitor(&raw_to_table(n, m));
    }
    Ok(raws.len() as u64)
}

pub fn enumerate_tables(n: usize, mode: Mode, cap: usize) -> Result<Vec<PermTable>> {
    let mut out = Vec::new();
    enumerate(n, mode, cap, |t| out.push(t.clone()))?;
    Ok(out)
}

pub fn enumerate_cycle_sets(n: usize, mode: Mode, cap: usize) -> Result<Vec<CycleSet>> {
    enumerate_tables(n, mode, cap)?
        .into_iter()
        .map(CycleSet::new)
        .collect()
}

/// Class of a byte-packed cycle set.
pub fn raw_class(n: usize, m: &[u8]) -> u64 {
    let mut d = 1u64;
    let mut p = [0u8; MAX_CENSUS_N];
    for i in 0..n {
        for (x, slot) in p.iter_mut().enumerate().take(n) {
            *slot = x as u8;
        }
        let mut s = i;
        let mut k = 0u64;
        loop {
            let row = &m[s * n..s * n + n];
            for x in p.iter_mut().take(n) {
                *x = row[*x as usize];
            }
            s = m[s * n + s] as usize;
            k += 1;
            if p.iter().take(n).enumerate().all(|(a, &b)| a == b as usize) {
                break;
            }
        }
        d = d.lcm(&k);
    }
    d
}

/// Class histogram of all tables of size `n`.
pub fn class_histogram(n: usize, mode: Mode, cap: usize) -> Result<BTreeMap<u64, u64>> {
    fold(
        n,
        mode,
        cap,
        BTreeMap::new,
        |h: &mut BTreeMap<u64, u64>, m, _| *h.entry(raw_class(n, m)).or_default() += 1,
        |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_default() += v;
            }
            a
        },
    )
}

/// Labeled and up-to-isomorphism class histograms from a single
/// isomorphism-class search, counting each class by orbit size.
pub fn histograms(n: usize, cap: usize) -> Result<(BTreeMap<u64, u64>, BTreeMap<u64, u64>)> {
    fold(
        n,
        Mode::UpToIso,
        cap,
        || (BTreeMap::new(), BTreeMap::new()),
        |(lab, iso): &mut (BTreeMap<u64, u64>, BTreeMap<u64, u64>), m, w| {
            let d = raw_class(n, m);
            *lab.entry(d).or_default() += w;
            *iso.entry(d).or_default() += 1;
        },
        |(mut la, mut ia), (lb, ib)| {
            for (k, v) in lb {
                *la.entry(k).or_default() += v;
            }
            for (k, v) in ib {
                *ia.entry(k).or_default() += v;
            }
            (la, ia)
        },
    )
}

/// Maximal class for each size in `from..=to`.
pub fn dmax_table(from: usize, to: usize, cap: usize) -> Result<BTreeMap<usize, u64>> {
    (from..=to)
        .map(|n| {
            let d = fold(n, Mode::UpToIso, cap, || 1u64, |d, m, _| *d = (*d).max(raw_class(n, m)), u64::max)?;
            Ok((n, d))
        })
        .collect()
}

/// `N(n,d)` against `∏ N(n, p^a)` for one composite `d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductBound {
    pub d: u64,
    pub count: u64,
    pub product: u128,
}

impl ProductBound {
    pub fn holds(&self) -> bool {
        self.count as u128 <= self.product
    }
}

/// Number of tables whose class divides `d`.
fn count_dividing(hist: &BTreeMap<u64, u64>, d: u64) -> u64 {
    hist.iter().filter(|(c, _)| d.is_multiple_of(**c)).map(|(_, k)| k).sum()
}

pub fn product_bounds(hist: &BTreeMap<u64, u64>) -> Vec<ProductBound> {
    let mut ds = BTreeSet::new();
    for &c in hist.keys() {
        for d in 2..=c {
            if c % d == 0 && !is_prime_power(d) {
                ds.insert(d);
            }
        }
    }
    ds.into_iter()
        .map(|d| ProductBound {
            d,
            count: count_dividing(hist, d),
            product: factorize(d)
                .into_iter()
                .map(|(p, a)| count_dividing(hist, p.pow(a)) as u128)
                .product(),
        })
        .collect()
}

fn prime_power_fraction(hist: &BTreeMap<u64, u64>) -> f64 {
    let total: u64 = hist.values().sum();
    if total == 0 {
        return 0.0;
    }
    let pp: u64 = hist
        .iter()
        .filter(|(c, _)| is_prime_power(**c))
        .map(|(_, k)| k)
        .sum();
    pp as f64 / total as f64
}

#[derive(Clone, Debug, PartialEq)]
pub struct CensusRecord {
    pub n: usize,
    pub total_count: u64,
    pub iso_count: u64,
    pub dmax: u64,
    /// Over labeled tables.
    pub class_histogram: BTreeMap<u64, u64>,
    pub iso_histogram: BTreeMap<u64, u64>,
    pub prime_power_fraction: f64,
    pub iso_prime_power_fraction: f64,
    pub product_bounds: Vec<ProductBound>,
    pub iso_product_bounds: Vec<ProductBound>,
    /// One line per failed check, prefixed by the table in one-line form.
    pub violations: Vec<String>,
}

/// Counts, class statistics and a check sweep over one representative per
/// isomorphism class (every check is invariant under relabeling).
pub fn stats(n: usize, cap: usize) -> Result<CensusRecord> {
    let (class_histogram, iso_histogram) = histograms(n, cap)?;
    let reps = enumerate_tables(n, Mode::UpToIso, cap)?;
    let violations: Vec<String> = reps
        .par_iter()
        .flat_map_iter(|t| {
            let label = one_line_label(t);
            match CycleSet::new(t.clone()) {
                Err(e) => vec![format!("{label}: {e}")],
                Ok(s) => conjecture_report(&s)
                    .violations
                    .into_iter()
                    .map(|v| format!("{label}: {v}"))
                    .collect(),
            }
        })
        .collect();
    let violations = violations
        .into_iter()
        .chain(product_bounds(&class_histogram).iter().filter(|b| !b.holds()).map(|b| {
            format!("N({n},{}) = {} exceeds {}", b.d, b.count, b.product)
        }))
        .collect();
    Ok(CensusRecord {
        n,
        total_count: class_histogram.values().sum(),
        iso_count: reps.len() as u64,
        dmax: class_histogram.keys().copied().max().unwrap_or(1),
        prime_power_fraction: prime_power_fraction(&class_histogram),
        iso_prime_power_fraction: prime_power_fraction(&iso_histogram),
        product_bounds: product_bounds(&class_histogram),
        iso_product_bounds: product_bounds(&iso_histogram),
        class_histogram,
        iso_histogram,
        violations,
    })
}

fn one_line_label(t: &PermTable) -> String {
    t.rows()
        .iter()
        .map(|r| r.one_line().iter().map(|x| x.to_string()).collect::<Vec<_>>().join(""))
        .collect::<Vec<_>>()
        .join("|")
}

/// Writes the census of size `n` to `path`, or, if the file already exists,
/// checks it against a fresh enumeration without touching it.
pub fn run_to_file(path: &Path, n: usize, mode: Mode, cap: usize) -> Result<CensusFooter> {
    let tables = enumerate_tables(n, mode, cap)?;
    let mut footer = CensusFooter {
        total: tables.len() as u64,
        ..Default::default()
    };
    for t in &tables {
        let m: Vec<u8> = t.rows().iter().flat_map(|r| r.images().iter().map(|&x| x as u8)).collect();
        let d = raw_class(n, &m);
        footer.dmax = footer.dmax.max(d);
        *footer.histogram.entry(d).or_default() += 1;
    }
    if path.exists() {
        let existing = parse_census(&fs::read_to_string(path)?)?;
        if existing.footer != footer {
            return Err(Error::CensusMismatch(format!(
                "footer in {} differs from enumeration",
                path.display()
            )));
        }
        if existing.tables != tables {
            let k = existing
                .tables
                .iter()
                .zip(&tables)
                .position(|(a, b)| a != b)
                .unwrap_or(existing.tables.len().min(tables.len()));
            return Err(Error::CensusMismatch(format!(
                "table {} in {} differs from enumeration",
                k + 1,
                path.display()
            )));
        }
        return Ok(footer);
    }
    let mut w = BufWriter::new(fs::File::create(path)?);
    for t in &tables {
        w.write_all(write_census_block(t).as_bytes())?;
    }
    w.write_all(footer.render().as_bytes())?;
    w.flush()?;
    Ok(footer)
}

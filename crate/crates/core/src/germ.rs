//! Dehornoy class and the germ `Ḡ = G/G^{[d]}`.
//!
//! In the monomial picture the germ is the specialization `q ↦ ζ_d`, so an
//! element is a residue vector mod `d` together with a permutation. Closure
//! enumeration packs elements into fixed-width keys.

use std::collections::HashSet;
use std::fmt;

use num_integer::Integer;

use crate::bounds;
use crate::calculus::{pi, PiTuple};
use crate::cycle_set::{
    decompose, diagonal_map, perm_group, CycleSet, PermTable, DEFAULT_ELEMENT_CAP,
};
use crate::error::{Error, Result};
use crate::garside::cp_to_element;
use crate::monomial::MonomialElement;
use crate::perm::Permutation;

pub const DEFAULT_GERM_CAP: u64 = 10_000_000;

/// Iteration guard for class computations on arbitrary tables.
const CLASS_ITERATION_CAP: u64 = 1 << 32;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GermElement {
    cp: Vec<u64>,
    perm: Permutation,
}

impl GermElement {
    pub fn cp(&self) -> &[u64] {
        &self.cp
    }

    pub fn perm(&self) -> &Permutation {
        &self.perm
    }

    pub fn is_identity(&self) -> bool {
        self.perm.is_identity() && self.cp.iter().all(|&c| c == 0)
    }
}

impl fmt::Display for GermElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cp: Vec<String> = self.cp.iter().map(|c| c.to_string()).collect();
        write!(f, "cp=({}) perm={}", cp.join(","), self.perm)
    }
}

impl fmt::Debug for GermElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

/// Smallest `k ≥ 1` with `ψ(s_i^{[k]}) = id`.
pub fn generator_class(table: &PermTable, i: usize) -> Result<u64> {
    table.check_index(i)?;
    let n = table.n();
    let mut p: Vec<usize> = (0..n).collect();
    let mut s = i;
    let mut k = 0u64;
    loop {
        let row = table.psi(s).images();
        for x in p.iter_mut() {
            *x = row[*x];
        }
        s = table.star(s, s);
        k += 1;
        if p.iter().enumerate().all(|(a, &b)| a == b) {
            return Ok(k);
        }
        if k >= CLASS_ITERATION_CAP {
            return Err(Error::CapExceeded {
                what: format!("class iteration for generator {}", i + 1),
                cap: CLASS_ITERATION_CAP,
            });
        }
    }
}

/// Dehornoy class: lcm of the generator classes.
pub fn class_of(table: &PermTable) -> Result<u64> {
    (0..table.n()).try_fold(1u64, |d, i| Ok(d.lcm(&generator_class(table, i)?)))
}

/// `ψ(s_i^{[k]})`, reduced using the period of the generator.
pub fn bracket_perm(table: &PermTable, i: usize, k: u64) -> Result<Permutation> {
    let period = generator_class(table, i)?;
    let mut p = Permutation::identity(table.n());
    let mut s = i;
    for _ in 0..k % period {
        p = table.psi(s).compose(&p);
        s = table.star(s, s);
    }
    Ok(p)
}

/// The retraction `S^{[k]}`: same points, `ψ_k(s_i) = ψ(s_i^{[k]})`.
pub fn retraction(s: &CycleSet, k: u64) -> Result<CycleSet> {
    let rows = (0..s.n())
        .map(|i| bracket_perm(s, i, k))
        .collect::<Result<Vec<_>>>()?;
    CycleSet::new(PermTable::new(rows)?)
}

/// `l_d(k) = k` for `k ≤ d/2` and `k - d` otherwise; returns `Σ |l_d(c_i)|`.
pub fn germ_length(c: &[u64], d: u64) -> u64 {
    c.iter()
        .map(|&k| {
            let k = k % d.max(1);
            if 2 * k <= d {
                k
            } else {
                d - k
            }
        })
        .sum()
}

/// Arithmetic in the germ of a table with a fixed modulus.
#[derive(Clone, Debug)]
pub struct Germ {
    table: PermTable,
    modulus: u64,
}

type Key = (u128, u64);

impl Germ {
    /// Germ of a cycle set. `modulus` defaults to the class and must be a
    /// positive multiple of it.
    pub fn new(s: &CycleSet, modulus: Option<u64>) -> Result<Self> {
        let d = class_of(s)?;
        let m = modulus.unwrap_or(d);
        if m == 0 || !m.is_multiple_of(d) {
            return Err(Error::InvalidModulus {
                modulus: m,
                class: d,
            });
        }
        Ok(Germ {
            table: s.table().clone(),
            modulus: m,
        })
    }

    /// Germ arithmetic on an arbitrary table, with no validation. The result
    /// is the group generated by the reduced generator images.
    pub fn from_table(table: PermTable, modulus: u64) -> Self {
        assert!(modulus >= 1, "modulus must be positive");
        Germ { table, modulus }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn n(&self) -> usize {
        self.table.n()
    }

    pub fn table(&self) -> &PermTable {
        &self.table
    }

    /// `d^n`, if it fits.
    pub fn order(&self) -> Option<u128> {
        (self.modulus as u128).checked_pow(self.n() as u32)
    }

    pub fn identity(&self) -> GermElement {
        GermElement {
            cp: vec![0; self.n()],
            perm: Permutation::identity(self.n()),
        }
    }

    /// Residues are reduced mod `d`.
    pub fn make_element(&self, cp: &[i64], perm: Permutation) -> Result<GermElement> {
        if cp.len() != self.n() || perm.len() != self.n() {
            return Err(Error::DimensionMismatch {
                expected: self.n(),
                found: if cp.len() != self.n() { cp.len() } else { perm.len() },
            });
        }
        let d = self.modulus as i64;
        Ok(GermElement {
            cp: cp.iter().map(|&c| c.rem_euclid(d) as u64).collect(),
            perm,
        })
    }

    pub fn project(&self, g: &MonomialElement) -> GermElement {
        self.make_element(g.cp(), g.perm().clone())
            .expect("element size matches the table")
    }

    pub fn generator(&self, i: usize) -> Result<GermElement> {
        Ok(self.project(&MonomialElement::theta(&self.table, i)?))
    }

    pub fn generators(&self) -> Vec<GermElement> {
        (0..self.n()).map(|i| self.generator(i).unwrap()).collect()
    }

    pub fn multiply(&self, a: &GermElement, b: &GermElement) -> GermElement {
        let d = self.modulus;
        GermElement {
            cp: (0..self.n())
                .map(|k| (a.cp[k] + b.cp[a.perm.apply(k)]) % d)
                .collect(),
            perm: b.perm.compose(&a.perm),
        }
    }

    /// `Π̄` of a tuple.
    pub fn pi(&self, tuple: &PiTuple) -> Result<GermElement> {
        Ok(self.project(&pi(&self.table, tuple)?))
    }

    /// The monoid element with the same residues, taken in `0..d`.
    pub fn lift(&self, g: &GermElement) -> Result<MonomialElement> {
        let c: Vec<i64> = g.cp.iter().map(|&x| x as i64).collect();
        cp_to_element(&self.table, &c)
    }

    fn residue_bits(&self) -> u32 {
        u64::BITS - (self.modulus.max(2) - 1).leading_zeros()
    }

    fn check_packable(&self) -> Result<()> {
        let n = self.n();
        if n > 16 || n as u32 * self.residue_bits() > 128 {
            return Err(Error::CapExceeded {
                what: format!("packed germ keys for n={n}, modulus {}", self.modulus),
                cap: 16,
            });
        }
        Ok(())
    }

    fn encode(&self, cp: &[u64], perm: &[usize]) -> Key {
        let b = self.residue_bits();
        let mut c = 0u128;
        for &x in cp.iter().rev() {
            c = (c << b) | x as u128;
        }
        let mut p = 0u64;
        for &x in perm.iter().rev() {
            p = (p << 4) | x as u64;
        }
        (c, p)
    }

    fn decode(&self, key: Key, cp: &mut [u64], perm: &mut [usize]) {
        let b = self.residue_bits();
        let mask = (1u128 << b) - 1;
        let (mut c, mut p) = key;
        for x in cp.iter_mut() {
            *x = (c & mask) as u64;
            c >>= b;
        }
        for x in perm.iter_mut() {
            *x = (p & 15) as usize;
            p >>= 4;
        }
    }

    /// Breadth-first closure of `gens` under right multiplication, calling
    /// `visit` on each new key. Returns the closure size.
    fn bfs(&self, gens: &[GermElement], cap: u64, mut visit: impl FnMut(Key)) -> Result<u64> {
        self.check_packable()?;
        let n = self.n();
        let d = self.modulus;
        let gens: Vec<(Vec<u64>, Vec<usize>)> = gens
            .iter()
            .map(|g| (g.cp.clone(), g.perm.images().to_vec()))
            .collect();
        let id = self.identity();
        let start = self.encode(&id.cp, id.perm.images());
        let mut seen: HashSet<Key> = HashSet::new();
        let mut queue = vec![start];
        seen.insert(start);
        visit(start);
        let (mut cp, mut perm) = (vec![0u64; n], vec![0usize; n]);
        let (mut cp2, mut perm2) = (vec![0u64; n], vec![0usize; n]);
        let mut head = 0;
        while head < queue.len() {
            self.decode(queue[head], &mut cp, &mut perm);
            head += 1;
            for (gcp, gperm) in &gens {
                for k in 0..n {
                    cp2[k] = (cp[k] + gcp[perm[k]]) % d;
                    perm2[k] = gperm[perm[k]];
                }
                let key = self.encode(&cp2, &perm2);
                if seen.insert(key) {
                    if seen.len() as u64 > cap {
                        return Err(Error::CapExceeded {
                            what: "germ enumeration".into(),
                            cap,
                        });
                    }
                    visit(key);
                    queue.push(key);
                }
            }
        }
        Ok(seen.len() as u64)
    }

    fn decode_element(&self, key: Key) -> GermElement {
        let n = self.n();
        let (mut cp, mut perm) = (vec![0u64; n], vec![0usize; n]);
        self.decode(key, &mut cp, &mut perm);
        GermElement {
            cp,
            perm: Permutation::from_images(perm).expect("packed permutation"),
        }
    }

    /// Number of elements of the subgroup generated by `gens`.
    pub fn closure_size(&self, gens: &[GermElement], cap: u64) -> Result<u64> {
        self.bfs(gens, cap, |_| {})
    }

    /// Elements of the subgroup generated by `gens`, sorted.
    pub fn closure(&self, gens: &[GermElement], cap: u64) -> Result<Vec<GermElement>> {
        let mut keys = Vec::new();
        self.bfs(gens, cap, |k| keys.push(k))?;
        let mut out: Vec<GermElement> = keys.into_iter().map(|k| self.decode_element(k)).collect();
        out.sort();
        Ok(out)
    }

    /// All elements generated by the generator images, sorted.
    pub fn enumerate(&self, cap: u64) -> Result<Vec<GermElement>> {
        self.closure(&self.generators(), cap)
    }

    /// Size of the generated group.
    pub fn generated_order(&self, cap: u64) -> Result<u64> {
        self.closure_size(&self.generators(), cap)
    }

    /// No non-identity element of the generated group has all residues zero.
    pub fn is_permutation_free(&self, cap: u64) -> Result<bool> {
        let id_perm = self.encode(&vec![0; self.n()], self.identity().perm.images()).1;
        let mut free = true;
        self.bfs(&self.generators(), cap, |(c, p)| {
            if c == 0 && p != id_perm {
                free = false;
            }
        })?;
        Ok(free)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExchangeOutcome {
    /// The prefix itself has a generator occurring `d` or more times, or
    /// the class is 1 (the lemma needs `d > 1`).
    NotApplicable,
    /// Prepending `s` keeps the word reduced.
    StillReduced,
    /// Omitting the entry at this 0-based position reproduces the element.
    Exchanged(usize),
    Counterexample { prefix: PiTuple, s: usize },
}

impl ExchangeOutcome {
    pub fn passed(&self) -> bool {
        !matches!(self, ExchangeOutcome::Counterexample { .. })
    }
}

/// Exchange property for `Π̄(t_1..t_k)` and a new letter `s`: if
/// `Π̄(s, t_1, …, t_k)` is not reduced, some omission `Π̄(s, t_1..t̂_i..t_k)`
/// equals `Π̄(t_1..t_k)`.
pub fn exchange_check(germ: &Germ, prefix: &PiTuple, s: usize) -> Result<ExchangeOutcome> {
    let n = germ.n();
    germ.table.check_index(s)?;
    let counts = prefix.counts(n);
    let d = germ.modulus() as i64;
    if d == 1 || counts.iter().any(|&c| c >= d) {
        return Ok(ExchangeOutcome::NotApplicable);
    }
    if counts[s] + 1 < d {
        return Ok(ExchangeOutcome::StillReduced);
    }
    let g = germ.pi(prefix)?;
    let t = prefix.entries();
    for i in 0..t.len() {
        let mut word = Vec::with_capacity(t.len());
        word.push(s);
        word.extend(t[..i].iter().chain(&t[i + 1..]));
        if germ.pi(&PiTuple(word))? == g {
            return Ok(ExchangeOutcome::Exchanged(i));
        }
    }
    Ok(ExchangeOutcome::Counterexample {
        prefix: prefix.clone(),
        s,
    })
}

/// Divisibility facts tied to the class; all are theorems on valid input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassChecks {
    pub o_t_divides_d: bool,
    pub d_divides_g_order: Option<bool>,
    pub g_order_divides_d_pow_n: Option<bool>,
    pub same_prime_divisors: Option<bool>,
    pub d_divides_n_factorial: bool,
}

impl ClassChecks {
    /// Names of the checks that failed.
    pub fn failures(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if !self.o_t_divides_d {
            out.push("o(T) | d");
        }
        if self.d_divides_g_order == Some(false) {
            out.push("d | #G");
        }
        if self.g_order_divides_d_pow_n == Some(false) {
            out.push("#G | d^n");
        }
        if self.same_prime_divisors == Some(false) {
            out.push("primes(d) = primes(#G)");
        }
        if !self.d_divides_n_factorial {
            out.push("d | n!");
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassReport {
    pub n: usize,
    pub d: u64,
    pub per_generator: Vec<u64>,
    pub o_t: u64,
    pub square_free: bool,
    /// Order of the permutation group; `None` past the element cap.
    pub g_order: Option<u64>,
    pub g_abelian: Option<bool>,
    pub transitive: bool,
    pub checks: ClassChecks,
}

pub fn dehornoy_class(s: &CycleSet) -> ClassReport {
    class_report_with_cap(s, DEFAULT_ELEMENT_CAP)
}

pub fn class_report_with_cap(s: &CycleSet, element_cap: usize) -> ClassReport {
    let n = s.n();
    let per_generator: Vec<u64> = (0..n)
        .map(|i| generator_class(s, i).expect("valid cycle sets have a class"))
        .collect();
    let d = per_generator.iter().fold(1u64, |a, b| a.lcm(b));
    let diag = diagonal_map(s).expect("valid cycle sets are non-degenerate");
    let group = perm_group(s, element_cap).ok();
    let g_order = group.as_ref().map(|g| g.order);
    let checks = ClassChecks {
        o_t_divides_d: d % diag.order == 0,
        d_divides_g_order: g_order.map(|g| g % d == 0),
        g_order_divides_d_pow_n: g_order.map(|g| bounds::divides_power(g, d, n as u32)),
        same_prime_divisors: g_order.map(|g| bounds::prime_divisors(g) == bounds::prime_divisors(d)),
        d_divides_n_factorial: bounds::divides_factorial(d, n as u64),
    };
    ClassReport {
        n,
        d,
        per_generator,
        o_t: diag.order,
        square_free: diag.square_free,
        g_order,
        g_abelian: group.as_ref().map(|g| g.abelian),
        transitive: crate::cycle_set::orbits(s).len() == 1,
        checks,
    }
}

/// Conjectural bounds and structural facts evaluated on one cycle set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjectureReport {
    pub class: ClassReport,
    pub indecomposable: bool,
    /// `d ≤ n`, conjectured for indecomposable sets.
    pub indecomposable_bound: Option<bool>,
    /// `n | #G`, a theorem for indecomposable sets.
    pub n_divides_g_order: Option<bool>,
    /// `d ≤ a_n`, conjectured in general.
    pub a_n_bound: bool,
    /// `d ≤ a_n` for square-free sets with abelian group, a theorem.
    pub square_free_abelian_bound: Option<bool>,
    /// Human-readable list of everything that failed.
    pub violations: Vec<String>,
}

pub fn conjecture_report(s: &CycleSet) -> ConjectureReport {
    let class = dehornoy_class(s);
    let n = s.n();
    let d = class.d;
    let indecomposable = decompose(s).len() == 1;
    let a_n = bounds::a_n(n as u32);
    let indecomposable_bound = indecomposable.then_some(d <= n as u64);
    let n_divides_g_order = if indecomposable {
        class.g_order.map(|g| g % n as u64 == 0)
    } else {
        None
    };
    let a_n_bound = d as u128 <= a_n;
    let square_free_abelian_bound =
        (class.square_free && class.g_abelian == Some(true)).then_some(d as u128 <= a_n);
    let mut violations: Vec<String> = class.checks.failures().iter().map(|f| f.to_string()).collect();
    if indecomposable_bound == Some(false) {
        violations.push(format!("indecomposable with d={d} > n={n}"));
    }
    if n_divides_g_order == Some(false) {
        violations.push("indecomposable but n does not divide #G".into());
    }
    if !a_n_bound {
        violations.push(format!("d={d} > a_n={a_n}"));
    }
    if square_free_abelian_bound == Some(false) {
        violations.push(format!("square-free abelian with d={d} > a_n={a_n}"));
    }
    ConjectureReport {
        class,
        indecomposable,
        indecomposable_bound,
        n_divides_g_order,
        a_n_bound,
        square_free_abelian_bound,
        violations,
    }
}

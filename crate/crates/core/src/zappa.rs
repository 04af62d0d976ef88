//! Zappa–Szép composition of cycle sets with coprime classes and the Sylow
//! decomposition of a cycle set into retractions of prime-power class.

use std::collections::HashSet;

use num_integer::Integer;

use crate::bounds::factorize;
use crate::calculus::bracket_power;
use crate::cycle_set::{validate, CycleSet, PermTable, Validation};
use crate::error::{Error, Result};
use crate::germ::{bracket_perm, class_of, retraction, Germ, GermElement};
use crate::perm::Permutation;

/// Outcome of a pointwise check; indices are 0-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MixedOutcome {
    Passed,
    Counterexample { s: usize, t: usize, u: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CommuteOutcome {
    Passed,
    Counterexample { s: usize, t: usize },
}

fn same_size(a: &PermTable, b: &PermTable) -> Result<()> {
    if a.n() != b.n() {
        return Err(Error::DimensionMismatch {
            expected: a.n(),
            found: b.n(),
        });
    }
    Ok(())
}

/// `(s *₁ t) *₂ (s *₁ u) = (t *₂ s) *₁ (t *₂ u)` for all triples. With
/// `S₁ = S₂` this is the cycle-set law.
pub fn mixed_equation_check(s1: &PermTable, s2: &PermTable) -> Result<MixedOutcome> {
    same_size(s1, s2)?;
    let n = s1.n();
    for s in 0..n {
        for t in 0..n {
            for u in 0..n {
                let left = s2.star(s1.star(s, t), s1.star(s, u));
                let right = s1.star(s2.star(t, s), s2.star(t, u));
                if left != right {
                    return Ok(MixedOutcome::Counterexample { s, t, u });
                }
            }
        }
    }
    Ok(MixedOutcome::Passed)
}

/// Generator-level commutation of the two germs:
/// `ψ₂(s *₁ t)∘ψ₁(s) = ψ₁(t *₂ s)∘ψ₂(t)` for all `s, t`.
pub fn germs_commute_check(s1: &CycleSet, s2: &CycleSet) -> Result<CommuteOutcome> {
    same_size(s1, s2)?;
    let (d1, d2) = (class_of(s1)?, class_of(s2)?);
    if d1.gcd(&d2) != 1 {
        return Err(Error::NotCoprime { d1, d2 });
    }
    let n = s1.n();
    for s in 0..n {
        for t in 0..n {
            let left = s2.psi(s1.star(s, t)).compose(s1.psi(s));
            let right = s1.psi(s2.star(t, s)).compose(s2.psi(t));
            if left != right {
                return Ok(CommuteOutcome::Counterexample { s, t });
            }
        }
    }
    Ok(CommuteOutcome::Passed)
}

/// `(u, v)` with `u = d₂⁻¹ mod d₁`, `v = d₁⁻¹ mod d₂`, so that
/// `d₂u + d₁v ≡ 1 (mod d₁d₂)`. A modulus of 1 gives exponent 0.
pub fn bezout(d1: u64, d2: u64) -> Result<(u64, u64)> {
    if d1 == 0 || d2 == 0 || d1.gcd(&d2) != 1 {
        return Err(Error::NotCoprime { d1, d2 });
    }
    let inv = |a: u64, m: u64| -> u64 {
        if m == 1 {
            return 0;
        }
        let e = (a as i128).extended_gcd(&(m as i128));
        e.x.rem_euclid(m as i128) as u64
    };
    Ok((inv(d2, d1), inv(d1, d2)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Composition {
    pub table: PermTable,
    pub validation: Validation,
    pub d1: u64,
    pub d2: u64,
    pub u: u64,
    pub v: u64,
}

impl Composition {
    pub fn is_valid(&self) -> bool {
        self.validation.is_valid()
    }

    pub fn into_cycle_set(self) -> Result<CycleSet> {
        match self.validation {
            Validation::Valid => CycleSet::new(self.table),
            Validation::Invalid(w) => Err(Error::CompositionInvalid(w)),
        }
    }
}

/// Builds the candidate table `ψ(s_i) = ψ₂(s_j^{[v]})∘σ` with
/// `σ = ψ₁(s_i^{[u]})` and `j = σ(i)`, then validates it.
pub fn zappa_compose(s1: &CycleSet, s2: &CycleSet) -> Result<Composition> {
    same_size(s1, s2)?;
    let (d1, d2) = (class_of(s1)?, class_of(s2)?);
    let (u, v) = bezout(d1, d2)?;
    let rows = (0..s1.n())
        .map(|i| {
            let sigma = bracket_perm(s1, i, u)?;
            let j = sigma.apply(i);
            Ok(bracket_perm(s2, j, v)?.compose(&sigma))
        })
        .collect::<Result<Vec<Permutation>>>()?;
    let table = PermTable::new(rows)?;
    let validation = validate(&table);
    Ok(Composition {
        table,
        validation,
        d1,
        d2,
        u,
        v,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SylowFactor {
    pub prime: u64,
    pub exponent: u32,
    /// `d / p^a`.
    pub beta: u64,
    /// Class of `cycle_set`; equals `p^a`.
    pub class: u64,
    pub cycle_set: CycleSet,
}

impl SylowFactor {
    pub fn prime_power(&self) -> u64 {
        self.prime.pow(self.exponent)
    }
}

/// One retraction `S^{[d/p^a]}` per prime power `p^a ∥ d`, primes ascending.
pub fn sylow_decompose(s: &CycleSet) -> Result<Vec<SylowFactor>> {
    let d = class_of(s)?;
    if d == 1 {
        return Err(Error::TrivialClass);
    }
    factorize(d)
        .into_iter()
        .map(|(prime, exponent)| {
            let beta = d / prime.pow(exponent);
            let cycle_set = retraction(s, beta)?;
            Ok(SylowFactor {
                prime,
                exponent,
                beta,
                class: class_of(&cycle_set)?,
                cycle_set,
            })
        })
        .collect()
}

/// Left fold of [`zappa_compose`] over factors sorted by class.
pub fn recompose_sets(sets: &[CycleSet]) -> Result<CycleSet> {
    let mut sorted: Vec<(u64, &CycleSet)> = sets
        .iter()
        .map(|s| Ok((class_of(s)?, s)))
        .collect::<Result<_>>()?;
    sorted.sort_by_key(|(d, _)| *d);
    for (a, (da, _)) in sorted.iter().enumerate() {
        for (db, _) in &sorted[a + 1..] {
            if da.gcd(db) != 1 {
                return Err(Error::NotCoprime { d1: *da, d2: *db });
            }
        }
    }
    let mut iter = sorted.into_iter();
    let (_, first) = iter.next().ok_or(Error::EmptyTuple)?;
    iter.try_fold(first.clone(), |acc, (_, next)| {
        zappa_compose(&acc, next)?.into_cycle_set()
    })
}

pub fn sylow_recompose(factors: &[SylowFactor]) -> Result<CycleSet> {
    let sets: Vec<CycleSet> = factors.iter().map(|f| f.cycle_set.clone()).collect();
    recompose_sets(&sets)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SylowSubgroup {
    pub prime: u64,
    pub exponent: u32,
    pub beta: u64,
    /// `(p^a)^n`.
    pub expected_order: u128,
    pub order: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SylowReport {
    pub d: u64,
    pub subgroups: Vec<SylowSubgroup>,
    /// Generator pairs `(a, b)` from different subgroups for which `ab`
    /// could not be rewritten as `b'a'`.
    pub commutation_failures: u64,
    pub factored: u64,
    pub factorization_failures: u64,
}

impl SylowReport {
    pub fn all_hold(&self) -> bool {
        self.commutation_failures == 0
            && self.factorization_failures == 0
            && self
                .subgroups
                .iter()
                .all(|h| h.order as u128 == h.expected_order)
    }
}

/// Splits `g` as an ordered product over the subgroups listed in `order`:
/// at each step the next factor takes the CRT component of the remaining
/// residues for its prime power.
fn factor_through(
    germ: &Germ,
    g: &GermElement,
    order: &[usize],
    prime_powers: &[u64],
    members: &[HashSet<GermElement>],
) -> Result<bool> {
    let d = germ.modulus();
    let mut rest = g.clone();
    for &k in order {
        let a = prime_powers[k];
        let b = d / a;
        let e = if a == 1 {
            0
        } else {
            let x = (b as i128).extended_gcd(&(a as i128)).x;
            x.rem_euclid(a as i128) as u64
        };
        let comp: Vec<i64> = rest
            .cp()
            .iter()
            .map(|&c| ((c % a) * e % a * b % d) as i64)
            .collect();
        let x = germ.project(&germ.lift(&germ.make_element(&comp, Permutation::identity(germ.n()))?)?);
        if !members[k].contains(&x) {
            return Ok(false);
        }
        let x_inv = germ.project(&germ.lift(&x)?.inverse());
        rest = germ.multiply(&x_inv, &rest);
    }
    Ok(rest.is_identity())
}

/// Subgroup orders, pairwise commutation on generators and factorization
/// of up to `samples` germ elements through the Sylow subgroups.
pub fn sylow_group_checks(s: &CycleSet, cap: u64, samples: u64) -> Result<SylowReport> {
    let germ = Germ::new(s, None)?;
    let d = germ.modulus();
    let n = s.n();
    let parts = factorize(d);
    let mut subgroups = Vec::new();
    let mut gens: Vec<Vec<GermElement>> = Vec::new();
    let mut members: Vec<HashSet<GermElement>> = Vec::new();
    let mut prime_powers = Vec::new();
    for &(prime, exponent) in &parts {
        let a = prime.pow(exponent);
        let beta = d / a;
        let g: Vec<GermElement> = (0..n)
            .map(|i| Ok(germ.project(&bracket_power(s, i, beta as i64)?)))
            .collect::<Result<_>>()?;
        let elems = germ.closure(&g, cap)?;
        subgroups.push(SylowSubgroup {
            prime,
            exponent,
            beta,
            expected_order: (a as u128).pow(n as u32),
            order: elems.len() as u64,
        });
        gens.push(g);
        members.push(elems.into_iter().collect());
        prime_powers.push(a);
    }

    let mut commutation_failures = 0;
    for i in 0..parts.len() {
        for j in 0..parts.len() {
            if i == j {
                continue;
            }
            for a in &gens[i] {
                for b in &gens[j] {
                    let ab = germ.multiply(a, b);
                    if !factor_through(&germ, &ab, &[j, i], &prime_powers, &members)? {
                        commutation_failures += 1;
                    }
                }
            }
        }
    }

    let total = germ.order().unwrap_or(u128::MAX);
    let count = (samples as u128).min(total).max(1);
    let stride = total / count;
    let order: Vec<usize> = (0..parts.len()).collect();
    let mut factorization_failures = 0;
    for k in 0..count {
        let mut code = k * stride;
        let residues: Vec<i64> = (0..n)
            .map(|_| {
                let r = (code % d as u128) as i64;
                code /= d as u128;
                r
            })
            .collect();
        let g = germ.project(&germ.lift(&germ.make_element(&residues, Permutation::identity(n))?)?);
        if !factor_through(&germ, &g, &order, &prime_powers, &members)? {
            factorization_failures += 1;
        }
    }

    Ok(SylowReport {
        d,
        subgroups,
        commutation_failures,
        factored: count as u64,
        factorization_failures,
    })
}

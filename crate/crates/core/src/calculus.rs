//! Ω/Π calculus on a cycle set, evaluated in the monomial representation.
//!
//! `Ω_1(x) = x`, `Ω_k(x_1..x_k) = Ω_{k-1}(x_1..x_{k-1}) * Ω_{k-1}(x_1..x_{k-2}, x_k)`
//! and `Π_k = Ω_1 · Ω_2 ⋯ Ω_k`. In the representation
//! `Ω_{k+1}(t_1..t_k, s) = ψ(Π_k(t_1..t_k))(s)`, which is the fast path used
//! here; the doubly recursive definition is kept as [`omega_recursive`].

use std::collections::HashMap;
use std::fmt;

use crate::cycle_set::{diagonal_map, PermTable};
use crate::error::{Error, Result};
use crate::garside::{col_cp_to_element, cp_to_element};
use crate::monomial::MonomialElement;

/// A Π-expression `(t_1, …, t_k)`, entries 0-based.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PiTuple(pub Vec<usize>);

impl PiTuple {
    /// From 1-based entries.
    pub fn from_one_based(entries: &[usize]) -> Option<Self> {
        entries
            .iter()
            .map(|&x| x.checked_sub(1))
            .collect::<Option<Vec<_>>>()
            .map(PiTuple)
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of occurrences of each generator.
    pub fn counts(&self, n: usize) -> Vec<i64> {
        let mut c = vec![0; n];
        for &t in &self.0 {
            c[t] += 1;
        }
        c
    }
}

impl fmt::Display for PiTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|t| (t + 1).to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for PiTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PiTuple{self}")
    }
}

fn check_word(table: &PermTable, word: &[usize]) -> Result<()> {
    word.iter().try_for_each(|&i| table.check_index(i))
}

/// `Π_k(t_1, …, t_k)`; the empty tuple gives the identity.
pub fn pi(table: &PermTable, tuple: &PiTuple) -> Result<MonomialElement> {
    check_word(table, &tuple.0)?;
    let mut acc = MonomialElement::identity(table.n());
    for &t in &tuple.0 {
        let letter = acc.perm().apply(t);
        acc = &acc * &MonomialElement::theta(table, letter)?;
    }
    Ok(acc)
}

/// `Ω_k(t_1, …, t_k)` as a 0-based generator index.
pub fn omega(table: &PermTable, tuple: &PiTuple) -> Result<usize> {
    let (&last, prefix) = tuple.0.split_last().ok_or(Error::EmptyTuple)?;
    table.check_index(last)?;
    let prefix = pi(table, &PiTuple(prefix.to_vec()))?;
    Ok(prefix.perm().apply(last))
}

/// `Ω_k` straight from its recursive definition, memoized on the argument
/// tuple.
pub fn omega_recursive(table: &PermTable, tuple: &PiTuple) -> Result<usize> {
    if tuple.is_empty() {
        return Err(Error::EmptyTuple);
    }
    check_word(table, &tuple.0)?;
    let mut memo = HashMap::new();
    Ok(omega_rec(table, &tuple.0, &mut memo))
}

fn omega_rec(table: &PermTable, args: &[usize], memo: &mut HashMap<Vec<usize>, usize>) -> usize {
    let k = args.len();
    if k == 1 {
        return args[0];
    }
    if let Some(&v) = memo.get(args) {
        return v;
    }
    let left = omega_rec(table, &args[..k - 1], memo);
    let mut right_args = args[..k - 2].to_vec();
    right_args.push(args[k - 1]);
    let right = omega_rec(table, &right_args, memo);
    let v = table.star(left, right);
    memo.insert(args.to_vec(), v);
    v
}

/// Product of the generators of `word`, left to right.
pub fn word_to_element(table: &PermTable, word: &[usize]) -> Result<MonomialElement> {
    check_word(table, word)?;
    let mut acc = MonomialElement::identity(table.n());
    for &i in word {
        acc = &acc * &MonomialElement::theta(table, i)?;
    }
    Ok(acc)
}

/// A Π-expression of the element spelled by `word`: `t_1 = t'_1` and each
/// later `t_j` is the preimage of `t'_j` under `s ↦ Ω_j(t_1..t_{j-1}, s)`.
pub fn pi_expression(table: &PermTable, word: &[usize]) -> Result<PiTuple> {
    if word.is_empty() {
        return Err(Error::EmptyTuple);
    }
    check_word(table, word)?;
    let mut acc = MonomialElement::identity(table.n());
    let mut out = Vec::with_capacity(word.len());
    for &letter in word {
        out.push(acc.perm().inverse().apply(letter));
        acc = &acc * &MonomialElement::theta(table, letter)?;
    }
    Ok(PiTuple(out))
}

/// Word problem in the structure monoid: equal iff the exponent vectors agree.
pub fn words_equal(table: &PermTable, w1: &[usize], w2: &[usize]) -> Result<bool> {
    Ok(word_to_element(table, w1)?.cp() == word_to_element(table, w2)?.cp())
}

/// Word problem in the germ of modulus `d`: exponent vectors agree mod `d`.
pub fn germ_words_equal(table: &PermTable, w1: &[usize], w2: &[usize], d: u64) -> Result<bool> {
    let d = d as i64;
    let a = word_to_element(table, w1)?;
    let b = word_to_element(table, w2)?;
    Ok(a.cp()
        .iter()
        .zip(b.cp())
        .all(|(x, y)| (x - y).rem_euclid(d) == 0))
}

/// `s_i^{[k]}`: the element with exponent vector `k·e_i`, equal to
/// `s·T(s)⋯T^{k-1}(s)` for `k ≥ 0`.
pub fn bracket_power(table: &PermTable, i: usize, k: i64) -> Result<MonomialElement> {
    table.check_index(i)?;
    let t = diagonal_map(table)?.t;
    if k >= 0 {
        let mut acc = MonomialElement::identity(table.n());
        let mut s = i;
        for _ in 0..k {
            acc = &acc * &MonomialElement::theta(table, s)?;
            s = t.apply(s);
        }
        Ok(acc)
    } else {
        let m = k.unsigned_abs();
        let t_inv = t.inverse();
        let mut base = i;
        for _ in 0..m {
            base = t_inv.apply(base);
        }
        Ok(bracket_power(table, base, m as i64)?.inverse())
    }
}

/// Reduced left fraction `g = f·h⁻¹` with `cp(f) = max(cp(g), 0)`.
pub fn left_fraction(
    table: &PermTable,
    g: &MonomialElement,
) -> Result<(MonomialElement, MonomialElement)> {
    let pos: Vec<i64> = g.cp().iter().map(|&c| c.max(0)).collect();
    let f = cp_to_element(table, &pos)?;
    let h = &g.inverse() * &f;
    debug_assert!(h.is_positive());
    Ok((f, h))
}

/// Reduced right fraction `g = f⁻¹·h` with column exponents of `h` equal to
/// `max(col_cp(g), 0)`.
pub fn right_fraction(
    table: &PermTable,
    g: &MonomialElement,
) -> Result<(MonomialElement, MonomialElement)> {
    let pos: Vec<i64> = g.col_cp().iter().map(|&c| c.max(0)).collect();
    let h = col_cp_to_element(table, &pos)?;
    let f = &h * &g.inverse();
    debug_assert!(f.is_positive());
    Ok((f, h))
}

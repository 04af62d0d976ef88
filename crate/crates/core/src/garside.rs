//! Divisibility in the structure monoid. A monoid element is determined by
//! its row exponents, left divisibility is `cp ≤ cp` and right divisibility
//! is the same test on column exponents.

use std::collections::BTreeSet;

use crate::calculus::{pi, PiTuple};
use crate::cycle_set::PermTable;
use crate::error::{Error, Result};
use crate::monomial::MonomialElement;

pub const DEFAULT_DELTA_DIVISOR_CAP: usize = 20;
pub const DEFAULT_BALANCE_CAP: u64 = 1 << 16;

fn check_dims(a: &MonomialElement, b: &MonomialElement) -> Result<()> {
    if a.n() != b.n() {
        return Err(Error::DimensionMismatch {
            expected: a.n(),
            found: b.n(),
        });
    }
    Ok(())
}

fn le(a: &[i64], b: &[i64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// `g1` left-divides `g2` in the monoid: `g2 = g1·h` with `h` positive.
pub fn left_divides(g1: &MonomialElement, g2: &MonomialElement) -> Result<bool> {
    check_dims(g1, g2)?;
    g1.require_positive()?;
    g2.require_positive()?;
    Ok(le(g1.cp(), g2.cp()))
}

/// `g1` right-divides `g2`: `g2 = h·g1` with `h` positive.
pub fn right_divides(g1: &MonomialElement, g2: &MonomialElement) -> Result<bool> {
    check_dims(g1, g2)?;
    g1.require_positive()?;
    g2.require_positive()?;
    Ok(le(&g1.col_cp(), &g2.col_cp()))
}

fn combine(
    a: &[i64],
    b: &[i64],
    f: impl Fn(i64, i64) -> i64,
) -> Vec<i64> {
    a.iter().zip(b).map(|(&x, &y)| f(x, y)).collect()
}

fn prepare(g1: &MonomialElement, g2: &MonomialElement) -> Result<()> {
    check_dims(g1, g2)?;
    g1.require_positive()?;
    g2.require_positive()
}

pub fn gcd_left(table: &PermTable, g1: &MonomialElement, g2: &MonomialElement) -> Result<MonomialElement> {
    prepare(g1, g2)?;
    cp_to_element(table, &combine(g1.cp(), g2.cp(), i64::min))
}

pub fn lcm_left(table: &PermTable, g1: &MonomialElement, g2: &MonomialElement) -> Result<MonomialElement> {
    prepare(g1, g2)?;
    cp_to_element(table, &combine(g1.cp(), g2.cp(), i64::max))
}

pub fn gcd_right(table: &PermTable, g1: &MonomialElement, g2: &MonomialElement) -> Result<MonomialElement> {
    prepare(g1, g2)?;
    col_cp_to_element(table, &combine(&g1.col_cp(), &g2.col_cp(), i64::min))
}

pub fn lcm_right(table: &PermTable, g1: &MonomialElement, g2: &MonomialElement) -> Result<MonomialElement> {
    prepare(g1, g2)?;
    col_cp_to_element(table, &combine(&g1.col_cp(), &g2.col_cp(), i64::max))
}

fn check_exponents(table: &PermTable, c: &[i64]) -> Result<()> {
    if c.len() != table.n() {
        return Err(Error::DimensionMismatch {
            expected: table.n(),
            found: c.len(),
        });
    }
    match c.iter().position(|&x| x < 0) {
        Some(row) => Err(Error::NegativeExponent {
            row: row + 1,
            value: c[row],
        }),
        None => Ok(()),
    }
}

/// The monoid element with row exponents `c`: Π over `c_1` copies of `s_1`,
/// then `c_2` copies of `s_2`, and so on.
pub fn cp_to_element(table: &PermTable, c: &[i64]) -> Result<MonomialElement> {
    check_exponents(table, c)?;
    let tuple: Vec<usize> = c
        .iter()
        .enumerate()
        .flat_map(|(i, &k)| std::iter::repeat_n(i, k as usize))
        .collect();
    pi(table, &PiTuple(tuple))
}

/// The monoid element with column exponents `c`, built by left
/// multiplication: prepending `s` adds one to column `ψ(x)(T(s))` of `x`.
pub fn col_cp_to_element(table: &PermTable, c: &[i64]) -> Result<MonomialElement> {
    check_exponents(table, c)?;
    let n = table.n();
    let t = crate::cycle_set::diagonal_map(table)?.t;
    let t_inv = t.inverse();
    let mut x = MonomialElement::identity(n);
    for (col, &k) in c.iter().enumerate() {
        for _ in 0..k {
            let s = t_inv.apply(x.perm().inverse().apply(col));
            x = &MonomialElement::theta(table, s)? * &x;
        }
    }
    debug_assert_eq!(x.col_cp(), c);
    Ok(x)
}

/// `Δ^k`, the element with `cp = (k, …, k)`.
pub fn delta(table: &PermTable, k: u32) -> Result<MonomialElement> {
    cp_to_element(table, &vec![k as i64; table.n()])
}

/// All `2^n` divisors of `Δ`, ordered by exponent vector.
pub fn divisors_of_delta(table: &PermTable, cap_n: usize) -> Result<Vec<MonomialElement>> {
    let n = table.n();
    if n > cap_n {
        return Err(Error::CapExceeded {
            what: format!("divisors of delta for n={n}"),
            cap: cap_n as u64,
        });
    }
    (0..1u64 << n)
        .map(|mask| {
            let c: Vec<i64> = (0..n).map(|i| ((mask >> (n - 1 - i)) & 1) as i64).collect();
            cp_to_element(table, &c)
        })
        .collect()
}

fn box_size(c: &[i64]) -> Option<u64> {
    c.iter()
        .try_fold(1u64, |acc, &x| acc.checked_mul(x as u64 + 1))
}

fn exponent_box(c: &[i64]) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for &k in c {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (0..=k).map(move |v| {
                    let mut p = prefix.clone();
                    p.push(v);
                    p
                })
            })
            .collect();
    }
    out
}

/// Left divisors of a monoid element.
pub fn left_divisors(table: &PermTable, g: &MonomialElement, cap: u64) -> Result<BTreeSet<MonomialElement>> {
    g.require_positive()?;
    match box_size(g.cp()) {
        Some(size) if size <= cap => {}
        _ => {
            return Err(Error::CapExceeded {
                what: "divisor enumeration".into(),
                cap,
            })
        }
    }
    exponent_box(g.cp())
        .iter()
        .map(|c| cp_to_element(table, c))
        .collect()
}

/// Right divisors of a monoid element.
pub fn right_divisors(table: &PermTable, g: &MonomialElement, cap: u64) -> Result<BTreeSet<MonomialElement>> {
    Ok(left_divisors(table, g, cap)?
        .into_iter()
        .map(|k| &k.inverse() * g)
        .collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BalanceReport {
    /// Result of comparing the two divisor sets; `None` if the sets were
    /// too large to enumerate under the cap.
    pub exact: Option<bool>,
    /// `cp(g) = cp(gᵗ)`, which implies balance.
    pub row_equals_column: bool,
}

impl BalanceReport {
    pub fn is_partial(&self) -> bool {
        self.exact.is_none()
    }
}

pub fn is_balanced(table: &PermTable, g: &MonomialElement, cap: u64) -> Result<BalanceReport> {
    g.require_positive()?;
    let row_equals_column = g.cp() == g.col_cp();
    let exact = match box_size(g.cp()) {
        Some(size) if size <= cap => {
            Some(left_divisors(table, g, cap)? == right_divisors(table, g, cap)?)
        }
        _ => None,
    };
    Ok(BalanceReport {
        exact,
        row_equals_column,
    })
}

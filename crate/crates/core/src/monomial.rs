//! Monomial matrices whose non-zero entries are powers of an indeterminate
//! `q`, stored as `D·P_σ` with `D = diag(q^{c_1}, …, q^{c_n})`.
//!
//! Row `i` carries `q^{c_i}` in column `σ(i)`. The product law is
//! `cp(gh) = cp(g) + ᵍcp(h)` and `ψ(gh) = ψ(h)∘ψ(g)`, where
//! `ˢc = (c_{σ(1)}, …, c_{σ(n)})`.

use std::fmt;
use std::ops::Mul;

use crate::cycle_set::PermTable;
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// An element of the monomial group: exponent vector plus permutation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonomialElement {
    cp: Vec<i64>,
    perm: Permutation,
}

/// `(c_{σ(1)}, …, c_{σ(n)})`: the exponent vector `c` after conjugating
/// `diag(q^c)` by `P_σ`.
pub fn conjugate_cp(sigma: &Permutation, c: &[i64]) -> Vec<i64> {
    debug_assert_eq!(sigma.len(), c.len());
    (0..c.len()).map(|i| c[sigma.apply(i)]).collect()
}

fn add_exponents(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.checked_add(*y).expect("exponent overflow"))
        .collect()
}

impl MonomialElement {
    pub fn new(cp: Vec<i64>, perm: Permutation) -> Result<Self> {
        if cp.len() != perm.len() {
            return Err(Error::DimensionMismatch {
                expected: perm.len(),
                found: cp.len(),
            });
        }
        Ok(MonomialElement { cp, perm })
    }

    pub fn identity(n: usize) -> Self {
        MonomialElement {
            cp: vec![0; n],
            perm: Permutation::identity(n),
        }
    }

    /// Pure diagonal element `diag(q^c)`.
    pub fn diagonal(cp: Vec<i64>) -> Self {
        let n = cp.len();
        MonomialElement {
            cp,
            perm: Permutation::identity(n),
        }
    }

    /// Image of the generator `s_i` (0-based): `D_i · P_{ψ(s_i)}`.
    pub fn theta(table: &PermTable, i: usize) -> Result<Self> {
        table.check_index(i)?;
        let mut cp = vec![0; table.n()];
        cp[i] = 1;
        Ok(MonomialElement {
            cp,
            perm: table.psi(i).clone(),
        })
    }

    pub fn n(&self) -> usize {
        self.cp.len()
    }

    /// Row exponents.
    pub fn cp(&self) -> &[i64] {
        &self.cp
    }

    /// Column exponents, i.e. `cp` of the transpose.
    pub fn col_cp(&self) -> Vec<i64> {
        conjugate_cp(&self.perm.inverse(), &self.cp)
    }

    /// `ψ(g)`.
    pub fn perm(&self) -> &Permutation {
        &self.perm
    }

    /// Length over `S ∪ S⁻¹`.
    pub fn lambda(&self) -> i64 {
        self.cp.iter().map(|c| c.abs()).sum()
    }

    pub fn is_identity(&self) -> bool {
        self.perm.is_identity() && self.cp.iter().all(|&c| c == 0)
    }

    pub fn is_diagonal(&self) -> bool {
        self.perm.is_identity()
    }

    /// Whether the element lies in the positive monoid (`cp ≥ 0`).
    pub fn is_positive(&self) -> bool {
        self.cp.iter().all(|&c| c >= 0)
    }

    pub(crate) fn require_positive(&self) -> Result<()> {
        match self.cp.iter().position(|&c| c < 0) {
            None => Ok(()),
            Some(row) => Err(Error::NegativeExponent {
                row: row + 1,
                value: self.cp[row],
            }),
        }
    }

    pub fn multiply(&self, other: &MonomialElement) -> Result<Self> {
        if self.n() != other.n() {
            return Err(Error::DimensionMismatch {
                expected: self.n(),
                found: other.n(),
            });
        }
        Ok(MonomialElement {
            cp: add_exponents(&self.cp, &conjugate_cp(&self.perm, &other.cp)),
            perm: other.perm.compose(&self.perm),
        })
    }

    pub fn inverse(&self) -> Self {
        let inv = self.perm.inverse();
        MonomialElement {
            cp: conjugate_cp(&inv, &self.cp).into_iter().map(|c| -c).collect(),
            perm: inv,
        }
    }

    pub fn transpose(&self) -> Self {
        let inv = self.perm.inverse();
        MonomialElement {
            cp: conjugate_cp(&inv, &self.cp),
            perm: inv,
        }
    }

    /// Integer power, negative exponents allowed.
    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = MonomialElement::identity(self.n());
        for _ in 0..k.unsigned_abs() {
            out = &out * &base;
        }
        out
    }

    /// Dense matrix with `Some(e)` standing for `q^e` and `None` for zero.
    pub fn naive_matrix(&self) -> Vec<Vec<Option<i64>>> {
        let n = self.n();
        (0..n)
            .map(|i| {
                let mut row = vec![None; n];
                row[self.perm.apply(i)] = Some(self.cp[i]);
                row
            })
            .collect()
    }

    /// Reads an element back from a dense monomial matrix.
    pub fn from_naive_matrix(m: &[Vec<Option<i64>>]) -> Option<Self> {
        let n = m.len();
        let mut images = Vec::with_capacity(n);
        let mut cp = Vec::with_capacity(n);
        for row in m {
            if row.len() != n {
                return None;
            }
            let mut entries = row.iter().enumerate().filter_map(|(j, e)| e.map(|e| (j, e)));
            let (j, e) = entries.next()?;
            if entries.next().is_some() {
                return None;
            }
            images.push(j);
            cp.push(e);
        }
        Some(MonomialElement {
            cp,
            perm: Permutation::from_images(images)?,
        })
    }
}

/// Explicit matrix product over Laurent monomials. Each output entry is the
/// sum of `q^{a+b}` terms, which stays a single monomial for monomial inputs;
/// `None` is returned if a position receives more than one term.
pub fn naive_product(a: &[Vec<Option<i64>>], b: &[Vec<Option<i64>>]) -> Option<Vec<Vec<Option<i64>>>> {
    let n = a.len();
    let mut out = vec![vec![None; n]; n];
    for i in 0..n {
        for k in 0..n {
            let mut acc: Option<i64> = None;
            for j in 0..n {
                if let (Some(x), Some(y)) = (a[i][j], b[j][k]) {
                    if acc.is_some() {
                        return None;
                    }
                    acc = Some(x + y);
                }
            }
            out[i][k] = acc;
        }
    }
    Some(out)
}

impl Mul for &MonomialElement {
    type Output = MonomialElement;

    /// Panics on dimension mismatch; use [`MonomialElement::multiply`] for a
    /// checked product.
    fn mul(self, rhs: &MonomialElement) -> MonomialElement {
        self.multiply(rhs).expect("dimension mismatch")
    }
}

impl fmt::Display for MonomialElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cp: Vec<String> = self.cp.iter().map(|c| c.to_string()).collect();
        write!(f, "cp=({}) perm={}", cp.join(","), self.perm)
    }
}

impl fmt::Debug for MonomialElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

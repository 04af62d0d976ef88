//! Cycle sets on `{s_1, …, s_n}`: the table of left translations, the
//! cycle-set law, the diagonal map, the permutation group generated by the
//! translations and the orbit decomposition.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::ops::Deref;

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Default bound on the number of group elements `perm_group` will build.
pub const DEFAULT_ELEMENT_CAP: usize = 1_000_000;

/// A table of `n` permutations of `{0, …, n-1}`, row `i` being `ψ(s_i)`.
///
/// Nothing beyond bijectivity of the rows is assumed; see [`CycleSet`] for
/// the validated form.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PermTable {
    rows: Vec<Permutation>,
}

impl PermTable {
    pub fn new(rows: Vec<Permutation>) -> Result<Self> {
        let n = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: bad.len(),
            });
        }
        Ok(PermTable { rows })
    }

    /// Builds a table from 1-based one-line rows.
    pub fn from_one_line_rows(rows: &[Vec<usize>]) -> Result<Self> {
        let n = rows.len();
        let perms = rows
            .iter()
            .enumerate()
            .map(|(i, row)| {
                if row.len() != n {
                    return Err(Error::DimensionMismatch {
                        expected: n,
                        found: row.len(),
                    });
                }
                Permutation::from_one_line(row).ok_or(Error::NotAPermutation { row: i + 1, n })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(PermTable { rows: perms })
    }

    /// Builds a table of size `n` from one cycle-notation string per row.
    pub fn from_cycle_strings(n: usize, rows: &[&str]) -> Result<Self> {
        if rows.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: rows.len(),
            });
        }
        let perms = rows
            .iter()
            .map(|r| Permutation::parse_cycles(n, r))
            .collect::<Result<Vec<_>>>()?;
        Ok(PermTable { rows: perms })
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    /// `ψ(s_i)`, 0-based.
    #[inline]
    pub fn psi(&self, i: usize) -> &Permutation {
        &self.rows[i]
    }

    pub fn rows(&self) -> &[Permutation] {
        &self.rows
    }

    /// `s_i * s_j`, 0-based.
    #[inline]
    pub fn star(&self, i: usize, j: usize) -> usize {
        self.rows[i].apply(j)
    }

    pub(crate) fn check_index(&self, i: usize) -> Result<()> {
        if i < self.n() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: i + 1,
                n: self.n(),
            })
        }
    }

    /// Simultaneous relabeling by `tau`: `s_i ↦ s_{τ(i)}`.
    pub fn relabel(&self, tau: &Permutation) -> PermTable {
        let inv = tau.inverse();
        let rows = (0..self.n())
            .map(|a| self.rows[inv.apply(a)].conjugate_by(tau))
            .collect();
        PermTable { rows }
    }
}

impl fmt::Debug for PermTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.rows.iter().map(|r| r.to_string())).finish()
    }
}

/// A failing instance of the cycle-set law, all indices 1-based:
/// `(s*t)*(s*u) = left` while `(t*s)*(t*u) = right`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Witness {
    pub s: usize,
    pub t: usize,
    pub u: usize,
    pub left: usize,
    pub right: usize,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "witness {} {} {}: s{} vs s{}",
            self.s, self.t, self.u, self.left, self.right
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Validation {
    Valid,
    Invalid(Witness),
}

impl Validation {
    pub fn is_valid(&self) -> bool {
        matches!(self, Validation::Valid)
    }
}

/// Checks `(s*t)*(s*u) = (t*s)*(t*u)` on all `n³` triples and reports the
/// lexicographically first failure.
pub fn validate(table: &PermTable) -> Validation {
    let n = table.n();
    for s in 0..n {
        for t in 0..n {
            let st = table.psi(table.star(s, t));
            let ts = table.psi(table.star(t, s));
            for u in 0..n {
                let left = st.apply(table.star(s, u));
                let right = ts.apply(table.star(t, u));
                if left != right {
                    return Validation::Invalid(Witness {
                        s: s + 1,
                        t: t + 1,
                        u: u + 1,
                        left: left + 1,
                        right: right + 1,
                    });
                }
            }
        }
    }
    Validation::Valid
}

/// Validates raw 1-based one-line rows.
pub fn validate_rows(rows: &[Vec<usize>]) -> Result<Validation> {
    Ok(validate(&PermTable::from_one_line_rows(rows)?))
}

/// A finite cycle set; the table is known to satisfy the cycle-set law.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleSet {
    table: PermTable,
}

impl CycleSet {
    pub fn new(table: PermTable) -> Result<Self> {
        match validate(&table) {
            Validation::Valid => Ok(CycleSet { table }),
            Validation::Invalid(w) => Err(Error::InvalidCycleSet(w)),
        }
    }

    pub(crate) fn new_unchecked(table: PermTable) -> Self {
        debug_assert!(validate(&table).is_valid());
        CycleSet { table }
    }

    pub fn from_cycle_strings(n: usize, rows: &[&str]) -> Result<Self> {
        Self::new(PermTable::from_cycle_strings(n, rows)?)
    }

    /// `s_i * s_j = s_j`.
    pub fn trivial(n: usize) -> Self {
        CycleSet {
            table: PermTable {
                rows: vec![Permutation::identity(n); n],
            },
        }
    }

    /// `ψ(s_i) = (1 2 … n)` for every `i`.
    pub fn cyclic(n: usize) -> Self {
        let sigma = Permutation::from_images((0..n).map(|i| (i + 1) % n).collect())
            .expect("rotation is a bijection");
        CycleSet {
            table: PermTable {
                rows: vec![sigma; n],
            },
        }
    }

    pub fn table(&self) -> &PermTable {
        &self.table
    }

    pub fn into_table(self) -> PermTable {
        self.table
    }
}

impl Deref for CycleSet {
    type Target = PermTable;

    fn deref(&self) -> &PermTable {
        &self.table
    }
}

impl fmt::Debug for CycleSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycleSet{:?}", self.table)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagonalMap {
    /// `T(i) = ψ(s_i)(i)`.
    pub t: Permutation,
    pub order: u64,
    pub square_free: bool,
}

/// The diagonal map `s ↦ s*s`. Fails if it is not injective, which cannot
/// happen for a genuine cycle set.
pub fn diagonal_map(table: &PermTable) -> Result<DiagonalMap> {
    let n = table.n();
    let mut preimage = vec![usize::MAX; n];
    let mut images = Vec::with_capacity(n);
    for i in 0..n {
        let ti = table.star(i, i);
        if preimage[ti] != usize::MAX {
            return Err(Error::NonDegeneracyViolation {
                i: preimage[ti] + 1,
                j: i + 1,
            });
        }
        preimage[ti] = i;
        images.push(ti);
    }
    let t = Permutation::from_images(images).expect("injective on a finite set");
    Ok(DiagonalMap {
        order: t.order(),
        square_free: t.is_identity(),
        t,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermGroupInfo {
    pub order: u64,
    pub abelian: bool,
    pub transitive: bool,
    /// Orbits, 0-based, each sorted, ordered by smallest element.
    pub orbits: Vec<Vec<usize>>,
    /// The group elements, sorted.
    pub elements: Vec<Permutation>,
}

/// Orbits of the group generated by the rows of `table`.
pub fn orbits(table: &PermTable) -> Vec<Vec<usize>> {
    let n = table.n();
    let mut label = vec![usize::MAX; n];
    let mut out = Vec::new();
    for start in 0..n {
        if label[start] != usize::MAX {
            continue;
        }
        let id = out.len();
        let mut orbit = vec![start];
        label[start] = id;
        let mut k = 0;
        while k < orbit.len() {
            let x = orbit[k];
            k += 1;
            for row in table.rows() {
                let y = row.apply(x);
                if label[y] == usize::MAX {
                    label[y] = id;
                    orbit.push(y);
                }
            }
        }
        orbit.sort_unstable();
        out.push(orbit);
    }
    out
}

/// Closure of `{ψ(s_1), …, ψ(s_n)}` under composition.
pub fn perm_group(table: &PermTable, element_cap: usize) -> Result<PermGroupInfo> {
    let n = table.n();
    let id = Permutation::identity(n);
    let mut seen: HashSet<Permutation> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(id.clone());
    queue.push_back(id);
    while let Some(g) = queue.pop_front() {
        for gen in table.rows() {
            let h = gen.compose(&g);
            if !seen.contains(&h) {
                if seen.len() >= element_cap {
                    return Err(Error::CapExceeded {
                        what: format!("permutation group order (at least {})", seen.len() + 1),
                        cap: element_cap as u64,
                    });
                }
                seen.insert(h.clone());
                queue.push_back(h);
            }
        }
    }
    let rows = table.rows();
    let abelian = rows
        .iter()
        .enumerate()
        .all(|(i, a)| rows[i + 1..].iter().all(|b| a.compose(b) == b.compose(a)));
    let orbits = orbits(table);
    let mut elements: Vec<Permutation> = seen.into_iter().collect();
    elements.sort();
    Ok(PermGroupInfo {
        order: elements.len() as u64,
        abelian,
        transitive: orbits.len() <= 1,
        orbits,
        elements,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    /// Original 0-based indices, increasing; position `k` becomes `s_{k+1}`.
    pub orbit: Vec<usize>,
    pub cycle_set: CycleSet,
}

/// Splits `s` along the orbits of its permutation group. A single component
/// means `s` is indecomposable.
pub fn decompose(s: &CycleSet) -> Vec<Component> {
    orbits(s)
        .into_iter()
        .map(|orbit| {
            let mut pos = vec![usize::MAX; s.n()];
            for (k, &x) in orbit.iter().enumerate() {
                pos[x] = k;
            }
            let rows = orbit
                .iter()
                .map(|&x| {
                    let images = orbit.iter().map(|&y| pos[s.star(x, y)]).collect();
                    Permutation::from_images(images).expect("orbits are invariant")
                })
                .collect();
            Component {
                cycle_set: CycleSet::new_unchecked(PermTable { rows }),
                orbit,
            }
        })
        .collect()
}

/// Whether `(s, t) ↦ (s*t, t*s)` is a bijection of `S × S`.
pub fn pairing_is_bijective(table: &PermTable) -> bool {
    let n = table.n();
    let mut hit = vec![false; n * n];
    for s in 0..n {
        for t in 0..n {
            let k = table.star(s, t) * n + table.star(t, s);
            if hit[k] {
                return false;
            }
            hit[k] = true;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::examples;

    #[test]
    fn ex1_is_valid() {
        assert!(validate(examples::ex1().table()).is_valid());
        assert!(validate(CycleSet::trivial(5).table()).is_valid());
        assert!(validate(CycleSet::cyclic(7).table()).is_valid());
    }

    #[test]
    fn zappa_candidate_is_invalid_at_1_2_1() {
        let w = match validate(&examples::zappa_candidate_n5()) {
            Validation::Invalid(w) => w,
            Validation::Valid => panic!("candidate must be invalid"),
        };
        assert_eq!((w.s, w.t, w.u, w.left, w.right), (1, 2, 1, 1, 4));
    }

    #[test]
    fn non_bijective_row_is_rejected() {
        let err = validate_rows(&[vec![1, 2], vec![1, 1]]).unwrap_err();
        assert_eq!(err, Error::NotAPermutation { row: 2, n: 2 });
        assert!(matches!(
            validate_rows(&[vec![1, 2], vec![1]]),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn diagonal_maps() {
        let triv = diagonal_map(CycleSet::trivial(4).table()).unwrap();
        assert!(triv.t.is_identity() && triv.square_free && triv.order == 1);

        let cyc = diagonal_map(CycleSet::cyclic(5).table()).unwrap();
        assert_eq!(cyc.t, Permutation::parse_cycles(5, "(12345)").unwrap());
        assert_eq!(cyc.order, 5);

        let ex1 = diagonal_map(examples::ex1().table()).unwrap();
        assert_eq!(ex1.t, Permutation::parse_cycles(4, "(12)").unwrap());
        assert_eq!(ex1.order, 2);
        assert!(!ex1.square_free);
    }

    #[test]
    fn diagonal_map_reports_collision() {
        // ψ(s_1) = ψ(s_2) = (12): T(1) = 2 = T(2)... a non-cycle-set table.
        let t = PermTable::from_cycle_strings(2, &["(12)", "id"]).unwrap();
        assert_eq!(
            diagonal_map(&t).unwrap_err(),
            Error::NonDegeneracyViolation { i: 1, j: 2 }
        );
    }

    #[test]
    fn permutation_groups() {
        let g = perm_group(CycleSet::cyclic(3).table(), DEFAULT_ELEMENT_CAP).unwrap();
        assert_eq!(g.order, 3);
        assert!(g.abelian && g.transitive);
        assert_eq!(g.orbits, vec![vec![0, 1, 2]]);

        let g = perm_group(examples::decomposable_n4().table(), DEFAULT_ELEMENT_CAP).unwrap();
        assert_eq!(g.orbits, vec![vec![0, 1], vec![2, 3]]);
        assert!(!g.transitive);

        let g = perm_group(examples::ex1().table(), DEFAULT_ELEMENT_CAP).unwrap();
        assert_eq!(g.order, 8);
        assert!(!g.abelian);

        assert!(matches!(
            perm_group(examples::ex1().table(), 5),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn decompositions() {
        let parts = decompose(&examples::decomposable_n4());
        assert_eq!(parts.len(), 2);
        assert_eq!(parts[0].orbit, vec![0, 1]);
        assert_eq!(parts[0].cycle_set, CycleSet::cyclic(2));
        // The second block acts trivially on {3, 4} with the table as given.
        assert_eq!(parts[1].orbit, vec![2, 3]);
        assert_eq!(parts[1].cycle_set, CycleSet::trivial(2));

        let parts = decompose(&CycleSet::trivial(3));
        assert_eq!(parts.len(), 3);
        assert!(parts.iter().all(|c| c.cycle_set == CycleSet::trivial(1)));

        assert_eq!(decompose(&examples::ex1()).len(), 1);
    }

    #[test]
    fn relabel_preserves_validity() {
        let tau = Permutation::parse_cycles(4, "(1342)").unwrap();
        let t = examples::ex1().table().relabel(&tau);
        assert!(validate(&t).is_valid());
        assert_eq!(t.relabel(&tau.inverse()), *examples::ex1().table());
    }

    #[test]
    fn pairing_map() {
        assert!(pairing_is_bijective(examples::ex1().table()));
        assert!(pairing_is_bijective(examples::exdec().table()));
    }
}

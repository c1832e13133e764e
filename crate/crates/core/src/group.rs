//! Finite groups stored as validated Cayley tables.
//!
//! Elements are indices `0..order`. The identity is always index 0; tables
//! supplied from outside are relabeled so that this holds.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest group order accepted unless overridden.
pub const DEFAULT_MAX_ORDER: usize = 128;

/// Environment variable that overrides [`DEFAULT_MAX_ORDER`].
pub const MAX_ORDER_ENV: &str = "SPACEFORM_MAX_ORDER";

/// The active order cap: `SPACEFORM_MAX_ORDER` if set to a positive integer,
/// otherwise [`DEFAULT_MAX_ORDER`].
pub fn max_order() -> usize {
    std::env::var(MAX_ORDER_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&v| v > 0)
        .unwrap_or(DEFAULT_MAX_ORDER)
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("invalid group order {order}: {reason}")]
    InvalidOrder { order: usize, reason: String },
    #[error("group order {order} exceeds the cap of {cap} (set {MAX_ORDER_ENV} to raise it)")]
    TooLarge { order: usize, cap: usize },
    #[error("malformed multiplication table: {0}")]
    Structure(String),
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("cannot read group file {path}: {reason}")]
    Io { path: String, reason: String },
    #[error("cannot parse group file: {0}")]
    Parse(String),
}

/// On-disk group description: `{ "order": m, "table": [[...], ...] }`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupFile {
    pub order: usize,
    pub table: Vec<Vec<usize>>,
}

/// A finite group given by its full multiplication table.
///
/// Immutable after construction; every constructor runs the Latin-square,
/// identity and exhaustive associativity checks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<usize>,
    inverses: Vec<usize>,
    orders: Vec<usize>,
}

impl FiniteGroup {
    /// The cyclic group `C_m` with `i·j = (i + j) mod m`.
    pub fn cyclic(m: usize) -> Result<Self, GroupError> {
        if m == 0 {
            return Err(GroupError::InvalidOrder {
                order: 0,
                reason: "a group needs at least one element".into(),
            });
        }
        check_cap(m)?;
        let rows = (0..m)
            .map(|i| (0..m).map(|j| (i + j) % m).collect())
            .collect();
        Self::from_table(rows)
    }

    /// The generalized quaternion (dicyclic) group of order `4k`, `k ≥ 2`,
    /// presented as `⟨x, y | x^{2k} = 1, y² = x^k, y x y⁻¹ = x⁻¹⟩`.
    ///
    /// Element `x^a y^b` has index `a + 2k·b`.
    pub fn generalized_quaternion(order: usize) -> Result<Self, GroupError> {
        if order % 4 != 0 || order < 8 {
            return Err(GroupError::InvalidOrder {
                order,
                reason: "generalized quaternion groups have order 4k with k >= 2".into(),
            });
        }
        check_cap(order)?;
        let k = order / 4;
        let n = 2 * k;
        let index = |a: usize, b: usize| a + n * b;
        let mut rows = vec![vec![0; order]; order];
        for (lhs, row) in rows.iter_mut().enumerate() {
            let (a, b) = (lhs % n, lhs / n);
            for (rhs, cell) in row.iter_mut().enumerate() {
                let (c, d) = (rhs % n, rhs / n);
                *cell = match (b, d) {
                    (0, _) => index((a + c) % n, d),
                    (1, 0) => index((a + n - c) % n, 1),
                    // x^a y x^c y = x^{a-c} y^2 = x^{a-c+k}
                    _ => index((a + n - c + k) % n, 0),
                };
            }
        }
        Self::from_table(rows)
    }

    /// Dihedral group of order `2m` (symmetries of an `m`-gon).
    pub fn dihedral(m: usize) -> Result<Self, GroupError> {
        Self::metacyclic(m, 2, m.saturating_sub(1))
    }

    /// `C_m ⋊ C_k` where the generator of `C_k` acts by `x ↦ x^r`.
    pub fn metacyclic(m: usize, k: usize, r: usize) -> Result<Self, GroupError> {
        let base = Self::cyclic(m)?;
        let images: Vec<usize> = (0..m).map(|x| (x * r) % m).collect();
        Self::semidirect_cyclic(&base, &images, k)
    }

    /// Direct product `G × H`; the pair `(a, b)` has index `a·|H| + b`.
    pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> Result<Self, GroupError> {
        let (gn, hn) = (g.order, h.order);
        let order = gn * hn;
        check_cap(order)?;
        let rows = (0..order)
            .map(|x| {
                (0..order)
                    .map(|y| g.mul(x / hn, y / hn) * hn + h.mul(x % hn, y % hn))
                    .collect()
            })
            .collect();
        Self::from_table(rows)
    }

    /// Semidirect product `N ⋊ C_k` where the generator of `C_k` acts on `N`
    /// through `automorphism` (given as an image array). The pair `(x, i)`
    /// has index `x + |N|·i`.
    ///
    /// The automorphism must have order dividing `k`; otherwise the result
    /// fails the group checks.
    pub fn semidirect_cyclic(
        base: &FiniteGroup,
        automorphism: &[usize],
        k: usize,
    ) -> Result<Self, GroupError> {
        let nn = base.order;
        if automorphism.len() != nn || automorphism.iter().any(|&v| v >= nn) {
            return Err(GroupError::Structure(
                "automorphism image array does not match the base group".into(),
            ));
        }
        if k == 0 {
            return Err(GroupError::InvalidOrder {
                order: 0,
                reason: "cyclic factor must be non-trivial in size".into(),
            });
        }
        let order = nn * k;
        check_cap(order)?;
        // powers[i][x] = φ^i(x)
        let mut powers = vec![(0..nn).collect::<Vec<_>>()];
        for i in 1..k {
            let prev = &powers[i - 1];
            powers.push(prev.iter().map(|&x| automorphism[x]).collect());
        }
        let rows = (0..order)
            .map(|lhs| {
                let (x1, i1) = (lhs % nn, lhs / nn);
                (0..order)
                    .map(|rhs| {
                        let (x2, i2) = (rhs % nn, rhs / nn);
                        base.mul(x1, powers[i1][x2]) + nn * ((i1 + i2) % k)
                    })
                    .collect()
            })
            .collect();
        Self::from_table(rows)
    }

    /// Validate a square table. Row `x`, column `y` holds `x·y`.
    ///
    /// The identity is moved to index 0 by swapping labels if needed.
    pub fn from_table(rows: Vec<Vec<usize>>) -> Result<Self, GroupError> {
        let n = rows.len();
        if n == 0 {
            return Err(GroupError::InvalidOrder {
                order: 0,
                reason: "empty table".into(),
            });
        }
        check_cap(n)?;
        for (x, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(GroupError::Structure(format!(
                    "row {x} has {} entries, expected {n}",
                    row.len()
                )));
            }
            if let Some(&bad) = row.iter().find(|&&v| v >= n) {
                return Err(GroupError::Structure(format!(
                    "entry {bad} in row {x} is out of range 0..{n}"
                )));
            }
        }
        check_latin(&rows)?;

        let identity = (0..n)
            .find(|&e| (0..n).all(|x| rows[e][x] == x && rows[x][e] == x))
            .ok_or_else(|| GroupError::NotAGroup("no two-sided identity element".into()))?;

        let mut table = vec![0; n * n];
        let relabel = |v: usize| {
            if v == identity {
                0
            } else if v == 0 {
                identity
            } else {
                v
            }
        };
        for x in 0..n {
            for y in 0..n {
                table[x * n + y] = relabel(rows[relabel(x)][relabel(y)]);
            }
        }

        for x in 0..n {
            for y in 0..n {
                let xy = table[x * n + y];
                for z in 0..n {
                    let yz = table[y * n + z];
                    if table[xy * n + z] != table[x * n + yz] {
                        return Err(GroupError::NotAGroup(format!(
                            "associativity fails for ({x}, {y}, {z})"
                        )));
                    }
                }
            }
        }

        let inverses = (0..n)
            .map(|x| {
                (0..n)
                    .find(|&y| table[x * n + y] == 0)
                    .expect("latin square has a solution of x·y = e")
            })
            .collect();
        let mut group = FiniteGroup {
            order: n,
            table,
            inverses,
            orders: Vec::new(),
        };
        group.orders = (0..n).map(|x| group.compute_order(x)).collect();
        Ok(group)
    }

    pub fn from_group_file(file: GroupFile) -> Result<Self, GroupError> {
        if file.order != file.table.len() {
            return Err(GroupError::Structure(format!(
                "declared order {} but table has {} rows",
                file.order,
                file.table.len()
            )));
        }
        Self::from_table(file.table)
    }

    pub fn from_json_str(json: &str) -> Result<Self, GroupError> {
        let file: GroupFile =
            serde_json::from_str(json).map_err(|e| GroupError::Parse(e.to_string()))?;
        Self::from_group_file(file)
    }

    pub fn from_json_file(path: impl AsRef<Path>) -> Result<Self, GroupError> {
        let path = path.as_ref();
        let text = fs::read_to_string(path).map_err(|e| GroupError::Io {
            path: path.display().to_string(),
            reason: e.to_string(),
        })?;
        Self::from_json_str(&text)
    }

    pub fn to_group_file(&self) -> GroupFile {
        GroupFile {
            order: self.order,
            table: self.rows(),
        }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.table[x * self.order + y]
    }

    #[inline]
    pub fn inverse(&self, x: usize) -> usize {
        self.inverses[x]
    }

    pub fn inverses(&self) -> &[usize] {
        &self.inverses
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.order).map(<[usize]>::to_vec).collect()
    }

    pub fn pow(&self, x: usize, exp: usize) -> usize {
        let (mut acc, mut base, mut e) = (0, x, exp);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Least `t ≥ 1` with `x^t = e`. Panics if `x` is out of range.
    pub fn element_order(&self, x: usize) -> usize {
        self.orders[x]
    }

    pub fn element_orders(&self) -> &[usize] {
        &self.orders
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|x| (x + 1..self.order).all(|y| self.mul(x, y) == self.mul(y, x)))
    }

    /// Smallest element of order `|G|`, if the group is cyclic.
    pub fn generator(&self) -> Option<usize> {
        self.orders.iter().position(|&o| o == self.order)
    }

    pub fn is_cyclic(&self) -> bool {
        self.generator().is_some()
    }

    /// Exponent: lcm of the element orders.
    pub fn exponent(&self) -> usize {
        self.orders
            .iter()
            .fold(1, |acc, &o| num_integer::lcm(acc, o))
    }

    /// Per-prime count of solutions to `x^p = e`; passes iff every count is
    /// at most `p`. Necessary (not sufficient) for a free action on a sphere.
    pub fn rank_one_check(&self) -> AdmissibilityReport {
        let counts: Vec<PrimeCount> = prime_divisors(self.order)
            .into_iter()
            .map(|p| PrimeCount {
                prime: p,
                solutions: self.elements().filter(|&x| self.pow(x, p) == 0).count(),
            })
            .collect();
        let failing_primes: Vec<usize> = counts
            .iter()
            .filter(|c| c.solutions > c.prime)
            .map(|c| c.prime)
            .collect();
        AdmissibilityReport {
            order: self.order,
            passed: failing_primes.is_empty(),
            counts,
            failing_primes,
        }
    }

    /// Re-run all structural checks on the stored table.
    pub fn verify(&self) -> Result<(), GroupError> {
        let rebuilt = Self::from_table(self.rows())?;
        if rebuilt != *self {
            return Err(GroupError::NotAGroup("identity is not at index 0".into()));
        }
        for x in self.elements() {
            if self.mul(x, self.inverse(x)) != 0 || self.mul(self.inverse(x), x) != 0 {
                return Err(GroupError::NotAGroup(format!("bad inverse for {x}")));
            }
        }
        Ok(())
    }

    fn compute_order(&self, x: usize) -> usize {
        let mut t = 1;
        let mut acc = x;
        while acc != 0 {
            acc = self.mul(acc, x);
            t += 1;
        }
        t
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeCount {
    pub prime: usize,
    pub solutions: usize,
}

/// Result of the rank-one diagnostic.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdmissibilityReport {
    pub order: usize,
    pub passed: bool,
    pub counts: Vec<PrimeCount>,
    pub failing_primes: Vec<usize>,
}

fn check_cap(order: usize) -> Result<(), GroupError> {
    let cap = max_order();
    if order > cap {
        return Err(GroupError::TooLarge { order, cap });
    }
    Ok(())
}

fn check_latin(rows: &[Vec<usize>]) -> Result<(), GroupError> {
    let n = rows.len();
    let mut seen = vec![false; n];
    for (x, row) in rows.iter().enumerate() {
        seen.fill(false);
        for &v in row {
            if std::mem::replace(&mut seen[v], true) {
                return Err(GroupError::Structure(format!(
                    "row {x} repeats {v}; table is not a Latin square"
                )));
            }
        }
    }
    for y in 0..n {
        seen.fill(false);
        for row in rows {
            let v = row[y];
            if std::mem::replace(&mut seen[v], true) {
                return Err(GroupError::Structure(format!(
                    "column {y} repeats {v}; table is not a Latin square"
                )));
            }
        }
    }
    Ok(())
}

pub(crate) fn prime_divisors(mut n: usize) -> Vec<usize> {
    let mut primes = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            primes.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        primes.push(n);
    }
    primes
}

#[cfg(test)]
mod tests {
    use super::*;

    fn klein() -> FiniteGroup {
        FiniteGroup::from_table(vec![
            vec![0, 1, 2, 3],
            vec![1, 0, 3, 2],
            vec![2, 3, 0, 1],
            vec![3, 2, 1, 0],
        ])
        .unwrap()
    }

    #[test]
    fn cyclic_small_tables() {
        assert_eq!(FiniteGroup::cyclic(1).unwrap().rows(), vec![vec![0]]);
        assert_eq!(
            FiniteGroup::cyclic(2).unwrap().rows(),
            vec![vec![0, 1], vec![1, 0]]
        );
        assert!(matches!(
            FiniteGroup::cyclic(0),
            Err(GroupError::InvalidOrder { .. })
        ));
    }

    #[test]
    fn cyclic_twelve_orders() {
        let g = FiniteGroup::cyclic(12).unwrap();
        assert_eq!(g.element_order(1), 12);
        assert_eq!(g.element_order(4), 3);
        assert_eq!(g.element_order(8), 3);
        assert_eq!(g.element_order(0), 1);
    }

    #[test]
    fn klein_is_abelian_exponent_two() {
        let g = klein();
        assert!(g.is_abelian());
        assert_eq!(g.exponent(), 2);
        assert!(!g.is_cyclic());
    }

    #[test]
    fn identity_is_relabeled_to_zero() {
        // C_3 with identity stored at label 2
        let g = FiniteGroup::from_table(vec![vec![1, 2, 0], vec![2, 0, 1], vec![0, 1, 2]]).unwrap();
        for x in g.elements() {
            assert_eq!(g.mul(0, x), x);
            assert_eq!(g.mul(x, 0), x);
        }
        g.verify().unwrap();
    }

    #[test]
    fn non_latin_rejected() {
        let err = FiniteGroup::from_table(vec![vec![0, 1], vec![1, 1]]).unwrap_err();
        assert!(matches!(err, GroupError::Structure(_)));
    }

    #[test]
    fn missing_identity_rejected() {
        // no row equals [0, 1, 2]
        let err =
            FiniteGroup::from_table(vec![vec![1, 0, 2], vec![0, 2, 1], vec![2, 1, 0]]).unwrap_err();
        assert!(matches!(err, GroupError::NotAGroup(_)), "{err}");
    }

    #[test]
    fn non_associative_loop_rejected() {
        // Latin square with identity 0 where every element squares to 0.
        // The only group of order 5 is cyclic, so associativity must fail.
        let rows = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        check_latin(&rows).unwrap();
        let err = FiniteGroup::from_table(rows).unwrap_err();
        assert!(matches!(err, GroupError::NotAGroup(ref m) if m.contains("associativity")));
    }

    #[test]
    fn quaternion_eight() {
        let q8 = FiniteGroup::generalized_quaternion(8).unwrap();
        assert!(!q8.is_abelian());
        let involutions = q8.elements().filter(|&x| q8.element_order(x) == 2).count();
        assert_eq!(involutions, 1);
        assert!(matches!(
            FiniteGroup::generalized_quaternion(6),
            Err(GroupError::InvalidOrder { .. })
        ));
        assert!(matches!(
            FiniteGroup::generalized_quaternion(4),
            Err(GroupError::InvalidOrder { .. })
        ));
    }

    #[test]
    fn rank_one_examples() {
        let c12 = FiniteGroup::cyclic(12).unwrap().rank_one_check();
        assert!(c12.passed);
        assert_eq!(
            c12.counts,
            vec![
                PrimeCount { prime: 2, solutions: 2 },
                PrimeCount { prime: 3, solutions: 3 }
            ]
        );

        let k4 = klein().rank_one_check();
        assert!(!k4.passed);
        assert_eq!(k4.failing_primes, vec![2]);
        assert_eq!(k4.counts[0].solutions, 4);

        let q8 = FiniteGroup::generalized_quaternion(8).unwrap().rank_one_check();
        assert!(q8.passed);
        assert_eq!(q8.counts[0].solutions, 2);

        let q16 = FiniteGroup::generalized_quaternion(16).unwrap().rank_one_check();
        assert!(q16.passed);
        assert_eq!(q16.counts[0].solutions, 2);

        let c3 = FiniteGroup::cyclic(3).unwrap();
        let c3c3 = FiniteGroup::direct_product(&c3, &c3).unwrap().rank_one_check();
        assert!(!c3c3.passed);
        assert_eq!(c3c3.counts[0].solutions, 9);
    }

    #[test]
    fn cap_is_enforced() {
        let big = DEFAULT_MAX_ORDER + 1;
        if max_order() == DEFAULT_MAX_ORDER {
            assert!(matches!(
                FiniteGroup::cyclic(big),
                Err(GroupError::TooLarge { .. })
            ));
        }
    }

    #[test]
    fn group_file_order_mismatch() {
        let err = FiniteGroup::from_json_str(r#"{"order": 3, "table": [[0,1],[1,0]]}"#).unwrap_err();
        assert!(matches!(err, GroupError::Structure(_)));
        let ok = FiniteGroup::from_json_str(r#"{"order": 2, "table": [[0,1],[1,0]]}"#).unwrap();
        assert_eq!(ok.order(), 2);
    }

    #[test]
    fn semidirect_builds_dihedral() {
        let d4 = FiniteGroup::dihedral(4).unwrap();
        assert_eq!(d4.order(), 8);
        assert!(!d4.is_abelian());
        let involutions = d4.elements().filter(|&x| d4.element_order(x) == 2).count();
        assert_eq!(involutions, 5);
    }
}

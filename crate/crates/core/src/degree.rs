//! The degree homomorphism `d: End(G) → (Z/|G|)_×`.
//!
//! For cyclic groups `d(r) = r^{n+1}`. Other groups need a user-supplied table,
//! which is accepted only after the monoid-homomorphism laws are checked.

use std::collections::BTreeMap;
use std::fmt;
use std::fs;
use std::path::Path;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::endo::EndomorphismMonoid;

/// A residue class mod `modulus`, stored as its least non-negative
/// representative.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Residue {
    value: u64,
    modulus: u64,
}

impl Residue {
    /// Panics if `modulus` is zero.
    pub fn new(value: i64, modulus: u64) -> Self {
        assert!(modulus > 0, "residue modulus must be positive");
        let value = i128::from(value).rem_euclid(i128::from(modulus)) as u64;
        Residue { value, modulus }
    }

    pub fn from_u64(value: u64, modulus: u64) -> Self {
        assert!(modulus > 0, "residue modulus must be positive");
        Residue {
            value: value % modulus,
            modulus,
        }
    }

    pub fn from_bigint(value: &BigInt, modulus: u64) -> Self {
        assert!(modulus > 0, "residue modulus must be positive");
        let r = value.mod_floor(&BigInt::from(modulus));
        Residue {
            value: r.to_u64().expect("reduced residue fits in u64"),
            modulus,
        }
    }

    /// The class of 1 (which is 0 when the modulus is 1).
    pub fn one(modulus: u64) -> Self {
        Self::from_u64(1, modulus)
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn mul(self, other: Residue) -> Residue {
        debug_assert_eq!(self.modulus, other.modulus);
        let v = (u128::from(self.value) * u128::from(other.value)) % u128::from(self.modulus);
        Residue {
            value: v as u64,
            modulus: self.modulus,
        }
    }

    pub fn is_unit(&self) -> bool {
        self.value.gcd(&self.modulus) == 1
    }

    /// Whether this is the class of `+1` or `-1`.
    pub fn is_sign(&self) -> bool {
        self.value == 1 % self.modulus || self.value == self.modulus - 1
    }

    /// Representative of least absolute value; ties go to the positive one.
    pub fn least_abs(&self) -> i128 {
        let v = i128::from(self.value);
        let m = i128::from(self.modulus);
        if m - v < v {
            v - m
        } else {
            v
        }
    }

    pub fn contains(&self, k: &BigInt) -> bool {
        Residue::from_bigint(k, self.modulus) == *self
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}", self.value, self.modulus)
    }
}

/// `base^exp mod modulus` by square-and-multiply.
pub fn mod_pow(base: u64, mut exp: u64, modulus: u64) -> u64 {
    assert!(modulus > 0);
    let m = u128::from(modulus);
    let mut acc: u128 = 1 % m;
    let mut b = u128::from(base) % m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

/// `d(r) = r^{n+1} mod m` for the endomorphism `x ↦ rx` of `C_m`.
pub fn d_cyclic(r: u64, n: u64, m: u64) -> Residue {
    Residue::from_u64(mod_pow(r, n + 1, m), m)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    BuiltinCyclic,
    UserSupplied,
}

/// One broken law, with the endomorphism indices that witness it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "law", rename_all = "kebab-case")]
pub enum LawViolation {
    /// `d(id) ≠ 1`.
    Identity { index: usize, value: u64 },
    /// `d(a∘b) ≠ d(a)·d(b)`.
    Multiplicativity {
        left: usize,
        right: usize,
        composite: usize,
        left_value: u64,
        right_value: u64,
        composite_value: u64,
        product: u64,
    },
    /// An automorphism sent to a non-unit.
    NonUnit { index: usize, value: u64 },
}

impl fmt::Display for LawViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LawViolation::Identity { index, value } => {
                write!(f, "d(identity = #{index}) = {value}, expected 1")
            }
            LawViolation::Multiplicativity {
                left,
                right,
                composite,
                left_value,
                right_value,
                composite_value,
                product,
            } => write!(
                f,
                "d(#{left} ∘ #{right} = #{composite}) = {composite_value} but d(#{left})·d(#{right}) = {left_value}·{right_value} = {product}"
            ),
            LawViolation::NonUnit { index, value } => {
                write!(f, "automorphism #{index} has non-unit degree {value}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub passed: bool,
    /// First witness found for each failed law.
    pub violations: Vec<LawViolation>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DegreeError {
    #[error("no built-in degree map for the non-cyclic group of order {order}; supply a d-table")]
    UnsupportedGroup { order: usize },
    #[error("d-table is missing endomorphism indices {missing:?}")]
    Incomplete { missing: Vec<usize> },
    #[error("d-table is not a monoid homomorphism: {0}")]
    NotAHomomorphism(LawViolation),
    #[error("d-table does not send the identity to 1: {0}")]
    IdentityViolation(LawViolation),
    #[error("invalid d-table: {0}")]
    UnitViolation(LawViolation),
    #[error("invalid d-table: {0}")]
    InvalidTable(String),
    #[error("d-table was written for n = {table} but n = {requested} was requested")]
    DimensionMismatch { table: u64, requested: u64 },
    #[error("cannot read d-table {path}: {reason}")]
    Io { path: String, reason: String },
    #[error("cannot parse d-table: {0}")]
    Parse(String),
}

impl DegreeError {
    pub fn witness(&self) -> Option<&LawViolation> {
        match self {
            DegreeError::NotAHomomorphism(w)
            | DegreeError::IdentityViolation(w)
            | DegreeError::UnitViolation(w) => Some(w),
            _ => None,
        }
    }
}

/// On-disk d-table: `{ "n": n, "values": { "<endo_index>": residue, ... } }`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeTable {
    pub n: u64,
    pub values: BTreeMap<String, i64>,
}

impl DegreeTable {
    pub fn from_values(n: u64, values: &[i64]) -> Self {
        DegreeTable {
            n,
            values: values
                .iter()
                .enumerate()
                .map(|(i, &v)| (i.to_string(), v))
                .collect(),
        }
    }

    pub fn from_json_str(json: &str) -> Result<Self, DegreeError> {
        serde_json::from_str(json).map_err(|e| DegreeError::Parse(e.to_string()))
    }

    pub fn from_json_file(path: impl AsRef<Path>) -> Result<Self, DegreeError> {
        let path = path.as_ref();
        let text = fs::read_to_string(path).map_err(|e| DegreeError::Io {
            path: path.display().to_string(),
            reason: e.to_string(),
        })?;
        Self::from_json_str(&text)
    }

    /// Normalized residues indexed by endomorphism, for `count` endomorphisms.
    pub fn resolve(&self, count: usize, modulus: u64) -> Result<Vec<Residue>, DegreeError> {
        let mut slots: Vec<Option<Residue>> = vec![None; count];
        for (key, &value) in &self.values {
            let idx: usize = key.trim().parse().map_err(|_| {
                DegreeError::InvalidTable(format!("key {key:?} is not an endomorphism index"))
            })?;
            if idx >= count {
                return Err(DegreeError::InvalidTable(format!(
                    "endomorphism index {idx} out of range (group has {count} endomorphisms)"
                )));
            }
            if slots[idx].replace(Residue::new(value, modulus)).is_some() {
                return Err(DegreeError::InvalidTable(format!(
                    "endomorphism index {idx} listed twice"
                )));
            }
        }
        let missing: Vec<usize> = slots
            .iter()
            .enumerate()
            .filter(|(_, s)| s.is_none())
            .map(|(i, _)| i)
            .collect();
        if !missing.is_empty() {
            return Err(DegreeError::Incomplete { missing });
        }
        Ok(slots.into_iter().flatten().collect())
    }
}

/// The map `d` for a fixed group and sphere dimension `2n+1`.
#[derive(Debug, Clone)]
pub struct DegreeHom {
    endos: Arc<EndomorphismMonoid>,
    n: u64,
    values: Vec<Residue>,
    provenance: Provenance,
}

impl DegreeHom {
    /// Wrap a value table without checking any law. Use
    /// [`validate_degree_hom`] or [`build_degree_hom`] to certify it.
    pub fn unvalidated(
        endos: Arc<EndomorphismMonoid>,
        n: u64,
        values: Vec<Residue>,
        provenance: Provenance,
    ) -> Self {
        assert_eq!(values.len(), endos.len(), "one value per endomorphism");
        DegreeHom {
            endos,
            n,
            values,
            provenance,
        }
    }

    pub fn endomorphisms(&self) -> &Arc<EndomorphismMonoid> {
        &self.endos
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn modulus(&self) -> u64 {
        self.endos.group().order() as u64
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    pub fn values(&self) -> &[Residue] {
        &self.values
    }

    /// Panics if `alpha` is out of range.
    #[inline]
    pub fn value(&self, alpha: usize) -> Residue {
        self.values[alpha]
    }

    pub fn to_table(&self) -> DegreeTable {
        DegreeTable {
            n: self.n,
            values: self
                .values
                .iter()
                .enumerate()
                .map(|(i, r)| (i.to_string(), r.value() as i64))
                .collect(),
        }
    }

    pub fn validate(&self) -> ValidationReport {
        validate_degree_hom(self)
    }
}

/// Build `d` for `endos`. Cyclic groups use `r ↦ r^{n+1}` unless a table is
/// supplied; non-cyclic groups require one.
pub fn build_degree_hom(
    endos: Arc<EndomorphismMonoid>,
    n: u64,
    user_table: Option<&DegreeTable>,
) -> Result<DegreeHom, DegreeError> {
    let modulus = endos.group().order() as u64;
    let (values, provenance) = match user_table {
        Some(table) => {
            if table.n != n {
                return Err(DegreeError::DimensionMismatch {
                    table: table.n,
                    requested: n,
                });
            }
            (table.resolve(endos.len(), modulus)?, Provenance::UserSupplied)
        }
        None => {
            let residues = endos.cyclic_residues().ok_or(DegreeError::UnsupportedGroup {
                order: endos.group().order(),
            })?;
            let values = residues
                .iter()
                .map(|&r| d_cyclic(r, n, modulus))
                .collect();
            (values, Provenance::BuiltinCyclic)
        }
    };
    let hom = DegreeHom::unvalidated(endos, n, values, provenance);
    let report = validate_degree_hom(&hom);
    if let Some(first) = report.violations.into_iter().next() {
        return Err(match first {
            LawViolation::Identity { .. } => DegreeError::IdentityViolation(first),
            LawViolation::Multiplicativity { .. } => DegreeError::NotAHomomorphism(first),
            LawViolation::NonUnit { .. } => DegreeError::UnitViolation(first),
        });
    }
    Ok(hom)
}

/// Check `d(id) = 1`, `d(a∘b) = d(a)d(b)` on all pairs, and that every
/// automorphism lands in the units. Reports the first witness per law.
pub fn validate_degree_hom(d: &DegreeHom) -> ValidationReport {
    let endos = &d.endos;
    let modulus = d.modulus();
    let mut violations = Vec::new();

    let id = endos.identity_index();
    if d.values[id] != Residue::one(modulus) {
        violations.push(LawViolation::Identity {
            index: id,
            value: d.values[id].value(),
        });
    }

    let n = endos.len();
    'outer: for a in 0..n {
        for b in 0..n {
            let c = endos.compose_index(a, b);
            let product = d.values[a].mul(d.values[b]);
            if d.values[c] != product {
                violations.push(LawViolation::Multiplicativity {
                    left: a,
                    right: b,
                    composite: c,
                    left_value: d.values[a].value(),
                    right_value: d.values[b].value(),
                    composite_value: d.values[c].value(),
                    product: product.value(),
                });
                break 'outer;
            }
        }
    }

    if let Some(aut) = endos
        .automorphisms()
        .find(|a| !d.values[a.index()].is_unit())
    {
        violations.push(LawViolation::NonUnit {
            index: aut.index(),
            value: d.values[aut.index()].value(),
        });
    }

    ValidationReport {
        passed: violations.is_empty(),
        violations,
    }
}

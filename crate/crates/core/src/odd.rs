//! The monoid `M(G,n)`: pairs `(α, k)` with `α ∈ End(G)` and an integer
//! degree `k ≡ d(α) mod |G|`, multiplied by `(α, k)(β, l) = (αβ, kl)`.
//!
//! Degrees are exact big integers and are never reduced: each coset
//! `M_α = d(α) + |G|Z` is infinite and distinct integers are distinct
//! elements.

use std::collections::{BTreeSet, HashMap};
use std::hash::{Hash, Hasher};
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::degree::{build_degree_hom, DegreeHom, Residue};
use crate::endo::EndomorphismMonoid;
use crate::group::FiniteGroup;

static NEXT_CONTEXT: AtomicU64 = AtomicU64::new(1);

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OddError {
    #[error("degree {degree} is not realizable over endomorphism #{alpha}: expected a degree ≡ {expected}")]
    NotRealizable {
        alpha: usize,
        degree: BigInt,
        expected: Residue,
    },
    #[error("endomorphism index {alpha} out of range (group has {count} endomorphisms)")]
    AlphaOutOfRange { alpha: usize, count: usize },
    #[error("elements belong to different monoids")]
    Domain,
    #[error("internal invariant breached: {0}")]
    Internal(String),
}

/// An element of `M_α ⊂ M(G,n)`; equivalently the homotopy class of a
/// self-map inducing `α` on `π₁` with mapping degree `k`.
///
/// Equality compares `(alpha, degree)` only.
#[derive(Debug, Clone, Serialize)]
pub struct SpaceFormElement {
    alpha: usize,
    #[serde(serialize_with = "crate::report::serialize_bigint")]
    degree: BigInt,
    #[serde(skip)]
    context: u64,
}

impl SpaceFormElement {
    pub fn alpha(&self) -> usize {
        self.alpha
    }

    pub fn degree(&self) -> &BigInt {
        &self.degree
    }
}

impl PartialEq for SpaceFormElement {
    fn eq(&self, other: &Self) -> bool {
        self.alpha == other.alpha && self.degree == other.degree
    }
}

impl Eq for SpaceFormElement {}

impl Hash for SpaceFormElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.alpha.hash(state);
        self.degree.hash(state);
    }
}

impl std::fmt::Display for SpaceFormElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(#{}, {})", self.alpha, self.degree)
    }
}

/// `M(G,n)` for a fixed group, dimension and validated degree map.
#[derive(Debug, Clone)]
pub struct SpaceFormMonoid {
    degree: DegreeHom,
    id: u64,
}

impl SpaceFormMonoid {
    /// Takes a degree map that has already been validated (see
    /// [`build_degree_hom`]).
    pub fn new(degree: DegreeHom) -> Self {
        SpaceFormMonoid {
            degree,
            id: NEXT_CONTEXT.fetch_add(1, Ordering::Relaxed),
        }
    }

    /// `M(C_m, n)` with the built-in `d(r) = r^{n+1}`.
    pub fn cyclic(m: usize, n: u64) -> Result<Self, crate::Error> {
        let group = Arc::new(FiniteGroup::cyclic(m)?);
        let endos = Arc::new(EndomorphismMonoid::enumerate(group)?);
        Ok(Self::new(build_degree_hom(endos, n, None)?))
    }

    pub fn degree_hom(&self) -> &DegreeHom {
        &self.degree
    }

    pub fn endomorphisms(&self) -> &Arc<EndomorphismMonoid> {
        self.degree.endomorphisms()
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        self.endomorphisms().group()
    }

    pub fn n(&self) -> u64 {
        self.degree.n()
    }

    pub fn modulus(&self) -> u64 {
        self.degree.modulus()
    }

    pub fn d(&self, alpha: usize) -> Residue {
        self.degree.value(alpha)
    }

    /// The element `(α, k)`, provided `k ≡ d(α) mod |G|`.
    pub fn element(&self, alpha: usize, k: impl Into<BigInt>) -> Result<SpaceFormElement, OddError> {
        let count = self.endomorphisms().len();
        if alpha >= count {
            return Err(OddError::AlphaOutOfRange { alpha, count });
        }
        let degree = k.into();
        let expected = self.d(alpha);
        if !expected.contains(&degree) {
            return Err(OddError::NotRealizable {
                alpha,
                degree,
                expected,
            });
        }
        Ok(SpaceFormElement {
            alpha,
            degree,
            context: self.id,
        })
    }

    /// `(id, 1)`.
    pub fn identity(&self) -> SpaceFormElement {
        SpaceFormElement {
            alpha: self.endomorphisms().identity_index(),
            degree: BigInt::one(),
            context: self.id,
        }
    }

    pub fn multiply(
        &self,
        x: &SpaceFormElement,
        y: &SpaceFormElement,
    ) -> Result<SpaceFormElement, OddError> {
        if x.context != self.id || y.context != self.id {
            return Err(OddError::Domain);
        }
        let alpha = self.endomorphisms().compose_index(x.alpha, y.alpha);
        let degree = &x.degree * &y.degree;
        if !self.d(alpha).contains(&degree) {
            return Err(OddError::Internal(format!(
                "product {x}·{y} left its coset; the degree map is not multiplicative"
            )));
        }
        Ok(SpaceFormElement {
            alpha,
            degree,
            context: self.id,
        })
    }

    /// True iff `α` is an automorphism and `k = ±1`.
    pub fn is_invertible(&self, x: &SpaceFormElement) -> bool {
        let automorphism = self
            .endomorphisms()
            .get(x.alpha)
            .is_some_and(|e| e.is_automorphism());
        automorphism && x.degree.abs().is_one()
    }

    /// The group of units `E(G,n)`.
    pub fn equivalence_group(&self) -> Result<EquivalenceGroup, OddError> {
        let mut elements = Vec::new();
        if self.modulus() <= 2 {
            elements.push(self.identity());
            elements.push(self.element(self.endomorphisms().identity_index(), -1)?);
        } else {
            for aut in self.endomorphisms().automorphisms() {
                for sign in [1i64, -1] {
                    if let Ok(e) = self.element(aut.index(), sign) {
                        elements.push(e);
                    }
                }
            }
        }
        EquivalenceGroup::from_elements(self, elements)
    }

    /// Number of automorphisms `α` with `d(α) ≡ ±1`.
    pub fn sign_automorphism_count(&self) -> usize {
        self.endomorphisms()
            .automorphisms()
            .filter(|a| self.d(a.index()).is_sign())
            .count()
    }

    /// `M(G,n)` is commutative exactly when `End(G)` is.
    pub fn is_abelian(&self) -> bool {
        self.endomorphisms().is_commutative()
    }

    /// Two endomorphism indices whose elements do not commute.
    pub fn non_commuting_pair(&self) -> Option<(usize, usize)> {
        self.endomorphisms().non_commuting_pair()
    }

    pub fn realizable_degrees(&self) -> RealizableDegrees {
        RealizableDegrees {
            modulus: self.modulus(),
            residues: self.degree.values().iter().map(Residue::value).collect(),
        }
    }

    /// Every `α` with `k ∈ M_α`.
    pub fn classes_containing(&self, k: &BigInt) -> Vec<usize> {
        let r = Residue::from_bigint(k, self.modulus());
        (0..self.endomorphisms().len())
            .filter(|&a| self.d(a) == r)
            .collect()
    }

    /// Least-absolute-value degree in `M_α` (ties toward positive).
    pub fn representative(&self, alpha: usize) -> SpaceFormElement {
        SpaceFormElement {
            alpha,
            degree: BigInt::from(self.d(alpha).least_abs()),
            context: self.id,
        }
    }

    /// Members of `M_α` with `|k| ≤ window`, ascending.
    pub fn coset_window(&self, alpha: usize, window: u64) -> Vec<SpaceFormElement> {
        let m = i128::from(self.modulus());
        let w = i128::from(window);
        let r = i128::from(self.d(alpha).value());
        // smallest k ≥ -w with k ≡ r
        let start = -w + (r + w).rem_euclid(m);
        (0..)
            .map(|i| start + i * m)
            .take_while(|&k| k <= w)
            .map(|k| SpaceFormElement {
                alpha,
                degree: BigInt::from(k),
                context: self.id,
            })
            .collect()
    }

    /// Every element with `|k| ≤ window`.
    pub fn elements_in_window(&self, window: u64) -> Vec<SpaceFormElement> {
        (0..self.endomorphisms().len())
            .flat_map(|a| self.coset_window(a, window))
            .collect()
    }

    /// Check closure of the window elements under multiply, in parallel.
    /// Returns the number of products formed.
    pub fn check_closure(&self, window: u64) -> Result<usize, OddError> {
        let elems = self.elements_in_window(window);
        elems
            .par_iter()
            .map(|x| {
                elems
                    .iter()
                    .try_fold(0usize, |acc, y| self.multiply(x, y).map(|_| acc + 1))
            })
            .try_reduce(|| 0, |a, b| Ok(a + b))
    }

    /// Closure over the window, plus associativity and two-sided identity on
    /// `triples` random triples drawn from the window (seeded, reproducible).
    pub fn check_axioms(&self, window: u64, triples: usize, seed: u64) -> Result<AxiomReport, OddError> {
        let closure_products = self.check_closure(window)?;
        let elems = self.elements_in_window(window);
        let id = self.identity();
        let mut rng = StdRng::seed_from_u64(seed);
        let mut failure = None;
        for _ in 0..triples {
            let x = &elems[rng.gen_range(0..elems.len())];
            let y = &elems[rng.gen_range(0..elems.len())];
            let z = &elems[rng.gen_range(0..elems.len())];
            let left = self.multiply(&self.multiply(x, y)?, z)?;
            let right = self.multiply(x, &self.multiply(y, z)?)?;
            if left != right {
                failure = Some(format!("({x}·{y})·{z} = {left} but {x}·({y}·{z}) = {right}"));
                break;
            }
            if self.multiply(x, &id)? != *x || self.multiply(&id, x)? != *x {
                failure = Some(format!("(id, 1) is not neutral for {x}"));
                break;
            }
        }
        Ok(AxiomReport {
            window,
            triples,
            closure_products,
            passed: failure.is_none(),
            failure,
        })
    }
}

/// Result of [`SpaceFormMonoid::check_axioms`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub window: u64,
    pub triples: usize,
    pub closure_products: usize,
    pub passed: bool,
    pub failure: Option<String>,
}

/// Residues `{d(α)}` together with the modulus; `k` is a realizable degree
/// iff `k mod |G|` lies in the set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RealizableDegrees {
    pub modulus: u64,
    pub residues: BTreeSet<u64>,
}

impl RealizableDegrees {
    pub fn contains(&self, k: &BigInt) -> bool {
        self.residues
            .contains(&Residue::from_bigint(k, self.modulus).value())
    }
}

/// `E(G,n)` with its Cayley table. Element 0 is the identity `(id, 1)`.
#[derive(Debug, Clone)]
pub struct EquivalenceGroup {
    elements: Vec<SpaceFormElement>,
    table: Vec<Vec<usize>>,
}

impl EquivalenceGroup {
    fn from_elements(
        monoid: &SpaceFormMonoid,
        mut elements: Vec<SpaceFormElement>,
    ) -> Result<Self, OddError> {
        let identity = monoid.identity();
        let pos = elements
            .iter()
            .position(|e| *e == identity)
            .ok_or_else(|| OddError::Internal("units do not contain (id, 1)".into()))?;
        elements.swap(0, pos);
        let index: HashMap<&SpaceFormElement, usize> =
            elements.iter().enumerate().map(|(i, e)| (e, i)).collect();
        let mut table = vec![vec![0; elements.len()]; elements.len()];
        for (i, x) in elements.iter().enumerate() {
            for (j, y) in elements.iter().enumerate() {
                let p = monoid.multiply(x, y)?;
                table[i][j] = *index.get(&p).ok_or_else(|| {
                    OddError::Internal(format!("units are not closed: {x}·{y} = {p}"))
                })?;
            }
        }
        for (i, row) in table.iter().enumerate() {
            if !row.contains(&0) {
                return Err(OddError::Internal(format!(
                    "unit {} has no inverse",
                    elements[i]
                )));
            }
        }
        Ok(EquivalenceGroup { elements, table })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[SpaceFormElement] {
        &self.elements
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn inverse(&self, i: usize) -> usize {
        self.table[i]
            .iter()
            .position(|&p| p == 0)
            .expect("every unit has an inverse")
    }

    pub fn element_orders(&self) -> Vec<usize> {
        (0..self.order())
            .map(|i| {
                let (mut acc, mut t) = (i, 1);
                while acc != 0 {
                    acc = self.table[acc][i];
                    t += 1;
                }
                t
            })
            .collect()
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|i| (0..n).all(|j| self.table[i][j] == self.table[j][i]))
    }

    /// The Cayley table as a [`FiniteGroup`].
    pub fn as_group(&self) -> FiniteGroup {
        FiniteGroup::from_table(self.table.clone())
            .expect("unit table is a group by construction")
    }
}

//! A second model of self-maps of lens spaces, used to cross-check
//! [`SpaceFormMonoid`].
//!
//! A homotopy class is the pair (map on `π₁`, degree); composition composes
//! the first and multiplies the second. Nothing here reuses the group,
//! endomorphism or degree modules: maps are raw image arrays of `x ↦ rx`,
//! `d` is computed by repeated multiplication, and membership in a window is
//! decided by walking the coset.

use std::collections::{HashMap, HashSet};

use num_bigint::BigInt;
use num_integer::Integer;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::odd::SpaceFormMonoid;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("the oracle models cyclic groups of order >= 1, got {0}")]
    InvalidModulus(u64),
    #[error("π₁ index {index} out of range ({count} maps)")]
    OutOfRange { index: usize, count: usize },
    #[error("degree {degree} is not realized by π₁ map #{index}")]
    NotRealizable { index: usize, degree: BigInt },
}

/// A self-map class: the induced map on `π₁` (by index) and the degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SelfMapClass {
    pub pi1: usize,
    pub degree: BigInt,
}

/// Self-map classes of `S^{2n+1}/C_m`.
#[derive(Debug, Clone)]
pub struct SelfMapModel {
    modulus: u64,
    n: u64,
    maps: Vec<Vec<u64>>,
    lookup: HashMap<Vec<u64>, usize>,
    top_degree: Vec<u64>,
}

impl SelfMapModel {
    pub fn cyclic(m: u64, n: u64) -> Result<Self, OracleError> {
        if m == 0 {
            return Err(OracleError::InvalidModulus(m));
        }
        let mut maps: Vec<Vec<u64>> = (0..m)
            .map(|r| (0..m).map(|x| (r * x) % m).collect())
            .collect();
        maps.sort();
        let lookup = maps
            .iter()
            .enumerate()
            .map(|(i, img)| (img.clone(), i))
            .collect();
        let top_degree = maps
            .iter()
            .map(|img| {
                // the multiplier r is the image of the generator 1
                let r = if m == 1 { 0 } else { img[1] };
                let mut acc = 1 % m;
                for _ in 0..=n {
                    acc = acc * r % m;
                }
                acc
            })
            .collect();
        Ok(SelfMapModel {
            modulus: m,
            n,
            maps,
            lookup,
            top_degree,
        })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn map_count(&self) -> usize {
        self.maps.len()
    }

    pub fn images(&self, index: usize) -> &[u64] {
        &self.maps[index]
    }

    pub fn identity(&self) -> SelfMapClass {
        let id: Vec<u64> = (0..self.modulus).collect();
        SelfMapClass {
            pi1: self.lookup[&id],
            degree: BigInt::from(1),
        }
    }

    /// Residue forced on the degree by the `π₁` map.
    pub fn forced_residue(&self, index: usize) -> u64 {
        self.top_degree[index]
    }

    pub fn is_valid(&self, class: &SelfMapClass) -> bool {
        class.pi1 < self.maps.len()
            && (&class.degree - BigInt::from(self.top_degree[class.pi1]))
                .is_multiple_of(&BigInt::from(self.modulus))
    }

    pub fn class(&self, pi1: usize, degree: impl Into<BigInt>) -> Result<SelfMapClass, OracleError> {
        let class = SelfMapClass {
            pi1,
            degree: degree.into(),
        };
        if pi1 >= self.maps.len() {
            return Err(OracleError::OutOfRange {
                index: pi1,
                count: self.maps.len(),
            });
        }
        if !self.is_valid(&class) {
            return Err(OracleError::NotRealizable {
                index: pi1,
                degree: class.degree,
            });
        }
        Ok(class)
    }

    /// `f ∘ g`: compose on `π₁`, multiply degrees.
    pub fn compose_selfmaps(
        &self,
        f: &SelfMapClass,
        g: &SelfMapClass,
    ) -> Result<SelfMapClass, OracleError> {
        let count = self.maps.len();
        for c in [f, g] {
            if c.pi1 >= count {
                return Err(OracleError::OutOfRange { index: c.pi1, count });
            }
        }
        let (outer, inner) = (&self.maps[f.pi1], &self.maps[g.pi1]);
        let composite: Vec<u64> = inner.iter().map(|&x| outer[x as usize]).collect();
        Ok(SelfMapClass {
            pi1: self.lookup[&composite],
            degree: &f.degree * &g.degree,
        })
    }

    /// Degrees in `[-window, window]` realized over `π₁` map `index`,
    /// found by stepping through the coset from its residue.
    pub fn coset_scan(&self, index: usize, window: u64) -> Vec<i64> {
        let m = self.modulus as i64;
        let w = window as i64;
        let mut k = self.top_degree[index] as i64;
        while k - m >= -w {
            k -= m;
        }
        while k < -w {
            k += m;
        }
        let mut out = Vec::new();
        while k <= w {
            out.push(k);
            k += m;
        }
        out
    }
}

/// Outcome of comparing the two models on one cyclic context.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossCheckReport {
    pub modulus: u64,
    pub n: u64,
    pub window: u64,
    pub passed: bool,
    pub endomorphisms: usize,
    pub candidates_checked: usize,
    pub valid_elements: usize,
    pub products_checked: usize,
    pub discrepancy: Option<String>,
}

/// Compare `M(C_m, n)` against the self-map model for all degrees with
/// `|k| ≤ window`: the same pairs must be valid, and products must agree.
pub fn cross_check(m: u64, n: u64, window: u64) -> Result<CrossCheckReport, crate::Error> {
    let monoid = SpaceFormMonoid::cyclic(m as usize, n)?;
    let model = SelfMapModel::cyclic(m, n)?;
    let mut report = CrossCheckReport {
        modulus: m,
        n,
        window,
        passed: false,
        endomorphisms: monoid.endomorphisms().len(),
        candidates_checked: 0,
        valid_elements: 0,
        products_checked: 0,
        discrepancy: None,
    };

    // π₁ maps are identified by their image arrays.
    let endos = monoid.endomorphisms();
    if endos.len() != model.map_count() {
        report.discrepancy = Some(format!(
            "End(C_{m}) has {} elements but the model has {} maps",
            endos.len(),
            model.map_count()
        ));
        return Ok(report);
    }
    let mut to_model = Vec::with_capacity(endos.len());
    for e in endos.iter() {
        let images: Vec<u64> = e.images().iter().map(|&x| x as u64).collect();
        match model.lookup.get(&images) {
            Some(&j) => to_model.push(j),
            None => {
                report.discrepancy = Some(format!(
                    "endomorphism #{} has no counterpart in the model",
                    e.index()
                ));
                return Ok(report);
            }
        }
    }
    let to_monoid: HashMap<usize, usize> =
        to_model.iter().enumerate().map(|(i, &j)| (j, i)).collect();

    let w = window as i64;
    let mut valid = Vec::new();
    for (alpha, &j) in to_model.iter().enumerate() {
        let scanned: HashSet<i64> = model.coset_scan(j, window).into_iter().collect();
        for k in -w..=w {
            report.candidates_checked += 1;
            let primary = monoid.element(alpha, k);
            let oracle = scanned.contains(&k);
            if primary.is_ok() != oracle {
                report.discrepancy = Some(format!(
                    "(#{alpha}, {k}): monoid says {}, model says {}",
                    if primary.is_ok() { "valid" } else { "invalid" },
                    if oracle { "valid" } else { "invalid" }
                ));
                return Ok(report);
            }
            if let Ok(x) = primary {
                valid.push((x, SelfMapClass { pi1: j, degree: BigInt::from(k) }));
            }
        }
    }
    report.valid_elements = valid.len();

    let outcome: Result<usize, String> = valid
        .par_iter()
        .map(|(x, f)| {
            let mut count = 0usize;
            for (y, g) in &valid {
                let p = monoid.multiply(x, y).map_err(|e| e.to_string())?;
                let q = model.compose_selfmaps(f, g).map_err(|e| e.to_string())?;
                if to_monoid[&q.pi1] != p.alpha() || &q.degree != p.degree() {
                    return Err(format!(
                        "{x}·{y} = {p} in the monoid but the model gives (π₁ #{}, {})",
                        q.pi1, q.degree
                    ));
                }
                count += 1;
            }
            Ok(count)
        })
        .try_reduce(|| 0, |a, b| Ok(a + b));
    match outcome {
        Ok(count) => {
            report.products_checked = count;
            report.passed = true;
        }
        Err(d) => report.discrepancy = Some(d),
    }
    Ok(report)
}

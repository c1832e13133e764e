//! Exhaustive enumeration of `End(G)` and `Aut(G)`.
//!
//! The search fixes images of a greedily chosen generating set, extends along
//! a spanning tree of the Cayley graph, and rejects any tuple violating the
//! homomorphism law. The finished list is sorted lexicographically by image
//! array, which gives every endomorphism a stable index.

use std::collections::HashMap;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::group::{max_order, FiniteGroup};

/// Upper bound on generator-image tuples examined by the search.
pub const DEFAULT_SEARCH_LIMIT: u128 = 50_000_000;

const PRODUCT_TABLE_LIMIT: usize = 512;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EndoError {
    #[error("group order {order} exceeds the enumeration cap of {cap}")]
    TooLarge { order: usize, cap: usize },
    #[error("search space of {candidates} generator-image tuples exceeds the limit of {limit}")]
    SearchTooLarge { candidates: u128, limit: u128 },
    #[error("domain error: {0}")]
    Domain(String),
}

/// A group endomorphism stored as its image array.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Endomorphism {
    images: Vec<usize>,
    is_automorphism: bool,
    index: usize,
}

impl Endomorphism {
    pub fn images(&self) -> &[usize] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn is_automorphism(&self) -> bool {
        self.is_automorphism
    }

    /// Position in the lexicographic enumeration.
    pub fn index(&self) -> usize {
        self.index
    }
}

/// `End(G)` as a finite monoid under composition.
#[derive(Debug, Clone)]
pub struct EndomorphismMonoid {
    group: Arc<FiniteGroup>,
    endos: Vec<Endomorphism>,
    lookup: HashMap<Vec<usize>, usize>,
    identity: usize,
    generators: Vec<usize>,
    products: Option<Vec<usize>>,
}

impl EndomorphismMonoid {
    pub fn enumerate(group: Arc<FiniteGroup>) -> Result<Self, EndoError> {
        Self::enumerate_with_limit(group, DEFAULT_SEARCH_LIMIT)
    }

    pub fn enumerate_with_limit(group: Arc<FiniteGroup>, limit: u128) -> Result<Self, EndoError> {
        let cap = max_order();
        if group.order() > cap {
            return Err(EndoError::TooLarge {
                order: group.order(),
                cap,
            });
        }
        let generators = greedy_generators(&group);
        let image_lists = search(&group, &generators, limit)?;

        let endos: Vec<Endomorphism> = image_lists
            .into_iter()
            .enumerate()
            .map(|(index, images)| Endomorphism {
                is_automorphism: is_permutation(&images),
                images,
                index,
            })
            .collect();
        let lookup: HashMap<Vec<usize>, usize> = endos
            .iter()
            .map(|e| (e.images.clone(), e.index))
            .collect();
        let identity_images: Vec<usize> = group.elements().collect();
        let identity = lookup[&identity_images];

        let mut monoid = EndomorphismMonoid {
            group,
            endos,
            lookup,
            identity,
            generators,
            products: None,
        };
        if monoid.endos.len() <= PRODUCT_TABLE_LIMIT {
            let n = monoid.endos.len();
            let table = (0..n * n)
                .into_par_iter()
                .map(|ij| monoid.compose_slow(ij / n, ij % n))
                .collect();
            monoid.products = Some(table);
        }
        Ok(monoid)
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    /// Generators chosen by the greedy closure, in the order they were added.
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.endos.len()
    }

    pub fn is_empty(&self) -> bool {
        self.endos.is_empty()
    }

    pub fn get(&self, index: usize) -> Option<&Endomorphism> {
        self.endos.get(index)
    }

    pub fn endomorphisms(&self) -> &[Endomorphism] {
        &self.endos
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Endomorphism> {
        self.endos.iter()
    }

    pub fn automorphisms(&self) -> impl Iterator<Item = &Endomorphism> + '_ {
        self.endos.iter().filter(|e| e.is_automorphism)
    }

    pub fn automorphism_count(&self) -> usize {
        self.automorphisms().count()
    }

    pub fn identity_index(&self) -> usize {
        self.identity
    }

    pub fn identity(&self) -> &Endomorphism {
        &self.endos[self.identity]
    }

    pub fn index_of(&self, images: &[usize]) -> Option<usize> {
        self.lookup.get(images).copied()
    }

    /// Whether `e` is a member of this enumeration (same group, same index).
    pub fn contains(&self, e: &Endomorphism) -> bool {
        self.endos.get(e.index).is_some_and(|own| own == e)
    }

    /// `a ∘ b`, i.e. `x ↦ a(b(x))`.
    pub fn compose(&self, a: &Endomorphism, b: &Endomorphism) -> Result<Endomorphism, EndoError> {
        for e in [a, b] {
            if !self.contains(e) {
                return Err(EndoError::Domain(format!(
                    "endomorphism with index {} does not belong to this group's enumeration",
                    e.index
                )));
            }
        }
        Ok(self.endos[self.compose_index(a.index, b.index)].clone())
    }

    /// Index of `endos[i] ∘ endos[j]`. Panics on out-of-range indices.
    #[inline]
    pub fn compose_index(&self, i: usize, j: usize) -> usize {
        match &self.products {
            Some(table) => table[i * self.endos.len() + j],
            None => self.compose_slow(i, j),
        }
    }

    fn compose_slow(&self, i: usize, j: usize) -> usize {
        let (a, b) = (&self.endos[i], &self.endos[j]);
        let images: Vec<usize> = b.images.iter().map(|&x| a.images[x]).collect();
        *self
            .lookup
            .get(&images)
            .expect("End(G) is closed under composition")
    }

    /// First pair `(i, j)` with `i∘j ≠ j∘i`, if any.
    pub fn non_commuting_pair(&self) -> Option<(usize, usize)> {
        let n = self.endos.len();
        (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .find(|&(i, j)| self.compose_index(i, j) != self.compose_index(j, i))
    }

    pub fn is_commutative(&self) -> bool {
        self.non_commuting_pair().is_none()
    }

    /// For cyclic groups, the residue `r` with `α(g) = g^r` for a generator
    /// `g`, per endomorphism index. This realizes `End(C_m) ≅ (Z/m)_×`; the
    /// residue does not depend on which generator is used.
    pub fn cyclic_residues(&self) -> Option<Vec<u64>> {
        let g = self.group.generator()?;
        let m = self.group.order();
        let mut log = vec![0u64; m];
        let mut power = 0;
        for r in 0..m {
            log[power] = r as u64;
            power = self.group.mul(power, g);
        }
        Some(self.endos.iter().map(|e| log[e.images[g]]).collect())
    }

    /// Endomorphism index for residue `r` on a cyclic group.
    pub fn index_of_residue(&self, r: u64) -> Option<usize> {
        let g = self.group.generator()?;
        let m = self.group.order() as u64;
        let target = self.group.pow(g, (r % m) as usize);
        let images: Vec<usize> = self
            .group
            .elements()
            .map(|x| {
                // x = g^t  ⇒  α(x) = target^t
                let t = (0..self.group.order())
                    .find(|&t| self.group.pow(g, t) == x)
                    .expect("generator reaches every element");
                self.group.pow(target, t)
            })
            .collect();
        self.index_of(&images)
    }
}

/// All endomorphisms of `g`, sorted lexicographically by image array.
pub fn enumerate_endomorphisms(g: &FiniteGroup) -> Result<Vec<Endomorphism>, EndoError> {
    Ok(EndomorphismMonoid::enumerate(Arc::new(g.clone()))?.endos)
}

/// The automorphisms of `g` in the same order as [`enumerate_endomorphisms`].
pub fn enumerate_automorphisms(g: &FiniteGroup) -> Result<Vec<Endomorphism>, EndoError> {
    Ok(enumerate_endomorphisms(g)?
        .into_iter()
        .filter(|e| e.is_automorphism)
        .collect())
}

/// Repeatedly add the smallest element outside the current closure.
pub fn greedy_generators(g: &FiniteGroup) -> Vec<usize> {
    let n = g.order();
    let mut inside = vec![false; n];
    inside[0] = true;
    let mut generators = Vec::new();
    while let Some(x) = inside.iter().position(|&b| !b) {
        generators.push(x);
        // closure of the subgroup generated so far
        let mut frontier: Vec<usize> = (0..n).filter(|&y| inside[y]).collect();
        while let Some(y) = frontier.pop() {
            for &s in &generators {
                let z = g.mul(y, s);
                if !inside[z] {
                    inside[z] = true;
                    frontier.push(z);
                }
            }
        }
    }
    generators
}

fn search(
    g: &FiniteGroup,
    generators: &[usize],
    limit: u128,
) -> Result<Vec<Vec<usize>>, EndoError> {
    let n = g.order();
    if generators.is_empty() {
        return Ok(vec![vec![0]]);
    }

    // Spanning tree: every non-identity element z = parent · generator.
    let mut parent = vec![(usize::MAX, usize::MAX); n];
    let mut visit = vec![0usize];
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut head = 0;
    while head < visit.len() {
        let y = visit[head];
        head += 1;
        for (j, &s) in generators.iter().enumerate() {
            let z = g.mul(y, s);
            if !seen[z] {
                seen[z] = true;
                parent[z] = (y, j);
                visit.push(z);
            }
        }
    }

    // An image of s must have order dividing the order of s.
    let candidates: Vec<Vec<usize>> = generators
        .iter()
        .map(|&s| {
            let o = g.element_order(s);
            g.elements().filter(|&y| o % g.element_order(y) == 0).collect()
        })
        .collect();
    let total: u128 = candidates.iter().map(|c| c.len() as u128).product();
    if total > limit {
        return Err(EndoError::SearchTooLarge {
            candidates: total,
            limit,
        });
    }

    let mut found: Vec<Vec<usize>> = candidates[0]
        .par_iter()
        .flat_map_iter(|&first| {
            let mut results = Vec::new();
            let mut choice = vec![0usize; generators.len()];
            let mut gen_images = vec![first; generators.len()];
            let mut images = vec![0usize; n];
            loop {
                for (j, &c) in choice.iter().enumerate().skip(1) {
                    gen_images[j] = candidates[j][c];
                }
                if extend(g, generators, &parent, &visit, &gen_images, &mut images) {
                    results.push(images.clone());
                }
                // advance mixed-radix counter over generators 1..
                let mut j = 1;
                loop {
                    if j == generators.len() {
                        return results;
                    }
                    choice[j] += 1;
                    if choice[j] < candidates[j].len() {
                        break;
                    }
                    choice[j] = 0;
                    j += 1;
                }
            }
        })
        .collect();
    found.sort_unstable();
    found.dedup();
    Ok(found)
}

fn extend(
    g: &FiniteGroup,
    generators: &[usize],
    parent: &[(usize, usize)],
    visit: &[usize],
    gen_images: &[usize],
    images: &mut [usize],
) -> bool {
    images[0] = 0;
    for &z in &visit[1..] {
        let (y, j) = parent[z];
        images[z] = g.mul(images[y], gen_images[j]);
    }
    // φ(x s) = φ(x) φ(s) for all x and generators s implies the full law.
    g.elements().all(|x| {
        generators
            .iter()
            .zip(gen_images)
            .all(|(&s, &t)| images[g.mul(x, s)] == g.mul(images[x], t))
    })
}

fn is_permutation(images: &[usize]) -> bool {
    let mut seen = vec![false; images.len()];
    images.iter().all(|&y| !std::mem::replace(&mut seen[y], true))
}

//! Naming small groups by invariant fingerprint.
//!
//! A fingerprint is the order, abelianness and the number of elements of each
//! order. For abelian groups this determines the group, and the invariant
//! factors are recovered exactly. Non-abelian groups of order ≤ 16 are matched
//! against a built-in list; a few fingerprints there are shared by two groups,
//! in which case every candidate is reported.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use serde::Serialize;

use crate::group::{prime_divisors, FiniteGroup};

/// Largest order covered by the non-abelian catalogue.
pub const CATALOGUE_MAX_ORDER: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Fingerprint {
    pub order: usize,
    pub abelian: bool,
    /// element order → number of elements of that order
    pub order_profile: BTreeMap<usize, usize>,
}

impl Fingerprint {
    pub fn of(g: &FiniteGroup) -> Self {
        let mut order_profile = BTreeMap::new();
        for &o in g.element_orders() {
            *order_profile.entry(o).or_insert(0) += 1;
        }
        Fingerprint {
            order: g.order(),
            abelian: g.is_abelian(),
            order_profile,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Identification {
    pub fingerprint: Fingerprint,
    /// All catalogue names matching the fingerprint (exactly one for
    /// abelian groups, none outside the catalogue's range).
    pub candidates: Vec<String>,
}

impl Identification {
    /// The name, if the fingerprint pins down a single group.
    pub fn name(&self) -> Option<&str> {
        match self.candidates.as_slice() {
            [only] => Some(only),
            _ => None,
        }
    }

    pub fn is_cyclic(&self) -> bool {
        self.fingerprint
            .order_profile
            .contains_key(&self.fingerprint.order)
    }
}

pub fn identify(g: &FiniteGroup) -> Identification {
    let fingerprint = Fingerprint::of(g);
    let candidates = if fingerprint.abelian {
        vec![abelian_name(&invariant_factors(&fingerprint))]
    } else if fingerprint.order <= CATALOGUE_MAX_ORDER {
        catalogue()
            .iter()
            .filter(|(_, f)| *f == fingerprint)
            .map(|(name, _)| name.clone())
            .collect()
    } else {
        Vec::new()
    };
    Identification {
        fingerprint,
        candidates,
    }
}

/// Invariant factors `d_1 | d_2 | ... | d_r` of an abelian group, from its
/// order profile. Empty for the trivial group.
pub fn invariant_factors(f: &Fingerprint) -> Vec<usize> {
    // per prime p: partition λ with #{x : x^{p^j} = e} = p^{Σ min(j, λ_i)}
    let mut parts: Vec<Vec<usize>> = Vec::new();
    for p in prime_divisors(f.order) {
        let mut exps = vec![0u32];
        let mut j = 1;
        loop {
            let pj = p.pow(j);
            let count: usize = f
                .order_profile
                .iter()
                .filter(|(&o, _)| pj % o == 0)
                .map(|(_, &c)| c)
                .sum();
            let e = count.ilog(p);
            if e == *exps.last().unwrap() {
                break;
            }
            exps.push(e);
            j += 1;
        }
        // number of parts ≥ j is exps[j] - exps[j-1]
        let at_least: Vec<usize> = exps.windows(2).map(|w| (w[1] - w[0]) as usize).collect();
        let mut powers = Vec::new();
        for (jj, &cnt) in at_least.iter().enumerate() {
            let next = at_least.get(jj + 1).copied().unwrap_or(0);
            for _ in 0..cnt - next {
                powers.push(p.pow(jj as u32 + 1));
            }
        }
        powers.sort_unstable_by(|a, b| b.cmp(a));
        parts.push(powers);
    }
    let rank = parts.iter().map(Vec::len).max().unwrap_or(0);
    let mut factors: Vec<usize> = (0..rank)
        .map(|i| parts.iter().map(|ps| ps.get(i).copied().unwrap_or(1)).product())
        .collect();
    factors.reverse();
    factors
}

fn abelian_name(factors: &[usize]) -> String {
    if factors.is_empty() {
        return "C1".into();
    }
    factors
        .iter()
        .map(|d| format!("C{d}"))
        .collect::<Vec<_>>()
        .join(" x ")
}

fn catalogue() -> &'static [(String, Fingerprint)] {
    static CATALOGUE: OnceLock<Vec<(String, Fingerprint)>> = OnceLock::new();
    CATALOGUE.get_or_init(|| {
        let c2 = FiniteGroup::cyclic(2).unwrap();
        let klein = FiniteGroup::direct_product(&c2, &c2).unwrap();
        let d8 = FiniteGroup::dihedral(4).unwrap();
        let q8 = FiniteGroup::generalized_quaternion(8).unwrap();
        let entries: Vec<(&str, FiniteGroup)> = vec![
            ("S3", FiniteGroup::dihedral(3).unwrap()),
            ("D8", d8.clone()),
            ("Q8", q8.clone()),
            ("D10", FiniteGroup::dihedral(5).unwrap()),
            // Klein four-group with the 3-cycle on its involutions
            ("A4", FiniteGroup::semidirect_cyclic(&klein, &[0, 2, 3, 1], 3).unwrap()),
            ("D12", FiniteGroup::dihedral(6).unwrap()),
            ("Dic3", FiniteGroup::generalized_quaternion(12).unwrap()),
            ("D14", FiniteGroup::dihedral(7).unwrap()),
            ("D16", FiniteGroup::dihedral(8).unwrap()),
            ("Q16", FiniteGroup::generalized_quaternion(16).unwrap()),
            ("SD16", FiniteGroup::metacyclic(8, 2, 3).unwrap()),
            ("M16", FiniteGroup::metacyclic(8, 2, 5).unwrap()),
            ("C4 : C4", FiniteGroup::metacyclic(4, 4, 3).unwrap()),
            ("C2 x D8", FiniteGroup::direct_product(&c2, &d8).unwrap()),
            ("C2 x Q8", FiniteGroup::direct_product(&c2, &q8).unwrap()),
            ("C2^2 : C4", FiniteGroup::semidirect_cyclic(&klein, &[0, 2, 1, 3], 4).unwrap()),
            ("C4 o D8", pauli_group()),
        ];
        entries
            .into_iter()
            .map(|(name, g)| (name.to_string(), Fingerprint::of(&g)))
            .collect()
    })
}

/// `{±1, ±i} × {I, X, Y, Z}` under Pauli-matrix multiplication.
fn pauli_group() -> FiniteGroup {
    // (phase exponent of i, result) for σ_a σ_b with I=0, X=1, Y=2, Z=3
    const PRODUCT: [[(usize, usize); 4]; 4] = [
        [(0, 0), (0, 1), (0, 2), (0, 3)],
        [(0, 1), (0, 0), (1, 3), (3, 2)],
        [(0, 2), (3, 3), (0, 0), (1, 1)],
        [(0, 3), (1, 2), (3, 1), (0, 0)],
    ];
    let rows = (0..16)
        .map(|x| {
            (0..16)
                .map(|y| {
                    let (p1, a) = (x % 4, x / 4);
                    let (p2, b) = (y % 4, y / 4);
                    let (ph, c) = PRODUCT[a][b];
                    (p1 + p2 + ph) % 4 + 4 * c
                })
                .collect()
        })
        .collect();
    FiniteGroup::from_table(rows).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn abelian_names() {
        let c = |m| FiniteGroup::cyclic(m).unwrap();
        assert_eq!(identify(&c(1)).name(), Some("C1"));
        assert_eq!(identify(&c(12)).name(), Some("C12"));
        let c2c6 = FiniteGroup::direct_product(&c(2), &c(6)).unwrap();
        assert_eq!(identify(&c2c6).name(), Some("C2 x C6"));
        let c4c4 = FiniteGroup::direct_product(&c(4), &c(4)).unwrap();
        assert_eq!(identify(&c4c4).name(), Some("C4 x C4"));
        let c2c4 = FiniteGroup::direct_product(&c(2), &c(4)).unwrap();
        let c2c2c4 = FiniteGroup::direct_product(&c(2), &c2c4).unwrap();
        assert_eq!(identify(&c2c2c4).name(), Some("C2 x C2 x C4"));
        assert!(identify(&c(7)).is_cyclic());
    }

    #[test]
    fn non_abelian_names() {
        assert_eq!(identify(&FiniteGroup::dihedral(3).unwrap()).name(), Some("S3"));
        assert_eq!(
            identify(&FiniteGroup::generalized_quaternion(8).unwrap()).name(),
            Some("Q8")
        );
        assert_eq!(identify(&FiniteGroup::dihedral(4).unwrap()).name(), Some("D8"));
        // A4 vs D12 vs Dic3 are separated by their order profiles
        assert_eq!(
            identify(&FiniteGroup::generalized_quaternion(12).unwrap()).name(),
            Some("Dic3")
        );
    }

    #[test]
    fn ambiguous_fingerprints_list_all_candidates() {
        let id = identify(&pauli_group());
        assert_eq!(id.name(), None);
        assert!(id.candidates.contains(&"C4 o D8".to_string()));
        assert!(id.candidates.contains(&"C2^2 : C4".to_string()));
    }

    #[test]
    fn catalogue_is_non_abelian_and_in_range() {
        for (name, f) in catalogue() {
            assert!(!f.abelian, "{name}");
            assert!(f.order <= CATALOGUE_MAX_ORDER, "{name}");
        }
    }
}

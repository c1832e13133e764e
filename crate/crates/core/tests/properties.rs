mod common;

use std::sync::Arc;

use num_bigint::BigInt;
use proptest::prelude::*;

use spaceform::degree::d_cyclic;
use spaceform::even::EvenElement;
use spaceform::{
    build_degree_hom, EndomorphismMonoid, FiniteGroup, Residue, SelfMapModel, SpaceFormMonoid,
};

use common::*;

fn small_group() -> impl Strategy<Value = FiniteGroup> {
    prop_oneof![
        (1usize..=40).prop_map(|m| FiniteGroup::cyclic(m).unwrap()),
        (2usize..=6).prop_map(|k| FiniteGroup::generalized_quaternion(4 * k).unwrap()),
        (3usize..=10).prop_map(|m| FiniteGroup::dihedral(m).unwrap()),
        ((1usize..=6), (1usize..=6)).prop_map(|(a, b)| {
            FiniteGroup::direct_product(&FiniteGroup::cyclic(a).unwrap(), &FiniteGroup::cyclic(b).unwrap())
                .unwrap()
        }),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn group_axioms(g in small_group()) {
        let n = g.order();
        let e = g.identity();
        for x in g.elements() {
            prop_assert_eq!(g.mul(e, x), x);
            prop_assert_eq!(g.mul(x, e), x);
            prop_assert_eq!(g.mul(x, g.inverse(x)), e);
            prop_assert_eq!(n % g.element_order(x), 0);
            prop_assert_eq!(g.pow(x, g.element_order(x)), e);
            for y in g.elements() {
                for z in g.elements() {
                    prop_assert_eq!(g.mul(g.mul(x, y), z), g.mul(x, g.mul(y, z)));
                }
            }
        }
        // the table round-trips through its own validation
        prop_assert!(FiniteGroup::from_table(g.rows()).is_ok());
    }

    #[test]
    fn endomorphisms_are_closed_and_associative(g in small_group()) {
        let rows = g.rows();
        let endos = EndomorphismMonoid::enumerate(Arc::new(g)).unwrap();
        for e in endos.iter() {
            prop_assert!(is_homomorphism(&rows, e.images()));
            prop_assert_eq!(e.is_automorphism(), is_bijective(e.images()));
        }
        let k = endos.len();
        let id = endos.identity_index();
        for a in 0..k {
            prop_assert_eq!(endos.compose_index(a, id), a);
            prop_assert_eq!(endos.compose_index(id, a), a);
            for b in 0..k {
                let ab = endos.compose_index(a, b);
                prop_assert_eq!(
                    endos.get(ab).unwrap().images(),
                    &compose(endos.get(a).unwrap().images(), endos.get(b).unwrap().images())[..]
                );
                if k <= 24 {
                    for c in 0..k {
                        prop_assert_eq!(
                            endos.compose_index(ab, c),
                            endos.compose_index(a, endos.compose_index(b, c))
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn cyclic_counts(m in 1usize..=50) {
        let endos = EndomorphismMonoid::enumerate(Arc::new(FiniteGroup::cyclic(m).unwrap())).unwrap();
        prop_assert_eq!(endos.len(), m);
        prop_assert_eq!(endos.automorphism_count() as u64, totient(m as u64));
    }

    #[test]
    fn builtin_degree_map_is_lawful(m in 1usize..=50, n in 0u64..=12) {
        let endos = Arc::new(EndomorphismMonoid::enumerate(Arc::new(FiniteGroup::cyclic(m).unwrap())).unwrap());
        let hom = build_degree_hom(endos.clone(), n, None).unwrap();
        prop_assert!(hom.validate().passed);
        let own: Vec<Vec<usize>> = endos.iter().map(|e| e.images().to_vec()).collect();
        let values: Vec<u64> = hom.values().iter().map(|r| r.value()).collect();
        prop_assert!(check_laws(&own, &values, m as u64).all());
        for (e, v) in endos.iter().zip(&values) {
            let r = if m == 1 { 0 } else { e.images()[1] as u64 };
            prop_assert_eq!(*v, naive_pow(r, n + 1, m as u64));
        }
    }

    #[test]
    fn d_cyclic_matches_repeated_multiplication(r in 0u64..1000, n in 0u64..40, m in 1u64..1000) {
        prop_assert_eq!(d_cyclic(r, n, m), Residue::from_u64(naive_pow(r % m, n + 1, m), m));
    }

    #[test]
    fn monoid_products_stay_in_cosets(
        m in 1usize..=24,
        n in 0u64..=6,
        a in any::<prop::sample::Index>(),
        b in any::<prop::sample::Index>(),
        s in -50i64..=50,
        t in -50i64..=50,
    ) {
        let monoid = SpaceFormMonoid::cyclic(m, n).unwrap();
        let (a, b) = (a.index(m), b.index(m));
        let x = monoid.element(a, monoid.d(a).value() as i64 + s * m as i64).unwrap();
        let y = monoid.element(b, monoid.d(b).value() as i64 + t * m as i64).unwrap();
        let p = monoid.multiply(&x, &y).unwrap();
        prop_assert_eq!(p.degree(), &(x.degree() * y.degree()));
        prop_assert_eq!(p.alpha(), monoid.endomorphisms().compose_index(a, b));
        prop_assert!(Residue::from_bigint(p.degree(), m as u64) == monoid.d(p.alpha()));

        // agrees with the self-map model on the same classes
        let model = SelfMapModel::cyclic(m as u64, n).unwrap();
        let lookup = |alpha: usize| {
            let img: Vec<u64> = monoid.endomorphisms().get(alpha).unwrap().images().iter().map(|&v| v as u64).collect();
            (0..model.map_count()).find(|&i| model.images(i) == &img[..]).unwrap()
        };
        let f = model.class(lookup(a), x.degree().clone()).unwrap();
        let g = model.class(lookup(b), y.degree().clone()).unwrap();
        let q = model.compose_selfmaps(&f, &g).unwrap();
        prop_assert_eq!(q.pi1, lookup(p.alpha()));
        prop_assert_eq!(&q.degree, p.degree());
    }

    #[test]
    fn monoid_associativity(
        m in 1usize..=16,
        n in 0u64..=4,
        picks in proptest::collection::vec((0usize..64, -20i64..=20), 3),
    ) {
        let monoid = SpaceFormMonoid::cyclic(m, n).unwrap();
        let el: Vec<_> = picks
            .iter()
            .map(|&(a, s)| {
                let a = a % m;
                monoid.element(a, monoid.d(a).value() as i64 + s * m as i64).unwrap()
            })
            .collect();
        let mul = |x, y| monoid.multiply(x, y).unwrap();
        let (xy, yz) = (mul(&el[0], &el[1]), mul(&el[1], &el[2]));
        prop_assert_eq!(mul(&xy, &el[2]), mul(&el[0], &yz));
        prop_assert_eq!(mul(&monoid.identity(), &el[0]), el[0].clone());
    }

    #[test]
    fn units_are_exactly_the_sign_automorphisms(m in 1usize..=30, n in 0u64..=8) {
        let monoid = SpaceFormMonoid::cyclic(m, n).unwrap();
        let e = monoid.equivalence_group().unwrap();
        for x in e.elements() {
            prop_assert!(monoid.is_invertible(x));
            prop_assert!(x.degree() == &BigInt::from(1) || x.degree() == &BigInt::from(-1));
        }
        let table = e.table();
        for i in 0..e.order() {
            prop_assert_eq!(table[i][e.inverse(i)], 0);
        }
    }

    #[test]
    fn even_quotient_respects_products(a in -100_000i64..=100_000, b in -100_000i64..=100_000) {
        let (ba, bb) = (BigInt::from(a), BigInt::from(b));
        let lhs = EvenElement::canonicalize(&ba).multiply(&EvenElement::canonicalize(&bb));
        prop_assert_eq!(lhs, EvenElement::canonicalize(&(ba * bb)));
    }
}

/// The class of `xy` depends only on the classes of `x` and `y`.
#[test]
fn even_quotient_is_well_defined() {
    use std::collections::HashMap;
    let mut seen: HashMap<(EvenElement, EvenElement), EvenElement> = HashMap::new();
    for x in -200i64..=200 {
        for y in -200i64..=200 {
            let key = (
                EvenElement::canonicalize(&BigInt::from(x)),
                EvenElement::canonicalize(&BigInt::from(y)),
            );
            let value = EvenElement::canonicalize(&BigInt::from(x * y));
            let prev = seen.entry(key.clone()).or_insert_with(|| value.clone());
            assert_eq!(*prev, value, "classes {key:?} from {x}, {y}");
        }
    }
}

#[test]
fn q8_endomorphisms_do_not_commute() {
    let endos = EndomorphismMonoid::enumerate(Arc::new(FiniteGroup::generalized_quaternion(8).unwrap())).unwrap();
    let (a, b) = endos.non_commuting_pair().expect("End(Q8) is not commutative");
    let (fa, fb) = (endos.get(a).unwrap().images(), endos.get(b).unwrap().images());
    assert_ne!(compose(fa, fb), compose(fb, fa));
}

#[test]
fn admissibility_diagnostic() {
    let klein = FiniteGroup::direct_product(&FiniteGroup::cyclic(2).unwrap(), &FiniteGroup::cyclic(2).unwrap()).unwrap();
    assert!(!klein.rank_one_check().passed);
    for g in [
        FiniteGroup::cyclic(30).unwrap(),
        FiniteGroup::generalized_quaternion(8).unwrap(),
        FiniteGroup::generalized_quaternion(12).unwrap(),
        FiniteGroup::generalized_quaternion(32).unwrap(),
    ] {
        assert!(g.rank_one_check().passed, "order {}", g.order());
    }
}

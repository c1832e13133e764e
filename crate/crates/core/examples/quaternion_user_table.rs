//! Q8 has no built-in degree map, so it comes from a table: 1 on every
//! automorphism and 0 on the four endomorphisms that are not. A table that
//! breaks multiplicativity is rejected with a witness.

use std::sync::Arc;

use spaceform::{build_degree_hom, DegreeTable, EndomorphismMonoid, FiniteGroup, SpaceFormMonoid};

fn main() -> Result<(), spaceform::Error> {
    let q8 = Arc::new(FiniteGroup::generalized_quaternion(8)?);
    let endos = Arc::new(EndomorphismMonoid::enumerate(q8)?);
    println!(
        "End(Q8): {} endomorphisms, {} automorphisms, commutative: {}",
        endos.len(),
        endos.automorphism_count(),
        endos.is_commutative()
    );

    let values: Vec<i64> = endos.iter().map(|e| e.is_automorphism() as i64).collect();
    let table = DegreeTable::from_values(1, &values);
    let monoid = SpaceFormMonoid::new(build_degree_hom(endos.clone(), 1, Some(&table))?);
    if let Some((a, b)) = monoid.non_commuting_pair() {
        println!("#{a} and #{b} do not commute, so M(Q8, 1) is not commutative");
    }
    println!("|E(Q8, 1)| = {}", monoid.equivalence_group()?.order());

    let mut broken = values.clone();
    let first_non_auto = endos.iter().position(|e| !e.is_automorphism() && e.images().iter().any(|&x| x != 0));
    broken[first_non_auto.unwrap()] = 1;
    let err = build_degree_hom(endos, 1, Some(&DegreeTable::from_values(1, &broken))).unwrap_err();
    println!("rejected: {err}");
    Ok(())
}

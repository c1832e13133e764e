//! Which integers are degrees of self-maps of S^{2n+1}/C_m, and through
//! which endomorphisms.

use num_bigint::BigInt;
use spaceform::SpaceFormMonoid;

fn main() -> Result<(), spaceform::Error> {
    for (m, n) in [(5, 1), (8, 1), (9, 2)] {
        let monoid = SpaceFormMonoid::cyclic(m, n)?;
        let residues = monoid.realizable_degrees().residues;
        println!("C_{m}, n = {n}: degrees are the integers congruent to {residues:?} mod {m}");
        for k in [-8i64, -7, -1, 4, 9, 17, 27] {
            let classes = monoid.classes_containing(&BigInt::from(k));
            if !classes.is_empty() {
                println!("  {k} via endomorphisms {classes:?}");
            }
        }
    }
    Ok(())
}

//! The group of self-homotopy equivalences of S^{2n+1}/C_m for a few
//! contexts, with element orders and the identified isomorphism type.

use spaceform::catalog::identify;
use spaceform::SpaceFormMonoid;

fn main() -> Result<(), spaceform::Error> {
    for (m, n) in [(5, 1), (7, 2), (8, 1), (12, 3)] {
        let monoid = SpaceFormMonoid::cyclic(m, n)?;
        let units = monoid.equivalence_group()?;
        let elements: Vec<String> = units.elements().iter().map(|x| x.to_string()).collect();
        println!(
            "E(C_{m}, {n}): order {}, type {}, elements {}, orders {:?}",
            units.order(),
            identify(&units.as_group()).name().unwrap_or("unidentified"),
            elements.join(" "),
            units.element_orders()
        );
    }
    Ok(())
}

//! Self-maps of the lens space S^3/C_5: one coset of degrees per
//! endomorphism of C_5, and the product rule on pairs.

use spaceform::SpaceFormMonoid;

fn main() -> Result<(), spaceform::Error> {
    let monoid = SpaceFormMonoid::cyclic(5, 1)?;
    let residues = monoid.endomorphisms().cyclic_residues().unwrap();

    for (alpha, r) in residues.iter().enumerate() {
        let degrees: Vec<String> = monoid
            .coset_window(alpha, 12)
            .iter()
            .map(|x| x.degree().to_string())
            .collect();
        println!("x -> {r}x   d = {}   degrees in [-12, 12]: {}", monoid.d(alpha), degrees.join(" "));
    }

    let x = monoid.element(2, 9)?;
    let y = monoid.element(3, 14)?;
    println!("{x} * {y} = {}", monoid.multiply(&x, &y)?);

    // 5 is not congruent to d = 4 for x -> 2x
    println!("(#2, 5) rejected: {}", monoid.element(2, 5).unwrap_err());
    Ok(())
}

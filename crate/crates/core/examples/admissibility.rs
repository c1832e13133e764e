//! Rank-one diagnostic: a group acting freely on a sphere has at most p
//! solutions of x^p = 1 for every prime p dividing its order.

use spaceform::catalog::identify;
use spaceform::FiniteGroup;

fn main() -> Result<(), spaceform::Error> {
    let c2 = FiniteGroup::cyclic(2)?;
    let groups = [
        FiniteGroup::cyclic(12)?,
        FiniteGroup::generalized_quaternion(8)?,
        FiniteGroup::generalized_quaternion(12)?,
        FiniteGroup::direct_product(&c2, &c2)?,
        FiniteGroup::dihedral(3)?,
        FiniteGroup::direct_product(&FiniteGroup::cyclic(3)?, &FiniteGroup::cyclic(3)?)?,
    ];
    for g in &groups {
        let report = g.rank_one_check();
        let counts: Vec<String> = report
            .counts
            .iter()
            .map(|c| format!("p={}: {}", c.prime, c.solutions))
            .collect();
        println!(
            "{:<8} {:<5} {}",
            identify(g).name().unwrap_or("unidentified"),
            if report.passed { "ok" } else { "fails" },
            counts.join(", ")
        );
    }
    Ok(())
}

//! Compare the monoid against the independent self-map model on a few
//! lens spaces and print the comparison reports.

use spaceform::cross_check;

fn main() -> Result<(), spaceform::Error> {
    for (m, n) in [(2, 0), (5, 1), (12, 2), (30, 10)] {
        let r = cross_check(m, n, 5 * m)?;
        println!(
            "C_{m}, n = {n}, |k| <= {}: {} ({} elements, {} products)",
            r.window,
            if r.passed { "agree" } else { "DISAGREE" },
            r.valid_elements,
            r.products_checked
        );
    }
    Ok(())
}

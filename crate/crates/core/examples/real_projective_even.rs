//! Self-maps of RP^{2n}: odd lift degrees stay distinct, even ones collapse
//! to two classes by their residue mod 4.

use num_bigint::BigInt;
use spaceform::EvenElement;

fn main() {
    let classes: Vec<EvenElement> = (-4..=6).map(|k| EvenElement::canonicalize(&BigInt::from(k))).collect();
    for (k, c) in (-4..=6).zip(&classes) {
        println!("lift degree {k:>2} -> {c}");
    }

    let a2 = EvenElement::A2;
    let b3 = EvenElement::odd(3).unwrap();
    let b5 = EvenElement::odd(-5).unwrap();
    println!("A2 * A2 = {}", a2.multiply(&a2));
    println!("A2 * {b3} = {}", a2.multiply(&b3));
    println!("{b3} * {b5} = {}", b3.multiply(&b5));
    println!("units: {:?}", classes.iter().filter(|c| c.is_unit()).map(|c| c.to_string()).collect::<Vec<_>>());
}

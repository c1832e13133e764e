//! The monoid of self-maps of `RP^{2n}`: integers under multiplication with
//! all multiples of 4 identified, and all `2 mod 4` integers identified.
//!
//! Odd degrees stay distinct. The structure is the same for every `n ≥ 1`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};
use serde::{Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EvenError {
    #[error("{0} is even; odd classes need an odd degree")]
    EvenDegree(BigInt),
    #[error("dimension 2n needs n >= 1, got n = {0}")]
    InvalidDimension(u64),
}

/// An odd integer.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OddDegree(BigInt);

impl OddDegree {
    pub fn new(k: impl Into<BigInt>) -> Result<Self, EvenError> {
        let k = k.into();
        if k.is_even() {
            return Err(EvenError::EvenDegree(k));
        }
        Ok(OddDegree(k))
    }

    pub fn value(&self) -> &BigInt {
        &self.0
    }
}

/// A homotopy class of self-maps of `RP^{2n}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum EvenElement {
    /// Lifts through the sphere with degree ≡ 0 mod 4.
    A0,
    /// Lifts through the sphere with degree ≡ 2 mod 4.
    A2,
    /// Identity on `π₁`, lifting to a sphere map of this odd degree.
    Odd(OddDegree),
}

impl EvenElement {
    pub fn odd(k: impl Into<BigInt>) -> Result<Self, EvenError> {
        OddDegree::new(k).map(EvenElement::Odd)
    }

    /// Class of the integer `k`.
    pub fn canonicalize(k: &BigInt) -> Self {
        if k.is_odd() {
            EvenElement::Odd(OddDegree(k.clone()))
        } else if k.mod_floor(&BigInt::from(4)) == BigInt::from(0) {
            EvenElement::A0
        } else {
            EvenElement::A2
        }
    }

    pub fn identity() -> Self {
        EvenElement::Odd(OddDegree(BigInt::one()))
    }

    pub fn multiply(&self, other: &EvenElement) -> EvenElement {
        use EvenElement::*;
        match (self, other) {
            (A0 | A2, A0 | A2) => A0,
            (A0, Odd(_)) | (Odd(_), A0) => A0,
            (A2, Odd(_)) | (Odd(_), A2) => A2,
            (Odd(a), Odd(b)) => Odd(OddDegree(&a.0 * &b.0)),
        }
    }

    /// Whether the class acts as the identity on `π₁`.
    pub fn is_pi1_identity(&self) -> bool {
        matches!(self, EvenElement::Odd(_))
    }

    /// Units are exactly `Odd(1)` and `Odd(-1)`.
    pub fn is_unit(&self) -> bool {
        matches!(self, EvenElement::Odd(k) if k.0.abs().is_one())
    }

    /// Some integer in this class.
    pub fn representative(&self) -> BigInt {
        match self {
            EvenElement::A0 => BigInt::from(0),
            EvenElement::A2 => BigInt::from(2),
            EvenElement::Odd(k) => k.0.clone(),
        }
    }
}

impl fmt::Display for EvenElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EvenElement::A0 => write!(f, "A0"),
            EvenElement::A2 => write!(f, "A2"),
            EvenElement::Odd(k) => write!(f, "Odd({})", k.0),
        }
    }
}

impl Serialize for EvenElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// `n` only has to be a valid dimension; the monoid does not depend on it.
pub fn check_dimension(n: u64) -> Result<(), EvenError> {
    if n == 0 {
        return Err(EvenError::InvalidDimension(n));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use EvenElement::*;

    fn k(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn canonical_classes() {
        assert_eq!(EvenElement::canonicalize(&k(8)), A0);
        assert_eq!(EvenElement::canonicalize(&k(6)), A2);
        assert_eq!(EvenElement::canonicalize(&k(-2)), A2);
        assert_eq!(EvenElement::canonicalize(&k(-4)), A0);
        assert_eq!(EvenElement::canonicalize(&k(7)), EvenElement::odd(7).unwrap());
    }

    #[test]
    fn relations() {
        assert_eq!(A2.multiply(&A2), A0);
        assert_eq!(A2.multiply(&EvenElement::odd(3).unwrap()), A2);
        assert_eq!(EvenElement::odd(3).unwrap().multiply(&A2), A2);
        assert_eq!(
            EvenElement::odd(3)
                .unwrap()
                .multiply(&EvenElement::odd(5).unwrap()),
            EvenElement::odd(15).unwrap()
        );
    }

    #[test]
    fn identity_is_neutral() {
        let id = EvenElement::identity();
        for x in [A0, A2, EvenElement::odd(9).unwrap()] {
            assert_eq!(id.multiply(&x), x);
            assert_eq!(x.multiply(&id), x);
        }
    }

    #[test]
    fn odd_rejects_even() {
        assert!(matches!(
            EvenElement::odd(4),
            Err(EvenError::EvenDegree(_))
        ));
    }

    #[test]
    fn units() {
        assert!(EvenElement::odd(1).unwrap().is_unit());
        assert!(EvenElement::odd(-1).unwrap().is_unit());
        assert!(!EvenElement::odd(3).unwrap().is_unit());
        assert!(!A0.is_unit() && !A2.is_unit());
    }

    #[test]
    fn dimension_check() {
        assert!(check_dimension(0).is_err());
        assert!(check_dimension(1).is_ok());
    }
}

//! Exact monoids of homotopy classes of self-maps of spherical space forms.
//!
//! * [`odd`]: the monoid `M(G,n)` for `S^{2n+1}/G`, pairs `(α, k)` of an
//!   endomorphism of `G` and a degree `k ≡ d(α) mod |G|`, and its group of
//!   units `E(G,n)`.
//! * [`even`]: the monoid for `RP^{2n}`, integers under multiplication with
//!   even degrees collapsed to the classes `0` and `2 mod 4`.
//! * [`oracle`]: an independent model of lens-space self-maps used to
//!   cross-check [`odd`].
//!
//! ```
//! use spaceform::odd::SpaceFormMonoid;
//!
//! let m = SpaceFormMonoid::cyclic(5, 1).unwrap();
//! let x = m.element(2, 9).unwrap();
//! let y = m.element(3, 14).unwrap();
//! assert_eq!(m.multiply(&x, &y).unwrap(), m.element(1, 126).unwrap());
//! assert_eq!(m.equivalence_group().unwrap().order(), 4);
//! ```

pub mod catalog;
pub mod degree;
pub mod endo;
pub mod even;
pub mod group;
pub mod odd;
pub mod oracle;
pub mod report;

use thiserror::Error;

pub use degree::{build_degree_hom, validate_degree_hom, DegreeHom, DegreeTable, Residue};
pub use endo::{Endomorphism, EndomorphismMonoid};
pub use even::EvenElement;
pub use group::FiniteGroup;
pub use odd::{EquivalenceGroup, SpaceFormElement, SpaceFormMonoid};
pub use oracle::{cross_check, SelfMapClass, SelfMapModel};

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Group(#[from] group::GroupError),
    #[error(transparent)]
    Endo(#[from] endo::EndoError),
    #[error(transparent)]
    Degree(#[from] degree::DegreeError),
    #[error(transparent)]
    Odd(#[from] odd::OddError),
    #[error(transparent)]
    Even(#[from] even::EvenError),
    #[error(transparent)]
    Oracle(#[from] oracle::OracleError),
    #[error("invalid configuration: {0}")]
    Config(String),
}

impl Error {
    /// Process exit status: 1 for bad input, 2 for a failed validation,
    /// 3 for a broken internal invariant.
    pub fn exit_code(&self) -> i32 {
        use degree::DegreeError as D;
        match self {
            Error::Degree(
                D::NotAHomomorphism(_) | D::IdentityViolation(_) | D::UnitViolation(_),
            ) => 2,
            Error::Odd(odd::OddError::Internal(_)) => 3,
            _ => 1,
        }
    }

    pub fn witness(&self) -> Option<&degree::LawViolation> {
        match self {
            Error::Degree(d) => d.witness(),
            _ => None,
        }
    }
}

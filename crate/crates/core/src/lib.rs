//! Exact decision procedures for the residual nilpotence of semidirect
//! products `Z^n ⋊ Z` and `F_n ⋊ Z`.
//!
//! Everything is driven by the integer matrix induced on the
//! abelianization. The crate is split into:
//!
//! * [`intpoly`]: integer polynomials, squarefree decomposition and
//!   factorization over `Z` (Zassenhaus).
//! * [`zlinalg`]: integer matrices, characteristic polynomials, Kronecker
//!   powers, compound matrices, Hermite/Smith forms and sublattices.
//! * [`freegroup`]: free-group words and endomorphisms.
//! * [`liealg`]: Lyndon bases of the free Lie ring and induced maps on its
//!   homogeneous components.
//! * [`criteria`]: the decision procedures and the classifier producing a
//!   [`criteria::Verdict`].

pub mod criteria;
mod error;
pub mod freegroup;
pub mod intpoly;
mod jsonint;
pub mod liealg;
pub mod primes;
pub mod zlinalg;

pub use error::{Error, Result};

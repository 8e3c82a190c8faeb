//! Exact computations with finite-dimensional nilpotent Lie algebras over the
//! rationals: free nilpotent algebras on a Hall basis, Schur multipliers via
//! the Hopf formula, exterior squares, exterior centers, capability and covers.
//!
//! The crate is organised bottom-up:
//!
//! * [`linalg`]: rational matrices, canonical subspaces and quotient maps.
//! * [`lie`]: structure-constant tables, homomorphisms and structural operations.
//! * [`hall`]: Möbius/Witt counting, basic commutators and free nilpotent algebras.
//! * [`constructions`]: the named algebras `A(n)`, `H(m)`, `GH(d)` and friends.
//! * [`homology`]: free presentations and everything computed from them.
//! * [`verify`]: the catalogue of dimension claims checked by `liemult verify-paper`.

pub mod constructions;
mod error;
pub mod hall;
pub mod homology;
pub mod lie;
pub mod linalg;
pub mod notation;
pub mod verify;

pub use error::{Error, Result};
pub use lie::{LieAlgebra, LieHom};
pub use linalg::{MatrixQ, QuotientMap, Rational, Subspace};

//! Exact-arithmetic toolkit for integer lattices of generalized Kummer type:
//! the monodromy invariant of primitive isotropic classes, the polarization
//! types of the associated Lagrangian fibrations, and a brute-force oracle
//! that verifies the supporting lattice facts at desk scale.
//!
//! Everything is computed over arbitrary-precision integers and rationals;
//! there is no floating point in this crate.
//!
//! ```
//! use genkummer::{IntLattice, LatticeVector};
//! use genkummer::invariant::theta;
//! use genkummer::mukai::kummer_fibration_poltype;
//!
//! // α = 2e1 + 2f1 + δ is a primitive isotropic class of divisibility 2
//! let lambda = IntLattice::kummer(3).unwrap();
//! let alpha = LatticeVector::from_i64(&lambda, &[2, 2, 0, 0, 0, 0, 1]).unwrap();
//! let inv = theta(&alpha, 3).unwrap();
//! assert_eq!((inv.d, inv.b), (2, 1));
//! // the fibration attached to it is (1, 2, 2)-polarized
//! assert_eq!(kummer_fibration_poltype(3, inv.d).unwrap().entries(), &[1, 2, 2]);
//! ```

pub mod eichler;
pub mod error;
pub mod invariant;
pub mod isometry;
pub mod lattice;
pub mod mat;
pub mod mukai;
pub mod oracle;

pub use error::{Error, Result};
pub use invariant::{InvariantClass, PrimEmbedding};
pub use isometry::{DiscAction, GroupContext, Isometry, PositiveTriple, Sign};
pub use lattice::{DiscriminantGroup, IntLattice, Lattice, LatticeVector, Signature, Sublattice};
pub use mukai::{BmWitness, MukaiVector, PolType};
pub use oracle::{EnumerationConfig, MoveWord, Report};

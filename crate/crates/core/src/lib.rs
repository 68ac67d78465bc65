//! Symbolic engine for the polynomial Hopf *-algebra of SU_q(2) and its
//! direct square: normal-ordered arithmetic, Hopf structure maps, the Haar
//! state, unitary corepresentations, the Fourier transform of bipartite
//! operators, and positive-definiteness / PPT tests on the transform side.

pub mod corep;
pub mod entangle;
pub mod error;
pub mod fourier;
pub mod haar;
pub mod hopf;
pub mod io;
pub mod linalg;
pub mod qalgebra;
pub mod random;
pub mod traits;
pub mod verify;

pub use error::{Error, Result};
pub use hopf::MultiElement;
pub use qalgebra::{AlgebraParams, Element, Gen, Monomial, Sector};

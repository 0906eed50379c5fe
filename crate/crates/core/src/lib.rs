//! Exact computations with Schur, symplectic Schur and orthogonal Schur
//! functions, realized both by vertex-operator mode words on the Fock space
//! and by Weyl-type determinants.

pub mod error;
pub mod partition;
pub mod rational;
pub mod ring;
pub mod specialize;
pub mod symring;
pub mod vertexops;
pub mod weyldet;

pub use error::{Error, Result};
pub use partition::{partitions_of, partitions_up_to, FrobeniusCoords, Partition};
pub use rational::Rational;
pub use ring::CommRing;
pub use symring::{Basis, Generator, SymFunc};

//! Exact computations with automorphic Lie algebras on punctured spheres.
//!
//! The crate is organised bottom-up:
//!
//! * [`exactmath`]: cyclotomic scalars, exact matrices, kernels, eigenprojectors.
//! * [`liealg`]: Lie algebras given by structure constants.
//! * [`funring`]: rational functions with prescribed poles, jets, Jordan blocks,
//!   Hermite interpolation and Möbius maps.
//! * [`equivariant`]: finite group actions, invariants, jet ideals and quotients.
//! * [`truncur`]: twisted truncated current algebras.
//! * [`kacroots`]: root data, Kac coordinates and the root groupoid cochains.
//! * [`wildness`]: Makedonskii classification, solvable growth, commutants.
//!
//! Most code is generic over a [`exactmath::Field`]; the aliases below fix
//! the cyclotomic scalar used throughout the higher layers.

pub mod config;
pub mod equivariant;
mod error;
pub mod exactmath;
pub mod funring;
pub mod kacroots;
pub mod liealg;
pub mod presets;
pub mod truncur;
pub mod wildness;

pub use error::{Error, ErrorClass, Result};

/// The ground field of all higher-level computations.
pub type Scalar = exactmath::Cyc;
pub type Rational = num_rational::BigRational;
pub type Matrix = exactmath::ExactMatrix<Scalar>;
pub type Subspace = exactmath::Subspace<Scalar>;

pub type LieAlgebra = liealg::StructLieAlgebra<Scalar>;

//! Equivariant map algebras `(𝔤 ⊗ O_X)^Γ` on the sphere minus a finite set,
//! their jet ideals and the quotients by them.

mod action;
mod invariants;
mod quotient;
mod space;

pub use action::{GroupAction, GroupElement, Stabilizer, MAX_GROUP_ORDER};
pub use invariants::{point_evaluation, ChainStep, EquivariantElement, FilteredALiA};
pub use quotient::{fibre_dimension, jet_image_bound, kernel_dimension, quotient_by_jet_ideal, JetQuotient};
pub use space::{basis_of_degree, FunctionSpace};

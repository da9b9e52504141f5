//! Functions on a punctured sphere and their local data.
//!
//! A function is a reduced rational function whose poles lie in a finite
//! set `S`. Local data at a point are Taylor jets, equivalently the action
//! `f(J_{x,m})` on the indecomposable module of length `m` at `x`.

mod chart;
mod jets;
mod poly;
mod ratfunc;

pub use chart::{linearizing_coordinate, Chart};
pub use jets::{
    hermite_interpolate, hom_dimension, jet_matrix, jordan_block, jordan_eval, rational_jet, ring_generators,
    taylor_jet, Jet,
};
pub use poly::{series, Poly};
pub use ratfunc::{mobius_pullback, Mobius, PoleRationalFunction, RationalFunction, SpherePoint};

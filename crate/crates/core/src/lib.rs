//! Logarithmic bundles of hypersurface arrangements on projective space,
//! computed exactly over the rationals.

pub mod arrangement;
pub mod error;
pub mod exactpoly;
pub mod io;
pub mod logres;
pub mod sample;
pub mod torelli;

pub use error::{Error, Result};

//! Exact symbolic computation for differential and Poisson commutative
//! algebra over the rationals.

pub mod error;
pub mod groebner;
pub mod algebra;
pub mod counting;
pub mod dgeometry;
pub mod differential;
pub mod ore;
pub mod par;
pub mod poisson;
pub mod symbolics;

pub use error::{Error, Result};

//! Long-time asymptotics for the modified Camassa–Holm equation on a
//! nonzero background, computed through its Riemann–Hilbert formulation.

pub mod asymptotics;
pub mod cli;
pub mod error;
pub mod io;
pub mod localmodel;
pub mod phase;
pub mod rhfactors;
pub mod scattering;
pub mod soliton;
pub mod specfun;
pub mod tol;
pub mod validate;

pub use error::{Error, Result};
pub use num_complex::Complex64 as C64;

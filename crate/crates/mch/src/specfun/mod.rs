//! Special functions and numerical kernels used throughout the crate.

pub mod gamma;
pub mod pcf;
pub mod quad;
pub mod roots;
pub mod spline;

pub use gamma::{gamma, rgamma};
pub use pcf::{pcf, pcf_with_derivative};
pub use quad::{cauchy, integrate};
pub use roots::poly_roots;
pub use spline::{CubicSpline, MonotoneCubic};

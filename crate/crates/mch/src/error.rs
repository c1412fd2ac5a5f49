use num_complex::Complex64;
use thiserror::Error;

/// Every fallible operation in the crate reports one of these.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("non-finite input: {0}")]
    NonFinite(&'static str),
    #[error("Gamma has a pole at {0}")]
    GammaPole(Complex64),
    #[error("outside validated range: {0}")]
    OutOfRange(String),
    #[error("point {z} is too close to the contour (distance {dist:e})")]
    Proximity { z: Complex64, dist: f64 },
    #[error("degenerate polynomial (all coefficients zero)")]
    DegeneratePolynomial,
    #[error("eigenvalue iteration failed for degree {0} companion matrix")]
    EigenFailure(usize),
    #[error("pole of the phase function at z = {0}")]
    PhasePole(Complex64),
    #[error("degenerate xi = {xi}: {detail}")]
    DegenerateXi { xi: f64, detail: String },
    #[error("wrong curvature sign: eta * theta'' = {0} must be positive")]
    CurvatureSign(f64),
    #[error("singular spectral parameter z = {0}: too close to 0 or +-1")]
    SingularParameter(Complex64),
    #[error("ODE integration failed: {0}")]
    Ode(String),
    #[error("unimodularity violated at z = {z}: ||a|^2 - |b|^2 - 1| = {dev:e}")]
    Unimodularity { z: f64, dev: f64 },
    #[error("a(z) vanishes at z = {0} (spectral singularity)")]
    ZeroOfA(f64),
    #[error("non-simple zero of a(z) near {0}")]
    NonSimpleZero(Complex64),
    #[error("invalid profile: {0}")]
    Profile(String),
    #[error("|r|^2 = {0} is outside [0, 1)")]
    NuDomain(f64),
    #[error("xi_j = {0} is not an endpoint of Sigma_b")]
    NotAnEndpoint(f64),
    #[error("linear system ill-conditioned (condition number {0:e})")]
    IllConditioned(f64),
    #[error("residue conditions not satisfied (residual {0:e})")]
    Residual(f64),
    #[error("pole of the soliton ansatz at z = {0}")]
    AnsatzPole(Complex64),
    #[error("reconstructed solution not real (|Im q| = {0:e})")]
    NotReal(f64),
    #[error("logarithm of non-positive M11(i) = {0}")]
    LogDomain(Complex64),
    #[error("x(y) is not strictly increasing near y = {0}")]
    NonMonotone(f64),
    #[error("stencil too small: {0}")]
    Stencil(String),
    #[error("saddle {xi_j} too close to pole {pole} for contour radius {radius}")]
    SaddleNearPole { xi_j: f64, pole: Complex64, radius: f64 },
    #[error("M11(i) vanishes")]
    ZeroM11,
    #[error("configuration: {0}")]
    Config(String),
    #[error("io: {0}")]
    Io(String),
    #[error("parse: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}

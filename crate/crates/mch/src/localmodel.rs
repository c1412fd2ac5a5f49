//! Parabolic-cylinder local model at a stationary point ξ_j.
//!
//! With ζ = (2tη_jθ″(ξ_j))^{1/2}(z − ξ_j) the local problem is solved by a
//! matrix Ψ(ζ) built from Weber functions, normalized as
//! Ψ ~ ζ^{iηνσ₃} e^{−iηζ²σ₃/4} (principal branch of the power) and satisfying
//! dΨ/dζ + iηζσ₃Ψ/2 = βΨ with β = [[0, β₁₂], [β₂₁, 0]], β₁₂β₂₁ = ν.
//! Across the real axis Ψ₊ = Ψ₋V with
//! V = [[1 − |r̂|², r̂], [−\bar r̂, 1]] for η = +1 and
//! V = [[1, r̂], [−\bar r̂, 1 − |r̂|²]] for η = −1.

use crate::error::{Error, Result};
use crate::phase::theta;
use crate::rhfactors::{nu, RHFactorization};
use crate::specfun::{gamma, pcf_with_derivative};
use nalgebra::Matrix2;
use num_complex::Complex64 as C;
use std::f64::consts::{FRAC_PI_4, PI};

/// Offsets used for Richardson boundary values, as in the δ jump check.
pub const BOUNDARY_OFFSETS: (f64, f64) = (1e-3, 1e-4);

fn check_curvature(curvature: f64, eta: i8) -> Result<()> {
    if eta != 1 && eta != -1 {
        return Err(Error::Config(format!("branch sign must be +-1 (got {eta})")));
    }
    let s = eta as f64 * curvature;
    if !(s > 0.0) || !s.is_finite() {
        return Err(Error::CurvatureSign(s));
    }
    Ok(())
}

/// r̂ = r(ξ_j) T_j² e^{−2itθ(ξ_j)} e^{−iην ln(2tηθ″)}, with ν = ν(|r(ξ_j)|²) and
/// `t_theta` = tθ(ξ_j).
pub fn scaled_reflection(r_val: C, t_j: C, t_theta: f64, curvature: f64, eta: i8, t: f64) -> Result<C> {
    check_curvature(curvature, eta)?;
    if !(t > 0.0) {
        return Err(Error::Config(format!("t = {t} must be positive")));
    }
    if r_val.norm() == 0.0 {
        return Ok(C::new(0.0, 0.0));
    }
    let v = nu(r_val.norm_sqr())?;
    let e = eta as f64;
    let phase = -2.0 * t_theta - e * v * (2.0 * t * e * curvature).ln();
    Ok(r_val * t_j * t_j * C::from_polar(1.0, phase))
}

/// (β₁₂, β₂₁) from −\bar r̂ = ψ₁₁⁻ψ₂₁⁺ − ψ₂₁⁻ψ₁₁⁺:
/// β₁₂ = −√(2π) e^{iπ/4} e^{−πν/2} / (\bar r̂ Γ(−iν)) for η = +1,
/// β₁₂ = √(2π) e^{−iπ/4} e^{−πν/2} / (\bar r̂ Γ(iν)) for η = −1,
/// and β₂₁ = ν/β₁₂. Here ν = ν(|r̂|²).
pub fn beta_coeffs(r_hat: C, eta: i8) -> Result<(C, C)> {
    if eta != 1 && eta != -1 {
        return Err(Error::Config(format!("branch sign must be +-1 (got {eta})")));
    }
    if r_hat.norm() == 0.0 {
        return Ok((C::new(0.0, 0.0), C::new(0.0, 0.0)));
    }
    let v = nu(r_hat.norm_sqr())?;
    let e = eta as f64;
    let g = gamma(C::new(0.0, -e * v))?;
    let num = (2.0 * PI).sqrt() * (-0.5 * PI * v).exp() * C::from_polar(1.0, e * FRAC_PI_4);
    let b12 = -e * num / (r_hat.conj() * g);
    Ok((b12, v / b12))
}

/// A_j = (2ηθ″)^{−1/2} m₁, where m₁ is the 1/ζ coefficient of the model
/// solution: [[0, −iβ₁₂], [iβ₂₁, 0]] for η = +1 and its negative for η = −1.
pub fn a_matrix(beta12: C, beta21: C, curvature: f64, eta: i8) -> Result<Matrix2<C>> {
    check_curvature(curvature, eta)?;
    let s = C::new(eta as f64 / (2.0 * eta as f64 * curvature).sqrt(), 0.0);
    let zero = C::new(0.0, 0.0);
    Ok(Matrix2::new(zero, -C::i() * beta12, C::i() * beta21, zero) * s)
}

/// Local model at one stationary point.
#[derive(Debug, Clone, PartialEq)]
pub struct SaddleModel {
    pub index: usize,
    pub xi_j: f64,
    pub eta: i8,
    pub nu: f64,
    /// θ″(ξ_j).
    pub curvature: f64,
    pub r_hat: C,
    pub beta12: C,
    pub beta21: C,
    pub a: Matrix2<C>,
    pub t: f64,
}

/// Which half-plane formula to use for Ψ.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Upper,
    Lower,
}

impl SaddleModel {
    /// Model from the reflection value, T_j and tθ(ξ_j) at a stationary point.
    pub fn new(index: usize, xi_j: f64, eta: i8, curvature: f64, r_val: C, t_j: C, t_theta: f64, t: f64) -> Result<Self> {
        let r_hat = scaled_reflection(r_val, t_j, t_theta, curvature, eta, t)?;
        Self::from_scaled(index, xi_j, eta, curvature, r_hat, t)
    }

    /// Model from an already scaled reflection r̂.
    pub fn from_scaled(index: usize, xi_j: f64, eta: i8, curvature: f64, r_hat: C, t: f64) -> Result<Self> {
        check_curvature(curvature, eta)?;
        let (beta12, beta21) = beta_coeffs(r_hat, eta)?;
        let a = a_matrix(beta12, beta21, curvature, eta)?;
        let v = nu(r_hat.norm_sqr())?;
        Ok(SaddleModel { index, xi_j, eta, nu: v, curvature, r_hat, beta12, beta21, a, t })
    }

    /// One model per stationary point of `fact` at time t.
    ///
    /// T_j is taken as the limit of T(z)|z − ξ_j|^{−iην} along the real axis
    /// from the side outside Σ_b, where |T| = 1. At left endpoints this is
    /// e^{πν_j} times the limit from C₊.
    pub fn from_factorization(fact: &RHFactorization, t: f64) -> Result<Vec<SaddleModel>> {
        let p = &fact.portrait;
        (0..p.points.len())
            .map(|j| {
                let x = p.points[j];
                let (eta, d2) = (p.signs[j], p.curvatures[j]);
                let r_val = fact.reflection().eval(x);
                let t_theta = t * theta(C::new(x, 0.0), fact.xi)?.re;
                let t_j = if r_val.norm() == 0.0 {
                    C::new(1.0, 0.0)
                } else {
                    let tj = fact.t_j(j)?;
                    if p.endpoint_orientation(j)? < 0 {
                        tj * (PI * nu(r_val.norm_sqr())?).exp()
                    } else {
                        tj
                    }
                };
                SaddleModel::new(j, x, eta, d2, r_val, t_j, t_theta, t)
            })
            .collect()
    }

    /// ζ(z) = (2tηθ″)^{1/2}(z − ξ_j).
    pub fn zeta(&self, z: C) -> C {
        (2.0 * self.t * self.eta as f64 * self.curvature).sqrt() * (z - self.xi_j)
    }

    /// The 2×2 β matrix of the model equation.
    pub fn beta(&self) -> Matrix2<C> {
        let zero = C::new(0.0, 0.0);
        Matrix2::new(zero, self.beta12, self.beta21, zero)
    }

    /// Ψ and dΨ/dζ from the half-plane formula `side`. Each entry is entire,
    /// so on the real axis this gives the boundary value Ψ₊ or Ψ₋ exactly.
    pub fn psi_with_derivative(&self, zeta: C, side: Side) -> Result<(Matrix2<C>, Matrix2<C>)> {
        let e = self.eta as f64;
        // rotations c₁, c₂ with c₁² = iη, c₂² = −iη keeping c·ζ inside the
        // sector where D_a is recessive
        let (r1, r2) = match (self.eta, side) {
            (1, Side::Upper) => (-0.75, -0.25),
            (1, Side::Lower) => (0.25, 0.75),
            (_, Side::Upper) => (-0.25, -0.75),
            (_, Side::Lower) => (0.75, 0.25),
        };
        let c1 = C::from_polar(1.0, r1 * PI);
        let c2 = C::from_polar(1.0, r2 * PI);
        let a = C::new(0.0, e * self.nu);
        // c^{∓a} on the principal branch of ln c
        let n1 = (-a * C::new(0.0, r1 * PI)).exp();
        let n2 = (a * C::new(0.0, r2 * PI)).exp();
        let (d11, dd11) = pcf_with_derivative(a, c1 * zeta)?;
        let (d21, dd21) = pcf_with_derivative(a - 1.0, c1 * zeta)?;
        let (d22, dd22) = pcf_with_derivative(-a, c2 * zeta)?;
        let (d12, dd12) = pcf_with_derivative(-a - 1.0, c2 * zeta)?;
        // a/β₁₂ = iηβ₂₁ and −aβ₁₂/ν = −iηβ₁₂
        let k21 = n1 * c1 * C::i() * e * self.beta21;
        let k12 = -n2 * c2 * C::i() * e * self.beta12;
        let psi = Matrix2::new(n1 * d11, k12 * d12, k21 * d21, n2 * d22);
        let dpsi = Matrix2::new(n1 * c1 * dd11, k12 * c2 * dd12, k21 * c1 * dd21, n2 * c2 * dd22);
        Ok((psi, dpsi))
    }

    /// Ψ(ζ) off the real axis.
    pub fn psi(&self, zeta: C) -> Result<Matrix2<C>> {
        let side = if zeta.im > 0.0 {
            Side::Upper
        } else if zeta.im < 0.0 {
            Side::Lower
        } else {
            return Err(Error::Proximity { z: zeta, dist: 0.0 });
        };
        Ok(self.psi_with_derivative(zeta, side)?.0)
    }

    /// ‖dΨ/dζ + iηζσ₃Ψ/2 − βΨ‖_max.
    pub fn ode_residual(&self, zeta: C, side: Side) -> Result<f64> {
        let (p, dp) = self.psi_with_derivative(zeta, side)?;
        let h = C::i() * self.eta as f64 * zeta / 2.0;
        let s3 = Matrix2::new(h, C::new(0.0, 0.0), C::new(0.0, 0.0), -h);
        Ok((dp + s3 * p - self.beta() * p).iter().map(|v| v.norm()).fold(0.0, f64::max))
    }

    /// Boundary value Ψ_±(s) by Richardson extrapolation from s ± iδ at the
    /// two offsets in [`BOUNDARY_OFFSETS`].
    pub fn psi_boundary(&self, s: f64, side: Side) -> Result<Matrix2<C>> {
        let sign = if side == Side::Upper { 1.0 } else { -1.0 };
        let (h1, h2) = BOUNDARY_OFFSETS;
        let f1 = self.psi(C::new(s, sign * h1))?;
        let f2 = self.psi(C::new(s, sign * h2))?;
        // first-order error in the offset
        Ok((f2 * C::new(h1, 0.0) - f1 * C::new(h2, 0.0)) / C::new(h1 - h2, 0.0))
    }

    /// ψ₁₁⁻ψ₂₁⁺ − ψ₂₁⁻ψ₁₁⁺ at a real node from Richardson boundary values;
    /// equals −\bar r̂.
    pub fn jump_identity(&self, s: f64) -> Result<C> {
        let p = self.psi_boundary(s, Side::Upper)?;
        let m = self.psi_boundary(s, Side::Lower)?;
        Ok(m[(0, 0)] * p[(1, 0)] - m[(1, 0)] * p[(0, 0)])
    }

    /// Ψ₋(s)⁻¹Ψ₊(s) at a real node, from the exact half-plane continuations.
    pub fn jump(&self, s: f64) -> Result<Matrix2<C>> {
        let z = C::new(s, 0.0);
        let p = self.psi_with_derivative(z, Side::Upper)?.0;
        let m = self.psi_with_derivative(z, Side::Lower)?.0;
        // det Ψ₋ = 1
        let inv = Matrix2::new(m[(1, 1)], -m[(0, 1)], -m[(1, 0)], m[(0, 0)]);
        Ok(inv * p)
    }

    /// The jump matrix the model is built to satisfy.
    pub fn expected_jump(&self) -> Matrix2<C> {
        let g = C::new(1.0 - self.r_hat.norm_sqr(), 0.0);
        let one = C::new(1.0, 0.0);
        let (d1, d2) = if self.eta > 0 { (g, one) } else { (one, g) };
        Matrix2::new(d1, self.r_hat, -self.r_hat.conj(), d2)
    }

    /// The local correction t^{−1/2}A_j/(z − ξ_j).
    pub fn correction(&self, z: C) -> Matrix2<C> {
        self.a * (C::new(self.t.powf(-0.5), 0.0) / (z - self.xi_j))
    }
}

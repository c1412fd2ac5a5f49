//! Long-time asymptotic assembly: region dispatch, the error matrix E near
//! z = i, its t^{−1/2} coefficients f₁, f₂, the corrections h₁₁, h₁₂ and
//! the resulting (q, x).
//!
//! Near z = i the solution factors as M = E·M^{(sol)}·T^{−σ₃} up to the
//! orders tagged in [`ErrorOrder`]. With N = E(i)M^{(sol)}(i) and
//! N′ = E₁M^{(sol)}(i) + E(i)∂M^{(sol)}(i), the reconstruction gives
//! q = −(N′₁₂ − T₀N₁₂)N₁₁ − (N′₂₁ + T₀N₂₁)/N₁₁ and x = y + 2 ln N₁₁ − 2 ln T(i).

use crate::error::{Error, Result};
use crate::localmodel::SaddleModel;
use crate::phase::Region;
use crate::rhfactors::{Reflection, RHFactorization};
use crate::scattering::DiscreteSpectrum;
use crate::soliton::{SolitonData, SolitonState};
use crate::tol::Tolerances;
use nalgebra::Matrix2;
use num_complex::Complex64 as C;
use serde::Serialize;
use std::f64::consts::PI;

/// Default radius of the disks U(ξ_j).
pub const DISK_RADIUS: f64 = 0.1;
/// Trapezoid nodes on each disk boundary.
pub const DISK_NODES: usize = 128;

const I: C = C::new(0.0, 1.0);

/// Order of the neglected remainder.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ErrorOrder {
    #[serde(rename = "t^-1/4")]
    QuarterPower,
    #[serde(rename = "t^-3/4")]
    ThreeQuarterPower,
}

impl ErrorOrder {
    pub fn label(self) -> &'static str {
        match self {
            ErrorOrder::QuarterPower => "t^-1/4",
            ErrorOrder::ThreeQuarterPower => "t^-3/4",
        }
    }
}

/// Saddle-region diagnostics.
#[derive(Debug, Clone, PartialEq)]
pub struct Diagnostics {
    pub f1: Matrix2<C>,
    pub f2: Matrix2<C>,
    /// E(i) = I + t^{−1/2}f₁.
    pub e_at_i: Matrix2<C>,
    pub h11: C,
    pub h12: C,
    pub models: Vec<SaddleModel>,
}

/// Asymptotic (q, x) at one (y, t).
#[derive(Debug, Clone)]
pub struct AsymptoticExpansion {
    pub y: f64,
    pub t: f64,
    pub xi: f64,
    pub region: Region,
    /// q_sol(y, t; Λ).
    pub q_leading: f64,
    /// q − q_leading; identically zero without stationary points.
    pub q_correction: f64,
    pub x_map: f64,
    /// c₊ = 2 ln M^{(sol)}₁₁(i).
    pub c_plus: f64,
    pub t_at_i: C,
    pub t0: C,
    pub error_order: ErrorOrder,
    pub diagnostics: Option<Diagnostics>,
}

impl AsymptoticExpansion {
    pub fn q(&self) -> f64 {
        self.q_leading + self.q_correction
    }
}

fn sigma2() -> Matrix2<C> {
    Matrix2::new(C::new(0.0, 0.0), -I, I, C::new(0.0, 0.0))
}

/// M⁻¹ = σ₂MᵀΣσ₂ for det M = 1.
pub fn unimodular_inverse(m: &Matrix2<C>) -> Matrix2<C> {
    sigma2() * m.transpose() * sigma2()
}

/// Radius of U(ξ_j): [`DISK_RADIUS`] clipped to half the distance to the
/// other saddles and to z = ±1. A pole of M^{(sol)} inside the disk is an error.
pub fn disk_radius(models: &[SaddleModel], j: usize, poles: &[C]) -> Result<f64> {
    let x = models[j].xi_j;
    let mut r = DISK_RADIUS;
    for (k, m) in models.iter().enumerate() {
        if k != j {
            r = r.min(0.5 * (m.xi_j - x).abs());
        }
    }
    for s in [1.0f64, -1.0] {
        r = r.min(0.5 * (s - x).abs());
    }
    // poles come in conjugate pairs at equal distance from the real center
    for &p in poles {
        if (p - x).norm() < DISK_RADIUS {
            return Err(Error::SaddleNearPole { xi_j: x, pole: p, radius: DISK_RADIUS });
        }
    }
    Ok(r)
}

fn check_poles(models: &[SaddleModel], sol: &SolitonState) -> Result<()> {
    for j in 0..models.len() {
        disk_radius(models, j, &sol.poles)?;
    }
    Ok(())
}

/// f₁ = −Σ_j M(ξ_j)A_jM(ξ_j)⁻¹/(ξ_j − i), f₂ = Σ_j M(ξ_j)A_jM(ξ_j)⁻¹/(ξ_j − i)²
/// with M = M^{(sol)}, the residues of the disk integrals of E(i) and E₁.
pub fn error_coeffs(models: &[SaddleModel], sol: &SolitonState) -> Result<(Matrix2<C>, Matrix2<C>)> {
    check_poles(models, sol)?;
    let mut f1 = Matrix2::zeros();
    let mut f2 = Matrix2::zeros();
    for m in models {
        let z = C::new(m.xi_j, 0.0);
        let ms = sol.eval(z)?;
        let g = ms * m.a * unimodular_inverse(&ms);
        f1 -= g / (z - I);
        f2 += g / ((z - I) * (z - I));
    }
    Ok((f1, f2))
}

/// The same sums with M(ξ_j)⁻¹ replaced by σ₂M(ξ_j)σ₂/(1 − ξ_j⁻²), as the
/// closed form is printed. Kept to quantify the discrepancy.
pub fn error_coeffs_printed(models: &[SaddleModel], sol: &SolitonState) -> Result<(Matrix2<C>, Matrix2<C>)> {
    check_poles(models, sol)?;
    let s2 = sigma2();
    let mut f1 = Matrix2::zeros();
    let mut f2 = Matrix2::zeros();
    for m in models {
        let z = C::new(m.xi_j, 0.0);
        let ms = sol.eval(z)?;
        let g = ms * m.a * s2 * ms * s2 / (1.0 - 1.0 / (z * z));
        f1 -= g / (z - I);
        f2 += g / ((z - I) * (z - I));
    }
    Ok((f1, f2))
}

/// f₁, f₂ from trapezoid quadrature of (1/2πi)∮ M A_j M⁻¹/((s − i)^p (s − ξ_j)) ds
/// over clockwise circles ∂U(ξ_j), p = 1, 2, using a general matrix inverse.
pub fn error_coeffs_quadrature(models: &[SaddleModel], sol: &SolitonState, nodes: usize) -> Result<(Matrix2<C>, Matrix2<C>)> {
    let mut f1 = Matrix2::zeros();
    let mut f2 = Matrix2::zeros();
    for (j, m) in models.iter().enumerate() {
        let rho = disk_radius(models, j, &sol.poles)?;
        for k in 0..nodes {
            let e = C::from_polar(rho, -2.0 * PI * k as f64 / nodes as f64);
            let s = m.xi_j + e;
            let ms = sol.eval(s)?;
            let inv = ms.try_inverse().ok_or(Error::NonFinite("M^(sol) inverse on disk boundary"))?;
            // ds = −i e dφ on the clockwise circle; (1/2πi)·(−i e)/(s − ξ_j) = −1/(2π)
            let g = ms * m.a * inv / C::new(nodes as f64, 0.0);
            f1 -= g / (s - I);
            f2 += g / ((s - I) * (s - I));
        }
    }
    Ok((f1, f2))
}

/// Linear t^{−1/2} coefficients (h₁₁, h₁₂) of q and x:
/// q = q_sol + t^{−1/2}h₁₁ + O(t^{−1}), x = y + 2 ln M₁₁(i) − 2 ln T(i) + t^{−1/2}h₁₂.
/// Uses that M^{(sol)}(i) is diagonal.
pub fn correction_terms(f1: &Matrix2<C>, f2: &Matrix2<C>, sol: &SolitonState, t_i: C, t0: C) -> Result<(C, C)> {
    let s = sol.eval(I)?;
    let d = sol.derivative(I)?;
    let s11 = s[(0, 0)];
    if s11.norm() == 0.0 || t_i.norm() == 0.0 {
        return Err(Error::ZeroM11);
    }
    let s22 = s[(1, 1)];
    let dn12 = f2[(0, 1)] * s22 + f1[(0, 0)] * d[(0, 1)] + f1[(0, 1)] * d[(1, 1)];
    let dn21 = f2[(1, 0)] * s11 + f1[(1, 0)] * d[(0, 0)] + f1[(1, 1)] * d[(1, 0)];
    let h11 = -(dn12 - t0 * f1[(0, 1)] * s22) * s11 - d[(0, 1)] * f1[(0, 0)] * s11
        - (dn21 + t0 * f1[(1, 0)] * s11) / s11
        + d[(1, 0)] * f1[(0, 0)] / s11;
    let h12 = 2.0 * (f1[(0, 0)] + f1[(0, 1)] * s[(1, 0)] / s11);
    Ok((h11, h12))
}

/// The printed expressions for h₁₁ and h₁₂, transcribed term by term for
/// comparison (h₁₂ includes its t^{−1/2}). `m1` is ∂M^{(sol)}(i).
pub fn correction_terms_printed(f1: &Matrix2<C>, f2: &Matrix2<C>, sol: &SolitonState, t_i: C, t0: C, t: f64) -> Result<(C, C)> {
    let m = sol.eval(I)?;
    let m1 = sol.derivative(I)?;
    let f = |a: &Matrix2<C>, j: usize, k: usize| a[(j - 1, k - 1)];
    let g = |j: usize, k: usize| m[(j - 1, k - 1)];
    let g1 = |j: usize, k: usize| m1[(j - 1, k - 1)];
    let lead = f(f1, 1, 1) * g(1, 1) + f(f1, 1, 2) * g(2, 1);
    if lead.norm() == 0.0 || g(1, 1).norm() == 0.0 {
        return Ok((C::new(0.0, 0.0), C::new(0.0, 0.0)));
    }
    let first = (f(f2, 2, 1) * g(1, 2) + f(f2, 2, 1) * g(1, 2)) * t_i
        + (f(f1, 1, 1) * g1(1, 2) + f(f1, 1, 2) * g1(2, 2)) * t_i
        + (f(f1, 1, 1) * g(1, 2) + f(f1, 1, 2) * g(2, 2)) * t_i * t0;
    let second = (f(f2, 2, 1) * g(1, 1) + f(f2, 2, 2) * g(2, 2)) / t_i
        + (f(f1, 2, 1) * g1(1, 1) + f(f1, 2, 2) * g1(2, 1)) / t_i
        - (f(f1, 2, 1) * g(1, 1) + f(f1, 2, 2) * g(2, 1)) / t_i * t0;
    let h11 = -first * lead * t_i - second / lead / t_i;
    let s = t.powf(-0.5);
    let h12 = ((1.0 + s * f(f1, 1, 1)) + g(2, 1) / g(1, 1) * s * f(f1, 1, 2)).ln();
    Ok((h11, h12))
}

/// q and ln N₁₁ from M ≈ E M^{(sol)} T^{−σ₃} at z = i with E(i) = I + s f₁,
/// E₁ = s f₂; s = t^{−1/2} at the physical point.
pub fn reconstruct_factored(f1: &Matrix2<C>, f2: &Matrix2<C>, sol: &SolitonState, t0: C, s: f64) -> Result<(C, C)> {
    let e = Matrix2::identity() + f1 * C::new(s, 0.0);
    let e1 = f2 * C::new(s, 0.0);
    let s = sol.eval(I)?;
    let n = e * s;
    let dn = e1 * s + e * sol.derivative(I)?;
    let n11 = n[(0, 0)];
    if n11.norm() == 0.0 {
        return Err(Error::ZeroM11);
    }
    let q = -(dn[(0, 1)] - t0 * n[(0, 1)]) * n11 - (dn[(1, 0)] + t0 * n[(1, 0)]) / n11;
    Ok((q, n11.ln()))
}

/// Asymptotic solution at (y, t) from prepared factorization data at ξ = y/t.
pub fn evaluate_with(fact: &RHFactorization, y: f64, t: f64, tol: &Tolerances) -> Result<AsymptoticExpansion> {
    if !(t >= 1.0) {
        return Err(Error::Config(format!("asymptotic evaluation needs t >= 1 (got {t})")));
    }
    let xi = y / t;
    if (xi - fact.xi).abs() > 1e-12 * xi.abs().max(1.0) {
        return Err(Error::Config(format!("factorization prepared at xi = {} but y/t = {xi}", fact.xi)));
    }
    let region = Region::classify(xi)?;
    let data = SolitonData::from_factorization(fact)?;
    let sol = data.solve(y, t, tol.residue)?;
    let rec = sol.reconstruct()?;
    let t_i = fact.t_at_i()?;
    let t0 = fact.t0()?;
    if !(t_i.re > 0.0) || t_i.im.abs() > 1e-9 * t_i.norm() {
        return Err(Error::LogDomain(t_i));
    }
    let c_plus = rec.x - y;
    let x_lead = rec.x - 2.0 * t_i.re.ln();
    if region.count() == 0 {
        return Ok(AsymptoticExpansion {
            y,
            t,
            xi,
            region,
            q_leading: rec.q,
            q_correction: 0.0,
            x_map: x_lead,
            c_plus,
            t_at_i: t_i,
            t0,
            error_order: ErrorOrder::QuarterPower,
            diagnostics: None,
        });
    }
    let models = SaddleModel::from_factorization(fact, t)?;
    let (f1, f2) = error_coeffs(&models, &sol)?;
    let s = t.powf(-0.5);
    let e = Matrix2::identity() + f1 * C::new(s, 0.0);
    let (h11, h12) = correction_terms(&f1, &f2, &sol, t_i, t0)?;
    let (q, ln_n11) = reconstruct_factored(&f1, &f2, &sol, t0, s)?;
    if q.im.abs() > 1e-8 * q.norm().max(1.0) {
        return Err(Error::NotReal(q.im.abs()));
    }
    Ok(AsymptoticExpansion {
        y,
        t,
        xi,
        region,
        q_leading: rec.q,
        q_correction: q.re - rec.q,
        x_map: y + 2.0 * ln_n11.re - 2.0 * t_i.re.ln(),
        c_plus,
        t_at_i: t_i,
        t0,
        error_order: ErrorOrder::ThreeQuarterPower,
        diagnostics: Some(Diagnostics { f1, f2, e_at_i: e, h11, h12, models }),
    })
}

/// Asymptotic solution at (y, t) for reflection data and a discrete spectrum.
pub fn evaluate(y: f64, t: f64, reflection: &Reflection, spectrum: &DiscreteSpectrum, eps0: Option<f64>, tol: &Tolerances) -> Result<AsymptoticExpansion> {
    if !(t >= 1.0) {
        return Err(Error::Config(format!("asymptotic evaluation needs t >= 1 (got {t})")));
    }
    let xi = y / t;
    Region::classify(xi)?;
    let eps0 = match eps0 {
        Some(e) => Some(e),
        None => {
            let ims: Vec<f64> =
                spectrum.poles.iter().map(|p| crate::phase::theta(p.z, xi).map(|v| v.im)).collect::<Result<_>>()?;
            Some(crate::rhfactors::default_eps0(&ims, tol.eps0_factor, tol.eps0_floor))
        }
    };
    let fact = RHFactorization::new(xi, reflection.clone(), spectrum.clone(), eps0, tol.quad)?;
    evaluate_with(&fact, y, t, tol)
}

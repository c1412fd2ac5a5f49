//! Scalar factorization data for the Riemann–Hilbert problem at fixed ξ:
//! δ(z), T(z), T(i), T₀, β_j, T_j, the Δ/∇/Λ pole partition and the
//! modified norming constants.

pub mod reflection;

pub use reflection::{nu, Reflection};

use crate::error::{Error, Result};
use crate::phase::{stationary_points, theta, PhasePortrait};
use crate::scattering::DiscreteSpectrum;
use crate::specfun::{cauchy, integrate};
use num_complex::Complex64 as C;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

/// Sign of Im θ at a pole.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum PoleSide {
    /// Im θ < 0: e^{2itθ} grows.
    Delta,
    /// Im θ > 0: e^{2itθ} decays.
    Nabla,
    /// Im θ = 0 exactly.
    Neutral,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PoleTag {
    pub side: PoleSide,
    /// |Im θ| ≤ ε₀.
    pub lambda: bool,
    pub im_theta: f64,
}

/// Default ε₀ = max(0.1·min_n |Im θ(η_n)|, 1e-3).
pub fn default_eps0(im_thetas: &[f64], factor: f64, floor: f64) -> f64 {
    let m = im_thetas.iter().map(|v| v.abs()).fold(f64::INFINITY, f64::min);
    if m.is_finite() {
        (factor * m).max(floor)
    } else {
        floor
    }
}

/// Tag every pole by the sign of Im θ(η_n; ξ) and membership in Λ.
pub fn partition(spectrum: &DiscreteSpectrum, xi: f64, eps0: f64) -> Result<Vec<PoleTag>> {
    spectrum
        .poles
        .iter()
        .map(|p| {
            let im = theta(p.z, xi)?.im;
            let side = if im < 0.0 {
                PoleSide::Delta
            } else if im > 0.0 {
                PoleSide::Nabla
            } else {
                PoleSide::Neutral
            };
            Ok(PoleTag { side, lambda: im.abs() <= eps0, im_theta: im })
        })
        .collect()
}

/// Factorization data at one ξ. Immutable after construction.
#[derive(Debug, Clone)]
pub struct RHFactorization {
    pub xi: f64,
    pub portrait: PhasePortrait,
    /// Σ_b(ξ) clipped to the support of r.
    pub sigma_b: Vec<(f64, f64)>,
    pub eps0: f64,
    pub tags: Vec<PoleTag>,
    pub spectrum: DiscreteSpectrum,
    reflection: Reflection,
    tol: f64,
}

impl RHFactorization {
    /// `eps0 = None` selects [`default_eps0`] with factor 0.1 and floor 1e-3.
    pub fn new(xi: f64, reflection: Reflection, spectrum: DiscreteSpectrum, eps0: Option<f64>, tol: f64) -> Result<Self> {
        let portrait = stationary_points(xi)?;
        let sigma_b = match reflection.support() {
            None => Vec::new(),
            Some((lo, hi)) => portrait
                .sigma_b()
                .into_iter()
                .map(|(a, b)| (a.max(lo), b.min(hi)))
                .filter(|(a, b)| b > a)
                .collect(),
        };
        let ims: Vec<f64> = spectrum.poles.iter().map(|p| theta(p.z, xi).map(|t| t.im)).collect::<Result<_>>()?;
        let eps0 = eps0.unwrap_or_else(|| default_eps0(&ims, 0.1, 1e-3));
        if !(eps0 > 0.0) {
            return Err(Error::Config(format!("eps0 = {eps0} must be positive")));
        }
        let tags = partition(&spectrum, xi, eps0)?;
        for p in &spectrum.poles {
            if sigma_b.iter().any(|&(a, b)| p.z.im == 0.0 && p.z.re >= a && p.z.re <= b) {
                return Err(Error::Proximity { z: p.z, dist: 0.0 });
            }
        }
        Ok(RHFactorization { xi, portrait, sigma_b, eps0, tags, spectrum, reflection, tol })
    }

    pub fn reflection(&self) -> &Reflection {
        &self.reflection
    }

    /// Indices of poles in Δ∖Λ, the ones absorbed into T.
    pub fn blaschke_indices(&self) -> Vec<usize> {
        (0..self.tags.len()).filter(|&n| self.tags[n].side == PoleSide::Delta && !self.tags[n].lambda).collect()
    }

    /// Indices of poles in Λ, kept as residue conditions.
    pub fn lambda_indices(&self) -> Vec<usize> {
        (0..self.tags.len()).filter(|&n| self.tags[n].lambda).collect()
    }

    fn log_gap_fn(&self) -> impl Fn(f64) -> C + '_ {
        move |s| C::new(self.reflection.log_gap(s).unwrap_or(f64::NAN), 0.0)
    }

    fn check_domain(&self) -> Result<()> {
        for &(a, b) in &self.sigma_b {
            for s in [a, 0.5 * (a + b), b] {
                self.reflection.log_gap(s)?;
            }
        }
        Ok(())
    }

    /// Σ_I ∫_I ln(1 − |r|²)/(s − z) ds.
    fn cauchy_log_gap(&self, z: C) -> Result<C> {
        let f = self.log_gap_fn();
        let mut acc = C::new(0.0, 0.0);
        for &(a, b) in &self.sigma_b {
            acc += cauchy(&f, a, b, z, self.tol)?;
        }
        if !acc.is_finite() {
            self.check_domain()?;
            return Err(Error::NonFinite("Cauchy integral of ln(1 - |r|^2)"));
        }
        Ok(acc)
    }

    /// ln δ(z) = (1/2πi)∫_{Σ_b} ln(1 − |r(s)|²)/(s − z) ds.
    pub fn log_delta(&self, z: C) -> Result<C> {
        Ok(self.cauchy_log_gap(z)? / (2.0 * PI * C::i()))
    }

    pub fn delta(&self, z: C) -> Result<C> {
        Ok(self.log_delta(z)?.exp())
    }

    /// Π_{Δ∖Λ} (z − η_n)/(z − η̄_n).
    pub fn blaschke(&self, z: C) -> Result<C> {
        let mut p = C::new(1.0, 0.0);
        for n in self.blaschke_indices() {
            let eta = self.spectrum.poles[n].z;
            let d = z - eta.conj();
            if d.norm() < 1e-14 {
                return Err(Error::SingularParameter(z));
            }
            p *= (z - eta) / d;
        }
        Ok(p)
    }

    /// T(z) = Π_{Δ∖Λ} (z − η_n)/(z − η̄_n) · δ(z).
    pub fn t(&self, z: C) -> Result<C> {
        Ok(self.blaschke(z)? * self.delta(z)?)
    }

    /// T(i). Each quartet contributes ((|z|² + 1 − 2 Im z)/(|z|² + 1 + 2 Im z))²,
    /// each circle pair the unsquared ratio.
    pub fn t_at_i(&self) -> Result<C> {
        self.t(C::i())
    }

    /// T₀ = −T′(i)/T(i), so that T(z) = T(i)(1 − T₀(z − i)) + O((z − i)²).
    pub fn t0(&self) -> Result<C> {
        let i = C::i();
        let mut d = C::new(0.0, 0.0);
        for n in self.blaschke_indices() {
            let eta = self.spectrum.poles[n].z;
            d += 1.0 / (i - eta) - 1.0 / (i - eta.conj());
        }
        let f = self.log_gap_fn();
        let mut acc = C::new(0.0, 0.0);
        for &(a, b) in &self.sigma_b {
            acc += integrate(|s| f(s) / ((s - i) * (s - i)), a, b, self.tol)?;
        }
        d += acc / (2.0 * PI * i);
        Ok(-d)
    }

    /// The Σ_b interval having ξ_j as an endpoint and its orientation (+1 right end).
    fn endpoint_interval(&self, j: usize) -> Result<((f64, f64), i8, f64)> {
        let eps = self.portrait.endpoint_orientation(j)?;
        let x = self.portrait.points[j];
        let iv = self
            .sigma_b
            .iter()
            .copied()
            .find(|&(a, b)| if eps > 0 { b == x } else { a == x })
            .ok_or(Error::NotAnEndpoint(x))?;
        Ok((iv, eps, x))
    }

    /// β_j(z) = ∫_{Σ_b} ν(s)/(s − z) ds − ε_j ν(ξ_j) ln(z − ξ_j), with ε_j = +1 at a
    /// right endpoint of Σ_b (principal log) and −1 at a left endpoint (log with
    /// its cut along Σ_b near ξ_j). Regular at ξ_j, and δ(z) = e^{iβ_j}(z − ξ_j)^{iε_jν_j}.
    pub fn beta(&self, j: usize, z: C) -> Result<C> {
        if self.reflection.is_zero() {
            self.portrait.endpoint_orientation(j)?;
            return Ok(C::new(0.0, 0.0));
        }
        let ((a, b), eps, x) = self.endpoint_interval(j)?;
        let nu_j = self.reflection.nu(x)?;
        let nu_f = |s: f64| C::new(self.reflection.nu(s).unwrap_or(f64::NAN), 0.0);
        let mut acc = C::new(0.0, 0.0);
        for &(p, q) in &self.sigma_b {
            if (p, q) != (a, b) {
                acc += cauchy(nu_f, p, q, z, self.tol)?;
            }
        }
        // near part of length ≤ 1 next to ξ_j carries the subtraction
        let (near, far) = if eps > 0 {
            let a1 = a.max(x - 1.0);
            ((a1, x), (a, a1))
        } else {
            let b1 = b.min(x + 1.0);
            ((x, b1), (b1, b))
        };
        if far.1 > far.0 {
            acc += cauchy(nu_f, far.0, far.1, z, self.tol)?;
        }
        let g = |s: f64| nu_f(s) - nu_j;
        let at_endpoint = (z - x).norm() == 0.0;
        acc += if at_endpoint {
            integrate(|s| g(s) / (s - x), near.0, near.1, self.tol)?
        } else {
            cauchy(g, near.0, near.1, z, self.tol)?
        };
        let logs = if eps > 0 {
            let a1 = near.0;
            if at_endpoint {
                -C::new((x - a1).ln(), 0.0)
            } else {
                ((x - z) / (a1 - z)).ln() - (z - x).ln()
            }
        } else {
            let b1 = near.1;
            if at_endpoint {
                C::new((b1 - x).ln(), PI)
            } else {
                ((b1 - z) / (x - z)).ln() + log_right_cut(z - x)
            }
        };
        let out = acc + nu_j * logs;
        if !out.is_finite() {
            self.check_domain()?;
            return Err(Error::NonFinite("beta_j"));
        }
        Ok(out)
    }

    /// (z − ξ_j)^{iε_jν_j} on the branch used by [`RHFactorization::beta`].
    pub fn endpoint_power(&self, j: usize, z: C) -> Result<C> {
        let eps = self.portrait.endpoint_orientation(j)?;
        let x = self.portrait.points[j];
        let nu_j = if self.reflection.is_zero() { 0.0 } else { self.reflection.nu(x)? };
        let l = if eps > 0 { (z - x).ln() } else { log_right_cut(z - x) };
        Ok((C::i() * eps as f64 * nu_j * l).exp())
    }

    /// T_j = Π_{Δ∖Λ}(ξ_j − η_n)/(ξ_j − η̄_n) · e^{iβ_j(ξ_j)}.
    pub fn t_j(&self, j: usize) -> Result<C> {
        let x = *self.portrait.points.get(j).ok_or(Error::Config(format!("no stationary point {j}")))?;
        let z = C::new(x, 0.0);
        Ok(self.blaschke(z)? * (C::i() * self.beta(j, z)?).exp())
    }

    /// c_n exp(−(1/iπ)∫_{Σ_b} ln(1 − |r|²)/(s − η_n) ds) for a single (c, η).
    pub fn modify(&self, c: C, eta: C) -> Result<C> {
        Ok(c * (-self.cauchy_log_gap(eta)? / (C::i() * PI)).exp())
    }

    /// Modified norming constants in the printed convention, c̃_n = c_n δ(η_n)^{−2}.
    pub fn modified_norming(&self) -> Result<Vec<C>> {
        self.spectrum.poles.iter().map(|p| self.modify(p.c, p.z)).collect()
    }

    /// Residue constants c_n T(η_n)² seen by the poles left in place after
    /// the conjugation M ↦ M T^{σ₃}.
    pub fn residue_constants(&self) -> Result<Vec<C>> {
        self.spectrum
            .poles
            .iter()
            .map(|p| {
                let t = self.t(p.z)?;
                Ok(p.c * t * t)
            })
            .collect()
    }

    /// |δ₊/δ₋ − (1 − |r(s₀)|²)| with boundary values from three-level
    /// Richardson extrapolation of δ(s₀ + iε)/δ(s₀ − iε), ε = h, h/2, h/4.
    pub fn delta_jump_residual(&self, s0: f64, h: f64) -> Result<f64> {
        if !self.portrait.in_sigma_b(s0) {
            return Err(Error::Config(format!("{s0} is not interior to Sigma_b")));
        }
        let ratio = |e: f64| -> Result<C> {
            Ok((self.log_delta(C::new(s0, e))? - self.log_delta(C::new(s0, -e))?).exp())
        };
        let (d1, d2, d4) = (ratio(h)?, ratio(h / 2.0)?, ratio(h / 4.0)?);
        let extrapolated = (8.0 * d4 - 6.0 * d2 + d1) / 3.0;
        let target = 1.0 - self.reflection.abs_sq(s0);
        Ok((extrapolated - target).norm())
    }
}

/// ln w with arg w ∈ (0, 2π): cut along the positive real axis.
fn log_right_cut(w: C) -> C {
    (-w).ln() + C::new(0.0, PI)
}

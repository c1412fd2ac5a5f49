//! Discrete spectrum: zeros of a(z) in ℂ⁺, their symmetry orbits and norming constants.

use super::jost::{jost_column, Column, Side};
use super::profile::InitialProfile;
use crate::error::{Error, Result};
use num_complex::Complex64 as C;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

/// One pole η_n ∈ ℂ⁺ with its norming constant c_n.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Eigenvalue {
    pub z: C,
    pub c: C,
    /// Index of the symmetry orbit the pole belongs to.
    pub orbit: usize,
}

/// All poles, closed under z ↦ −z̄ and z ↦ −1/z.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct DiscreteSpectrum {
    pub poles: Vec<Eigenvalue>,
}

/// The orbit {z, −z̄, 1/z̄, −1/z} of a seed with its constants.
///
/// The constants follow from the symmetries of the Jost functions:
/// c(−z̄) = c̄, c(1/z̄) = −c̄/z̄², c(−1/z) = −c/z².
pub fn orbit(z: C, c: C) -> Vec<(C, C)> {
    let mut out: Vec<(C, C)> = Vec::new();
    for (p, cp) in orbit_images(z, c) {
        if !out.iter().any(|(q, _)| (q - p).norm() < 1e-12 * p.norm().max(1.0)) {
            out.push((p, cp));
        }
    }
    out
}

fn orbit_images(z: C, c: C) -> [(C, C); 4] {
    let zb = z.conj();
    [(z, c), (-zb, c.conj()), (1.0 / zb, -c.conj() / (zb * zb)), (-1.0 / z, -c / (z * z))]
}

impl DiscreteSpectrum {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.poles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poles.is_empty()
    }

    pub fn orbit_count(&self) -> usize {
        self.poles.iter().map(|p| p.orbit + 1).max().unwrap_or(0)
    }

    /// Add the full orbit of a seed. Seeds on the unit circle require
    /// c = i s z with s real; seeds on the imaginary axis require c real.
    pub fn push_orbit(&mut self, z: C, c: C) -> Result<()> {
        if !(z.im > 0.0) {
            return Err(Error::Config(format!("pole {z} must lie in the upper half plane")));
        }
        if (z - C::i()).norm() < 1e-8 {
            return Err(Error::Config("z = i is the reconstruction point and cannot be a pole".into()));
        }
        let id = self.orbit_count();
        for (p, cp) in orbit(z, c) {
            if self.poles.iter().any(|q| (q.z - p).norm() < 1e-10) {
                return Err(Error::Config(format!("pole {p} already present")));
            }
            self.poles.push(Eigenvalue { z: p, c: cp, orbit: id });
        }
        let members: Vec<_> = self.poles.iter().filter(|p| p.orbit == id).copied().collect();
        // a self-paired member must carry a constant compatible with both maps
        for m in &members {
            for (p, cp) in orbit_images(m.z, m.c) {
                if let Some(q) = members.iter().find(|q| (q.z - p).norm() < 1e-10) {
                    if (q.c - cp).norm() > 1e-10 * cp.norm().max(1.0) {
                        self.poles.retain(|p| p.orbit != id);
                        return Err(Error::Config(format!(
                            "norming constant {c} is inconsistent with the symmetry orbit of {z}"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Maximal distance between the pole set and its images under z ↦ −z̄, z ↦ −1/z.
    pub fn closure_defect(&self) -> f64 {
        let mut worst = 0.0f64;
        for p in &self.poles {
            for img in [-p.z.conj(), -1.0 / p.z] {
                let d = self.poles.iter().map(|q| (q.z - img).norm()).fold(f64::INFINITY, f64::min);
                worst = worst.max(d);
            }
        }
        worst
    }
}

/// Rectangle [re0, re1] × [im0, im1] in the upper half plane.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SearchBox {
    pub re: (f64, f64),
    pub im: (f64, f64),
}

/// Evaluator of a(z) = det[Ψ̃₋,₁, Ψ̃₊,₂] at x₀ = 0 for z ∈ ℂ⁺.
pub fn a_upper(profile: &InitialProfile, z: C, tol: f64) -> Result<C> {
    let u = jost_column(profile, z, Side::Minus, Column::First, &[0.0], tol)?[0];
    let v = jost_column(profile, z, Side::Plus, Column::Second, &[0.0], tol)?[0];
    Ok(super::jost::wronskian(&u, &v))
}

fn winding(f: &dyn Fn(C) -> Result<C>, corners: [C; 4]) -> Result<i64> {
    let mut total = 0.0;
    for i in 0..4 {
        let (p, q) = (corners[i], corners[(i + 1) % 4]);
        total += edge_turn(f, p, q, f(p)?, f(q)?, 0)?;
    }
    Ok((total / (2.0 * PI)).round() as i64)
}

fn edge_turn(f: &dyn Fn(C) -> Result<C>, p: C, q: C, fp: C, fq: C, depth: u32) -> Result<f64> {
    let d = (fq / fp).arg();
    if (d.abs() < 0.3 && depth >= 3) || depth > 18 {
        if fp.norm() < 1e-14 || fq.norm() < 1e-14 {
            return Err(Error::NonSimpleZero(p));
        }
        return Ok(d);
    }
    let m = (p + q) / 2.0;
    let fm = f(m)?;
    Ok(edge_turn(f, p, m, fp, fm, depth + 1)? + edge_turn(f, m, q, fm, fq, depth + 1)?)
}

/// Derivative of an analytic function by the trapezoidal Cauchy formula.
fn cauchy_derivative(f: &dyn Fn(C) -> Result<C>, z: C, rho: f64) -> Result<C> {
    let n = 32;
    let mut s = C::new(0.0, 0.0);
    for j in 0..n {
        let w = C::from_polar(1.0, 2.0 * PI * j as f64 / n as f64);
        s += f(z + rho * w)? / w;
    }
    Ok(s / (n as f64 * rho))
}

fn newton(f: &dyn Fn(C) -> Result<C>, mut z: C, rho: f64) -> Result<C> {
    for _ in 0..30 {
        let fz = f(z)?;
        let d = cauchy_derivative(f, z, rho)?;
        let step = fz / d;
        z -= step;
        if step.norm() < 1e-13 * z.norm().max(1.0) {
            return Ok(z);
        }
    }
    Ok(z)
}

/// Zeros of a(z) inside the box by recursive argument-principle subdivision
/// followed by Newton refinement; each zero is completed to its symmetry orbit
/// and every member gets the constant c = b̃/a′ from the Jost connection
/// Ψ̃₋,₁(η) = b̃ e^{2p(x₀)} Ψ̃₊,₂(η).
pub fn discrete_spectrum_search(profile: &InitialProfile, bx: SearchBox, tol: f64) -> Result<DiscreteSpectrum> {
    if bx.im.0 < 0.05 || bx.re.1 <= bx.re.0 || bx.im.1 <= bx.im.0 {
        return Err(Error::Config("search box must be nondegenerate and stay 0.05 above the real axis".into()));
    }
    let f = |z: C| a_upper(profile, z, tol);
    let mut zeros: Vec<C> = Vec::new();
    let mut stack = vec![(bx.re, bx.im, 0u32)];
    while let Some((re, im, depth)) = stack.pop() {
        let corners = [C::new(re.0, im.0), C::new(re.1, im.0), C::new(re.1, im.1), C::new(re.0, im.1)];
        let w = winding(&f, corners)?;
        let diam = (re.1 - re.0).hypot(im.1 - im.0);
        if w == 0 {
            continue;
        }
        if w == 1 && diam < 0.2 {
            let rho = (0.25 * diam).min(0.02);
            let z = newton(&f, C::new((re.0 + re.1) / 2.0, (im.0 + im.1) / 2.0), rho)?;
            if !zeros.iter().any(|q| (q - z).norm() < 1e-8) {
                zeros.push(z);
            }
            continue;
        }
        if depth > 14 {
            return Err(Error::NonSimpleZero(corners[0]));
        }
        let (mr, mi) = ((re.0 + re.1) / 2.0, (im.0 + im.1) / 2.0);
        for (r, i) in [((re.0, mr), (im.0, mi)), ((mr, re.1), (im.0, mi)), ((re.0, mr), (mi, im.1)), ((mr, re.1), (mi, im.1))] {
            stack.push((r, i, depth + 1));
        }
    }
    // complete orbits; members found outside the box are added by symmetry
    let mut spectrum = DiscreteSpectrum::empty();
    let mut done: Vec<C> = Vec::new();
    for z in zeros {
        if done.iter().any(|q| (q - z).norm() < 1e-7) {
            continue;
        }
        let members = orbit(z, C::new(0.0, 0.0));
        let id = spectrum.orbit_count();
        for (p, _) in members {
            let refined = newton(&f, p, 0.01)?;
            let c = norming_constant(profile, refined, tol)?;
            spectrum.poles.push(Eigenvalue { z: refined, c, orbit: id });
            done.push(refined);
        }
    }
    Ok(spectrum)
}

/// c = b̃/a′(η) at a zero η of a.
pub fn norming_constant(profile: &InitialProfile, eta: C, tol: f64) -> Result<C> {
    let x0 = 0.0;
    let u = jost_column(profile, eta, Side::Minus, Column::First, &[x0], tol)?[0];
    let v = jost_column(profile, eta, Side::Plus, Column::Second, &[x0], tol)?[0];
    let k = (eta - 1.0 / eta) / 4.0;
    let y0 = profile.y_of_x(x0, tol)?;
    let e2p = (2.0 * C::i() * k * y0).exp();
    let i = if v[0].norm() > v[1].norm() { 0 } else { 1 };
    let btilde = u[i] / (e2p * v[i]);
    let f = |z: C| a_upper(profile, z, tol);
    let rho = 0.01f64.min(0.5 * eta.im);
    let da = cauchy_derivative(&f, eta, rho)?;
    if da.norm() < 1e-12 {
        return Err(Error::NonSimpleZero(eta));
    }
    Ok(btilde / da)
}

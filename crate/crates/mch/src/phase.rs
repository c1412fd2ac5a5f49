//! The phase function θ(z; ξ), its stationary points and the sign data that
//! drive the saddle-point analysis.
//!
//! With k = (z − 1/z)/4 the phase is θ = ξk − 2k/(4k² + 1). Everything that
//! follows (stationary points, curvatures, Im θ) is computed in the k variable.

use crate::error::{Error, Result};
use crate::specfun::poly_roots;
use num_complex::Complex64 as C;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::f64::consts::PI;

/// Closeness to 0 or ±i at which θ is treated as singular.
const POLE_EPS: f64 = 1e-12;
/// Distance to a region boundary below which ξ is rejected.
const BOUNDARY_EPS: f64 = 1e-12;

/// The four asymptotic regimes, named after their stationary point counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Region {
    /// ξ < −1/4: no real stationary points, Σ_b = ℝ.
    Left,
    /// −1/4 < ξ < 0: eight stationary points.
    Eight,
    /// 0 < ξ < 2: four stationary points.
    Four,
    /// ξ > 2: no real stationary points, Σ_b = ∅.
    Right,
}

impl Region {
    pub fn classify(xi: f64) -> Result<Region> {
        if !xi.is_finite() {
            return Err(Error::NonFinite("xi"));
        }
        for (b, detail) in [
            (-0.25, "double root kappa = 3/4: stationary points merge pairwise at ±(2 ± √3)"),
            (0.0, "the kappa equation degenerates to a linear one: points escape to 0 and ∞"),
            (2.0, "kappa = 0: stationary points merge at z = ±1"),
        ] {
            if (xi - b).abs() < BOUNDARY_EPS {
                return Err(Error::DegenerateXi { xi, detail: detail.into() });
            }
        }
        Ok(if xi < -0.25 {
            Region::Left
        } else if xi < 0.0 {
            Region::Eight
        } else if xi < 2.0 {
            Region::Four
        } else {
            Region::Right
        })
    }

    /// n(ξ): the number of real stationary points.
    pub fn count(self) -> usize {
        match self {
            Region::Left | Region::Right => 0,
            Region::Four => 4,
            Region::Eight => 8,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Region::Left => "LEFT",
            Region::Eight => "EIGHT",
            Region::Four => "FOUR",
            Region::Right => "RIGHT",
        }
    }
}

impl std::fmt::Display for Region {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

fn check_pole(z: C) -> Result<()> {
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(Error::NonFinite("z"));
    }
    let i = C::i();
    if z.norm() < POLE_EPS || (z - i).norm() < POLE_EPS || (z + i).norm() < POLE_EPS {
        return Err(Error::PhasePole(z));
    }
    Ok(())
}

/// k(z) = (z − 1/z)/4.
pub fn k_of_z(z: C) -> C {
    (z - 1.0 / z) / 4.0
}

/// θ(z; ξ) = (ξ/4)(z − 1/z) − 2z(z² − 1)/(z² + 1)².
pub fn theta(z: C, xi: f64) -> Result<C> {
    check_pole(z)?;
    let k = k_of_z(z);
    Ok(xi * k - 2.0 * k / (4.0 * k * k + 1.0))
}

/// t·θ(z; y/t) = y k − 2tk/(4k² + 1), finite at t = 0.
pub fn t_theta(z: C, y: f64, t: f64) -> Result<C> {
    check_pole(z)?;
    let k = k_of_z(z);
    Ok(y * k - 2.0 * t * k / (4.0 * k * k + 1.0))
}

/// (θ′, θ″) with respect to z.
pub fn theta_derivatives(z: C, xi: f64) -> Result<(C, C)> {
    check_pole(z)?;
    let k = k_of_z(z);
    let s = 4.0 * k * k + 1.0;
    let g1 = xi - 2.0 * (1.0 - 4.0 * k * k) / (s * s);
    let g2 = 16.0 * k * (3.0 - 4.0 * k * k) / (s * s * s);
    let k1 = (1.0 + 1.0 / (z * z)) / 4.0;
    let k2 = -1.0 / (2.0 * z * z * z);
    Ok((g1 * k1, g2 * k1 * k1 + g1 * k2))
}

/// Coefficients (leading first) of the degree-8 polynomial whose roots are the
/// zeros of θ′: ξ(z² + 1)⁴ − 8z²(8z² − (z² + 1)²).
pub fn stationary_polynomial(xi: f64) -> Vec<C> {
    // (z²+1)⁴ = z⁸ + 4z⁶ + 6z⁴ + 4z² + 1
    // 8z²(8z² − (z²+1)²) = −8z⁶ + 48z⁴ − 8z²
    let c = [xi, 0.0, 4.0 * xi + 8.0, 0.0, 6.0 * xi - 48.0, 0.0, 4.0 * xi + 8.0, 0.0, xi];
    c.iter().map(|&v| C::new(v, 0.0)).collect()
}

/// Stationary configuration for one value of ξ.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PhasePortrait {
    pub xi: f64,
    pub region: Region,
    /// Stationary points, descending.
    pub points: Vec<f64>,
    /// η_j = sign θ″(ξ_j).
    pub signs: Vec<i8>,
    /// θ″(ξ_j).
    pub curvatures: Vec<f64>,
}

/// Nonnegative roots κ of 16ξκ² + 8(ξ + 1)κ + (ξ − 2) = 0.
fn kappa_roots(xi: f64) -> Vec<f64> {
    let (a, b, c) = (16.0 * xi, 8.0 * (xi + 1.0), xi - 2.0);
    let disc = b * b - 4.0 * a * c;
    if disc < 0.0 {
        return Vec::new();
    }
    let sq = disc.sqrt();
    // cancellation-free pair
    let q = -0.5 * (b + b.signum() * sq);
    let mut out: Vec<f64> = [q / a, c / q].into_iter().filter(|k| *k >= 0.0 && k.is_finite()).collect();
    out.sort_by(|x, y| x.partial_cmp(y).unwrap());
    out
}

/// Stationary points from the κ quadratic, κ = k², z = 2k ± √(4k² + 1).
pub fn stationary_points(xi: f64) -> Result<PhasePortrait> {
    let region = Region::classify(xi)?;
    let mut points = Vec::new();
    if region.count() > 0 {
        for kappa in kappa_roots(xi) {
            let k = kappa.sqrt();
            let w = (4.0 * kappa + 1.0).sqrt();
            for kk in [k, -k] {
                // the two roots of z² − 4kz − 1, written without cancellation
                let big = 2.0 * kk + kk.signum() * w;
                let big = if kk == 0.0 { w } else { big };
                points.push(big);
                points.push(-1.0 / big);
            }
        }
    }
    points.sort_by(|a, b| b.partial_cmp(a).unwrap());
    debug_assert_eq!(points.len(), region.count());
    let mut signs = Vec::with_capacity(points.len());
    let mut curvatures = Vec::with_capacity(points.len());
    for &p in &points {
        let (_, d2) = theta_derivatives(C::new(p, 0.0), xi)?;
        curvatures.push(d2.re);
        signs.push(if d2.re > 0.0 { 1 } else { -1 });
    }
    Ok(PhasePortrait { xi, region, points, signs, curvatures })
}

/// Real zeros of θ′ from the degree-8 polynomial, descending. Independent of
/// [`stationary_points`]; used as its oracle.
pub fn stationary_points_oracle(xi: f64) -> Result<Vec<f64>> {
    let roots = poly_roots(&stationary_polynomial(xi))?;
    let mut real: Vec<f64> = roots
        .iter()
        .filter(|r| r.im.abs() < 1e-7 * r.norm().max(1.0))
        .map(|r| r.re)
        .collect();
    real.sort_by(|a, b| b.partial_cmp(a).unwrap());
    Ok(real)
}

impl PhasePortrait {
    /// The open intervals making up Σ_b(ξ), ascending. Infinite ends are ±∞.
    pub fn sigma_b(&self) -> Vec<(f64, f64)> {
        let p = &self.points;
        match self.region {
            Region::Right => Vec::new(),
            Region::Left => vec![(f64::NEG_INFINITY, f64::INFINITY)],
            Region::Four => vec![(p[3], p[2]), (p[1], p[0])],
            Region::Eight => vec![
                (f64::NEG_INFINITY, p[7]),
                (p[6], p[5]),
                (p[4], p[3]),
                (p[2], p[1]),
                (p[0], f64::INFINITY),
            ],
        }
    }

    /// Whether s lies in the open set Σ_b(ξ).
    pub fn in_sigma_b(&self, s: f64) -> bool {
        self.sigma_b().iter().any(|&(a, b)| s > a && s < b)
    }

    /// +1 if ξ_j is the right endpoint of a Σ_b interval, −1 if the left.
    pub fn endpoint_orientation(&self, j: usize) -> Result<i8> {
        let x = *self.points.get(j).ok_or(Error::Config(format!("no stationary point {j}")))?;
        for (a, b) in self.sigma_b() {
            if b == x {
                return Ok(1);
            }
            if a == x {
                return Ok(-1);
            }
        }
        Err(Error::NotAnEndpoint(x))
    }
}

/// A rectangular sampling grid [re0, re1] × [im0, im1] with spacing h.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FieldGrid {
    pub re: (f64, f64),
    pub im: (f64, f64),
    pub h: f64,
}

fn axis(lo: f64, hi: f64, h: f64) -> Vec<f64> {
    let n = ((hi - lo) / h + 1e-9).floor() as usize + 1;
    (0..n).map(|i| lo + i as f64 * h).collect()
}

/// Im θ sampled on a grid; nodes that coincide with 0 or ±i carry NaN.
pub fn im_theta_field(xi: f64, grid: FieldGrid) -> Result<Vec<(C, f64)>> {
    if !(grid.h > 0.0) || grid.re.1 < grid.re.0 || grid.im.1 < grid.im.0 {
        return Err(Error::Config("field grid must have h > 0 and ordered bounds".into()));
    }
    let xs = axis(grid.re.0, grid.re.1, grid.h);
    let ys = axis(grid.im.0, grid.im.1, grid.h);
    let mut out = Vec::with_capacity(xs.len() * ys.len());
    for &y in &ys {
        for &x in &xs {
            let z = C::new(x, y);
            let v = match theta(z, xi) {
                Ok(th) => if y == 0.0 { 0.0 } else { th.im },
                Err(Error::PhasePole(_)) => f64::NAN,
                Err(e) => return Err(e),
            };
            out.push((z, v));
        }
    }
    Ok(out)
}

/// H(|z|, φ) = (4cos2φ − 2F² + 12)/(F² + 2cos2φ − 2)², F = |z| + 1/|z|, so that
/// Im θ = F sinφ (ξ/4 − H).
pub fn h_function(modulus: f64, phi: f64) -> f64 {
    let f = modulus + 1.0 / modulus;
    let c = (2.0 * phi).cos();
    (4.0 * c - 2.0 * f * f + 12.0) / (f * f + 2.0 * c - 2.0).powi(2)
}

/// Outcome of one sampled inequality.
#[derive(Debug, Clone, Serialize)]
pub struct BoundCheck {
    pub name: String,
    pub samples: usize,
    /// Smallest value of (allowed side − observed side); ≥ 0 means satisfied.
    pub worst_margin: f64,
    /// Fitted constant for the τ-type inequalities.
    pub tau: Option<f64>,
    pub passed: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct DecayReport {
    pub xi: f64,
    pub region: Region,
    pub checks: Vec<BoundCheck>,
    pub passed: bool,
}

const SLACK: f64 = 1e-12;

fn sector_sample(rng: &mut ChaCha8Rng, quadrant: usize, angle: f64) -> C {
    // log-uniform modulus avoids clustering and reaches both 0 and ∞ ends
    let m = (rng.random_range(-3.0f64..3.0)).exp();
    let u = rng.random_range(1e-6..1.0) * angle;
    let phi = match quadrant {
        1 => u,
        2 => PI - u,
        3 => PI + u,
        _ => 2.0 * PI - u,
    };
    C::from_polar(m, phi)
}

fn finish(name: &str, samples: usize, worst: f64, tau: Option<f64>) -> BoundCheck {
    let passed = worst >= -SLACK && tau.is_none_or(|t| t > 0.0);
    BoundCheck { name: name.into(), samples, worst_margin: worst, tau, passed }
}

/// Sample the Im θ inequalities relevant to ξ on `samples` points per check.
///
/// For ξ > 2 or ξ < −1/4 the sector bounds and their linear-in-Im z corollary
/// are tested in the four sectors of opening `angle` at 0 and π. In saddle
/// regions the wedge bounds are tested in wedges of opening `angle` around
/// every stationary point, with τ(ξ) fitted by minimizing the ratio.
pub fn verify_decay_bounds(xi: f64, angle: f64, samples: usize, seed: u64) -> Result<DecayReport> {
    if !(angle > 0.0 && angle < PI / 4.0) {
        return Err(Error::Config("decay-bound angle must lie in (0, π/4)".into()));
    }
    let portrait = stationary_points(xi)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checks = Vec::new();
    match portrait.region {
        Region::Right | Region::Left => {
            let right = portrait.region == Region::Right;
            let (upper, lower, cor) = if right {
                ("theta-est1", "theta-est2", "cor-im (xi > 2)")
            } else {
                ("theta-est3", "theta-est4", "cor-im (xi < -1/4)")
            };
            for (name, quads, upper_half) in [(upper, [1, 2], true), (lower, [3, 4], false)] {
                let mut worst = f64::INFINITY;
                for i in 0..samples {
                    let z = sector_sample(&mut rng, quads[i % 2], angle);
                    let im = theta(z, xi)?.im;
                    let f = z.norm() + 1.0 / z.norm();
                    let c = (2.0 * z.arg()).cos();
                    let s = z.arg().sin().abs();
                    let bound = if right {
                        s * f * (xi / 4.0 - 1.0 / (c + 1.0))
                    } else {
                        s * f * (-xi / 4.0 - 1.0 / (4.0 * (c + 1.0)))
                    };
                    // Im θ ≥ bound, or Im θ ≤ −bound, depending on side and region
                    let lower_bound = upper_half == right;
                    let margin = if lower_bound { im - bound } else { -bound - im };
                    worst = worst.min(margin);
                }
                checks.push(finish(name, samples, worst, None));
            }
            // Im θ ≥ τ v in the upper sectors (ξ > 2); Im θ ≤ −τ v (ξ < −1/4)
            let mut tau = f64::INFINITY;
            for i in 0..samples {
                let quad = [1, 2, 3, 4][i % 4];
                let z = sector_sample(&mut rng, quad, angle);
                let ratio = theta(z, xi)?.im / z.im;
                tau = tau.min(if right { ratio } else { -ratio });
            }
            checks.push(finish(cor, samples, if tau > 0.0 { 0.0 } else { tau }, Some(tau)));
        }
        Region::Four | Region::Eight => {
            let pts = &portrait.points;
            for (j, &xj) in pts.iter().enumerate() {
                let mut gap = f64::INFINITY;
                if j > 0 {
                    gap = gap.min(pts[j - 1] - xj);
                }
                if j + 1 < pts.len() {
                    gap = gap.min(xj - pts[j + 1]);
                }
                let radius = 0.5 * gap.min(xj.abs());
                let sign = (portrait.curvatures[j] / xj).signum();
                let mut tau = f64::INFINITY;
                let mut wrong_sign = 0.0f64;
                for _ in 0..samples {
                    let rho = radius * rng.random_range(1e-4..1.0f64);
                    let side = if rng.random_bool(0.5) { 0.0 } else { PI };
                    let up = if rng.random_bool(0.5) { 1.0 } else { -1.0 };
                    let phi = side + up * rng.random_range(1e-6..1.0) * angle;
                    let z = C::new(xj, 0.0) + C::from_polar(rho, phi);
                    let im = theta(z, xi)?.im;
                    let m2 = z.norm_sqr();
                    let weight = z.im * (m2 - xj * xj) / (4.0 + m2);
                    let r = im / weight;
                    if r * sign <= 0.0 {
                        wrong_sign = wrong_sign.min(r * sign);
                    }
                    tau = tau.min(r.abs());
                }
                let name = format!(
                    "{} at xi_{} = {:.7}",
                    if sign < 0.0 { "est-theta1" } else { "est-theta2" },
                    j + 1,
                    xj
                );
                let worst = if wrong_sign < 0.0 { wrong_sign } else { 0.0 };
                checks.push(finish(&name, samples, worst, Some(tau)));
            }
        }
    }
    let passed = checks.iter().all(|c| c.passed);
    Ok(DecayReport { xi, region: portrait.region, checks, passed })
}

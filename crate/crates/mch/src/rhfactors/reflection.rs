//! Reflection coefficient r(s) on the real line, either tabulated from direct
//! scattering or given in closed form.

use crate::error::{Error, Result};
use crate::scattering::ScatteringData;
use crate::specfun::CubicSpline;
use num_complex::Complex64 as C;

/// Beyond |s| = SUPPORT (and inside |s| = 1/SUPPORT) the synthetic family is
/// below the smallest positive double.
const SUPPORT: f64 = 60.0;

#[derive(Debug, Clone, PartialEq)]
enum Kind {
    Zero,
    /// A·v(s)(1 + iγw)e^{−w²/4} with w = s − 1/s, v = (s + 1/s)/2.
    Synthetic { scale: f64, gamma: f64 },
    Table { re: CubicSpline, im: CubicSpline },
}

/// r(s) for real s.
#[derive(Debug, Clone, PartialEq)]
pub struct Reflection {
    kind: Kind,
}

impl Reflection {
    pub fn zero() -> Self {
        Reflection { kind: Kind::Zero }
    }

    /// Closed-form data with r(0) = 0, r(−s) = −conj r(s), r(1/s) = conj r(s),
    /// rapid decay at 0 and ∞, scaled so that sup|r| = `sup` < 1.
    pub fn synthetic(sup: f64, gamma: f64) -> Result<Self> {
        if !(sup > 0.0 && sup < 1.0) || !gamma.is_finite() {
            return Err(Error::Config(format!("synthetic reflection needs 0 < sup|r| < 1 (got {sup})")));
        }
        // |r| depends on w only: √(1 + w²/4)·√(1 + γ²w²)·e^{−w²/4}
        let peak = (0..=20_000)
            .map(|i| {
                let w = 20.0 * i as f64 / 20_000.0;
                ((1.0 + 0.25 * w * w) * (1.0 + gamma * gamma * w * w)).sqrt() * (-0.25 * w * w).exp()
            })
            .fold(0.0f64, f64::max);
        Ok(Reflection { kind: Kind::Synthetic { scale: sup / peak, gamma } })
    }

    /// Cubic interpolation of samples; r = 0 outside the sampled range.
    pub fn from_samples(z: &[f64], r: &[C]) -> Result<Self> {
        if z.len() != r.len() || z.len() < 4 {
            return Err(Error::Config("reflection table needs at least 4 matched samples".into()));
        }
        let mut idx: Vec<usize> = (0..z.len()).collect();
        idx.sort_by(|&a, &b| z[a].partial_cmp(&z[b]).unwrap_or(std::cmp::Ordering::Equal));
        let zs: Vec<f64> = idx.iter().map(|&i| z[i]).collect();
        let re: Vec<f64> = idx.iter().map(|&i| r[i].re).collect();
        let im: Vec<f64> = idx.iter().map(|&i| r[i].im).collect();
        if let Some(v) = r.iter().find(|v| v.norm() >= 1.0) {
            return Err(Error::NuDomain(v.norm_sqr()));
        }
        Ok(Reflection { kind: Kind::Table { re: CubicSpline::natural(&zs, &re)?, im: CubicSpline::natural(&zs, &im)? } })
    }

    pub fn from_scattering(data: &ScatteringData) -> Result<Self> {
        Self::from_samples(&data.z_grid, &data.r)
    }

    pub fn is_zero(&self) -> bool {
        matches!(self.kind, Kind::Zero)
    }

    /// Interval outside of which r vanishes identically.
    pub fn support(&self) -> Option<(f64, f64)> {
        match &self.kind {
            Kind::Zero => None,
            Kind::Synthetic { .. } => Some((-SUPPORT, SUPPORT)),
            Kind::Table { re, .. } => Some(re.domain()),
        }
    }

    pub fn eval(&self, s: f64) -> C {
        match &self.kind {
            Kind::Zero => C::new(0.0, 0.0),
            Kind::Synthetic { scale, gamma } => {
                if s == 0.0 || s.abs() > SUPPORT {
                    return C::new(0.0, 0.0);
                }
                let w = s - 1.0 / s;
                let v = 0.5 * (s + 1.0 / s);
                scale * v * C::new(1.0, gamma * w) * (-0.25 * w * w).exp()
            }
            Kind::Table { re, im } => C::new(re.eval(s), im.eval(s)),
        }
    }

    pub fn abs_sq(&self, s: f64) -> f64 {
        self.eval(s).norm_sqr()
    }

    /// ln(1 − |r(s)|²).
    pub fn log_gap(&self, s: f64) -> Result<f64> {
        let a = self.abs_sq(s);
        if a >= 1.0 {
            return Err(Error::NuDomain(a));
        }
        Ok((-a).ln_1p())
    }

    /// ν(s) = −ln(1 − |r(s)|²)/(2π).
    pub fn nu(&self, s: f64) -> Result<f64> {
        nu(self.abs_sq(s))
    }
}

/// ν = −ln(1 − |r|²)/(2π) for |r|² ∈ [0, 1).
pub fn nu(r_abs_sq: f64) -> Result<f64> {
    if !(0.0..1.0).contains(&r_abs_sq) {
        return Err(Error::NuDomain(r_abs_sq));
    }
    Ok(-(-r_abs_sq).ln_1p() / (2.0 * std::f64::consts::PI))
}
